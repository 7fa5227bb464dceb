"""Acceptance criteria 1-9; each test prints one PASS/FAIL line.

Run directly (``python3 tests/test_acceptance.py``) or through pytest, where
the lines are repeated in the terminal summary.
"""

import time

from conftest import ACCEPTANCE_LINES
from hypothesis import settings

from asreg import catalog, extremal
from asreg.bettienum import enumerate_types, group_by_series
from asreg.complexcheck import (check_homogeneous, check_minimal, compose_zero, euler_check,
                                graded_homology, shifts_mirror)
from asreg.diamond import complete
from asreg.formats import data_path, parse_algebra_file, parse_complex_file
from asreg.hilbert import (RationalSeries, normal_word_count, recognize_product_form,
                           series_expand)
from asreg.liealg import (betti_shifts, ce_slice_rank, enveloping_system, lie_betti, pbw_series,
                          socle_twist)
from asreg.ncpoly import format_word


def report(n, ok, what, detail=""):
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {what}" + ("" if ok else f" ({detail})")
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def _corpus():
    spec = parse_algebra_file(data_path("as5-extremal.alg"))
    return spec, complete(spec.relations, spec.order, spec.cap)


def test_criterion_1_completion():
    t = time.perf_counter()
    spec, s = _corpus()
    dt = time.perf_counter() - t
    leads = {format_word(r.lead, s.gens) for r in s.rules}
    ok = (leads == {"x^2*y", "x*y^3", "x*y*x*y*x*y^2", "x*y*x*y^2*x*y^2"}
          and s.degree_cap == 15 and s.ambiguities_checked > 0 and dt < 5)
    report(1, ok, f"4 rules, confluent-upto 15, {s.ambiguities_checked} ambiguities, {dt:.2f}s",
           f"leads {sorted(leads)}")


def test_criterion_2_hilbert():
    t = time.perf_counter()
    _, s = _corpus()
    h = normal_word_count(s, 15)
    hb = normal_word_count(s, 12, bigraded=True)
    dt = time.perf_counter() - t
    ref = series_expand(RationalSeries.product_form((1, 1, 2, 3, 5)), 15)
    refb = series_expand(RationalSeries.product_form(
        [(1, 0), (0, 1), (1, 1), (1, 2), (2, 3)]), 12)
    ok = h.same_as(ref) and hb.same_as(refb) and h.as_list()[:6] == [1, 2, 4, 7, 11, 17] and dt < 5
    report(2, ok, f"univariate to 15 and bigraded to 12 match the product forms, {dt:.2f}s",
           f"mismatch {h.first_mismatch(ref)} / {hb.first_mismatch(refb)}")


def test_criterion_3_resolution():
    t = time.perf_counter()
    spec, s = _corpus()
    c = parse_complex_file(data_path("as5-extremal.cplx"), spec.gens)
    cb = parse_complex_file(data_path("as5-extremal-bigraded.cplx"), spec.gens)
    homology = graded_homology(c, s, 15)
    checks = {
        "homogeneous": not check_homogeneous(c) and not check_homogeneous(cb),
        "compose-zero": not compose_zero(c, s),
        "minimal": check_minimal(c),
        "euler": euler_check(c, normal_word_count(s, 15))
        and euler_check(cb, normal_word_count(s, 12, bigraded=True)),
        "homology": homology.nonzero() == {(0, 0): 1},
        "twist": c.total_shifts(5) == [12] and shifts_mirror(c, 12),
    }
    dt = time.perf_counter() - t
    ok = all(checks.values()) and dt < 60
    report(3, ok, f"d1..d5 homogeneous, d*d = 0, minimal, Euler, homology k to 15, l = 12, {dt:.2f}s",
           f"failed {[k for k, v in checks.items() if not v]}")


def test_criterion_4_product_form():
    _, s = _corpus()
    form = recognize_product_form(normal_word_count(s, 15))
    report(4, form == (1, 1, 2, 3, 5), "product form 1,1,2,3,5", f"found {form}")


def test_criterion_5_lie_catalog():
    want_h = {"a": [5], "b": [4, 1], "c": [3, 2], "d": [3, 1, 1], "e": [2, 1, 2], "f": [2, 1, 1, 1]}
    bad = [k for k, h in want_h.items() if catalog.DIMENSION_FIVE[k]().hilbert_function() != h]
    shapes = {
        "heisenberg": [[0], [1, 1], [3, 3], [4]],
        "dim4-three-generators": [[0], [1, 1, 1], [2, 2, 3, 3], [4, 4, 4], [5]],
        "dim4-two-generators": [[0], [1, 1], [3, 4], [6, 6], [7]],
        "case-e": [[0], [1, 1], [4, 4, 4], [6, 6, 6], [9, 9], [10]],
        "case-f": [[0], [1, 1], [3, 5, 5], [6, 6, 8], [10, 10], [11]],
    }
    bad += [k for k, v in shapes.items() if betti_shifts(lie_betti(catalog.CATALOG[k]())) != v]
    g, h = catalog.hilbert41_g(), catalog.hilbert41_h()
    bg, bh = lie_betti(g), lie_betti(h)
    same = pbw_series(g) == pbw_series(h) == RationalSeries.product_form((1, 1, 1, 1, 2))
    pair = bg != bh and same and bg.get((2, 3)) == 2 and bg.get((3, 3)) == 2 and (2, 3) not in bh
    ranks = (ce_slice_rank(g, 3, 3), ce_slice_rank(h, 3, 3))
    ok = not bad and pair and ranks == (2, 4)
    report(5, ok, "Hilbert functions a)-f), Betti shapes, 4,1 pair with slice ranks 2 and 4",
           f"bad {bad}, pair {pair}, ranks {ranks}")


def test_criterion_6_pbw():
    bad = []
    for key in ("heisenberg", "case-f"):
        g = catalog.CATALOG[key]()
        if not normal_word_count(enveloping_system(g, 12), 12).same_as(
                series_expand(pbw_series(g), 12)):
            bad.append(key)
    report(6, not bad, "enveloping normal words match PBW to 12 (Heisenberg, case f)", f"{bad}")


def test_criterion_7_max_twist():
    twists = {k: socle_twist(f()) for k, f in catalog.DIMENSION_FIVE.items()}
    top = extremal.resolution().total_shifts(5)
    ok = max(twists.values()) <= 11 and twists["f"] == 11 and top == [12]
    report(7, ok, "socle twist <= 11 on dimension five (= 11 for f); extremal l = 12",
           f"{twists}, {top}")


def test_criterion_8_classification():
    t = time.perf_counter()
    types = enumerate_types(8, 30, 60)
    groups = group_by_series(types)
    dt = time.perf_counter() - t
    found = {(b.n, b.a, b.l) for b in types}
    want = {(3, (3, 5, 5), 11), (3, (4, 4, 4), 10), (3, (3, 4, 7), 12),
            (4, (4, 4, 4, 5), 10), (5, (4, 4, 4, 5, 5), 10)}
    ext = [grp for grp in groups if any(b.a == (3, 4, 7) for b in grp)]
    ok = (found == want and len(types) == 5 and len(groups) == 3
          and not enumerate_types(n_values=[2], l_max=30, cap=60)
          and ext and ext[0][0].series() == RationalSeries.product_form((1, 1, 2, 3, 5))
          and dt < 60)
    report(8, ok, f"five types, three series groups, n = 2 empty, {dt:.2f}s", f"found {found}")


def test_criterion_9_properties():
    import test_diamond
    import test_liealg
    import test_ncpoly

    prof = settings.default
    suites = [
        test_diamond.test_nf_strategy_independent,
        test_diamond.test_nf_idempotent,
        test_diamond.test_nf_linear,
        test_liealg.test_jacobi_preserved,
        test_liealg.test_betti_duality,
        test_liealg.test_delta_vanishes,
        test_ncpoly.test_order_multiplicative,
    ]
    failed = []
    for fn in suites:
        try:
            fn()
        except Exception as exc:  # report which suite broke
            failed.append(f"{fn.__name__}: {exc!r}"[:120])
    ok = prof.max_examples >= 200 and prof.derandomize and not failed
    report(9, ok, f"{len(suites)} property suites x {prof.max_examples} derandomized cases",
           "; ".join(failed))


if __name__ == "__main__":
    import sys

    sys.path.insert(0, str(__import__("pathlib").Path(__file__).parent))
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion"):
            try:
                fn()
            except AssertionError:
                pass
