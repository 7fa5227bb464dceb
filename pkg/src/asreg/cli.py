"""Command-line front end and the ``verify-paper`` acceptance driver.

Exit codes: 0 when every check passes, 1 when a check fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import hashlib
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from . import catalog
from .bettienum import enumerate_types, group_by_series
from .complexcheck import (FreeComplex, check_homogeneous, check_minimal, compose_zero,
                           euler_check, graded_homology, shifts_mirror, tor_with_field)
from .diamond import CapExceededError, InputError, RewriteSystem, complete
from .formats import (AlgebraSpec, ParseError, data_path, parse_algebra, parse_complex,
                      parse_lie, parse_order_spec)
from .hilbert import (RationalSeries, normal_word_count, recognize_product_form, series_expand)
from .liealg import (GradedLieAlgebra, LieInputError, betti_shifts, ce_complex, ce_slice_rank,
                     check_jacobi, delta_form, enveloping_system, lie_betti, pbw_series,
                     socle_twist)
from .ncpoly import StructureError, UnsupportedOrderError, format_word, parse_poly

INPUT_ERRORS = (ParseError, InputError, StructureError, UnsupportedOrderError, LieInputError,
                CapExceededError, OSError, UnicodeDecodeError)


@dataclass
class RunReport:
    command: str
    inputs: Dict[str, str] = field(default_factory=dict)
    caps: Dict[str, int] = field(default_factory=dict)
    body: List[str] = field(default_factory=list)
    checks: List[Tuple[str, bool, str]] = field(default_factory=list)
    tsv: List[Sequence] = field(default_factory=list)

    def add_input(self, name: str, text: str):
        self.inputs[name] = hashlib.sha256(text.encode("utf-8")).hexdigest()[:16]

    def check(self, name: str, ok: bool, detail: str = "") -> bool:
        self.checks.append((name, bool(ok), detail))
        return bool(ok)

    @property
    def failures(self) -> List[Tuple[str, bool, str]]:
        return [c for c in self.checks if not c[1]]

    @property
    def exit_code(self) -> int:
        return 1 if self.failures else 0

    def tsv_text(self) -> str:
        return "".join("\t".join(str(v) for v in row) + "\n" for row in self.tsv)

    def render(self) -> str:
        lines = [f"# command {self.command}"]
        lines += [f"# input {k} " + (v if v == "catalog" else f"sha256:{v}")
                  for k, v in self.inputs.items()]
        lines += [f"# certified-cap {k} {v}" for k, v in self.caps.items()]
        lines += self.body
        for name, ok, detail in self.checks:
            lines.append(f"{'PASS' if ok else 'FAIL'}\t{name}" + (f"\t{detail}" if detail and not ok else ""))
        if self.checks:
            n_fail = len(self.failures)
            lines.append(f"summary: {len(self.checks) - n_fail} PASS {n_fail} FAIL")
        return "\n".join(lines) + "\n"


# ---------- loading ----------

def _read_text(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def load_algebra(path: str, report: RunReport, order: Optional[str] = None) -> AlgebraSpec:
    text = _read_text(path)
    report.add_input(Path(path).name, text)
    spec = parse_algebra(text, path)
    if order:
        spec.order = parse_order_spec(order, spec.gens)
    return spec


def _cap(args, spec_cap: Optional[int]) -> int:
    cap = args.cap if args.cap is not None else spec_cap
    if cap is None:
        raise InputError("no degree cap: pass --cap or add a 'cap' line")
    if cap < 0:
        raise InputError("cap must be non-negative")
    return cap


def _complete(spec: AlgebraSpec, cap: int) -> RewriteSystem:
    if not spec.relations:
        return complete([], spec.order, cap)
    return complete(spec.relations, spec.order, cap)


def load_lie(source: str, report: RunReport) -> Tuple[GradedLieAlgebra, Optional[int]]:
    if Path(source).is_file():
        text = _read_text(source)
        report.add_input(Path(source).name, text)
        spec = parse_lie(text, source)
        return spec.build(), spec.cap
    if source in catalog.CATALOG:
        report.inputs[source] = "catalog"
        return catalog.CATALOG[source](), None
    raise InputError(f"{source!r} is neither a file nor a catalog name "
                     f"({', '.join(sorted(catalog.CATALOG))})")


# ---------- commands ----------

def cmd_complete(args) -> RunReport:
    report = RunReport("complete")
    spec = load_algebra(args.algebra, report, args.order)
    cap = _cap(args, spec.cap)
    s = _complete(spec, cap)
    report.caps["completion"] = cap
    for r in s.rules:
        lead = format_word(r.lead, s.gens)
        report.body.append(f"{lead} -> {r.tail.to_str(s.order)}")
        report.tsv.append((lead, r.tail.to_str(s.order)))
    report.body.append(f"confluent-upto {s.degree_cap} ambiguities {s.ambiguities_checked}")
    return report


def cmd_hilbert(args) -> RunReport:
    report = RunReport("hilbert")
    spec = load_algebra(args.algebra, report, args.order)
    cap = _cap(args, spec.cap)
    s = _complete(spec, cap)
    report.caps["hilbert"] = cap
    h = normal_word_count(s, cap, bigraded=args.bigraded)
    if args.bigraded:
        keys = sorted(h.coefficients, key=lambda e: (e[0] + e[1], e))
        rows = [(a, b, h[(a, b)]) for a, b in keys]
    else:
        rows = [(d, c) for d, c in enumerate(h.as_list())]
    report.tsv = rows
    report.body += ["\t".join(map(str, r)) for r in rows]
    form = recognize_product_form(h.as_list())
    report.body.append("product-form: " + (",".join(map(str, form)) if form is not None
                                           else "none-within-cap"))
    return report


def check_complex_report(report: RunReport, spec: AlgebraSpec, c: FreeComplex, cap: int,
                         s: Optional[RewriteSystem] = None, label: str = "") -> None:
    """The per-check block shared by ``check-complex`` and ``verify-paper``."""
    s = s or _complete(spec, cap)
    pre = f"{label} " if label else ""
    bad = check_homogeneous(c)
    report.check(pre + "homogeneous", not bad,
                 f"map {bad[0].p} slot ({bad[0].row + 1},{bad[0].col + 1}) expected degree "
                 f"{bad[0].expected} found {bad[0].found}" if bad else "")
    nz = compose_zero(c, s)
    report.check(pre + "compose-zero", not nz,
                 f"d{nz[0][0]}*d{nz[0][0] + 1} slot ({nz[0][1] + 1},{nz[0][2] + 1}) = {nz[0][3]}"
                 if nz else "")
    report.check(pre + "minimal", check_minimal(c))
    bigraded = bool(c.modules[0]) and not isinstance(c.modules[0][0], int)
    h = normal_word_count(s, cap, bigraded=bigraded)
    report.check(pre + "euler", euler_check(c, h))
    if bad or nz:
        report.check(pre + "homology", False, "skipped: inhomogeneous or d*d != 0")
        return
    try:
        table = graded_homology(c, s, cap)
    except RuntimeError as exc:
        report.check(pre + "homology", False, str(exc))
        return
    extra = {k: v for k, v in table.nonzero().items() if k != (0, 0)}
    first = min(extra) if extra else None
    report.check(pre + f"homology-is-k-upto {cap}", table.is_residue_field(),
                 f"H at (p,j)={first} has dimension {extra[first]}" if first else "")
    if not label:
        report.tsv = [("p", "j", "dim")] + [(p, j, v) for (p, j), v in sorted(table.nonzero().items())]
        report.body += ["\t".join(map(str, r)) for r in report.tsv]


def cmd_check_complex(args) -> RunReport:
    report = RunReport("check-complex")
    spec = load_algebra(args.algebra, report, args.order)
    text = _read_text(args.complex)
    report.add_input(Path(args.complex).name, text)
    c = parse_complex(text, spec.gens, args.complex)
    cap = _cap(args, spec.cap)
    report.caps["homology"] = cap
    check_complex_report(report, spec, c, cap)
    l = c.total_shifts(c.length)
    if len(l) == 1:
        report.body.insert(0, f"top-twist {l[0]}")
        report.check("gorenstein-mirror", shifts_mirror(c, l[0]))
    return report


def cmd_lie(args) -> RunReport:
    report = RunReport(f"lie {args.action}")
    g, file_cap = load_lie(args.source, report)
    report.body.append("hilbert-function " + ",".join(map(str, g.hilbert_function())))
    if args.action == "betti":
        table = lie_betti(g)
        report.tsv = [("p", "j", "b")] + [(p, j, b) for (p, j), b in sorted(table.items())]
        report.body += ["\t".join(map(str, r)) for r in report.tsv]
        report.body.append(f"socle-twist {socle_twist(g)}")
    elif args.action == "pbw":
        cap = args.cap if args.cap is not None else (file_cap or 12)
        coeffs = series_expand(pbw_series(g), cap).as_list()
        report.caps["pbw"] = cap
        report.tsv = [("degree", "dim")] + list(enumerate(coeffs))
        report.body.append("pbw-factors " + ",".join(map(str, sorted(g.degrees))))
        report.body += ["\t".join(map(str, r)) for r in report.tsv]
    elif args.action == "delta":
        form = delta_form(g)
        report.body.append(f"delta {form}")
        report.check("delta-vanishes", not form, str(form) if form else "")
    else:
        cap = args.cap if args.cap is not None else (file_cap or 6)
        report.caps["ce"] = cap
        # the commutation relations reach degree twice the top basis degree
        s = enveloping_system(g, max(cap, 2 * max(g.degrees, default=0)))
        betti = lie_betti(g)
        bad = check_jacobi(g)
        report.check("jacobi", bad is None, f"triple {bad}" if bad else "")
        for side in ("left", "right"):
            c = ce_complex(g, side, s.gens)
            nz = compose_zero(c, s)
            report.check(f"ce-{side} compose-zero", not nz,
                         f"slot {nz[0][:3]} = {nz[0][3]}" if nz else "")
            tor = tor_with_field(c)
            report.check(f"ce-{side} tor-matches-betti", tor == betti)
            if not nz:
                h = graded_homology(c, s, cap)
                report.check(f"ce-{side} homology-is-k-upto {cap}", h.is_residue_field())
        report.tsv = [("p", "j", "b")] + [(p, j, b) for (p, j), b in sorted(betti.items())]
        report.body += ["\t".join(map(str, r)) for r in report.tsv]
    return report


def cmd_enumerate(args) -> RunReport:
    report = RunReport("enumerate")
    cap = args.cap if args.cap is not None else 60
    report.caps["positivity"] = cap
    types = enumerate_types(args.nmax, args.lmax, cap)
    groups = group_by_series(types)
    gid = {b: k for k, grp in enumerate(groups, start=1) for b in grp}
    report.body.append(f"# searched 1<=n<={args.nmax} 5<=l<={args.lmax} "
                       f"types {len(types)} series-groups {len(groups)}")
    report.tsv = [("n", "a", "l", "series-group", "existence")]
    report.tsv += [(b.n, ",".join(map(str, b.a)), b.l, gid[b], b.existence) for b in types]
    report.body += ["\t".join(map(str, r)) for r in report.tsv]
    return report


# ---------- verify-paper ----------

EXTREMAL_LEADS = {"x^2*y", "x*y^3", "x*y*x*y*x*y^2", "x*y*x*y^2*x*y^2"}
EXPECTED_TYPES = [(3, (4, 4, 4), 10), (3, (3, 5, 5), 11), (3, (3, 4, 7), 12),
                  (4, (4, 4, 4, 5), 10), (5, (4, 4, 4, 5, 5), 10)]
LIE_HILBERT = {"a": [5], "b": [4, 1], "c": [3, 2], "d": [3, 1, 1], "e": [2, 1, 2],
               "f": [2, 1, 1, 1]}
LIE_SHAPES = {
    "heisenberg": [[0], [1, 1], [3, 3], [4]],
    "dim4-three-generators": [[0], [1, 1, 1], [2, 2, 3, 3], [4, 4, 4], [5]],
    "dim4-two-generators": [[0], [1, 1], [3, 4], [6, 6], [7]],
    "case-e": [[0], [1, 1], [4, 4, 4], [6, 6, 6], [9, 9], [10]],
    "case-f": [[0], [1, 1], [3, 5, 5], [6, 6, 8], [10, 10], [11]],
}
CORRUPTIONS = ("d5", "drop-r-term")


def _mismatch(h, ref) -> str:
    e = h.first_mismatch(ref)
    return "" if e is None else f"first mismatch at degree {e}: {h[e]} vs {ref[e]}"


def verify_paper(corrupt: Optional[str] = None) -> RunReport:
    """Run the acceptance checks on the shipped corpus.

    ``corrupt`` injects a negative control: ``"d5"`` replaces the last map by
    ``(x, x)^T`` and ``"drop-r-term"`` removes ``x*y*x*y`` from ``R``.
    """
    report = RunReport("verify-paper" + (f" --corrupt {corrupt}" if corrupt else ""))
    started = time.perf_counter()
    alg_text = data_path("as5-extremal.alg").read_text(encoding="utf-8")
    if corrupt == "drop-r-term":
        alg_text = alg_text.replace(" + x*y*x*y)", ")")
    report.add_input("as5-extremal.alg", alg_text)
    spec = parse_algebra(alg_text, "as5-extremal.alg")
    cap = spec.cap or 15
    report.caps["completion"] = cap

    # 1. completion
    s = _complete(spec, cap)
    leads = {format_word(r.lead, s.gens) for r in s.rules}
    report.check("1 completion: 4 rules with the expected leads", leads == EXTREMAL_LEADS,
                 f"{len(leads)} rules, unexpected {sorted(leads - EXTREMAL_LEADS)[:3]}, "
                 f"missing {sorted(EXTREMAL_LEADS - leads)}")
    report.body.append(f"# confluent-upto {s.degree_cap} ambiguities {s.ambiguities_checked}")

    # 2. Hilbert series, both gradings
    h = normal_word_count(s, cap)
    ref = series_expand(RationalSeries.product_form((1, 1, 2, 3, 5)), cap)
    report.check(f"2 hilbert: 1/((1-t)^2(1-t^2)(1-t^3)(1-t^5)) to degree {cap}",
                 h.same_as(ref), _mismatch(h, ref))
    hb = normal_word_count(s, 12, bigraded=True)
    refb = series_expand(RationalSeries.product_form(
        [(1, 0), (0, 1), (1, 1), (1, 2), (2, 3)]), 12)
    report.check("2 hilbert: bigraded product form to total degree 12", hb.same_as(refb),
                 _mismatch(hb, refb))

    # 3. resolution
    for name in ("as5-extremal.cplx", "as5-extremal-bigraded.cplx"):
        text = data_path(name).read_text(encoding="utf-8")
        c = parse_complex(text, spec.gens, name)
        if corrupt == "d5":
            x = parse_poly("x", spec.gens)
            c = c.with_entry(5, 1, 0, x)
            text += "# corrupted: d5 = (x, x)^T\n"
        report.add_input(name, text)
        label = "3 resolution" + (" (bigraded)" if "bigraded" in name else "")
        check_complex_report(report, spec, c, cap, s, label)
        top = c.total_shifts(c.length)
        report.check(f"{label} top twist 12 and mirror shifts",
                     top == [12] and shifts_mirror(c, 12), f"top shifts {top}")

    # 4. product form
    form = recognize_product_form(h.as_list())
    report.check("4 product form 1,1,2,3,5", form == (1, 1, 2, 3, 5), f"found {form}")

    # 5. Lie catalog
    for key, want in LIE_HILBERT.items():
        got = catalog.DIMENSION_FIVE[key]().hilbert_function()
        report.check(f"5 lie hilbert function {key})", got == want, f"found {got}")
    for key, want in LIE_SHAPES.items():
        got = betti_shifts(lie_betti(catalog.CATALOG[key]()))
        report.check(f"5 lie betti shape {key}", got == want, f"found {got}")
    g, hh = catalog.hilbert41_g(), catalog.hilbert41_h()
    bg, bh = lie_betti(g), lie_betti(hh)
    target = RationalSeries.product_form((1, 1, 1, 1, 2))
    report.check("5 lie 4,1 pair: distinct betti tables, same pbw series",
                 bg != bh and pbw_series(g) == target and pbw_series(hh) == target)
    report.check("5 lie 4,1 pair: extra (2,3),(3,3) entries of dimension 2 for g only",
                 bg.get((2, 3)) == 2 and bg.get((3, 3)) == 2 and (2, 3) not in bh
                 and (3, 3) not in bh)
    rg, rh = ce_slice_rank(g, 3, 3), ce_slice_rank(hh, 3, 3)
    report.check("5 lie 4,1 pair: middle slice ranks 2 and 4", (rg, rh) == (2, 4),
                 f"found {(rg, rh)}")

    # 6. PBW cross-check
    for key in ("heisenberg", "case-f"):
        lie = catalog.CATALOG[key]()
        es = enveloping_system(lie, 12)
        got = normal_word_count(es, 12)
        want = series_expand(pbw_series(lie), 12)
        report.check(f"6 pbw cross-check {key} to degree 12", got.same_as(want),
                     _mismatch(got, want))

    # 7. max twist
    twists = {k: socle_twist(f()) for k, f in catalog.DIMENSION_FIVE.items()}
    report.check("7 socle twist <= 11 on dimension five, equality for f",
                 max(twists.values()) <= 11 and twists["f"] == 11, f"twists {twists}")
    report.check("7 extremal twist 12 exceeds 11", top == [12] and top[0] > 11)

    # 8. classification
    types = enumerate_types(8, 30, 60)
    found = [(b.n, b.a, b.l) for b in types]
    report.check("8 classification: exactly five types", found == EXPECTED_TYPES, f"found {found}")
    report.check("8 classification: n = 2 yields nothing",
                 not enumerate_types(n_values=[2], l_max=30, cap=60))
    groups = group_by_series(types)
    ext = next((grp for grp in groups if any(b.a == (3, 4, 7) for b in grp)), None)
    same = ext is not None and ext[0].series() == RationalSeries.product_form((1, 1, 2, 3, 5))
    report.check("8 classification: three series groups, (3,4,7) matches the algebra",
                 len(groups) == 3 and same, f"{len(groups)} groups")
    report.caps["classification"] = 60
    report.body.append(f"# elapsed {time.perf_counter() - started:.1f}s")
    return report


def cmd_verify(args) -> RunReport:
    return verify_paper(args.corrupt)


# ---------- entry point ----------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=None, help="degree cap")
    common.add_argument("--tsv", metavar="PATH", help="also write the TSV payload here")
    alg = argparse.ArgumentParser(add_help=False)
    alg.add_argument("--order", help="monomial order, e.g. 'deglex:x>y'")

    p = argparse.ArgumentParser(prog="asreg", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("complete", parents=[common, alg], help="complete a presentation")
    c.add_argument("algebra")
    c.set_defaults(func=cmd_complete)

    h = sub.add_parser("hilbert", parents=[common, alg], help="count normal words")
    h.add_argument("algebra")
    h.add_argument("--bigraded", action="store_true")
    h.set_defaults(func=cmd_hilbert)

    k = sub.add_parser("check-complex", parents=[common, alg], help="verify a free complex")
    k.add_argument("algebra")
    k.add_argument("complex")
    k.set_defaults(func=cmd_check_complex)

    lie = sub.add_parser("lie", parents=[common], help="graded Lie algebra invariants")
    lie.add_argument("action", choices=["betti", "pbw", "delta", "ce"])
    lie.add_argument("source", help=".lie file or catalog name")
    lie.set_defaults(func=cmd_lie)

    e = sub.add_parser("enumerate", parents=[common], help="admissible resolution types")
    e.add_argument("--nmax", type=int, default=8)
    e.add_argument("--lmax", type=int, default=30)
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify-paper", parents=[common], help="run the acceptance checks")
    v.add_argument("--corrupt", choices=CORRUPTIONS, help="inject a negative control")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        report = args.func(args)
    except INPUT_ERRORS as exc:
        sys.stderr.write(f"asreg: error: {exc}\n")
        return 2
    sys.stdout.write(report.render())
    if args.tsv:
        Path(args.tsv).write_text(report.tsv_text(), encoding="utf-8")
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
