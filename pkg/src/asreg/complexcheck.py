"""Checks on free complexes over a presented graded algebra.

Matrix convention: map ``p`` is stored with rows indexed by module ``p-1``
and columns by module ``p``.  For ``side="right"`` (the default) the complex
consists of right modules and column ``j`` is sent to ``sum_i e_i * D[i][j]``,
so an element ``e_j * w`` maps to ``sum_i e_i * (D[i][j] * w)`` and two maps
compose as the matrix product ``D_p * D_{p+1}``.  For ``side="left"`` the
entries multiply module elements from the right: ``w * e_j`` maps to
``sum_i (w * D[i][j]) * e_i`` and composition multiplies in reverse order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from .diamond import CapExceededError, InputError, RewriteSystem, normal_words
from .hilbert import Exp, HilbertFunction, _total, euler_polynomial, poly_mul
from .linalg import rank
from .ncpoly import GeneratorTable, NcPoly, parse_poly

Matrix = List[List[NcPoly]]


@dataclass
class FreeComplex:
    gens: GeneratorTable
    modules: List[List[Exp]]
    maps: List[Matrix]
    side: str = "right"

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise InputError(f"side must be 'left' or 'right', not {self.side!r}")
        if len(self.maps) != len(self.modules) - 1:
            raise InputError("a complex with m modules needs m - 1 maps")
        for p, m in enumerate(self.maps, start=1):
            rows, cols = len(self.modules[p - 1]), len(self.modules[p])
            if len(m) != rows or any(len(r) != cols for r in m):
                raise InputError(f"map {p} must be {rows} x {cols}")

    @classmethod
    def from_strings(cls, gens: GeneratorTable, modules, matrices, side: str = "right"):
        maps = [[[parse_poly(str(e), gens) for e in row] for row in m] for m in matrices]
        return cls(gens, [list(s) for s in modules], maps, side)

    @property
    def length(self) -> int:
        return len(self.modules) - 1

    def total_shifts(self, p: int) -> List[int]:
        return [_total(a) for a in self.modules[p]]

    def entry(self, p: int, i: int, j: int) -> NcPoly:
        return self.maps[p - 1][i][j]

    def with_entry(self, p: int, i: int, j: int, value: NcPoly) -> "FreeComplex":
        maps = [[list(row) for row in m] for m in self.maps]
        maps[p - 1][i][j] = value
        return FreeComplex(self.gens, [list(s) for s in self.modules], maps, self.side)

    def truncated(self, top: int) -> "FreeComplex":
        """Keep modules ``0..top``."""
        return FreeComplex(self.gens, [list(s) for s in self.modules[:top + 1]],
                           [[list(r) for r in m] for m in self.maps[:top]], self.side)


@dataclass(frozen=True)
class Violation:
    p: int
    row: int
    col: int
    expected: Exp
    found: tuple


@dataclass
class HomologyTable:
    table: Dict[Tuple[int, int], int]
    cap: int

    def nonzero(self) -> Dict[Tuple[int, int], int]:
        return {k: v for k, v in self.table.items() if v}

    def is_residue_field(self) -> bool:
        return self.nonzero() == {(0, 0): 1}


def check_homogeneous(c: FreeComplex) -> List[Violation]:
    """Entries of map ``p`` at ``(i, j)`` must have degree ``shift_p[j] - shift_{p-1}[i]``."""
    out = []
    for p, m in enumerate(c.maps, start=1):
        src, tgt = c.modules[p], c.modules[p - 1]
        for i, row in enumerate(m):
            for j, e in enumerate(row):
                if not e:
                    continue
                a, b = src[j], tgt[i]
                if isinstance(a, int):
                    want = a - b
                    found = tuple(sorted(e.degrees()))
                else:
                    want = (a[0] - b[0], a[1] - b[1])
                    found = tuple(sorted(e.bidegrees()))
                if found != (want,):
                    out.append(Violation(p, i, j, want, found))
    return out


def _product(c: FreeComplex, p: int) -> List[List[NcPoly]]:
    d, e = c.maps[p - 1], c.maps[p]
    rows, mid, cols = len(d), len(e), len(e[0]) if e else 0
    out = []
    for i in range(rows):
        out_row = []
        for k in range(cols):
            acc = NcPoly.zero(c.gens)
            for j in range(mid):
                if d[i][j] and e[j][k]:
                    acc = acc + (d[i][j] * e[j][k] if c.side == "right" else e[j][k] * d[i][j])
            out_row.append(acc)
        out.append(out_row)
    return out


def compose_zero(c: FreeComplex, s: RewriteSystem) -> List[Tuple[int, int, int, NcPoly]]:
    """Entries ``(p, i, k, normal form)`` of ``D_p * D_{p+1}`` that do not vanish."""
    bad = []
    for p in range(1, c.length):
        for i, row in enumerate(_product(c, p)):
            for k, v in enumerate(row):
                if v:
                    nf = s.reduce(v)
                    if nf:
                        bad.append((p, i, k, nf))
    return bad


def check_minimal(c: FreeComplex) -> bool:
    return all(not e.constant_term() for m in c.maps for row in m for e in row)


class _Slices:
    """Normal-word bases of the degree slices of each free module."""

    def __init__(self, c: FreeComplex, s: RewriteSystem, cap: int):
        self.c = c
        self.s = s
        self.words: Dict[int, List] = {}
        self.cap = cap

    def normal(self, d: int):
        if d not in self.words:
            self.words[d] = normal_words(self.s, d) if d >= 0 else []
        return self.words[d]

    def basis(self, p: int, j: int):
        out = []
        for col, a in enumerate(self.c.total_shifts(p)):
            for w in self.normal(j - a):
                out.append((col, w))
        return out


def _map_rows(c: FreeComplex, s: RewriteSystem, p: int, domain, codomain_index):
    m = c.maps[p - 1]
    rows = []
    for col, w in domain:
        vec: Dict[int, Fraction] = {}
        for i in range(len(m)):
            e = m[i][col]
            if not e:
                continue
            for ew, ec in e.terms.items():
                word = ew + w if c.side == "right" else w + ew
                for nw, nc in s.word_nf(word).items():
                    k = codomain_index[(i, nw)]
                    v = vec.get(k, 0) + ec * nc
                    if v:
                        vec[k] = v
                    else:
                        vec.pop(k, None)
        rows.append(vec)
    return rows


def graded_homology(c: FreeComplex, s: RewriteSystem, cap: int) -> HomologyTable:
    """Homology dimensions ``(p, j)`` for internal degrees ``j <= cap``, by exact rank."""
    if cap > s.degree_cap:
        raise CapExceededError(f"cap {cap} exceeds certified cap {s.degree_cap}")
    if c.gens != s.gens:
        raise InputError("complex and rewrite system use different generators")
    if check_homogeneous(c):
        raise InputError("complex is not homogeneous")
    slices = _Slices(c, s, cap)
    table = {}
    for j in range(cap + 1):
        bases = [slices.basis(p, j) for p in range(c.length + 1)]
        ranks = [0] * (c.length + 2)
        for p in range(1, c.length + 1):
            if not bases[p] or not bases[p - 1]:
                continue
            index = {b: k for k, b in enumerate(bases[p - 1])}
            ranks[p] = rank(_map_rows(c, s, p, bases[p], index))
        for p in range(c.length + 1):
            h = len(bases[p]) - ranks[p] - ranks[p + 1]
            if h < 0:
                raise RuntimeError(f"negative homology at {(p, j)}: maps do not compose to zero")
            table[(p, j)] = h
    return HomologyTable(table, cap)


def euler_check(c: FreeComplex, h: HilbertFunction) -> bool:
    """``sum_p (-1)^p sum_a t^a * h(t) == 1`` up to the cap of ``h``."""
    if h.bigraded:
        modules = c.modules
    else:
        modules = [[_total(a) for a in shifts] for shifts in c.modules]
    q = euler_polynomial(modules)
    prod = poly_mul(q, dict(h.coefficients))
    zero = (0, 0) if h.bigraded else 0
    for e, v in prod.items():
        if _total(e) <= h.cap and v != (1 if e == zero else 0):
            return False
    return prod.get(zero, 0) == 1


def tor_with_field(c: FreeComplex) -> Dict[Tuple[int, int], int]:
    """Homology of ``k (x) C``: only constant entries survive, so each degree splits off."""
    table: Dict[Tuple[int, int], int] = {}
    degrees = sorted({d for p in range(c.length + 1) for d in c.total_shifts(p)})
    for j in degrees:
        cols = [[k for k, a in enumerate(c.total_shifts(p)) if a == j] for p in range(c.length + 1)]
        ranks = [0] * (c.length + 2)
        for p in range(1, c.length + 1):
            m = c.maps[p - 1]
            rows = []
            for col in cols[p]:
                rows.append({i: m[i][col].constant_term() for i in cols[p - 1]
                             if m[i][col].constant_term()})
            ranks[p] = rank(rows)
        for p in range(c.length + 1):
            h = len(cols[p]) - ranks[p] - ranks[p + 1]
            if h:
                table[(p, j)] = h
    return table


def shifts_mirror(c: FreeComplex, l: int) -> bool:
    """Step ``p`` shifts equal ``{l - a}`` over the step ``length - p`` shifts."""
    n = c.length
    for p in range(n + 1):
        mine = sorted(c.total_shifts(p))
        theirs = sorted(l - a for a in c.total_shifts(n - p))
        if mine != theirs:
            return False
    return True
