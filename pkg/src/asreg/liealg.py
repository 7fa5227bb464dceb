"""Finite-dimensional positively graded Lie algebras.

Quotients of free Lie algebras are computed inside the free associative
algebra: every Lie element is represented by its commutator expansion, a
``{word: Fraction}`` dict, and linear algebra happens degree by degree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .complexcheck import FreeComplex
from .diamond import RewriteSystem, complete
from .hilbert import RationalSeries
from .linalg import Echelon, rank
from .ncpoly import GeneratorTable, MonomialOrder, NcPoly, StructureError, Word

Vec = Dict[int, Fraction]
Assoc = Dict[Word, Fraction]


class LieInputError(ValueError):
    pass


@dataclass
class GradedLieAlgebra:
    """Basis with degrees and structure constants ``[b_i, b_j]`` for ``i < j``."""

    names: Tuple[str, ...]
    degrees: Tuple[int, ...]
    brackets: Dict[Tuple[int, int], Vec] = field(default_factory=dict)
    expressions: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        self.names = tuple(self.names)
        self.degrees = tuple(self.degrees)
        if self.expressions is None:
            self.expressions = self.names
        clean = {}
        for (i, j), v in self.brackets.items():
            v = {k: Fraction(c) for k, c in v.items() if c}
            if not v:
                continue
            if i == j:
                raise StructureError("[b, b] must vanish")
            if i > j:
                i, j = j, i
                v = {k: -c for k, c in v.items()}
            clean[(i, j)] = v
        self.brackets = clean

    @property
    def dim(self) -> int:
        return len(self.names)

    def hilbert_function(self) -> List[int]:
        top = max(self.degrees, default=0)
        h = [0] * top
        for d in self.degrees:
            h[d - 1] += 1
        return h

    def bracket(self, i: int, j: int) -> Vec:
        if i == j:
            return {}
        if i < j:
            return self.brackets.get((i, j), {})
        return {k: -c for k, c in self.brackets.get((j, i), {}).items()}

    def bracket_vec(self, u: Vec, v: Vec) -> Vec:
        out: Vec = {}
        for i, a in u.items():
            for j, b in v.items():
                for k, c in self.bracket(i, j).items():
                    s = out.get(k, 0) + a * b * c
                    if s:
                        out[k] = s
                    else:
                        out.pop(k, None)
        return out

    def is_positively_graded(self) -> bool:
        return all(d >= 1 for d in self.degrees)

    def index(self, name: str) -> int:
        return self.names.index(name)


def from_structure_constants(names: Sequence[str], degrees: Sequence[int],
                             table: Dict[Tuple[str, str], Dict[str, int]]) -> GradedLieAlgebra:
    """Build from ``{("x", "y"): {"z": 1}}`` style data."""
    idx = {n: i for i, n in enumerate(names)}
    brackets = {}
    for (a, b), val in table.items():
        brackets[(idx[a], idx[b])] = {idx[k]: Fraction(c) for k, c in val.items()}
    return GradedLieAlgebra(tuple(names), tuple(degrees), brackets)


# ---------- free Lie algebras ----------

def lyndon_words(nletters: int, maxlen: int) -> List[Word]:
    """Lyndon words of length at most ``maxlen`` in lexicographic order (Duval)."""
    out = []
    w = [-1]
    while w:
        w[-1] += 1
        out.append(tuple(w))
        m = len(w)
        while len(w) < maxlen:
            w.append(w[len(w) - m])
        while w and w[-1] == nletters - 1:
            w.pop()
    return out


def _is_lyndon(w: Word) -> bool:
    return all(w < w[i:] for i in range(1, len(w)))


def standard_factorization(w: Word) -> Tuple[Word, Word]:
    for i in range(1, len(w)):
        if _is_lyndon(w[i:]):
            return w[:i], w[i:]
    raise ValueError("single letters have no factorization")


def bracketing(w: Word, names: Sequence[str]) -> str:
    if len(w) == 1:
        return names[w[0]]
    u, v = standard_factorization(w)
    return f"[{bracketing(u, names)},{bracketing(v, names)}]"


def _assoc_bracket(a: Assoc, b: Assoc) -> Assoc:
    out: Assoc = {}
    for u, c in a.items():
        for v, d in b.items():
            for w, s in ((u + v, c * d), (v + u, -c * d)):
                t = out.get(w, 0) + s
                if t:
                    out[w] = t
                else:
                    out.pop(w, None)
    return out


def lyndon_expansion(w: Word, cache: Optional[Dict[Word, Assoc]] = None) -> Assoc:
    """Commutator expansion of the standard bracketing of ``w``."""
    if cache is not None and w in cache:
        return cache[w]
    if len(w) == 1:
        out = {w: Fraction(1)}
    else:
        u, v = standard_factorization(w)
        out = _assoc_bracket(lyndon_expansion(u, cache), lyndon_expansion(v, cache))
    if cache is not None:
        cache[w] = out
    return out


@dataclass(frozen=True)
class LyndonElement:
    word: Word
    expression: str
    degree: int


def lyndon_basis(generators: GeneratorTable, cap: int) -> Dict[int, List[LyndonElement]]:
    """Lyndon basis of the free Lie algebra grouped by weighted degree ``1..cap``."""
    weights = generators.weights
    out: Dict[int, List[LyndonElement]] = {d: [] for d in range(1, cap + 1)}
    if cap < 1:
        return out
    for w in lyndon_words(len(weights), cap // min(weights)):
        d = sum(weights[i] for i in w)
        if d <= cap:
            out[d].append(LyndonElement(w, bracketing(w, generators.names), d))
    return out


# ---------- bracket expressions ----------

_LIE_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(.))")


def parse_bracket(text: str, generators: GeneratorTable) -> Assoc:
    """Parse ``"[x,[x,y]] - 2*[z,w]"`` to its commutator expansion."""
    tokens = []
    for m in _LIE_TOKEN.finditer(text.strip()):
        if m.group(0).strip() == "":
            continue
        if m.group(1):
            tokens.append(("num", int(m.group(1))))
        elif m.group(2):
            tokens.append(("name", m.group(2)))
        elif m.group(3) in "[],+-*/()":
            tokens.append((m.group(3), None))
        else:
            raise LieInputError(f"unexpected {m.group(3)!r} in {text!r}")
    tokens.append(("end", None))
    pos = 0

    def peek():
        return tokens[pos][0]

    def take(kind):
        nonlocal pos
        if tokens[pos][0] != kind:
            raise LieInputError(f"expected {kind!r} in {text!r}")
        pos += 1
        return tokens[pos - 1][1]

    def expr():
        sign = 1
        if peek() in "+-":
            sign = -1 if peek() == "-" else 1
            take(peek())
        out = _scale(term(), sign)
        while peek() in ("+", "-"):
            sign = -1 if peek() == "-" else 1
            take(peek())
            out = _add(out, term(), sign)
        return out

    def term():
        c = Fraction(1)
        if peek() == "num":
            c = Fraction(take("num"))
            if peek() == "/":
                take("/")
                c /= take("num")
            take("*")
        return _scale(atom(), c)

    def atom():
        kind = peek()
        if kind == "name":
            name = take("name")
            if name not in generators.names:
                raise LieInputError(f"unknown generator {name!r} in {text!r}")
            return {(generators.index(name),): Fraction(1)}
        if kind == "[":
            take("[")
            a = expr()
            take(",")
            b = expr()
            take("]")
            return _assoc_bracket(a, b)
        if kind == "(":
            take("(")
            a = expr()
            take(")")
            return a
        raise LieInputError(f"unexpected {kind!r} in {text!r}")

    result = expr()
    if peek() != "end":
        raise LieInputError(f"trailing input in {text!r}")
    return result


def _scale(a: Assoc, c) -> Assoc:
    return {w: c * v for w, v in a.items()} if c else {}


def _add(a: Assoc, b: Assoc, c=1) -> Assoc:
    out = dict(a)
    for w, v in b.items():
        s = out.get(w, 0) + c * v
        if s:
            out[w] = s
        else:
            out.pop(w, None)
    return out


# ---------- quotients ----------

def _basis_names(elements: Sequence[LyndonElement], generators: GeneratorTable) -> List[str]:
    single = all(len(n) == 1 for n in generators.names)
    names = []
    for e in elements:
        if len(e.word) == 1:
            names.append(generators.names[e.word[0]])
        else:
            parts = [generators.names[i] for i in e.word]
            names.append("".join(parts) if single else "_".join(parts))
    if len(set(names)) != len(names):
        names = [f"b{i + 1}" for i in range(len(elements))]
    return names


def lie_from_presentation(generators: Union[GeneratorTable, Sequence[str]],
                          relators: Sequence[Union[str, Assoc]], cap: int,
                          truncate: Optional[int] = None) -> GradedLieAlgebra:
    """Quotient of the free Lie algebra by the ideal of ``relators`` (plus all of
    degree ``>= truncate``), computed through degree ``cap``.

    The basis is chosen among Lyndon elements by echelon selection in
    Lyndon order within each degree.
    """
    if not isinstance(generators, GeneratorTable):
        generators = GeneratorTable.standard(*generators)
    weights = generators.weights
    top = cap if truncate is None else min(cap, truncate - 1)

    rels_by_deg: Dict[int, List[Assoc]] = {}
    for r in relators:
        vec = parse_bracket(r, generators) if isinstance(r, str) else dict(r)
        if not vec:
            continue
        degs = {sum(weights[i] for i in w) for w in vec}
        if len(degs) != 1:
            raise LieInputError(f"inhomogeneous relator {r!r}")
        rels_by_deg.setdefault(degs.pop(), []).append(vec)

    lyndon = lyndon_basis(generators, top)
    cache: Dict[Word, Assoc] = {}
    ideal: Dict[int, List[Assoc]] = {}
    echelons: Dict[int, Echelon] = {}
    chosen: List[Tuple[LyndonElement, Assoc]] = []
    zero_run = 0
    gen_vecs = [{(g,): Fraction(1)} for g in range(len(weights))]
    for d in range(1, top + 1):
        ech = Echelon()
        spanning = []
        for v in rels_by_deg.get(d, []):
            if ech.add(v, ("I", len(spanning))):
                spanning.append(v)
        for g, w in enumerate(weights):
            for v in ideal.get(d - w, []):
                b = _assoc_bracket(gen_vecs[g], v)
                if b and ech.add(b, ("I", len(spanning))):
                    spanning.append(b)
        ideal[d] = spanning
        count = 0
        for e in lyndon[d]:
            vec = lyndon_expansion(e.word, cache)
            if ech.add(vec, ("B", len(chosen))):
                chosen.append((e, vec))
                count += 1
        echelons[d] = ech
        zero_run = zero_run + 1 if count == 0 else 0
        if zero_run >= max(weights):
            # generated by the generators: everything above is zero as well
            break

    elements = [e for e, _ in chosen]
    names = _basis_names(elements, generators)
    degrees = [e.degree for e in elements]
    brackets: Dict[Tuple[int, int], Vec] = {}
    for i, j in combinations(range(len(chosen)), 2):
        d = degrees[i] + degrees[j]
        if d not in echelons:
            continue
        b = _assoc_bracket(chosen[i][1], chosen[j][1])
        if not b:
            continue
        rem, combo = echelons[d].reduce(b)
        if rem:
            raise RuntimeError("bracket left the span of the free Lie algebra")
        coords = {t[1]: c for t, c in combo.items() if t[0] == "B"}
        if coords:
            brackets[(i, j)] = coords
    return GradedLieAlgebra(tuple(names), tuple(degrees), brackets,
                            tuple(e.expression for e in elements))


# ---------- checks and series ----------

def check_jacobi(g: GradedLieAlgebra) -> Optional[Tuple[str, ...]]:
    """``None`` when the table is a graded Lie algebra, else the first bad triple or pair."""
    for (i, j), v in sorted(g.brackets.items()):
        for k in v:
            if g.degrees[k] != g.degrees[i] + g.degrees[j]:
                return (g.names[i], g.names[j])
    n = g.dim
    for i in range(n):
        for j in range(i, n):
            for k in range(j, n):
                ei, ej, ek = ({i: Fraction(1)}, {j: Fraction(1)}, {k: Fraction(1)})
                total = _vadd(_vadd(g.bracket_vec(ei, g.bracket_vec(ej, ek)),
                                    g.bracket_vec(ej, g.bracket_vec(ek, ei))),
                              g.bracket_vec(ek, g.bracket_vec(ei, ej)))
                if total:
                    return (g.names[i], g.names[j], g.names[k])
    return None


def _vadd(a: Vec, b: Vec) -> Vec:
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, 0) + v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def pbw_series(g: GradedLieAlgebra) -> RationalSeries:
    return RationalSeries.product_form(g.degrees)


def socle_twist(g: GradedLieAlgebra) -> int:
    """Degree of the top exterior power."""
    return sum(g.degrees)


# ---------- exterior algebra ----------

@dataclass
class WedgeElement:
    algebra: GradedLieAlgebra
    grade: int
    terms: Dict[Tuple[int, ...], Fraction]

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        out = ""
        for t, c in sorted(self.terms.items()):
            body = "^".join(self.algebra.names[i] for i in t) or "1"
            a = abs(c)
            text = body if a == 1 else f"{a}*{body}"
            if not out:
                out = ("-" if c < 0 else "") + text
            else:
                out += (" - " if c < 0 else " + ") + text
        return out


def _wedge_insert(k: int, rest: Tuple[int, ...], front: bool = True):
    """Sort ``x_k ^ rest`` (or ``rest ^ x_k``); returns ``(sign, tuple)`` or None."""
    if k in rest:
        return None
    if front:
        swaps = sum(1 for r in rest if r < k)
    else:
        swaps = sum(1 for r in rest if r > k)
    t = tuple(sorted(rest + (k,)))
    return (-1 if swaps % 2 else 1), t


def _add_term(acc, key, c):
    s = acc.get(key, 0) + c
    if s:
        acc[key] = s
    else:
        acc.pop(key, None)


def delta_form(g: GradedLieAlgebra) -> WedgeElement:
    """``sum_{i<j} (-1)^(i+j) [x_i, x_j] ^ x_1 ... (omit i, j) ... x_n``."""
    n = g.dim
    terms: Dict[Tuple[int, ...], Fraction] = {}
    full = tuple(range(n))
    for i, j in combinations(range(n), 2):
        sign = -1 if (i + j) % 2 else 1  # 0-based shift leaves the parity unchanged
        rest = tuple(x for x in full if x not in (i, j))
        for k, c in g.bracket(i, j).items():
            ins = _wedge_insert(k, rest)
            if ins:
                _add_term(terms, ins[1], sign * ins[0] * c)
    return WedgeElement(g, max(n - 1, 0), terms)


def wedge_basis(g: GradedLieAlgebra, p: int) -> List[Tuple[int, ...]]:
    return list(combinations(range(g.dim), p))


def wedge_degree(g: GradedLieAlgebra, t: Tuple[int, ...]) -> int:
    return sum(g.degrees[i] for i in t)


def bracket_differential(g: GradedLieAlgebra, t: Tuple[int, ...]) -> Dict[Tuple[int, ...], Fraction]:
    """Bracket-only Chevalley-Eilenberg differential of ``x_t``."""
    out: Dict[Tuple[int, ...], Fraction] = {}
    for l, m in combinations(range(len(t)), 2):
        sign = 1 if (l + m) % 2 == 0 else -1
        rest = t[:l] + t[l + 1:m] + t[m + 1:]
        for k, c in g.bracket(t[l], t[m]).items():
            ins = _wedge_insert(k, rest)
            if ins:
                _add_term(out, ins[1], sign * ins[0] * c)
    return out


def _graded_wedges(g: GradedLieAlgebra) -> Dict[Tuple[int, int], List[Tuple[int, ...]]]:
    out: Dict[Tuple[int, int], List[Tuple[int, ...]]] = {}
    for p in range(g.dim + 1):
        for t in combinations(range(g.dim), p):
            out.setdefault((p, wedge_degree(g, t)), []).append(t)
    return out


def ce_slice_rank(g: GradedLieAlgebra, p: int, degree: int) -> int:
    """Rank of the bracket differential from degree-``degree`` part of the ``p``-th
    exterior power to the ``(p-1)``-th."""
    slices = _graded_wedges(g)
    src = slices.get((p, degree), [])
    tgt = {t: k for k, t in enumerate(slices.get((p - 1, degree), []))}
    rows = [{tgt[u]: c for u, c in bracket_differential(g, t).items()} for t in src]
    return rank(rows)


BettiTable = Dict[Tuple[int, int], int]


def lie_betti(g: GradedLieAlgebra) -> BettiTable:
    """Graded Lie homology dimensions ``b(p, j)``: the Betti numbers of the minimal
    resolution of ``k`` over the enveloping algebra."""
    slices = _graded_wedges(g)
    ranks: Dict[Tuple[int, int], int] = {}
    for (p, j), src in slices.items():
        if p == 0:
            continue
        tgt = {t: k for k, t in enumerate(slices.get((p - 1, j), []))}
        rows = [{tgt[u]: c for u, c in bracket_differential(g, t).items()} for t in src]
        ranks[(p, j)] = rank(rows)
    table = {}
    for (p, j), src in slices.items():
        b = len(src) - ranks.get((p, j), 0) - ranks.get((p + 1, j), 0)
        if b:
            table[(p, j)] = b
    return table


def betti_shifts(table: BettiTable) -> List[List[int]]:
    """Per homological degree, the sorted list of shifts with multiplicity."""
    top = max((p for p, _ in table), default=0)
    out = [[] for _ in range(top + 1)]
    for (p, j), b in sorted(table.items()):
        out[p].extend([j] * b)
    return out


# ---------- enveloping algebras ----------

def enveloping_presentation(g: GradedLieAlgebra) -> Tuple[GeneratorTable, List[NcPoly]]:
    """One generator per basis element; relations ``b_i b_j - b_j b_i - [b_i, b_j]``."""
    gens = GeneratorTable(g.names, g.degrees)
    rels = []
    for i, j in combinations(range(g.dim), 2):
        terms = {(i, j): Fraction(1), (j, i): Fraction(-1)}
        for k, c in g.bracket(i, j).items():
            terms[(k,)] = -c
        rels.append(NcPoly(gens, terms))
    return gens, rels


def enveloping_order(gens: GeneratorTable) -> MonomialOrder:
    """Deglex with earlier basis elements larger, so normal words are PBW monomials."""
    return MonomialOrder(gens, "deglex")


def enveloping_system(g: GradedLieAlgebra, cap: int) -> RewriteSystem:
    gens, rels = enveloping_presentation(g)
    return complete(rels, enveloping_order(gens), cap)


def ce_complex(g: GradedLieAlgebra, side: str = "left",
               gens: Optional[GeneratorTable] = None) -> FreeComplex:
    """Chevalley-Eilenberg resolution of ``k`` over the enveloping presentation."""
    if gens is None:
        gens = GeneratorTable(g.names, g.degrees)
    n = g.dim
    bases = [list(combinations(range(n), p)) for p in range(n + 1)]
    index = [{t: k for k, t in enumerate(b)} for b in bases]
    modules = [[wedge_degree(g, t) for t in b] for b in bases]
    maps = []
    for p in range(1, n + 1):
        rows = len(bases[p - 1])
        mat = [[{} for _ in bases[p]] for _ in range(rows)]
        for col, t in enumerate(bases[p]):
            for l in range(p):
                rest = t[:l] + t[l + 1:]
                # 0-based l: (-1)^(l+1) becomes (-1)^l, (-1)^(p-l) becomes (-1)^(p-l-1)
                sign = (1 if l % 2 == 0 else -1) if side == "left" else \
                    (1 if (p - l - 1) % 2 == 0 else -1)
                _add_term(mat[index[p - 1][rest]][col], (t[l],), Fraction(sign))
            for l, m in combinations(range(p), 2):
                sign = 1 if (l + m) % 2 == 0 else -1
                rest = t[:l] + t[l + 1:m] + t[m + 1:]
                for k, c in g.bracket(t[l], t[m]).items():
                    ins = _wedge_insert(k, rest, front=(side == "left"))
                    if ins:
                        _add_term(mat[index[p - 1][ins[1]]][col], (), sign * ins[0] * c)
        maps.append([[NcPoly(gens, e) for e in row] for row in mat])
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    return FreeComplex(gens, modules, maps, side)
