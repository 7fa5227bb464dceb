"""Bergman diamond-lemma engine: reduction, ambiguities and completion.

Completion runs degree by degree on homogeneous input, so a system built
with ``cap=D`` is certified confluent for every ambiguity whose witness
has degree at most ``D``.  Normal forms, ideal membership and normal-word
counts are only trusted up to that cap.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .ncpoly import GeneratorTable, MonomialOrder, NcPoly, StructureError, Word, _degree


class CapExceededError(ValueError):
    """A monomial lies above the degree the rewrite system is certified for."""


class InputError(ValueError):
    pass


@dataclass(frozen=True)
class Rule:
    """Reduction ``lead -> tail``; the relation it encodes is ``lead - tail``."""

    lead: Word
    tail: NcPoly

    def relation(self) -> NcPoly:
        return NcPoly.monomial(self.tail.gens, self.lead) - self.tail


@dataclass(frozen=True)
class Ambiguity:
    """A word reducible in two ways.

    For an overlap ``left.lead = A*B`` and ``right.lead = B*C`` with witness
    ``A*B*C``; for an inclusion ``right.lead`` sits inside ``left.lead`` which
    is the witness.  ``offset`` is where ``right.lead`` starts in the witness.
    """

    kind: str
    left: int
    right: int
    witness: Word
    offset: int


class _Matcher:
    """Leftmost-occurrence lookup of rule leads inside words."""

    def __init__(self, leads: Sequence[Word]):
        self.index = {}
        for i, lead in enumerate(leads):
            self.index.setdefault(lead, i)
        self.lengths = sorted({len(lead) for lead in leads})

    def find(self, w: Word, start: int = 0) -> Optional[Tuple[int, int]]:
        index = self.index
        lengths = self.lengths
        n = len(w)
        for pos in range(start, n):
            hit = None
            for k in lengths:
                if pos + k > n:
                    break
                r = index.get(w[pos:pos + k])
                if r is not None and (hit is None or r < hit):
                    hit = r
            if hit is not None:
                return pos, hit
        return None

    def all_occurrences(self, w: Word) -> List[Tuple[int, int]]:
        out = []
        n = len(w)
        for pos in range(n):
            for k in self.lengths:
                if pos + k > n:
                    break
                r = self.index.get(w[pos:pos + k])
                if r is not None:
                    out.append((pos, r))
        return out


def _neg_key(order: MonomialOrder):
    key = order.key

    def neg(w):
        d, rest = key(w)
        return (-d, tuple(-v for v in rest))
    return neg


def _reduce_terms(terms: Dict[Word, Fraction], rules: Sequence[Rule], matcher: _Matcher,
                  order: MonomialOrder) -> Dict[Word, Fraction]:
    # highest reducible monomial first, leftmost occurrence, lowest-index rule
    terms = dict(terms)
    neg = _neg_key(order)
    heap = [(neg(w), w) for w in terms]
    heapq.heapify(heap)
    result = {}
    while heap:
        _, w = heapq.heappop(heap)
        c = terms.pop(w, None)
        if c is None:
            continue
        occ = matcher.find(w)
        if occ is None:
            result[w] = c
            continue
        pos, r = occ
        rule = rules[r]
        left, right = w[:pos], w[pos + len(rule.lead):]
        for tw, tc in rule.tail.terms.items():
            nw = left + tw + right
            old = terms.get(nw)
            if old is None:
                terms[nw] = c * tc
                heapq.heappush(heap, (neg(nw), nw))
            else:
                s = old + c * tc
                if s:
                    terms[nw] = s
                else:
                    del terms[nw]
    return result


def _reduce_random(terms: Dict[Word, Fraction], rules: Sequence[Rule], matcher: _Matcher,
                   rng: random.Random) -> Dict[Word, Fraction]:
    terms = dict(terms)
    while True:
        choices = [(w, occ) for w in sorted(terms) for occ in matcher.all_occurrences(w)]
        if not choices:
            return terms
        w, (pos, r) = rng.choice(choices)
        c = terms.pop(w)
        rule = rules[r]
        left, right = w[:pos], w[pos + len(rule.lead):]
        for tw, tc in rule.tail.terms.items():
            nw = left + tw + right
            s = terms.get(nw, 0) + c * tc
            if s:
                terms[nw] = s
            else:
                terms.pop(nw, None)


@dataclass
class RewriteSystem:
    """Interreduced reduction system, confluent up to ``degree_cap``."""

    gens: GeneratorTable
    order: MonomialOrder
    rules: Tuple[Rule, ...]
    degree_cap: int
    ambiguities_checked: int = 0
    _matcher: _Matcher = field(init=False, repr=False, compare=False)
    _cache: Dict[Word, Dict[Word, Fraction]] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        self.rules = tuple(self.rules)
        self._matcher = _Matcher([r.lead for r in self.rules])
        self._cache = {}

    @property
    def leads(self) -> List[Word]:
        return [r.lead for r in self.rules]

    def is_normal(self, w: Word) -> bool:
        return self._matcher.find(w) is None

    def check_cap(self, p: NcPoly) -> None:
        for w in p.terms:
            d = _degree(w, self.gens)
            if d > self.degree_cap:
                raise CapExceededError(
                    f"monomial of degree {d} exceeds certified cap {self.degree_cap}")

    def word_nf(self, w: Word) -> Dict[Word, Fraction]:
        """Memoised normal form of a single word (valid because the system is confluent)."""
        cache = self._cache
        if w in cache:
            return cache[w]
        find = self._matcher.find
        rules = self.rules
        stack = [w]
        while stack:
            u = stack[-1]
            if u in cache:
                stack.pop()
                continue
            occ = find(u)
            if occ is None:
                cache[u] = {u: Fraction(1)}
                stack.pop()
                continue
            pos, r = occ
            rule = rules[r]
            left, right = u[:pos], u[pos + len(rule.lead):]
            children = [(left + tw + right, tc) for tw, tc in rule.tail.terms.items()]
            missing = [v for v, _ in children if v not in cache]
            if missing:
                stack.extend(missing)
                continue
            acc: Dict[Word, Fraction] = {}
            for v, tc in children:
                for nw, nc in cache[v].items():
                    s = acc.get(nw, 0) + tc * nc
                    if s:
                        acc[nw] = s
                    else:
                        acc.pop(nw, None)
            cache[u] = acc
            stack.pop()
        return cache[w]

    def reduce(self, p: NcPoly) -> NcPoly:
        """Normal form through the word cache; agrees with :func:`normal_form`."""
        self.check_cap(p)
        acc: Dict[Word, Fraction] = {}
        for w, c in p.terms.items():
            for nw, nc in self.word_nf(w).items():
                s = acc.get(nw, 0) + c * nc
                if s:
                    acc[nw] = s
                else:
                    acc.pop(nw, None)
        return NcPoly._raw(self.gens, acc)


def normal_form(p: NcPoly, s: RewriteSystem, rng: Optional[random.Random] = None) -> NcPoly:
    """Reduce ``p`` to its irreducible representative.

    With ``rng`` the reducible monomial, occurrence and rule are chosen at
    random instead of by the deterministic strategy.
    """
    if p.gens != s.gens:
        raise StructureError("polynomial and rewrite system use different generators")
    s.check_cap(p)
    if rng is not None:
        terms = _reduce_random(p.terms, s.rules, s._matcher, rng)
    else:
        terms = _reduce_terms(p.terms, s.rules, s._matcher, s.order)
    return NcPoly._raw(s.gens, terms)


def ideal_member(p: NcPoly, s: RewriteSystem) -> bool:
    return not normal_form(p, s)


def find_ambiguities(rules: Sequence[Rule], cap: int,
                     gens: Optional[GeneratorTable] = None) -> List[Ambiguity]:
    """All overlap and inclusion ambiguities with witness degree at most ``cap``."""
    if not rules:
        return []
    if gens is None:
        gens = rules[0].tail.gens
    out = []
    for i, ri in enumerate(rules):
        a = ri.lead
        for j, rj in enumerate(rules):
            b = rj.lead
            for k in range(1, min(len(a), len(b))):
                if a[-k:] == b[:k]:
                    w = a + b[k:]
                    if _degree(w, gens) <= cap:
                        out.append(Ambiguity("overlap", i, j, w, len(a) - k))
            if i != j and len(b) <= len(a) and a != b:
                for pos in range(len(a) - len(b) + 1):
                    if a[pos:pos + len(b)] == b and _degree(a, gens) <= cap:
                        out.append(Ambiguity("inclusion", i, j, a, pos))
    out.sort(key=lambda amb: (_degree(amb.witness, gens), amb.witness,
                              amb.kind, amb.left, amb.right, amb.offset))
    return out


def s_difference(amb: Ambiguity, rules: Sequence[Rule]) -> NcPoly:
    """Difference of the two one-step reductions of the witness."""
    left, right = rules[amb.left], rules[amb.right]
    w = amb.witness
    if amb.kind == "overlap":
        suffix = w[len(left.lead):]
        prefix = w[:amb.offset]
        return left.tail.rmul(suffix) - right.tail.lmul(prefix)
    prefix = w[:amb.offset]
    suffix = w[amb.offset + len(right.lead):]
    return left.tail - right.tail.lmul(prefix).rmul(suffix)


def _orient(p: NcPoly, order: MonomialOrder) -> Rule:
    lead, c = p.leading(order)
    tail = {w: -v / c for w, v in p.terms.items() if w != lead}
    return Rule(lead, NcPoly._raw(p.gens, tail))


def _check_relation(p: NcPoly, cap: int) -> int:
    if not p:
        raise InputError("zero relation")
    if not p.is_homogeneous():
        raise InputError(f"inhomogeneous relation {p}")
    d = p.degree()
    if d > cap:
        raise InputError(f"relation of degree {d} exceeds cap {cap}")
    return d


def complete(relations: Sequence[NcPoly], order: MonomialOrder, cap: int) -> RewriteSystem:
    """Degree-truncated Buchberger/Bergman completion of homogeneous relations."""
    gens = order.gens
    if cap < 1:
        raise InputError("cap must be positive")
    by_degree: Dict[int, List[NcPoly]] = {}
    for p in relations:
        if p.gens != gens:
            raise StructureError("relation and order use different generator tables")
        by_degree.setdefault(_check_relation(p, cap), []).append(p)

    rules: List[Rule] = []
    matcher = _Matcher([])
    checked = 0
    for d in range(1, cap + 1):
        pending = list(by_degree.get(d, []))
        for amb in find_ambiguities(rules, d, gens):
            if _degree(amb.witness, gens) == d:
                checked += 1
                pending.append(s_difference(amb, rules))
        added = False
        for p in pending:
            r = _reduce_terms(p.terms, rules, matcher, order)
            if r:
                rules.append(_orient(NcPoly._raw(gens, r), order))
                matcher = _Matcher([x.lead for x in rules])
                added = True
        if added:
            rules = _interreduce(rules, order)
            matcher = _Matcher([x.lead for x in rules])

    system = RewriteSystem(gens, order, tuple(rules), cap)
    system.ambiguities_checked = certify(system)
    return system


def _interreduce(rules: List[Rule], order: MonomialOrder) -> List[Rule]:
    key = order.key
    rules = sorted(rules, key=lambda r: key(r.lead))
    out = []
    for i, r in enumerate(rules):
        others = rules[:i] + rules[i + 1:]
        m = _Matcher([x.lead for x in others])
        tail = _reduce_terms(r.tail.terms, others, m, order)
        out.append(Rule(r.lead, NcPoly._raw(r.tail.gens, tail)))
    return out


def certify(s: RewriteSystem) -> int:
    """Check every ambiguity up to the cap resolves; return how many were checked."""
    ambs = find_ambiguities(s.rules, s.degree_cap, s.gens)
    for amb in ambs:
        if normal_form(s_difference(amb, s.rules), s):
            raise RuntimeError(f"unresolved ambiguity {amb}")
    return len(ambs)


def from_rules(rules: Iterable[Rule], order: MonomialOrder, cap: int,
               verify: bool = True) -> RewriteSystem:
    """Wrap hand-written rules; with ``verify`` the confluence certificate is computed."""
    s = RewriteSystem(order.gens, order, tuple(rules), cap)
    if verify:
        s.ambiguities_checked = certify(s)
    return s


def normal_words(s: RewriteSystem, degree: int) -> List[Word]:
    """Irreducible words of the given weighted degree, in increasing word order."""
    gens = s.gens
    weights = gens.weights
    find = s._matcher.find
    out = []

    def extend(prefix, deg):
        if deg == degree:
            out.append(prefix)
            return
        for g in range(len(weights)):
            nd = deg + weights[g]
            if nd > degree:
                continue
            w = prefix + (g,)
            # only suffixes can contain a new lead occurrence
            if find(w, max(0, len(w) - _max_len(s))) is None:
                extend(w, nd)

    extend((), 0)
    return out


def _max_len(s: RewriteSystem) -> int:
    return max((len(r.lead) for r in s.rules), default=0)
