"""Hilbert functions, rational series and normal-word counting.

Univariate polynomials are ``{exponent: int}`` dicts; bivariate ones are
``{(i, j): int}`` dicts.  Truncation of bivariate series is by total degree.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .diamond import CapExceededError, RewriteSystem

Exp = Union[int, Tuple[int, int]]


def _total(e: Exp) -> int:
    return e if isinstance(e, int) else sum(e)


def _add(e: Exp, f: Exp) -> Exp:
    if isinstance(e, int):
        return e + f
    return (e[0] + f[0], e[1] + f[1])


def _sub(e: Exp, f: Exp) -> Exp:
    if isinstance(e, int):
        return e - f
    return (e[0] - f[0], e[1] - f[1])


def _zero_exp(nvars: int) -> Exp:
    return 0 if nvars == 1 else (0, 0)


def poly_mul(p: Dict, q: Dict) -> Dict:
    out: Dict = {}
    for e, a in p.items():
        for f, b in q.items():
            k = _add(e, f)
            out[k] = out.get(k, 0) + a * b
    return {k: v for k, v in out.items() if v}


def poly_add(p: Dict, q: Dict, c: int = 1) -> Dict:
    out = dict(p)
    for e, v in q.items():
        out[e] = out.get(e, 0) + c * v
    return {k: v for k, v in out.items() if v}


def one_minus(e: Exp) -> Dict:
    """The polynomial ``1 - t^e``."""
    nvars = 1 if isinstance(e, int) else 2
    return {_zero_exp(nvars): 1, e: -1}


@dataclass
class HilbertFunction:
    """Truncated Hilbert function; keys are degrees or bidegree pairs."""

    coefficients: Dict[Exp, int]
    cap: int

    def __getitem__(self, e):
        return self.coefficients.get(e, 0)

    @property
    def bigraded(self) -> bool:
        return any(not isinstance(e, int) for e in self.coefficients)

    def as_list(self) -> List[int]:
        """Univariate coefficients for degrees ``0..cap``; bivariate ones are summed by total degree."""
        out = [0] * (self.cap + 1)
        for e, c in self.coefficients.items():
            d = _total(e)
            if d <= self.cap:
                out[d] += c
        return out

    def is_valid(self) -> bool:
        zero = (0, 0) if self.bigraded else 0
        return self[zero] == 1 and all(c >= 0 for c in self.coefficients.values())

    def truncate(self, cap: int) -> "HilbertFunction":
        return HilbertFunction({e: c for e, c in self.coefficients.items() if _total(e) <= cap},
                               min(cap, self.cap))

    def same_as(self, other: "HilbertFunction", cap: Optional[int] = None) -> bool:
        cap = min(self.cap, other.cap) if cap is None else cap
        a = {e: c for e, c in self.coefficients.items() if c and _total(e) <= cap}
        b = {e: c for e, c in other.coefficients.items() if c and _total(e) <= cap}
        return a == b

    def first_mismatch(self, other: "HilbertFunction") -> Optional[Exp]:
        cap = min(self.cap, other.cap)
        keys = {e for e in list(self.coefficients) + list(other.coefficients) if _total(e) <= cap}
        bad = [e for e in keys if self[e] != other[e]]
        if not bad:
            return None
        return min(bad, key=lambda e: (_total(e), e))


@dataclass
class RationalSeries:
    """``numerator / denominator`` with integer polynomials and ``denominator(0) == 1``."""

    numerator: Dict[Exp, int]
    denominator: Dict[Exp, int]
    nvars: int = 1

    def __post_init__(self):
        zero = _zero_exp(self.nvars)
        if self.denominator.get(zero, 0) != 1:
            raise ValueError("denominator must have constant term 1")

    @classmethod
    def inverse_of(cls, q: Dict[Exp, int], nvars: int = 1) -> "RationalSeries":
        return cls({_zero_exp(nvars): 1}, {k: v for k, v in q.items() if v}, nvars)

    @classmethod
    def product_form(cls, exps: Iterable[Exp]) -> "RationalSeries":
        """``prod 1/(1 - t^e)`` for degrees or bidegrees ``e``."""
        exps = list(exps)
        nvars = 2 if exps and not isinstance(exps[0], int) else 1
        den = {_zero_exp(nvars): 1}
        for e in exps:
            den = poly_mul(den, one_minus(e))
        return cls.inverse_of(den, nvars)

    def __eq__(self, other):
        if not isinstance(other, RationalSeries):
            return NotImplemented
        # cross-multiplication compares the represented series exactly
        return (self.nvars == other.nvars and
                poly_mul(self.numerator, other.denominator) ==
                poly_mul(other.numerator, self.denominator))


def series_expand(r: RationalSeries, cap: int) -> HilbertFunction:
    """Power-series coefficients up to total degree ``cap`` by exact long division."""
    zero = _zero_exp(r.nvars)
    den = [(e, c) for e, c in r.denominator.items() if e != zero]
    if r.nvars == 1:
        exps = list(range(cap + 1))
    else:
        exps = [(i, d - i) for d in range(cap + 1) for i in range(d + 1)]
    out: Dict[Exp, int] = {}
    for e in exps:
        v = r.numerator.get(e, 0)
        for f, c in den:
            g = _sub(e, f)
            if isinstance(g, int):
                if g >= 0:
                    v -= c * out[g]
            elif g[0] >= 0 and g[1] >= 0:
                v -= c * out[g]
        out[e] = v
    return HilbertFunction(out, cap)


def inverse_coefficients(h: Sequence[int], cap: int) -> List[int]:
    """Coefficients of ``1/h`` up to ``cap`` for a univariate series with ``h[0] == 1``."""
    if h[0] != 1:
        raise ValueError("series must start with 1")
    f = [0] * (cap + 1)
    f[0] = 1
    for n in range(1, cap + 1):
        f[n] = -sum(h[k] * f[n - k] for k in range(1, min(n, len(h) - 1) + 1))
    return f


# ---------- counting normal words ----------

class _ObstructionAutomaton:
    """Aho-Corasick automaton over rule leads; dead states contain a lead."""

    def __init__(self, leads: Sequence[Tuple[int, ...]], nletters: int):
        self.goto: List[Dict[int, int]] = [{}]
        dead = [False]
        for lead in leads:
            s = 0
            for a in lead:
                nxt = self.goto[s].get(a)
                if nxt is None:
                    nxt = len(self.goto)
                    self.goto[s][a] = nxt
                    self.goto.append({})
                    dead.append(False)
                s = nxt
            dead[s] = True
        fail = [0] * len(self.goto)
        delta = [[0] * nletters for _ in self.goto]
        queue = deque()
        for a in range(nletters):
            t = self.goto[0].get(a)
            if t is None:
                delta[0][a] = 0
            else:
                delta[0][a] = t
                fail[t] = 0
                queue.append(t)
        while queue:
            s = queue.popleft()
            dead[s] = dead[s] or dead[fail[s]]
            for a in range(nletters):
                t = self.goto[s].get(a)
                if t is None:
                    delta[s][a] = delta[fail[s]][a]
                else:
                    fail[t] = delta[fail[s]][a]
                    delta[s][a] = t
                    queue.append(t)
        self.delta = delta
        self.dead = dead


def normal_word_count(s: RewriteSystem, cap: int, bigraded: bool = False) -> HilbertFunction:
    """Count words avoiding every rule lead, per degree (or bidegree) up to ``cap``."""
    if cap > s.degree_cap:
        raise CapExceededError(f"cap {cap} exceeds certified cap {s.degree_cap}")
    gens = s.gens
    n = len(gens)
    auto = _ObstructionAutomaton(s.leads, n)
    if bigraded:
        if gens.bidegrees is None:
            raise ValueError("generator table carries no bidegrees")
        steps = list(gens.bidegrees)
        zero: Exp = (0, 0)
        order = [(i, d - i) for d in range(cap + 1) for i in range(d + 1)]
    else:
        steps = list(gens.weights)
        zero = 0
        order = list(range(cap + 1))
    dp: Dict[Exp, Dict[int, int]] = {zero: {0: 1}}
    delta, dead = auto.delta, auto.dead
    for e in order:
        states = dp.get(e)
        if not states:
            continue
        for a in range(n):
            f = _add(e, steps[a])
            if _total(f) > cap:
                continue
            bucket = dp.setdefault(f, {})
            for st, c in states.items():
                t = delta[st][a]
                if not dead[t]:
                    bucket[t] = bucket.get(t, 0) + c
    coeffs = {e: sum(dp.get(e, {}).values()) for e in order}
    return HilbertFunction(coeffs, cap)


# ---------- product forms and poles ----------

def recognize_product_form(h: Union[HilbertFunction, Sequence[int]]) -> Optional[Tuple[int, ...]]:
    """Degrees ``n_i`` with ``h == prod 1/(1 - t^n_i)`` up to the cap, else ``None``.

    Factors of degree above ``cap // 2`` are not attempted; ``None`` then
    means inconclusive within the cap rather than a refutation.
    """
    coeffs = h.as_list() if isinstance(h, HilbertFunction) else list(h)
    cap = len(coeffs) - 1
    if not coeffs or coeffs[0] != 1:
        return None
    f = inverse_coefficients(coeffs, cap)
    found: List[int] = []
    while True:
        k = next((i for i in range(1, cap + 1) if f[i]), None)
        if k is None:
            return tuple(sorted(found))
        m = -f[k]
        if m <= 0 or k > cap // 2:
            return None
        for _ in range(m):
            # divide by (1 - t^k)
            for i in range(k, cap + 1):
                f[i] += f[i - k]
        found.extend([k] * m)


def _as_list(q: Dict[int, int]) -> List[int]:
    top = max(q, default=0)
    return [q.get(i, 0) for i in range(top + 1)]


def gk_pole_order(q: Union[Dict[int, int], Sequence[int]]) -> int:
    """Multiplicity of ``t = 1`` as a root of ``q``."""
    coeffs = _as_list(q) if isinstance(q, dict) else list(q)
    if not any(coeffs):
        raise ValueError("zero polynomial")
    order = 0
    while sum(coeffs) == 0:
        # q = (1 - t) r  with  r_k = q_0 + ... + q_k
        r, acc = [], 0
        for c in coeffs[:-1]:
            acc += c
            r.append(acc)
        coeffs = r
        order += 1
    return order


def euler_polynomial(modules: Sequence[Sequence[Exp]]) -> Dict[Exp, int]:
    """``sum_p (-1)^p sum_{shifts a} t^a`` for a graded free complex."""
    out: Dict[Exp, int] = {}
    for p, shifts in enumerate(modules):
        sign = -1 if p % 2 else 1
        for a in shifts:
            out[a] = out.get(a, 0) + sign
    return {k: v for k, v in out.items() if v}


def series_from_shifts(modules: Sequence[Sequence[Exp]]) -> RationalSeries:
    """Series ``1/q`` forced by a resolution of ``k`` with the given shifts."""
    q = euler_polynomial(modules)
    nvars = 2 if any(not isinstance(e, int) for e in q) else 1
    return RationalSeries.inverse_of(q, nvars)


def resolution_shifts(a: Sequence[int], l: int) -> List[List[int]]:
    """Shifts of a length-five resolution with two generators."""
    a = sorted(a)
    return [[0], [1, 1], list(a), sorted(l - x for x in a), [l - 1, l - 1], [l]]


def resolution_q(a: Sequence[int], l: int) -> Dict[int, int]:
    return euler_polynomial(resolution_shifts(a, l))


def series_from_resolution_type(b) -> RationalSeries:
    """``1/q(t)`` for an object with ``a`` and ``l`` attributes (see :mod:`asreg.bettienum`)."""
    return RationalSeries.inverse_of(resolution_q(b.a, b.l))
