"""Numerical resolution types for regular algebras of global dimension five
with two generators.

A type ``(n, a, l)`` stands for the resolution shape

    A <- A(-1)^2 <- sum A(-a_i) <- sum A(a_i - l) <- A(1 - l)^2 <- A(-l)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .hilbert import RationalSeries, gk_pole_order, inverse_coefficients, resolution_q


@dataclass(frozen=True, order=True)
class BettiType:
    n: int
    l: int
    a: Tuple[int, ...]

    def __post_init__(self):
        a = tuple(self.a)
        object.__setattr__(self, "a", a)
        if len(a) != self.n:
            raise ValueError(f"expected {self.n} relation degrees, got {a}")
        if list(a) != sorted(a):
            raise ValueError(f"relation degrees {a} must be nondecreasing")
        if a and a[0] < 2:
            raise ValueError("relation degrees must be at least 2")
        if self.l < 5:
            raise ValueError("top twist must be at least 5")

    @classmethod
    def of(cls, a: Sequence[int], l: int) -> "BettiType":
        return cls(len(a), l, tuple(sorted(a)))

    def q(self) -> Dict[int, int]:
        return resolution_q(self.a, self.l)

    def q_list(self) -> List[int]:
        q = self.q()
        return [q.get(i, 0) for i in range(max(q) + 1)]

    def series(self) -> RationalSeries:
        return RationalSeries.inverse_of(self.q())

    @property
    def existence(self) -> str:
        # realized for three relations; the longer shapes are open
        return "known" if self.n == 3 else "open"

    def label(self) -> str:
        return f"({self.n},({','.join(map(str, self.a))}),{self.l})"


def check_linear(b: BettiType) -> bool:
    return 2 * sum(b.a) == (b.n - 1) * b.l + 4


def cubic_value(b: BettiType) -> int:
    l = b.l
    return (4 * sum(x ** 3 for x in b.a) - 6 * l * sum(x * x for x in b.a)
            + l ** 3 * (b.n - 1) + 12 * l - 8)


def check_cubic(b: BettiType) -> bool:
    return cubic_value(b) == 0


def check_gaps(b: BettiType) -> bool:
    """``a_{i+1} + a_{n+1-i} < l`` and ``a_i + a_{n+1-i} < l`` for ``i = 1..n-1``."""
    a, n, l = b.a, b.n, b.l
    for i in range(1, n):
        if a[i] + a[n - i] >= l or a[i - 1] + a[n - i] >= l:
            return False
    return True


def check_positivity(b: BettiType, cap: int) -> bool:
    """``1/q`` has non-negative coefficients to ``cap`` and a pole of order five at 1."""
    q = b.q_list()
    if gk_pole_order(q) != 5:
        return False
    return all(c >= 0 for c in inverse_coefficients(q, cap))


def admissible(b: BettiType, cap: int) -> bool:
    return check_linear(b) and check_cubic(b) and check_gaps(b) and check_positivity(b, cap)


def _vectors(n: int, total: int, lo: int, hi: int, l: int) -> Iterator[Tuple[int, ...]]:
    """Nondecreasing vectors in ``[lo, hi]`` with the given sum.

    Once ``a_2`` is fixed, ``a_2 + a_n < l`` bounds every later entry; the
    filter is exact because :func:`check_gaps` rejects anything it prunes.
    """
    out: List[int] = []

    def rec(k: int, prev: int, remaining: int, ub: int):
        if k == n:
            if remaining == 0:
                yield tuple(out)
            return
        slots = n - k
        for v in range(prev, ub + 1):
            if v * slots > remaining:
                break
            if remaining - v > (slots - 1) * ub:
                continue
            nub = min(ub, l - 1 - v) if k == 1 else ub
            if slots > 1 and nub < v:
                continue
            out.append(v)
            yield from rec(k + 1, v, remaining - v, nub)
            out.pop()

    yield from rec(0, lo, total, hi)


def enumerate_types(n_max: int = 8, l_max: int = 30, cap: int = 60,
                    n_values: Optional[Sequence[int]] = None,
                    l_values: Optional[Sequence[int]] = None) -> List[BettiType]:
    """Every admissible type with ``n <= n_max`` and ``5 <= l <= l_max``, ordered by ``(n, l, a)``."""
    ns = list(n_values) if n_values is not None else range(1, n_max + 1)
    ls = list(l_values) if l_values is not None else range(5, l_max + 1)
    out = []
    for n in ns:
        for l in ls:
            twice = (n - 1) * l + 4
            if twice % 2:
                continue
            for a in _vectors(n, twice // 2, 2, l - 2, l):
                b = BettiType(n, l, a)
                if check_cubic(b) and check_gaps(b) and check_positivity(b, cap):
                    out.append(b)
    return out


def group_by_series(types: Sequence[BettiType]) -> List[List[BettiType]]:
    """Partition by equality of ``q``; groups appear in order of first member."""
    groups: Dict[Tuple[int, ...], List[BettiType]] = {}
    for b in types:
        groups.setdefault(tuple(b.q_list()), []).append(b)
    return list(groups.values())
