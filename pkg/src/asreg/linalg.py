"""Exact sparse linear algebra over the rationals.

Vectors are ``{column: value}`` dicts.  Ranks use fraction-free integer
elimination; :class:`Echelon` keeps Fractions and tracks combinations.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, Hashable, Iterable, List, Optional, Tuple


def _integer_row(row: Dict) -> Dict:
    den = 1
    for v in row.values():
        if isinstance(v, Fraction) and v.denominator != 1:
            den = den * v.denominator // gcd(den, v.denominator)
    out = {}
    for k, v in row.items():
        iv = int(v * den)
        if iv:
            out[k] = iv
    return _primitive(out)


def _primitive(row: Dict[Hashable, int]) -> Dict[Hashable, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {k: v // g for k, v in row.items()}
    return row


def rank(rows: Iterable[Dict]) -> int:
    """Rank of the matrix whose rows are the given sparse vectors."""
    pivots: Dict = {}
    for row in rows:
        r = _integer_row(row)
        while r:
            c = min(r)
            p = pivots.get(c)
            if p is None:
                pivots[c] = r
                break
            a, b = r[c], p[c]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {k: b * v for k, v in r.items()}
            for k, v in p.items():
                s = new.get(k, 0) - a * v
                if s:
                    new[k] = s
                else:
                    new.pop(k, None)
            r = _primitive(new)
    return len(pivots)


class Echelon:
    """Incremental row echelon form that remembers how each row was built.

    ``add(vec, tag)`` inserts a vector labelled ``tag``; ``reduce(vec)``
    returns the remainder of ``vec`` and the coefficients ``{tag: c}`` with
    ``vec = remainder + sum c * vector(tag)``.
    """

    def __init__(self):
        self.pivots: Dict = {}  # pivot column -> (row, combination)

    def __len__(self):
        return len(self.pivots)

    def reduce(self, vec: Dict) -> Tuple[Dict, Dict]:
        r = {k: Fraction(v) for k, v in vec.items() if v}
        combo: Dict = {}
        while True:
            hit = None
            for c in sorted(r):
                if c in self.pivots:
                    hit = c
                    break
            if hit is None:
                return r, combo
            row, rc = self.pivots[hit]
            f = r[hit] / row[hit]
            for k, v in row.items():
                s = r.get(k, 0) - f * v
                if s:
                    r[k] = s
                else:
                    r.pop(k, None)
            for t, v in rc.items():
                s = combo.get(t, 0) + f * v
                if s:
                    combo[t] = s
                else:
                    combo.pop(t, None)

    def add(self, vec: Dict, tag: Optional[Hashable] = None) -> bool:
        """Insert ``vec``; returns False when it was already in the span."""
        r, combo = self.reduce(vec)
        if not r:
            return False
        # remainder = vec - sum combo  ->  row combination is tag - combo
        rc = {t: -v for t, v in combo.items()}
        if tag is not None:
            rc[tag] = rc.get(tag, 0) + 1
        self.pivots[min(r)] = (r, rc)
        return True

    def in_span(self, vec: Dict) -> bool:
        return not self.reduce(vec)[0]


def kernel_dim(rows: List[Dict], ncols: int) -> int:
    return ncols - rank(rows)
