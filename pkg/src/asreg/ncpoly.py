"""Words and noncommutative polynomials over a weighted generator alphabet.

A word is a plain tuple of generator indices.  Polynomials map words to
nonzero :class:`fractions.Fraction` coefficients and are never mutated
after construction.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, Optional, Sequence, Tuple

Word = Tuple[int, ...]

_NAME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")


class StructureError(ValueError):
    """Raised for invalid generator indices or mismatched generator tables."""


class UnsupportedOrderError(ValueError):
    pass


class Cmp(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1
    INCOMPARABLE = None


@dataclass(frozen=True)
class GeneratorTable:
    """Ordered generator names with positive weights and optional bidegrees."""

    names: Tuple[str, ...]
    weights: Tuple[int, ...]
    bidegrees: Optional[Tuple[Tuple[int, int], ...]] = None

    def __post_init__(self):
        names = tuple(self.names)
        weights = tuple(int(w) for w in self.weights)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "weights", weights)
        if len(set(names)) != len(names):
            raise StructureError(f"duplicate generator names in {names}")
        for name in names:
            if not _NAME_RE.match(name):
                raise StructureError(f"invalid generator name {name!r}")
        if len(weights) != len(names):
            raise StructureError("one weight per generator required")
        if any(w < 1 for w in weights):
            raise StructureError("generator weights must be >= 1")
        if self.bidegrees is not None:
            bideg = tuple(tuple(int(v) for v in b) for b in self.bidegrees)
            object.__setattr__(self, "bidegrees", bideg)
            if len(bideg) != len(names):
                raise StructureError("one bidegree per generator required")
            for name, w, b in zip(names, weights, bideg):
                if len(b) != 2 or min(b) < 0 or sum(b) != w:
                    raise StructureError(
                        f"bidegree {b} of {name} must be two non-negative "
                        f"integers summing to its weight {w}")

    @classmethod
    def standard(cls, *names: str) -> "GeneratorTable":
        """Degree-one generators."""
        return cls(tuple(names), (1,) * len(names))

    @classmethod
    def bigraded(cls, names: Sequence[str],
                 bidegrees: Sequence[Tuple[int, int]]) -> "GeneratorTable":
        return cls(tuple(names), tuple(sum(b) for b in bidegrees), tuple(bidegrees))

    def __len__(self):
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise StructureError(f"unknown generator {name!r}") from None

    def word(self, *names: str) -> Word:
        return tuple(self.index(n) for n in names)

    def check_word(self, w: Word) -> None:
        n = len(self.names)
        for letter in w:
            if not (isinstance(letter, int) and 0 <= letter < n):
                raise StructureError(f"invalid generator index {letter!r}")


def word_degree(w: Word, g: GeneratorTable):
    """Weighted degree of ``w``; a ``(degree, bidegree)`` pair when ``g`` is bigraded."""
    g.check_word(w)
    deg = sum(g.weights[i] for i in w)
    if g.bidegrees is None:
        return deg
    a = sum(g.bidegrees[i][0] for i in w)
    b = sum(g.bidegrees[i][1] for i in w)
    return deg, (a, b)


def _degree(w: Word, g: GeneratorTable) -> int:
    weights = g.weights
    return sum(weights[i] for i in w)


def _bidegree(w: Word, g: GeneratorTable) -> Tuple[int, int]:
    bd = g.bidegrees
    return sum(bd[i][0] for i in w), sum(bd[i][1] for i in w)


def format_word(w: Word, g: GeneratorTable) -> str:
    if not w:
        return "1"
    parts = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        name = g.names[w[i]]
        parts.append(name if j - i == 1 else f"{name}^{j - i}")
        i = j
    return "*".join(parts)


# ---------- monomial orders ----------

ORDER_KINDS = ("deglex", "degrevlex", "weighted-deglex")


@dataclass(frozen=True)
class MonomialOrder:
    """Degree-compatible total order on words.

    ``precedence`` lists generator indices from largest to smallest.  Degree
    is always the weighted degree of the generator table, so ``deglex`` and
    ``weighted-deglex`` coincide.
    """

    gens: GeneratorTable
    kind: str = "deglex"
    precedence: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise UnsupportedOrderError(f"unknown order kind {self.kind!r}")
        prec = self.precedence
        if prec is None:
            prec = tuple(range(len(self.gens)))
        prec = tuple(prec)
        if sorted(prec) != list(range(len(self.gens))):
            raise StructureError(f"precedence {prec} is not a permutation of the generators")
        object.__setattr__(self, "precedence", prec)
        n = len(prec)
        rank = [0] * n
        for pos, gen in enumerate(prec):
            rank[gen] = n - pos
        object.__setattr__(self, "_rank", tuple(rank))

    @classmethod
    def from_names(cls, gens: GeneratorTable, kind: str = "deglex",
                   precedence: Optional[Sequence[str]] = None) -> "MonomialOrder":
        prec = None if precedence is None else tuple(gens.index(n) for n in precedence)
        return cls(gens, kind, prec)

    @property
    def key(self) -> Callable[[Word], tuple]:
        """Sort key: ``key(a) < key(b)`` iff ``a < b``."""
        rank = self._rank
        weights = self.gens.weights
        if self.kind == "degrevlex":
            def key(w):
                return (sum(weights[i] for i in w), tuple(-rank[i] for i in reversed(w)))
        else:
            def key(w):
                return (sum(weights[i] for i in w), tuple(rank[i] for i in w))
        return key

    def describe(self) -> str:
        return f"{self.kind} " + ">".join(self.gens.names[i] for i in self.precedence)


def compare(o: MonomialOrder, m1: Word, m2: Word) -> Cmp:
    k1, k2 = o.key(m1), o.key(m2)
    if k1 < k2:
        return Cmp.LESS
    if k1 > k2:
        return Cmp.GREATER
    return Cmp.EQUAL


def dominance_compare(m1: Word, m2: Word, g: Optional[GeneratorTable] = None,
                      y: int = 1) -> Cmp:
    """Partial order on two-letter words by prefix counts of ``y``.

    Lower degree is smaller.  At equal degree ``m1 <= m2`` iff at every
    prefix length ``m1`` has at least as many ``y`` letters as ``m2``.
    """
    if g is not None and len(g) > 2:
        raise UnsupportedOrderError("dominance order needs a two-generator alphabet")
    if any(letter not in (0, 1) for letter in m1 + m2):
        raise UnsupportedOrderError("dominance order needs a two-generator alphabet")
    d1 = _degree(m1, g) if g is not None else len(m1)
    d2 = _degree(m2, g) if g is not None else len(m2)
    if d1 != d2:
        return Cmp.LESS if d1 < d2 else Cmp.GREATER
    if m1 == m2:
        return Cmp.EQUAL
    c1 = c2 = 0
    ge = le = True
    for a, b in zip(m1, m2):
        c1 += a == y
        c2 += b == y
        if c1 < c2:
            ge = False
        if c1 > c2:
            le = False
    if ge:
        return Cmp.LESS
    if le:
        return Cmp.GREATER
    return Cmp.INCOMPARABLE


# ---------- polynomials ----------

def _coerce(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class NcPoly:
    """Element of the free associative algebra with rational coefficients."""

    __slots__ = ("gens", "terms")

    def __init__(self, gens: GeneratorTable, terms: Optional[Dict[Word, Fraction]] = None):
        self.gens = gens
        clean = {}
        if terms:
            for w, c in terms.items():
                c = _coerce(c)
                if c:
                    clean[tuple(w)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, gens, terms):
        # trusted constructor: terms already pruned and of Fraction type
        p = object.__new__(cls)
        p.gens = gens
        p.terms = terms
        return p

    @classmethod
    def zero(cls, gens):
        return cls._raw(gens, {})

    @classmethod
    def one(cls, gens):
        return cls._raw(gens, {(): Fraction(1)})

    @classmethod
    def monomial(cls, gens, word: Word, coeff=1):
        gens.check_word(word)
        return cls(gens, {tuple(word): coeff})

    @classmethod
    def gen(cls, gens, name: str):
        return cls.monomial(gens, (gens.index(name),))

    def __iter__(self) -> Iterator[Tuple[Word, Fraction]]:
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, NcPoly):
            return self.gens == other.gens and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({(): Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def _check(self, other):
        if self.gens != other.gens:
            raise StructureError("polynomials over different generator tables")

    def _lift(self, other):
        if isinstance(other, NcPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return NcPoly(self.gens, {(): other})
        return None

    def combine(self, other: "NcPoly", c=1) -> "NcPoly":
        """Return ``self + c * other``."""
        self._check(other)
        c = _coerce(c)
        terms = dict(self.terms)
        if c:
            for w, v in other.terms.items():
                s = terms.get(w, 0) + c * v
                if s:
                    terms[w] = s
                else:
                    terms.pop(w, None)
        return NcPoly._raw(self.gens, terms)

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.combine(other, -1)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other.combine(self, -1)

    def __neg__(self):
        return NcPoly._raw(self.gens, {w: -c for w, c in self.terms.items()})

    def scale(self, c) -> "NcPoly":
        c = _coerce(c)
        if not c:
            return NcPoly.zero(self.gens)
        return NcPoly._raw(self.gens, {w: c * v for w, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, NcPoly):
            return NotImplemented
        self._check(other)
        terms: Dict[Word, Fraction] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                s = terms.get(w, 0) + c1 * c2
                if s:
                    terms[w] = s
                else:
                    del terms[w]
        return NcPoly._raw(self.gens, terms)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = NcPoly.one(self.gens)
        for _ in range(n):
            out = out * self
        return out

    def lmul(self, word: Word) -> "NcPoly":
        """``word * self``."""
        return NcPoly._raw(self.gens, {word + w: c for w, c in self.terms.items()})

    def rmul(self, word: Word) -> "NcPoly":
        """``self * word``."""
        return NcPoly._raw(self.gens, {w + word: c for w, c in self.terms.items()})

    def words(self) -> Iterable[Word]:
        return self.terms.keys()

    def coefficient(self, w: Word) -> Fraction:
        return self.terms.get(tuple(w), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def degrees(self) -> set:
        return {_degree(w, self.gens) for w in self.terms}

    def bidegrees(self) -> set:
        if self.gens.bidegrees is None:
            raise StructureError("generator table carries no bidegrees")
        return {_bidegree(w, self.gens) for w in self.terms}

    def degree(self) -> int:
        """Maximum weighted degree; -1 for the zero polynomial."""
        return max(self.degrees(), default=-1)

    def is_homogeneous(self) -> bool:
        if len(self.degrees()) > 1:
            return False
        return self.gens.bidegrees is None or len(self.bidegrees()) <= 1

    def leading(self, order: MonomialOrder) -> Tuple[Word, Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        w = max(self.terms, key=order.key)
        return w, self.terms[w]

    def sorted_terms(self, order: Optional[MonomialOrder] = None):
        if order is None:
            order = MonomialOrder(self.gens)
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def to_str(self, order: Optional[MonomialOrder] = None) -> str:
        if not self.terms:
            return "0"
        out = []
        for w, c in self.sorted_terms(order):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            body = format_word(w, self.gens)
            if a == 1:
                text = body
            elif not w:
                text = str(a)
            else:
                text = f"{a}*{body}"
            out.append((sign, text))
        first_sign, first = out[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, text in out[1:]:
            s += f" {sign} {text}"
        return s

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"NcPoly({self.to_str()!r})"


def poly_combine(p: NcPoly, q: NcPoly, c) -> NcPoly:
    return p.combine(q, c)


def poly_mul(p: NcPoly, q: NcPoly) -> NcPoly:
    return p * q


def commutator(p: NcPoly, q: NcPoly) -> NcPoly:
    return p * q - q * p


# ---------- text grammar ----------

class PolySyntaxError(ValueError):
    def __init__(self, msg, text="", pos=0):
        self.text = text
        self.pos = pos
        super().__init__(f"{msg} at column {pos + 1}" + (f" in {text!r}" if text else ""))


_TOKEN_RE = re.compile(r"(\d+)|([A-Za-z][A-Za-z0-9_]*)|(.)")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if m.group(1):
            tokens.append(("num", int(m.group(1)), pos))
        elif m.group(2):
            tokens.append(("name", m.group(2), pos))
        else:
            ch = m.group(3)
            if ch not in "+-*^/()":
                raise PolySyntaxError(f"unexpected character {ch!r}", text, pos)
            tokens.append((ch, ch, pos))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, gens):
        self.text = text
        self.gens = gens
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            raise PolySyntaxError(f"expected {kind!r}", self.text, tok[2])
        self.i += 1
        return tok

    def parse(self):
        if self.peek()[0] == "end":
            raise PolySyntaxError("empty polynomial", self.text, 0)
        p = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise PolySyntaxError(f"unexpected {tok[1]!r}", self.text, tok[2])
        return p

    def expr(self):
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        p = self.term().scale(sign)
        while self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
            p = p.combine(self.term(), sign)
        return p

    def term(self):
        p = self.factor()
        while self.peek()[0] == "*":
            self.take()
            p = p * self.factor()
        return p

    def factor(self):
        tok = self.peek()
        if tok[0] == "num":
            self.take()
            c = Fraction(tok[1])
            if self.peek()[0] == "/":
                self.take()
                den = self.take("num")
                if den[1] == 0:
                    raise PolySyntaxError("zero denominator", self.text, den[2])
                c = Fraction(tok[1], den[1])
            base = NcPoly(self.gens, {(): c})
        elif tok[0] == "name":
            self.take()
            if tok[1] not in self.gens.names:
                raise PolySyntaxError(f"unknown generator {tok[1]!r}", self.text, tok[2])
            base = NcPoly.gen(self.gens, tok[1])
        elif tok[0] == "(":
            self.take()
            base = self.expr()
            self.take(")")
        else:
            raise PolySyntaxError(f"unexpected {tok[1]!r}", self.text, tok[2])
        if self.peek()[0] == "^":
            self.take()
            n = self.take("num")
            if n[1] < 1:
                raise PolySyntaxError("exponent must be a positive integer", self.text, n[2])
            base = base ** n[1]
        return base


def parse_poly(text: str, gens: GeneratorTable) -> NcPoly:
    """Parse e.g. ``"x^2*y - y*x^2"``.  Parentheses group sub-expressions."""
    return _Parser(text, gens).parse()
