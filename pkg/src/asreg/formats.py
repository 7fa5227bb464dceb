"""Line-oriented text formats for algebras, complexes and Lie presentations.

Algebra files::

    gens x:1,0 y:0,1        # name:weight or name:a,b (bidegree)
    order deglex x>y
    rel x^2*y - y*x^2
    cap 15

Complex files (indices are 1-based, omitted entries are zero)::

    modules 3
    shifts 0
    shifts 1 1
    shifts 2
    side right
    map 1 rows 1 cols 2
    entry 1 1 x

Lie presentation files::

    liegens x y
    bracketrel [x,[x,y]]
    truncate 5
    cap 8
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import List, Optional, Tuple, Union

from .complexcheck import FreeComplex
from .liealg import GradedLieAlgebra, LieInputError, lie_from_presentation, parse_bracket
from .ncpoly import (GeneratorTable, MonomialOrder, NcPoly, PolySyntaxError, StructureError,
                     UnsupportedOrderError, parse_poly)


class ParseError(ValueError):
    def __init__(self, msg: str, source: str = "<string>", line: int = 0, col: int = 0):
        self.source, self.line, self.col = source, line, col
        super().__init__(f"{source}:{line}:{col}: {msg}")


def data_path(name: str) -> Path:
    """Path of a file shipped in ``asreg/data``."""
    return Path(str(resources.files("asreg") / "data" / name))


def digest(path: Union[str, Path]) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()[:16]


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        stripped = line.strip()
        if not stripped:
            continue
        keyword, _, rest = stripped.partition(" ")
        col = len(line) - len(line.lstrip()) + 1
        rest_col = col + len(keyword) + 1 + (len(rest) - len(rest.lstrip()))
        yield no, keyword, rest.strip(), col, rest_col


def _read(path_or_text: Union[str, Path], is_text: bool):
    if is_text:
        return str(path_or_text), "<string>"
    p = Path(path_or_text)
    return p.read_text(encoding="utf-8"), str(p)


# ---------- algebras ----------

@dataclass
class AlgebraSpec:
    gens: GeneratorTable
    relations: List[NcPoly]
    order: MonomialOrder
    cap: Optional[int] = None


def _parse_gens(rest: str, src: str, no: int, col: int) -> GeneratorTable:
    names, weights, bideg = [], [], []
    for tok in rest.split():
        name, sep, spec = tok.partition(":")
        if not sep:
            spec = "1"
        try:
            nums = [int(v) for v in spec.split(",")]
        except ValueError:
            raise ParseError(f"bad generator weight {tok!r}", src, no, col) from None
        if len(nums) == 1:
            weights.append(nums[0])
            bideg.append(None)
        elif len(nums) == 2:
            weights.append(sum(nums))
            bideg.append(tuple(nums))
        else:
            raise ParseError(f"bad generator weight {tok!r}", src, no, col)
        names.append(name)
    if any(b is not None for b in bideg) and any(b is None for b in bideg):
        raise ParseError("either all or no generators carry bidegrees", src, no, col)
    try:
        return GeneratorTable(tuple(names), tuple(weights),
                              tuple(bideg) if bideg and bideg[0] is not None else None)
    except StructureError as exc:
        raise ParseError(str(exc), src, no, col) from None


def _parse_order(rest: str, gens: GeneratorTable, src: str, no: int, col: int) -> MonomialOrder:
    parts = rest.split()
    if not parts:
        raise ParseError("order needs a kind", src, no, col)
    prec = parts[1].split(">") if len(parts) > 1 else None
    try:
        return MonomialOrder.from_names(gens, parts[0], prec)
    except (StructureError, UnsupportedOrderError) as exc:
        raise ParseError(str(exc), src, no, col) from None


def parse_order_spec(text: str, gens: GeneratorTable) -> MonomialOrder:
    """``"deglex:x>y"`` or ``"deglex x>y"`` as used by the ``--order`` flag."""
    return _parse_order(text.replace(":", " "), gens, "--order", 0, 0)


def parse_algebra(text: str, source: str = "<string>") -> AlgebraSpec:
    gens = order = cap = None
    order_line = None
    rels: List[Tuple[int, int, str]] = []
    for no, kw, rest, col, rcol in _lines(text):
        if kw == "gens":
            if gens is not None:
                raise ParseError("duplicate section 'gens'", source, no, col)
            gens = _parse_gens(rest, source, no, rcol)
        elif kw == "order":
            if order_line is not None:
                raise ParseError("duplicate section 'order'", source, no, col)
            order_line = (no, rest, rcol)
        elif kw == "rel":
            rels.append((no, rcol, rest))
        elif kw == "cap":
            if cap is not None:
                raise ParseError("duplicate section 'cap'", source, no, col)
            try:
                cap = int(rest)
            except ValueError:
                raise ParseError(f"cap must be an integer, not {rest!r}", source, no, rcol) from None
        else:
            raise ParseError(f"unknown keyword {kw!r}", source, no, col)
    if gens is None:
        raise ParseError("missing 'gens' line", source, 1, 1)
    if order_line is not None:
        order = _parse_order(order_line[1], gens, source, order_line[0], order_line[2])
    else:
        order = MonomialOrder(gens)
    relations = []
    for no, rcol, body in rels:
        try:
            p = parse_poly(body, gens)
        except PolySyntaxError as exc:
            raise ParseError(str(exc).split(" at column")[0], source, no, rcol + exc.pos) from None
        if not p:
            raise ParseError(f"zero relation {body!r}", source, no, rcol)
        if not p.is_homogeneous():
            raise ParseError(f"inhomogeneous relation {body!r}", source, no, rcol)
        relations.append(p)
    return AlgebraSpec(gens, relations, order, cap)


def parse_algebra_file(path: Union[str, Path]) -> AlgebraSpec:
    text, src = _read(path, False)
    return parse_algebra(text, src)


def emit_algebra(spec: AlgebraSpec) -> str:
    g = spec.gens
    if g.bidegrees is not None:
        gens = " ".join(f"{n}:{a},{b}" for n, (a, b) in zip(g.names, g.bidegrees))
    else:
        gens = " ".join(f"{n}:{w}" for n, w in zip(g.names, g.weights))
    lines = [f"gens {gens}", f"order {spec.order.describe()}"]
    lines += [f"rel {r.to_str(spec.order)}" for r in spec.relations]
    if spec.cap is not None:
        lines.append(f"cap {spec.cap}")
    return "\n".join(lines) + "\n"


# ---------- complexes ----------

def _parse_shift(tok: str):
    if "," in tok:
        a, b = tok.split(",")
        return (int(a), int(b))
    return int(tok)


def parse_complex(text: str, gens: GeneratorTable, source: str = "<string>") -> FreeComplex:
    count = None
    modules: List[list] = []
    maps: dict = {}
    side = "right"
    current = None
    for no, kw, rest, col, rcol in _lines(text):
        try:
            if kw == "modules":
                if count is not None:
                    raise ParseError("duplicate section 'modules'", source, no, col)
                count = int(rest)
            elif kw == "shifts":
                modules.append([_parse_shift(t) for t in rest.split()])
            elif kw == "side":
                side = rest
            elif kw == "map":
                parts = rest.split()
                if len(parts) != 5 or parts[1] != "rows" or parts[3] != "cols":
                    raise ParseError("expected 'map <p> rows <r> cols <c>'", source, no, rcol)
                p, r, c = int(parts[0]), int(parts[2]), int(parts[4])
                if p in maps:
                    raise ParseError(f"duplicate map {p}", source, no, col)
                maps[p] = [[NcPoly.zero(gens) for _ in range(c)] for _ in range(r)]
                current = p
            elif kw == "entry":
                if current is None:
                    raise ParseError("entry before any map line", source, no, col)
                i_s, j_s, body = rest.split(None, 2)
                i, j = int(i_s), int(j_s)
                m = maps[current]
                if not (1 <= i <= len(m) and 1 <= j <= len(m[0])):
                    raise ParseError(f"entry ({i},{j}) outside map {current}", source, no, rcol)
                try:
                    m[i - 1][j - 1] = parse_poly(body, gens)
                except PolySyntaxError as exc:
                    raise ParseError(str(exc), source, no, rcol) from None
            else:
                raise ParseError(f"unknown keyword {kw!r}", source, no, col)
        except ValueError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(str(exc), source, no, rcol) from None
    if count is None:
        raise ParseError("missing 'modules' line", source, 1, 1)
    if len(modules) != count:
        raise ParseError(f"expected {count} shifts lines, found {len(modules)}", source, 1, 1)
    if sorted(maps) != list(range(1, count)):
        raise ParseError(f"expected maps 1..{count - 1}", source, 1, 1)
    for p, m in maps.items():
        if len(m) != len(modules[p - 1]) or len(m[0]) != len(modules[p]):
            raise ParseError(f"map {p} shape does not match module ranks", source, 1, 1)
    return FreeComplex(gens, modules, [maps[p] for p in range(1, count)], side)


def parse_complex_file(path: Union[str, Path], gens: GeneratorTable) -> FreeComplex:
    text, src = _read(path, False)
    return parse_complex(text, gens, src)


def emit_complex(c: FreeComplex) -> str:
    def shift(a):
        return str(a) if isinstance(a, int) else f"{a[0]},{a[1]}"
    lines = [f"modules {len(c.modules)}"]
    lines += ["shifts " + " ".join(shift(a) for a in s) for s in c.modules]
    if c.side != "right":
        lines.append(f"side {c.side}")
    for p, m in enumerate(c.maps, start=1):
        lines.append(f"map {p} rows {len(m)} cols {len(m[0]) if m else 0}")
        for i, row in enumerate(m, start=1):
            for j, e in enumerate(row, start=1):
                if e:
                    lines.append(f"entry {i} {j} {e}")
    return "\n".join(lines) + "\n"


# ---------- Lie presentations ----------

@dataclass
class LieSpec:
    gens: GeneratorTable
    relators: List[str] = field(default_factory=list)
    truncate: Optional[int] = None
    cap: Optional[int] = None

    def build(self, cap: Optional[int] = None) -> GradedLieAlgebra:
        cap = cap or self.cap or (self.truncate - 1 if self.truncate else 8)
        return lie_from_presentation(self.gens, self.relators, cap, self.truncate)


def parse_lie(text: str, source: str = "<string>") -> LieSpec:
    gens = None
    rels: List[Tuple[int, int, str]] = []
    truncate = cap = None
    for no, kw, rest, col, rcol in _lines(text):
        if kw == "liegens":
            if gens is not None:
                raise ParseError("duplicate section 'liegens'", source, no, col)
            gens = _parse_gens(rest, source, no, rcol)
        elif kw == "bracketrel":
            rels.append((no, rcol, rest))
        elif kw in ("truncate", "cap"):
            try:
                val = int(rest)
            except ValueError:
                raise ParseError(f"{kw} must be an integer", source, no, rcol) from None
            if kw == "truncate":
                if truncate is not None:
                    raise ParseError("duplicate section 'truncate'", source, no, col)
                truncate = val
            else:
                if cap is not None:
                    raise ParseError("duplicate section 'cap'", source, no, col)
                cap = val
        else:
            raise ParseError(f"unknown keyword {kw!r}", source, no, col)
    if gens is None:
        raise ParseError("missing 'liegens' line", source, 1, 1)
    for no, rcol, body in rels:
        try:
            vec = parse_bracket(body, gens)
        except LieInputError as exc:
            raise ParseError(str(exc), source, no, rcol) from None
        degs = {sum(gens.weights[i] for i in w) for w in vec}
        if len(degs) > 1:
            raise ParseError(f"inhomogeneous relator {body!r}", source, no, rcol)
    return LieSpec(gens, [body for _, _, body in rels], truncate, cap)


def parse_lie_file(path: Union[str, Path]) -> LieSpec:
    text, src = _read(path, False)
    return parse_lie(text, src)
