"""The two-generator algebra of global dimension five with top twist 12.

Relations ``[x^2, y]``, ``[x, y^3]``, ``[x, y*R*y]`` with
``R = y*x*y*x + x*y^2*x + x*y*x*y``, and its length-five resolution of ``k``.
"""

from __future__ import annotations

from .complexcheck import FreeComplex
from .diamond import RewriteSystem, complete
from .ncpoly import GeneratorTable, MonomialOrder, NcPoly, parse_poly

R = "(y*x*y*x + x*y^2*x + x*y*x*y)"

RELATIONS = (
    "x^2*y - y*x^2",
    "x*y^3 - y^3*x",
    f"x*y*{R}*y - y*{R}*y*x",
)

# standard monomials are y^a B^b C^c A^d x^e with A = xy, B = xy^2, C = xyxy^2
PRODUCT_DEGREES = (1, 1, 2, 3, 5)
PRODUCT_BIDEGREES = ((1, 0), (0, 1), (1, 1), (1, 2), (2, 3))

SHIFTS = [[0], [1, 1], [3, 4, 7], [5, 8, 9], [11, 11], [12]]
BISHIFTS = [
    [(0, 0)],
    [(1, 0), (0, 1)],
    [(2, 1), (1, 3), (3, 4)],
    [(2, 3), (4, 4), (3, 6)],
    [(4, 7), (5, 6)],
    [(5, 7)],
]

MATRICES = [
    [["x", "y"]],
    [["x*y", "y^3", f"y*{R}*y"],
     ["-x^2", "-y^2*x", f"-{R}*y*x"]],
    [["y^2", f"{R}*y", "0"],
     ["-x", "0", f"-y*{R}"],
     ["0", "-x", "y^2"]],
    [[f"-y*{R}*y", f"x*y*{R}"],
     ["y^3", "-x*y^2"],
     ["y*x", "-x^2"]],
    [["x"], ["y"]],
]

TOP_TWIST = 12


def generators(bigraded: bool = True) -> GeneratorTable:
    if bigraded:
        return GeneratorTable.bigraded(("x", "y"), ((1, 0), (0, 1)))
    return GeneratorTable.standard("x", "y")


def relations(gens: GeneratorTable = None):
    gens = gens or generators()
    return [parse_poly(r, gens) for r in RELATIONS]


def system(cap: int = 15, gens: GeneratorTable = None) -> RewriteSystem:
    gens = gens or generators()
    return complete(relations(gens), MonomialOrder.from_names(gens, "deglex", ("x", "y")), cap)


def resolution(gens: GeneratorTable = None, bigraded: bool = False) -> FreeComplex:
    gens = gens or generators()
    return FreeComplex.from_strings(gens, BISHIFTS if bigraded else SHIFTS, MATRICES)


def r_poly(gens: GeneratorTable) -> NcPoly:
    return parse_poly(R, gens)
