"""Named graded Lie algebras used throughout the test-suite and CLI."""

from __future__ import annotations

from typing import Callable, Dict

from .liealg import GradedLieAlgebra, from_structure_constants, lie_from_presentation

_NAMES = ("x", "y", "z", "w", "t")


def abelian(d: int) -> GradedLieAlgebra:
    names = _NAMES[:d] if d <= len(_NAMES) else tuple(f"x{i + 1}" for i in range(d))
    return GradedLieAlgebra(names, (1,) * d)


def heisenberg() -> GradedLieAlgebra:
    return lie_from_presentation(("x", "y"), [], cap=6, truncate=3)


def _kill(g: str, others) -> list:
    return [f"[{g},{o}]" for o in others if o != g]


# Hilbert functions of dimension five, generated in degree one
def case_a() -> GradedLieAlgebra:
    return abelian(5)


def case_b() -> GradedLieAlgebra:
    gens = ("x", "y", "z", "w")
    return lie_from_presentation(gens, _kill("z", gens) + _kill("w", gens), cap=6, truncate=3)


def case_c() -> GradedLieAlgebra:
    return lie_from_presentation(("x", "y", "z"), ["[y,z]"], cap=6, truncate=3)


def case_d() -> GradedLieAlgebra:
    gens = ("x", "y", "z")
    return lie_from_presentation(gens, _kill("z", gens) + ["[x,[x,y]]"], cap=6, truncate=4)


def case_e() -> GradedLieAlgebra:
    return lie_from_presentation(("x", "y"), [], cap=6, truncate=4)


def case_f() -> GradedLieAlgebra:
    return lie_from_presentation(("x", "y"), ["[x,[x,y]]"], cap=6, truncate=5)


def hilbert41_g() -> GradedLieAlgebra:
    """Hilbert function 4,1 with two cubic relations."""
    return case_b()


def hilbert41_h() -> GradedLieAlgebra:
    """Hilbert function 4,1 where every cubic relation follows from the quadratic ones."""
    return lie_from_presentation(
        ("x", "y", "z", "w"),
        ["[x,y] - [z,w]", "[x,z]", "[x,w]", "[y,z]", "[y,w]"], cap=6)


def dim4_three_generators() -> GradedLieAlgebra:
    """Resolution A <- A(-1)^3 <- A(-2)^2 + A(-3)^2 <- A(-4)^3 <- A(-5)."""
    return lie_from_presentation(
        ("x", "y", "z"), ["[z,x]", "[z,y]", "[x,[x,y]]", "[y,[x,y]]"], cap=6)


def dim4_two_generators() -> GradedLieAlgebra:
    """Resolution A <- A(-1)^2 <- A(-3) + A(-4) <- A(-6)^2 <- A(-7)."""
    return lie_from_presentation(("x", "y"), ["[x,[x,[x,y]]]", "[[x,y],y]"], cap=8)


def chain_algebra(d: int) -> GradedLieAlgebra:
    """Basis ``y, L1..L_{d-1}`` with ``L1 = x`` and ``[L_i, y] = L_{i+1}``."""
    names = ["x", "y"] + [f"L{i}" for i in range(2, d)]
    degrees = [1, 1] + list(range(2, d))
    label = {1: "x"}
    label.update({i: f"L{i}" for i in range(2, d)})
    table = {(label[i], "y"): {label[i + 1]: 1} for i in range(1, d - 1)}
    return from_structure_constants(names, degrees, table)


def two_dim_nonnilpotent() -> GradedLieAlgebra:
    """``[x, y] = y``; not positively graded, its delta form is ``-y``."""
    g = GradedLieAlgebra(("x", "y"), (0, 0), {(0, 1): {1: 1}})
    return g


DIMENSION_FIVE: Dict[str, Callable[[], GradedLieAlgebra]] = {
    "a": case_a,
    "b": case_b,
    "c": case_c,
    "d": case_d,
    "e": case_e,
    "f": case_f,
    "h": hilbert41_h,
}

CATALOG: Dict[str, Callable[[], GradedLieAlgebra]] = {
    "abelian2": lambda: abelian(2),
    "abelian3": lambda: abelian(3),
    "abelian4": lambda: abelian(4),
    "abelian5": lambda: abelian(5),
    "heisenberg": heisenberg,
    "case-a": case_a,
    "case-b": case_b,
    "case-c": case_c,
    "case-d": case_d,
    "case-e": case_e,
    "case-f": case_f,
    "h41-g": hilbert41_g,
    "h41-h": hilbert41_h,
    "dim4-three-generators": dim4_three_generators,
    "dim4-two-generators": dim4_two_generators,
}
