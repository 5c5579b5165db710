"""Solutions of x^2 - 3*y^2 = 1 feeding the plus-case block search.

Candidate blocks with rho0 = alpha0 exist exactly when 3*alpha0 + 5 and
alpha2 + 1 solve the equation, so walking the solution tree enumerates
candidate leading slices far faster than scanning chi directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .blocks import AlphaRho, triangular_index


@dataclass(frozen=True)
class PellSolution:
    """A solution (x, y); carries (alpha0, alpha2) when x = 3*alpha0 + 5."""

    x: int
    y: int
    alpha0: int | None = None
    alpha2: int | None = None

    def __post_init__(self) -> None:
        if self.x * self.x - 3 * self.y * self.y != 1:
            raise ValueError(f"({self.x}, {self.y}) does not solve x^2 - 3y^2 = 1")


def fundamental_solution() -> PellSolution:
    return PellSolution(2, 1)


def solutions() -> Iterator[PellSolution]:
    """All positive solutions in ascending order, from the fundamental one."""
    x, y = 2, 1
    while True:
        yield PellSolution(x, y)
        x, y = 2 * x + 3 * y, x + 2 * y


def qualifying_solutions(k: int) -> list[PellSolution]:
    """First k solutions with x = 2 (mod 3) and x >= 26, i.e. alpha0 >= 7.

    x = 2 itself would give alpha0 = -1, so the first usable solution is
    (26, 15).
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    out: list[PellSolution] = []
    for sol in solutions():
        if sol.x % 3 == 2 and sol.x >= 26:
            out.append(
                PellSolution(sol.x, sol.y, alpha0=(sol.x - 5) // 3, alpha2=sol.y - 1)
            )
            if len(out) == k:
                return out
    raise AssertionError("unreachable")


def chi_from_solution(sol: PellSolution) -> int:
    """Leading slice of the candidate block: the index of (alpha0, alpha0)."""
    if sol.alpha0 is None:
        raise ValueError(f"solution ({sol.x}, {sol.y}) carries no alpha0")
    return triangular_index(AlphaRho(sol.alpha0, sol.alpha0))
