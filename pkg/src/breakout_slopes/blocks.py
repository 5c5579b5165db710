"""Triangular coordinates, ternary blocks and the elementary-block test.

A pair (alpha, rho) with 0 <= rho <= alpha indexes the rho-th cell of the
alpha-th excursion of the ball; its triangular index alpha*(alpha+1)/2 + rho + 1
is the ceiled horizontal distance needed to reach it, and the excursion
abscissa is where the ball sits after traveling that far.  A ternary block
packages the first three horizontal-edge encounters of an orbit, either as
three coordinate pairs or as three slice values.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import isqrt

from .kinematics import Slope


@dataclass(frozen=True)
class AlphaRho:
    """Excursion coordinates: excursion number alpha, cell offset rho."""

    alpha: int
    rho: int

    def __post_init__(self) -> None:
        if self.alpha < 0 or not 0 <= self.rho <= self.alpha:
            raise ValueError(f"need 0 <= rho <= alpha, got ({self.alpha}, {self.rho})")


def triangular_index(a: AlphaRho) -> int:
    """Ceiled horizontal distance to the coordinate pair: alpha*(alpha+1)/2 + rho + 1."""
    return a.alpha * (a.alpha + 1) // 2 + a.rho + 1


def inverse_triangular(n: int) -> AlphaRho:
    """The unique coordinate pair with triangular index n (exact, big-int safe)."""
    if n < 1:
        raise ValueError(f"triangular index must be >= 1, got {n}")
    m = n - 1
    alpha = (isqrt(8 * m + 1) - 1) // 2
    return AlphaRho(alpha, m - alpha * (alpha + 1) // 2)


def excursion_abscissa(a: AlphaRho) -> int:
    """Abscissa of the ball after traveling the pair's triangular index.

    Closed form of the alternating sum over excursions 1..alpha plus the
    signed offset of the final partial excursion.
    """
    if a.alpha % 2 == 0:
        return a.alpha // 2 - (a.rho + 1)
    return -(a.alpha + 1) // 2 + (a.rho + 1)


def step_down(a: AlphaRho) -> AlphaRho:
    """Predecessor in triangular order; wraps (alpha, 0) to (alpha-1, alpha-1)."""
    if a.alpha == 0 and a.rho == 0:
        raise ValueError("(0, 0) has no predecessor")
    if a.rho > 0:
        return AlphaRho(a.alpha, a.rho - 1)
    return AlphaRho(a.alpha - 1, a.alpha - 1)


def step_up(a: AlphaRho) -> AlphaRho:
    """Successor in triangular order; wraps (alpha, alpha) to (alpha+1, 0)."""
    if a.rho < a.alpha:
        return AlphaRho(a.alpha, a.rho + 1)
    return AlphaRho(a.alpha + 1, 0)


class BlockKind(Enum):
    """The block families built from a leading slice chi and its neighbours."""

    LAMBDA = "L"
    LAMBDA_0_MINUS = "L0-"
    LAMBDA_0_PLUS = "L0+"
    LAMBDA_1_MINUS = "L1-"
    LAMBDA_1_PLUS = "L1+"
    LAMBDA_2_MINUS = "L2-"
    LAMBDA_2_PLUS = "L2+"
    LAMBDA_02_MINUS = "L02-"
    LAMBDA_02_PLUS = "L02+"

    @property
    def star(self) -> int:
        """+1 / -1 for the adjusted families, 0 for the plain one."""
        if self is BlockKind.LAMBDA:
            return 0
        return 1 if self.value.endswith("+") else -1

    def slice_triple(self, chi: int) -> tuple[int, int, int]:
        s = self.star
        if self is BlockKind.LAMBDA:
            return (chi, chi, chi)
        if self in (BlockKind.LAMBDA_0_MINUS, BlockKind.LAMBDA_0_PLUS):
            return (chi + s, chi, chi)
        if self in (BlockKind.LAMBDA_1_MINUS, BlockKind.LAMBDA_1_PLUS):
            return (chi, chi + s, chi)
        if self in (BlockKind.LAMBDA_2_MINUS, BlockKind.LAMBDA_2_PLUS):
            return (chi, chi, chi + s)
        return (chi + s, chi, chi + s)


@dataclass(frozen=True)
class BlockFamily:
    """A block family selector: which adjustment pattern, at which leading slice."""

    kind: BlockKind
    chi: int

    def __post_init__(self) -> None:
        if self.chi < 1:
            raise ValueError(f"leading slice must be >= 1, got {self.chi}")


@dataclass(frozen=True)
class TernaryBlock:
    """Three coordinate pairs and the equivalent slice triple."""

    coords: tuple[AlphaRho, AlphaRho, AlphaRho]
    slices: tuple[int, int, int]

    def __post_init__(self) -> None:
        idx = [triangular_index(c) for c in self.coords]
        if not idx[0] < idx[1] < idx[2]:
            raise ValueError(f"coordinate indices must increase strictly, got {idx}")
        if self.slices != (idx[0], idx[1] - idx[0], idx[2] - idx[1]):
            raise ValueError(f"slices {self.slices} do not match coordinates {idx}")

    @property
    def span(self) -> int:
        """Horizontal extent of the block: the last coordinate's triangular index."""
        return triangular_index(self.coords[2])


def block_from_slices(chi0: int, chi1: int, chi2: int) -> TernaryBlock:
    """Build the block whose slice triple is (chi0, chi1, chi2)."""
    if min(chi0, chi1, chi2) < 1:
        raise ValueError(f"slices must be positive, got ({chi0}, {chi1}, {chi2})")
    sums = (chi0, chi0 + chi1, chi0 + chi1 + chi2)
    coords = tuple(inverse_triangular(s) for s in sums)
    return TernaryBlock(coords, (chi0, chi1, chi2))


# How many leading coordinates of each family differ from the plain block:
# the adjusted partial sums are the first k for the 0-family, the last two for
# the 1-family, the last one for the 2-family.
_ADJUSTED_POSITIONS = {
    BlockKind.LAMBDA: (),
    BlockKind.LAMBDA_0_MINUS: (0, 1, 2),
    BlockKind.LAMBDA_0_PLUS: (0, 1, 2),
    BlockKind.LAMBDA_1_MINUS: (1, 2),
    BlockKind.LAMBDA_1_PLUS: (1, 2),
    BlockKind.LAMBDA_2_MINUS: (2,),
    BlockKind.LAMBDA_2_PLUS: (2,),
}


def family_block(family: BlockFamily | BlockKind, chi: int | None = None) -> TernaryBlock:
    """The ternary block of a family at leading slice chi.

    Coordinates come from the slice partial sums; for the singly-adjusted
    families they must agree with stepping the plain block's coordinates,
    which is asserted.
    """
    if isinstance(family, BlockKind):
        if chi is None:
            raise ValueError("family_block(kind, chi) needs an explicit chi")
        family = BlockFamily(family, chi)
    block = block_from_slices(*family.kind.slice_triple(family.chi))
    positions = _ADJUSTED_POSITIONS.get(family.kind)
    if positions is not None and family.kind is not BlockKind.LAMBDA:
        step = step_up if family.kind.star > 0 else step_down
        plain = block_from_slices(*BlockKind.LAMBDA.slice_triple(family.chi))
        for i in range(3):
            want = step(plain.coords[i]) if i in positions else plain.coords[i]
            assert block.coords[i] == want, (family, i, block.coords[i], want)
    return block


def is_elementary(b: TernaryBlock) -> bool:
    """True when the third horizontal edge falls back on the broken top brick.

    Same parity of alpha0 and alpha2 requires alpha2 - 2*rho2 = alpha0 - 2*rho0;
    opposite parities require alpha2 - 2*rho2 = -alpha0 + 2*rho0 + 1.
    """
    a0, _, a2 = b.coords
    if (a0.alpha - a2.alpha) % 2 == 0:
        return a2.alpha - 2 * a2.rho == a0.alpha - 2 * a0.rho
    return a2.alpha - 2 * a2.rho == -a0.alpha + 2 * a0.rho + 1


def primary_ordinate_window(
    b: TernaryBlock, slope: Slope
) -> tuple[Fraction, Fraction] | None:
    """Open interval of launch ordinates for which the orbit runs through b.

    Intersects, over the three slice partial sums s_i, the constraints
    (i+1) < y0 + s_i*S < (i+1) + S together with 0 < y0 < S.  Returns None
    when the intersection is empty.
    """
    s = slope.value
    lo, hi = Fraction(0), s
    partial = 0
    for i, chi in enumerate(b.slices):
        partial += chi
        base = (i + 1) - partial * s
        lo = max(lo, base)
        hi = min(hi, base + s)
    if lo < hi:
        return (lo, hi)
    return None
