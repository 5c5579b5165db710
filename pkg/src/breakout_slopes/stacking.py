"""Stackability of one ternary block on top of another.

The candidate abscissa of the upper block's bottom brick is compared against
the closed interval of cells emptied by the lower block; stacking succeeds
exactly when it falls outside.  The pairwise offset calculus reproduces that
abscissa for every block pair from the plain self-stacking one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .blocks import BlockKind, TernaryBlock, excursion_abscissa, is_elementary


@dataclass(frozen=True)
class ForbiddenInterval:
    """Closed integer interval blocked by the lower block (width alpha2 + 2)."""

    lo: int
    hi: int

    def __contains__(self, x: int) -> bool:
        return self.lo <= x <= self.hi


@dataclass(frozen=True)
class StackVerdict:
    xbar: int
    zeta: int
    interval: ForbiddenInterval
    stackable: bool


def zeta(lower: TernaryBlock, upper: TernaryBlock) -> int:
    """1 when the candidate abscissa points at the bottom brick's right edge."""
    return 1 if (lower.coords[2].alpha - upper.coords[1].alpha) % 2 == 0 else 0


def stack_abscissa(lower: TernaryBlock, upper: TernaryBlock) -> int:
    """Left-edge abscissa of the upper block's bottom brick over the lower block."""
    sign = -1 if lower.coords[2].alpha % 2 == 0 else 1  # (-1)^(alpha2+1)
    return (
        excursion_abscissa(lower.coords[2])
        + sign * excursion_abscissa(upper.coords[1])
        - zeta(lower, upper)
    )


def forbidden_interval(lower: TernaryBlock) -> ForbiddenInterval:
    """Cells the lower block has already emptied around its top brick."""
    a2 = lower.coords[2].alpha
    if a2 % 2 == 0:
        return ForbiddenInterval(-a2 // 2 - 1, a2 // 2)
    return ForbiddenInterval(-(a2 + 1) // 2 - 1, (a2 - 1) // 2)


def stacks_on(upper: TernaryBlock, lower: TernaryBlock, raw: bool = False) -> StackVerdict:
    """Decide whether ``upper`` stacks on top of ``lower``.

    Both blocks must be elementary unless ``raw`` is set (raw mode exists for
    exploratory tests only).
    """
    if not raw:
        for b in (lower, upper):
            if not is_elementary(b):
                raise ValueError(f"stacking requires elementary blocks; {b.slices} is not")
    xbar = stack_abscissa(lower, upper)
    interval = forbidden_interval(lower)
    return StackVerdict(
        xbar=xbar,
        zeta=zeta(lower, upper),
        interval=interval,
        stackable=xbar not in interval,
    )


# The eleven block pairs that can occur in an elementary sequence: the seven
# self-stackings plus both orders of plain-with-0-family.
STACKING_PAIRS: tuple[tuple[BlockKind, BlockKind], ...] = (
    (BlockKind.LAMBDA, BlockKind.LAMBDA),
    (BlockKind.LAMBDA_0_MINUS, BlockKind.LAMBDA_0_MINUS),
    (BlockKind.LAMBDA_0_PLUS, BlockKind.LAMBDA_0_PLUS),
    (BlockKind.LAMBDA_1_MINUS, BlockKind.LAMBDA_1_MINUS),
    (BlockKind.LAMBDA_1_PLUS, BlockKind.LAMBDA_1_PLUS),
    (BlockKind.LAMBDA_2_MINUS, BlockKind.LAMBDA_2_MINUS),
    (BlockKind.LAMBDA_2_PLUS, BlockKind.LAMBDA_2_PLUS),
    (BlockKind.LAMBDA, BlockKind.LAMBDA_0_MINUS),
    (BlockKind.LAMBDA, BlockKind.LAMBDA_0_PLUS),
    (BlockKind.LAMBDA_0_MINUS, BlockKind.LAMBDA),
    (BlockKind.LAMBDA_0_PLUS, BlockKind.LAMBDA),
)

# Upper blocks whose middle coordinate is the stepped one; only these shift
# the candidate abscissa through the upper block.
_MIDDLE_ADJUSTED = {
    BlockKind.LAMBDA_0_MINUS,
    BlockKind.LAMBDA_0_PLUS,
    BlockKind.LAMBDA_1_MINUS,
    BlockKind.LAMBDA_1_PLUS,
}

RHO1_CLASSES = ("interior", "zero", "max")


def rho1_class_of(rho1: int, alpha1: int) -> str:
    if rho1 == 0:
        return "zero"
    if rho1 == alpha1:
        return "max"
    return "interior"


def pair_offset(
    lower_kind: BlockKind,
    upper_kind: BlockKind,
    alpha2_parity: int,
    alpha1_parity: int,
    rho1_class: str,
) -> int:
    """Candidate-abscissa offset of a block pair relative to the plain pair.

    Parities are those of the plain block's last and middle coordinates
    (0 even, 1 odd); ``rho1_class`` places the plain middle offset at an
    interior value, at 0 or at alpha1.  The offset is eps0 + eps1: eps0 is the
    lower block's shift of the emptied span, eps1 the upper block's shift of
    its bottom brick, present only when the middle coordinate steps in place.
    """
    if (lower_kind, upper_kind) not in STACKING_PAIRS:
        raise ValueError(f"unsupported block pair ({lower_kind}, {upper_kind})")
    if alpha2_parity not in (0, 1) or alpha1_parity not in (0, 1):
        raise ValueError("parities must be 0 (even) or 1 (odd)")
    if rho1_class not in RHO1_CLASSES:
        raise ValueError(f"rho1_class must be one of {RHO1_CLASSES}, got {rho1_class!r}")

    eps0 = 0
    if lower_kind is not BlockKind.LAMBDA:
        # star * (-1)^(alpha2 + 1)
        eps0 = lower_kind.star * (1 if alpha2_parity == 1 else -1)

    eps1 = 0
    if upper_kind in _MIDDLE_ADJUSTED:
        in_place = rho1_class != ("zero" if upper_kind.star < 0 else "max")
        if in_place:
            # star * (-1)^(alpha2 + alpha1)
            eps1 = upper_kind.star * (1 if (alpha2_parity + alpha1_parity) % 2 == 0 else -1)
    return eps0 + eps1
