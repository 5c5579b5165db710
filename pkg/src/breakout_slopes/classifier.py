"""Condition sets at a leading slice, slope classification and censuses.

Nine conditions can hold at a leading slice chi; each one certifies a family
of slopes as elementary and pins down their periodic block sequences together
with the launch-ordinate windows that realise them.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .blocks import BlockKind, TernaryBlock, family_block, is_elementary
from .kinematics import Slope, make_slope
from .stacking import stacks_on


class Condition(Enum):
    """A self-consistency condition on blocks at a leading slice.

    Declared in canonical display order: minus family, mixed, plus family.
    """

    TWO_MINUS = "2-"
    ONE_MINUS = "1-"
    ZERO_MINUS = "0-"
    E_ZERO_MINUS = "E0-"
    E = "E"
    E_ZERO_PLUS = "E0+"
    ZERO_PLUS = "0+"
    ONE_PLUS = "1+"
    TWO_PLUS = "2+"


_CONDITION_ORDER = {c: i for i, c in enumerate(Condition)}

_SELF_STACK_KIND = {
    Condition.E: BlockKind.LAMBDA,
    Condition.ZERO_MINUS: BlockKind.LAMBDA_0_MINUS,
    Condition.ZERO_PLUS: BlockKind.LAMBDA_0_PLUS,
    Condition.ONE_MINUS: BlockKind.LAMBDA_1_MINUS,
    Condition.ONE_PLUS: BlockKind.LAMBDA_1_PLUS,
    Condition.TWO_MINUS: BlockKind.LAMBDA_2_MINUS,
    Condition.TWO_PLUS: BlockKind.LAMBDA_2_PLUS,
}


def ordered_conditions(conditions: frozenset[Condition] | set[Condition]) -> list[Condition]:
    """Members of a condition set in canonical display order."""
    return sorted(conditions, key=_CONDITION_ORDER.__getitem__)


def _self_stackable(kind: BlockKind, chi: int) -> bool:
    block = family_block(kind, chi)
    return is_elementary(block) and stacks_on(block, block).stackable


def _mutually_stackable(star: int, chi: int) -> bool:
    kind = BlockKind.LAMBDA_0_PLUS if star > 0 else BlockKind.LAMBDA_0_MINUS
    plain = family_block(BlockKind.LAMBDA, chi)
    zero = family_block(kind, chi)
    if not (is_elementary(plain) and is_elementary(zero)):
        return False
    return stacks_on(zero, plain).stackable and stacks_on(plain, zero).stackable


def condition_holds(condition: Condition, chi: int) -> bool:
    """Evaluate one condition at leading slice chi."""
    if chi < 1:
        raise ValueError(f"leading slice must be >= 1, got {chi}")
    if condition is Condition.E_ZERO_MINUS:
        return _mutually_stackable(-1, chi)
    if condition is Condition.E_ZERO_PLUS:
        return _mutually_stackable(+1, chi)
    return _self_stackable(_SELF_STACK_KIND[condition], chi)


def condition_set(chi: int) -> frozenset[Condition]:
    """All conditions holding at leading slice chi (chi >= 2)."""
    if chi < 2:
        raise ValueError(f"leading slice must be >= 2, got {chi}")
    return frozenset(c for c in Condition if condition_holds(c, chi))


def necessary_filter(slope: Slope) -> bool:
    """Cheap arithmetic gate every elementary slope passes."""
    if slope.p == 1:
        return True
    if slope.p % 3 != 0:
        return False
    return slope.q % slope.p in (1, slope.p - 1)


class Reason(Enum):
    FAILS_NECESSARY = "FailsNecessary"
    NO_CONDITION_HOLDS = "NoConditionHolds"
    ELEMENTARY = "Elementary"


@dataclass(frozen=True)
class ElementaryPeriod:
    """One period of an elementary block sequence with its ordinate window."""

    kinds: tuple[BlockKind, ...]
    chi: int
    window: tuple[Fraction, Fraction]

    def blocks(self) -> tuple[TernaryBlock, ...]:
        return tuple(family_block(kind, self.chi) for kind in self.kinds)

    def describe(self) -> str:
        return "(" + " ".join(kind.value for kind in self.kinds) + ")^inf"


@dataclass(frozen=True)
class SlopeVerdict:
    slope: Slope
    elementary: bool
    reason: Reason
    periods: tuple[ElementaryPeriod, ...]


def _window(num_lo: int, num_hi: int, q: int) -> tuple[Fraction, Fraction]:
    return (Fraction(num_lo, q), Fraction(num_hi, q))


# Launch windows of the single-block periods for the slopes 3/(3*chi +- 1):
# numerators of the window over denominator q, keyed by (star, family index).
_SINGLE_BLOCK_WINDOWS = {
    (-1, 0): (2, 3),
    (-1, 1): (1, 2),
    (-1, 2): (0, 1),
    (+1, 0): (0, 1),
    (+1, 1): (1, 2),
    (+1, 2): (2, 3),
}

_FAMILY_BY_INDEX = {
    (-1, 0): BlockKind.LAMBDA_0_MINUS,
    (-1, 1): BlockKind.LAMBDA_1_MINUS,
    (-1, 2): BlockKind.LAMBDA_2_MINUS,
    (+1, 0): BlockKind.LAMBDA_0_PLUS,
    (+1, 1): BlockKind.LAMBDA_1_PLUS,
    (+1, 2): BlockKind.LAMBDA_2_PLUS,
}

_SINGLE_CONDITIONS = {
    (-1, 0): Condition.ZERO_MINUS,
    (-1, 1): Condition.ONE_MINUS,
    (-1, 2): Condition.TWO_MINUS,
    (+1, 0): Condition.ZERO_PLUS,
    (+1, 1): Condition.ONE_PLUS,
    (+1, 2): Condition.TWO_PLUS,
}


def classify_slope(slope: Slope) -> SlopeVerdict:
    """Decide elementarity of a slope and list every realising period."""
    if not necessary_filter(slope):
        return SlopeVerdict(slope, False, Reason.FAILS_NECESSARY, ())

    periods: list[ElementaryPeriod] = []
    if slope.p == 1:
        chi = slope.q
        if condition_holds(Condition.E, chi):
            periods.append(
                ElementaryPeriod((BlockKind.LAMBDA,), chi, (Fraction(0), slope.value))
            )
    else:
        j = slope.p // 3
        if slope.q % slope.p == 1:
            star, chi = +1, (slope.q - 1) // slope.p
        else:
            star, chi = -1, (slope.q + 1) // slope.p
        if j == 1:
            for index in (0, 1, 2):
                key = (star, index)
                if condition_holds(_SINGLE_CONDITIONS[key], chi):
                    periods.append(
                        ElementaryPeriod(
                            (_FAMILY_BY_INDEX[key],),
                            chi,
                            _window(*_SINGLE_BLOCK_WINDOWS[key], slope.q),
                        )
                    )
        else:
            mutual = Condition.E_ZERO_PLUS if star > 0 else Condition.E_ZERO_MINUS
            if condition_holds(mutual, chi):
                zero_kind = (
                    BlockKind.LAMBDA_0_PLUS if star > 0 else BlockKind.LAMBDA_0_MINUS
                )
                kinds = (BlockKind.LAMBDA,) * (j - 1) + (zero_kind,)
                if star > 0:
                    window = _window(3 * j - 3, 3 * j - 2, slope.q)
                else:
                    window = _window(2, 3, slope.q)
                periods.append(ElementaryPeriod(kinds, chi, window))

    if periods:
        return SlopeVerdict(slope, True, Reason.ELEMENTARY, tuple(periods))
    return SlopeVerdict(slope, False, Reason.NO_CONDITION_HOLDS, ())


def census(chi_lo: int, chi_hi: int) -> dict[int, frozenset[Condition]]:
    """Leading slices in [chi_lo, chi_hi] with a non-empty condition set."""
    if not 2 <= chi_lo <= chi_hi:
        raise ValueError(f"need 2 <= lo <= hi, got [{chi_lo}, {chi_hi}]")
    out: dict[int, frozenset[Condition]] = {}
    for chi in range(chi_lo, chi_hi + 1):
        found = condition_set(chi)
        if found:
            out[chi] = found
    return out


def _census_chunk(bounds: tuple[int, int]) -> dict[int, frozenset[Condition]]:
    return census(*bounds)


def census_parallel(chi_lo: int, chi_hi: int, jobs: int) -> dict[int, frozenset[Condition]]:
    """Range-partitioned census; the merge is order-independent and exact."""
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    if not 2 <= chi_lo <= chi_hi:
        raise ValueError(f"need 2 <= lo <= hi, got [{chi_lo}, {chi_hi}]")
    if jobs == 1:
        return census(chi_lo, chi_hi)
    span = chi_hi - chi_lo + 1
    chunk = -(-span // jobs)
    bounds = [
        (lo, min(lo + chunk - 1, chi_hi))
        for lo in range(chi_lo, chi_hi + 1, chunk)
    ]
    merged: dict[int, frozenset[Condition]] = {}
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_census_chunk, bounds):
            merged.update(part)
    return dict(sorted(merged.items()))


def slopes_for_chi(chi: int, max_q: int) -> list[Slope]:
    """Every slope whose elementarity the conditions at chi certify, up to max_q."""
    found = condition_set(chi)
    slopes: list[Slope] = []
    if Condition.E in found and chi <= max_q:
        slopes.append(make_slope(1, chi))
    for star in (-1, +1):
        singles = [c for c in (_SINGLE_CONDITIONS[(star, i)] for i in (0, 1, 2)) if c in found]
        q = 3 * chi + star
        if singles and q <= max_q:
            slopes.append(make_slope(3, q))
        mutual = Condition.E_ZERO_PLUS if star > 0 else Condition.E_ZERO_MINUS
        if mutual in found:
            j = 2
            while 3 * j * chi + star <= max_q:
                slopes.append(make_slope(3 * j, 3 * j * chi + star))
                j += 1
    return slopes
