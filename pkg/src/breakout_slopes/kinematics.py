"""Exact rational slopes, the traveling ordinate, and slicing sequences.

Everything here is integer / ``fractions.Fraction`` arithmetic; no floats.
The traveling ordinate of an orbit rises linearly with the horizontal
distance, and the slicing sequence records how many vertical grid lines are
crossed between consecutive horizontal ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

# Exact rational scalar used throughout the library.
Rational = Fraction


class LatticeDegeneracyError(ValueError):
    """The orbit runs through a point with two integer coordinates."""


@dataclass(frozen=True)
class Slope:
    """A reduced fraction p/q in (0, 1): the launch direction of the ball."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p <= 0 or self.q <= 0:
            raise ValueError(f"slope needs positive numerator and denominator, got {self.p}/{self.q}")
        if self.p >= self.q:
            raise ValueError(f"slope must lie in (0, 1), got {self.p}/{self.q}")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"slope must be reduced, got {self.p}/{self.q}")

    @property
    def value(self) -> Fraction:
        return Fraction(self.p, self.q)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


def make_slope(p: int, q: int) -> Slope:
    """Reduce p/q and validate that it lies in (0, 1)."""
    if p <= 0 or q <= 0:
        raise ValueError(f"slope needs positive integers, got {p}/{q}")
    g = gcd(p, q)
    return Slope(p // g, q // g)


@dataclass(frozen=True)
class SlicingProfile:
    """Structural statistics of the slicing sequences of one slope.

    ``1 = lambda0*S + mu0`` ties the base slice length to the slope; slices
    take only the values ``lambda0`` and ``lambda0 + 1``.  ``leading`` is the
    more frequent of the two, ``correcting`` the rarer.  For single-slice
    slopes 1/chi the relation is exact (``mu0 = 0``) and the correcting slice
    along with the second-level statistics is absent.
    """

    lambda0: int
    mu0: Fraction
    leading: int
    correcting: int | None
    lambda1: int | None
    mu1: Fraction | None
    s_prime: Fraction | None


def traveling_ordinate(slope: Slope, y0: Fraction, n: int) -> Fraction:
    """Ordinate after a horizontal distance n, in the vertically unfolded picture."""
    y0 = Fraction(y0)
    if not 0 < y0 < slope.value:
        raise ValueError(f"initial ordinate must lie in (0, {slope}), got {y0}")
    return y0 + slope.value * n


def slicing_profile(slope: Slope) -> SlicingProfile:
    """Compute slice values, leading/correcting assignment and gap statistics."""
    p, q = slope.p, slope.q
    if p == 1:
        # 1 = q*S exactly: the single slice q repeats forever.
        return SlicingProfile(
            lambda0=q,
            mu0=Fraction(0),
            leading=q,
            correcting=None,
            lambda1=None,
            mu1=None,
            s_prime=None,
        )

    lambda0 = q // p
    r = q % p  # mu0 = r/q, so slices split r : (p - r) between lambda0+1 and lambda0
    mu0 = Fraction(r, q)
    # Per period of p slices, lambda0 occurs p - r times and lambda0 + 1 occurs
    # r times.  A tie (2r == p) happens only for p == 2; pick lambda0 + 1 then.
    if 2 * r < p:
        leading, correcting = lambda0, lambda0 + 1
    else:
        leading, correcting = lambda0 + 1, lambda0

    s_prime = min(Fraction(p - r, r), Fraction(r, p - r))
    inv = 1 / s_prime  # frequency of leading relative to correcting, >= 1
    lambda1 = inv.numerator // inv.denominator
    mu1 = 1 - lambda1 * s_prime
    return SlicingProfile(
        lambda0=lambda0,
        mu0=mu0,
        leading=leading,
        correcting=correcting,
        lambda1=lambda1,
        mu1=mu1,
        s_prime=s_prime,
    )


def slicing_sequence(slope: Slope, y0: Fraction, count: int) -> list[int]:
    """First ``count`` slice values for the orbit launched at ordinate y0.

    Each partial sum s_N of the output satisfies
    ``y0 + s_N * S in (N+1, N+1+S)`` with both bounds excluded.  A crossing
    that lands exactly on an integer ordinate is a lattice degeneracy.
    """
    y0 = Fraction(y0)
    if not 0 < y0 < slope.value:
        raise ValueError(f"initial ordinate must lie in (0, {slope}), got {y0}")
    if count < 0:
        raise ValueError("count must be non-negative")

    inv_s = Fraction(slope.q, slope.p)
    out: list[int] = []
    prev = 0
    for n in range(count):
        t = (n + 1 - y0) * inv_s
        if t.denominator == 1:
            raise LatticeDegeneracyError(
                f"orbit of {slope} from {y0} meets the lattice at horizontal distance {t}"
            )
        s = t.numerator // t.denominator + 1
        out.append(s - prev)
        prev = s
    return out


def default_initial_ordinate(
    slope: Slope, window: tuple[Fraction, Fraction] | None = None
) -> Fraction:
    """Deterministic ordinate inside ``window`` whose orbit avoids the lattice.

    Starts from the window midpoint and, while the reduced denominator divides
    q (the one way an orbit ordinate can ever become an integer), nudges by
    1/(2*q*D) where D is the common denominator of the window bounds.  At most
    8 nudges are attempted.
    """
    if window is None:
        window = (Fraction(0), slope.value)
    lo, hi = Fraction(window[0]), Fraction(window[1])
    if not lo < hi:
        raise ValueError(f"empty ordinate window ({lo}, {hi})")
    d = lcm(lo.denominator, hi.denominator)
    y = (lo + hi) / 2
    step = Fraction(1, 2 * slope.q * d)
    for _ in range(8):
        if not lo < y < hi:
            break
        if slope.q % y.denominator != 0:
            return y
        y += step
    raise LatticeDegeneracyError(
        f"no lattice-avoiding ordinate found near the midpoint of ({lo}, {hi}) for {slope}"
    )
