"""Exact event-driven simulation of the brick-covered plane.

Every cell of the integer grid holds a unit brick except (-1, 0).  The ball
launches from (0, y0) travelling northeast; hitting an intact brick destroys
it and reflects the matching velocity component, while already-emptied cells
are traversed.  All positions are integers on a grid rescaled so the motion
runs at 45 degrees, which keeps every comparison exact.

This module is the independent oracle for the block calculus: it never looks
at blocks when stepping, only at bricks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .blocks import TernaryBlock, excursion_abscissa, triangular_index
from .kinematics import LatticeDegeneracyError, Slope

HOLE = (-1, 0)


@dataclass(frozen=True)
class BrickId:
    """Lower-left corner of a brick cell."""

    x: int
    y: int


@dataclass(frozen=True)
class OrbitEvent:
    """One destroyed brick: which, on which edge type, and exactly where."""

    index: int
    brick: BrickId
    edge: str  # "h" or "v"
    hit_point: tuple[Fraction, Fraction]


@dataclass(frozen=True)
class PeriodicityReport:
    """Eventual periodicity of the destroyed-brick sequence, up to translations.

    ``translations`` holds the per-period displacement of each covering
    half-strip (one entry when a single strip covers the orbit, two when the
    ball alternates between two fronts); ``translation`` is the displacement
    of the strip containing event ``preperiod``.  When there is a single
    strip, ``brick(n + period) - brick(n) == translation`` for every n in
    ``[preperiod, preperiod + verified_window]``.
    """

    preperiod: int
    period: int
    translation: tuple[int, int]
    verified_window: int
    translations: tuple[tuple[int, int], ...] = ()

    @property
    def half_strips(self) -> int:
        return len(self.translations)


@dataclass(frozen=True)
class BallState:
    """Snapshot of the ball: exact position and signed direction."""

    position: tuple[Fraction, Fraction]
    direction: tuple[int, int]
    slope: Slope


class Simulation:
    """Mutable stepper advancing the ball one grid-line crossing at a time.

    Internally scaled so columns are ``p*b`` wide and rows ``q*b`` tall
    (b = denominator of y0): the ball then moves one scaled unit right/left
    per scaled unit up/down, and every crossing lands on integers.
    """

    def __init__(self, slope: Slope, y0: Fraction):
        y0 = Fraction(y0)
        if not 0 < y0 < 1:
            raise ValueError(f"launch ordinate must lie in (0, 1), got {y0}")
        self.slope = slope
        b = y0.denominator
        self.col_w = slope.p * b
        self.row_h = slope.q * b
        self.x = 0
        self.y = y0.numerator * slope.q
        self.sx = 1
        self.sy = 1
        self.cell_x = -1
        self.cell_y = 0
        self.distance = 0  # scaled horizontal distance traveled
        self.destroyed: set[tuple[int, int]] = set()

    def position(self) -> tuple[Fraction, Fraction]:
        return (Fraction(self.x, self.col_w), Fraction(self.y, self.row_h))

    def state(self) -> BallState:
        return BallState(self.position(), (self.sx, self.sy), self.slope)

    def is_brick(self, cell: tuple[int, int]) -> bool:
        return cell != HOLE and cell not in self.destroyed

    def step(self) -> tuple[str, tuple[int, int] | None]:
        """Advance to the next grid-line crossing.

        Returns ``(orientation, destroyed_cell)`` where orientation is "v"
        for a vertical line and "h" for a horizontal one; destroyed_cell is
        None when the ball passes into an already-empty cell.
        """
        if self.sx > 0:
            to_v = (self.cell_x + 1) * self.col_w - self.x
        else:
            to_v = self.x - self.cell_x * self.col_w
        if self.sy > 0:
            to_h = (self.cell_y + 1) * self.row_h - self.y
        else:
            to_h = self.y - self.cell_y * self.row_h

        if to_v == to_h:
            px = Fraction(self.x + self.sx * to_v, self.col_w)
            py = Fraction(self.y + self.sy * to_h, self.row_h)
            raise LatticeDegeneracyError(
                f"orbit of {self.slope} meets the lattice point ({px}, {py})"
            )

        if to_v < to_h:
            self.x += self.sx * to_v
            self.y += self.sy * to_v
            self.distance += to_v
            target = (self.cell_x + self.sx, self.cell_y)
            if self.is_brick(target):
                self.destroyed.add(target)
                self.sx = -self.sx
                return ("v", target)
            self.cell_x = target[0]
            return ("v", None)

        self.x += self.sx * to_h
        self.y += self.sy * to_h
        self.distance += to_h
        target = (self.cell_x, self.cell_y + self.sy)
        if self.is_brick(target):
            self.destroyed.add(target)
            self.sy = -self.sy
            return ("h", target)
        self.cell_y = target[1]
        return ("h", None)


def simulate(slope: Slope, y0: Fraction, max_events: int) -> list[OrbitEvent]:
    """Run the breakout orbit until max_events bricks have been destroyed."""
    if max_events <= 0:
        raise ValueError(f"max_events must be positive, got {max_events}")
    sim = Simulation(slope, y0)
    events: list[OrbitEvent] = []
    while len(events) < max_events:
        orientation, cell = sim.step()
        if cell is not None:
            events.append(
                OrbitEvent(
                    index=len(events),
                    brick=BrickId(*cell),
                    edge=orientation,
                    hit_point=sim.position(),
                )
            )
    return events


def symbolic_orbit(events: Iterable[OrbitEvent]) -> str:
    """Word over {a, b}: a for a horizontal-edge hit, b for a vertical one."""
    return "".join("a" if e.edge == "h" else "b" for e in events)


def traveling_abscissae(slope: Slope, y0: Fraction, distances: Sequence[int]) -> dict[int, int]:
    """Exact abscissa of the ball at the given integer horizontal distances.

    Between vertical bounces the abscissa changes by one per unit of
    horizontal distance and every bounce happens at an integer abscissa, so
    the sampled values are integers.
    """
    targets = sorted(set(distances))
    if targets and targets[0] < 0:
        raise ValueError("distances must be non-negative")
    sim = Simulation(slope, y0)
    col_w = sim.col_w
    out: dict[int, int] = {}
    idx = 0
    while idx < len(targets):
        seg_start_t = sim.distance
        seg_start_x = sim.x
        seg_sx = sim.sx
        sim.step()
        while idx < len(targets) and targets[idx] * col_w <= sim.distance:
            scaled = seg_start_x + seg_sx * (targets[idx] * col_w - seg_start_t)
            q, r = divmod(scaled, col_w)
            assert r == 0, "abscissa sampled off the integer grid"
            out[targets[idx]] = q
            idx += 1
    return out


def detect_relative_periodicity(
    events: Sequence[OrbitEvent], min_confirm: int
) -> PeriodicityReport | None:
    """Smallest period (then smallest preperiod) of the destroyed-brick sequence.

    A period P qualifies when the cycle displacement f(n) = z[n+P] - z[n] is
    itself P-periodic from some index on, confirmed over at least
    ``min_confirm * P`` consecutive offsets reaching the end of the event
    list, and the confirmed stretch is no shorter than the irregular head
    (otherwise a straight run at the tail of a short sample would masquerade
    as a tiny period).  For an orbit covered by a single half-strip f is
    eventually constant; when the ball alternates between two drifting fronts
    f takes one constant value per front while the raw difference sequence
    never repeats (the front-to-front jumps grow), so the weaker test is the
    one matching per-half-strip periodicity.  Interleavings whose cycle
    displacements never settle are not reported.
    """
    if min_confirm < 1:
        raise ValueError(f"min_confirm must be >= 1, got {min_confirm}")
    if len(events) < 3 * min_confirm:
        raise ValueError(
            f"need at least {3 * min_confirm} events to confirm, got {len(events)}"
        )
    z = [(e.brick.x, e.brick.y) for e in events]
    n = len(z)
    for period in range(1, (n - 1) // (min_confirm + 2) + 1):
        last = n - 1 - 2 * period  # last offset where f(k) == f(k + period) is testable

        def cycle(k: int) -> tuple[int, int]:
            return (z[k + period][0] - z[k][0], z[k + period][1] - z[k][1])

        pre = last
        while pre > 0 and cycle(pre - 1) == cycle(pre - 1 + period):
            pre -= 1
        if last - pre >= min_confirm * period and pre <= last - pre:
            seen: list[tuple[int, int]] = []
            for k in range(pre, pre + period):
                v = cycle(k)
                if v not in seen:
                    seen.append(v)
            return PeriodicityReport(
                preperiod=pre,
                period=period,
                translation=cycle(pre),
                verified_window=last - pre,
                translations=tuple(seen),
            )
    return None


def verify_elementary_sequence(
    slope: Slope,
    y0: Fraction,
    period_blocks: Sequence[TernaryBlock],
    n_periods: int,
) -> bool:
    """Check, against the raw simulation, that the orbit stacks the given blocks.

    Expands the period n_periods times plus the first block of the next
    period, then verifies at every block boundary that the three
    horizontal-edge abscissae are the excursion abscissae translated from the
    boundary, mirrored when the accumulated excursion count is odd.
    """
    if n_periods < 1:
        raise ValueError(f"n_periods must be >= 1, got {n_periods}")
    if not period_blocks:
        raise ValueError("period_blocks must be non-empty")
    sequence = list(period_blocks) * n_periods + [period_blocks[0]]

    checks: list[tuple[int, int, int, int]] = []  # (base, target, mirror, abscissa)
    base = 0
    excursions = 0
    for block in sequence:
        mirror = -1 if excursions % 2 else 1
        for coord in block.coords:
            checks.append(
                (base, base + triangular_index(coord), mirror, excursion_abscissa(coord))
            )
        base += block.span
        excursions += block.coords[2].alpha + 1

    wanted = sorted({0} | {c[0] for c in checks} | {c[1] for c in checks})
    abscissa = traveling_abscissae(slope, y0, wanted)
    return all(
        abscissa[target] == abscissa[start] + mirror * value
        for start, target, mirror, value in checks
    )
