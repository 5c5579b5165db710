"""Exact arithmetic toolkit for elementary slopes of plane-covering breakout.

The plane is tiled by unit bricks except for one missing cell; a ball
launched northeast destroys every brick it hits.  This package classifies
launch slopes whose orbits stack elementary blocks forever, reproduces the
condition-set census and the block search driven by x^2 - 3y^2 = 1, and
cross-checks every claim against an exact brute-force simulation.
"""

from .blocks import (
    AlphaRho,
    BlockFamily,
    BlockKind,
    TernaryBlock,
    block_from_slices,
    excursion_abscissa,
    family_block,
    inverse_triangular,
    is_elementary,
    primary_ordinate_window,
    step_down,
    step_up,
    triangular_index,
)
from .classifier import (
    Condition,
    ElementaryPeriod,
    Reason,
    SlopeVerdict,
    census,
    census_parallel,
    classify_slope,
    condition_holds,
    condition_set,
    necessary_filter,
    ordered_conditions,
    slopes_for_chi,
)
from .kinematics import (
    LatticeDegeneracyError,
    Rational,
    SlicingProfile,
    Slope,
    default_initial_ordinate,
    make_slope,
    slicing_profile,
    slicing_sequence,
    traveling_ordinate,
)
from .pell import PellSolution, chi_from_solution, fundamental_solution, qualifying_solutions
from .simulator import (
    BallState,
    BrickId,
    OrbitEvent,
    PeriodicityReport,
    Simulation,
    detect_relative_periodicity,
    simulate,
    symbolic_orbit,
    traveling_abscissae,
    verify_elementary_sequence,
)
from .stacking import (
    ForbiddenInterval,
    StackVerdict,
    forbidden_interval,
    pair_offset,
    stack_abscissa,
    stacks_on,
    zeta,
)

__all__ = [name for name in dir() if not name.startswith("_")]
