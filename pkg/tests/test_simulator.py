from fractions import Fraction

import pytest

from breakout_slopes.blocks import BlockKind, block_from_slices, family_block, triangular_index
from breakout_slopes.classifier import classify_slope
from breakout_slopes.kinematics import (
    LatticeDegeneracyError,
    default_initial_ordinate,
    make_slope,
    slicing_sequence,
)
from breakout_slopes.simulator import (
    HOLE,
    BrickId,
    Simulation,
    detect_relative_periodicity,
    simulate,
    symbolic_orbit,
    traveling_abscissae,
    verify_elementary_sequence,
)


def test_first_event_is_the_origin_brick():
    s = make_slope(3, 34)
    events = simulate(s, Fraction(5, 68), 5)
    first = events[0]
    assert first.brick == BrickId(0, 0)
    assert first.edge == "v"
    assert first.hit_point == (Fraction(0), Fraction(5, 68))


def test_simulate_validates_inputs():
    s = make_slope(1, 3)
    with pytest.raises(ValueError):
        simulate(s, Fraction(1, 7), 0)
    with pytest.raises(ValueError):
        simulate(s, Fraction(3, 2), 5)
    with pytest.raises(LatticeDegeneracyError):
        simulate(make_slope(1, 2), Fraction(1, 2), 5)  # runs into the corner (-1, 1)


def test_conservation():
    s = make_slope(1, 3)
    events = simulate(s, Fraction(1, 7), 600)
    bricks = [(e.brick.x, e.brick.y) for e in events]
    assert HOLE not in bricks
    assert len(set(bricks)) == len(bricks)
    assert [e.index for e in events] == list(range(600))


def test_unfolded_ordinate_rises_one_per_horizontal_crossing():
    s = make_slope(3, 34)
    y0 = Fraction(5, 68)
    sim = Simulation(s, y0)
    crossings = 0
    for _ in range(400):
        orientation, _ = sim.step()
        if orientation == "h":
            crossings += 1
            t = Fraction(sim.distance, sim.col_w)
            assert y0 + s.value * t == crossings


def test_slicing_agreement():
    for p, q, y0 in [
        (3, 34, Fraction(5, 68)),
        (3, 34, Fraction(1, 68)),
        (1, 41, Fraction(1, 100)),
        (6, 827, Fraction(5, 1654)),
        (2, 5, Fraction(1, 10)),
    ]:
        s = make_slope(p, q)
        want = slicing_sequence(s, y0, 9)
        sim = Simulation(s, y0)
        got, run = [], 0
        while len(got) < 9:
            orientation, _ = sim.step()
            if orientation == "v":
                run += 1
            else:
                got.append(run)
                run = 0
        assert got == want, (p, q)


def test_first_block_abscissae_match_excursion_values():
    for p, q, y0 in [
        (1, 41, Fraction(1, 100)),
        (3, 34, Fraction(5, 68)),
        (1, 138, Fraction(1, 276)),
        (2, 5, Fraction(1, 10)),
    ]:
        s = make_slope(p, q)
        block = block_from_slices(*slicing_sequence(s, y0, 3))
        distances = [triangular_index(c) for c in block.coords]
        got = traveling_abscissae(s, y0, distances)
        for coord, dist in zip(block.coords, distances):
            from breakout_slopes.blocks import excursion_abscissa

            assert got[dist] == excursion_abscissa(coord)


def test_third_horizontal_touch_misses_top_brick_for_1_41():
    s = make_slope(1, 41)
    sim = Simulation(s, Fraction(1, 100))
    touches = []
    while len(touches) < 3:
        orientation, destroyed = sim.step()
        if orientation == "h":
            touches.append((destroyed, (sim.cell_x, sim.cell_y)))
    top = touches[0][0]
    third_destroyed, _ = touches[2]
    assert top is not None
    assert third_destroyed is not None  # a fresh brick, so the block is not elementary
    assert third_destroyed != top


def test_third_horizontal_touch_reenters_top_brick_for_1_138():
    s = make_slope(1, 138)
    sim = Simulation(s, Fraction(1, 276))
    touches = []
    while len(touches) < 3:
        orientation, destroyed = sim.step()
        if orientation == "h":
            touches.append((destroyed, (sim.cell_x, sim.cell_y)))
    top = touches[0][0]
    third_destroyed, third_cell = touches[2]
    assert third_destroyed is None  # pass-through: the edge belongs to the broken top brick
    assert third_cell == top


def test_symbolic_orbit():
    assert symbolic_orbit([]) == ""
    s = make_slope(1, 3)
    word = symbolic_orbit(simulate(s, Fraction(1, 7), 40))
    assert word[0] == "b"
    assert set(word) <= {"a", "b"}


def test_periodicity_1_138():
    s = make_slope(1, 138)
    events = simulate(s, Fraction(1, 276), 3 * 138)
    report = detect_relative_periodicity(events, 3)
    assert report is not None
    assert report.preperiod == 0
    # Consecutive blocks are mirror images, so one period covers two blocks
    # and climbs two rows.
    assert report.period == 62
    assert report.translation == (0, 2)
    assert report.translations == ((0, 2),)
    assert report.half_strips == 1


def test_periodicity_1_3_needs_a_preperiod():
    s = make_slope(1, 3)
    events = simulate(s, Fraction(1, 7), 500)
    report = detect_relative_periodicity(events, 3)
    assert report is not None
    assert report.preperiod > 0
    assert report.half_strips == 2
    # Two fronts drifting in opposite directions.
    a, b = report.translations
    assert (b[0], b[1]) == (-a[0], -a[1])


def test_periodicity_1_2_two_half_strips():
    events = simulate(make_slope(1, 2), Fraction(1, 5), 300)
    report = detect_relative_periodicity(events, 3)
    assert report is not None
    assert report.half_strips == 2


def test_periodicity_validates_input():
    events = simulate(make_slope(1, 3), Fraction(1, 7), 8)
    with pytest.raises(ValueError):
        detect_relative_periodicity(events, 3)
    with pytest.raises(ValueError):
        detect_relative_periodicity(events, 0)


def test_verify_elementary_sequences():
    s = make_slope(1, 138)
    (per,) = classify_slope(s).periods
    y0 = default_initial_ordinate(s, per.window)
    assert verify_elementary_sequence(s, y0, per.blocks(), 3)

    s34 = make_slope(3, 34)
    (per34,) = classify_slope(s34).periods
    assert verify_elementary_sequence(s34, Fraction(5, 68), per34.blocks(), 3)

    s13 = make_slope(1, 3)
    lam3 = (family_block(BlockKind.LAMBDA, 3),)
    assert not verify_elementary_sequence(s13, Fraction(1, 7), lam3, 1)


def test_verify_validates_input():
    s = make_slope(1, 138)
    blocks = (family_block(BlockKind.LAMBDA, 138),)
    with pytest.raises(ValueError):
        verify_elementary_sequence(s, Fraction(1, 276), blocks, 0)
    with pytest.raises(ValueError):
        verify_elementary_sequence(s, Fraction(1, 276), (), 3)
