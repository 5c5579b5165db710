import random

import pytest

from breakout_slopes.blocks import BlockKind, block_from_slices, family_block, is_elementary
from breakout_slopes.stacking import (
    STACKING_PAIRS,
    ForbiddenInterval,
    forbidden_interval,
    pair_offset,
    rho1_class_of,
    stack_abscissa,
    stacks_on,
    zeta,
)

K = BlockKind


def lam(chi):
    return family_block(K.LAMBDA, chi)


def test_zeta_examples():
    assert zeta(lam(138), lam(138)) == 1  # alpha2 = 28 and alpha1' = 22, both even
    assert zeta(lam(3), lam(3)) == 0
    b11 = family_block(K.LAMBDA_2_PLUS, 11)
    assert zeta(b11, b11) == 0  # alpha2 = 7 odd against alpha1' = 6 even


def test_stack_abscissa_examples():
    assert stack_abscissa(lam(138), lam(138)) == 17
    assert stack_abscissa(lam(3), lam(3)) == -1
    assert stack_abscissa(lam(41), lam(41)) == -3


def test_forbidden_interval_examples():
    assert forbidden_interval(lam(138)) == ForbiddenInterval(-15, 14)
    assert forbidden_interval(lam(3)) == ForbiddenInterval(-3, 1)
    assert forbidden_interval(lam(11)) == ForbiddenInterval(-5, 3)
    fi = forbidden_interval(lam(138))
    assert 14 in fi and -15 in fi and 15 not in fi
    # width is alpha2 + 2 cells
    for chi in (3, 11, 138, 232):
        b = lam(chi)
        fi = forbidden_interval(b)
        assert fi.hi - fi.lo + 1 == b.coords[2].alpha + 2


def test_stacks_on_examples():
    v = stacks_on(lam(138), lam(138))
    assert v.stackable and v.xbar == 17 and v.zeta == 1
    v3 = stacks_on(lam(3), lam(3))
    assert not v3.stackable and v3.xbar == -1
    b11 = family_block(K.LAMBDA_2_PLUS, 11)
    assert stacks_on(b11, b11).stackable


def test_stacks_on_requires_elementary_unless_raw():
    blk41 = lam(41)
    assert not is_elementary(blk41)
    with pytest.raises(ValueError):
        stacks_on(blk41, blk41)
    assert stacks_on(blk41, blk41, raw=True).xbar == -3


def test_pair_offset_examples():
    for parity2 in (0, 1):
        for parity1 in (0, 1):
            for cls in ("interior", "zero", "max"):
                assert pair_offset(K.LAMBDA, K.LAMBDA, parity2, parity1, cls) == 0
    assert pair_offset(K.LAMBDA, K.LAMBDA_0_MINUS, 0, 0, "interior") == -1
    assert pair_offset(K.LAMBDA_0_PLUS, K.LAMBDA_0_PLUS, 1, 1, "zero") == 2


def test_pair_offset_rejects_unknown_pairs():
    with pytest.raises(ValueError):
        pair_offset(K.LAMBDA_1_MINUS, K.LAMBDA_2_MINUS, 0, 0, "interior")
    with pytest.raises(ValueError):
        pair_offset(K.LAMBDA, K.LAMBDA, 0, 0, "edge")
    with pytest.raises(ValueError):
        pair_offset(K.LAMBDA, K.LAMBDA, 2, 0, "interior")


def applicable(lower_kind, block):
    # The offset calculus assumes the lower block's last coordinate steps in
    # place; rho2 = 0 never occurs, so only plus-lowers at rho2 = alpha2 drop out.
    a2 = block.coords[2]
    return lower_kind is K.LAMBDA or lower_kind.star < 0 or a2.rho < a2.alpha


def test_offsets_match_direct_differences():
    rng = random.Random(5)
    for chi in [2, 3, 11, 138, 173, 190, 232] + [rng.randrange(2, 5000) for _ in range(40)]:
        base_block = lam(chi)
        a1, a2 = base_block.coords[1], base_block.coords[2]
        cls = rho1_class_of(a1.rho, a1.alpha)
        base = stack_abscissa(base_block, base_block)
        for lower_kind, upper_kind in STACKING_PAIRS:
            if not applicable(lower_kind, base_block):
                continue
            direct = stack_abscissa(family_block(lower_kind, chi), family_block(upper_kind, chi))
            offset = pair_offset(lower_kind, upper_kind, a2.alpha % 2, a1.alpha % 2, cls)
            assert direct - base == offset, (chi, lower_kind, upper_kind)


def test_interval_invariance_for_elementary_lowers():
    for chi in range(2, 1500):
        fi = forbidden_interval(lam(chi))
        for kind, _ in STACKING_PAIRS:
            b = family_block(kind, chi)
            if is_elementary(b):
                assert forbidden_interval(b) == fi, (chi, kind)
