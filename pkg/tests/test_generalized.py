import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sunlr.errors import BudgetExceededError, InvalidInputError, UnsupportedShapeError
from sunlr.generalized import (
    ChainProblem,
    LevelOneSpec,
    evaluate,
    f1,
    f2,
    f_sun,
    level1_f,
    level1_lambdas,
    stretched_table,
)
from sunlr.lr import lr_coefficient
from sunlr.partitions import iter_partition_tuples, stretch

small_partition = st.lists(st.integers(min_value=0, max_value=2), max_size=2).map(
    lambda xs: tuple(sorted(xs, reverse=True))
)


def test_f_sun_spec_values():
    assert f_sun([(1,)] * 4, 1) == 2
    assert f_sun([()] * 4, 1) == 1
    assert f_sun([(1, 0)] * 6, 2) == 2


def test_f_sun_shape_errors():
    with pytest.raises(UnsupportedShapeError):
        f_sun([(1,)] * 5, 1)
    with pytest.raises(UnsupportedShapeError):
        f_sun([(1,)] * 2, 1)


def test_f_sun_nonpartition_is_zero():
    assert f_sun([(0, -1), (0, -1), (), ()], 2) == 0


def test_f_sun_size_balance():
    assert f_sun([(2,), (1,), (1,), (1,)], 1) == 0


def test_f_sun_budget_guard():
    with pytest.raises(BudgetExceededError):
        f_sun([(4, 4, 4)] * 4, 3, budget=3)


def test_f_sun_cyclic_symmetry():
    for lams in [
        [(2, 1), (1, 0), (1, 1), (2, 0), (1, 0), (1, 1)],
        [(1, 1), (2, 0), (2, 1), (1, 0), (1, 0), (1, 1)],
    ]:
        base = f_sun(lams, 2)
        rotated = lams[2:] + lams[:2]
        assert f_sun(rotated, 2) == base
        reflected = [lams[0]] + list(reversed(lams[1:]))  # i -> 2 - i fixes flag 1
        assert f_sun(reflected, 2) == base


def test_f1_spec_values():
    assert f1([(1,)] * 4, 2) == 2
    assert f1([(1,), (1,), (1,), (2,)], 2) == 0
    assert f1([()] * 4, 2) == 1
    with pytest.raises(UnsupportedShapeError):
        f1([(1,)] * 3, 1)


def test_f1_m5_hand_value():
    # sum over a1 of c^{a1}_{(1),(1)} c^{(2)}_{a1,a2} c^{a2}_{(0),(0)}:
    # a2 = (), so a1 = (2) and the only chain contributes 1
    assert f1([(1,), (1,), (2,), (), ()], 2) == 1


def test_f2_spec_values():
    assert f2([(1,), (2, 1), (1, 1)], 3) == 1
    assert f2([(2,), (1,), (1,), (1,)], 2) == 0
    assert f2([()] * 4, 2) == 1
    with pytest.raises(UnsupportedShapeError):
        f2([(1,)] * 2, 1)


@given(small_partition, small_partition, small_partition)
@settings(max_examples=120)
def test_f2_m3_is_single_coefficient(lam, mu, nu):
    assert f2([lam, nu, mu], 2) == lr_coefficient(lam, mu, nu, 2)


def test_level1_spec_values():
    assert level1_f(LevelOneSpec((1, 1, 1, 1)), 1) == 2
    assert level1_f(LevelOneSpec((1, 2, 1, 2)), 5) == 0
    assert level1_f(LevelOneSpec((1, 1, 1, 1)), 3) == 4


def test_level1_shape_and_input_errors():
    with pytest.raises(UnsupportedShapeError):
        level1_f(LevelOneSpec((1, 1, 1)), 1)
    with pytest.raises(InvalidInputError):
        LevelOneSpec((1, -1, 1, 1))
    with pytest.raises(InvalidInputError):
        level1_f(LevelOneSpec((3, 1, 1, 1)), 1, n=2)


def test_level1_matches_chain_engine_exhaustively():
    for m in (4, 6):
        for j in itertools.product(range(3), repeat=m):
            spec = LevelOneSpec(j)
            for N in (1, 2, 3):
                want = f_sun(level1_lambdas(spec, N), 2)
                assert level1_f(spec, N) == want, (j, N)


def test_level1_rectangular_factors_never_exceed_one():
    # every LR factor on column partitions (N^j) is 0 or 1
    from sunlr.partitions import minimum, partitions_in_box

    spec = LevelOneSpec((2, 1, 1, 2, 1, 1))
    for N in (1, 2, 3):
        lams = level1_lambdas(spec, N)
        m = len(lams)
        for i in range(m):
            nu = lams[i]
            bound_a = minimum(lams[(i - 1) % m], nu)
            for a in partitions_in_box(bound_a):
                for b in partitions_in_box(nu):
                    assert lr_coefficient(a, b, nu, 2) <= 1


def test_stretched_tables():
    assert stretched_table(ChainProblem("f_sun", 1, ((1,),) * 4), 3) == [2, 3, 4]
    assert stretched_table(ChainProblem("f_sun", 2, ((),) * 4), 3) == [1, 1, 1]
    assert stretched_table(ChainProblem("f_sun", 2, ((1,),) * 6), 2) == [2, 3]


def test_stretched_zero_pattern():
    for lams in iter_partition_tuples(2, 1, 4):
        vals = stretched_table(ChainProblem("f_sun", 2, lams), 3)
        assert len({v > 0 for v in vals}) == 1, (lams, vals)


def test_chain_problem_validation():
    with pytest.raises(InvalidInputError):
        ChainProblem("f_sun", 1, ((1, 1), (1,), (1,), (1,)))
    with pytest.raises(InvalidInputError):
        ChainProblem("nope", 1, ((1,),) * 4)
    assert evaluate(ChainProblem("f1", 2, ((1,),) * 4)) == 2


@given(st.lists(small_partition, min_size=4, max_size=4), st.sampled_from([2, 3]))
@settings(max_examples=60, deadline=None)
def test_saturation_property(lams, r):
    base = f_sun(lams, 2)
    stretched = f_sun([stretch(l, r) for l in lams], 2)
    assert (base != 0) == (stretched != 0)
