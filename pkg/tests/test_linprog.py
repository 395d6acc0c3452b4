import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from sunlr.linprog import (
    cone_implied,
    eliminate_equalities,
    feasible,
    fourier_motzkin_feasible,
    simplex_feasible,
)


def test_basic_cases():
    assert not feasible([((-1,), 0), ((1,), -1)], [], 1, "fm")
    assert not feasible([((-1,), 0), ((1,), -1)], [], 1, "simplex")
    assert feasible([((-1, 0), 0), ((0, -1), 0)], [((1, 1), 1)], 2)
    assert not feasible([((-1, 0), 0), ((0, -1), 0)], [((1, 1), -1)], 2)


def test_rational_rhs():
    ineqs = [((2,), Fraction(1, 3)), ((-2,), Fraction(1, 3))]
    assert feasible(ineqs, [], 1, "fm")
    assert feasible(ineqs, [], 1, "simplex")
    assert not feasible([((2,), Fraction(-1, 3)), ((-2,), Fraction(-1, 3))], [], 1)


def test_inconsistent_equalities():
    ok, _ = eliminate_equalities([], [((0, 0), 1)], 2)
    assert not ok
    assert not feasible([], [((0, 0), 1)], 2, "fm")


def test_empty_system_is_feasible():
    assert feasible([], [], 3, "fm")
    assert feasible([], [], 0, "simplex")


rows = st.tuples(
    st.lists(st.integers(min_value=-3, max_value=3), min_size=3, max_size=3).map(tuple),
    st.integers(min_value=-4, max_value=4),
)


@given(st.lists(rows, max_size=6), st.lists(rows, max_size=2))
@settings(max_examples=120, deadline=None)
def test_backends_agree(ineqs, eqs):
    assert feasible(ineqs, eqs, 3, "fm") == simplex_feasible(ineqs, eqs, 3)


def test_backends_agree_randomized_larger():
    random.seed(2024)
    for _ in range(120):
        nv = random.randint(1, 5)
        ineqs = [
            (tuple(random.randint(-3, 3) for _ in range(nv)), random.randint(-4, 4))
            for _ in range(random.randint(0, 7))
        ]
        eqs = [
            (tuple(random.randint(-2, 2) for _ in range(nv)), random.randint(-3, 3))
            for _ in range(random.randint(0, 2))
        ]
        assert feasible(ineqs, eqs, nv, "fm") == simplex_feasible(ineqs, eqs, nv), (ineqs, eqs)


def test_cone_implied_basics():
    assert cone_implied((1, 1), [(1, 0), (0, 1)], [], 2)
    assert not cone_implied((1, -1), [(1, 0), (0, 1)], [], 2)
    assert cone_implied((1, -1), [(1, 0)], [(0, 1)], 2)
    assert cone_implied((0, 0), [], [], 2)


def test_cone_implied_matches_primal_feasibility():
    # c implied  <=>  no x with rows.x <= 0, eqs.x = 0, c.x >= 1
    random.seed(5)
    for _ in range(120):
        nv = random.randint(1, 4)
        gens = [tuple(random.randint(-2, 2) for _ in range(nv)) for _ in range(random.randint(0, 5))]
        eqs = [tuple(random.randint(-2, 2) for _ in range(nv)) for _ in range(random.randint(0, 2))]
        c = tuple(random.randint(-2, 2) for _ in range(nv))
        primal = not simplex_feasible(
            [(r, 0) for r in gens] + [(tuple(-x for x in c), -1)],
            [(h, 0) for h in eqs],
            nv,
        )
        assert cone_implied(c, gens, eqs, nv) == primal


def test_fm_drops_unbounded_directions():
    # single inequality in 2 vars: always feasible
    assert fourier_motzkin_feasible([((1, 1), -5)], 2)
