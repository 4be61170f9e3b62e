import pytest

from epwcalc.llv import (
    CASES,
    SECOND,
    SIXFOLD_EULER,
    T_DIM,
    VERBITSKY,
    betti_even,
    betti_of_quotient,
    euler_of_fixed_locus,
    euler_of_quotient,
    invariant_dimension,
    rep_dimension,
    summand_table,
)

EXPECTED_BETTI = (1, 23, 299, 2554, 299, 23, 1)


def test_rep_dimension():
    assert rep_dimension("sym", 23, 3) == 2300
    assert rep_dimension("sym", 22, 2) == 253
    assert rep_dimension("sym", 22, 3) == 2024
    assert rep_dimension("sym", 7, 0) == 1
    assert rep_dimension("alt", 22) == 231
    assert rep_dimension("alt", 22, 1) == 22
    with pytest.raises(ValueError):
        rep_dimension("spin", 4)
    with pytest.raises(ValueError):
        rep_dimension("sym", -1)


def test_summand_dimensions_fill_the_betti_numbers():
    """Per-degree totals of the summand table are the even Betti numbers;
    these are outputs of the binomial bookkeeping, not inputs."""
    assert betti_even() == EXPECTED_BETTI
    table = summand_table()
    for i, degree in enumerate(range(0, 13, 2)):
        total = sum(s.dimension for s in table if s.degree == degree)
        assert total == EXPECTED_BETTI[i]


def test_component_dimensions_in_the_middle():
    table = summand_table()
    verbitsky6 = sum(s.dimension for s in table
                     if s.degree == 6 and s.component == VERBITSKY)
    second6 = sum(s.dimension for s in table
                  if s.degree == 6 and s.component == SECOND)
    assert verbitsky6 == 2300
    assert second6 == 254
    second4 = sum(s.dimension for s in table
                  if s.degree == 4 and s.component == SECOND)
    assert second4 == T_DIM + 1


def test_signs_flip_exactly_on_the_second_component():
    for s in summand_table():
        assert s.sign_natural in (-1, +1)
        if s.component == SECOND:
            assert s.sign_opposite == -s.sign_natural
        else:
            assert s.sign_opposite == s.sign_natural


def test_invariant_plus_anti_is_total():
    table = summand_table()
    for case in CASES:
        for degree in range(0, 13, 2):
            total = sum(s.dimension for s in table if s.degree == degree)
            inv = invariant_dimension(case, degree)
            anti = sum(s.dimension for s in table
                       if s.degree == degree and s.sign(case) == -1)
            assert inv + anti == total


def test_poincare_duality_of_the_action():
    for case in CASES:
        for degree in (0, 2, 4, 6):
            assert invariant_dimension(case, degree) == \
                invariant_dimension(case, 12 - degree)


def test_reference_invariant_dimensions():
    assert invariant_dimension("natural", 6, VERBITSKY) == 254
    assert invariant_dimension("opposite", 6, VERBITSKY) == 254
    assert invariant_dimension("natural", 6, SECOND) == 232
    assert invariant_dimension("opposite", 6, SECOND) == 22
    with pytest.raises(ValueError):
        invariant_dimension("twisted", 6)
    with pytest.raises(ValueError):
        invariant_dimension("natural", 6, "third")


def test_quotient_betti_numbers():
    assert betti_of_quotient("natural") == (1, 1, 255, 486)
    assert betti_of_quotient("opposite") == (1, 1, 276, 276)


def test_euler_characteristics():
    assert euler_of_quotient("natural") == 1000
    assert euler_of_quotient("opposite") == 832
    assert SIXFOLD_EULER == 3200
    assert euler_of_fixed_locus("natural") == -1200
    assert euler_of_fixed_locus("opposite") == -1536


def test_euler_consistency_over_all_degrees():
    """chi(quotient) computed from the duality-shortened Betti tuple equals
    the straight sum of invariant dimensions over every even degree."""
    for case in CASES:
        full = sum(invariant_dimension(case, d) for d in range(0, 13, 2))
        assert full == euler_of_quotient(case)
