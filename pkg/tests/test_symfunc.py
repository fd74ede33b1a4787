import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weylpark.combinatorics import Partition
from weylpark.degeneration import degree_formula
from weylpark.symfunc import (
    SchurExpansion,
    e_product_to_schur,
    evaluate_poly,
    frobenius_character,
    gl_dimension,
    kostka,
    total_dimension,
    weight_multiplicity,
)


def brute_kostka(lam, eta):
    """Count fillings with weakly increasing rows and strictly increasing columns."""
    lam = list(Partition(lam))
    cells = [(i, j) for i, row in enumerate(lam) for j in range(row)]
    letters = [v for v, m in enumerate(eta, start=1) for _ in range(m)]
    if len(letters) != len(cells):
        return 0
    count = 0
    for perm in set(itertools.permutations(letters)):
        t = dict(zip(cells, perm))
        rows = all(t[(i, j)] <= t[(i, j + 1)] for i, j in cells if (i, j + 1) in t)
        cols = all(t[(i, j)] < t[(i + 1, j)] for i, j in cells if (i + 1, j) in t)
        count += rows and cols
    return count


def compositions(n, r):
    for cut in itertools.combinations(range(n + r - 1), r - 1):
        bounds = (-1,) + cut + (n + r - 1,)
        yield tuple(bounds[i + 1] - bounds[i] - 1 for i in range(r))


def test_e_product_examples():
    assert e_product_to_schur((1, 1), 2) == SchurExpansion({(2,): 1, (1, 1): 1})
    assert e_product_to_schur((2,), 2) == SchurExpansion({(1, 1): 1})
    assert not e_product_to_schur((2,), 1)


@given(st.integers(1, 4).flatmap(lambda r: st.tuples(st.just(r), st.lists(st.integers(0, r), max_size=4))), st.randoms(use_true_random=False))
def test_e_product_is_commutative(case, rnd):
    r, a = case
    b = list(a)
    rnd.shuffle(b)
    assert e_product_to_schur(a, r) == e_product_to_schur(b, r)


def test_homogeneity_is_enforced():
    exp = SchurExpansion({(2,): 1})
    with pytest.raises(ValueError):
        exp.add_term((1,), 1)


def test_frobenius_examples():
    for r in (1, 2, 3):
        assert frobenius_character((1,), r) == SchurExpansion({(1,): 1})
    exp = frobenius_character((2, 0), 2)
    assert exp.coefficient((2,)) == {0: 1}
    assert exp.coefficient((1, 1)) == {0: 1, 1: 1}
    assert frobenius_character((1, 1), 2) == SchurExpansion({(1, 1): 1})
    with pytest.raises(ValueError):
        frobenius_character((1, 1, 1), 2)


def test_frobenius_degree_zero_part():
    # s_xi occurs once in degree 0 and everything else there is dominated by xi
    for xi, r in [((2, 0), 2), ((3, 0), 2), ((2, 1, 0), 3), ((3, 1), 2), ((2, 2), 2)]:
        low = frobenius_character(xi, r).at_degree(0)
        assert low[Partition(xi)] == 1
        assert all(Partition(xi).dominates(lam) for lam in low)


@pytest.mark.parametrize(
    "lam, eta, value",
    [((2, 1), (1, 1, 1), 2), ((2, 1), (2, 1), 1), ((1, 1), (2, 0), 0), ((2,), (1, -1, 2), 0)],
)
def test_kostka_examples(lam, eta, value):
    assert kostka(lam, eta) == value


@given(
    st.lists(st.integers(1, 3), max_size=3).map(lambda xs: Partition(sorted(xs, reverse=True))),
    st.integers(1, 3),
    st.randoms(use_true_random=False),
)
def test_kostka_matches_tableau_count(lam, r, rnd):
    etas = list(compositions(lam.size, r))
    eta = rnd.choice(etas)
    assert kostka(lam, eta) == brute_kostka(lam, eta)


def test_weight_multiplicity_examples():
    exp = frobenius_character((2, 0), 2)
    assert evaluate_poly(weight_multiplicity(exp, (1, 1))) == 3
    assert weight_multiplicity(exp, (3, -1)) == {}
    assert weight_multiplicity(SchurExpansion({(2, 1): 1}), (2, 1)) == {0: 1}


def test_total_dimension_examples():
    assert total_dimension(SchurExpansion({(1,): 1}), 3) == {0: 3}
    assert evaluate_poly(total_dimension(frobenius_character((3, 0, 0), 3), 3)) == 55
    assert evaluate_poly(total_dimension(frobenius_character((2, 0), 2), 2)) == 5
    assert gl_dimension((1, 1), 3) == 3


@pytest.mark.parametrize("xi, r", [((2, 1), 2), ((3, 0, 0), 3), ((2, 1, 1), 3), ((4, 0), 2), ((2, 2, 0), 3)])
def test_weight_multiplicities_sum_to_total(xi, r):
    exp = frobenius_character(xi, r)
    total: dict = {}
    for eta in compositions(sum(xi), r):
        for d, c in weight_multiplicity(exp, eta).items():
            total[d] = total.get(d, 0) + c
    assert total == total_dimension(exp, r)


@pytest.mark.parametrize("xi, r", [((2, 0), 2), ((3, 0), 2), ((4, 0), 2), ((3, 0, 0), 3), ((2, 1, 0), 3), ((3, 2), 2)])
def test_frobenius_x_degree_is_degree_formula(xi, r):
    assert frobenius_character(xi, r).max_degree() == degree_formula(xi, r)
