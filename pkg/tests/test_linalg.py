from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from weylpark.linalg import Echelon, GradedSubspace, primitive


def fraction_rank(rows, keys):
    m = [[Fraction(r.get(k, 0)) for k in keys] for r in rows]
    rank = 0
    for col in range(len(keys)):
        pivot = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col] / m[rank][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


vectors = st.dictionaries(st.integers(0, 5), st.integers(-4, 4), max_size=4)


@given(st.lists(vectors, max_size=8))
def test_rank_matches_fraction_elimination(rows):
    ech = Echelon()
    for r in rows:
        ech.add(r)
    assert len(ech) == fraction_rank(rows, list(range(6)))
    for r in rows:
        assert ech.contains(r)


def test_primitive():
    # the entry at the largest key is made positive
    assert primitive({1: Fraction(1, 2), 2: Fraction(-1, 3)}) == {1: -3, 2: 2}
    assert primitive({1: 4, 2: -6}) == {1: -2, 2: 3}
    assert primitive({1: 0}) == {}


def test_graded_subspace_blocks():
    space = GradedSubspace(lambda key: key % 2)
    space.add({0: 1, 2: 1})
    space.add({1: 2})
    space.add({0: 2, 2: 2})
    assert space.block_dims() == {0: 1, 1: 1}
    assert not space.reduce({0: 3, 2: 3})
    assert len(space.copy()) == 2


def test_large_entries_stay_exact():
    ech = Echelon()
    big = 10**30
    ech.add({0: big, 1: 1})
    ech.add({0: 1, 1: big})
    assert len(ech) == 2
    assert ech.contains({0: 3, 1: 7})
