import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import weylpark.fock as fock
from weylpark.fock import (
    DiffOp,
    FockMonomial,
    FockVector,
    NonScalarDefect,
    act_fock,
    cocycle_formula,
    current_identity_coefficient,
    current_to_diffop,
    det_twist_scalar,
    element,
    embed,
    embed_coverage,
    embed_monomial,
    enumerate_sector,
    highest_weight,
    highest_weight_monomial,
    identity_matrix,
    lemma_cur_check,
    limit_character_lhs,
    limit_character_rhs,
    matrix_unit,
    root_r_omega1,
    sector_degree,
    sector_generating_function,
    translate,
    vacuum,
    verify_cocycle,
    xi_monomial,
)
from weylpark.wedge import CurrentElement, ModuleVector, act, admissible_sets, cyclic_closure, cyclic_monomial

R = 2
E11, E12, E21, E22 = (matrix_unit(a, b, R) for a, b in [(1, 1), (1, 2), (2, 1), (2, 2)])


@pytest.fixture(scope="module")
def sample():
    return enumerate_sector(0, R, 2) + enumerate_sector(1, R, 1)


def test_monomial_invariants():
    with pytest.raises(ValueError):
        FockMonomial(2, {(0, 1)}, set())
    with pytest.raises(ValueError):
        FockMonomial(2, set(), {(-1, 1)})
    m = FockMonomial(2, {(-2, 1)}, {(0, 2)})
    assert m.charge == 0 and m.weight == (1, -1) and m.degree == 2


def test_highest_weight_examples():
    assert highest_weight_monomial(0, 2) == vacuum(2)
    assert highest_weight(3, 2) == (2, 1)
    assert highest_weight(-1, 2) == (0, -1)
    m = highest_weight_monomial(-1, 2)
    assert m.charge == -1 and m.weight == (0, -1)
    assert sector_degree(3, 2) == xi_monomial((2, 1)).degree == 4


def test_act_examples():
    vac = FockVector.of(vacuum(R))
    for i in (1, 2, 3):
        for g in (E11, E12, E21, identity_matrix(R)):
            assert not act_fock(element(g, i), vac)
    for n in (-2, 0, 1, 3):
        for mono in enumerate_sector(n, R, 2)[:8]:
            v = FockVector.of(mono)
            assert act_fock(element(identity_matrix(R), 0), v) == v.scaled(n)
    for xi in [(2, 1), (3, -1), (0, 0), (-2, -2)]:
        v = FockVector.of(xi_monomial(xi))
        for j in (1, 2):
            want = Fraction(-xi[j - 1] * (xi[j - 1] + 1), 2)
            assert act_fock(DiffOp.basic(j, j, 1, 1), v) == v.scaled(want)


def test_cocycle_examples(sample):
    assert verify_cocycle(element(E11, 1), element(E11, -1), sample) == 1
    assert verify_cocycle(element(E12, 1), element(E21, -1), sample) == 1
    for i in range(-3, 4):
        A, B = element(E11, i, 1), element(E11, 1 - i, 0)
        expected = Fraction(-1, 2) * i * (i - 1)
        assert cocycle_formula(A, B) == expected
        assert verify_cocycle(A, B, sample) == expected


@pytest.mark.parametrize("m", range(-4, 5))
def test_k_normalization(m, sample):
    assert verify_cocycle(element(E12, m), element(E21, -m), sample) == m


def test_affine_slice(sample):
    for (g1, g2), i, j in itertools.product([(E11, E11), (E11, E22), (E12, E21), (E21, E12), (E12, E12)], range(-2, 3), range(-2, 3)):
        A, B = element(g1, i), element(g2, j)
        tr = sum(g1[p][q] * g2[q][p] for p in range(R) for q in range(R))
        assert verify_cocycle(A, B, sample) == (tr * i if i + j == 0 else 0)


def test_non_scalar_defect_is_reported(monkeypatch, sample):
    other = sample[1]
    monkeypatch.setattr(fock, "commutator_defect", lambda A, B, v: FockVector({other: 1}))
    with pytest.raises(NonScalarDefect):
        verify_cocycle(element(E11, 1), element(E11, -1), [sample[0]])


def test_cocycle_is_antisymmetric(sample):
    for case in fock.cocycle_cases(R, 2, 2)[::7]:
        _, A, B = case
        assert verify_cocycle(A, B, sample[:4]) == -verify_cocycle(B, A, sample[:4])


def test_lemma_cur_examples():
    for j in (1, 2):
        assert lemma_cur_check(j, 0, [vacuum(R)])
        assert lemma_cur_check(j, 0, [xi_monomial((2, 1))])
    monos = enumerate_sector(0, R, 4)[::5] + enumerate_sector(2, R, 4)[::5]
    for j, m in itertools.product((1, 2), range(-2, 3)):
        assert lemma_cur_check(j, m, monos)


def test_lemma_cur_detects_a_wrong_sign():
    # dropping the derivative term leaves a nonzero remainder
    v = FockVector.of(xi_monomial((2, 1)))
    full = current_identity_coefficient(1, 0, v, R)
    partial = full.plus(act_fock(DiffOp.basic(1, 1, 0), v), Fraction(-1, 2))
    assert not full and partial


def test_translate_examples():
    v = FockVector.of(highest_weight_monomial(3, 2))
    assert translate((0, 0), v) == v
    eta = root_r_omega1(2)
    assert eta == (1, -1)
    assert translate(eta, v) == FockVector.of(xi_monomial((3, 0)))
    for mono in enumerate_sector(1, R, 2):
        w = FockVector.of(mono)
        assert translate((-1, 1), translate((1, -1), w)) == w


etas = st.lists(st.integers(-2, 2), min_size=2, max_size=2).map(tuple)


@given(etas, st.integers(0, 10**6), st.sampled_from([(1, 1), (1, 2), (2, 1), (2, 2)]), st.integers(-2, 2))
def test_translate_intertwines(eta, idx, ab, k):
    monos = enumerate_sector(0, R, 3)
    mono = monos[idx % len(monos)]
    v = FockVector.of(mono)
    a, b = ab
    image = translate(eta, v)
    assert next(iter(image)).weight == tuple(x + e for x, e in zip(mono.weight, eta))
    assert next(iter(image)).charge == mono.charge + sum(eta)
    left = translate(eta, act_fock(DiffOp.basic(a, b, k), v))
    right = act_fock(DiffOp.basic(a, b, k + eta[b - 1] - eta[a - 1]), image)
    if a == b and k == 0:
        right = right.plus(image, -eta[a - 1])
    assert left == right
    assert translate(tuple(-e for e in eta), image) == v


def test_translate_does_not_commute_with_constants():
    # eta in Q turns E_12 (x) 1 into E_12 (x) x^(eta_2 - eta_1)
    v = FockVector.of(enumerate_sector(0, R, 2)[3])
    eta = (1, -1)
    left = translate(eta, act_fock(DiffOp.basic(1, 2, 0), v))
    assert left == act_fock(DiffOp.basic(1, 2, -2), translate(eta, v))


def test_embed_examples():
    for xi, N in [((2, 1), 2), ((3, 0), 4), ((1, 1, 0), 2)]:
        v = ModuleVector({cyclic_monomial(xi): 1}, N, len(xi))
        target = xi_monomial(tuple(x - N for x in xi))
        # finite wedges list exponents downwards, semi-infinite ones upwards
        assert embed(v) in (FockVector({target: 1}), FockVector({target: -1}))
    N = 3
    cl = cyclic_closure((2, 1), N)
    g = CurrentElement(2, 1, 1, 0)
    for v in cl.basis:
        assert embed(act(g, v)) == act_fock(g, embed(v))


def test_embed_injective_and_equivariant():
    xi, N = (3, 1), 4
    images = [embed_monomial(H, N, 2)[1] for H in admissible_sets(xi)]
    assert len(set(images)) == len(images)
    cl = cyclic_closure(xi, N)
    for g in [CurrentElement(a, b, k, l) for a in (1, 2) for b in (1, 2) for k in range(3) for l in range(3)]:
        for v in cl.basis[::3]:
            left = embed(act(g, v)).plus(embed(v), det_twist_scalar(g, N))
            assert left == act_fock(g, embed(v))


def test_det_twist_scalar():
    assert det_twist_scalar(CurrentElement(1, 1, 0, 0), 3) == -3
    assert det_twist_scalar(CurrentElement(2, 2, 0, 2), 3) == -(0 + 1 + 4)
    assert det_twist_scalar(CurrentElement(1, 2, 0, 0), 3) == 0
    assert det_twist_scalar(CurrentElement(1, 1, 1, 0), 3) == 0


def test_current_to_diffop():
    op = current_to_diffop(CurrentElement(1, 1, 0, 2))
    # (xD)^2 = x^2 D^2 + x D
    assert op == DiffOp({(1, 1, 2, 2): 1, (1, 1, 1, 1): 1})


diffops = st.builds(
    lambda terms: DiffOp(dict(terms)),
    st.lists(
        st.tuples(
            st.tuples(st.integers(1, 2), st.integers(1, 2), st.integers(-2, 2), st.integers(0, 2)),
            st.integers(-2, 2),
        ),
        max_size=3,
    ),
)


@given(diffops, diffops, diffops)
def test_diffop_product_is_associative(A, B, C):
    assert (A * B) * C == A * (B * C)


@given(diffops, st.integers(0, 10**6))
def test_diffop_action_is_a_representation_up_to_center(A, idx):
    # rho(A) rho(B) - rho(B) rho(A) - rho([A, B]) is scalar
    monos = enumerate_sector(0, R, 2)
    B = DiffOp.basic(2, 1, 1, 1)
    mono = monos[idx % len(monos)]
    defect = fock.commutator_defect(A, B, FockVector.of(mono))
    assert set(defect) <= {mono}


def test_stabilization_of_embeddings():
    assert embed_coverage(0, 2, 3, 3) == []
    assert embed_coverage(1, 2, 3, 3) == []
    assert embed_coverage(0, 2, 1, 3)


def test_limit_rhs_examples():
    rhs = limit_character_rhs(0, 2, 1)
    assert {k: c for k, c in rhs.items() if k[1] == 0} == {((0, 0), 0, 0): 1}
    x1 = {(k[0], k[2]): c for k, c in rhs.items() if k[1] == 1}
    assert x1 == {((0, 0), 0): 1, ((0, 0), 1): 1, ((1, -1), 0): 1, ((-1, 1), 0): 1}
    for n in (-1, 0, 1, 2):
        assert all(sum(w) == n for w, _, _ in limit_character_rhs(n, 3, 2))


def test_limit_lhs_examples():
    lhs = limit_character_lhs(0, 2, 1, 5)
    assert sum(lhs.values()) == 5
    assert {k: c for k, c in lhs.items() if k[1] == 0} == {((0, 0), 0, 0): 1}
    rhs = limit_character_rhs(0, 2, 2)
    assert limit_character_lhs(0, 2, 3, 2) == rhs
    with pytest.raises(ValueError):
        limit_character_lhs(-5, 2, 1, 2)


@pytest.mark.parametrize("n, r", [(0, 2), (1, 2), (-1, 2), (0, 3), (2, 3)])
def test_sector_count_matches_series(n, r):
    D = 3 if r == 2 else 2
    rhs = limit_character_rhs(n, r, D)
    flat: dict = {}
    for (w, i, _), c in rhs.items():
        flat[(w, i)] = flat.get((w, i), 0) + c
    counts = sector_generating_function(n, r, D)
    assert counts == flat
