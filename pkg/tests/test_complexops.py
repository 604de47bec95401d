"""Complex structures: integrability, coframes, bigrading, del/delbar/dc."""

import random

import pytest

from conftest import make_at4, make_fp_solv8, make_hk12, random_form
from hermitia.cealg import LieAlgebraPresentation, abelian, direct_sum, wedge, wedge_all
from hermitia.complexops import (
    AlmostComplexStructure,
    IntegrabilityError,
    bidegree,
    coframe_10,
    conjugate_form,
    dc,
    del_,
    delbar,
    fundamental_form,
    nijenhuis_vanishes,
    weil_operator,
)


@pytest.fixture(scope="module")
def hk12_I():
    p = make_hk12()
    return AlmostComplexStructure.from_action(
        p, {"f1": "f3", "f2": "f4", "f5": "-f7", "f6": "-f8", "f9": "f10", "f11": "-f12"},
        name="I",
    )


@pytest.fixture(scope="module")
def solv8_I():
    p = make_fp_solv8()
    return AlmostComplexStructure.from_action(p, {1: "-e2", 3: "e8", 4: "e5", 6: "e7"}, name="I")


@pytest.fixture(scope="module")
def at4_J():
    p = make_at4()
    return AlmostComplexStructure.from_action(p, {1: "e2", 3: "e4", 5: "e6"}, name="J")


def test_square_minus_identity_enforced():
    a4 = abelian(4)
    bad = [[0, 0, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]
    with pytest.raises(IntegrabilityError):
        AlmostComplexStructure(a4, bad)
    with pytest.raises(IntegrabilityError):
        AlmostComplexStructure(abelian(3), [[0, -1, 0], [1, 0, 0], [0, 0, 1]])


def test_nijenhuis_pass_examples(solv8_I, at4_J, hk12_I):
    assert nijenhuis_vanishes(solv8_I).passed
    assert nijenhuis_vanishes(at4_J).passed
    assert nijenhuis_vanishes(hk12_I).passed


def test_nijenhuis_abelian_always_passes():
    a6 = abelian(6)
    J = AlmostComplexStructure.from_action(a6, {1: "e2", 3: "e4", 5: "e6"})
    assert nijenhuis_vanishes(J).passed


def test_nijenhuis_failure_with_witness():
    p = direct_sum(LieAlgebraPresentation(3, {1: [(1, (2, 3))]}), abelian(1))
    J = AlmostComplexStructure.from_action(p, {1: "e2", 3: (1, 4)})
    rep = nijenhuis_vanishes(J)
    assert not rep.passed
    pairs = {(a, b) for a, b, _v in rep.witnesses}
    assert (2, 3) in pairs
    with pytest.raises(IntegrabilityError):
        bidegree(p.generator(1), J)


def test_coframe_hk12_matches_convention(hk12_I):
    etas = coframe_10(hk12_I)
    p = hk12_I.presentation
    i = p.table.i

    def gen(k):
        return p.generator(k)

    assert etas[0] == gen(1) + i * gen(3)
    assert etas[1] == gen(2) + i * gen(4)
    assert etas[2] == gen(5) - i * gen(7)
    assert etas[3] == gen(6) - i * gen(8)
    assert etas[4] == gen(9) + i * gen(10)
    assert etas[5] == gen(11) - i * gen(12)


def test_coframe_abelian2():
    a2 = abelian(2)
    J = AlmostComplexStructure.from_action(a2, {1: "e2"})
    (eta,) = coframe_10(J)
    assert eta == a2.generator(1) + a2.table.i * a2.generator(2)


def test_coframe_defining_property(solv8_I):
    # eta(JX) = i eta(X), i.e. eta o J = i eta
    for eta in coframe_10(solv8_I):
        assert solv8_I.pullback_one_form(eta) == solv8_I.presentation.table.i * eta


def test_coframe_solv8_spans_top_form(solv8_I):
    etas = coframe_10(solv8_I)
    assert len(etas) == 4
    all_forms = etas + [e.conjugate() for e in etas]
    top = wedge_all(all_forms)
    assert not top.is_zero()


def test_bidegree_pure_examples(at4_J, hk12_I):
    at4 = at4_J.presentation
    w0 = at4.form([(1, (1, 2)), (1, (3, 4)), (1, (5, 6))])
    assert bidegree(w0, at4_J).is_pure(1, 1)
    m = hk12_I.model()
    assert bidegree(m.to_real(m.eta_monomial((1, 2))), hk12_I).is_pure(2, 0)


def test_bidegree_components_sum_back(hk12_I):
    p = hk12_I.presentation
    f123 = p.form([(1, (1, 2, 3))])
    bg = bidegree(f123, hk12_I)
    assert set(bg.bidegrees()) == {(2, 1), (1, 2)}
    assert (bg.total() - f123).is_zero()


def test_bidegree_random_roundtrip(hk12_I):
    rng = random.Random(21)
    for _ in range(100):
        f = random_form(hk12_I.presentation, rng, degrees=(1, 2, 3, 4))
        bg = bidegree(f, hk12_I)
        assert (bg.total() - f).is_zero()


def test_real_form_components_conjugate_pairs(hk12_I):
    rng = random.Random(22)
    for _ in range(60):
        f = random_form(hk12_I.presentation, rng, degrees=(2, 3))
        f = f + f.conjugate()  # make it real
        bg = bidegree(f, hk12_I)
        for (p, q), comp in bg.components.items():
            assert comp.conjugate() == bg.component(q, p)


def test_del_delbar_decompose_d(solv8_I):
    rng = random.Random(23)
    p = solv8_I.presentation
    for _ in range(100):
        f = random_form(p, rng, degrees=(1, 2, 3), symbol_names=("b",))
        assert (del_(f, solv8_I) + delbar(f, solv8_I) - p.d(f)).is_zero()


def test_dolbeault_identities_randomized(solv8_I):
    rng = random.Random(24)
    for _ in range(60):
        f = random_form(solv8_I.presentation, rng, degrees=(1, 2), symbol_names=("b",))
        assert del_(del_(f, solv8_I), solv8_I).is_zero()
        assert delbar(delbar(f, solv8_I), solv8_I).is_zero()
        anti = del_(delbar(f, solv8_I), solv8_I) + delbar(del_(f, solv8_I), solv8_I)
        assert anti.is_zero()


def test_pluriclosed_identity_on_solv8(solv8_I):
    g = [[1 if i == j else 0 for j in range(8)] for i in range(8)]
    om = fundamental_form(solv8_I, g)
    assert delbar(del_(om, solv8_I), solv8_I).is_zero()
    assert del_(delbar(om, solv8_I), solv8_I).is_zero()


def test_del_omega_nonzero_on_hk12(hk12_I):
    m = hk12_I.model()
    omega = m.to_real(m.eta_monomial((1, 3)) + m.eta_monomial((2, 4)) + m.eta_monomial((5, 6)))
    assert not del_(omega, hk12_I).is_zero()


def test_dc_vanishes_on_abelian_constants():
    a4 = abelian(4)
    J = AlmostComplexStructure.from_action(a4, {1: "e2", 3: "e4"})
    rng = random.Random(25)
    for _ in range(30):
        assert dc(random_form(a4, rng), J).is_zero()


def test_dc_real_on_real_forms(solv8_I):
    rng = random.Random(26)
    for _ in range(50):
        f = random_form(solv8_I.presentation, rng, degrees=(1, 2))
        f = f + f.conjugate()
        g = dc(f, solv8_I)
        assert g.conjugate() == g


def test_ddc_equals_2i_del_delbar(solv8_I):
    rng = random.Random(27)
    p = solv8_I.presentation
    two_i = p.table.scalar(2) * p.table.i
    for _ in range(40):
        f = random_form(p, rng, degrees=(2,), symbol_names=("b",))
        bg = bidegree(f, solv8_I)
        for (dp, dq), comp in bg.components.items():
            lhs = p.d(dc(comp, solv8_I))
            rhs = two_i * del_(delbar(comp, solv8_I), solv8_I)
            assert (lhs - rhs).is_zero()


def test_d_dc_anticommute(solv8_I):
    rng = random.Random(28)
    p = solv8_I.presentation
    for _ in range(40):
        f = random_form(p, rng, degrees=(1, 2))
        assert (p.d(dc(f, solv8_I)) + dc(p.d(f), solv8_I)).is_zero()


def test_conjugation_involution_and_swap(hk12_I):
    rng = random.Random(29)
    for _ in range(60):
        f = random_form(hk12_I.presentation, rng, degrees=(1, 2, 3))
        assert conjugate_form(conjugate_form(f, hk12_I), hk12_I) == f
        bg = bidegree(f, hk12_I)
        bgc = bidegree(conjugate_form(f, hk12_I), hk12_I)
        for (p, q), comp in bg.components.items():
            assert bgc.component(q, p) == comp.conjugate()


def test_weil_operator_fixes_real_11(solv8_I):
    g = [[1 if i == j else 0 for j in range(8)] for i in range(8)]
    om = fundamental_form(solv8_I, g)
    assert weil_operator(om, solv8_I) == om


def test_conjugate_of_coframe(hk12_I):
    etas = coframe_10(hk12_I)
    p = hk12_I.presentation
    assert conjugate_form(etas[0], hk12_I) == p.generator(1) - p.table.i * p.generator(3)


def test_fundamental_form_rejects_incompatible_metric():
    a4 = abelian(4)
    J = AlmostComplexStructure.from_action(a4, {1: "e2", 3: "e4"})
    bad_g = [[1, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 2]]
    from hermitia.cealg import FormError

    with pytest.raises(FormError):
        fundamental_form(J, bad_g)
