import pytest
from hypothesis import given, settings, strategies as st

from qchar.cartan import CyclicA, InfiniteA, WindowA, a_monomial
from qchar.character import QCharacter, fold_qcharacter
from qchar.fm import (
    FAIL,
    PASS,
    PASS_WITH_FRONTIER,
    ContractError,
    DecompositionError,
    GenerationError,
    decompose_into_simples,
    dominant_monomials,
    fm_generate,
    verify_characterization,
    verify_ki,
)
from qchar.monomial import Monomial, Y
from qchar.sl2 import i_expansion
from qchar.tableaux import Depth, KRDescriptor, Window, kr_qcharacter

V_HIGHEST = Y(0, 0) * Y(2, 4)


def test_single_non_dominant_monomial_fails():
    chi = QCharacter(WindowA(0, 0), {Y(0, 2, -1): 1}, highest=Y(0, 0))
    v = verify_ki(chi, 0)
    assert v.status == FAIL and v.witness == Y(0, 2, -1)


def test_verify_needs_a_highest_monomial():
    with pytest.raises(ContractError):
        verify_ki(QCharacter(InfiniteA(), {Y(0, 0): 1}), 0)


@pytest.mark.parametrize("i,k,n", [(0, 1, 1), (0, 2, 2), (1, 3, 1), (-1, 2, 3)])
def test_window_kr_passes_everywhere(i, k, n):
    chi = kr_qcharacter(KRDescriptor(i, k), Window(n))
    for j in chi.cartan.nodes():
        assert verify_ki(chi, j).status == PASS
    v = verify_characterization(chi, chi.highest)
    assert v.status == PASS


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("k", [1, 2])
def test_folded_kr_passes_with_frontier(n, k):
    D = 6
    chi = fold_qcharacter(kr_qcharacter(KRDescriptor(0, k), Depth(D)), n)
    for j in chi.cartan.nodes():
        v = verify_ki(chi, j, D - k)
        assert v.status in (PASS, PASS_WITH_FRONTIER)
        if v.residual is not None:
            assert min(v.residual.depth(m) for m in v.residual) > D - k
    assert verify_characterization(chi, chi.highest, D - 2 * k).status == PASS


def test_injected_dominant_breaks_characterization():
    chi = kr_qcharacter(KRDescriptor(0, 2), Window(1))
    assert verify_characterization(chi, chi.highest).ok
    extra = Y(-1, 1) * Y(1, 1)  # Y[0,0]Y[0,2] A[0,1]^-1
    bad = chi + QCharacter(chi.cartan, {extra: 1})
    v = verify_characterization(bad, chi.highest)
    assert v.status == FAIL


def test_dominant_monomials_examples():
    assert dominant_monomials(QCharacter(InfiniteA(), {})) == {}
    chi = fold_qcharacter(kr_qcharacter(KRDescriptor(0, 2), Depth(8)), 2)
    assert dominant_monomials(chi) == {Y(0, 0) * Y(0, 2): 1}


@settings(max_examples=200)
@given(st.lists(st.integers(-4, 4), min_size=1, max_size=4), st.integers(-2, 2))
def test_single_expansion_is_in_ki(shifts, other):
    d = InfiniteA()
    m = Monomial([(0, s, 1) for s in shifts] + [(1, other, -1)])
    chi = i_expansion(d, 0, m)
    assert verify_ki(chi, 0).status == PASS
    # and spectral translation does not change the verdict
    moved = i_expansion(d, 0, m.shift(3))
    assert verify_ki(moved, 0).status == PASS


def test_generate_rank_one():
    assert fm_generate(WindowA(0, 0), Y(0, 0), 1).terms == {Y(0, 0): 1, Y(0, 2, -1): 1}


@pytest.mark.parametrize("i,k,n", [(0, 1, 1), (0, 2, 1), (1, 2, 2), (-2, 3, 1), (0, 1, 3)])
def test_generate_matches_tableaux(i, k, n):
    kr = kr_qcharacter(KRDescriptor(i, k), Window(n))
    gen = fm_generate(kr.cartan, kr.highest, kr.depth_bound)
    assert gen.terms == kr.terms


def test_generate_rejects_bad_input():
    with pytest.raises(GenerationError):
        fm_generate(InfiniteA(), Y(0, 0, -1), 2)
    with pytest.raises(GenerationError):
        fm_generate(CyclicA(3), Y(0, 0), 2)
    with pytest.raises(GenerationError):
        fm_generate(WindowA(0, 1), Y(3, 0), 2)
    with pytest.raises(ValueError):
        fm_generate(InfiniteA(), Y(0, 0), -1)


def test_generate_minimal_affinization_instance():
    target = V_HIGHEST / a_monomial(InfiniteA(), 0, 1) / a_monomial(InfiniteA(), -1, 2) / a_monomial(InfiniteA(), -2, 3)
    d = WindowA(-3, 5)
    chi = fm_generate(d, V_HIGHEST, 8)
    assert chi[target.restrict(d.contains)] >= 1
    full = fm_generate(InfiniteA(), V_HIGHEST, 8)
    assert full[target] >= 1


def test_fold_of_minimal_affinization_dominants():
    folded = fold_qcharacter(fm_generate(InfiniteA(), V_HIGHEST, 8), 3)
    assert dominant_monomials(folded) == {V_HIGHEST: 1, Y(1, 1) * Y(1, 3): 1, Y(0, 2) * Y(2, 2): 1}


def test_decompose_roundtrip():
    a = fm_generate(WindowA(-2, 2), Y(0, 0), 9)
    dec = decompose_into_simples(a)
    assert list(dec) == [(Y(0, 0), 1)]
    assert len(dec.residual) == 0


def test_decompose_sum_of_two_generated():
    d = WindowA(-2, 2)
    top = Y(0, 0) * Y(0, 2)
    low = Y(-1, 1) * Y(1, 1)  # top A[0,1]^-1
    a = fm_generate(d, top, 8)
    b = QCharacter(d, fm_generate(d, low, 7).terms, 8, top)
    for total in (a + b.scale(2), b.scale(2) + a):
        dec = decompose_into_simples(total)
        assert list(dec) == [(top, 1), (low, 2)]
    with pytest.raises(DecompositionError):
        decompose_into_simples(QCharacter(d, {top / a_monomial(d, 0, 3): 1}, 4, top))


def test_decompose_requires_depths():
    with pytest.raises(ContractError):
        decompose_into_simples(QCharacter(InfiniteA(), {Y(0, 0): 1}), 3)


def test_cyclic_generation_refuses_non_special():
    with pytest.raises(GenerationError) as err:
        fm_generate(CyclicA(3), V_HIGHEST, 6, experimental=True)
    assert err.value.monomial == Y(0, 2) * Y(1, 3) * Y(2, 4, -1) * Y(3, 3)


def test_folded_minimal_affinization_minus_second_summand():
    D = 10
    folded = fold_qcharacter(fm_generate(InfiniteA(), V_HIGHEST, D), 3)
    v2 = fm_generate(CyclicA(3), Y(1, 1) * Y(1, 3), D - 3, experimental=True)
    rest = dict(folded.terms)
    for m, c in v2.items():
        rest[m] = rest.get(m, 0) - c
    rest = {m: c for m, c in rest.items() if c}
    assert all(c > 0 for c in rest.values())
    v1 = QCharacter(CyclicA(3), rest, D, V_HIGHEST)
    assert dominant_monomials(v1) == {V_HIGHEST: 1, Y(0, 2) * Y(2, 2): 1}
    for j in range(4):
        assert verify_ki(v1, j, D - 3).ok
