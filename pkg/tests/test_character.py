import random

import pytest
from hypothesis import given, settings, strategies as st

from qchar.cartan import CyclicA, InfiniteA, WindowA, a_monomial, simple_root
from qchar.character import (
    QCharacter,
    a_factorization,
    affine_weight,
    classical_character,
    depth_of,
    fold_monomial,
    fold_qcharacter,
    fold_weight,
    root_content,
)
from qchar.monomial import Weight, Y, weight_of

from oracles import solve_a_exponents
from strategies import monomials

DATA = [InfiniteA(), WindowA(-2, 3), CyclicA(1), CyclicA(2), CyclicA(3)]


def _random_below(rng, d, m_plus, count):
    m = m_plus
    used = {}
    for _ in range(count):
        j = rng.choice(d.nodes()) if not d.is_infinite else rng.randint(-3, 3)
        s = rng.randint(-2, 6)
        m = m / a_monomial(d, j, s)
        key = (d.normalize(j), s)
        used[key] = used.get(key, 0) + 1
    return m, used


@pytest.mark.parametrize("d", DATA, ids=str)
def test_depth_matches_linear_solve(d):
    rng = random.Random(7)
    m_plus = Y(0, 0) * Y(2, 4) if d.contains(2) else Y(0, 0)
    for _ in range(40):
        m, used = _random_below(rng, d, m_plus, rng.randint(0, 6))
        oracle = solve_a_exponents(m, m_plus, d)
        assert oracle == used
        assert depth_of(m, m_plus, d) == sum(used.values())
        assert {(j, s): v for j, s, v in a_factorization(m, m_plus, d)} == used


@pytest.mark.parametrize("d", DATA, ids=str)
def test_non_products_are_rejected(d):
    rng = random.Random(11)
    m_plus = Y(0, 0)
    for _ in range(30):
        m, _ = _random_below(rng, d, m_plus, rng.randint(0, 4))
        j = d.nodes()[0] if not d.is_infinite else 0
        bad = m * Y(j, rng.randint(-3, 5))
        assert solve_a_exponents(bad, m_plus, d) is None
        assert a_factorization(bad, m_plus, d) is None
        assert depth_of(bad, m_plus, d) is None


def test_depth_rejects_positive_powers():
    d = InfiniteA()
    m = Y(0, 0) * a_monomial(d, 0, 1)
    assert a_factorization(m, Y(0, 0), d) == ((0, 1, -1),)
    assert depth_of(m, Y(0, 0), d) is None


def test_folded_depth_example():
    assert depth_of(Y(1, 1) * Y(1, 3), Y(0, 0) * Y(2, 4), CyclicA(3)) == 3
    assert root_content(Y(1, 1) * Y(1, 3), Y(0, 0) * Y(2, 4), CyclicA(3)) == {0: 1, 2: 1, 3: 1}


def test_affine_weight_sees_the_null_root():
    d = CyclicA(3)
    m_plus = Y(0, 0)
    m = m_plus
    for j, s in ((0, 1), (3, 2), (2, 3), (1, 4)):
        m = m / a_monomial(d, j, s)
    assert weight_of(m) == weight_of(m_plus)
    assert affine_weight(m, m_plus, d) == Weight({0: 1}, -1)


@pytest.mark.parametrize("d", DATA, ids=str)
def test_depth_weight_consistency(d):
    rng = random.Random(3)
    m_plus = Y(0, 0)
    for _ in range(40):
        m, used = _random_below(rng, d, m_plus, rng.randint(0, 6))
        roots = Weight()
        for (j, _), v in used.items():
            roots = roots + v * simple_root(d, j)
        assert affine_weight(m_plus, m_plus, d) - affine_weight(m, m_plus, d) == roots
        # the Lambda part is the plain exponent weight
        assert weight_of(m_plus) - weight_of(m) == Weight(roots.coeffs)


def test_character_container_and_arithmetic():
    d = WindowA(0, 0)
    a = QCharacter(d, {Y(0, 0): 1, Y(0, 2, -1): 1}, highest=Y(0, 0))
    b = QCharacter(d, {Y(0, 2, -1): 2})
    assert len(a) == 2 and Y(0, 0) in a and a[Y(0, 2, -1)] == 1 and a[Y(5, 5)] == 0
    assert (a + b)[Y(0, 2, -1)] == 3
    assert len(a - a) == 0
    assert a.scale(3).mass() == 6
    assert a.depth(Y(0, 2, -1)) == 1
    assert [m for m, _ in a.sorted_terms()] == [Y(0, 0), Y(0, 2, -1)]
    with pytest.raises(ValueError):
        a + QCharacter(CyclicA(2), {})


def test_character_validation():
    with pytest.raises(ValueError):
        QCharacter(WindowA(0, 1), {Y(2, 0): 1})
    with pytest.raises(ValueError):
        QCharacter(CyclicA(2), {Y(3, 0): 1})
    with pytest.raises(OverflowError):
        QCharacter(InfiniteA(), {Y(0, 0): 2**64})


def test_truncate():
    d = WindowA(0, 0)
    chi = QCharacter(d, {Y(0, 0): 1, Y(0, 2, -1): 1}, highest=Y(0, 0))
    assert chi.truncate(0).terms == {Y(0, 0): 1}
    with pytest.raises(ValueError):
        QCharacter(d, {Y(0, 0): 1}).truncate(1)
    with pytest.raises(ValueError):
        QCharacter(d, {Y(0, 2): 1}, highest=Y(0, 0)).truncate(1)


def test_fold_character():
    chi = QCharacter(InfiniteA(), {Y(0, 0): 1, Y(4, 0): 1, Y(1, 1, -1): 2}, 3, Y(0, 0))
    f = fold_qcharacter(chi, 3)
    assert f.cartan == CyclicA(3)
    assert f.terms == {Y(0, 0): 2, Y(1, 1, -1): 2}
    assert f.depth_bound == 3 and f.highest == Y(0, 0)
    with pytest.raises(ValueError):
        fold_qcharacter(f, 3)
    with pytest.raises(ValueError):
        fold_qcharacter(chi, 0)


def test_classical_character_cyclic_requires_highest():
    with pytest.raises(ValueError):
        classical_character(QCharacter(CyclicA(2), {Y(0, 0): 1}))


@settings(max_examples=1000)
@given(monomials, monomials, st.integers(1, 5))
def test_fold_is_multiplicative_and_weight_compatible(a, b, n):
    assert fold_monomial(a * b, n) == fold_monomial(a, n) * fold_monomial(b, n)
    assert fold_monomial(a / b, n) == fold_monomial(a, n) / fold_monomial(b, n)
    assert weight_of(fold_monomial(a, n)) == fold_weight(weight_of(a), n)


@settings(max_examples=300)
@given(st.integers(-8, 8), st.integers(-8, 8), st.integers(1, 5))
def test_fold_carries_a_monomials(i, s, n):
    # for n = 1 the two neighbours collapse onto one node: the doubled bond
    assert fold_monomial(a_monomial(InfiniteA(), i, s), n) == a_monomial(CyclicA(n), i, s)
