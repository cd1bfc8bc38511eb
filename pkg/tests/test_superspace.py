"""Super vector space layer: parities, Koszul signs, tensor machinery."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ribbonhom.superspace import (SuperDim, SuperTensor, SymplecticForm,
                                  antisymmetrize, block_perm_embed,
                                  canonical_form_matrix, compose_perms,
                                  cycle_perm, cyclic_shift, invert_perm,
                                  koszul_apply, koszul_sign, norm,
                                  perm_parity)

D11 = SuperDim(1, 1)
D02 = SuperDim(0, 2)


def test_parities_and_letter_names():
    d = SuperDim(2, 1)
    assert [d.parity(a) for a in range(d.total)] == [0, 0, 0, 0, 1]
    names = [d.letter_name(a) for a in range(d.total)]
    assert len(set(names)) == d.total
    for a in range(d.total):
        assert d.letter_index(d.letter_name(a)) == a


def test_negative_signature_rejected():
    with pytest.raises(ValueError):
        SuperDim(-1, 0)
    with pytest.raises(ValueError):
        D11.parity(3)


@given(st.permutations(list(range(5))))
def test_perm_parity_matches_inversion_count(perm):
    inversions = sum(1 for i in range(5) for j in range(i + 1, 5)
                     if perm[i] > perm[j])
    assert perm_parity(perm) == (-1) ** inversions


@given(st.permutations(list(range(4))), st.permutations(list(range(4))))
def test_koszul_sign_is_multiplicative_on_odd_letters(p, q):
    # with every letter odd the Koszul sign is the permutation parity,
    # which is multiplicative under composition
    parities = (1, 1, 1, 1)
    p, q = tuple(p), tuple(q)
    assert koszul_sign(parities, compose_perms(p, q)) == \
        koszul_sign(parities, p) * koszul_sign(parities, q)


def test_koszul_sign_even_letters_trivial():
    assert koszul_sign((0, 0, 0), (2, 0, 1)) == 1
    assert koszul_sign((1, 1), (1, 0)) == -1
    assert koszul_sign((0, 1), (1, 0)) == 1


def test_perm_helpers():
    p = (2, 0, 1)
    assert compose_perms(invert_perm(p), p) == (0, 1, 2)
    assert cycle_perm(3) in {(1, 2, 0), (2, 0, 1)}
    sigma = (1, 0)
    big = block_perm_embed(sigma, (2, 3))
    assert len(big) == 5 and sorted(big) == list(range(5))


def test_koszul_apply_composes_with_signs():
    rng = random.Random(3)
    for _ in range(40):
        rank = rng.randint(1, 5)
        t = SuperTensor(D11, rank,
                        {tuple(rng.randrange(3) for _ in range(rank)):
                         Fraction(rng.randint(-3, 3))})
        p = list(range(rank))
        q = list(range(rank))
        rng.shuffle(p)
        rng.shuffle(q)
        p, q = tuple(p), tuple(q)
        lhs = koszul_apply(p, koszul_apply(q, t))
        rhs = koszul_apply(compose_perms(p, q), t)
        assert lhs == rhs, (p, q, t)


def test_koszul_apply_odd_swap_sign():
    t = SuperTensor.word(D02, (0, 1))
    swapped = koszul_apply((1, 0), t)
    assert swapped == SuperTensor.word(D02, (1, 0), Fraction(-1))


def test_cyclic_shift_and_norm():
    t = SuperTensor.word(D02, (0, 1, 1))
    s = cyclic_shift(t)
    # first letter moves past two odd letters: sign (+1), word rotates left
    assert s == SuperTensor.word(D02, (1, 1, 0))
    total = norm(t)
    assert cyclic_shift(total) == total


def test_tensor_product_bilinear_and_associative():
    a = SuperTensor.word(D11, (0,), Fraction(2))
    b = SuperTensor.word(D11, (2, 1))
    c = SuperTensor.word(D11, (1,))
    assert a.tensor(b).rank == 3
    assert a.tensor(b.tensor(c)) == a.tensor(b).tensor(c)
    zero = SuperTensor.zero(D11, 2)
    assert not a.tensor(zero)


def test_antisymmetrize_kills_repeated_even_blocks():
    d = SuperDim(1, 0)
    t = SuperTensor.word(d, (0, 0))
    assert not antisymmetrize(t, (1, 1))
    # on odd letters the symmetric part survives
    u = SuperTensor.word(D02, (0, 0))
    assert antisymmetrize(u, (1, 1))


def test_symplectic_form_canonical_and_checks():
    form = SymplecticForm.canonical(D11)
    assert form.is_canonical
    mat = canonical_form_matrix(D11)
    assert form.value(0, 1) == mat[0][1] == Fraction(1)
    dual = form.dual_matrix()
    n = D11.total
    prod = [[sum(form.value(i, k) * dual[k][j] for k in range(n))
             for j in range(n)] for i in range(n)]
    # frozen convention: omega . dual = -1 on even letters, +1 on odd ones
    for i in range(n):
        for j in range(n):
            expect = (0 if i != j else (-1) ** (1 + D11.parity(i)))
            assert prod[i][j] == expect, (i, j, prod)


def test_symplectic_form_rejects_parity_mixing():
    bad = [[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]]
    with pytest.raises(ValueError):
        SymplecticForm(SuperDim(1, 0), [[Fraction(0), Fraction(1)],
                                        [Fraction(-1), Fraction(1)]])
    # even-odd cross terms are forbidden
    with pytest.raises(ValueError):
        SymplecticForm(SuperDim(1, 1), [
            [Fraction(0), Fraction(1), Fraction(1)],
            [Fraction(-1), Fraction(0), Fraction(0)],
            [Fraction(1), Fraction(0), Fraction(1)]])
