"""Exterior/symmetric operations, extended sigma, adjunction identities."""

import random
from fractions import Fraction

from qkspin.powers import (
    ExtPower,
    SymPower,
    ext_contract,
    ext_product,
    ext_wedge_vec,
    extended_sigma_ext,
    extended_sigma_sym,
    j_ext,
    sym_contract_circ,
    sym_mul_vec,
)
from qkspin.scalar import Scalar
from qkspin.symplectic import SymplecticSpace, is_positive, j_apply, sharp


def rand_elem(rng, space_basis, maxterms=4):
    elem = {}
    for mono in rng.sample(space_basis, min(maxterms, len(space_basis))):
        c = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        if c:
            elem[mono] = c
    return elem


def test_wedge_contract_basics():
    E = SymplecticSpace(2)
    # de_0 contracted into e_0 ^ e_1 -> e_1
    assert ext_contract({0: Fraction(1)}, {(0, 1): Fraction(1)}) == {(1,): Fraction(1)}
    # e_0 ^ (e_0 ^ e_1) = 0
    assert ext_wedge_vec({0: Fraction(1)}, {(0, 1): Fraction(1)}) == {}
    # antisymmetry of the product
    x, y = {(0,): Fraction(1)}, {(1,): Fraction(1)}
    assert ext_product(x, y) == {(0, 1): Fraction(1)}
    assert ext_product(y, x) == {(0, 1): Fraction(-1)}


def test_adjunction_wedge_contract():
    # sigma(e ^ n1, n2) = sigma(n1, e_sharp contracted into n2), exterior case
    rng = random.Random(23)
    E = SymplecticSpace(2)
    for s in (1, 2, 3):
        P, Q = ExtPower(E, s - 1), ExtPower(E, s)
        for _ in range(15):
            e = {rng.randrange(E.dim): Fraction(rng.randint(-3, 3))}
            n1 = rand_elem(rng, P.basis)
            n2 = rand_elem(rng, Q.basis)
            lhs = extended_sigma_ext(E, ext_wedge_vec(e, n1), n2)
            rhs = extended_sigma_ext(E, n1, ext_contract(sharp(E, e), n2))
            assert lhs == rhs


def test_adjunction_symmetric():
    from qkspin.powers import sym_contract
    rng = random.Random(29)
    H = SymplecticSpace(1, name="h")
    for r in (1, 2, 3):
        P, Q = SymPower(H, r - 1), SymPower(H, r)
        for _ in range(15):
            h = {rng.randrange(2): Fraction(rng.randint(-3, 3))}
            n1 = rand_elem(rng, P.basis)
            n2 = rand_elem(rng, Q.basis)
            lhs = extended_sigma_sym(H, sym_mul_vec(h, n1), n2)
            rhs = extended_sigma_sym(H, n1, sym_contract(sharp(H, h), n2))
            assert lhs == rhs


def test_extended_sigma_examples():
    E = SymplecticSpace(2)
    # Gram determinant on a standard pair of 2-forms
    v = extended_sigma_ext(E, {(0, 1): Fraction(1)}, {(2, 3): Fraction(1)})
    assert v == 1
    H = SymplecticSpace(1, name="h")
    # Gram permanent: sigma(h0 h0, h1 h1) = 2
    assert extended_sigma_sym(H, {(0, 0): Fraction(1)}, {(1, 1): Fraction(1)}) == 2


def test_sym_contract_circ():
    # dh_0 contracted-circ into h0 h0 -> h0
    assert sym_contract_circ({0: Fraction(1)}, {(0, 0): Fraction(1)}) == \
        {(0,): Fraction(1)}


def test_hermitian_adjoint_of_wedge():
    # The adjoint of wedging is contraction with the J-image up to one
    # global sign: <e ^ x, y> = -<x, (Je)^sharp contracted into y> for
    # the form sigma(., J.), uniformly in the degree.  The sign is forced
    # by J^2 = (-1)^q on degree q together with the sigma-adjunction.
    rng = random.Random(31)
    E = SymplecticSpace(2)
    for s in (1, 2, 3):
        P, Q = ExtPower(E, s - 1), ExtPower(E, s)
        for _ in range(15):
            e = {rng.randrange(E.dim): Scalar(rng.randint(-3, 3), 0, rng.randint(-2, 2))}
            x = rand_elem(rng, P.basis)
            y = rand_elem(rng, Q.basis)
            lhs = extended_sigma_ext(E, ext_wedge_vec(e, x), j_ext(E, y))
            je = j_apply(E, e)
            rhs = extended_sigma_ext(E, x, j_ext(E, ext_contract(sharp(E, je), y)))
            assert Scalar.coerce(lhs) == -Scalar.coerce(rhs)


def test_extended_hermitian_positive():
    rng = random.Random(37)
    E = SymplecticSpace(2)
    for s in (1, 2, 3):
        P = ExtPower(E, s)
        for _ in range(10):
            x = rand_elem(rng, P.basis)
            if x:
                v = extended_sigma_ext(E, x, j_ext(E, x))
                assert is_positive(Scalar.coerce(v))
    H = SymplecticSpace(1, name="h")
    from qkspin.powers import j_sym
    for r in (1, 2, 3):
        P = SymPower(H, r)
        for _ in range(10):
            x = rand_elem(rng, P.basis)
            if x:
                v = extended_sigma_sym(H, x, j_sym(H, x))
                assert is_positive(Scalar.coerce(v))
