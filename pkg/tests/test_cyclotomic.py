"""Exact cyclotomic integer arithmetic."""

import cmath
import random

import pytest

from hwrep import CycInt, NotRationalIntegerError, ParameterError, root


def test_root_examples():
    assert root(4, 0) == CycInt.from_int(4, 1)
    assert root(4, 2) == CycInt.from_int(4, -1)
    assert root(8, 6) * root(8, 6) == root(8, 4)
    assert root(8, 4) == CycInt.from_int(8, -1)


def test_bad_modulus():
    for M in (0, 1, 3, 6, 12):
        with pytest.raises(ParameterError):
            root(M, 0)


def test_add_mul_conj_examples():
    assert (root(4, 1) + root(4, 3)).is_zero()
    assert root(8, 3) * root(8, 7) == root(8, 2)
    assert root(8, 3).conj() == root(8, 5)
    a = 2 * root(8, 1) - root(8, 5) + 3
    assert a.conj().conj() == a


def test_reduce_to_rational_integer():
    assert (3 * root(4, 0)).to_int() == 3
    assert (root(4, 1) + root(4, 3)).to_int() == 0
    with pytest.raises(NotRationalIntegerError):
        root(4, 1).to_int()


@pytest.mark.parametrize("M", [4, 8, 16, 32])
def test_basis_independence(M):
    # w^0..w^(M/2-1) is a basis: no single root below M/2 reduces to an integer
    for e in range(1, M // 2):
        with pytest.raises(NotRationalIntegerError):
            root(M, e).to_int()


def test_to_complex():
    assert abs(root(4, 1).to_complex() - 1j) < 1e-12
    w8 = root(8, 1).to_complex()
    assert abs(w8 - complex(2**0.5 / 2, 2**0.5 / 2)) < 1e-12
    assert CycInt.zero(8).to_complex() == 0


def test_ring_laws_random():
    rng = random.Random(20240811)
    M = 16

    def rand():
        return CycInt(M, [rng.randint(-3, 3) for _ in range(M)])

    for _ in range(200):
        a, b, c = rand(), rand(), rand()
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a * b).conj() == a.conj() * b.conj()
        assert a - a == CycInt.zero(M)


def test_to_complex_matches_reduced_form():
    rng = random.Random(5)
    M = 16
    for _ in range(100):
        a = CycInt(M, [rng.randint(-5, 5) for _ in range(M)])
        red = CycInt(M, a.reduced() + (0,) * (M // 2))
        assert abs(a.to_complex() - red.to_complex()) < 1e-9


def test_embedding():
    # w_4 = w_8^2
    assert root(4, 1).embed(8) == root(8, 2)
    # mixed-modulus ops embed automatically
    assert root(4, 1) * root(8, 1) == root(8, 3)
    assert root(4, 2) + root(8, 4) == CycInt.from_int(8, -2)
    with pytest.raises(ParameterError):
        root(8, 1).embed(4)


def test_power():
    assert root(8, 3) ** 0 == CycInt.from_int(8, 1)
    assert root(8, 3) ** 5 == root(8, 15 % 8)
    assert (root(8, 1) + 1) ** 2 == root(8, 2) + 2 * root(8, 1) + 1


def test_json_roundtrip():
    a = 2 * root(8, 1) - 3 * root(8, 6)
    obj = a.to_json()
    assert obj["modulus"] == 8
    assert len(obj["coeffs"]) == 4
    assert CycInt.from_json(obj) == a


def test_equality_across_moduli():
    assert root(4, 1) == root(8, 2)
    assert CycInt.from_int(4, 7) == CycInt.from_int(16, 7)
    assert root(4, 1) != root(8, 1)
