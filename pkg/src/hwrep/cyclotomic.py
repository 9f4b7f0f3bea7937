"""Exact arithmetic in the ring of integers Z[w], w = exp(2*pi*i/M), M = 2^s.

Values are stored as dense integer coefficient vectors of length M indexed
by root exponent, so multiplication is cyclic convolution of exponents and
nothing is ever rounded.  For 2-power M the reduced basis is
{w^0, ..., w^(M/2-1)} via w^(e+M/2) = -w^e; two values are equal iff their
reduced forms coincide.  Coefficients are arbitrary-precision Python ints,
so overflow cannot occur silently.
"""

from __future__ import annotations

import cmath
from typing import Iterable, Sequence

from .errors import NotRationalIntegerError, ParameterError


def _check_modulus(M: int) -> None:
    if M < 2 or M & (M - 1):
        raise ParameterError(f"modulus must be a power of two >= 2, got {M}")


class CycInt:
    """An element of Z[w_M], immutable."""

    __slots__ = ("_modulus", "_coeffs")

    def __init__(self, modulus: int, coeffs: Iterable[int]) -> None:
        _check_modulus(modulus)
        vec = tuple(int(c) for c in coeffs)
        if len(vec) != modulus:
            raise ParameterError(
                f"coefficient vector must have length {modulus}, got {len(vec)}"
            )
        self._modulus = modulus
        self._coeffs = vec

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, modulus: int) -> "CycInt":
        _check_modulus(modulus)
        return cls(modulus, (0,) * modulus)

    @classmethod
    def from_int(cls, modulus: int, value: int) -> "CycInt":
        _check_modulus(modulus)
        vec = [0] * modulus
        vec[0] = int(value)
        return cls(modulus, vec)

    @classmethod
    def root(cls, modulus: int, exponent: int) -> "CycInt":
        """The root of unity w_M^e as an exact ring element."""
        _check_modulus(modulus)
        vec = [0] * modulus
        vec[exponent % modulus] = 1
        return cls(modulus, vec)

    # -- basic views -------------------------------------------------------

    @property
    def modulus(self) -> int:
        return self._modulus

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    def reduced(self) -> tuple[int, ...]:
        """Coefficients on the basis w^0..w^(M/2-1), folding w^(e+M/2) = -w^e."""
        half = self._modulus // 2
        return tuple(self._coeffs[e] - self._coeffs[e + half] for e in range(half))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.reduced())

    # -- ring structure ----------------------------------------------------

    def embed(self, modulus: int) -> "CycInt":
        """Reinterpret in a larger 2-power ring via w_a^e -> w_b^(e*b/a)."""
        _check_modulus(modulus)
        if modulus == self._modulus:
            return self
        if modulus % self._modulus:
            raise ParameterError(
                f"cannot embed modulus {self._modulus} into {modulus}"
            )
        stretch = modulus // self._modulus
        vec = [0] * modulus
        for e, c in enumerate(self._coeffs):
            if c:
                vec[e * stretch] = c
        return CycInt(modulus, vec)

    def _align(self, other: "CycInt") -> tuple["CycInt", "CycInt"]:
        if self._modulus == other._modulus:
            return self, other
        M = max(self._modulus, other._modulus)
        return self.embed(M), other.embed(M)

    def __add__(self, other: "CycInt | int") -> "CycInt":
        if isinstance(other, int):
            other = CycInt.from_int(self._modulus, other)
        if not isinstance(other, CycInt):
            return NotImplemented
        a, b = self._align(other)
        return CycInt(a._modulus, (x + y for x, y in zip(a._coeffs, b._coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "CycInt":
        return CycInt(self._modulus, (-c for c in self._coeffs))

    def __sub__(self, other: "CycInt | int") -> "CycInt":
        if isinstance(other, int):
            other = CycInt.from_int(self._modulus, other)
        if not isinstance(other, CycInt):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: "CycInt | int") -> "CycInt":
        return (-self) + other

    def __mul__(self, other: "CycInt | int") -> "CycInt":
        if isinstance(other, int):
            return CycInt(self._modulus, (other * c for c in self._coeffs))
        if not isinstance(other, CycInt):
            return NotImplemented
        a, b = self._align(other)
        M = a._modulus
        out = [0] * M
        for e, c in enumerate(a._coeffs):
            if not c:
                continue
            for f, d in enumerate(b._coeffs):
                if d:
                    out[(e + f) % M] += c * d
        return CycInt(M, out)

    __rmul__ = __mul__

    def conj(self) -> "CycInt":
        """Complex conjugation, w^e -> w^-e."""
        M = self._modulus
        vec = [0] * M
        for e, c in enumerate(self._coeffs):
            if c:
                vec[(-e) % M] += c
        return CycInt(M, vec)

    def __pow__(self, n: int) -> "CycInt":
        if n < 0:
            raise ParameterError("negative powers are not defined in Z[w]")
        result = CycInt.from_int(self._modulus, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = CycInt.from_int(self._modulus, other)
        if not isinstance(other, CycInt):
            return NotImplemented
        a, b = self._align(other)
        return a.reduced() == b.reduced()

    def __hash__(self) -> int:
        return hash((self._modulus, self.reduced()))

    def __repr__(self) -> str:
        terms = [f"{c}*w^{e}" for e, c in enumerate(self.reduced()) if c]
        body = " + ".join(terms) if terms else "0"
        return f"CycInt(M={self._modulus}: {body})"

    # -- extraction --------------------------------------------------------

    def to_int(self) -> int:
        """The value as a rational integer; error if it is not one."""
        red = self.reduced()
        if any(red[1:]):
            raise NotRationalIntegerError(f"{self!r} is not a rational integer")
        return red[0]

    def to_complex(self) -> complex:
        M = self._modulus
        total = 0j
        for e, c in enumerate(self._coeffs):
            if c:
                total += c * cmath.exp(2j * cmath.pi * e / M)
        return total

    def to_json(self) -> dict:
        return {"modulus": self._modulus, "coeffs": list(self.reduced())}

    @classmethod
    def from_json(cls, obj: dict) -> "CycInt":
        M = int(obj["modulus"])
        _check_modulus(M)
        red: Sequence[int] = obj["coeffs"]
        if len(red) != M // 2:
            raise ParameterError(
                f"reduced coefficient list must have length {M // 2}, got {len(red)}"
            )
        return cls(M, tuple(red) + (0,) * (M // 2))


def root(modulus: int, exponent: int) -> CycInt:
    """Convenience alias for CycInt.root."""
    return CycInt.root(modulus, exponent)
