"""Irrep labels, orbits, little groups and exact irrep matrices of HW(2^s).

Every irrep is labelled by a canonical triple ((p, q), r).  Writing
p = 2^t * u with u odd (t = s when p = 0), the irrep acts on C^d with
d = 2^(s-t) and every image matrix is monomial: one root of unity per
row.  Matrices are therefore stored as a permutation plus one exponent
of w = exp(2*pi*i/2^s) per row, which keeps all algebra exact.

The matrix of z^m x^n y^l has, in row k, its nonzero entry in column
j = (k+l) mod d with carry v = floor((k+l)/d) mod 2^t and exponent

    p*m + (k*p + q)*n + d*r*v   (mod 2^s).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .cyclotomic import CycInt
from .errors import NonCanonicalLabelError, ParameterError, ResourceLimitError
from .group import GroupElement, GroupParams, enumeration_cap, two_adic_valuation


@dataclass(frozen=True)
class IrrepLabel:
    """Label triple ((p, q), r) with derived 2-adic data."""

    s: int
    p: int
    q: int
    r: int

    def __post_init__(self) -> None:
        N = 1 << self.s
        if self.s < 1:
            raise ParameterError(f"s must be >= 1, got {self.s}")
        for name in ("p", "q", "r"):
            value = getattr(self, name)
            if not 0 <= value < N:
                raise ParameterError(f"{name} = {value} is not a residue mod 2^{self.s}")

    @property
    def t(self) -> int:
        """2-adic valuation of p, with t = s for p = 0."""
        return two_adic_valuation(self.p, self.s)

    @property
    def u(self) -> int | None:
        """Odd cofactor of p (absent for p = 0)."""
        return self.p >> self.t if self.p else None

    @property
    def dim(self) -> int:
        return 1 << (self.s - self.t)

    @property
    def is_canonical(self) -> bool:
        bound = 1 << self.t
        return self.q < bound and self.r < bound

    @property
    def sort_key(self) -> tuple[int, int, int, int]:
        return (self.t, self.p, self.q, self.r)

    def canonical(self) -> "IrrepLabel":
        return canonicalize_label(self.s, self.p, self.q, self.r)

    def __str__(self) -> str:
        return f"{self.p},{self.q},{self.r}"

    @classmethod
    def parse(cls, text: str, s: int) -> "IrrepLabel":
        parts = text.split(",")
        if len(parts) != 3:
            raise ParameterError(f"label must be 'p,q,r', got {text!r}")
        try:
            p, q, r = (int(part) for part in parts)
        except ValueError as exc:
            raise ParameterError(f"label components must be integers: {text!r}") from exc
        N = 1 << s
        return cls(s, p % N, q % N, r % N)

    def to_json(self) -> dict:
        return {
            "s": self.s,
            "p": self.p,
            "q": self.q,
            "r": self.r,
            "t": self.t,
            "dim": self.dim,
            "faithful": is_faithful(self),
        }


def irrep_count_formula(s: int) -> int:
    """Number of inequivalent irreps of HW(2^s): 2^(s-1) * (3*2^s - 1)."""
    if s < 1:
        raise ParameterError(f"s must be >= 1, got {s}")
    return 2 ** (s - 1) * (3 * 2**s - 1)


def iter_irreps(s: int) -> Iterator[IrrepLabel]:
    """Canonical labels in (t, p, q, r) order; p = 0 comes last (t = s)."""
    N = 1 << s
    for t in range(s):
        for u in range(1, 2 ** (s - t), 2):
            p = (2**t * u) % N
            for q in range(2**t):
                for r in range(2**t):
                    yield IrrepLabel(s, p, q, r)
    for q in range(N):
        for r in range(N):
            yield IrrepLabel(s, 0, q, r)


def enumerate_irreps(s: int) -> list[IrrepLabel]:
    """All canonical labels; count equals irrep_count_formula(s)."""
    if s > enumeration_cap():
        raise ResourceLimitError(
            f"irrep enumeration capped at s <= {enumeration_cap()} (HW_MAX_S overrides)"
        )
    return list(iter_irreps(s))


def canonicalize_label(s: int, p: int, q: int, r: int) -> IrrepLabel:
    """Reduce (p, q, r) to the canonical representative (p, q mod 2^t, r mod 2^t).

    The returned label has the same character system as the input, hence
    labels an equivalent irrep.
    """
    N = 1 << s
    p %= N
    t = two_adic_valuation(p, s)
    bound = 1 << t
    return IrrepLabel(s, p, q % bound, r % bound)


def is_faithful(label: IrrepLabel) -> bool:
    """Faithful iff t = 0 (dimension 2^s)."""
    return label.t == 0


@dataclass(frozen=True)
class LittleGroupDesc:
    """The subgroup of B = <y> fixing the character labelled by p."""

    s: int
    p: int

    @property
    def t(self) -> int:
        return two_adic_valuation(self.p, self.s)

    @property
    def order(self) -> int:
        return 1 << self.t

    @property
    def generator_exponent(self) -> int:
        """The little group is generated by y^(2^(s-t))."""
        return 1 << (self.s - self.t)

    def contains(self, l: int) -> bool:
        """Whether y^l lies in the little group."""
        return l % self.generator_exponent == 0


def little_group(s: int, p: int) -> LittleGroupDesc:
    return LittleGroupDesc(s=s, p=p % (1 << s))


@dataclass(frozen=True)
class Orbit:
    """Orbit of the abelian-subgroup character (p, q) under the y-action."""

    s: int
    p: int
    q: int

    def members(self) -> tuple[int, ...]:
        """The q-values {k*p + q mod 2^s}, sorted."""
        N = 1 << self.s
        t = two_adic_valuation(self.p, self.s)
        return tuple(sorted({(k * self.p + self.q) % N for k in range(1 << (self.s - t))}))

    @property
    def size(self) -> int:
        t = two_adic_valuation(self.p, self.s)
        return 1 << (self.s - t)

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q, "members": list(self.members())}


def orbit_of(s: int, p: int, q: int) -> Orbit:
    N = 1 << s
    return Orbit(s=s, p=p % N, q=q % N)


def enumerate_distinct_orbits(s: int) -> list[Orbit]:
    """Representatives of all distinct orbits, 2^(s-1)*(s+2) of them.

    For p = 2^t * u the distinct representatives have q = 0..2^t-1; for
    p = 0 every q = 0..2^s-1 gives its own singleton orbit.
    """
    if s > enumeration_cap():
        raise ResourceLimitError(
            f"orbit enumeration capped at s <= {enumeration_cap()} (HW_MAX_S overrides)"
        )
    N = 1 << s
    out: list[Orbit] = []
    for t in range(s):
        for u in range(1, 2 ** (s - t), 2):
            p = (2**t * u) % N
            for q in range(2**t):
                out.append(Orbit(s=s, p=p, q=q))
    for q in range(N):
        out.append(Orbit(s=s, p=0, q=q))
    return out


def distinct_orbit_count_formula(s: int) -> int:
    return 2 ** (s - 1) * (s + 2)


@dataclass(frozen=True)
class MonomialMatrix:
    """d x d matrix with exactly one root of unity per row.

    Row k holds w^exps[k] in column sigma[k], w = exp(2*pi*i/root_modulus).
    Products, inverses and powers stay in this class, so the full image of
    the group under any irrep is handled without floating point.
    """

    dim: int
    root_modulus: int
    sigma: tuple[int, ...]
    exps: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.sigma) != self.dim or len(self.exps) != self.dim:
            raise ParameterError("sigma/exps length must equal dim")
        if sorted(self.sigma) != list(range(self.dim)):
            raise ParameterError(f"sigma {self.sigma} is not a permutation of 0..{self.dim - 1}")

    @classmethod
    def identity(cls, dim: int, root_modulus: int) -> "MonomialMatrix":
        return cls(dim, root_modulus, tuple(range(dim)), (0,) * dim)

    def __matmul__(self, other: "MonomialMatrix") -> "MonomialMatrix":
        if not isinstance(other, MonomialMatrix):
            return NotImplemented
        if self.dim != other.dim or self.root_modulus != other.root_modulus:
            raise ParameterError("dimension or root modulus mismatch in monomial product")
        M = self.root_modulus
        sigma = tuple(other.sigma[self.sigma[k]] for k in range(self.dim))
        exps = tuple((self.exps[k] + other.exps[self.sigma[k]]) % M for k in range(self.dim))
        return MonomialMatrix(self.dim, M, sigma, exps)

    def inverse(self) -> "MonomialMatrix":
        M = self.root_modulus
        inv_sigma = [0] * self.dim
        inv_exps = [0] * self.dim
        for k in range(self.dim):
            inv_sigma[self.sigma[k]] = k
        for j in range(self.dim):
            inv_exps[j] = (-self.exps[inv_sigma[j]]) % M
        return MonomialMatrix(self.dim, M, tuple(inv_sigma), tuple(inv_exps))

    def power(self, n: int) -> "MonomialMatrix":
        if n < 0:
            return self.inverse().power(-n)
        result = MonomialMatrix.identity(self.dim, self.root_modulus)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def scale(self, exponent: int) -> "MonomialMatrix":
        """Multiply by the scalar w^exponent."""
        M = self.root_modulus
        return MonomialMatrix(
            self.dim, M, self.sigma, tuple((e + exponent) % M for e in self.exps)
        )

    def is_scalar(self) -> tuple[bool, int]:
        """(True, e) if the matrix equals w^e * I."""
        if any(self.sigma[k] != k for k in range(self.dim)):
            return (False, 0)
        if any(e != self.exps[0] for e in self.exps):
            return (False, 0)
        return (True, self.exps[0])

    def trace(self) -> CycInt:
        total = CycInt.zero(self.root_modulus)
        for k in range(self.dim):
            if self.sigma[k] == k:
                total = total + CycInt.root(self.root_modulus, self.exps[k])
        return total

    def to_dense(self) -> list[list[CycInt]]:
        zero = CycInt.zero(self.root_modulus)
        out = [[zero] * self.dim for _ in range(self.dim)]
        for k in range(self.dim):
            out[k][self.sigma[k]] = CycInt.root(self.root_modulus, self.exps[k])
        return out

    def to_complex(self) -> np.ndarray:
        M = self.root_modulus
        out = np.zeros((self.dim, self.dim), dtype=complex)
        for k in range(self.dim):
            out[k, self.sigma[k]] = np.exp(2j * np.pi * self.exps[k] / M)
        return out

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "root_modulus": self.root_modulus,
            "entries": [
                {"row": k, "col": self.sigma[k], "exp": self.exps[k]}
                for k in range(self.dim)
            ],
        }


def monomial_multiply(a: MonomialMatrix, b: MonomialMatrix) -> MonomialMatrix:
    return a @ b


def monomial_to_dense(a: MonomialMatrix) -> list[list[CycInt]]:
    return a.to_dense()


def _require_canonical(label: IrrepLabel) -> None:
    if not label.is_canonical:
        raise NonCanonicalLabelError(
            f"label {label} is not canonical; canonical form is {label.canonical()}"
        )


def irrep_matrix(label: IrrepLabel, g: GroupElement) -> MonomialMatrix:
    """The exact matrix of z^m x^n y^l in the irrep labelled by ((p,q),r)."""
    _require_canonical(label)
    s, p, q, r = label.s, label.p, label.q, label.r
    N = 1 << s
    if not (0 <= g.m < N and 0 <= g.n < N and 0 <= g.l < N):
        raise ParameterError(f"element {g} is not reduced mod 2^{s}")
    t = label.t
    d = label.dim
    tmask = (1 << t) - 1
    sigma = []
    exps = []
    for k in range(d):
        kl = k + g.l
        j = kl % d
        v = (kl // d) & tmask
        sigma.append(j)
        exps.append((p * g.m + (k * p + q) * g.n + d * r * v) % N)
    return MonomialMatrix(d, N, tuple(sigma), tuple(exps))


def generator_matrices(
    label: IrrepLabel,
) -> tuple[MonomialMatrix, MonomialMatrix, MonomialMatrix]:
    """(z_D, x_D, y_D): scalar w^p, the diagonal clock, the twisted shift.

    z_D = w^p I; x_D = diag(w^(q + p*k)); y_D shifts row k to column k+1
    with w^(d*r) in the lower-left corner (the "omega_t^r" twist).
    """
    _require_canonical(label)
    s, p, q, r = label.s, label.p, label.q, label.r
    N = 1 << s
    d = label.dim
    ident = tuple(range(d))
    z = MonomialMatrix(d, N, ident, (p % N,) * d)
    x = MonomialMatrix(d, N, ident, tuple((q + p * k) % N for k in range(d)))
    y_sigma = tuple((k + 1) % d for k in range(d))
    y_exps = tuple(0 if k != d - 1 else (d * r) % N for k in range(d))
    y = MonomialMatrix(d, N, y_sigma, y_exps)
    return z, x, y


def _batch_phase_exponents(
    label: IrrepLabel, m: np.ndarray, n: np.ndarray, l: np.ndarray
) -> np.ndarray:
    """Row exponents of irrep_matrix for a batch of elements, shape (B, d).

    Row k of element i has its nonzero entry in column (k + l[i]) mod d;
    only the exponents need checking in batch homomorphism tests.
    """
    _require_canonical(label)
    s, p, q, r = label.s, label.p, label.q, label.r
    N = 1 << s
    t = label.t
    d = label.dim
    k = np.arange(d, dtype=np.int64)
    kl = k[None, :] + l[:, None]
    v = (kl // d) & ((1 << t) - 1)
    e = p * m[:, None] + (k[None, :] * p + q) * n[:, None] + (d * r) * v
    return e % N
