"""The discrete Heisenberg-Weyl group HW(2^s) as data.

Elements are kept in the normal form z^m x^n y^l, encoded as residue
triples (m, n, l) mod 2^s.  The generator relations are

    x^N = y^N = z^N = e,   y x = z x y,   z central,   N = 2^s,

so normal-ordering a product only ever creates central z factors and
every operation below reduces to modular integer arithmetic.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator

from .errors import ParameterError, ResourceLimitError

DEFAULT_MAX_S = 16
DEFAULT_ENUMERATION_CAP = 10


def enumeration_cap() -> int:
    """Largest s for which enumeration paths run (env HW_MAX_S overrides)."""
    raw = os.environ.get("HW_MAX_S")
    if raw is None:
        return DEFAULT_ENUMERATION_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ParameterError(f"HW_MAX_S must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise ParameterError(f"HW_MAX_S must be >= 1, got {cap}")
    return cap


def max_s() -> int:
    """Structural cap on s for GroupParams (>= the enumeration cap)."""
    return max(DEFAULT_MAX_S, enumeration_cap())


def two_adic_valuation(x: int, s: int) -> int:
    """v2(x mod 2^s), with the convention v2(0) = s."""
    x %= 1 << s
    if x == 0:
        return s
    return (x & -x).bit_length() - 1


@dataclass(frozen=True)
class GroupParams:
    """Size parameters of HW(2^s): N = 2^s, group order N^3."""

    s: int

    def __post_init__(self) -> None:
        if not 1 <= self.s <= max_s():
            raise ParameterError(f"s must satisfy 1 <= s <= {max_s()}, got {self.s}")

    @property
    def N(self) -> int:
        return 1 << self.s

    @property
    def order(self) -> int:
        return 1 << (3 * self.s)


@dataclass(frozen=True)
class GroupElement:
    """Residue triple (m, n, l) encoding z^m x^n y^l."""

    m: int
    n: int
    l: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.m, self.n, self.l)

    def __str__(self) -> str:
        return f"{self.m},{self.n},{self.l}"

    @classmethod
    def parse(cls, text: str, params: GroupParams) -> "GroupElement":
        """Parse the CLI syntax "m,n,l" (decimal residues, reduced mod 2^s)."""
        parts = text.split(",")
        if len(parts) != 3:
            raise ParameterError(f"element must be 'm,n,l', got {text!r}")
        try:
            m, n, l = (int(part) for part in parts)
        except ValueError as exc:
            raise ParameterError(f"element components must be integers: {text!r}") from exc
        N = params.N
        return cls(m % N, n % N, l % N)

    def to_json(self) -> dict[str, int]:
        return {"m": self.m, "n": self.n, "l": self.l}


IDENTITY = GroupElement(0, 0, 0)


def _check_element(g: GroupElement, params: GroupParams) -> None:
    N = params.N
    if not (0 <= g.m < N and 0 <= g.n < N and 0 <= g.l < N):
        raise ParameterError(f"element {g} is not reduced mod 2^{params.s}; mismatched s?")


def multiply(a: GroupElement, b: GroupElement, params: GroupParams) -> GroupElement:
    """Normal-ordered product.

    Moving y^l past x^n' creates l*n' central factors, so
    (m,n,l)*(m',n',l') = (m+m'+l*n', n+n', l+l') mod 2^s.
    """
    _check_element(a, params)
    _check_element(b, params)
    N = params.N
    return GroupElement((a.m + b.m + a.l * b.n) % N, (a.n + b.n) % N, (a.l + b.l) % N)


def inverse(a: GroupElement, params: GroupParams) -> GroupElement:
    """Inverse in normal form: (-m + l*n, -n, -l) mod 2^s."""
    _check_element(a, params)
    N = params.N
    return GroupElement((-a.m + a.l * a.n) % N, (-a.n) % N, (-a.l) % N)


def conjugate(g: GroupElement, h: GroupElement, params: GroupParams) -> GroupElement:
    """h * g * h^-1 in normal form."""
    return multiply(multiply(h, g, params), inverse(h, params), params)


@dataclass(frozen=True)
class ConjugacyClass:
    """Class of z^m x^n y^l: all z-shifts by multiples of 2^k.

    k is the joint 2-adic valuation min(v2(n), v2(l)) (v2(0) = s); the
    class has 2^(s-k) members and its canonical representative reduces
    m mod 2^k.
    """

    s: int
    representative: GroupElement
    k: int

    @property
    def size(self) -> int:
        return 1 << (self.s - self.k)

    def members(self) -> tuple[GroupElement, ...]:
        N = 1 << self.s
        rep = self.representative
        step = 1 << self.k
        return tuple(
            GroupElement((rep.m + a * step) % N, rep.n, rep.l) for a in range(self.size)
        )

    def to_json(self) -> dict:
        return {
            "representative": self.representative.to_json(),
            "k": self.k,
            "size": self.size,
        }


def conjugacy_class_of(g: GroupElement, params: GroupParams) -> ConjugacyClass:
    """The conjugacy class containing g, in canonical form."""
    _check_element(g, params)
    s = params.s
    k = min(two_adic_valuation(g.n, s), two_adic_valuation(g.l, s))
    rep = GroupElement(g.m % (1 << k), g.n, g.l)
    return ConjugacyClass(s=s, representative=rep, k=k)


def _class_pairs(s: int, k: int) -> Iterator[tuple[int, int]]:
    """(n, l) pairs with min(v2(n), v2(l)) == k, in lexicographic order."""
    N = 1 << s
    if k == s:
        yield (0, 0)
        return
    step = 1 << k
    double = step << 1
    for n in range(0, N, step):
        for l in range(0, N, step):
            # both valuations > k (v2(0) = s > k) would put the pair in a later k
            if n % double == 0 and l % double == 0:
                continue
            yield (n, l)


def enumerate_classes(params: GroupParams) -> list[ConjugacyClass]:
    """All conjugacy classes, ordered lexicographically on (k, m, n, l)."""
    s = params.s
    if s > enumeration_cap():
        raise ResourceLimitError(
            f"class enumeration capped at s <= {enumeration_cap()} (HW_MAX_S overrides)"
        )
    out: list[ConjugacyClass] = []
    for k in range(s + 1):
        for m in range(1 << k):
            for n, l in _class_pairs(s, k):
                out.append(ConjugacyClass(s=s, representative=GroupElement(m, n, l), k=k))
    return out


def class_count_formula(s: int) -> int:
    """Closed-form number of conjugacy classes of HW(2^s)."""
    if s < 1:
        raise ParameterError(f"s must be >= 1, got {s}")
    total = sum(
        2 ** (2 * s - t - tp - 2) * 2 ** min(t, tp) for t in range(s) for tp in range(s)
    )
    return total + 2**s * (s + 1)
