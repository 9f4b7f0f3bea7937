"""Exact characters of HW(2^s) irreps and the character table.

Every nonzero character value is a single scaled root of unity: with
p = 2^t u and d = 2^(s-t), the character of z^m x^n y^l vanishes unless
both n and l are multiples of d, and on that support equals

    d * w^(p*m + q*n + r*l),      w = exp(2*pi*i/2^s),

so values are stored as (scale, exponent) pairs and all table identities
are checked in integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import CycInt
from .errors import NonCanonicalLabelError, ParameterError, ResourceLimitError
from .group import ConjugacyClass, GroupElement, GroupParams, enumerate_classes
from .reps import IrrepLabel, enumerate_irreps, two_adic_valuation


@dataclass(frozen=True)
class CharValue:
    """A character value: zero, or scale * w^exp with w = exp(2*pi*i/2^s)."""

    scale: int
    exp: int
    zero: bool = False

    def is_zero(self) -> bool:
        return self.zero

    def to_cycint(self, modulus: int) -> CycInt:
        if self.zero:
            return CycInt.zero(modulus)
        return self.scale * CycInt.root(modulus, self.exp)

    def __str__(self) -> str:
        if self.zero:
            return "0"
        return f"{self.scale}*w^{self.exp}"

    def to_json(self) -> dict | None:
        if self.zero:
            return None
        return {"scale": self.scale, "exp": self.exp}


_ZERO = CharValue(0, 0, zero=True)


def _char_value(s: int, p: int, q: int, r: int, g: GroupElement) -> CharValue:
    """Character of the induced rep labelled (p, q, r), any residue triple."""
    N = 1 << s
    t = two_adic_valuation(p, s)
    d = 1 << (s - t)
    if g.n % d or g.l % d:
        return _ZERO
    exp = (p * g.m + q * g.n + r * g.l) % N
    return CharValue(scale=d, exp=exp)


def character(label: IrrepLabel, g: GroupElement) -> CharValue:
    """Exact character value chi(g); equals trace(irrep_matrix(label, g))."""
    if not label.is_canonical:
        raise NonCanonicalLabelError(
            f"label {label} is not canonical; canonical form is {label.canonical()}"
        )
    N = 1 << label.s
    if not (0 <= g.m < N and 0 <= g.n < N and 0 <= g.l < N):
        raise ParameterError(f"element {g} is not reduced mod 2^{label.s}")
    return _char_value(label.s, label.p, label.q, label.r, g)


def character_norm_squared(label: IrrepLabel) -> int:
    """Sum over the group of |chi(g)|^2, evaluated on the nonzero support.

    The support is m free and n = d*v1, l = d*v2; each nonzero value is a
    scaled root of unity so |chi|^2 = scale^2 exactly.
    """
    if not label.is_canonical:
        raise NonCanonicalLabelError(f"label {label} is not canonical")
    s = label.s
    N = 1 << s
    d = label.dim
    total = 0
    for m in range(N):
        for n in range(0, N, d):
            for l in range(0, N, d):
                value = character(label, GroupElement(m, n, l))
                if not value.is_zero():
                    total += value.scale * value.scale
    return total


def characters_equal(a: IrrepLabel, b: IrrepLabel) -> bool:
    """Whether two (possibly non-canonical) labels have equal character systems.

    Characters are class functions, so equality on one representative per
    conjugacy class decides equality on the whole group.
    """
    if a.s != b.s:
        raise ParameterError(f"labels live in different groups: s={a.s} vs s={b.s}")
    params = GroupParams(a.s)
    for cls in enumerate_classes(params):
        va = _char_value(a.s, a.p, a.q, a.r, cls.representative)
        vb = _char_value(b.s, b.p, b.q, b.r, cls.representative)
        if va != vb:
            return False
    return True


@dataclass(frozen=True)
class CharacterTable:
    """Square table of exact character values, irreps x conjugacy classes."""

    s: int
    irreps: tuple[IrrepLabel, ...]
    classes: tuple[ConjugacyClass, ...]
    values: tuple[tuple[CharValue, ...], ...]

    def to_json(self) -> dict:
        return {
            "s": self.s,
            "irreps": [str(label) for label in self.irreps],
            "classes": [cls.to_json() for cls in self.classes],
            "values": [[cell.to_json() for cell in row] for row in self.values],
        }

    def to_csv_text(self) -> str:
        import csv
        import io

        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        header = ["irrep"] + [
            f"{cls.representative} (x{cls.size})" for cls in self.classes
        ]
        writer.writerow(header)
        for label, row in zip(self.irreps, self.values):
            writer.writerow([str(label)] + [str(cell) for cell in row])
        return buf.getvalue()


def character_table(s: int, table_cap: int = 6) -> CharacterTable:
    """The full table in enumeration order (rows: irreps, columns: classes)."""
    if s > table_cap:
        raise ResourceLimitError(f"character table capped at s <= {table_cap}")
    params = GroupParams(s)
    irreps = tuple(enumerate_irreps(s))
    classes = tuple(enumerate_classes(params))
    values = tuple(
        tuple(character(label, cls.representative) for cls in classes)
        for label in irreps
    )
    return CharacterTable(s=s, irreps=irreps, classes=classes, values=values)
