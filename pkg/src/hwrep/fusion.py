"""Tensor-product decomposition of HW(2^s) irreps.

Two independent routes compute the multiplicity of D3 inside D1 (x) D2:

* brute force: the exact character sum
  (1/2^3s) * sum_g chi1(g) chi2(g) conj(chi3(g)), accumulated as a
  cyclotomic integer and reduced, restricted to the joint character
  support (the fully naive sum over all 2^3s elements is kept behind
  ``naive=True`` as the ultimate small-s oracle);
* closed form: with t1 <= t2, the multiplicity is 2^(s-t2+t1-t3) when
  p3 = p1+p2 (mod 2^s) and q3, r3 match q1+q2, r1+r2 mod 2^t1, else 0.

The two must agree everywhere; the verification suite checks that.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .characters import character
from .cyclotomic import CycInt
from .errors import (
    HwError,
    NonCanonicalLabelError,
    NotRationalIntegerError,
    ParameterError,
    ResourceLimitError,
)
from .group import GroupElement
from .reps import IrrepLabel, enumerate_irreps

NAIVE_CAP = 2
BRUTEFORCE_CAP = 6
TABLE_CAP = 6


def _check_triple(*labels: IrrepLabel) -> int:
    s = labels[0].s
    for label in labels:
        if label.s != s:
            raise ParameterError("all labels must share the same s")
        if not label.is_canonical:
            raise NonCanonicalLabelError(
                f"label {label} is not canonical; canonical form is {label.canonical()}"
            )
    return s


def fusion_coeff_bruteforce(
    D1: IrrepLabel, D2: IrrepLabel, D3: IrrepLabel, *, naive: bool = False
) -> int:
    """Multiplicity of D3 in D1 (x) D2 by exact character summation."""
    s = _check_triple(D1, D2, D3)
    N = 1 << s
    order = N**3
    if naive:
        if s > NAIVE_CAP:
            raise ResourceLimitError(f"naive fusion sum capped at s <= {NAIVE_CAP}")
        hist = [0] * N
        for m in range(N):
            for n in range(N):
                for l in range(N):
                    g = GroupElement(m, n, l)
                    c1 = character(D1, g)
                    c2 = character(D2, g)
                    c3 = character(D3, g)
                    if c1.is_zero() or c2.is_zero() or c3.is_zero():
                        continue
                    e = (c1.exp + c2.exp - c3.exp) % N
                    hist[e] += c1.scale * c2.scale * c3.scale
        total = CycInt(N, hist)
    else:
        if s > BRUTEFORCE_CAP:
            raise ResourceLimitError(f"fusion brute force capped at s <= {BRUTEFORCE_CAP}")
        t_min = min(D1.t, D2.t, D3.t)
        step = 1 << (s - t_min)
        scale = D1.dim * D2.dim * D3.dim
        dp = (D1.p + D2.p - D3.p) % N
        dq = (D1.q + D2.q - D3.q) % N
        dr = (D1.r + D2.r - D3.r) % N
        m = np.arange(N, dtype=np.int64)
        n = np.arange(0, N, step, dtype=np.int64)
        l = np.arange(0, N, step, dtype=np.int64)
        e = (
            (dp * m)[:, None, None]
            + (dq * n)[None, :, None]
            + (dr * l)[None, None, :]
        ) % N
        counts = np.bincount(e.ravel(), minlength=N)
        total = CycInt(N, (scale * int(c) for c in counts))
    value = total.to_int()
    if value % order:
        raise NotRationalIntegerError(
            f"fusion sum {value} for {D1} (x) {D2} -> {D3} is not divisible by {order}"
        )
    return value // order


def fusion_coeff_closed(D1: IrrepLabel, D2: IrrepLabel, D3: IrrepLabel) -> int:
    """Closed-form multiplicity; agrees with the brute-force sum everywhere."""
    s = _check_triple(D1, D2, D3)
    N = 1 << s
    a, b = (D1, D2) if D1.t <= D2.t else (D2, D1)
    if (a.p + b.p) % N != D3.p:
        return 0
    low = 1 << a.t
    if (a.q + b.q - D3.q) % low or (a.r + b.r - D3.r) % low:
        return 0
    exponent = s - b.t + a.t - D3.t
    if exponent < 0:
        # cannot fire when the deltas hold: t3 = t1 for t1 < t2, t3 <= s for t1 = t2
        raise HwError(
            f"fusion multiplicity exponent {exponent} < 0 for {D1}, {D2} -> {D3}; "
            "this contradicts the closed form and signals an internal inconsistency"
        )
    return 1 << exponent


@dataclass(frozen=True)
class FusionTerm:
    """One constituent of a decomposition: a canonical label with multiplicity."""

    label: IrrepLabel
    multiplicity: int

    def to_json(self) -> dict:
        return {"label": str(self.label), "mult": self.multiplicity}


def fuse(D1: IrrepLabel, D2: IrrepLabel) -> list[FusionTerm]:
    """Full decomposition of D1 (x) D2 into canonical irreps with multiplicities."""
    s = _check_triple(D1, D2)
    N = 1 << s
    a, b = (D1, D2) if D1.t <= D2.t else (D2, D1)
    p3 = (a.p + b.p) % N
    t3 = IrrepLabel(s, p3, 0, 0).t
    low = 1 << a.t
    exponent = s - b.t + a.t - t3
    if exponent < 0:
        raise HwError(
            f"fusion multiplicity exponent {exponent} < 0 for {D1} (x) {D2}; "
            "this contradicts the closed form and signals an internal inconsistency"
        )
    mult = 1 << exponent
    q_start = (a.q + b.q) % low
    r_start = (a.r + b.r) % low
    terms = [
        FusionTerm(IrrepLabel(s, p3, q3, r3), mult)
        for q3 in range(q_start, 1 << t3, low)
        for r3 in range(r_start, 1 << t3, low)
    ]
    terms.sort(key=lambda term: term.label.sort_key)
    total = sum(term.multiplicity * term.label.dim for term in terms)
    if total != D1.dim * D2.dim:
        raise HwError(
            f"dimension mismatch in {D1} (x) {D2}: decomposition carries {total}, "
            f"expected {D1.dim * D2.dim}"
        )
    return terms


@dataclass(frozen=True)
class FusionRow:
    left: IrrepLabel
    right: IrrepLabel
    terms: tuple[FusionTerm, ...]

    def to_json(self) -> dict:
        return {
            "left": str(self.left),
            "right": str(self.right),
            "terms": [term.to_json() for term in self.terms],
        }


@dataclass(frozen=True)
class FusionTable:
    """Decompositions of all unordered pairs of irreps at one s."""

    s: int
    rows: tuple[FusionRow, ...]

    def to_json(self) -> dict:
        return {"s": self.s, "rows": [row.to_json() for row in self.rows]}

    def to_csv_text(self) -> str:
        import csv
        import io

        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["left", "right", "term", "mult"])
        for row in self.rows:
            for term in row.terms:
                writer.writerow([str(row.left), str(row.right), str(term.label), term.multiplicity])
        return buf.getvalue()


def fusion_table(s: int) -> FusionTable:
    """All unordered pairs in label order; fuse is symmetric so this is complete."""
    if s > TABLE_CAP:
        raise ResourceLimitError(f"fusion table capped at s <= {TABLE_CAP}")
    labels = enumerate_irreps(s)
    rows = []
    for i, left in enumerate(labels):
        for right in labels[i:]:
            rows.append(FusionRow(left, right, tuple(fuse(left, right))))
    return FusionTable(s=s, rows=tuple(rows))
