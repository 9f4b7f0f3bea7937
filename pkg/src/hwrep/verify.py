"""Verification suite: every identity the construction is supposed to satisfy.

Each check returns pass/fail/skipped with machine-readable details; the CLI
`verify` command aggregates them into a report.  Exhaustive variants run at
small s, seeded sampling takes over where exhaustion is quadratic in the
group order, and far beyond desk scale only the counting formulas remain.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import dataclass, field
from importlib import resources

import numpy as np

from .characters import character, character_norm_squared, character_table
from .cyclotomic import CycInt
from .errors import ParameterError
from .fourier import verify_fourier_relations
from .fusion import FusionTerm, fuse, fusion_coeff_bruteforce, fusion_coeff_closed
from .group import (
    GroupElement,
    GroupParams,
    class_count_formula,
    conjugacy_class_of,
    conjugate,
    enumerate_classes,
    inverse,
    multiply,
)
from .reps import (
    IrrepLabel,
    MonomialMatrix,
    _batch_phase_exponents,
    canonicalize_label,
    distinct_orbit_count_formula,
    enumerate_distinct_orbits,
    enumerate_irreps,
    generator_matrices,
    irrep_count_formula,
    irrep_matrix,
    is_faithful,
    iter_irreps,
    little_group,
    orbit_of,
)

TOLERANCE = 1e-9
FULL_LEVEL_MAX_S = 4

# Reference counts of irreps (= conjugacy classes) for s = 1..10.
REFERENCE_COUNTS = {
    1: 5,
    2: 22,
    3: 92,
    4: 376,
    5: 1520,
    6: 6112,
    7: 24512,
    8: 98176,
    9: 392960,
    10: 1572352,
}

# Distinct-orbit listing of HW_4: memberships per representative (p, q).
HW4_ORBITS = {
    (1, 0): (0, 1, 2, 3),
    (3, 0): (0, 1, 2, 3),
    (2, 0): (0, 2),
    (2, 1): (1, 3),
    (0, 0): (0,),
    (0, 1): (1,),
    (0, 2): (2,),
    (0, 3): (3,),
}


@dataclass
class CheckResult:
    name: str
    status: str  # "pass" | "fail" | "skipped"
    details: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status != "fail"


@dataclass
class VerifyReport:
    s: int
    level: str
    seed: int
    tolerance: float
    checks: list[CheckResult]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_json(self, timings: bool = False) -> dict:
        out_checks = []
        for check in self.checks:
            entry = {"name": check.name, "status": check.status, "details": check.details}
            if timings:
                entry["elapsed"] = round(check.elapsed, 3)
            out_checks.append(entry)
        return {
            "s": self.s,
            "level": self.level,
            "seed": self.seed,
            "tolerance": self.tolerance,
            "overall": "pass" if self.passed else "fail",
            "checks": out_checks,
        }

    def pretty_lines(self, timings: bool = False) -> list[str]:
        lines = [f"verification s={self.s} level={self.level} seed={self.seed}"]
        for check in self.checks:
            summary = ", ".join(f"{k}={v}" for k, v in sorted(check.details.items()))
            if timings:
                summary += f" [{check.elapsed:.2f}s]"
            lines.append(f"{check.status.upper():7s} {check.name}  {summary}")
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return lines


def _rng(seed: int, name: str) -> random.Random:
    return random.Random(f"{name}:{seed}")


def _skip(name: str, reason: str) -> CheckResult:
    return CheckResult(name=name, status="skipped", details={"reason": reason})


def _result(name: str, ok: bool, details: dict) -> CheckResult:
    return CheckResult(name=name, status="pass" if ok else "fail", details=details)


def _random_element(rng: random.Random, N: int) -> GroupElement:
    return GroupElement(rng.randrange(N), rng.randrange(N), rng.randrange(N))


def _all_elements(N: int) -> list[GroupElement]:
    return [GroupElement(m, n, l) for m in range(N) for n in range(N) for l in range(N)]


# --------------------------------------------------------------------------
# counting and enumeration
# --------------------------------------------------------------------------


def check_counting_formulas(s: int, level: str, seed: int) -> CheckResult:
    top = max(s, 10)
    mismatches = []
    for k in range(1, top + 1):
        n_irreps = irrep_count_formula(k)
        n_classes = class_count_formula(k)
        if n_irreps != n_classes:
            mismatches.append(k)
        if k in REFERENCE_COUNTS and n_irreps != REFERENCE_COUNTS[k]:
            mismatches.append(k)
    return _result(
        "counting_formulas",
        not mismatches,
        {"max_s": top, "value_at_s": irrep_count_formula(s), "mismatches": mismatches},
    )


def check_irrep_enumeration(s: int, level: str, seed: int) -> CheckResult:
    name = "irrep_enumeration"
    if s > 6:
        return _skip(name, "enumeration check capped at s <= 6")
    labels = enumerate_irreps(s)
    expected = irrep_count_formula(s)
    canonical = all(label.is_canonical for label in labels)
    distinct = len(set(labels)) == len(labels)
    return _result(
        name,
        len(labels) == expected and canonical and distinct,
        {"count": len(labels), "expected": expected},
    )


def check_class_enumeration(s: int, level: str, seed: int) -> CheckResult:
    name = "class_enumeration"
    if s > 5:
        return _skip(name, "class enumeration check capped at s <= 5")
    classes = enumerate_classes(GroupParams(s))
    expected = class_count_formula(s)
    size_sum = sum(cls.size for cls in classes)
    reps_canonical = all(cls.representative.m < (1 << cls.k) for cls in classes)
    return _result(
        name,
        len(classes) == expected and size_sum == 1 << (3 * s) and reps_canonical,
        {"count": len(classes), "expected": expected, "size_sum": size_sum},
    )


def check_completeness(s: int, level: str, seed: int) -> CheckResult:
    name = "completeness_dim_squares"
    if s > 10:
        return _skip(name, "capped at s <= 10")
    total = sum(label.dim**2 for label in iter_irreps(s))
    return _result(name, total == 1 << (3 * s), {"sum_dim_sq": total, "expected": 1 << (3 * s)})


def check_orbits(s: int, level: str, seed: int) -> CheckResult:
    name = "orbit_enumeration"
    if s > 6:
        return _skip(name, "capped at s <= 6")
    N = 1 << s
    orbits = enumerate_distinct_orbits(s)
    expected = distinct_orbit_count_formula(s)
    ok = len(orbits) == expected
    # for each p the distinct orbits' q-sets partition Z_N
    by_p: dict[int, list[tuple[int, ...]]] = {}
    for orbit in orbits:
        by_p.setdefault(orbit.p, []).append(orbit.members())
    covered = 0
    for p in range(N):
        sets = by_p.get(p, [])
        merged: set[int] = set()
        for members in sets:
            if merged & set(members):
                ok = False
            merged |= set(members)
        covered += len(merged)
        if merged != set(range(N)):
            ok = False
    if s <= 3:
        # oracle: close every (p, q) under the action q -> p + q and dedupe
        seen = {(orbit.p, orbit.members()) for orbit in orbits}
        brute = {(p, orbit_of(s, p, q).members()) for p in range(N) for q in range(N)}
        if seen != brute:
            ok = False
    if s == 2:
        listing = {(o.p, o.q): o.members() for o in orbits}
        if listing != HW4_ORBITS:
            ok = False
    return _result(name, ok, {"count": len(orbits), "expected": expected, "covered": covered})


def check_little_groups(s: int, level: str, seed: int) -> CheckResult:
    name = "little_groups"
    if s > 6:
        return _skip(name, "capped at s <= 6")
    N = 1 << s
    ok = True
    for p in range(N):
        desc = little_group(s, p)
        if desc.order * desc.generator_exponent != N:
            ok = False
        # the parent subgroup K = H x B^(p,q) must have order 2^(2s+t)
        if desc.order * N * N != 1 << (2 * s + desc.t):
            ok = False
        for l in range(N):
            if desc.contains(l) != ((l * p) % N == 0):
                ok = False
    return _result(name, ok, {"ps_checked": N})


def check_class_partition(s: int, level: str, seed: int) -> CheckResult:
    name = "class_partition"
    if s > 3:
        return _skip(name, "capped at s <= 3")
    classes = enumerate_classes(GroupParams(s))
    seen: set[GroupElement] = set()
    duplicates = 0
    for cls in classes:
        members = cls.members()
        if len(set(members)) != cls.size:
            duplicates += 1
        for g in members:
            if g in seen:
                duplicates += 1
            seen.add(g)
    ok = duplicates == 0 and len(seen) == 1 << (3 * s)
    return _result(name, ok, {"covered": len(seen), "expected": 1 << (3 * s)})


def check_class_oracle(s: int, level: str, seed: int) -> CheckResult:
    name = "class_bruteforce_oracle"
    if s > 3:
        return _skip(name, "capped at s <= 3")
    params = GroupParams(s)
    everyone = _all_elements(params.N)
    if level == "full" or s <= 2:
        sample = everyone
    else:
        rng = _rng(seed, name)
        sample = [rng.choice(everyone) for _ in range(64)]
    failures = 0
    for g in sample:
        brute = frozenset(conjugate(g, h, params) for h in everyone)
        if brute != frozenset(conjugacy_class_of(g, params).members()):
            failures += 1
    return _result(name, failures == 0, {"elements": len(sample), "failures": failures})


def check_group_relations(s: int, level: str, seed: int) -> CheckResult:
    name = "group_relations"
    params = GroupParams(s)
    N = params.N
    e = GroupElement(0, 0, 0)
    x, y, z = GroupElement(0, 1, 0), GroupElement(0, 0, 1), GroupElement(1, 0, 0)

    def power(g: GroupElement, k: int) -> GroupElement:
        acc = e
        for _ in range(k):
            acc = multiply(acc, g, params)
        return acc

    ok = power(x, N) == e and power(y, N) == e and power(z, N) == e
    ok = ok and multiply(y, x, params) == multiply(z, multiply(x, y, params), params)
    if s <= 2:
        everyone = _all_elements(N)
        for g in everyone:
            if multiply(z, g, params) != multiply(g, z, params):
                ok = False
        for a in everyone:
            for b in everyone:
                for c in everyone:
                    lhs = multiply(multiply(a, b, params), c, params)
                    rhs = multiply(a, multiply(b, c, params), params)
                    if lhs != rhs:
                        ok = False
        triples = len(everyone) ** 3
    else:
        rng = _rng(seed, name)
        triples = 10_000
        for _ in range(triples):
            a, b, c = (_random_element(rng, N) for _ in range(3))
            if multiply(multiply(a, b, params), c, params) != multiply(
                a, multiply(b, c, params), params
            ):
                ok = False
            if multiply(z, a, params) != multiply(a, z, params):
                ok = False
    return _result(name, ok, {"triples": triples})


# --------------------------------------------------------------------------
# representation identities
# --------------------------------------------------------------------------


def check_homomorphism(s: int, level: str, seed: int) -> CheckResult:
    name = "homomorphism"
    if s > 4:
        return _skip(name, "capped at s <= 4")
    params = GroupParams(s)
    N = params.N
    labels = enumerate_irreps(s)
    failures = 0
    pairs_checked = 0
    if s <= 2:
        everyone = _all_elements(N)
        for label in labels:
            images = {g: irrep_matrix(label, g) for g in everyone}
            for g in everyone:
                for h in everyone:
                    pairs_checked += 1
                    if images[g] @ images[h] != images[multiply(g, h, params)]:
                        failures += 1
    else:
        rng = np.random.default_rng(seed)
        per_irrep = 10_000 if level == "full" else 1_000
        for label in labels:
            m1, n1, l1, m2, n2, l2 = rng.integers(0, N, size=(6, per_irrep), dtype=np.int64)
            m3 = (m1 + m2 + l1 * n2) % N
            n3 = (n1 + n2) % N
            l3 = (l1 + l2) % N
            e1 = _batch_phase_exponents(label, m1, n1, l1)
            e2 = _batch_phase_exponents(label, m2, n2, l2)
            e3 = _batch_phase_exponents(label, m3, n3, l3)
            d = label.dim
            cols = (np.arange(d)[None, :] + l1[:, None]) % d
            composed = (e1 + np.take_along_axis(e2, cols, axis=1)) % N
            failures += int(np.count_nonzero(np.any(composed != e3, axis=1)))
            pairs_checked += per_irrep
        # bridge: the batch kernel agrees with irrep_matrix entry by entry
        bridge_rng = _rng(seed, name)
        for _ in range(100):
            label = bridge_rng.choice(labels)
            g = _random_element(bridge_rng, N)
            mat = irrep_matrix(label, g)
            batch = _batch_phase_exponents(
                label,
                np.array([g.m], dtype=np.int64),
                np.array([g.n], dtype=np.int64),
                np.array([g.l], dtype=np.int64),
            )[0]
            if tuple(int(v) for v in batch) != mat.exps:
                failures += 1
            if any(mat.sigma[k] != (k + g.l) % label.dim for k in range(label.dim)):
                failures += 1
    return _result(
        name, failures == 0, {"irreps": len(labels), "pairs": pairs_checked, "failures": failures}
    )


def check_unitarity(s: int, level: str, seed: int) -> CheckResult:
    name = "unitarity"
    if s > 4:
        return _skip(name, "capped at s <= 4")
    params = GroupParams(s)
    N = params.N
    failures = 0
    count = 0
    rng = _rng(seed, name)
    for label in enumerate_irreps(s):
        if s <= 2:
            sample = _all_elements(N)
        else:
            sample = [_random_element(rng, N) for _ in range(1000 if level == "full" else 200)]
        ident = MonomialMatrix.identity(label.dim, N)
        for g in sample:
            count += 1
            if irrep_matrix(label, g) @ irrep_matrix(label, inverse(g, params)) != ident:
                failures += 1
    return _result(name, failures == 0, {"products": count, "failures": failures})


def check_periodicity(s: int, level: str, seed: int) -> CheckResult:
    name = "twisted_periodicity"
    if s > 4:
        return _skip(name, "capped at s <= 4")
    N = 1 << s
    failures = []
    for label in enumerate_irreps(s):
        d = label.dim
        z, x, y = generator_matrices(label)
        ident = MonomialMatrix.identity(d, N)
        if x.power(d) != ident.scale((d * label.q) % N):
            failures.append(f"x^{d} at {label}")
        if y.power(d) != ident.scale((d * label.r) % N):
            failures.append(f"y^{d} at {label}")
        if z != ident.scale(label.p % N):
            failures.append(f"z at {label}")
        if x.power(N) != ident or y.power(N) != ident or z.power(N) != ident:
            failures.append(f"order 2^s at {label}")
    return _result(name, not failures, {"failures": failures[:5]})


def check_basic_relation(s: int, level: str, seed: int) -> CheckResult:
    name = "basic_relation"
    if s > 4:
        return _skip(name, "capped at s <= 4")
    failures = 0
    for label in enumerate_irreps(s):
        z, x, y = generator_matrices(label)
        if y @ x != z @ (x @ y):
            failures += 1
    return _result(name, failures == 0, {"failures": failures})


def check_generators_match_matrix(s: int, level: str, seed: int) -> CheckResult:
    name = "generators_match_irrep_matrix"
    if s > 4:
        return _skip(name, "capped at s <= 4")
    failures = 0
    for label in enumerate_irreps(s):
        z, x, y = generator_matrices(label)
        if z != irrep_matrix(label, GroupElement(1, 0, 0)):
            failures += 1
        if x != irrep_matrix(label, GroupElement(0, 1, 0)):
            failures += 1
        if y != irrep_matrix(label, GroupElement(0, 0, 1)):
            failures += 1
    return _result(name, failures == 0, {"failures": failures})


def check_commutator(s: int, level: str, seed: int) -> CheckResult:
    name = "commutator_identity"
    if s > 3:
        return _skip(name, "capped at s <= 3")
    N = 1 << s
    rng = _rng(seed, name)
    failures = 0
    pairs = 0
    for label in enumerate_irreps(s):
        if label.p == 0:
            continue
        per = 1000 if level == "full" else 100
        for _ in range(per):
            g = _random_element(rng, N)
            h = _random_element(rng, N)
            pairs += 1
            if not _commutator_holds(label, g, h):
                failures += 1
    return _result(name, failures == 0, {"pairs": pairs, "failures": failures})


def _commutator_holds(label: IrrepLabel, g: GroupElement, h: GroupElement) -> bool:
    """[G(g), G(h)] == (w^(p n' l) - w^(p n l')) G(J_(m+m', n+n', l+l')) exactly."""
    N = 1 << label.s
    A = irrep_matrix(label, g)
    B = irrep_matrix(label, h)
    AB = A @ B
    BA = B @ A
    total = GroupElement((g.m + h.m) % N, (g.n + h.n) % N, (g.l + h.l) % N)
    S = irrep_matrix(label, total)
    if AB.sigma != BA.sigma or AB.sigma != S.sigma:
        return False
    c1 = (label.p * h.n * g.l) % N
    c2 = (label.p * g.n * h.l) % N
    scalar = CycInt.root(N, c1) - CycInt.root(N, c2)
    for k in range(label.dim):
        lhs = CycInt.root(N, AB.exps[k]) - CycInt.root(N, BA.exps[k])
        rhs = scalar * CycInt.root(N, S.exps[k])
        if lhs != rhs:
            return False
    return True


# --------------------------------------------------------------------------
# characters
# --------------------------------------------------------------------------


def check_char_trace(s: int, level: str, seed: int) -> CheckResult:
    name = "character_trace_consistency"
    if s > 4:
        return _skip(name, "capped at s <= 4")
    N = 1 << s
    rng = _rng(seed, name)
    failures = 0
    count = 0
    for label in enumerate_irreps(s):
        if s <= 2:
            sample = _all_elements(N)
        else:
            sample = [_random_element(rng, N) for _ in range(500 if level == "full" else 100)]
        for g in sample:
            count += 1
            if character(label, g).to_cycint(N) != irrep_matrix(label, g).trace():
                failures += 1
    return _result(name, failures == 0, {"evaluations": count, "failures": failures})


def check_char_class_function(s: int, level: str, seed: int) -> CheckResult:
    name = "character_class_function"
    if s > 3:
        return _skip(name, "capped at s <= 3")
    params = GroupParams(s)
    failures = 0
    for label in enumerate_irreps(s):
        for cls in enumerate_classes(params):
            values = {character(label, g) for g in cls.members()}
            if len(values) != 1:
                failures += 1
    return _result(name, failures == 0, {"failures": failures})


def check_char_norms(s: int, level: str, seed: int) -> CheckResult:
    name = "irreducibility_norm"
    if s > 4:
        return _skip(name, "capped at s <= 4")
    expected = 1 << (3 * s)
    failures = [
        str(label) for label in enumerate_irreps(s) if character_norm_squared(label) != expected
    ]
    return _result(name, not failures, {"expected": expected, "failures": failures[:5]})


def check_char_orthogonality(s: int, level: str, seed: int) -> CheckResult:
    name = "row_orthogonality"
    if s > 3:
        return _skip(name, "capped at s <= 3")
    table = character_table(s)
    N = 1 << s
    order = 1 << (3 * s)
    sizes = [cls.size for cls in table.classes]
    rows = table.values
    failures = 0
    for i in range(len(rows)):
        for j in range(i, len(rows)):
            hist = [0] * N
            for size, vi, vj in zip(sizes, rows[i], rows[j]):
                if vi.is_zero() or vj.is_zero():
                    continue
                hist[(vi.exp - vj.exp) % N] += size * vi.scale * vj.scale
            total = CycInt(N, hist)
            expected = order if i == j else 0
            if total != CycInt.from_int(N, expected):
                failures += 1
    return _result(name, failures == 0, {"rows": len(rows), "failures": failures})


def check_char_distinctness(s: int, level: str, seed: int) -> CheckResult:
    name = "character_distinctness"
    if s > 3:
        return _skip(name, "capped at s <= 3")
    table = character_table(s)
    rows = {tuple(row) for row in table.values}
    ok = len(rows) == len(table.irreps)
    return _result(name, ok, {"irreps": len(table.irreps), "distinct_rows": len(rows)})


def check_canonicalization(s: int, level: str, seed: int) -> CheckResult:
    name = "canonicalization_preserves_characters"
    if s > 3:
        return _skip(name, "capped at s <= 3")
    from .characters import characters_equal

    N = 1 << s
    rng = _rng(seed, name)
    failures = 0
    trials = 50 if s >= 3 else 200
    for _ in range(trials):
        p, q, r = rng.randrange(N), rng.randrange(N), rng.randrange(N)
        raw = IrrepLabel(s, p, q, r)
        canon = canonicalize_label(s, p, q, r)
        if not canon.is_canonical or not characters_equal(raw, canon):
            failures += 1
        if canonicalize_label(s, canon.p, canon.q, canon.r) != canon:
            failures += 1
    return _result(name, failures == 0, {"trials": trials, "failures": failures})


# --------------------------------------------------------------------------
# fusion
# --------------------------------------------------------------------------


def check_fusion_oracle(s: int, level: str, seed: int) -> CheckResult:
    name = "fusion_oracle_equivalence"
    if s > 3:
        return _skip(name, "capped at s <= 3")
    labels = enumerate_irreps(s)
    failures = 0
    triples = 0
    if s <= 2:
        for D1, D2, D3 in itertools.product(labels, repeat=3):
            triples += 1
            if fusion_coeff_closed(D1, D2, D3) != fusion_coeff_bruteforce(D1, D2, D3):
                failures += 1
    elif level == "full":
        for i, D1 in enumerate(labels):
            for D2 in labels[i:]:
                for D3 in labels:
                    triples += 1
                    if fusion_coeff_closed(D1, D2, D3) != fusion_coeff_bruteforce(D1, D2, D3):
                        failures += 1
    else:
        rng = _rng(seed, name)
        for _ in range(2000):
            D1, D2, D3 = (rng.choice(labels) for _ in range(3))
            triples += 1
            if fusion_coeff_closed(D1, D2, D3) != fusion_coeff_bruteforce(D1, D2, D3):
                failures += 1
    return _result(name, failures == 0, {"triples": triples, "failures": failures})


def check_fusion_naive_oracle(s: int, level: str, seed: int) -> CheckResult:
    name = "fusion_naive_oracle"
    if s > 2:
        return _skip(name, "naive sum capped at s <= 2")
    labels = enumerate_irreps(s)
    failures = 0
    triples = 0
    if s == 1:
        candidates = list(itertools.product(labels, repeat=3))
    else:
        rng = _rng(seed, name)
        candidates = [tuple(rng.choice(labels) for _ in range(3)) for _ in range(500)]
    for D1, D2, D3 in candidates:
        triples += 1
        naive = fusion_coeff_bruteforce(D1, D2, D3, naive=True)
        if naive != fusion_coeff_closed(D1, D2, D3):
            failures += 1
        if naive != fusion_coeff_bruteforce(D1, D2, D3):
            failures += 1
    return _result(name, failures == 0, {"triples": triples, "failures": failures})


def check_fusion_dimension(s: int, level: str, seed: int) -> CheckResult:
    name = "fusion_dimension_conservation"
    if s > 4:
        return _skip(name, "capped at s <= 4")
    labels = enumerate_irreps(s)
    failures = 0
    rows = 0
    for i, D1 in enumerate(labels):
        for D2 in labels[i:]:
            rows += 1
            terms = fuse(D1, D2)
            if sum(t.multiplicity * t.label.dim for t in terms) != D1.dim * D2.dim:
                failures += 1
            if any(t.multiplicity < 1 or not t.label.is_canonical for t in terms):
                failures += 1
            if len({t.label for t in terms}) != len(terms):
                failures += 1
    return _result(name, failures == 0, {"rows": rows, "failures": failures})


def check_fusion_commutativity(s: int, level: str, seed: int) -> CheckResult:
    name = "fusion_commutativity"
    if s > 3:
        return _skip(name, "capped at s <= 3")
    labels = enumerate_irreps(s)
    failures = 0
    for i, D1 in enumerate(labels):
        for D2 in labels[i:]:
            if fuse(D1, D2) != fuse(D2, D1):
                failures += 1
    return _result(name, failures == 0, {"failures": failures})


def _decomposition_multiset(terms: list[FusionTerm]) -> dict[IrrepLabel, int]:
    out: dict[IrrepLabel, int] = {}
    for term in terms:
        out[term.label] = out.get(term.label, 0) + term.multiplicity
    return out


def check_fusion_associativity(s: int, level: str, seed: int) -> CheckResult:
    name = "fusion_associativity"
    if s > 2:
        return _skip(name, "capped at s <= 2")
    labels = enumerate_irreps(s)
    failures = 0
    triples = 0
    for D1, D2, D3 in itertools.product(labels, repeat=3):
        triples += 1
        left: dict[IrrepLabel, int] = {}
        for term in fuse(D1, D2):
            for inner in fuse(term.label, D3):
                left[inner.label] = left.get(inner.label, 0) + term.multiplicity * inner.multiplicity
        right: dict[IrrepLabel, int] = {}
        for term in fuse(D2, D3):
            for inner in fuse(D1, term.label):
                right[inner.label] = right.get(inner.label, 0) + term.multiplicity * inner.multiplicity
        if left != right:
            failures += 1
    return _result(name, failures == 0, {"triples": triples, "failures": failures})


def check_fusion_faithful(s: int, level: str, seed: int) -> CheckResult:
    name = "faithful_fusion_nonfaithful"
    if s > 4:
        return _skip(name, "capped at s <= 4")
    faithfuls = [label for label in enumerate_irreps(s) if is_faithful(label)]
    failures = 0
    for D1 in faithfuls:
        for D2 in faithfuls:
            if any(is_faithful(term.label) for term in fuse(D1, D2)):
                failures += 1
    return _result(name, failures == 0, {"faithful_pairs": len(faithfuls) ** 2, "failures": failures})


# --------------------------------------------------------------------------
# golden files
# --------------------------------------------------------------------------


def golden_fusion_text(s: int) -> str:
    """Canonical serialization of the reference fusion rules for s = 1, 2.

    s = 1 covers every pair; s = 2 covers the pairs of irreps of dimension
    greater than one (the worked HW_4 rules).
    """
    labels = enumerate_irreps(s)
    if s == 2:
        labels = [label for label in labels if label.dim > 1]
    rows = []
    for i, left in enumerate(labels):
        for right in labels[i:]:
            rows.append(
                {
                    "left": str(left),
                    "right": str(right),
                    "terms": [term.to_json() for term in fuse(left, right)],
                }
            )
    return json.dumps({"s": s, "rows": rows}, indent=2, sort_keys=True) + "\n"


def golden_orbit_text(s: int) -> str:
    orbits = enumerate_distinct_orbits(s)
    return (
        json.dumps({"s": s, "orbits": [o.to_json() for o in orbits]}, indent=2, sort_keys=True)
        + "\n"
    )


def _golden_path(filename: str):
    return resources.files("hwrep").joinpath("golden").joinpath(filename)


def check_golden_fusion(s: int, level: str, seed: int) -> CheckResult:
    name = "golden_fusion_tables"
    if s not in (1, 2):
        return _skip(name, "golden fusion tables exist for s = 1, 2")
    shipped = _golden_path(f"fusion_s{s}.json").read_text(encoding="utf-8")
    current = golden_fusion_text(s)
    return _result(name, shipped == current, {"bytes": len(shipped), "match": shipped == current})


def check_golden_orbits(s: int, level: str, seed: int) -> CheckResult:
    name = "golden_orbit_listing"
    if s != 2:
        return _skip(name, "golden orbit listing exists for s = 2")
    shipped = _golden_path("orbits_s2.json").read_text(encoding="utf-8")
    current = golden_orbit_text(2)
    return _result(name, shipped == current, {"bytes": len(shipped), "match": shipped == current})


# --------------------------------------------------------------------------
# fourier
# --------------------------------------------------------------------------


def check_fourier(s: int, level: str, seed: int) -> CheckResult:
    name = "fourier_relations"
    if s > 5:
        return _skip(name, "capped at s <= 5")
    worst = 0.0
    failures = 0
    count = 0
    for label in enumerate_irreps(s):
        report = verify_fourier_relations(label)
        count += 1
        worst = max(worst, max(report["residuals"].values()))
        if not report["passed"]:
            failures += 1
    return _result(
        name,
        failures == 0,
        {"irreps": count, "failures": failures, "worst_residual": float(f"{worst:.3e}")},
    )


# --------------------------------------------------------------------------
# orchestration
# --------------------------------------------------------------------------

ALL_CHECKS = [
    check_counting_formulas,
    check_irrep_enumeration,
    check_class_enumeration,
    check_completeness,
    check_orbits,
    check_little_groups,
    check_class_partition,
    check_class_oracle,
    check_group_relations,
    check_homomorphism,
    check_unitarity,
    check_periodicity,
    check_basic_relation,
    check_generators_match_matrix,
    check_commutator,
    check_char_trace,
    check_char_class_function,
    check_char_norms,
    check_char_orthogonality,
    check_char_distinctness,
    check_canonicalization,
    check_fusion_oracle,
    check_fusion_naive_oracle,
    check_fusion_dimension,
    check_fusion_commutativity,
    check_fusion_associativity,
    check_fusion_faithful,
    check_golden_fusion,
    check_golden_orbits,
    check_fourier,
]


def run_verification(
    s: int, level: str = "full", seed: int = 0, tolerance: float = TOLERANCE
) -> VerifyReport:
    """Run the whole suite; level "full" refuses s > 4 (quadratic checks)."""
    if level not in ("full", "sampled"):
        raise ParameterError(f"verify level must be 'full' or 'sampled', got {level!r}")
    if level == "full" and s > FULL_LEVEL_MAX_S:
        raise ParameterError(
            f"full-level verification runs brute-force-quadratic checks and refuses "
            f"s > {FULL_LEVEL_MAX_S}; use --verify-level sampled for s = {s}"
        )
    GroupParams(s)  # validates the cap
    checks = []
    for func in ALL_CHECKS:
        start = time.perf_counter()
        try:
            result = func(s, level, seed)
        except Exception as exc:  # a crash in a check is a failure, not an abort
            result = CheckResult(
                name=func.__name__.removeprefix("check_"),
                status="fail",
                details={"error": f"{type(exc).__name__}: {exc}"},
            )
        result.elapsed = time.perf_counter() - start
        checks.append(result)
    return VerifyReport(s=s, level=level, seed=seed, tolerance=tolerance, checks=checks)
