"""Acceptance suite: one test per criterion, printing one PASS/FAIL line each.

Run with ``pytest -s tests/test_acceptance.py`` to see the per-criterion
lines.  Every tolerance is pinned here; nothing is deferred.
"""

import time

from hwrep import (
    class_count_formula,
    enumerate_classes,
    enumerate_distinct_orbits,
    enumerate_irreps,
    GroupParams,
    irrep_count_formula,
    verify_fourier_relations,
)
from hwrep.reps import distinct_orbit_count_formula, iter_irreps
from hwrep.verify import (
    REFERENCE_COUNTS,
    check_basic_relation,
    check_char_orthogonality,
    check_char_norms,
    check_commutator,
    check_fusion_dimension,
    check_fusion_oracle,
    check_golden_fusion,
    check_golden_orbits,
    check_homomorphism,
    check_periodicity,
)

SEED = 0
RESIDUAL_TOL = 1e-9


def _report(number: int, description: str, ok: bool, detail: str = "") -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {description}"
    if detail:
        line += f" ({detail})"
    print(line)
    assert ok, line


def test_criterion_1_counting_formulas():
    start = time.perf_counter()
    ok = True
    for s in range(1, 11):
        expected = REFERENCE_COUNTS[s]
        ok = ok and irrep_count_formula(s) == expected
        ok = ok and class_count_formula(s) == expected
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 1.0
    _report(1, "irrep and class counting formulas match the reference values for s=1..10",
            ok, f"{elapsed:.3f}s")


def test_criterion_2_enumeration_consistency():
    start = time.perf_counter()
    ok = True
    for s in range(1, 7):
        ok = ok and len(enumerate_irreps(s)) == irrep_count_formula(s)
    for s in range(1, 6):
        ok = ok and len(enumerate_classes(GroupParams(s))) == class_count_formula(s)
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 30.0
    _report(2, "enumerated irreps (s<=6) and classes (s<=5) match the formulas",
            ok, f"{elapsed:.2f}s")


def test_criterion_3_completeness():
    ok = all(
        sum(label.dim**2 for label in iter_irreps(s)) == 1 << (3 * s) for s in range(1, 11)
    )
    _report(3, "sum of squared dimensions equals the group order for s<=10", ok)


def test_criterion_4_orbits():
    ok = all(
        len(enumerate_distinct_orbits(s)) == distinct_orbit_count_formula(s)
        for s in range(1, 7)
    )
    listing = {(o.p, o.q): o.members() for o in enumerate_distinct_orbits(2)}
    ok = ok and listing[(1, 0)] == (0, 1, 2, 3) and listing[(3, 0)] == (0, 1, 2, 3)
    ok = ok and listing[(2, 0)] == (0, 2) and listing[(2, 1)] == (1, 3)
    ok = ok and all(listing[(0, q)] == (q,) for q in range(4))
    ok = ok and len(listing) == 8
    _report(4, "distinct orbit counts match 2^(s-1)(s+2) for s<=6 and the HW_4 listing is exact", ok)


def test_criterion_5_homomorphism():
    start = time.perf_counter()
    ok = True
    detail = []
    for s in (1, 2, 3, 4):
        result = check_homomorphism(s, "full", SEED)
        ok = ok and result.status == "pass"
        detail.append(f"s={s}: {result.details['pairs']} pairs")
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 60.0
    _report(5, "homomorphism exact, exhaustive at s<=2 and 10^4 seeded pairs per irrep at s=3,4",
            ok, "; ".join(detail) + f"; {elapsed:.1f}s")


def test_criterion_6_irreducibility_norms():
    ok = all(check_char_norms(s, "full", SEED).status == "pass" for s in (1, 2, 3, 4))
    _report(6, "character norm squared equals 2^(3s) for every irrep, s<=4", ok)


def test_criterion_7_orthogonality():
    start = time.perf_counter()
    ok = all(check_char_orthogonality(s, "full", SEED).status == "pass" for s in (1, 2, 3))
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 60.0
    _report(7, "exact character-table row orthogonality for s<=3", ok, f"{elapsed:.1f}s")


def test_criterion_8_fusion_oracle():
    start = time.perf_counter()
    ok = True
    detail = []
    for s in (1, 2, 3):
        result = check_fusion_oracle(s, "full", SEED)
        ok = ok and result.status == "pass"
        detail.append(f"s={s}: {result.details['triples']} triples")
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 300.0
    _report(8, "closed-form fusion equals the brute-force character sum "
               "(all triples s<=2, all pairs x all thirds s=3)",
            ok, "; ".join(detail) + f"; {elapsed:.1f}s")


def test_criterion_9_golden_fusion_tables():
    ok = check_golden_fusion(1, "full", SEED).status == "pass"
    ok = ok and check_golden_fusion(2, "full", SEED).status == "pass"
    ok = ok and check_golden_orbits(2, "full", SEED).status == "pass"
    _report(9, "shipped golden fusion tables (HW_2, HW_4) and orbit listing match byte-exactly", ok)


def test_criterion_10_dimension_conservation():
    ok = all(check_fusion_dimension(s, "full", SEED).status == "pass" for s in (1, 2, 3, 4))
    _report(10, "dimension conservation holds for every fusion row at s<=4", ok)


def test_criterion_11_algebraic_identities():
    ok = True
    for s in (1, 2, 3):
        ok = ok and check_basic_relation(s, "full", SEED).status == "pass"
        ok = ok and check_periodicity(s, "full", SEED).status == "pass"
        commutator = check_commutator(s, "full", SEED)
        ok = ok and commutator.status == "pass"
    _report(11, "y x = z x y, twisted periodicity, and the commutator identity hold exactly "
                "for all irreps at s<=3 (>= 10^3 seeded pairs per irrep)", ok)


def test_criterion_12_fourier():
    start = time.perf_counter()
    worst = 0.0
    ok = True
    count = 0
    for s in range(1, 6):
        for label in enumerate_irreps(s):
            report = verify_fourier_relations(label, tolerance=RESIDUAL_TOL)
            count += 1
            worst = max(worst, max(report["residuals"].values()))
            ok = ok and report["passed"]
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 60.0 and worst < RESIDUAL_TOL
    _report(12, "F_D unitarity, F^4 = I, eigen-residuals, and the conjugation relation "
                "under the verified orientation, all irreps s<=5",
            ok, f"{count} irreps, worst residual {worst:.2e}, {elapsed:.1f}s")
