"""End-to-end acceptance checks.

Each test covers one numbered criterion, prints a single PASS line with its
runtime, and enforces the stated time budget where one exists. All value
comparisons are exact integer or Fraction equality; there are no floating
point tolerances anywhere in this file.
"""

import random
import time
from fractions import Fraction

from hullcount.algebra import FormKind, MatrixGF, hull_dim, make_field, rref
from hullcount.eaqecc import ebits_from_check_matrix, gjg_map, wilde_brun_map
from hullcount.errors import OutOfValidRangeError
from hullcount.formulas import (
    HermitianParams,
    SymplecticParams,
    count_hermitian,
    count_symplectic,
)
from hullcount.oracle import hull_spectrum, spectrum_vs_formula
from hullcount.ratios import (
    AsymptoticRegime,
    RatioClassification,
    alpha_hermitian,
    alpha_symplectic,
    asymptotic_hermitian,
    asymptotic_symplectic,
    comparison_rows,
    in_symplectic_exception,
    ratio_report,
)

# reference tables, frozen: (length, k, q) -> counts by increasing hull dim
HERMITIAN_REFERENCE = {
    (4, 1, 2): (40, 45),
    (5, 1, 2): (176, 165),
    (6, 1, 2): (672, 693),
    (7, 1, 2): (2752, 2709),
    (4, 2, 2): (240, 90, 27),
    (5, 2, 2): (3520, 1980, 297),
    (6, 2, 2): (59136, 27720, 6237),
    (6, 3, 2): (197120, 166320, 12474, 891),
    (7, 2, 2): (924672, 476784, 89397),
    (7, 3, 2): (13561856, 9535680, 1072764, 38313),
    (8, 2, 2): (14970880, 7368480, 1519749),
    (4, 1, 3): (540, 280),
    (5, 1, 3): (4941, 2440),
    (6, 1, 3): (44226, 22204),
    (4, 2, 3): (5670, 1680, 112),
    (5, 2, 3): (444690, 153720, 6832),
    (6, 2, 3): (36420111, 11990160, 621712),
    (6, 3, 3): (312172380, 125896680, 3730272, 27328),
}
SYMPLECTIC_REFERENCE = {
    (4, 2, 2): (20, 15),
    (6, 2, 2): (336, 315),
    (8, 2, 2): (5440, 5355),
    (8, 4, 2): (91392, 107100, 2295),
    (10, 2, 2): (87296, 86955),
    (10, 4, 2): (23744512, 29216880, 782595),
    (12, 4, 2): (6100942848, 7596388800, 213648435),
    (12, 6, 2): (98777169920, 127619331840, 4272968700, 4922775),
    (4, 2, 3): (90, 40),
    (6, 2, 3): (7371, 3640),
    (8, 2, 3): (597780, 298480),
    (8, 4, 3): (48958182, 26863200, 91840),
}


def _hermitian_cells(max_n, qs):
    for q in qs:
        for n in range(2, max_n + 1):
            for k in range(1, n):
                yield n, k, q


def _symplectic_cells(max_ambient, qs):
    for q in qs:
        for two_n in range(2, max_ambient + 1, 2):
            for k in range(two_n + 1):
                yield two_n, k, q


def test_criterion_01_hermitian_reference_table():
    t0 = time.perf_counter()
    for (n, k, q), expected in HERMITIAN_REFERENCE.items():
        got = tuple(
            count_hermitian(HermitianParams(n, k, ell, q))
            for ell in range(min(k, n - k) + 1)
        )
        assert got == expected, (n, k, q)
    dt = time.perf_counter() - t0
    assert dt < 1.0
    print(f"PASS criterion 1: all 18 hermitian reference rows exact ({dt:.3f}s)")


def test_criterion_02_symplectic_reference_table():
    t0 = time.perf_counter()
    for (two_n, k, q), expected in SYMPLECTIC_REFERENCE.items():
        got = tuple(
            count_symplectic(SymplecticParams(two_n, k, ell, q))
            for ell in range(k % 2, min(k, two_n - k) + 1, 2)
        )
        assert got == expected, (two_n, k, q)
    dt = time.perf_counter() - t0
    assert dt < 1.0
    print(f"PASS criterion 2: all 12 symplectic reference rows exact ({dt:.3f}s)")


def test_criterion_03_hermitian_oracle_sweep():
    t0 = time.perf_counter()
    cells = 0
    for n in range(2, 6):
        for k in range(1, n):
            comp = spectrum_vs_formula(n, k, 2, FormKind.HERMITIAN)
            assert comp.passed, (n, k, comp.first_failure())
            cells += 1
    dt = time.perf_counter() - t0
    assert dt < 120.0
    print(
        f"PASS criterion 3: hermitian enumeration matches the closed form "
        f"per hull dim and in total on {cells} cells ({dt:.3f}s)"
    )


def test_criterion_04_symplectic_oracle_sweep():
    t0 = time.perf_counter()
    cells = 0
    largest = 0
    for two_n in range(2, 9, 2):
        for k in range(two_n + 1):
            comp = spectrum_vs_formula(two_n, k, 2, FormKind.SYMPLECTIC)
            assert comp.passed, (two_n, k, comp.first_failure())
            largest = max(largest, comp.expected_total)
            cells += 1
    assert largest == 200787
    dt = time.perf_counter() - t0
    assert dt < 120.0
    print(
        f"PASS criterion 4: symplectic enumeration matches the closed form "
        f"on {cells} cells, largest sweep {largest} subspaces ({dt:.3f}s)"
    )


def test_criterion_05_ratio_identities_exact():
    t0 = time.perf_counter()
    checked = 0
    for n, k, q in _hermitian_cells(8, (2, 3, 4)):
        for ell in range(min(k, n - k)):
            alpha = alpha_hermitian(n, k, ell, q)
            lhs = Fraction(count_hermitian(HermitianParams(n, k, ell, q)))
            rhs = alpha * (q ** (ell + 1) - 1) * count_hermitian(
                HermitianParams(n, k, ell + 1, q)
            )
            assert lhs == rhs, (n, k, ell, q)
            checked += 1
    for two_n, k, q in _symplectic_cells(12, (2, 3)):
        for ell in range(k % 2, min(k, two_n - k) - 1, 2):
            alpha = alpha_symplectic(two_n, k, ell, q)
            cof = (q ** (ell + 1) - 1) * (q ** (ell + 2) - 1)
            lhs = Fraction(count_symplectic(SymplecticParams(two_n, k, ell, q)))
            rhs = alpha * cof * count_symplectic(
                SymplecticParams(two_n, k, ell + 2, q)
            )
            assert lhs == rhs, (two_n, k, ell, q)
            checked += 1
    dt = time.perf_counter() - t0
    print(
        f"PASS criterion 5: {checked} step-ratio identities hold with zero "
        f"tolerance ({dt:.3f}s)"
    )


def test_criterion_06_exception_sets_are_exact():
    t0 = time.perf_counter()
    for n, k, q in _hermitian_cells(8, (2, 3, 4)):
        for ell in range(min(k, n - k)):
            alpha = alpha_hermitian(n, k, ell, q)
            boundary = ell == 0 and n % 2 == 0 and k in (1, n - 1)
            assert (alpha > 1) == (not boundary), (n, k, ell, q)
            if boundary:
                assert alpha == Fraction(q ** (n - 1), q ** (n - 1) + 1)
    for two_n, k, q in _symplectic_cells(12, (2, 3)):
        for ell in range(k % 2, min(k, two_n - k) - 1, 2):
            a_here = count_symplectic(SymplecticParams(two_n, k, ell, q))
            a_next = count_symplectic(SymplecticParams(two_n, k, ell + 2, q))
            grows = a_here <= a_next
            assert grows == in_symplectic_exception(two_n, k, ell, q)
            expected_member = q == 2 and ell == 0 and k % 2 == 0 and 4 <= k <= two_n - 4
            assert in_symplectic_exception(two_n, k, ell, q) == expected_member
    dt = time.perf_counter() - t0
    print(
        "PASS criterion 6: monotonicity exceptions are exactly the boundary "
        f"family and the small-field symplectic family ({dt:.3f}s)"
    )


def test_criterion_07_hermitian_alpha_floor():
    t0 = time.perf_counter()
    for n, k, q in _hermitian_cells(8, (2, 3, 4)):
        for ell in range(min(k, n - k)):
            assert alpha_hermitian(n, k, ell, q) >= Fraction(q, q + 1)
    dt = time.perf_counter() - t0
    print(f"PASS criterion 7: alpha stays at or above q/(q+1) ({dt:.3f}s)")


def test_criterion_08_euclidean_oracle_ratios():
    t0 = time.perf_counter()
    eta_case_seen = False
    for q in (2, 3):
        field = make_field(q, 1)
        for n in range(2, 6):
            for k in range(1, n // 2 + 1):
                counts = hull_spectrum(n, k, field, FormKind.EUCLIDEAN).counts
                for ell in range(k):
                    try:
                        rep = ratio_report(FormKind.EUCLIDEAN, n, k, ell, q)
                    except OutOfValidRangeError:
                        assert counts.get(ell + 1, 0) == 0, (n, k, ell, q)
                        continue
                    lhs = Fraction(counts.get(ell, 0))
                    rhs = rep.full_ratio * counts.get(ell + 1, 0)
                    assert lhs == rhs, (n, k, ell, q)
                    assert rep.alpha >= Fraction(1, 2)
                    if (
                        n == 4
                        and q == 3
                        and rep.classification
                        is RatioClassification.EUCLIDEAN_HALF_BOUND
                    ):
                        eta_case_seen = True
    assert eta_case_seen
    dt = time.perf_counter() - t0
    assert dt < 60.0
    print(
        "PASS criterion 8: euclidean enumeration satisfies the ratio "
        f"formulas, including the character-split case ({dt:.3f}s)"
    )


def test_criterion_09_asymptotic_limits():
    t0 = time.perf_counter()
    assert asymptotic_hermitian(AsymptoticRegime.JOINT, 0, 2).limit == Fraction(3, 2)
    assert asymptotic_hermitian(AsymptoticRegime.JOINT, 0, 3).limit == Fraction(8, 3)
    assert asymptotic_symplectic(AsymptoticRegime.JOINT, 0, 2).limit == Fraction(3, 4)
    assert asymptotic_symplectic(AsymptoticRegime.JOINT, 0, 3).limit == Fraction(16, 9)
    assert asymptotic_symplectic(AsymptoticRegime.JOINT, 1, 2).limit == Fraction(21, 4)
    limits = {
        row.form: row.count_ratio_limits for row in comparison_rows((2, 3))
    }
    assert limits[FormKind.EUCLIDEAN][2] == Fraction(3, 2)
    assert limits[FormKind.HERMITIAN][2] == Fraction(3, 2)
    assert limits[FormKind.SYMPLECTIC][2] == Fraction(3, 4)
    assert limits[FormKind.HERMITIAN][3] == Fraction(8, 3)
    assert limits[FormKind.SYMPLECTIC][3] == Fraction(16, 9)
    dt = time.perf_counter() - t0
    print(f"PASS criterion 9: asymptotic count-ratio limits exact ({dt:.3f}s)")


def test_criterion_10_entanglement_maps():
    t0 = time.perf_counter()
    f2 = make_field(2, 1)
    rng = random.Random(1729)
    for _ in range(1000):
        two_n = 2 * rng.randint(1, 5)
        rows = rng.randint(1, two_n)
        check = MatrixGF(
            f2, rows, two_n,
            tuple(rng.randint(0, 1) for _ in range(rows * two_n)),
        )
        out = rref(check)
        if out.rank:
            basis = MatrixGF(
                f2, out.rank, two_n, out.matrix.codes[: out.rank * two_n]
            )
            hull = hull_dim(basis, FormKind.SYMPLECTIC)
        else:
            hull = 0
        assert ebits_from_check_matrix(check) == (out.rank - hull) // 2
    for n in range(1, 11):
        for k in range(n + 1):
            for ell in range(min(k, n - k) + 1):
                primary, partner = gjg_map(n, k, ell, 2)
                assert (primary.n, primary.k_logical, primary.c) == (
                    n, k - ell, n - k - ell,
                )
                assert (partner.k_logical, partner.c) == (n - k - ell, k - ell)
    for two_n in range(0, 11, 2):
        for k in range(two_n + 1):
            for ell in range(k % 2, min(k, two_n - k) + 1, 2):
                out = wilde_brun_map(two_n, k, ell, 2)
                n = two_n // 2
                assert (out.n, out.k_logical, out.c) == (
                    n, n - (k + ell) // 2, (k - ell) // 2,
                )
                assert out.k_logical + out.c == n - ell
    dt = time.perf_counter() - t0
    print(
        "PASS criterion 10: ebit counts match half the symplectic Gram rank "
        f"on 1000 random check matrices and both parameter maps ({dt:.3f}s)"
    )
