"""Ratio factors between hull-dimension counts, their exceptions and limits.

Each closed-form count satisfies a one-step decomposition

    count(l) = alpha * cofactor(l) * count(l + step)

with step 1 for the Euclidean and Hermitian forms (cofactor q^(l+1) - 1)
and step 2 for the symplectic form (cofactor (q^(l+1)-1)(q^(l+2)-1)).
This module evaluates alpha exactly, classifies where the usual
"strictly above one" behaviour breaks, and computes the large-parameter
limits of the count ratios.

Exception landscape, with a = k - l and b = n - k - l (ambient 2n and
b = 2n - k - l in the symplectic case):

* Hermitian: alpha < 1 exactly on the boundary family l = 0, a and b
  both odd with min(a, b) = 1 (equivalently l = 0, n even, k in
  {1, n-1}), where alpha = q^max(a,b) / (q^max(a,b) + 1); alpha stays
  above q/(q+1) >= 2/3 everywhere.
* Symplectic: alpha itself is always below 1; the meaningful claim is
  count(l) > count(l+2), i.e. alpha * cofactor > 1, which fails exactly
  on E_S = {q = 2, l = 0, 4 <= k <= 2n-4}.
* Euclidean (no closed-form counts, but alpha is known): for odd q the
  four (n parity) x (k - l parity) cases split further along the
  quadratic character eta((-1)^(n/2)); alpha drops into [1/2, 1) exactly
  when n is even, k - l is odd and eta = +1, with equality 1/2 at
  k = n/2, l = k - 1. For even q alpha is always above 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .algebra import FieldElem, FormKind
from .errors import (
    BadRangeError,
    BadRegimeError,
    EvenCharacteristicError,
    OutOfValidRangeError,
    ParityViolationError,
)
from .exactnum import prime_power_parts
from .formulas import HermitianParams, SymplecticParams, count_hermitian, count_symplectic


class RatioClassification(Enum):
    STRICTLY_ABOVE_ONE = "strictly_above_one"
    HERMITIAN_BOUNDARY = "hermitian_boundary"
    SYMPLECTIC_EXCEPTION_ES = "symplectic_exception_es"
    EUCLIDEAN_HALF_BOUND = "euclidean_half_bound"


class AsymptoticRegime(Enum):
    BOUNDARY_FIXED_A = "boundary_fixed_a"
    JOINT = "joint"


def quadratic_character(x: FieldElem | int, q: int) -> int:
    """Quadratic character of x in F_q (odd q): +1 on nonzero squares,
    -1 on non-squares, 0 at zero, computed as x^((q-1)/2).

    Integer x is reduced into the prime subfield, so the computation never
    needs the extension field itself.
    """
    if isinstance(x, FieldElem):
        field = x.field
        if field.p == 2:
            raise EvenCharacteristicError("quadratic character needs odd characteristic")
        if field.order != q:
            raise BadRangeError(f"element of {field!r} against q={q}")
        r = field.pow_code(x.code, (q - 1) // 2)
        if r == 0:
            return 0
        return 1 if r == 1 else -1
    p, _ = prime_power_parts(q)
    if p == 2:
        raise EvenCharacteristicError("quadratic character needs odd characteristic")
    xm = x % p
    if xm == 0:
        return 0
    r = pow(xm, (q - 1) // 2, p)
    return 1 if r == 1 else -1


def alpha_hermitian(n: int, k: int, ell: int, q: int) -> Fraction:
    """Ratio factor with count_H(l) = alpha * (q^(l+1)-1) * count_H(l+1)."""
    if ell < 0 or not ell + 1 <= k <= n - ell - 1:
        raise OutOfValidRangeError(
            f"alpha undefined outside l+1 <= k <= n-l-1, got n={n} k={k} l={ell}"
        )
    a = k - ell
    b = n - k - ell
    num = q ** (n - 2 * ell - 1) * (q ** (ell + 1) + 1)
    den = (q ** a - (-1) ** a) * (q ** b - (-1) ** b)
    return Fraction(num, den)


def alpha_symplectic(two_n: int, k: int, ell: int, q: int) -> Fraction:
    """Ratio factor with count_S(l) = alpha * (q^(l+1)-1)(q^(l+2)-1) * count_S(l+2)."""
    if (k - ell) % 2 != 0:
        raise ParityViolationError(f"k - l must be even, got k={k} l={ell}")
    if ell < 0 or not ell + 2 <= k <= two_n - ell - 2:
        raise OutOfValidRangeError(
            f"alpha undefined outside l+2 <= k <= 2n-l-2, got 2n={two_n} k={k} l={ell}"
        )
    a = k - ell
    b = two_n - k - ell
    return Fraction(q ** (a + b - 2), (q ** a - 1) * (q ** b - 1))


def alpha_euclidean(n: int, k: int, ell: int, q: int) -> Fraction:
    """Ratio factor with count_E(l) = alpha * (q^(l+1)-1) * count_E(l+1),
    stated for 1 <= k <= n/2 and 0 <= l <= k-1.

    In the odd-q, n even, k-l odd branch with eta((-1)^(n/2)) = -1 the
    denominator vanishes at l = n/2 - 1; the successor count is zero there
    and no finite factor exists, reported as OutOfValidRangeError.
    """
    prime_power_parts(q)
    if k < 1 or 2 * k > n:
        raise OutOfValidRangeError(f"need 1 <= k <= n/2, got n={n} k={k}")
    if not 0 <= ell <= k - 1:
        raise OutOfValidRangeError(f"need 0 <= l <= k-1, got k={k} l={ell}")
    kl = k - ell
    if q % 2 == 1:
        if n % 2 == 0:
            eta = quadratic_character((-1) ** (n // 2), q)
            if kl % 2 == 1:
                den = q ** (n // 2 - 1) + eta * q ** ell
                if den == 0:
                    raise OutOfValidRangeError(
                        "no finite ratio: the hull-(l+1) count vanishes "
                        f"(n={n} k={k} l={ell} q={q})"
                    )
                return Fraction(q ** (n // 2 - 1), den)
            num = q ** (n // 2 - ell) * (q ** (n // 2 - ell) + eta)
            den = (q ** (n - k - ell) - 1) * (q ** kl - 1)
            return Fraction(num, den)
        if kl % 2 == 1:
            return Fraction(q ** (n - k - ell), q ** (n - k - ell) - 1)
        return Fraction(q ** kl, q ** kl - 1)
    if n % 2 == 0:
        if kl % 2 == 1:
            t = q ** (n - ell - 1)
            return Fraction(t, t - 1)
        return Fraction(
            q ** (n - ell) - 1,
            q ** ell * (q ** (n - k - ell) - 1) * (q ** kl - 1),
        )
    if kl % 2 == 1:
        return Fraction(q ** (n - k - ell), q ** (n - k - ell) - 1)
    return Fraction(q ** kl, q ** kl - 1)


# -- classification -----------------------------------------------------------

def _hermitian_boundary(n: int, k: int, ell: int) -> bool:
    a = k - ell
    b = n - k - ell
    via_parity = ell == 0 and a % 2 == 1 and b % 2 == 1 and min(a, b) == 1
    via_shape = ell == 0 and n % 2 == 0 and k in (1, n - 1)
    assert via_parity == via_shape, (n, k, ell)
    return via_parity


def in_symplectic_exception(two_n: int, k: int, ell: int, q: int) -> bool:
    """Membership in E_S, the family where count(l) > count(l+2) fails."""
    return q == 2 and ell == 0 and k % 2 == 0 and 4 <= k <= two_n - 4


@dataclass(frozen=True)
class HermitianClassification:
    classification: RatioClassification
    ratio_monotone: bool
    count_monotone: bool


@dataclass(frozen=True)
class SymplecticClassification:
    classification: RatioClassification
    count_monotone: bool


def classify_hermitian(n: int, k: int, ell: int, q: int) -> HermitianClassification:
    """Boundary-family classification plus the two monotonicity booleans.

    ratio_monotone is alpha * (q^(l+1) - 1) > 1, evaluated from the closed
    form; count_monotone compares the two exact counts directly. They agree
    whenever both sides are defined, but are computed by different routes.
    """
    alpha = alpha_hermitian(n, k, ell, q)
    boundary = _hermitian_boundary(n, k, ell)
    assert (alpha < 1) == boundary, (n, k, ell, q)
    ratio_monotone = alpha * (q ** (ell + 1) - 1) > 1
    count_monotone = count_hermitian(HermitianParams(n, k, ell, q)) > count_hermitian(
        HermitianParams(n, k, ell + 1, q)
    )
    cls = (
        RatioClassification.HERMITIAN_BOUNDARY
        if boundary
        else RatioClassification.STRICTLY_ABOVE_ONE
    )
    return HermitianClassification(cls, ratio_monotone, count_monotone)


def classify_symplectic(two_n: int, k: int, ell: int, q: int) -> SymplecticClassification:
    """E_S membership plus the count-level monotonicity boolean
    count(l) > count(l+2), evaluated as alpha * cofactor > 1."""
    alpha = alpha_symplectic(two_n, k, ell, q)
    cofactor = (q ** (ell + 1) - 1) * (q ** (ell + 2) - 1)
    monotone = alpha * cofactor > 1
    cls = (
        RatioClassification.SYMPLECTIC_EXCEPTION_ES
        if in_symplectic_exception(two_n, k, ell, q)
        else RatioClassification.STRICTLY_ABOVE_ONE
    )
    return SymplecticClassification(cls, monotone)


# -- one-step ratio reports ----------------------------------------------------

@dataclass(frozen=True)
class RatioReport:
    """One decomposition step count(l) = alpha * cofactor * count(l + step).

    classification tracks the form's monotonicity discriminant: alpha
    itself for the Euclidean and Hermitian forms, alpha * cofactor for the
    symplectic form (whose alpha is always below 1). equality_boundary
    marks the Euclidean alpha = 1/2 cell (k = n/2, l = k - 1 in the
    half-bound regime); it is descriptive metadata, never asserted.
    """

    form: FormKind
    step: int
    alpha: Fraction
    cofactor: int
    full_ratio: Fraction
    classification: RatioClassification
    monotone_a: bool
    equality_boundary: bool = False


def ratio_report(form: FormKind, length: int, k: int, ell: int, q: int) -> RatioReport:
    """Build the RatioReport for one parameter cell.

    length is the ambient length: n for Euclidean/Hermitian, 2n for
    symplectic.
    """
    if form is FormKind.HERMITIAN:
        alpha = alpha_hermitian(length, k, ell, q)
        cof = q ** (ell + 1) - 1
        cls = (
            RatioClassification.HERMITIAN_BOUNDARY
            if _hermitian_boundary(length, k, ell)
            else RatioClassification.STRICTLY_ABOVE_ONE
        )
        full = alpha * cof
        return RatioReport(form, 1, alpha, cof, full, cls, full > 1)
    if form is FormKind.SYMPLECTIC:
        alpha = alpha_symplectic(length, k, ell, q)
        cof = (q ** (ell + 1) - 1) * (q ** (ell + 2) - 1)
        cls = (
            RatioClassification.SYMPLECTIC_EXCEPTION_ES
            if in_symplectic_exception(length, k, ell, q)
            else RatioClassification.STRICTLY_ABOVE_ONE
        )
        full = alpha * cof
        return RatioReport(form, 2, alpha, cof, full, cls, full > 1)
    alpha = alpha_euclidean(length, k, ell, q)
    cof = q ** (ell + 1) - 1
    cls = (
        RatioClassification.EUCLIDEAN_HALF_BOUND
        if alpha < 1
        else RatioClassification.STRICTLY_ABOVE_ONE
    )
    equality = (
        q % 2 == 1
        and length % 2 == 0
        and (k - ell) % 2 == 1
        and 2 * k == length
        and ell == k - 1
        and quadratic_character((-1) ** (length // 2), q) == 1
    )
    full = alpha * cof
    return RatioReport(form, 1, alpha, cof, full, cls, full > 1, equality)


# -- asymptotics ----------------------------------------------------------------

@dataclass(frozen=True)
class AsymptoticReport:
    form: FormKind
    regime: AsymptoticRegime
    ell: int
    q: int
    a: int | None
    limit: Fraction


def asymptotic_hermitian(
    regime: AsymptoticRegime, ell: int, q: int, a: int | None = None
) -> AsymptoticReport:
    """Limit of count(l)/count(l+1) as b -> infinity.

    Boundary regime fixes a = k - l >= 1; the joint regime sends a and b
    to infinity together, giving (q^(2(l+1)) - 1)/q.
    """
    if ell < 0 or q < 2:
        raise BadRegimeError(f"need l >= 0 and q >= 2, got l={ell} q={q}")
    if regime is AsymptoticRegime.JOINT:
        if a is not None:
            raise BadRegimeError("joint regime takes no fixed a")
        limit = Fraction(q ** (2 * (ell + 1)) - 1, q)
        return AsymptoticReport(FormKind.HERMITIAN, regime, ell, q, None, limit)
    if a is None or a < 1:
        raise BadRegimeError(f"boundary regime needs a >= 1, got {a}")
    num = q ** (a - 1) * (q ** (ell + 1) + 1) * (q ** (ell + 1) - 1)
    den = q ** a - (-1) ** a
    return AsymptoticReport(FormKind.HERMITIAN, regime, ell, q, a, Fraction(num, den))


def asymptotic_symplectic(
    regime: AsymptoticRegime, ell: int, q: int, a: int | None = None
) -> AsymptoticReport:
    """Limit of count(l)/count(l+2); boundary fixes even a = k - l >= 2,
    joint gives (q^(l+1) - 1)(q^(l+2) - 1)/q^2."""
    if ell < 0 or q < 2:
        raise BadRegimeError(f"need l >= 0 and q >= 2, got l={ell} q={q}")
    if regime is AsymptoticRegime.JOINT:
        if a is not None:
            raise BadRegimeError("joint regime takes no fixed a")
        limit = Fraction((q ** (ell + 1) - 1) * (q ** (ell + 2) - 1), q * q)
        return AsymptoticReport(FormKind.SYMPLECTIC, regime, ell, q, None, limit)
    if a is None or a < 2 or a % 2 != 0:
        raise BadRegimeError(f"boundary regime needs even a >= 2, got {a}")
    num = q ** (a - 2) * (q ** (ell + 1) - 1) * (q ** (ell + 2) - 1)
    return AsymptoticReport(
        FormKind.SYMPLECTIC, regime, ell, q, a, Fraction(num, q ** a - 1)
    )


# -- cross-form comparison ------------------------------------------------------

@dataclass(frozen=True)
class ComparisonRow:
    form: FormKind
    step: int
    alpha_lower_bound: str
    alpha_asymptotic: str
    count_ratio_limits: dict[int, Fraction]
    exceptions: str


def comparison_rows(q_values: Sequence[int] = (2, 3)) -> list[ComparisonRow]:
    """Side-by-side summary of the three forms: step size, alpha bounds,
    and the l = 0 joint count-ratio limit at each requested q."""
    for q in q_values:
        prime_power_parts(q)
    euclid = {q: Fraction(q * q - 1, q) for q in q_values}
    herm = {
        q: asymptotic_hermitian(AsymptoticRegime.JOINT, 0, q).limit for q in q_values
    }
    sympl = {
        q: asymptotic_symplectic(AsymptoticRegime.JOINT, 0, q).limit for q in q_values
    }
    return [
        ComparisonRow(
            FormKind.EUCLIDEAN,
            1,
            "1/2",
            "(q+1)/q",
            euclid,
            "half-bound regime: n even, k-l odd, eta((-1)^(n/2)) = +1",
        ),
        ComparisonRow(
            FormKind.HERMITIAN,
            1,
            "q/(q+1) >= 2/3",
            "(q+1)/q",
            herm,
            "l = 0, n even, k in {1, n-1}",
        ),
        ComparisonRow(
            FormKind.SYMPLECTIC,
            2,
            "none above 1",
            "1/q^2",
            sympl,
            "E_S: q = 2, l = 0, 4 <= k <= 2n-4",
        ),
    ]
