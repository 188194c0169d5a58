"""Entanglement-assisted code parameters derived from classical hulls.

An [[n, k_logical, d; c]]_q code uses n channel qudits, protects k_logical
logical qudits, and consumes c preshared maximally entangled pairs. Two
standard constructions relate c to the hull dimension of a classical seed
code: a length-n code with k dimensions and hull dimension l yields the
complementary pair

    [[n, k - l, d; n - k - l]]_q   and   [[n, n - k - l, d_perp; k - l]]_q,

while a 2n-length code with symplectic hull l yields

    [[n, n - (k + l)/2, d; (k - l)/2]]_q.

For a binary quantum check matrix H = [H_Z | H_X] the ebit count is half
the rank of the symplectic Gram matrix of its rows; that rank is always
even because the form is alternating, so an odd value is impossible and
signals a bug rather than bad input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import FormKind, MatrixGF, gram, rref
from .errors import (
    BadRangeError,
    OddAmbientError,
    OddGramRankError,
    ParityViolationError,
)
from .formulas import (
    HermitianParams,
    SymplecticParams,
    count_hermitian,
    count_symplectic,
)
from .ratios import in_symplectic_exception


@dataclass(frozen=True)
class EaqeccParams:
    """Parameter tuple [[n, k_logical, d; c]]_q; d stays None when unknown."""

    n: int
    k_logical: int
    c: int
    q: int
    d: int | None = None

    def __post_init__(self):
        if not 0 <= self.k_logical <= self.n:
            raise BadRangeError(
                f"need 0 <= k_logical <= n, got k={self.k_logical} n={self.n}"
            )
        if not 0 <= self.c <= self.n:
            raise BadRangeError(f"need 0 <= c <= n, got c={self.c} n={self.n}")
        if self.q < 2:
            raise BadRangeError(f"q must be at least 2, got {self.q}")

    def __str__(self) -> str:
        d = "d" if self.d is None else str(self.d)
        return f"[[{self.n}, {self.k_logical}, {d}; {self.c}]]_{self.q}"


def gjg_map(
    n: int,
    k: int,
    ell: int,
    q: int,
    d: int | None = None,
    d_dual: int | None = None,
) -> tuple[EaqeccParams, EaqeccParams]:
    """Complementary pair of entanglement-assisted codes from one classical
    code of length n, dimension k, hull dimension ell."""
    if not 0 <= k <= n:
        raise BadRangeError(f"need 0 <= k <= n, got k={k} n={n}")
    if not 0 <= ell <= min(k, n - k):
        raise BadRangeError(
            f"hull dimension must lie in 0..min(k, n-k), got l={ell}"
        )
    primary = EaqeccParams(n, k - ell, n - k - ell, q, d)
    partner = EaqeccParams(n, n - k - ell, k - ell, q, d_dual)
    return primary, partner


def wilde_brun_map(
    two_n: int, k: int, ell: int, q: int, d: int | None = None
) -> EaqeccParams:
    """Entanglement-assisted code from a symplectic seed of length 2n."""
    if two_n < 0 or two_n % 2 != 0:
        raise OddAmbientError(f"ambient length must be even, got {two_n}")
    if (k - ell) % 2 != 0:
        raise ParityViolationError(f"k - l must be even, got k={k} l={ell}")
    if not 0 <= ell <= k <= two_n:
        raise BadRangeError(f"need 0 <= l <= k <= 2n, got k={k} l={ell} 2n={two_n}")
    if k + ell > two_n:
        raise BadRangeError(
            f"k + l exceeds the ambient length, got k={k} l={ell} 2n={two_n}"
        )
    n = two_n // 2
    return EaqeccParams(n, n - (k + ell) // 2, (k - ell) // 2, q, d)


def ebits_from_check_matrix(check: MatrixGF) -> int:
    """Ebits consumed by a binary check matrix [H_Z | H_X]: half the rank of
    the symplectic Gram of its rows. Accepts dependent rows; the Gram rank
    only sees the row space."""
    if check.field.order != 2:
        raise BadRangeError("check matrices are binary, need the field of order 2")
    g = gram(check, FormKind.SYMPLECTIC)
    rank = rref(g).rank
    if rank % 2 != 0:
        raise OddGramRankError(
            f"alternating Gram rank came out odd ({rank}); this is a bug"
        )
    return rank // 2


@dataclass(frozen=True)
class CensusRow:
    ell: int
    ebits: int
    count: int
    exceptional: bool


def entanglement_census(
    length: int, k: int, q: int, form: FormKind
) -> list[CensusRow]:
    """All achievable ebit values for fixed (length, k, q), with the exact
    number of seed codes behind each, ordered by increasing hull dimension.

    Rows in the known count-monotonicity exception families are flagged.
    Only the hermitian and symplectic forms have closed-form counts.
    """
    if form is FormKind.HERMITIAN:
        if not 0 <= k <= length:
            raise BadRangeError(f"need 0 <= k <= n, got k={k} n={length}")
        rows = []
        for ell in range(0, min(k, length - k) + 1):
            count = count_hermitian(HermitianParams(length, k, ell, q))
            flagged = (
                q == 2 and ell == 0 and length % 2 == 0 and k in (1, length - 1)
            )
            rows.append(CensusRow(ell, length - k - ell, count, flagged))
        return rows
    if form is FormKind.SYMPLECTIC:
        if length % 2 != 0:
            raise OddAmbientError(f"ambient length must be even, got {length}")
        if not 0 <= k <= length:
            raise BadRangeError(f"need 0 <= k <= 2n, got k={k} 2n={length}")
        rows = []
        for ell in range(k % 2, min(k, length - k) + 1, 2):
            count = count_symplectic(SymplecticParams(length, k, ell, q))
            flagged = in_symplectic_exception(length, k, ell, q)
            rows.append(CensusRow(ell, (k - ell) // 2, count, flagged))
        return rows
    raise BadRangeError("no closed-form census for the euclidean form")
