"""Closed-form counts of linear codes with prescribed hull dimension.

Hermitian side: codes live in F_{q^2}^n and the hull is taken with respect
to the form <x, y> = sum x_i * y_i^q. The count of k-dimensional codes
whose hull has dimension l factors as

    A_H(n, k, l, q) = F_1 * F_2 * ... * F_l * L(n, k - l, q)

where L(n, k0, q) is the number of k0-dimensional codes with zero hull
(complementary-dual codes) and each step factor is

    F_i = (q^(s-2i+2) + e) * (q^(s-2i+1) - e) / (q^(2*k0) * (q^(2i) - 1)),
    s = n - k0,  e = (-1)^(s+1),  k0 = k - l.

The two sign branches (s odd vs s even) are the two classical parities of
the ambient; the e-form above unifies them. Individual F_i are rationals;
the full product times L is always an integer, which the evaluator checks.

Symplectic side: codes live in F_q^(2n) with the alternating form, hull
dimensions share the parity of k, and with k0 = (k - l)/2:

    A_S(2n, k, l, q) = q^(2*k0*(n-k0-l))
                       * prod_{m=1..l} (q^(2*(n-k0-l+m)) - 1) / (q^m - 1)
                       * gauss(n, k0, q^2).

Out-of-range hull parameters count zero rather than raising, so spectrum
sums can run over a full index range.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BadIndexError, BadRangeError, OddAmbientError
from .exactnum import as_exact_int, gaussian_binomial, is_prime_power


@dataclass(frozen=True)
class HermitianParams:
    """Length n, code dimension k, hull dimension ell, subfield order q.

    The ambient field is F_{q^2}; q itself must be a prime power.
    """

    n: int
    k: int
    ell: int
    q: int

    def __post_init__(self):
        if self.n < 0:
            raise BadRangeError(f"length must be nonnegative, got {self.n}")
        if not is_prime_power(self.q):
            raise BadRangeError(f"q must be a prime power, got {self.q}")

    @property
    def k0(self) -> int:
        return self.k - self.ell

    @property
    def s(self) -> int:
        return self.n - self.k0

    @property
    def eps(self) -> int:
        # (-1)^(s+1): +1 for odd ambient defect, -1 for even
        return 1 if self.s % 2 else -1

    @property
    def a(self) -> int:
        return self.k - self.ell

    @property
    def b(self) -> int:
        return self.n - self.k - self.ell

    def in_counting_range(self) -> bool:
        return 0 <= self.ell <= self.k <= self.n and self.ell <= self.n - self.k


@dataclass(frozen=True)
class SymplecticParams:
    """Ambient length two_n (even), dimension k, hull dimension ell, order q."""

    two_n: int
    k: int
    ell: int
    q: int

    def __post_init__(self):
        if self.two_n < 0:
            raise BadRangeError(f"ambient length must be nonnegative, got {self.two_n}")
        if self.two_n % 2 != 0:
            raise OddAmbientError(
                f"symplectic ambient length must be even, got {self.two_n}"
            )
        if not is_prime_power(self.q):
            raise BadRangeError(f"q must be a prime power, got {self.q}")

    @property
    def n_half(self) -> int:
        return self.two_n // 2

    @property
    def k0(self) -> int:
        return (self.k - self.ell) // 2

    @property
    def a(self) -> int:
        return self.k - self.ell

    @property
    def b(self) -> int:
        return self.two_n - self.k - self.ell

    def in_counting_range(self) -> bool:
        return (
            0 <= self.ell <= self.k <= self.two_n
            and self.ell <= self.two_n - self.k
            and (self.k - self.ell) % 2 == 0
        )


def hermitian_lcd_count(n: int, k0: int, q: int) -> int:
    """Number of k0-dimensional codes in F_{q^2}^n with zero hermitian hull."""
    if not 0 <= k0 <= n:
        raise BadRangeError(f"need 0 <= k0 <= n, got k0={k0}, n={n}")
    if q < 2:
        raise BadRangeError(f"q must be at least 2, got {q}")
    acc = Fraction(q ** (k0 * (n - k0)))
    for j in range(1, k0 + 1):
        sign = -1 if (n - k0 + j) % 2 else 1
        acc *= Fraction(q ** (n - k0 + j) - sign, q ** j - (-1 if j % 2 else 1))
    return as_exact_int(acc)


def unified_factor(i: int, params: HermitianParams) -> Fraction:
    """Step factor F_i linking hull dimension i-1 to i in the hermitian count."""
    if not 1 <= i <= params.ell:
        raise BadIndexError(f"factor index {i} outside 1..{params.ell}")
    q, s, e, k0 = params.q, params.s, params.eps, params.k0
    num = (q ** (s - 2 * i + 2) + e) * (q ** (s - 2 * i + 1) - e)
    den = q ** (2 * k0) * (q ** (2 * i) - 1)
    return Fraction(num, den)


def count_hermitian(params: HermitianParams) -> int:
    """Exact number of k-dimensional codes in F_{q^2}^n with hermitian hull
    dimension ell; zero when the parameters admit no such code."""
    if not params.in_counting_range():
        return 0
    acc = Fraction(hermitian_lcd_count(params.n, params.k0, params.q))
    for i in range(1, params.ell + 1):
        acc *= unified_factor(i, params)
    return as_exact_int(acc)


def symplectic_lcd_count(n: int, k0: int, q: int) -> int:
    """Number of 2*k0-dimensional codes in F_q^(2n) with zero symplectic hull."""
    if not 0 <= k0 <= n:
        raise BadRangeError(f"need 0 <= k0 <= n, got k0={k0}, n={n}")
    if q < 2:
        raise BadRangeError(f"q must be at least 2, got {q}")
    return q ** (2 * k0 * (n - k0)) * gaussian_binomial(n, k0, q * q)


def count_symplectic(params: SymplecticParams) -> int:
    """Exact number of k-dimensional codes in F_q^(2n) with symplectic hull
    dimension ell; zero off the parity class or out of range."""
    if not params.in_counting_range():
        return 0
    q, ell, k0 = params.q, params.ell, params.k0
    n = params.n_half
    acc = Fraction(q ** (2 * k0 * (n - k0 - ell)))
    for m in range(1, ell + 1):
        acc *= Fraction(q ** (2 * (n - k0 - ell + m)) - 1, q ** m - 1)
    acc *= gaussian_binomial(n, k0, q * q)
    return as_exact_int(acc)


def count_symplectic_printed_form(params: SymplecticParams) -> Fraction:
    """Mis-indexed variant of the symplectic count, kept only to demonstrate
    why the index placement matters.

    The running index enters the numerator undoubled and the denominator
    doubled, which breaks the telescoping and stops the product from being
    an integer: at two_n=4, k=2, ell=2, q=2 it returns 7/3 where the
    correct count is 15. Returns the raw rational; never used elsewhere.
    """
    if not params.in_counting_range():
        return Fraction(0)
    q, ell, k0 = params.q, params.ell, params.k0
    n = params.n_half
    acc = Fraction(q ** (2 * k0 * (n - k0 - ell)))
    for m in range(1, ell + 1):
        acc *= Fraction(q ** (2 * (n - k0) - ell + m) - 1, q ** (2 * m) - 1)
    acc *= gaussian_binomial(n, k0, q * q)
    return acc
