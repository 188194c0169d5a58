"""Finite fields of small order and dense linear algebra over them.

Fields F_{p^m} are realized as F_p[x] / (f) where f is the canonical
modulus: the lexicographically smallest monic irreducible polynomial of
degree m over F_p, coefficient tuples compared low degree first (for m = 1
this picks f = x, the prime-field convention). Elements are integer codes

    code = c0 + c1*p + ... + c_{m-1}*p^(m-1)

and all arithmetic routes through dense lookup tables (exp/log for the
multiplicative group, digitwise tables for addition), so both the operator
API on FieldElem and the raw-code hot loops in the enumeration oracle hit
the same precomputed data. Orders are capped at 256, which keeps every
table comfortably small.

The matrix side is deliberately plain: immutable MatrixGF, reduced row
echelon form, the three Gram matrices (Euclidean G*G^T, Hermitian
G*conj(G)^T with entrywise q-th power, symplectic G*Omega*G^T), and the
hull dimension k - rank(Gram) for a full-row-rank generator.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence

from .errors import (
    BadRangeError,
    BadSubfieldOrderError,
    DegreeTooLargeError,
    NonPrimeError,
    NonSquareFieldError,
    OddAmbientError,
    RankDeficientGeneratorError,
)
from .exactnum import is_prime

MAX_FIELD_ORDER = 256


class FormKind(Enum):
    EUCLIDEAN = "euclidean"
    HERMITIAN = "hermitian"
    SYMPLECTIC = "symplectic"


# -- polynomial helpers on coefficient tuples (low degree first) --------------

def _poly_mul_mod(a: Sequence[int], b: Sequence[int], modulus: Sequence[int], p: int) -> tuple[int, ...]:
    m = len(modulus) - 1
    prod = [0] * (2 * m - 1) if m > 1 else [0]
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] = (prod[i + j] + ai * bj) % p
    for d in range(len(prod) - 1, m - 1, -1):
        c = prod[d]
        if c:
            base = d - m
            for j in range(m + 1):
                if modulus[j]:
                    prod[base + j] = (prod[base + j] - c * modulus[j]) % p
    return tuple(prod[:m])


def _poly_rem(dividend: Sequence[int], divisor: Sequence[int], p: int) -> tuple[int, ...]:
    # divisor is monic
    rem = list(dividend)
    dd = len(divisor) - 1
    for d in range(len(rem) - 1, dd - 1, -1):
        c = rem[d]
        if c:
            base = d - dd
            for j in range(dd + 1):
                rem[base + j] = (rem[base + j] - c * divisor[j]) % p
    while len(rem) > 1 and rem[-1] == 0:
        rem.pop()
    return tuple(rem)


def _is_irreducible(poly: Sequence[int], p: int) -> bool:
    m = len(poly) - 1
    if m == 1:
        return True
    for d in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            divisor = (*low, 1)
            rem = _poly_rem(poly, divisor, p)
            if rem == (0,):
                return False
    return True


def _canonical_modulus(p: int, m: int) -> tuple[int, ...]:
    if m == 1:
        return (0, 1)
    for low in itertools.product(range(p), repeat=m):
        candidate = (*low, 1)
        if _is_irreducible(candidate, p):
            return candidate
    raise AssertionError(f"no irreducible polynomial of degree {m} over F_{p}")


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


class FiniteField:
    """F_{p^m} with table-driven arithmetic on integer element codes."""

    def __init__(self, p: int, m: int = 1):
        if not is_prime(p):
            raise NonPrimeError(f"characteristic must be prime, got {p}")
        if m < 1:
            raise BadRangeError(f"extension degree must be positive, got {m}")
        order = p ** m
        if order > MAX_FIELD_ORDER:
            raise DegreeTooLargeError(
                f"order {order} exceeds the supported maximum {MAX_FIELD_ORDER}"
            )
        self.p = p
        self.m = m
        self.order = order
        self.modulus = _canonical_modulus(p, m)
        self._build_exp_log()
        self._add_table: list[list[int]] | None = None
        self._mul_table: list[list[int]] | None = None
        self._neg_table: list[int] | None = None
        self._inv_table: list[int] | None = None
        self._frob_tables: dict[int, list[int]] = {}

    # construction ------------------------------------------------------

    def _code_to_coeffs(self, code: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.m):
            code, r = divmod(code, self.p)
            out.append(r)
        return tuple(out)

    def _coeffs_to_code(self, coeffs: Sequence[int]) -> int:
        code = 0
        for c in reversed(coeffs):
            code = code * self.p + c
        return code

    def _build_exp_log(self) -> None:
        q1 = self.order - 1
        gen = None
        for cand in range(2, self.order):
            cc = self._code_to_coeffs(cand)
            if all(
                self._pow_coeffs(cc, q1 // r) != self._code_to_coeffs(1)
                for r in _prime_factors(q1)
            ):
                gen = cc
                break
        if gen is None:  # order 2: the only generator is 1
            gen = self._code_to_coeffs(1)
        exp = [0] * (2 * q1)
        log = [0] * self.order
        cur = self._code_to_coeffs(1)
        for i in range(q1):
            code = self._coeffs_to_code(cur)
            exp[i] = code
            exp[i + q1] = code
            log[code] = i
            cur = _poly_mul_mod(cur, gen, self.modulus, self.p)
        if self._coeffs_to_code(cur) != 1:
            raise AssertionError("generator order check failed")
        self.generator_code = exp[1] if q1 > 1 else 1
        self._exp = exp
        self._log = log

    def _pow_coeffs(self, base: tuple[int, ...], e: int) -> tuple[int, ...]:
        result = self._code_to_coeffs(1)
        while e:
            if e & 1:
                result = _poly_mul_mod(result, base, self.modulus, self.p)
            base = _poly_mul_mod(base, base, self.modulus, self.p)
            e >>= 1
        return result

    # dense tables ------------------------------------------------------

    @property
    def add_table(self) -> list[list[int]]:
        if self._add_table is None:
            q, p, m = self.order, self.p, self.m
            if p == 2:
                self._add_table = [[a ^ b for b in range(q)] for a in range(q)]
            else:
                coeffs = [self._code_to_coeffs(a) for a in range(q)]
                self._add_table = [
                    [
                        self._coeffs_to_code([(x + y) % p for x, y in zip(ca, cb)])
                        for cb in coeffs
                    ]
                    for ca in coeffs
                ]
        return self._add_table

    @property
    def mul_table(self) -> list[list[int]]:
        if self._mul_table is None:
            q = self.order
            exp, log = self._exp, self._log
            rows = [[0] * q]
            for a in range(1, q):
                la = log[a]
                rows.append([0] + [exp[la + log[b]] for b in range(1, q)])
            self._mul_table = rows
        return self._mul_table

    @property
    def neg_table(self) -> list[int]:
        if self._neg_table is None:
            p = self.p
            self._neg_table = [
                self._coeffs_to_code([(-c) % p for c in self._code_to_coeffs(a)])
                for a in range(self.order)
            ]
        return self._neg_table

    @property
    def inv_table(self) -> list[int]:
        # inv[0] is a sentinel 0; elimination code never reads it
        if self._inv_table is None:
            q1 = self.order - 1
            exp, log = self._exp, self._log
            self._inv_table = [0] + [exp[q1 - log[a]] for a in range(1, self.order)]
        return self._inv_table

    def frobenius_table(self, q: int) -> list[int]:
        """Table of a -> a^q for q a characteristic power with q*q = order."""
        tab = self._frob_tables.get(q)
        if tab is None:
            if q < 2 or q * q != self.order:
                raise BadSubfieldOrderError(
                    f"subfield order {q} is not the square root of {self.order}"
                )
            pp = self.p
            qq = q
            while qq % pp == 0:
                qq //= pp
            if qq != 1:
                raise BadSubfieldOrderError(
                    f"subfield order {q} is not a power of the characteristic {pp}"
                )
            q1 = self.order - 1
            exp, log = self._exp, self._log
            tab = [0] + [exp[(log[a] * q) % q1] for a in range(1, self.order)]
            self._frob_tables[q] = tab
        return tab

    # code-level ops (scalar; hot loops should grab the tables directly) -

    def add_code(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def mul_code(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def neg_code(self, a: int) -> int:
        return self.neg_table[a]

    def inv_code(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[self.order - 1 - self._log[a]]

    def pow_code(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        q1 = self.order - 1
        return self._exp[(self._log[a] * e) % q1]

    # element API ---------------------------------------------------------

    def elem(self, value: int | Sequence[int]) -> FieldElem:
        """Element from an integer code or a low-degree-first coefficient vector."""
        if isinstance(value, int):
            code = value
        else:
            coeffs = list(value)
            if len(coeffs) != self.m or any(not 0 <= c < self.p for c in coeffs):
                raise BadRangeError(f"bad coefficient vector {coeffs} for {self}")
            code = self._coeffs_to_code(coeffs)
        if not 0 <= code < self.order:
            raise BadRangeError(f"element code {code} out of range for {self}")
        return FieldElem(self, code)

    @property
    def zero(self) -> FieldElem:
        return FieldElem(self, 0)

    @property
    def one(self) -> FieldElem:
        return FieldElem(self, 1)

    @property
    def generator(self) -> FieldElem:
        """A fixed generator of the multiplicative group."""
        return FieldElem(self, self.generator_code)

    def elements(self) -> Iterator[FieldElem]:
        for code in range(self.order):
            yield FieldElem(self, code)

    # identity ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FiniteField)
            and other.p == self.p
            and other.m == self.m
            and other.modulus == self.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        return f"F_{self.order}"


_FIELD_CACHE: dict[tuple[int, int], FiniteField] = {}


def make_field(p: int, m: int = 1) -> FiniteField:
    """Cached constructor for F_{p^m} on the canonical modulus."""
    key = (p, m)
    field = _FIELD_CACHE.get(key)
    if field is None:
        field = FiniteField(p, m)
        _FIELD_CACHE[key] = field
    return field


def field_of_order(q: int) -> FiniteField:
    """F_q for a prime power q (cached)."""
    from .exactnum import prime_power_parts

    p, e = prime_power_parts(q)
    return make_field(p, e)


class FieldElem:
    """Element of a FiniteField, identified by its integer code."""

    __slots__ = ("field", "code")

    def __init__(self, field: FiniteField, code: int):
        self.field = field
        self.code = code

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field._code_to_coeffs(self.code)

    def is_zero(self) -> bool:
        return self.code == 0

    def _coerce(self, other: object) -> int:
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise BadRangeError("elements of different fields")
            return other.code
        if isinstance(other, int):
            return self.field.elem(other).code
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        code = self._coerce(other)
        if code is NotImplemented:
            return NotImplemented
        return FieldElem(self.field, self.field.add_table[self.code][code])

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(self.field, self.field.neg_table[self.code])

    def __sub__(self, other):
        code = self._coerce(other)
        if code is NotImplemented:
            return NotImplemented
        return FieldElem(
            self.field, self.field.add_table[self.code][self.field.neg_table[code]]
        )

    def __mul__(self, other):
        code = self._coerce(other)
        if code is NotImplemented:
            return NotImplemented
        return FieldElem(self.field, self.field.mul_code(self.code, code))

    __rmul__ = __mul__

    def __truediv__(self, other):
        code = self._coerce(other)
        if code is NotImplemented:
            return NotImplemented
        return FieldElem(
            self.field, self.field.mul_code(self.code, self.field.inv_code(code))
        )

    def __pow__(self, e: int):
        return FieldElem(self.field, self.field.pow_code(self.code, e))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElem):
            return other.field == self.field and other.code == self.code
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.code))

    def __repr__(self) -> str:
        return f"{self.field!r}[{self.code}]"


def frobenius(x: FieldElem, q: int) -> FieldElem:
    """x -> x^q for the subfield order q with q^2 = |field|; an involution."""
    tab = x.field.frobenius_table(q)
    return FieldElem(x.field, tab[x.code])


# -- matrices -----------------------------------------------------------------

class MatrixGF:
    """Immutable dense matrix over a FiniteField, entries stored as codes."""

    __slots__ = ("field", "rows", "cols", "codes")

    def __init__(self, field: FiniteField, rows: int, cols: int, codes: tuple[int, ...]):
        if rows < 0 or cols < 0 or len(codes) != rows * cols:
            raise BadRangeError(
                f"shape ({rows}, {cols}) does not match {len(codes)} entries"
            )
        order = field.order
        if any(not 0 <= c < order for c in codes):
            raise BadRangeError("entry code out of range")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.codes = codes

    @classmethod
    def _trusted(cls, field: FiniteField, rows: int, cols: int, codes: tuple[int, ...]) -> MatrixGF:
        # internal fast path: caller guarantees codes are in range
        m = object.__new__(cls)
        m.field = field
        m.rows = rows
        m.cols = cols
        m.codes = codes
        return m

    @classmethod
    def from_rows(cls, field: FiniteField, rows: Iterable[Sequence[int | FieldElem]]) -> MatrixGF:
        row_list = [list(r) for r in rows]
        nrows = len(row_list)
        ncols = len(row_list[0]) if row_list else 0
        codes: list[int] = []
        for r in row_list:
            if len(r) != ncols:
                raise BadRangeError("ragged rows")
            for e in r:
                codes.append(e.code if isinstance(e, FieldElem) else e)
        return cls(field, nrows, ncols, tuple(codes))

    @classmethod
    def identity(cls, field: FiniteField, n: int) -> MatrixGF:
        codes = [0] * (n * n)
        for i in range(n):
            codes[i * n + i] = 1
        return cls(field, n, n, tuple(codes))

    def entry(self, i: int, j: int) -> FieldElem:
        return FieldElem(self.field, self.codes[i * self.cols + j])

    def row_codes(self, i: int) -> tuple[int, ...]:
        return self.codes[i * self.cols : (i + 1) * self.cols]

    def to_lists(self) -> list[list[int]]:
        n = self.cols
        return [list(self.codes[i * n : (i + 1) * n]) for i in range(self.rows)]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MatrixGF)
            and other.field == self.field
            and other.rows == self.rows
            and other.cols == self.cols
            and other.codes == self.codes
        )

    def __hash__(self) -> int:
        return hash((self.field, self.rows, self.cols, self.codes))

    def __repr__(self) -> str:
        return f"MatrixGF({self.field!r}, {self.rows}x{self.cols})"


@dataclass(frozen=True)
class RrefResult:
    matrix: MatrixGF
    rank: int
    pivot_cols: tuple[int, ...]


def _rref_in_place(rows: list[list[int]], field: FiniteField) -> tuple[int, list[int]]:
    """Reduce rows to RREF; returns (rank, pivot columns)."""
    mul = field.mul_table
    add = field.add_table
    neg = field.neg_table
    inv = field.inv_table
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = -1
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][c]
        if lead != 1:
            scale = mul[inv[lead]]
            rows[r] = [scale[x] for x in rows[r]]
        pivot_row = rows[r]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    fac = mul[f]
                    ri = rows[i]
                    for t in range(ncols):
                        x = pivot_row[t]
                        if x:
                            ri[t] = add[ri[t]][neg[fac[x]]]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return r, pivots


def rref(matrix: MatrixGF) -> RrefResult:
    """Reduced row echelon form with rank and pivot columns."""
    rows = matrix.to_lists()
    rank, pivots = _rref_in_place(rows, matrix.field)
    flat = tuple(x for row in rows for x in row)
    reduced = MatrixGF(matrix.field, matrix.rows, matrix.cols, flat)
    return RrefResult(reduced, rank, tuple(pivots))


def gram(generator: MatrixGF, form: FormKind) -> MatrixGF:
    """Gram matrix of the row vectors under the given bilinear/sesquilinear form."""
    field = generator.field
    k = generator.rows
    n = generator.cols
    mul = field.mul_table
    add = field.add_table
    neg = field.neg_table
    rows = generator.to_lists()
    out = [[0] * k for _ in range(k)]
    if form is FormKind.EUCLIDEAN:
        for i in range(k):
            ri = rows[i]
            for j in range(i, k):
                rj = rows[j]
                s = 0
                for t in range(n):
                    a = ri[t]
                    if a and rj[t]:
                        s = add[s][mul[a][rj[t]]]
                out[i][j] = s
                out[j][i] = s
    elif form is FormKind.HERMITIAN:
        if field.m % 2 != 0:
            raise NonSquareFieldError(
                f"hermitian form needs a square field order, got {field.order}"
            )
        q = field.p ** (field.m // 2)
        conj = field.frobenius_table(q)
        for i in range(k):
            ri = rows[i]
            for j in range(k):
                rj = rows[j]
                s = 0
                for t in range(n):
                    a = ri[t]
                    if a and rj[t]:
                        s = add[s][mul[a][conj[rj[t]]]]
                out[i][j] = s
    else:
        if n % 2 != 0:
            raise OddAmbientError(
                f"symplectic form needs an even ambient length, got {n}"
            )
        half = n // 2
        for i in range(k):
            ri = rows[i]
            for j in range(i + 1, k):
                rj = rows[j]
                s = 0
                for t in range(half):
                    a = ri[t]
                    b = rj[half + t]
                    if a and b:
                        s = add[s][mul[a][b]]
                    a = ri[half + t]
                    b = rj[t]
                    if a and b:
                        s = add[s][neg[mul[a][b]]]
                out[i][j] = s
                out[j][i] = neg[s]
    flat = tuple(x for row in out for x in row)
    return MatrixGF(field, k, k, flat)


def hull_dim(generator: MatrixGF, form: FormKind) -> int:
    """dim(C intersect C^perp) = k - rank(Gram) for a full-row-rank generator."""
    rows = generator.to_lists()
    rank, _ = _rref_in_place(rows, generator.field)
    if rank != generator.rows:
        raise RankDeficientGeneratorError(
            f"generator has rank {rank} < {generator.rows} rows"
        )
    g = gram(generator, form)
    grows = g.to_lists()
    grank, _ = _rref_in_place(grows, generator.field)
    return generator.rows - grank
