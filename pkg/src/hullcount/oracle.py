"""Brute-force hull spectra by exhaustive subspace enumeration.

Every k-dimensional subspace of F_Q^n has a unique generator matrix in
reduced row echelon form, so enumerating those matrices enumerates the
subspaces exactly once: pivot-column subsets are visited in
colexicographic order, and for each subset the free entries run through a
mixed-radix odometer over the element codes 0..Q-1. The total yield is the
Gaussian binomial [n, k]_Q, which doubles as a built-in consistency check
on every spectrum.

The enumeration partitions by pivot subset: partitions() hands out
independent iterators over disjoint subspace families, and their spectra
merge by plain addition. A work limit (default 10^8 subspaces) guards
against accidentally unbounded sweeps; the limit is checked up front from
the exact expected count, not discovered mid-run.

The spectrum loop itself never builds FieldElem or MatrixGF objects: it
fills a reusable row buffer and computes the Gram rank directly on integer
codes through the field's lookup tables.
"""

from __future__ import annotations

import csv
import io
import itertools
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .algebra import FiniteField, FormKind, MatrixGF, field_of_order, make_field
from .errors import (
    BadRangeError,
    NonSquareFieldError,
    OddAmbientError,
    WorkLimitExceededError,
)
from .exactnum import gaussian_binomial, prime_power_parts
from . import formulas
from .formulas import HermitianParams, SymplecticParams

DEFAULT_WORK_LIMIT = 10 ** 8


def _pivot_subsets_colex(n: int, k: int) -> list[tuple[int, ...]]:
    subsets = itertools.combinations(range(n), k)
    return sorted(subsets, key=lambda s: s[::-1])


def _free_positions(pivots: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    pset = set(pivots)
    return [
        (r, c)
        for r in range(len(pivots))
        for c in range(pivots[r] + 1, n)
        if c not in pset
    ]


class SubspaceIterator:
    """Restartable iterator over canonical RREF generators of k-dim subspaces.

    expected_count is the exact number of matrices a full pass yields.
    partitions() splits the run by pivot subset into independent iterators
    whose expected counts sum back to this one.
    """

    def __init__(
        self,
        field: FiniteField,
        n: int,
        k: int,
        pivot_sets: list[tuple[int, ...]] | None = None,
        work_limit: int | None = DEFAULT_WORK_LIMIT,
    ):
        if n < 0 or not 0 <= k <= n:
            raise BadRangeError(f"need 0 <= k <= n, got n={n} k={k}")
        self.field = field
        self.n = n
        self.k = k
        self.pivot_sets = (
            _pivot_subsets_colex(n, k) if pivot_sets is None else list(pivot_sets)
        )
        q = field.order
        self.expected_count = sum(
            q ** len(_free_positions(p, n)) for p in self.pivot_sets
        )
        if work_limit is not None and self.expected_count > work_limit:
            raise WorkLimitExceededError(
                f"estimated {self.expected_count} subspaces exceeds "
                f"work limit {work_limit}"
            )

    def partitions(self) -> list[SubspaceIterator]:
        return [
            SubspaceIterator(self.field, self.n, self.k, [p], work_limit=None)
            for p in self.pivot_sets
        ]

    def __iter__(self) -> Iterator[MatrixGF]:
        field = self.field
        n, k = self.n, self.k
        q = field.order
        trusted = MatrixGF._trusted
        for pivots in self.pivot_sets:
            rows = [[0] * n for _ in range(k)]
            for r, c in enumerate(pivots):
                rows[r][c] = 1
            free = _free_positions(pivots, n)
            if not free:
                yield trusted(field, k, n, tuple(x for row in rows for x in row))
                continue
            frows = [rows[r] for r, _ in free]
            fcols = [c for _, c in free]
            span = range(len(free))
            for vals in itertools.product(range(q), repeat=len(free)):
                for idx in span:
                    frows[idx][fcols[idx]] = vals[idx]
                yield trusted(field, k, n, tuple(x for row in rows for x in row))


def enumerate_subspaces(
    n: int, k: int, field: FiniteField, work_limit: int | None = DEFAULT_WORK_LIMIT
) -> SubspaceIterator:
    """All k-dimensional subspaces of F_Q^n as canonical generator matrices."""
    return SubspaceIterator(field, n, k, work_limit=work_limit)


# -- hull-dimension kernels on raw codes ---------------------------------------

def _make_rank_fn(k: int, field: FiniteField) -> Callable[[list[list[int]]], int]:
    mul = field.mul_table
    add = field.add_table
    neg = field.neg_table
    inv = field.inv_table

    def rank_of(g: list[list[int]]) -> int:
        r = 0
        for c in range(k):
            piv = -1
            for i in range(r, k):
                if g[i][c]:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                g[r], g[piv] = g[piv], g[r]
            grow = g[r]
            pinv = inv[grow[c]]
            for i in range(r + 1, k):
                f = g[i][c]
                if f:
                    mrow = mul[mul[f][pinv]]
                    gi = g[i]
                    for t in range(c, k):
                        x = grow[t]
                        if x:
                            gi[t] = add[gi[t]][neg[mrow[x]]]
            r += 1
        return r

    return rank_of


def _hull_dim_kernel(
    field: FiniteField, form: FormKind, n: int, k: int
) -> Callable[[list[list[int]]], int]:
    """Build a closure computing k - rank(Gram) straight off a row buffer."""
    mul = field.mul_table
    add = field.add_table
    neg = field.neg_table
    rank_of = _make_rank_fn(k, field)

    if form is FormKind.EUCLIDEAN:

        def hull_euclidean(rows: list[list[int]]) -> int:
            g = [[0] * k for _ in range(k)]
            for i in range(k):
                ri = rows[i]
                gi = g[i]
                for j in range(i, k):
                    rj = rows[j]
                    s = 0
                    for t in range(n):
                        a = ri[t]
                        if a:
                            b = rj[t]
                            if b:
                                s = add[s][mul[a][b]]
                    gi[j] = s
                    if j != i:
                        g[j][i] = s
            return k - rank_of(g)

        return hull_euclidean

    if form is FormKind.HERMITIAN:
        if field.m % 2 != 0:
            raise NonSquareFieldError(
                f"hermitian spectra need a square field order, got {field.order}"
            )
        conj = field.frobenius_table(field.p ** (field.m // 2))

        def hull_hermitian(rows: list[list[int]]) -> int:
            g = [[0] * k for _ in range(k)]
            for i in range(k):
                ri = rows[i]
                gi = g[i]
                for j in range(i, k):
                    rj = rows[j]
                    s = 0
                    for t in range(n):
                        a = ri[t]
                        if a:
                            b = rj[t]
                            if b:
                                s = add[s][mul[a][conj[b]]]
                    gi[j] = s
                    if j != i:
                        g[j][i] = conj[s]
            return k - rank_of(g)

        return hull_hermitian

    if n % 2 != 0:
        raise OddAmbientError(f"symplectic spectra need even length, got {n}")
    half = n // 2

    def hull_symplectic(rows: list[list[int]]) -> int:
        g = [[0] * k for _ in range(k)]
        for i in range(k):
            ri = rows[i]
            for j in range(i + 1, k):
                rj = rows[j]
                s = 0
                for t in range(half):
                    a = ri[t]
                    if a:
                        b = rj[half + t]
                        if b:
                            s = add[s][mul[a][b]]
                    a = ri[half + t]
                    if a:
                        b = rj[t]
                        if b:
                            s = add[s][neg[mul[a][b]]]
                if s:
                    g[i][j] = s
                    g[j][i] = neg[s]
        return k - rank_of(g)

    return hull_symplectic


# -- spectra --------------------------------------------------------------------

@dataclass(frozen=True)
class HullSpectrum:
    """Exact map hull dimension -> number of k-dim subspaces attaining it."""

    n: int
    k: int
    form: FormKind
    field_order: int
    counts: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def q(self) -> int:
        """Reporting order: the subfield order for hermitian spectra."""
        if self.form is FormKind.HERMITIAN:
            root = math.isqrt(self.field_order)
            return root
        return self.field_order

    def merged(self, other: HullSpectrum) -> HullSpectrum:
        """Combine partition spectra; a pure fold, addition per hull dim."""
        if (self.n, self.k, self.form, self.field_order) != (
            other.n,
            other.k,
            other.form,
            other.field_order,
        ):
            raise BadRangeError("cannot merge spectra with different parameters")
        counts = dict(self.counts)
        for ell, c in other.counts.items():
            counts[ell] = counts.get(ell, 0) + c
        return HullSpectrum(self.n, self.k, self.form, self.field_order, counts)


def hull_spectrum(
    n: int,
    k: int,
    field: FiniteField,
    form: FormKind,
    work_limit: int | None = DEFAULT_WORK_LIMIT,
) -> HullSpectrum:
    """Enumerate every k-dim subspace of F_Q^n and tally hull dimensions."""
    it = enumerate_subspaces(n, k, field, work_limit)
    kernel = _hull_dim_kernel(field, form, n, k)
    q = field.order
    acc = [0] * (k + 1)
    for pivots in it.pivot_sets:
        rows = [[0] * n for _ in range(k)]
        for r, c in enumerate(pivots):
            rows[r][c] = 1
        free = _free_positions(pivots, n)
        if not free:
            acc[kernel(rows)] += 1
            continue
        frows = [rows[r] for r, _ in free]
        fcols = [c for _, c in free]
        span = range(len(free))
        for vals in itertools.product(range(q), repeat=len(free)):
            for idx in span:
                frows[idx][fcols[idx]] = vals[idx]
            acc[kernel(rows)] += 1
    counts = {ell: c for ell, c in enumerate(acc) if c}
    return HullSpectrum(n, k, form, q, counts)


# -- oracle vs closed form -------------------------------------------------------

@dataclass(frozen=True)
class SpectrumCell:
    ell: int
    oracle: int
    formula: int | None

    @property
    def ok(self) -> bool:
        return self.formula is None or self.formula == self.oracle


@dataclass(frozen=True)
class SpectrumComparison:
    """Per-hull-dimension diff between enumeration and closed form.

    formula entries are None for the Euclidean form, which has no closed
    count here; the Gaussian-binomial sum check still applies.
    """

    length: int
    k: int
    q: int
    form: FormKind
    cells: tuple[SpectrumCell, ...]
    oracle_total: int
    expected_total: int

    @property
    def sum_ok(self) -> bool:
        return self.oracle_total == self.expected_total

    @property
    def cells_ok(self) -> bool:
        return all(c.ok for c in self.cells)

    @property
    def passed(self) -> bool:
        return self.sum_ok and self.cells_ok

    def first_failure(self) -> str | None:
        for c in self.cells:
            if not c.ok:
                return (
                    f"l={c.ell}: oracle {c.oracle} != formula {c.formula}"
                )
        if not self.sum_ok:
            return f"sum {self.oracle_total} != expected {self.expected_total}"
        return None


def _field_for(form: FormKind, q: int) -> FiniteField:
    p, e = prime_power_parts(q)
    if form is FormKind.HERMITIAN:
        return make_field(p, 2 * e)
    return field_of_order(q)


def spectrum_vs_formula(
    length: int,
    k: int,
    q: int,
    form: FormKind,
    work_limit: int | None = DEFAULT_WORK_LIMIT,
) -> SpectrumComparison:
    """Run the oracle at (length, k, q) and diff it against the closed form.

    length is the ambient length (2n for symplectic); q is the formula
    order, so hermitian codes are enumerated over F_{q^2}.
    """
    field = _field_for(form, q)
    spectrum = hull_spectrum(length, k, field, form, work_limit)
    # formulas.count_* looked up at call time so a test hook can swap them
    if form is FormKind.HERMITIAN:
        ell_range = range(0, min(k, length - k) + 1)
        closed = {
            ell: formulas.count_hermitian(HermitianParams(length, k, ell, q))
            for ell in ell_range
        }
    elif form is FormKind.SYMPLECTIC:
        ell_range = range(k % 2, min(k, length - k) + 1, 2)
        closed = {
            ell: formulas.count_symplectic(SymplecticParams(length, k, ell, q))
            for ell in ell_range
        }
    else:
        closed = {}
    all_ells = sorted(set(spectrum.counts) | set(closed))
    cells = tuple(
        SpectrumCell(
            ell,
            spectrum.counts.get(ell, 0),
            closed.get(ell) if form is not FormKind.EUCLIDEAN else None,
        )
        for ell in all_ells
    )
    return SpectrumComparison(
        length,
        k,
        q,
        form,
        cells,
        spectrum.total,
        gaussian_binomial(length, k, field.order),
    )


def spectra_csv(spectra: Iterable[HullSpectrum]) -> str:
    """Long-form CSV dump: one row per (n, k, q, form, hull dim)."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(["n", "k", "q", "form", "ell", "count"])
    for spectrum in spectra:
        for ell in sorted(spectrum.counts):
            writer.writerow([
                spectrum.n, spectrum.k, spectrum.q,
                spectrum.form.value, ell, spectrum.counts[ell],
            ])
    return buf.getvalue()
