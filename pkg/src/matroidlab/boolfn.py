"""Boolean functions as complete truth tables, with exact Walsh-Hadamard
Fourier analysis, densities, coset restriction, uniformity and toy-scale
regularity search.

Point-to-index convention (fixed for the whole repo): a point x maps to
index ix(x) = sum_j x_j 2^j, i.e. coordinate j is bit j of the index.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

import numpy as np

from .errors import BudgetExceededError, DimensionMismatchError, InvalidInputError
from .gf2 import Coset, GFVector, Subspace, coset_decompose, enumerate_subspaces

WHT_MAX_N = 24
REGULARITY_MAX_N = 8


class BooleanFunction:
    """A function {0,1}^n -> {0,1} stored as a full truth table.

    n = 0 is permitted (a single-point domain); it arises as the
    restriction of a function to a singleton coset.
    """

    __slots__ = ("n", "table")

    def __init__(self, n: int, table):
        if n < 0 or n > WHT_MAX_N:
            raise InvalidInputError(f"domain dimension {n} out of supported range")
        arr = np.asarray(table, dtype=np.uint8)
        if arr.shape != (1 << n,):
            raise InvalidInputError(
                f"table length {arr.shape} does not match 2^{n}")
        if arr.max(initial=0) > 1:
            raise InvalidInputError("table entries must be 0 or 1")
        arr.flags.writeable = False
        self.n = n
        self.table = arr

    @classmethod
    def from_ones(cls, n: int, ones: Iterable[int]) -> "BooleanFunction":
        table = np.zeros(1 << n, dtype=np.uint8)
        for x in ones:
            if not 0 <= x < (1 << n):
                raise InvalidInputError(f"point {x} outside {{0,1}}^{n}")
            table[x] = 1
        return cls(n, table)

    @classmethod
    def constant(cls, n: int, value: int) -> "BooleanFunction":
        return cls(n, np.full(1 << n, 1 if value else 0, dtype=np.uint8))

    @classmethod
    def from_table_int(cls, n: int, key: int) -> "BooleanFunction":
        return cls(n, [(key >> x) & 1 for x in range(1 << n)])

    def value(self, x: int) -> int:
        return int(self.table[x])

    def value_at(self, v: GFVector) -> int:
        if v.dim != self.n:
            raise DimensionMismatchError(f"dim {v.dim} vs {self.n}")
        return int(self.table[v.bits])

    def ones(self) -> list[int]:
        return [int(x) for x in np.flatnonzero(self.table)]

    def ones_count(self) -> int:
        return int(self.table.sum())

    def complement(self) -> "BooleanFunction":
        return BooleanFunction(self.n, 1 - self.table)

    def table_int(self) -> int:
        """The table packed into one int: bit ix(x) = f(x)."""
        out = 0
        for x in np.flatnonzero(self.table):
            out |= 1 << int(x)
        return out

    def __eq__(self, other):
        return (isinstance(other, BooleanFunction) and self.n == other.n
                and np.array_equal(self.table, other.table))

    def __hash__(self):
        return hash((self.n, self.table.tobytes()))

    def __repr__(self):
        if self.n <= 4:
            return f"BooleanFunction(n={self.n}, ones={self.ones()})"
        return f"BooleanFunction(n={self.n}, ones_count={self.ones_count()})"


def random_function(n: int, rng, density: float = 0.5) -> BooleanFunction:
    return BooleanFunction(n, (rng.random(1 << n) < density).astype(np.uint8))


@dataclass(frozen=True)
class FourierSpectrum:
    """Unnormalized integer spectrum: coeffs[a] = sum_x f(x)(-1)^{a.x}.

    The true Fourier coefficient is coeffs[a] / 2^n.
    """

    n: int
    coeffs: np.ndarray

    def coeff(self, alpha: int) -> int:
        return int(self.coeffs[alpha])

    def coeff_fraction(self, alpha: int) -> Fraction:
        return Fraction(int(self.coeffs[alpha]), 1 << self.n)

    def max_abs_nonzero(self) -> int:
        """max_{a != 0} |coeffs[a]| (0 when n = 0)."""
        if self.n == 0:
            return 0
        return int(np.abs(self.coeffs[1:]).max())

    def power_sum(self, k: int) -> int:
        """sum_a coeffs[a]^k in exact big-integer arithmetic."""
        return sum(int(c) ** k for c in self.coeffs)


def _butterfly(values: np.ndarray) -> np.ndarray:
    """In-place unnormalized Walsh-Hadamard transform of a 2^n array."""
    size = values.shape[0]
    h = 1
    while h < size:
        blocks = values.reshape(-1, 2 * h)
        lo = blocks[:, :h].copy()
        hi = blocks[:, h:].copy()
        blocks[:, :h] = lo + hi
        blocks[:, h:] = lo - hi
        h *= 2
    return values


def wht(f: BooleanFunction) -> FourierSpectrum:
    """Exact integer spectrum via the standard butterfly."""
    if f.n > WHT_MAX_N:
        raise BudgetExceededError(f"n={f.n} exceeds WHT cap {WHT_MAX_N}")
    coeffs = _butterfly(f.table.astype(np.int64))
    coeffs.flags.writeable = False
    return FourierSpectrum(f.n, coeffs)


def inverse_wht(spectrum: FourierSpectrum) -> BooleanFunction:
    """Invert an unnormalized spectrum back to the truth table."""
    values = _butterfly(spectrum.coeffs.astype(np.int64))
    size = 1 << spectrum.n
    if np.any(values % size):
        raise InvalidInputError("spectrum is not that of a 0/1-valued function")
    return BooleanFunction(spectrum.n, values // size)


@dataclass(frozen=True)
class CosetRestriction:
    """f restricted to a coset g+H, re-indexed by internal H coordinates.

    Internal coordinate i corresponds to the i-th canonical basis vector
    of H, so values(h) = f(rep XOR basis-combination(h)).
    """

    coset: Coset
    values: BooleanFunction


def coset_point_indices(coset: Coset) -> np.ndarray:
    """Table indices of the coset's points; position h holds the point
    rep XOR (combination of basis vectors selected by the bits of h)."""
    sub = coset.subspace
    idx = np.empty(1 << sub.dim, dtype=np.int64)
    idx[0] = coset.rep.bits
    for i, b in enumerate(sub.basis):
        step = 1 << i
        idx[step:2 * step] = idx[:step] ^ b.bits
    return idx


def restrict_to_coset(f: BooleanFunction, coset: Coset) -> CosetRestriction:
    sub = coset.subspace
    if sub.ambient_dim != f.n:
        raise DimensionMismatchError(f"coset ambient {sub.ambient_dim} vs n={f.n}")
    idx = coset_point_indices(coset)
    return CosetRestriction(coset, BooleanFunction(sub.dim, f.table[idx]))


FunctionLike = Union[BooleanFunction, CosetRestriction]


def _as_function(f: FunctionLike) -> BooleanFunction:
    return f.values if isinstance(f, CosetRestriction) else f


def density(f: FunctionLike, sigma: int = 1) -> Fraction:
    """Exact density of the value sigma."""
    g = _as_function(f)
    count = g.ones_count() if sigma else (1 << g.n) - g.ones_count()
    return Fraction(count, 1 << g.n)


def is_uniform(f: FunctionLike, eps) -> bool:
    """True iff every nonzero-frequency coefficient has |f^(a)| <= eps."""
    g = _as_function(f)
    eps = Fraction(eps)
    return Fraction(wht(g).max_abs_nonzero(), 1 << g.n) <= eps


def hamming_distance(f: BooleanFunction, g: BooleanFunction) -> tuple[int, Fraction]:
    if f.n != g.n:
        raise DimensionMismatchError(f"n={f.n} vs n={g.n}")
    flips = int(np.count_nonzero(f.table != g.table))
    return flips, Fraction(flips, 1 << f.n)


def uniform_coset_fraction(f: BooleanFunction, sub: Subspace, eps) -> Fraction:
    """Fraction of cosets of H on which f restricts eps-uniformly."""
    eps = Fraction(eps)
    good = 0
    cosets = coset_decompose(sub)
    for coset in cosets:
        if is_uniform(restrict_to_coset(f, coset), eps):
            good += 1
    return Fraction(good, len(cosets))


def regularity_decompose(f: BooleanFunction, eps, max_codim: int | None = None
                         ) -> tuple[Subspace, Fraction]:
    """Smallest-codimension subspace H such that >= 1-eps of the cosets of
    H carry an eps-uniform restriction of f.

    Exhaustive search in canonical subspace order, codim ascending; only
    realizes the regularity statement at toy scale (n <= 8). codim = n
    always works (singleton cosets are constant), so the search succeeds
    whenever max_codim = n.
    """
    if f.n > REGULARITY_MAX_N:
        raise BudgetExceededError(f"n={f.n} exceeds regularity search cap {REGULARITY_MAX_N}")
    if max_codim is None:
        max_codim = f.n
    if max_codim > f.n:
        raise InvalidInputError(f"max_codim {max_codim} exceeds n={f.n}")
    eps = Fraction(eps)
    threshold = 1 - eps
    for codim in range(max_codim + 1):
        for sub in enumerate_subspaces(f.n, codim):
            frac = uniform_coset_fraction(f, sub, eps)
            if frac >= threshold:
                return sub, frac
    raise BudgetExceededError(
        f"no subspace of codimension <= {max_codim} is ({eps})-regular for this function")
