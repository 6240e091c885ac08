"""(M, Sigma)-freeness machinery: exhaustive pattern search and exact
counting, the randomized k-query tester, minimum repair distance at desk
scale, instance hitting numbers, the tower-type soundness-bound formula,
the generalized von Neumann inequality check, and coset-wise rounding.

Degenerate linear maps count. Freeness quantifies over ALL linear maps,
including non-injective ones and the zero map, so any f with f(0) = 1
already contains the all-ones pattern of every matroid. This surprises
users but is what the definition says.

Enumeration order contract (shared by find_pattern / count_patterns /
von_neumann_gap): linear maps are restricted to the span of the ground
vectors; assignment index t in [0, 2^(n*r)) gives basis image
u_j = bits [j*n, (j+1)*n) of t, where basis[j] is the j-th vector of the
matroid's canonical span basis. The first violation reported is the one
with the smallest t.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

import numpy as np

from .boolfn import (BooleanFunction, coset_point_indices, density, is_uniform,
                     restrict_to_coset, wht)
from .errors import BudgetExceededError, DimensionMismatchError, InvalidInputError
from .gf2 import GFVector, LinearMap, Subspace, coset_decompose
from .matroid import BinaryMatroid, has_complexity_one

PATTERN_BUDGET_BITS = 30
VON_NEUMANN_BUDGET_BITS = 26
HITTING_INSTANCE_BUDGET = 10 ** 7
REPAIR_CHECK_BUDGET = 2 * 10 ** 6
_CHUNK = 1 << 20


def derive_seed(master: int, *shard: int) -> int:
    """The repo's fixed rule for per-shard seeds: feed (master, *shard)
    into a SeedSequence and take one 64-bit word."""
    ss = np.random.SeedSequence([master & (2 ** 64 - 1)] + [s & (2 ** 64 - 1) for s in shard])
    return int(ss.generate_state(1, np.uint64)[0])


@dataclass(frozen=True)
class PatternSpec:
    """The forbidden value string Sigma for a k-element matroid."""

    sigma: tuple[int, ...]

    def __post_init__(self):
        if not self.sigma or any(b not in (0, 1) for b in self.sigma):
            raise InvalidInputError("sigma must be a nonempty 0/1 tuple")

    @classmethod
    def from_string(cls, s: str) -> "PatternSpec":
        if set(s) - {"0", "1"}:
            raise InvalidInputError(f"not a 0/1 string: {s!r}")
        return cls(tuple(int(c) for c in s))

    @classmethod
    def all_ones(cls, k: int) -> "PatternSpec":
        return cls((1,) * k)

    @property
    def k(self) -> int:
        return len(self.sigma)

    @property
    def ones_count(self) -> int:
        return sum(self.sigma)

    @property
    def zeros_count(self) -> int:
        return self.k - self.ones_count

    def index_int(self) -> int:
        """sigma packed little-endian: bit i = sigma[i]."""
        out = 0
        for i, b in enumerate(self.sigma):
            out |= b << i
        return out

    def complement(self) -> "PatternSpec":
        return PatternSpec(tuple(1 - b for b in self.sigma))

    def is_all_ones(self) -> bool:
        return self.ones_count == self.k

    def __str__(self):
        return "".join(str(b) for b in self.sigma)


@dataclass(frozen=True)
class PatternInstance:
    """A witness: images of the span basis plus the evaluated points."""

    map: LinearMap
    points: tuple[GFVector, ...]


@dataclass(frozen=True)
class CountReport:
    """Exact violation counts for (f, M, Sigma).

    span_count counts assignments to the canonical span basis (the
    enumeration-order contract above); every such assignment extends to
    exactly 2^(n*(m-r)) full linear maps {0,1}^m -> {0,1}^n, where m is
    the matroid's presentation dimension, giving full_map_count.
    """

    n: int
    rank: int
    ambient_dim: int
    span_count: int

    @property
    def span_total(self) -> int:
        return 1 << (self.n * self.rank)

    @property
    def full_map_count(self) -> int:
        return self.span_count << (self.n * (self.ambient_dim - self.rank))

    @property
    def full_map_total(self) -> int:
        return 1 << (self.n * self.ambient_dim)

    @property
    def density(self) -> Fraction:
        return Fraction(self.span_count, self.span_total)


def _check_pattern_args(f: BooleanFunction, m: BinaryMatroid, sigma: PatternSpec,
                        budget_bits: int) -> None:
    if sigma.k != m.k:
        raise DimensionMismatchError(
            f"sigma length {sigma.k} does not match matroid size {m.k}")
    if f.n * m.rank > budget_bits:
        raise BudgetExceededError(
            f"n*rank = {f.n * m.rank} exceeds exhaustive budget {budget_bits}")


def _scan_chunks(tables: Sequence[np.ndarray], n: int, coords: Sequence[int],
                 sigma: Sequence[int], r: int):
    """Yield (start, match_bool_array) over assignment indices, in order.

    tables[i] is the truth table evaluated at point i; coords[i] is the
    basis mask of ground vector i.
    """
    total = 1 << (n * r)
    mask = (1 << n) - 1
    for start in range(0, total, _CHUNK):
        stop = min(start + _CHUNK, total)
        ts = np.arange(start, stop, dtype=np.int64)
        us = {}
        match = None
        for i, cmask in enumerate(coords):
            pts = None
            j = 0
            cm = cmask
            while cm:
                if cm & 1:
                    if j not in us:
                        us[j] = (ts >> (j * n)) & mask
                    pts = us[j] if pts is None else pts ^ us[j]
                cm >>= 1
                j += 1
            if pts is None:
                vals = np.full(ts.shape, int(tables[i][0]), dtype=np.uint8)
            else:
                vals = tables[i][pts]
            good = vals == sigma[i]
            match = good if match is None else (match & good)
            if not match.any():
                break
        yield start, match


def find_pattern(f: BooleanFunction, m: BinaryMatroid, sigma: PatternSpec,
                 budget_bits: int = PATTERN_BUDGET_BITS) -> Optional[PatternInstance]:
    """First violating instance in enumeration order, or None when f is
    (M, Sigma)-free (exhaustive certificate)."""
    _check_pattern_args(f, m, sigma, budget_bits)
    n, r = f.n, m.rank
    coords = m.span_coords
    tables = [f.table] * m.k
    for start, match in _scan_chunks(tables, n, coords, sigma.sigma, r):
        if match.any():
            t = start + int(np.argmax(match))
            images = tuple(GFVector(n, (t >> (j * n)) & ((1 << n) - 1)) for j in range(r))
            points = []
            for cmask in coords:
                bits = 0
                for j in range(r):
                    if cmask >> j & 1:
                        bits ^= images[j].bits
                points.append(GFVector(n, bits))
            return PatternInstance(LinearMap(r, images), tuple(points))
    return None


def count_patterns(f: BooleanFunction, m: BinaryMatroid, sigma: PatternSpec,
                   budget_bits: int = PATTERN_BUDGET_BITS) -> CountReport:
    """Exact number of span-basis assignments realizing Sigma."""
    _check_pattern_args(f, m, sigma, budget_bits)
    tables = [f.table] * m.k
    count = 0
    for _, match in _scan_chunks(tables, f.n, m.span_coords, sigma.sigma, m.rank):
        count += int(match.sum())
    return CountReport(n=f.n, rank=m.rank, ambient_dim=m.m, span_count=count)


def cycle_count_fourier(f: BooleanFunction, k: int) -> int:
    """Number of k-tuples (x_1..x_k) with sum 0 and all f(x_i) = 1,
    computed exactly as (1/2^n) * sum_a coeffs[a]^k."""
    if k < 3:
        raise InvalidInputError(f"cycle length k={k} must be at least 3")
    total = wht(f).power_sum(k)
    size = 1 << f.n
    assert total % size == 0
    return total // size


def brute_force_cycle_count(f: BooleanFunction, k: int) -> int:
    """Independent oracle: enumerate all zero-sum k-tuples directly."""
    if k < 3:
        raise InvalidInputError(f"cycle length k={k} must be at least 3")
    n = f.n
    if n * (k - 1) > PATTERN_BUDGET_BITS:
        raise BudgetExceededError("tuple enumeration too large")
    total = 1 << (n * (k - 1))
    mask = (1 << n) - 1
    count = 0
    for start in range(0, total, _CHUNK):
        ts = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        acc = np.ones(ts.shape, dtype=np.uint8)
        xor_sum = np.zeros(ts.shape, dtype=np.int64)
        for j in range(k - 1):
            xs = (ts >> (j * n)) & mask
            acc &= f.table[xs]
            xor_sum ^= xs
        acc &= f.table[xor_sum]
        count += int(acc.sum())
    return count


def run_tester(f: BooleanFunction, m: BinaryMatroid, sigma: PatternSpec,
               samples: int, seed: int) -> tuple[int, Fraction]:
    """The k-query tester: draw uniformly random linear maps (independent
    uniform images of the m presentation-basis vectors) and reject a draw
    iff the evaluated tuple equals Sigma.

    RNG: numpy PCG64 seeded with `seed`; identical seeds reproduce the
    rejection sequence bit for bit. Shard seeds, when sharding is wanted,
    must be derived via np.random.SeedSequence(seed).spawn(...).
    """
    if sigma.k != m.k:
        raise DimensionMismatchError(
            f"sigma length {sigma.k} does not match matroid size {m.k}")
    if samples < 1:
        raise InvalidInputError("samples must be positive")
    rng = np.random.Generator(np.random.PCG64(seed))
    n = f.n
    rejections = 0
    remaining = samples
    while remaining:
        batch = min(remaining, _CHUNK)
        images = rng.integers(0, 1 << n, size=(batch, m.m), dtype=np.int64)
        match = np.ones(batch, dtype=bool)
        for i, vec in enumerate(m.ints):
            pts = np.zeros(batch, dtype=np.int64)
            j = 0
            v = vec
            while v:
                if v & 1:
                    pts ^= images[:, j]
                v >>= 1
                j += 1
            match &= f.table[pts] == sigma.sigma[i]
        rejections += int(match.sum())
        remaining -= batch
    return rejections, Fraction(rejections, samples)


@dataclass(frozen=True)
class RepairReport:
    flips: int
    delta: Fraction
    witness: BooleanFunction


def min_repair_distance(f: BooleanFunction, m: BinaryMatroid, sigma: PatternSpec,
                        check_budget: int = REPAIR_CHECK_BUDGET) -> RepairReport:
    """Exact minimum number of table flips to reach (M, Sigma)-freeness.

    For the monotone pattern Sigma = 1^k only ones need clearing (raising
    a 0 to 1 never removes an all-ones instance), so the search runs over
    subsets of ones(f), capped at 24 ones. Other patterns search all flip
    sets breadth-first over domains of at most 16 points.
    """
    if find_pattern(f, m, sigma) is None:
        return RepairReport(0, Fraction(0), f)
    checks = 0
    if sigma.is_all_ones():
        ones = f.ones()
        if len(ones) > 24:
            raise BudgetExceededError(f"{len(ones)} ones exceed the repair cap of 24")
        for s in range(1, len(ones) + 1):
            for subset in combinations(ones, s):
                checks += 1
                if checks > check_budget:
                    raise BudgetExceededError("repair search budget exceeded")
                table = f.table.copy()
                table[list(subset)] = 0
                candidate = BooleanFunction(f.n, table)
                if find_pattern(candidate, m, sigma) is None:
                    return RepairReport(s, Fraction(s, 1 << f.n), candidate)
    else:
        size = 1 << f.n
        if size > 16:
            raise BudgetExceededError(f"2^n = {size} exceeds the general repair cap of 16")
        for s in range(1, size + 1):
            for subset in combinations(range(size), s):
                checks += 1
                if checks > check_budget:
                    raise BudgetExceededError("repair search budget exceeded")
                table = f.table.copy()
                table[list(subset)] ^= 1
                candidate = BooleanFunction(f.n, table)
                if find_pattern(candidate, m, sigma) is None:
                    return RepairReport(s, Fraction(s, size), candidate)
    raise AssertionError("unreachable: clearing every 1 always yields a free function")


def enumerate_instances(f: BooleanFunction, m: BinaryMatroid,
                        budget: int = HITTING_INSTANCE_BUDGET) -> list[frozenset[int]]:
    """All distinct point sets of all-ones instances of M in f, found by
    assigning ones of f to ground elements with dependency pruning."""
    ones = f.ones()
    one_set = set(ones)
    words_by_top: dict[int, list[int]] = {}
    free_elem = [True] * m.k
    for w in m.kernel_words:
        top = w.bit_length() - 1
        words_by_top.setdefault(top, []).append(w)
        free_elem[top] = False
    points = [0] * m.k
    found: set[frozenset[int]] = set()
    nodes = 0

    def rec(depth: int):
        nonlocal nodes
        if depth == m.k:
            found.add(frozenset(points))
            return
        if free_elem[depth]:
            choices = ones
        else:
            # every dependency word with this top element forces the value
            forced = None
            for w in words_by_top[depth]:
                acc = 0
                rest = w & ~(1 << depth)
                while rest:
                    low = rest & -rest
                    acc ^= points[low.bit_length() - 1]
                    rest ^= low
                if forced is None:
                    forced = acc
                elif forced != acc:
                    return
            choices = [forced] if forced in one_set else []
        for p in choices:
            nodes += 1
            if nodes > budget:
                raise BudgetExceededError(f"instance enumeration exceeded {budget} nodes")
            points[depth] = p
            rec(depth + 1)

    rec(0)
    return sorted(found, key=sorted)


def _min_hitting_set(edges: list[frozenset[int]]) -> int:
    """Exact minimum hitting set size by branch and bound."""
    edges = sorted(set(edges), key=len)
    best = len({x for e in edges for x in e})

    def lower_bound(active: list[frozenset[int]]) -> int:
        used: set[int] = set()
        lb = 0
        for e in active:
            if not (e & used):
                lb += 1
                used |= e
        return lb

    def rec(active: list[frozenset[int]], chosen: int):
        nonlocal best
        if not active:
            best = min(best, chosen)
            return
        if chosen + lower_bound(active) >= best:
            return
        edge = min(active, key=len)
        for x in sorted(edge):
            rest = [e for e in active if x not in e]
            rec(rest, chosen + 1)

    rec(edges, 0)
    return best


def pattern_hitting_number(f: BooleanFunction, m: BinaryMatroid,
                           budget: int = HITTING_INSTANCE_BUDGET) -> int:
    """Minimum number of ones whose removal destroys every all-ones
    instance; equals min_repair_distance for Sigma = 1^k."""
    edges = enumerate_instances(f, m, budget)
    if not edges:
        return 0
    return _min_hitting_set(edges)


def tower_of_twos(height: int) -> int:
    """W(h): 2^2^...^2 of height h; W(0) = 1."""
    if height < 0:
        raise InvalidInputError("tower height must be nonnegative")
    out = 1
    for _ in range(height):
        out = 2 ** out
        if out.bit_length() > 1 << 20:
            raise BudgetExceededError(f"tower of height {height} is not representable")
    return out


TOWER_EVAL_MAX_HEIGHT = 4


@dataclass(frozen=True)
class TowerExpr:
    """A rejection bound of the shape prefactor * 2^(-w_coeff * W(height)).

    W is the tower-of-twos function; height is typically astronomical, so
    evaluation is exact only for height <= 4 and a summary otherwise.
    """

    height: int
    w_coeff: int
    prefactor: Fraction
    variant: str

    def evaluate(self) -> Optional[Fraction]:
        if self.height > TOWER_EVAL_MAX_HEIGHT:
            return None
        w = tower_of_twos(self.height)
        return self.prefactor / (Fraction(2) ** (self.w_coeff * w))

    def summary(self) -> str:
        return (f"{self.variant}: prefactor {self.prefactor} * "
                f"2^(-{self.w_coeff} * W({self.height}))")


def _ceil_fraction(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def soundness_bound(eps, k: int) -> TowerExpr:
    """The tester's guaranteed rejection rate for functions eps-far from
    M-free, M of complexity 1 on k elements:
    tau(eps) = 2^(-k*(W(ceil((4/eps)^(6k))) + 2)) * eps^k."""
    eps = Fraction(eps)
    if not 0 < eps <= 1:
        raise InvalidInputError(f"eps must lie in (0, 1], got {eps}")
    height = _ceil_fraction((4 / eps) ** (6 * k))
    prefactor = eps ** k / Fraction(2) ** (2 * k)
    return TowerExpr(height=height, w_coeff=k, prefactor=prefactor, variant="monotone")


def nonmonotone_soundness_bound(eps, k: int, eta) -> TowerExpr:
    """The cycle tester's bound for arbitrary Sigma (dense-coset case):
    2^(-(k-1)*W(ceil(a^-3))) * (1-eta)^(k-2) * (2*eta-1), with
    a = (1-eta)^k * eps^k / 2."""
    eps, eta = Fraction(eps), Fraction(eta)
    if not 0 < eps <= 1:
        raise InvalidInputError(f"eps must lie in (0, 1], got {eps}")
    if not Fraction(1, 2) < eta < 1:
        raise InvalidInputError(f"eta must lie in (1/2, 1), got {eta}")
    a = (1 - eta) ** k * eps ** k / 2
    height = _ceil_fraction(a ** -3)
    prefactor = (1 - eta) ** (k - 2) * (2 * eta - 1)
    return TowerExpr(height=height, w_coeff=k - 1, prefactor=prefactor,
                     variant="nonmonotone")


@dataclass(frozen=True)
class VonNeumannReport:
    lhs: Fraction
    rhs_fourth_power: Fraction
    rhs: float
    holds: bool


def von_neumann_gap(fs: Sequence[BooleanFunction], m: BinaryMatroid,
                    budget_bits: int = VON_NEUMANN_BUDGET_BITS) -> VonNeumannReport:
    """Check E_L[prod f_i(L(v_i))] <= min_i (sum_a f_i^(a)^4)^(1/4) on a
    complexity-1 matroid. The verdict compares exact fourth powers; the
    reported rhs is a 12-digit float of the fourth root."""
    if len(fs) != m.k:
        raise InvalidInputError(f"need {m.k} functions, got {len(fs)}")
    if not has_complexity_one(m):
        raise InvalidInputError("von Neumann check requires a complexity-1 matroid")
    n = fs[0].n
    for g in fs:
        if g.n != n:
            raise DimensionMismatchError("all functions must share one domain")
    if n * m.rank > budget_bits:
        raise BudgetExceededError(
            f"n*rank = {n * m.rank} exceeds budget {budget_bits}")
    count = 0
    tables = [g.table for g in fs]
    for _, match in _scan_chunks(tables, n, m.span_coords, (1,) * m.k, m.rank):
        count += int(match.sum())
    lhs = Fraction(count, 1 << (n * m.rank))
    rhs4 = min(Fraction(wht(g).power_sum(4), 1 << (4 * n)) for g in fs)
    rhs = round(float(rhs4) ** 0.25, 12)
    return VonNeumannReport(lhs=lhs, rhs_fourth_power=rhs4, rhs=rhs,
                            holds=lhs ** 4 <= rhs4)


def reduce_function(f: BooleanFunction, sub: Subspace, a, b, eta=None,
                    mode: str = "monotone") -> BooleanFunction:
    """The rounding construction f^R, built coset by coset.

    monotone mode: a-uniform cosets of density <= b are zeroed, other
    a-uniform cosets are kept, non-uniform cosets are zeroed.
    nonmonotone mode: a-uniform cosets round to 0 below density b and to
    1 above 1-b; non-uniform cosets round to the majority side of the
    threshold eta (1 iff density >= eta), with 1/2 < eta < 1.
    """
    if mode not in ("monotone", "nonmonotone"):
        raise InvalidInputError(f"unknown rounding mode {mode!r}")
    a, b = Fraction(a), Fraction(b)
    if a < 0 or not 0 <= b <= 1:
        raise InvalidInputError("thresholds must satisfy a >= 0, 0 <= b <= 1")
    if mode == "nonmonotone":
        if eta is None:
            raise InvalidInputError("nonmonotone mode needs eta")
        eta = Fraction(eta)
        if not Fraction(1, 2) < eta < 1:
            raise InvalidInputError(f"eta must lie in (1/2, 1), got {eta}")
    table = f.table.copy()
    for coset in coset_decompose(sub):
        restr = restrict_to_coset(f, coset)
        idx = coset_point_indices(coset)
        mu = density(restr, 1)
        if is_uniform(restr, a):
            if mode == "monotone":
                if mu <= b:
                    table[idx] = 0
            else:
                if mu < b:
                    table[idx] = 0
                elif mu > 1 - b:
                    table[idx] = 1
        else:
            if mode == "monotone":
                table[idx] = 0
            else:
                table[idx] = 1 if mu >= eta else 0
    return BooleanFunction(f.n, table)
