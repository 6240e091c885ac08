"""Exact linear algebra over GF(2) on bit-packed vectors.

Vectors are packed little-endian into Python ints: coordinate j of a
vector is bit j of its ``bits`` field, so the string form writes
coordinate 0 first ("110" has coordinates 0 and 1 set).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import BudgetExceededError, DimensionMismatchError, InvalidInputError

SPAN_ENUM_CAP = 25
SUBSPACE_ENUM_MAX_N = 8
COSET_DECOMP_MAX_CODIM = 20


@dataclass(frozen=True)
class GFVector:
    """A vector in {0,1}^dim, coordinates packed into ``bits``."""

    dim: int
    bits: int

    def __post_init__(self):
        if self.dim < 1:
            raise InvalidInputError(f"dimension must be positive, got {self.dim}")
        if self.bits < 0 or self.bits >> self.dim:
            raise InvalidInputError(f"bits 0x{self.bits:x} do not fit in dimension {self.dim}")

    @classmethod
    def from_bits(cls, s: str) -> "GFVector":
        """Parse a coordinate string, first character = coordinate 0."""
        if not s or set(s) - {"0", "1"}:
            raise InvalidInputError(f"not a 0/1 coordinate string: {s!r}")
        return cls(len(s), int(s[::-1], 2))

    def to_bits(self) -> str:
        return "".join("1" if self.bits >> j & 1 else "0" for j in range(self.dim))

    def bit(self, j: int) -> int:
        return self.bits >> j & 1

    def weight(self) -> int:
        return self.bits.bit_count()

    def support(self) -> tuple[int, ...]:
        return tuple(j for j in range(self.dim) if self.bits >> j & 1)

    def is_zero(self) -> bool:
        return self.bits == 0

    def __xor__(self, other: "GFVector") -> "GFVector":
        if self.dim != other.dim:
            raise DimensionMismatchError(f"dim {self.dim} vs {other.dim}")
        return GFVector(self.dim, self.bits ^ other.bits)

    def dot(self, other: "GFVector") -> int:
        """Inner product mod 2."""
        if self.dim != other.dim:
            raise DimensionMismatchError(f"dim {self.dim} vs {other.dim}")
        return (self.bits & other.bits).bit_count() & 1

    def __repr__(self):
        return f"GFVector({self.to_bits()!r})"


def zero_vector(dim: int) -> GFVector:
    return GFVector(dim, 0)


def unit_vector(dim: int, j: int) -> GFVector:
    if not 0 <= j < dim:
        raise InvalidInputError(f"coordinate {j} out of range for dimension {dim}")
    return GFVector(dim, 1 << j)


def _check_common_dim(vectors: Sequence[GFVector], dim: int | None) -> int:
    for v in vectors:
        if dim is None:
            dim = v.dim
        elif v.dim != dim:
            raise DimensionMismatchError(f"mixed dimensions {dim} and {v.dim}")
    if dim is None:
        raise InvalidInputError("ambient dimension required for an empty vector set")
    return dim


def _rref_reduce(basis: dict[int, int], w: int) -> int:
    """Fully reduce w against an RREF basis keyed by pivot (= highest set
    bit): the result has every pivot coordinate cleared, and is zero iff
    w lies in the span."""
    for p, b in basis.items():
        if w >> p & 1:
            w ^= b
    return w


def _rref_add(basis: dict[int, int], w: int) -> bool:
    """Insert w into the basis, keeping full RREF; True if rank grew."""
    w = _rref_reduce(basis, w)
    if w == 0:
        return False
    p = w.bit_length() - 1
    for q in basis:
        if basis[q] >> p & 1:
            basis[q] ^= w
    basis[p] = w
    return True


@dataclass(frozen=True)
class Subspace:
    """A subspace of {0,1}^ambient_dim with its unique RREF basis.

    The basis is stored in descending pivot order; two equal subspaces
    always carry identical basis tuples.
    """

    ambient_dim: int
    basis: tuple[GFVector, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def codim(self) -> int:
        return self.ambient_dim - len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(b.bits.bit_length() - 1 for b in self.basis)

    def reduce(self, v: GFVector) -> GFVector:
        """Canonical coset representative of v (all pivot bits cleared)."""
        if v.dim != self.ambient_dim:
            raise DimensionMismatchError(f"dim {v.dim} vs ambient {self.ambient_dim}")
        w = v.bits
        for b in self.basis:
            p = b.bits.bit_length() - 1
            if w >> p & 1:
                w ^= b.bits
        return GFVector(self.ambient_dim, w)

    def contains(self, v: GFVector) -> bool:
        return self.reduce(v).bits == 0

    def vectors(self) -> list[GFVector]:
        """All 2^dim members, in span-enumeration order over the basis."""
        return enumerate_span(self.basis, dim=self.ambient_dim)

    def __repr__(self):
        return f"Subspace(n={self.ambient_dim}, basis={[b.to_bits() for b in self.basis]})"


def rank_and_basis(vectors: Iterable[GFVector], dim: int | None = None) -> tuple[int, Subspace]:
    """Rank of the span together with its canonical RREF basis."""
    vectors = tuple(vectors)
    dim = _check_common_dim(vectors, dim)
    basis: dict[int, int] = {}
    for v in vectors:
        _rref_add(basis, v.bits)
    rows = tuple(GFVector(dim, basis[p]) for p in sorted(basis, reverse=True))
    return len(rows), Subspace(dim, rows)


def in_span(v: GFVector, vectors: Iterable[GFVector]) -> bool:
    basis: dict[int, int] = {}
    for w in vectors:
        if w.dim != v.dim:
            raise DimensionMismatchError(f"dim {w.dim} vs {v.dim}")
        _rref_add(basis, w.bits)
    return _rref_reduce(basis, v.bits) == 0


def _ref_basis(vectors: Sequence[GFVector]) -> list[int]:
    """Echelon basis in descending pivot order, each kept vector as close
    to its input form as pivot discovery allows (not fully reduced)."""
    by_pivot: dict[int, int] = {}
    for v in vectors:
        w = v.bits
        while w:
            p = w.bit_length() - 1
            if p not in by_pivot:
                by_pivot[p] = w
                break
            w ^= by_pivot[p]
    return [by_pivot[p] for p in sorted(by_pivot, reverse=True)]


def enumerate_span(vectors: Sequence[GFVector], dim: int | None = None,
                   cap: int = SPAN_ENUM_CAP) -> list[GFVector]:
    """All 2^rank span elements.

    Order contract: an echelon basis b_0, b_1, ... (descending pivots) is
    derived from the input; element c is the XOR of b_j over the set bits
    j of the combination index c = 0 .. 2^rank - 1.
    """
    vectors = tuple(vectors)
    dim = _check_common_dim(vectors, dim)
    basis = _ref_basis(vectors)
    r = len(basis)
    if r > cap:
        raise BudgetExceededError(f"span rank {r} exceeds enumeration cap {cap}")
    result = []
    for c in range(1 << r):
        x = 0
        for j in range(r):
            if c >> j & 1:
                x ^= basis[j]
        result.append(GFVector(dim, x))
    return result


@dataclass(frozen=True)
class Coset:
    """A coset rep + H; the stored rep is the canonical member."""

    subspace: Subspace
    rep: GFVector

    @classmethod
    def of(cls, subspace: Subspace, member: GFVector) -> "Coset":
        return cls(subspace, subspace.reduce(member))

    def contains(self, v: GFVector) -> bool:
        return self.subspace.reduce(v) == self.rep

    def points(self) -> list[GFVector]:
        return [self.rep ^ h for h in self.subspace.vectors()]

    def __repr__(self):
        return f"Coset(rep={self.rep.to_bits()}, {self.subspace!r})"


def coset_decompose(subspace: Subspace) -> list[Coset]:
    """All 2^codim cosets, reps ascending as integers."""
    if subspace.codim > COSET_DECOMP_MAX_CODIM:
        raise BudgetExceededError(
            f"codimension {subspace.codim} exceeds cap {COSET_DECOMP_MAX_CODIM}")
    n = subspace.ambient_dim
    free = [j for j in range(n) if j not in set(subspace.pivots)]
    cosets = []
    for c in range(1 << len(free)):
        bits = 0
        for idx, j in enumerate(free):
            if c >> idx & 1:
                bits |= 1 << j
        cosets.append(Coset(subspace, GFVector(n, bits)))
    return cosets


def enumerate_subspaces(n: int, codim: int) -> Iterator[Subspace]:
    """All subspaces of {0,1}^n of the given codimension, each exactly once.

    Enumerates canonical RREF bases directly: pivot sets in descending
    lexicographic order, free entries in ascending counter order. This
    yield order is the repo's canonical subspace order.
    """
    if n > SUBSPACE_ENUM_MAX_N:
        raise BudgetExceededError(f"n={n} exceeds subspace enumeration cap {SUBSPACE_ENUM_MAX_N}")
    if not 0 <= codim <= n:
        raise InvalidInputError(f"codim {codim} out of range for n={n}")
    d = n - codim
    for pivots in combinations(range(n - 1, -1, -1), d):
        pivot_set = set(pivots)
        free_slots = [[b for b in range(p) if b not in pivot_set] for p in pivots]
        widths = [len(s) for s in free_slots]
        total = sum(widths)
        for c in range(1 << total):
            rows = []
            shift = 0
            for p, slots, w in zip(pivots, free_slots, widths):
                bits = 1 << p
                chunk = c >> shift & ((1 << w) - 1)
                for idx, b in enumerate(slots):
                    if chunk >> idx & 1:
                        bits |= 1 << b
                rows.append(GFVector(n, bits))
                shift += w
            yield Subspace(n, tuple(rows))


@dataclass(frozen=True)
class LinearMap:
    """A linear map {0,1}^domain_dim -> {0,1}^n given by basis images."""

    domain_dim: int
    images: tuple[GFVector, ...]

    def __post_init__(self):
        if len(self.images) != self.domain_dim:
            raise InvalidInputError(
                f"need {self.domain_dim} images, got {len(self.images)}")
        dims = {im.dim for im in self.images}
        if len(dims) > 1:
            raise DimensionMismatchError(f"mixed image dimensions {sorted(dims)}")

    @property
    def codomain_dim(self) -> int:
        return self.images[0].dim

    def apply(self, x: GFVector) -> GFVector:
        if x.dim != self.domain_dim:
            raise DimensionMismatchError(f"dim {x.dim} vs domain {self.domain_dim}")
        bits = 0
        for j in range(self.domain_dim):
            if x.bits >> j & 1:
                bits ^= self.images[j].bits
        return GFVector(self.codomain_dim, bits)


def apply_map(m: LinearMap, x: GFVector) -> GFVector:
    return m.apply(x)


def identity_map(n: int) -> LinearMap:
    return LinearMap(n, tuple(unit_vector(n, j) for j in range(n)))


def random_nonsingular_map(n: int, rng) -> LinearMap:
    """A uniformly random invertible map on {0,1}^n (rejection sampling)."""
    while True:
        images = tuple(GFVector(n, int(rng.integers(0, 1 << n))) for _ in range(n))
        if rank_and_basis(images, dim=n)[0] == n:
            return LinearMap(n, images)


def gaussian_binomial(n: int, d: int) -> int:
    """Number of d-dimensional subspaces of {0,1}^n (product formula)."""
    if not 0 <= d <= n:
        return 0
    num = den = 1
    for i in range(d):
        num *= (1 << n) - (1 << i)
        den *= (1 << d) - (1 << i)
    return num // den
