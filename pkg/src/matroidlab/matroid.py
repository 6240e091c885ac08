"""Binary matroids and their constructions: graphic and cographic
matroids, circuits and cycle space, partition complexity, odd girth,
matroid homomorphisms, and canonical indicator functions.

A binary matroid here is a finite multiset of GF(2) vectors; a subset of
ground elements is dependent exactly when some nonempty sub-subset XORs
to zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .boolfn import BooleanFunction
from .errors import BudgetExceededError, DimensionMismatchError, InvalidInputError
from .gf2 import GFVector, LinearMap, Subspace, rank_and_basis

CIRCUIT_MAX_K = 20
GENERAL_COMPLEXITY_MAX_K = 12
HOM_NODE_BUDGET = 10 ** 8


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices 0..V-1."""

    V: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.V < 1:
            raise InvalidInputError("graph needs at least one vertex")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise InvalidInputError(f"self-loop at vertex {u}")
            if not (0 <= u < self.V and 0 <= v < self.V):
                raise InvalidInputError(f"edge ({u},{v}) out of range")
            if u > v:
                raise InvalidInputError(f"edge ({u},{v}) not normalized u<v")
            if (u, v) in seen:
                raise InvalidInputError(f"duplicate edge ({u},{v})")
            seen.add((u, v))
        if tuple(sorted(self.edges)) != self.edges:
            raise InvalidInputError("edge list must be sorted")

    @classmethod
    def from_edges(cls, V: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls(V, tuple(sorted(tuple(sorted(e)) for e in edges)))

    def is_connected(self) -> bool:
        return _connected_with_edges(self.V, self.edges)

    def without_edge(self, e: tuple[int, int]) -> "Graph":
        e = tuple(sorted(e))
        if e not in self.edges:
            raise InvalidInputError(f"edge {e} not in graph")
        return Graph(self.V, tuple(x for x in self.edges if x != e))


def _connected_with_edges(V: int, edges: Sequence[tuple[int, int]]) -> bool:
    parent = list(range(V))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    parts = V
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            parts -= 1
    return parts == 1


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise InvalidInputError("a cycle needs at least 3 vertices")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(vertices: int) -> Graph:
    return Graph.from_edges(vertices, [(i, i + 1) for i in range(vertices - 1)])


def complete_graph(a: int) -> Graph:
    return Graph.from_edges(a, [(i, j) for i in range(a) for j in range(i + 1, a)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def named_graph(name: str) -> Graph:
    """Corpus lookup: c<k>, k<a>, k<a>,<b> (bipartite), k5e, petersen,
    path<v>."""
    name = name.strip().lower()
    if name == "petersen":
        return petersen_graph()
    if name == "k5e":
        return complete_graph(5).without_edge((3, 4))
    if name.startswith("path"):
        return path_graph(int(name[4:]))
    if name.startswith("c"):
        return cycle_graph(int(name[1:]))
    if name.startswith("k") and "," in name:
        a, b = name[1:].split(",")
        return complete_bipartite_graph(int(a), int(b))
    if name.startswith("k"):
        return complete_graph(int(name[1:]))
    raise InvalidInputError(f"unknown graph name {name!r}")


class BinaryMatroid:
    """k labeled GF(2) vectors in ambient dimension m (a multiset)."""

    def __init__(self, vectors: Sequence[GFVector], label: str | None = None):
        vectors = tuple(vectors)
        if not vectors:
            raise InvalidInputError("a matroid needs at least one element")
        m = vectors[0].dim
        for v in vectors:
            if v.dim != m:
                raise DimensionMismatchError(f"mixed dimensions {m} and {v.dim}")
        self.vectors = vectors
        self.k = len(vectors)
        self.m = m
        self.label = label

    @cached_property
    def ints(self) -> tuple[int, ...]:
        return tuple(v.bits for v in self.vectors)

    @cached_property
    def span_basis(self) -> Subspace:
        return rank_and_basis(self.vectors)[1]

    @property
    def rank(self) -> int:
        return self.span_basis.dim

    @cached_property
    def span_coords(self) -> tuple[int, ...]:
        """Each ground vector, expressed over span_basis.basis as a mask
        (bit j set = basis[j] participates)."""
        basis = self.span_basis.basis
        pivot_to_index = {b.bits.bit_length() - 1: j for j, b in enumerate(basis)}
        coords = []
        for v in self.vectors:
            w, mask = v.bits, 0
            while w:
                p = w.bit_length() - 1
                j = pivot_to_index[p]
                w ^= basis[j].bits
                mask |= 1 << j
            coords.append(mask)
        return tuple(coords)

    @cached_property
    def kernel_words(self) -> tuple[int, ...]:
        """Canonical basis of the dependency code {T : XOR_{i in T} v_i = 0},
        each word a bitmask over ground elements; one word per dependent
        insertion, so words are ordered by their top element."""
        basis: dict[int, tuple[int, int]] = {}
        words = []
        for j, v in enumerate(self.ints):
            w, combo = v, 1 << j
            while w:
                p = w.bit_length() - 1
                if p not in basis:
                    basis[p] = (w, combo)
                    break
                bw, bc = basis[p]
                w ^= bw
                combo ^= bc
            if w == 0:
                words.append(combo)
        return tuple(words)

    def transformed(self, t: LinearMap, label: str | None = None) -> "BinaryMatroid":
        return BinaryMatroid(tuple(t.apply(v) for v in self.vectors), label=label)

    def __eq__(self, other):
        return isinstance(other, BinaryMatroid) and self.vectors == other.vectors

    def __hash__(self):
        return hash(self.vectors)

    def __repr__(self):
        name = self.label or f"k={self.k},m={self.m}"
        return f"BinaryMatroid({name})"


def graphic_from_graph(g: Graph) -> BinaryMatroid:
    """One element per edge; the vector of edge (u,v) is e_u + e_v, so
    dependent edge sets are exactly those containing a cycle."""
    if not g.edges:
        raise InvalidInputError("graphic matroid needs at least one edge")
    vectors = [GFVector(g.V, (1 << u) | (1 << v)) for u, v in g.edges]
    return BinaryMatroid(vectors, label=f"graphic(V={g.V},E={len(g.edges)})")


def _spanning_tree_and_chords(g: Graph) -> tuple[list[int], list[int]]:
    parent = list(range(g.V))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    tree, chords = [], []
    for idx, (u, v) in enumerate(g.edges):
        ru, rv = find(u), find(v)
        if ru == rv:
            chords.append(idx)
        else:
            parent[ru] = rv
            tree.append(idx)
    return tree, chords


def _fundamental_cycles(g: Graph) -> list[int]:
    """One edge-set bitmask per chord: the chord plus its tree path."""
    tree, chords = _spanning_tree_and_chords(g)
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in range(g.V)}
    for idx in tree:
        u, v = g.edges[idx]
        adj[u].append((v, idx))
        adj[v].append((u, idx))

    def tree_path(src: int, dst: int) -> int:
        prev: dict[int, tuple[int, int]] = {src: (-1, -1)}
        stack = [src]
        while stack:
            x = stack.pop()
            if x == dst:
                break
            for y, idx in adj[x]:
                if y not in prev:
                    prev[y] = (x, idx)
                    stack.append(y)
        mask, x = 0, dst
        while x != src:
            x, idx = prev[x]
            mask |= 1 << idx
        return mask

    cycles = []
    for idx in chords:
        u, v = g.edges[idx]
        cycles.append(tree_path(u, v) | (1 << idx))
    return cycles


def cographic_from_graph(g: Graph) -> BinaryMatroid:
    """Column matroid of a cycle-space basis matrix of G: dependent edge
    sets are exactly those containing a bond. Rank is E - V + 1."""
    if not g.is_connected():
        raise InvalidInputError("cographic construction requires a connected graph")
    if not g.edges:
        raise InvalidInputError("cographic matroid needs at least one edge")
    rows = _fundamental_cycles(g)
    m = max(len(rows), 1)
    vectors = []
    for j in range(len(g.edges)):
        bits = 0
        for i, row in enumerate(rows):
            if row >> j & 1:
                bits |= 1 << i
        vectors.append(GFVector(m, bits))
    return BinaryMatroid(vectors, label=f"cographic(V={g.V},E={len(g.edges)})")


def _all_codewords(words: Sequence[int]) -> list[int]:
    """All 2^len(words) XOR combinations (the full dependency code)."""
    out = [0]
    for w in words:
        out += [x ^ w for x in out]
    return out


def circuits(m: BinaryMatroid) -> list[tuple[int, ...]]:
    """All minimal dependent subsets, as sorted index tuples in
    lexicographic order."""
    if m.k > CIRCUIT_MAX_K:
        raise BudgetExceededError(f"k={m.k} exceeds circuit enumeration cap {CIRCUIT_MAX_K}")
    code = [w for w in _all_codewords(m.kernel_words) if w]
    code.sort(key=lambda w: (w.bit_count(), w))
    minimal: list[int] = []
    for w in code:
        if not any(c & w == c for c in minimal):
            minimal.append(w)
    subsets = [tuple(j for j in range(m.k) if w >> j & 1) for w in minimal]
    return sorted(subsets)


def cycle_space_basis(m: BinaryMatroid) -> list[tuple[int, ...]]:
    """k - rank subsets forming a basis of the dependency code."""
    return [tuple(j for j in range(m.k) if w >> j & 1) for w in m.kernel_words]


def odd_girth(m: BinaryMatroid) -> Optional[int]:
    """Size of the smallest odd-cardinality dependent set, or None."""
    if m.k > CIRCUIT_MAX_K:
        raise BudgetExceededError(f"k={m.k} exceeds enumeration cap {CIRCUIT_MAX_K}")
    best = None
    for w in _all_codewords(m.kernel_words):
        c = w.bit_count()
        if c & 1 and (best is None or c < best):
            best = c
    return best


def _circuit_masks(m: BinaryMatroid) -> list[int]:
    masks = []
    for subset in circuits(m):
        w = 0
        for j in subset:
            w |= 1 << j
        masks.append(w)
    return masks


def _hyperedges_at(m: BinaryMatroid, i: int) -> list[int]:
    """Supports C \\ {i} of circuits C through i, as masks over the other
    elements. v_i lies in span(S) exactly when some hyperedge is a
    subset of S, so a partition class avoids v_i in its span iff it
    contains no hyperedge."""
    return [c ^ (1 << i) for c in _circuit_masks(m) if c >> i & 1]


def complexity_at(m: BinaryMatroid, i: int, cap: int) -> Optional[int]:
    """Minimum c <= cap such that the other elements split into c+1
    classes none of whose spans contains v_i; None when cap is exceeded
    (or no finite c exists, e.g. v_i = 0 or v_i has a parallel copy)."""
    if not 0 <= i < m.k:
        raise InvalidInputError(f"element index {i} out of range")
    edges = _hyperedges_at(m, i)
    if not edges:
        return 0
    if any(e == 0 for e in edges):
        return None
    for c in range(1, cap + 1):
        if c == 1:
            ok = _two_partition_exists(m.k, i, edges)
        else:
            ok = _coloring_exists(edges, c + 1)
        if ok:
            return c
    return None


def _two_partition_exists(k: int, i: int, edges: list[int]) -> bool:
    """Enumerate 2-partitions of the elements other than i as bitmasks;
    a partition works when no hyperedge is monochromatic. The lowest
    remaining element is pinned to side A (partitions are unordered)."""
    rest = [j for j in range(k) if j != i]
    free = rest[1:]
    for a in range(1 << len(free)):
        mask = 1 << rest[0]
        for idx, j in enumerate(free):
            if a >> idx & 1:
                mask |= 1 << j
        if all(0 < (e & mask) < e for e in edges):
            return True
    return False


def _coloring_exists(edges: list[int], colors: int) -> bool:
    """Proper hypergraph coloring (no monochromatic hyperedge) by DFS in
    restricted-growth order."""
    elems = sorted({j for e in edges for j in _mask_bits(e)})
    pos = {j: idx for idx, j in enumerate(elems)}
    packed = []
    for e in edges:
        pe = 0
        for j in _mask_bits(e):
            pe |= 1 << pos[j]
        packed.append(pe)
    n = len(elems)
    assigned = [0] * n
    class_masks = [0] * colors

    def mono(full_mask: int) -> bool:
        for cm in class_masks:
            if full_mask & cm == full_mask:
                return True
        return False

    def rec(depth: int, used: int) -> bool:
        if depth == n:
            return True
        limit = min(colors, used + 1)
        bit = 1 << depth
        for color in range(limit):
            class_masks[color] |= bit
            bad = False
            for pe in packed:
                if pe >> depth & 1 and pe & ~(_below(depth + 1)) == 0 and mono(pe):
                    bad = True
                    break
            if not bad and rec(depth + 1, max(used, color + 1)):
                return True
            class_masks[color] ^= bit
        return False

    def _below(d: int) -> int:
        return (1 << d) - 1

    return rec(0, 0)


def _mask_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def complexity(m: BinaryMatroid, cap: int = 1) -> Optional[int]:
    """The matroid's partition complexity: max over elements of the
    per-element minimum; None when any element exceeds cap."""
    if cap >= 2 and m.k > GENERAL_COMPLEXITY_MAX_K:
        raise BudgetExceededError(
            f"k={m.k} exceeds general complexity cap {GENERAL_COMPLEXITY_MAX_K}")
    worst = 0
    for i in range(m.k):
        ci = complexity_at(m, i, cap)
        if ci is None:
            return None
        worst = max(worst, ci)
    return worst


def has_complexity_one(m: BinaryMatroid) -> bool:
    """The complexity-1 check: every element admits a 2-partition of the
    rest with neither span containing it (i.e. complexity <= 1)."""
    return complexity(m, cap=1) is not None


def cog_partition_criterion(g: Graph, e: tuple[int, int]) -> bool:
    """True iff the edges other than e split into two parts that each
    span a connected subgraph on all of V(G). Exhaustive over partitions
    with edge-count and symmetry pruning."""
    if not g.is_connected():
        raise InvalidInputError("criterion defined for connected graphs")
    e = tuple(sorted(e))
    if e not in g.edges:
        raise InvalidInputError(f"edge {e} not in graph")
    rest = [x for x in g.edges if x != e]
    need = g.V - 1
    if len(rest) < 2 * need:
        return False
    free = rest[1:]
    nfree = len(free)
    for a in range(1 << nfree):
        side_a = [rest[0]]
        side_b = []
        for idx in range(nfree):
            (side_a if a >> idx & 1 else side_b).append(free[idx])
        if len(side_a) < need or len(side_b) < need:
            continue
        if _connected_with_edges(g.V, side_a) and _connected_with_edges(g.V, side_b):
            return True
    return False


def cog_endpoint_partition_criterion(g: Graph, e: tuple[int, int]) -> bool:
    """True iff E \\ {e} splits into A, B that EACH connect the endpoints
    of e. This, not the global-connectivity criterion above, is exactly
    complexity-1 of M*(G) at e: v_e lies in span(A) iff e bridges
    B + e, i.e. iff B fails to join e's endpoints."""
    if not g.is_connected():
        raise InvalidInputError("criterion defined for connected graphs")
    e = tuple(sorted(e))
    if e not in g.edges:
        raise InvalidInputError(f"edge {e} not in graph")
    u, v = e
    rest = [x for x in g.edges if x != e]
    if not rest:
        return False
    nfree = len(rest) - 1
    for a in range(1 << nfree):
        side_a = [rest[0]]
        side_b = []
        for idx in range(nfree):
            (side_a if a >> idx & 1 else side_b).append(rest[idx + 1])
        if _joins(g.V, side_a, u, v) and _joins(g.V, side_b, u, v):
            return True
    return False


def _joins(V: int, edges: Sequence[tuple[int, int]], u: int, v: int) -> bool:
    parent = list(range(V))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return find(u) == find(v)


@dataclass(frozen=True)
class Homomorphism:
    """A ground-set map (element index of the source -> element index of
    the target) carrying every dependency to a dependency."""

    assignment: tuple[int, ...]


def verify_homomorphism(phi: Homomorphism, source: BinaryMatroid,
                        target: BinaryMatroid) -> bool:
    if len(phi.assignment) != source.k:
        return False
    tgt = target.ints
    for word in source.kernel_words:
        acc = 0
        for j in _mask_bits(word):
            acc ^= tgt[phi.assignment[j]]
        if acc:
            return False
    return True


def find_homomorphism(source: BinaryMatroid, target: BinaryMatroid,
                      node_budget: int = HOM_NODE_BUDGET) -> Optional[Homomorphism]:
    """Exhaustive DFS over ground-set maps from source to target, pruned
    by checking each dependency-code basis word as soon as its last
    element is assigned. Returns a verified witness or None."""
    words_by_top: dict[int, list[int]] = {}
    for w in source.kernel_words:
        words_by_top.setdefault(w.bit_length() - 1, []).append(w)
    tgt = target.ints
    k = source.k
    assignment = [0] * k
    nodes = 0

    def rec(depth: int) -> bool:
        nonlocal nodes
        if depth == k:
            return True
        for choice in range(target.k):
            nodes += 1
            if nodes > node_budget:
                raise BudgetExceededError(
                    f"homomorphism search exceeded {node_budget} nodes")
            assignment[depth] = choice
            ok = True
            for w in words_by_top.get(depth, ()):
                acc = 0
                for j in _mask_bits(w):
                    acc ^= tgt[assignment[j]]
                if acc:
                    ok = False
                    break
            if ok and rec(depth + 1):
                return True
        return False

    if rec(0):
        phi = Homomorphism(tuple(assignment))
        assert verify_homomorphism(phi, source, target)
        return phi
    return None


def canonical_function(m: BinaryMatroid, n: int) -> BooleanFunction:
    """The indicator of {v_1,...,v_k} x {0,1}^(n-m): 1 at (x,y) iff the
    low-m part x is a ground vector."""
    if n < m.m:
        raise InvalidInputError(f"n={n} must be at least ambient dimension {m.m}")
    if any(v == 0 for v in m.ints):
        raise InvalidInputError("canonical function requires nonzero ground vectors")
    distinct = sorted(set(m.ints))
    ones = [v | (y << m.m) for y in range(1 << (n - m.m)) for v in distinct]
    return BooleanFunction.from_ones(n, ones)
