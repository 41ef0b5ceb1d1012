"""Small undirected simple graphs stored as per-vertex neighbour bitsets.

Everything downstream (polynomials, the hard-core model, the verifier) works
on :class:`Graph`.  Vertices are ``0..n-1`` and ``adj[v]`` is an ``int`` whose
bit ``u`` is set iff ``uv`` is an edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Iterator, Sequence

MAX_VERTICES = 64
MAX_ENUMERATION_ORDER = 7


class GraphError(ValueError):
    pass


class Graph6Error(GraphError):
    """Malformed graph6 input; ``offset`` is the index of the bad byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has neighbours beyond n-1")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            u = row
            while u:
                low = u & -u
                if not self.adj[low.bit_length() - 1] >> v & 1:
                    raise GraphError("adjacency is not symmetric")
                u ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}{v} out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n)
                if self.adj[u] >> v & 1]

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def closed_neighborhood(self, v: int) -> int:
        return self.adj[v] | 1 << v

    def is_independent(self, mask: int) -> bool:
        m = mask
        while m:
            low = m & -m
            if self.adj[low.bit_length() - 1] & mask:
                return False
            m ^= low
        return True

    def is_clique(self, mask: int) -> bool:
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            if (mask & ~low) & ~self.adj[v]:
                return False
            m ^= low
        return True

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph, relabelled ``0..len(vertices)-1`` in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            row = 0
            for u in bits(self.adj[v]):
                if u in index:
                    row |= 1 << index[u]
            adj.append(row)
        return Graph(len(vertices), tuple(adj))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        adj = [0] * self.n
        for v, row in enumerate(self.adj):
            new = 0
            for u in bits(row):
                new |= 1 << perm[u]
            adj[perm[v]] = new
        return Graph(self.n, tuple(adj))

    def __repr__(self):
        return f"Graph(n={self.n}, graph6={emit_graph6(self)!r})"


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# -- graph6 -----------------------------------------------------------------

def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def emit_graph6(g: Graph) -> str:
    nbits = g.n * (g.n - 1) // 2
    value = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            value = value << 1 | (row >> i & 1)
    pad = -nbits % 6
    value <<= pad
    chunks = (nbits + pad) // 6
    body = "".join(chr(((value >> (6 * (chunks - 1 - c))) & 63) + 63)
                   for c in range(chunks))
    return _encode_n(g.n) + body


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (short form, no ``>>graph6<<`` header)."""
    data = text.rstrip("\r\n")
    if not data:
        raise Graph6Error("empty graph6 string", 0)
    for i, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)!r} outside 63..126", i)
    if data[0] == "~":
        if len(data) < 4:
            raise Graph6Error("truncated vertex count", len(data))
        if data[1] == "~":
            raise Graph6Error("8-byte vertex counts are not supported", 1)
        n = 0
        for ch in data[1:4]:
            n = n << 6 | (ord(ch) - 63)
        pos = 4
    else:
        n = ord(data[0]) - 63
        pos = 1
    if n > MAX_VERTICES:
        raise Graph6Error(f"vertex count {n} exceeds {MAX_VERTICES}", 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise Graph6Error(f"expected {need} data bytes, got {len(body)}",
                          len(data))
    if len(body) > need:
        raise Graph6Error("trailing garbage", pos + need)
    value = 0
    for ch in body:
        value = value << 6 | (ord(ch) - 63)
    pad = need * 6 - nbits
    if value & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", len(data) - 1)
    value >>= pad
    adj = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(adj))


def read_graph6_file(path) -> list[Graph]:
    graphs = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            if line.startswith(">>graph6<<"):
                raise Graph6Error(f"{path}:{lineno}: headers are not supported", 0)
            try:
                graphs.append(parse_graph6(line))
            except Graph6Error as exc:
                raise Graph6Error(f"{path}:{lineno}: {exc}", exc.offset) from None
    return graphs


def write_graph6_file(path, graphs: Iterable[Graph]) -> None:
    with open(path, "w") as fh:
        for g in graphs:
            fh.write(emit_graph6(g) + "\n")


# -- constructions ----------------------------------------------------------

def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    if g.n + h.n > MAX_VERTICES:
        raise GraphError(f"combined order {g.n + h.n} exceeds {MAX_VERTICES}")
    return Graph(g.n + h.n, g.adj + tuple(row << g.n for row in h.adj))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides; g's vertices first."""
    u = disjoint_union(g, h)
    left = g.full_mask
    right = h.full_mask << g.n
    adj = [row | right if v < g.n else row | left for v, row in enumerate(u.adj)]
    return Graph(u.n, tuple(adj))


# -- independence / cliques -------------------------------------------------

def independence_number(g: Graph) -> int:
    """Maximum independent set size by branch and bound on bitsets."""
    adj = g.adj
    best = 0

    def search(cand: int, size: int):
        nonlocal best
        while True:
            if not cand:
                if size > best:
                    best = size
                return
            if size + cand.bit_count() <= best:
                return
            # vertices of degree <= 1 inside cand can always be taken
            picked = False
            m = cand
            while m:
                low = m & -m
                v = low.bit_length() - 1
                if (adj[v] & cand).bit_count() <= 1:
                    cand &= ~(adj[v] | low)
                    size += 1
                    picked = True
                    break
                m ^= low
            if not picked:
                break
        v = max(bits(cand), key=lambda x: (adj[x] & cand).bit_count())
        search(cand & ~(adj[v] | 1 << v), size + 1)
        search(cand & ~(1 << v), size)

    search(g.full_mask, 0)
    return best


def clique_number(g: Graph) -> int:
    return independence_number(complement(g))


def independent_sets(g: Graph) -> Iterator[int]:
    """Every independent set as a bitmask (including the empty set)."""
    adj = g.adj

    def rec(v: int, chosen: int, blocked: int):
        if v == g.n:
            yield chosen
            return
        yield from rec(v + 1, chosen, blocked)
        if not blocked >> v & 1:
            yield from rec(v + 1, chosen | 1 << v, blocked | adj[v])

    yield from rec(0, 0, 0)


# -- canonical labelling ----------------------------------------------------

def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    Splits are ordered by neighbour counts, so the result is label-invariant.
    """
    cells = [c[:] for c in cells]
    changed = True
    while changed:
        changed = False
        for si in range(len(cells)):
            if si >= len(cells):
                break
            smask = 0
            for v in cells[si]:
                smask |= 1 << v
            new_cells = []
            for cell in cells:
                if len(cell) == 1:
                    new_cells.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((adj[v] & smask).bit_count(), []).append(v)
                if len(groups) == 1:
                    new_cells.append(cell)
                else:
                    changed = True
                    for key in sorted(groups):
                        new_cells.append(groups[key])
            cells = new_cells
    return cells


def _leaf_code(adj: Sequence[int], order: Sequence[int]) -> int:
    """Upper-triangle bits of the relabelled graph, in graph6 column order."""
    n = len(order)
    value = 0
    for j in range(1, n):
        row = adj[order[j]]
        for i in range(j):
            value = value << 1 | (row >> order[i] & 1)
    return value


def _canonical_order(g: Graph) -> list[int]:
    """Vertex order whose relabelling is the canonical form of ``g``.

    Individualisation-refinement search taking the minimum leaf code.  Twins
    and automorphisms discovered at leaves prune sibling branches.
    """
    n = g.n
    adj = g.adj
    if n <= 1:
        return list(range(n))
    degree_cells: dict[int, list[int]] = {}
    for v in range(n):
        degree_cells.setdefault(adj[v].bit_count(), []).append(v)
    root = _refine(adj, [degree_cells[d] for d in sorted(degree_cells)])

    best_code = None
    best_order: list[int] = []
    generators: list[list[int]] = []

    def orbit_reps(cell: list[int], prefix: list[int]) -> list[int]:
        parent = {v: v for v in cell}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in generators:
            if all(gamma[p] == p for p in prefix):
                for v in cell:
                    w = gamma[v]
                    if w in parent:
                        a, b = find(v), find(w)
                        if a != b:
                            parent[max(a, b)] = min(a, b)
        # twins (same neighbourhood up to each other) are interchangeable
        for a, b in combinations(cell, 2):
            if adj[a] & ~(1 << b) == adj[b] & ~(1 << a):
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
        return [v for v in cell if find(v) == v]

    def search(cells: list[list[int]], prefix: list[int]):
        nonlocal best_code, best_order
        if len(cells) == n:
            order = [c[0] for c in cells]
            code = _leaf_code(adj, order)
            if best_code is None or code < best_code:
                best_code, best_order = code, order
            elif code == best_code:
                # order -> best_order maps one labelling onto the other
                gamma = [0] * n
                for a, b in zip(order, best_order):
                    gamma[a] = b
                generators.append(gamma)
            return
        target = next(i for i, c in enumerate(cells) if len(c) > 1)
        for v in orbit_reps(cells[target], prefix):
            split = (cells[:target] + [[v], [w for w in cells[target] if w != v]]
                     + cells[target + 1:])
            search(_refine(adj, split), prefix + [v])

    search(root, [])
    return best_order


def canonical_form(g: Graph) -> Graph:
    order = _canonical_order(g)
    perm = [0] * g.n
    for new, old in enumerate(order):
        perm[old] = new
    return g.relabel(perm)


def canonical_label(g: Graph) -> bytes:
    """Isomorphism certificate: graph6 bytes of the canonical form."""
    return emit_graph6(canonical_form(g)).encode("ascii")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.num_edges() == h.num_edges() and \
        canonical_label(g) == canonical_label(h)


# -- enumeration ------------------------------------------------------------

def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2^C(n,2) labelled graphs on n vertices (small n only)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        for k, (u, v) in enumerate(pairs):
            if mask >> k & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        yield Graph(n, tuple(adj))


_CLASS_CACHE: dict[int, tuple[Graph, ...]] = {}


def _classes(n: int) -> tuple[Graph, ...]:
    # Every n-vertex graph is an (n-1)-vertex graph plus one vertex, so
    # augmenting each smaller class by every neighbourhood reaches all classes.
    if n in _CLASS_CACHE:
        return _CLASS_CACHE[n]
    if n <= 1:
        found = (Graph.empty(n),)
    else:
        seen: dict[bytes, Graph] = {}
        for base in _classes(n - 1):
            for nbrs in range(1 << (n - 1)):
                adj = list(base.adj)
                for u in bits(nbrs):
                    adj[u] |= 1 << (n - 1)
                adj.append(nbrs)
                cf = canonical_form(Graph(n, tuple(adj)))
                seen.setdefault(emit_graph6(cf).encode("ascii"), cf)
        found = tuple(seen[k] for k in sorted(seen))
    _CLASS_CACHE[n] = found
    return found


def enumerate_graphs(n: int, filter: Callable[[Graph], bool] | None = None,
                     ) -> Iterator[Graph]:
    """One canonical representative per isomorphism class, sorted by label.

    Internal enumeration stops at ``MAX_ENUMERATION_ORDER`` vertices; larger
    classes must come from graph6 files.
    """
    if n < 0:
        raise GraphError("n must be non-negative")
    if n > MAX_ENUMERATION_ORDER:
        raise GraphError(f"internal enumeration is capped at n={MAX_ENUMERATION_ORDER}; "
                         "supply a graph6 file for larger orders")
    for g in _classes(n):
        if filter is None or filter(g):
            yield g


def dedup(graphs: Iterable[Graph]) -> list[Graph]:
    """Canonical representatives of the distinct classes, sorted by label."""
    seen: dict[bytes, Graph] = {}
    for g in graphs:
        cf = canonical_form(g)
        seen.setdefault(emit_graph6(cf).encode("ascii"), cf)
    return [seen[k] for k in sorted(seen)]


def regular_graphs(n: int, d: int) -> list[Graph]:
    """All d-regular graphs on n vertices up to isomorphism.

    Works beyond the general enumeration cap because the degree constraint
    prunes the search; vertex 0 is fixed to neighbours 1..d without loss.
    """
    if d < 0 or d >= max(n, 1) or (n * d) % 2:
        return []
    if d == 0:
        return [Graph.empty(n)]
    adj = [0] * n
    deg = [0] * n
    for u in range(1, d + 1):
        adj[0] |= 1 << u
        adj[u] |= 1
        deg[u] += 1
    deg[0] = d
    found: dict[bytes, Graph] = {}

    def fill(v: int, start: int):
        if v == n:
            g = Graph(n, tuple(adj))
            cf = canonical_form(g)
            found.setdefault(emit_graph6(cf).encode("ascii"), cf)
            return
        if deg[v] == d:
            fill(v + 1, v + 2)
            return
        for u in range(start, n):
            if deg[u] < d:
                adj[v] |= 1 << u
                adj[u] |= 1 << v
                deg[v] += 1
                deg[u] += 1
                fill(v, u + 1)
                deg[v] -= 1
                deg[u] -= 1
                adj[v] &= ~(1 << u)
                adj[u] &= ~(1 << v)

    fill(1, 2)
    return [found[k] for k in sorted(found)]


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
