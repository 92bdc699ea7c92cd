"""Simple undirected graphs on labeled vertices, text codecs, and
isomorph-free enumeration of small connected graphs.

Vertices are stable 0-based indices; every report in this package refers to
them. Adjacency lives in per-vertex bitmasks, which keeps distance and
connectivity queries cheap at the sizes we target (n <= 62 for parsing,
n <= 7 for enumeration).
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import FormatError, UsageError

# graph6 keeps the vertex count in a single byte here; longer headers are
# out of scope and rejected.
GRAPH6_MAX_VERTICES = 62

ENUMERATION_MAX_VERTICES = 7


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "adj_masks", "sorted_neighbors", "_dist_cache")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 1:
            raise UsageError(f"graph needs at least one vertex, got n={n}")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise UsageError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise UsageError(f"self-loop ({u}, {v}) not allowed")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.n = n
        self.adj_masks: tuple[int, ...] = tuple(masks)
        self.sorted_neighbors: tuple[tuple[int, ...], ...] = tuple(
            tuple(v for v in range(n) if m >> v & 1) for m in masks
        )
        self._dist_cache: dict[int, tuple[int | None, ...]] = {}

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise UsageError(f"vertex {v} out of range for n={self.n}")

    def adjacent(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj_masks[u] >> v & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        """All vertices adjacent to v."""
        self._check_vertex(v)
        return frozenset(self.sorted_neighbors[v])

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.sorted_neighbors[v])

    def min_degree(self) -> int:
        return min(len(nbrs) for nbrs in self.sorted_neighbors)

    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (u, v)
            for u in range(self.n)
            for v in self.sorted_neighbors[u]
            if u < v
        )

    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.sorted_neighbors) // 2

    def is_connected(self) -> bool:
        """True when every vertex is reachable from vertex 0; K1 counts as connected."""
        seen = 1
        frontier = 1
        while frontier:
            reach = 0
            rest = frontier
            while rest:
                low = rest & -rest
                reach |= self.adj_masks[low.bit_length() - 1]
                rest ^= low
            frontier = reach & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    def distances_from(self, v: int) -> tuple[int | None, ...]:
        """Breadth-first edge distances from v; None for vertices in other components."""
        self._check_vertex(v)
        cached = self._dist_cache.get(v)
        if cached is not None:
            return cached
        dist: list[int | None] = [None] * self.n
        dist[v] = 0
        seen = 1 << v
        frontier = seen
        d = 0
        while frontier:
            reach = 0
            rest = frontier
            while rest:
                low = rest & -rest
                reach |= self.adj_masks[low.bit_length() - 1]
                rest ^= low
            frontier = reach & ~seen
            seen |= frontier
            d += 1
            rest = frontier
            while rest:
                low = rest & -rest
                dist[low.bit_length() - 1] = d
                rest ^= low
        result = tuple(dist)
        self._dist_cache[v] = result
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj_masks == other.adj_masks

    def __hash__(self) -> int:
        return hash((self.n, self.adj_masks))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()!r})"


# ---------------------------------------------------------------------------
# standard constructions


def complete(n: int) -> Graph:
    if n < 1:
        raise UsageError(f"complete graph needs n >= 1, got {n}")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def path(n: int) -> Graph:
    if n < 1:
        raise UsageError(f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise UsageError(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """Star centered at vertex 0 with n-1 leaves."""
    if n < 2:
        raise UsageError(f"star needs n >= 2, got {n}")
    return Graph(n, [(0, i) for i in range(1, n)])


FAMILIES = {"complete": complete, "path": path, "cycle": cycle, "star": star}


# ---------------------------------------------------------------------------
# graph6 codec
#
# Layout: one header byte 63+n (n <= 62 only), then the upper-triangle
# adjacency bits x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian six
# bits to a byte, each data byte offset by 63, final byte zero-padded.
# Parse errors report 0-based byte offsets into the input string.


def encode_graph6(g: Graph) -> str:
    """Canonical minimal-length graph6 encoding of g."""
    if g.n > GRAPH6_MAX_VERTICES:
        raise UsageError(
            f"graph6 here covers n <= {GRAPH6_MAX_VERTICES}, got n={g.n}"
        )
    out = [chr(63 + g.n)]
    buf = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            buf = buf << 1 | (g.adj_masks[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + buf))
                buf = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (buf << (6 - nbits))))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Parse a graph6 string, rejecting anything that is not bit-exact."""
    if not text:
        raise FormatError("empty graph6 string")
    for offset, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise FormatError(
                f"byte {offset}: {ch!r} outside the printable graph6 range 63..126"
            )
    header = ord(text[0]) - 63
    if header == 63:
        raise FormatError("byte 0: multi-byte vertex count headers not supported")
    n = header
    if n < 1:
        raise FormatError("byte 0: vertex count must be at least 1")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = len(text) - 1
    if body < need:
        raise FormatError(
            f"byte {len(text)}: truncated, expected {need} data bytes, found {body}"
        )
    if body > need:
        raise FormatError(f"byte {1 + need}: trailing garbage after {need} data bytes")
    edges = []
    bit = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(text[1 + bit // 6]) - 63
            if byte >> (5 - bit % 6) & 1:
                edges.append((i, j))
            bit += 1
    if nbits % 6:
        pad = ord(text[1 + nbits // 6]) - 63 & ((1 << (6 - nbits % 6)) - 1)
        if pad:
            raise FormatError(
                f"byte {1 + nbits // 6}: nonzero padding bits in final data byte"
            )
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# edge-list text format: first line "n <count>", then one "u v" line per edge


def parse_edge_list(text: str) -> Graph:
    numbered = [
        (lineno, line.strip())
        for lineno, line in enumerate(text.splitlines(), start=1)
        if line.strip()
    ]
    if not numbered:
        raise FormatError("line 1: expected header 'n <count>'")
    lineno, header = numbered[0]
    tokens = header.split()
    if len(tokens) != 2 or tokens[0] != "n" or not tokens[1].isdigit():
        raise FormatError(f"line {lineno}: expected header 'n <count>', got {header!r}")
    n = int(tokens[1])
    if n < 1:
        raise FormatError(f"line {lineno}: vertex count must be at least 1")
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, line in numbered[1:]:
        tokens = line.split()
        if len(tokens) != 2:
            raise FormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer vertex in {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"line {lineno}: edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise FormatError(f"line {lineno}: self-loop ({u}, {v}) rejected")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"line {lineno}: duplicate edge ({u}, {v})")
        seen.add(key)
        edges.append(key)
    return Graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# isomorph-free enumeration of small graphs
#
# Representatives are generated by vertex augmentation: every class on n
# vertices arises from some class on n-1 vertices plus one new vertex with
# some neighborhood, so augmenting every (class, neighborhood) pair and
# deduplicating by canonical form is complete. Canonical form is the minimum,
# over all vertex orderings, of the packed upper-triangle bit string in
# graph6 bit order; the minimization walks every ordering except branches
# whose bit prefix already exceeds the best known, which cannot win.


def _canonical_bits(n: int, adj_masks: tuple[int, ...]) -> int:
    total_bits = n * (n - 1) // 2
    best: int | None = None

    def extend(placed: list[int], bits: int, nbits: int) -> bool:
        nonlocal best
        if best is not None and nbits:
            prefix = best >> (total_bits - nbits)
            if bits > prefix:
                return False  # caller breaks: siblings are sorted ascending
        k = len(placed)
        if k == n:
            if best is None or bits < best:
                best = bits
            return True
        rows = []
        for v in range(n):
            if v in placed:
                continue
            row = 0
            for u in placed:
                row = row << 1 | (adj_masks[u] >> v & 1)
            rows.append((row, v))
        rows.sort()
        for row, v in rows:
            placed.append(v)
            viable = extend(placed, bits << k | row, nbits + k)
            placed.pop()
            if not viable:
                break
        return True

    extend([], 0, 0)
    assert best is not None
    return best


def _adj_from_bits(n: int, bits: int) -> tuple[int, ...]:
    total_bits = n * (n - 1) // 2
    masks = [0] * n
    b = 0
    for j in range(1, n):
        for i in range(j):
            if bits >> (total_bits - 1 - b) & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            b += 1
    return tuple(masks)


_class_cache: dict[int, tuple[Graph, ...]] = {}
_connected_cache: dict[int, tuple[Graph, ...]] = {}


def _graph_classes(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of all graphs on n vertices,
    in ascending canonical-bit order."""
    cached = _class_cache.get(n)
    if cached is not None:
        return cached
    if n == 1:
        reps = (Graph(1),)
    else:
        seen: set[int] = set()
        for parent in _graph_classes(n - 1):
            for nbhd in range(1 << (n - 1)):
                masks = list(parent.adj_masks) + [nbhd]
                for v in range(n - 1):
                    if nbhd >> v & 1:
                        masks[v] |= 1 << (n - 1)
                seen.add(_canonical_bits(n, tuple(masks)))
        reps = tuple(
            Graph(n, _edges_from_masks(n, _adj_from_bits(n, bits)))
            for bits in sorted(seen)
        )
    _class_cache[n] = reps
    return reps


def _edges_from_masks(n: int, masks: tuple[int, ...]) -> list[tuple[int, int]]:
    return [
        (u, v) for u in range(n) for v in range(u + 1, n) if masks[u] >> v & 1
    ]


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """Exactly one representative per isomorphism class of connected graphs
    on n vertices, in a deterministic order (ascending canonical encoding)."""
    if not 1 <= n <= ENUMERATION_MAX_VERTICES:
        raise UsageError(
            f"enumeration supports 1 <= n <= {ENUMERATION_MAX_VERTICES}, got {n}"
        )
    cached = _connected_cache.get(n)
    if cached is None:
        cached = tuple(g for g in _graph_classes(n) if g.is_connected())
        _connected_cache[n] = cached
    return iter(cached)
