"""Simple undirected graphs: cycles, paths, Cartesian products and torus grids.

Vertices are the integers ``0..vertex_count-1``. Adjacency is kept canonical
(sorted, deduplicated tuples) so two graphs are equal iff their adjacency
tuples are equal.

For the torus ``C_m x C_n`` the vertex ``(row, col)`` has id ``row * n + col``.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence, TextIO

from .errors import DomainError, ParseError


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]
    labels: dict[int, str] | None = field(default=None, compare=False, hash=False)

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]], labels=None) -> "Graph":
        """Build a canonical graph; duplicate edges collapse, self-loops are rejected."""
        if vertex_count < 0:
            raise DomainError("vertex_count must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(vertex_count)]
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise DomainError(f"edge ({u}, {v}) out of range for {vertex_count} vertices")
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(vertex_count, tuple(tuple(sorted(s)) for s in nbrs), labels)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u, nb in enumerate(self.adjacency):
            for v in nb:
                if u < v:
                    yield u, v

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def structural_hash(self) -> str:
        """Short digest of the canonical adjacency; used to tie colorings to graphs."""
        h = hashlib.sha256(str(self.vertex_count).encode())
        for nb in self.adjacency:
            h.update(b";" + ",".join(map(str, nb)).encode())
        return h.hexdigest()[:16]

    def relabel(self, mapping: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``mapping[v]`` (a permutation)."""
        if sorted(mapping) != list(range(self.vertex_count)):
            raise DomainError("relabel mapping must be a permutation of the vertex ids")
        return Graph.from_edges(self.vertex_count, ((mapping[u], mapping[v]) for u, v in self.edges()))


def validate_graph(g: Graph) -> None:
    """Raise AssertionError unless ``g`` is symmetric, loop-free and canonical."""
    assert len(g.adjacency) == g.vertex_count, "adjacency length mismatch"
    for v, nb in enumerate(g.adjacency):
        assert list(nb) == sorted(set(nb)), f"neighbors of {v} not sorted/unique"
        for u in nb:
            assert 0 <= u < g.vertex_count, f"neighbor {u} of {v} out of range"
            assert u != v, f"self-loop at {v}"
            assert v in g.adjacency[u], f"edge {v}-{u} not symmetric"


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise DomainError("cycle requires >= 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def make_path(n: int) -> Graph:
    if n < 1:
        raise DomainError("path requires >= 1 vertex")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """``g x h`` with the pair ``(a, b)`` numbered ``a * |V(h)| + b``."""
    if g.vertex_count == 0 or h.vertex_count == 0:
        raise DomainError("cartesian product of an empty graph")
    nh = h.vertex_count
    edges = []
    for a in range(g.vertex_count):
        for b, d in h.edges():
            edges.append((a * nh + b, a * nh + d))
    for a, c in g.edges():
        for b in range(nh):
            edges.append((a * nh + b, c * nh + b))
    return Graph.from_edges(g.vertex_count * nh, edges)


def make_torus(m: int, n: int) -> Graph:
    """The 4-regular torus grid ``C_m x C_n`` in row-major order."""
    if m < 3 or n < 3:
        raise DomainError(f"torus requires m, n >= 3 (got {m}, {n})")
    edges = []
    for i in range(m):
        for j in range(n):
            v = i * n + j
            edges.append((v, i * n + (j + 1) % n))
            edges.append((v, ((i + 1) % m) * n + j))
    labels = {i * n + j: f"({i},{j})" for i in range(m) for j in range(n)}
    return Graph.from_edges(m * n, edges, labels)


def torus_vertex(n: int, row: int, col: int) -> int:
    return row * n + col


def torus_coord(n: int, v: int) -> tuple[int, int]:
    return divmod(v, n)


def parse_dimacs(text: str | TextIO) -> Graph:
    """Parse a DIMACS ``p edge`` graph (1-based ids) into a canonical Graph."""
    lines = text.splitlines() if isinstance(text, str) else text.read().splitlines()
    n = None
    edges = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        tok = line.split()
        if tok[0] == "p":
            if n is not None:
                raise ParseError("duplicate 'p' line", lineno)
            if len(tok) != 4 or tok[1] not in ("edge", "col"):
                raise ParseError(f"malformed problem line {line!r}", lineno)
            try:
                n = int(tok[2])
                int(tok[3])
            except ValueError:
                raise ParseError(f"non-integer count in {line!r}", lineno) from None
            if n < 0:
                raise ParseError("negative vertex count", lineno)
        elif tok[0] == "e":
            if n is None:
                raise ParseError("edge before 'p' line", lineno)
            if len(tok) != 3:
                raise ParseError(f"malformed edge line {line!r}", lineno)
            try:
                u, v = int(tok[1]), int(tok[2])
            except ValueError:
                raise ParseError(f"non-integer vertex in {line!r}", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"vertex id out of range 1..{n}", lineno)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unknown line type {tok[0]!r}", lineno)
    if n is None:
        raise ParseError("missing 'p edge' line")
    return Graph.from_edges(n, edges)


def write_dimacs(g: Graph, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"c {c}" for c in comment.splitlines())
    out.append(f"p edge {g.vertex_count} {g.edge_count}")
    out.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(out) + "\n"
