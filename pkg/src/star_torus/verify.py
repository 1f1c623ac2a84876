"""Star-coloring verification with concrete witnesses.

A coloring is a *star coloring* when it is proper and no path on four
distinct vertices alternates between two colors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Sequence

from .errors import DomainError, ParseError
from .graph import Graph

P4_ENUMERATION_LIMIT = 64


@dataclass(frozen=True)
class Coloring:
    """Color ids ``1..k`` for every vertex of one specific graph."""

    colors: tuple[int, ...]
    k: int
    vertex_count: int
    graph_hash: str

    @classmethod
    def of(cls, g: Graph, colors: Sequence[int], k: int | None = None) -> "Coloring":
        colors = tuple(int(c) for c in colors)
        if len(colors) != g.vertex_count:
            raise DomainError(f"coloring has {len(colors)} entries, graph has {g.vertex_count} vertices")
        if k is None:
            k = max(colors, default=0)
        bad = [c for c in colors if not 1 <= c <= k]
        if bad:
            raise DomainError(f"color id {bad[0]} outside palette 1..{k}")
        return cls(colors, k, g.vertex_count, g.structural_hash())

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __len__(self) -> int:
        return len(self.colors)

    @property
    def colors_used(self) -> int:
        return len(set(self.colors))

    def with_palette(self, k: int) -> "Coloring":
        if k < max(self.colors, default=0):
            raise DomainError(f"palette {k} too small for color ids up to {max(self.colors)}")
        return Coloring(self.colors, k, self.vertex_count, self.graph_hash)

    def permute_colors(self, perm: dict[int, int]) -> "Coloring":
        return Coloring(tuple(perm[c] for c in self.colors), self.k, self.vertex_count, self.graph_hash)

    def grid(self, n: int) -> list[list[int]]:
        """Row-major reshaping for torus colorings with ``n`` columns."""
        return [list(self.colors[i : i + n]) for i in range(0, len(self.colors), n)]


class Verdict(str, Enum):
    VALID = "valid"
    IMPROPER = "improper"
    BICOLORED_P4 = "bicolored_p4"


@dataclass(frozen=True)
class VerifyReport:
    verdict: Verdict
    witness: tuple[int, ...] | None
    colors_used: int

    @property
    def ok(self) -> bool:
        return self.verdict is Verdict.VALID

    def describe(self) -> str:
        if self.verdict is Verdict.VALID:
            return f"valid ({self.colors_used} colors used)"
        if self.verdict is Verdict.IMPROPER:
            u, v = self.witness
            return f"improper: edge {u}-{v} is monochromatic"
        return "bicolored_p4: path " + "-".join(map(str, self.witness))


def _check_shape(g: Graph, c: Coloring) -> None:
    if c.vertex_count != g.vertex_count or c.graph_hash != g.structural_hash():
        raise DomainError("coloring does not belong to this graph")


def check_proper(g: Graph, c: Coloring) -> tuple[int, int] | None:
    """Return the lexicographically smallest monochromatic edge, or None."""
    _check_shape(g, c)
    col = c.colors
    for u, v in g.edges():
        if col[u] == col[v]:
            return (u, v)
    return None


def find_bicolored_p4(g: Graph, c: Coloring) -> tuple[int, int, int, int] | None:
    """Find a path ``a-b-c-d`` with ``color(a)=color(c) != color(b)=color(d)``.

    Enumerates middle edges ``(b, c)`` in both orientations; the returned path
    is the first in lexicographic order of ``(b, c, a, d)``.
    """
    _check_shape(g, c)
    col = c.colors
    adj = g.adjacency
    for b in range(g.vertex_count):
        cb = col[b]
        for mid in adj[b]:
            cm = col[mid]
            if cm == cb:
                continue
            ends_a = [a for a in adj[b] if a != mid and col[a] == cm]
            if not ends_a:
                continue
            ends_d = [d for d in adj[mid] if d != b and col[d] == cb]
            if ends_d:
                return (ends_a[0], b, mid, ends_d[0])
    return None


def verify_star(g: Graph, c: Coloring) -> VerifyReport:
    edge = check_proper(g, c)
    if edge is not None:
        return VerifyReport(Verdict.IMPROPER, edge, c.colors_used)
    path = find_bicolored_p4(g, c)
    if path is not None:
        return VerifyReport(Verdict.BICOLORED_P4, path, c.colors_used)
    return VerifyReport(Verdict.VALID, None, c.colors_used)


def is_star_coloring(g: Graph, colors: Sequence[int]) -> bool:
    return verify_star(g, Coloring.of(g, colors)).ok


def enumerate_p4_bruteforce(g: Graph) -> list[tuple[int, int, int, int]]:
    """Every path on four distinct vertices, once each, stored with ``a < d``."""
    if g.vertex_count > P4_ENUMERATION_LIMIT:
        raise DomainError(f"brute-force P4 enumeration limited to {P4_ENUMERATION_LIMIT} vertices")
    found = set()
    for a in range(g.vertex_count):
        for b in g.adjacency[a]:
            for c in g.adjacency[b]:
                if c == a:
                    continue
                for d in g.adjacency[c]:
                    if d in (a, b):
                        continue
                    found.add((a, b, c, d) if a < d else (d, c, b, a))
    return sorted(found)


def is_alternating(colors: Sequence[int], path: Sequence[int]) -> bool:
    a, b, c, d = (colors[v] for v in path)
    return a == c and b == d and a != b


# -- Coloring JSON ---------------------------------------------------------


@dataclass
class ColoringDocument:
    """The JSON interchange form: ``{"m", "n", "k", "colors"}`` plus extras."""

    k: int
    colors: list[int]
    m: int | None = None
    n: int | None = None
    extra: dict[str, Any] = field(default_factory=dict)

    @property
    def is_torus(self) -> bool:
        return self.m is not None and self.n is not None

    def to_json(self) -> str:
        doc = {"m": self.m, "n": self.n, "k": self.k, "colors": list(self.colors)}
        doc.update(self.extra)
        return json.dumps(doc) + "\n"

    def coloring_for(self, g: Graph) -> Coloring:
        return Coloring.of(g, self.colors, self.k)


def parse_coloring_json(text: str) -> ColoringDocument:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(doc, dict):
        raise ParseError("coloring document must be a JSON object")
    for key in ("k", "colors"):
        if key not in doc:
            raise ParseError(f"missing field {key!r}")
    k, colors = doc.pop("k"), doc.pop("colors")
    m, n = doc.pop("m", None), doc.pop("n", None)
    if not isinstance(k, int) or not isinstance(colors, list) or not all(isinstance(x, int) for x in colors):
        raise ParseError("'k' must be an integer and 'colors' a list of integers")
    for name, val in (("m", m), ("n", n)):
        if val is not None and not isinstance(val, int):
            raise ParseError(f"{name!r} must be an integer or null")
    if (m is None) != (n is None):
        raise ParseError("'m' and 'n' must both be present or both be null")
    if m is not None and m * n != len(colors):
        raise ParseError(f"{len(colors)} colors do not fill a {m}x{n} torus")
    return ColoringDocument(k, colors, m, n, doc)
