"""Exact k-star-colorability by depth-first search.

Vertices are colored one at a time in a fixed order. Each candidate color is
checked only against the bicolored P4s through the newly colored vertex, so a
partial coloring is always a star coloring of the colored subgraph. Requiring
color ids to appear in first-use order removes the ``k!`` palette symmetry.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .errors import DomainError, PaletteExhausted
from .graph import Graph
from .verify import Coloring, verify_star

MAX_VERTICES = 4096
THREADS_ENV = "STAR_TORUS_THREADS"


class Status(str, Enum):
    SATISFIABLE = "satisfiable"
    UNSATISFIABLE = "unsatisfiable"
    BUDGET_EXHAUSTED = "budget_exhausted"


class VertexOrder(str, Enum):
    ROW_MAJOR = "row_major"
    DEGREE_DESCENDING = "degree_descending"


@dataclass(frozen=True)
class SolverConfig:
    k: int
    vertex_order: VertexOrder = VertexOrder.ROW_MAJOR
    symmetry_breaking: bool = True
    node_budget: int | None = None
    thread_hint: int | None = None


@dataclass
class SearchOutcome:
    status: Status
    witness: Coloring | None
    nodes_explored: int
    elapsed: float = field(default=0.0, compare=False)

    @property
    def satisfiable(self) -> bool:
        return self.status is Status.SATISFIABLE


def vertex_order(g: Graph, order: VertexOrder) -> list[int]:
    if order is VertexOrder.ROW_MAJOR:
        return list(range(g.vertex_count))
    # stable: ties keep the lower id first
    return sorted(range(g.vertex_count), key=lambda v: -g.degree(v))


def _feasible(adj, col, v: int, c: int) -> bool:
    """True iff ``col[v] = c`` closes no monochromatic edge and no bicolored P4.

    ``col`` holds 0 for uncolored vertices and ``col[v]`` must be 0.
    """
    nb = adj[v]
    for u in nb:
        if col[u] == c:
            return False
    for b in nb:
        cb = col[b]
        if not cb:
            continue
        # v is an end: v-b-x-d with color(x) = c, color(d) = color(b)
        for x in adj[b]:
            if x != v and col[x] == c:
                for d in adj[x]:
                    if d != b and col[d] == cb:
                        return False
        # v is inside: a-v-b-d with color(a) = color(b), color(d) = c
        for a in nb:
            if a != b and col[a] == cb:
                for d in adj[b]:
                    if d != v and col[d] == c:
                        return False
    return True


def incremental_feasible(g: Graph, partial: Sequence[int], v: int, c: int) -> bool:
    """Whether coloring ``v`` with ``c`` keeps the colored subgraph star-colored.

    ``partial`` lists the colors of a prefix of the vertices (or a full
    array with 0 marking uncolored vertices).
    """
    col = list(partial) + [0] * (g.vertex_count - len(partial))
    col[v] = 0
    return _feasible(g.adjacency, col, v, c)


def _dfs(adj, order, k, sym, budget, col, used, start_depth, nodes_offset=0):
    """Core search. Returns (found, nodes, exhausted); ``col`` holds the witness on success."""
    n = len(order)
    maxu = [0] * (n + 1)
    maxu[start_depth] = used
    nxt = [1] * n
    nodes = nodes_offset
    depth = start_depth
    if depth == n:
        return True, nodes, False
    while depth >= start_depth:
        v = order[depth]
        col[v] = 0
        limit = maxu[depth] + 1 if sym and maxu[depth] < k else k
        c = nxt[depth]
        while c <= limit and not _feasible(adj, col, v, c):
            c += 1
        if c > limit:
            nxt[depth] = 1
            depth -= 1
            continue
        if budget is not None and nodes >= budget:
            return False, nodes, True
        nodes += 1
        col[v] = c
        nxt[depth] = c + 1
        maxu[depth + 1] = c if c > maxu[depth] else maxu[depth]
        depth += 1
        if depth == n:
            return True, nodes, False
    return False, nodes, False


def _split_prefixes(adj, order, k, sym, depth):
    """All feasible colorings of the first ``depth`` vertices, in DFS order."""
    out = []
    col = [0] * len(adj)

    def rec(d, used):
        if d == depth:
            out.append(tuple(col[order[i]] for i in range(depth)))
            return
        v = order[d]
        limit = min(k, used + 1) if sym else k
        for c in range(1, limit + 1):
            if _feasible(adj, col, v, c):
                col[v] = c
                rec(d + 1, max(used, c))
                col[v] = 0

    rec(0, 0)
    return out


def _run_subtree(args):
    adj, order, k, sym, budget, prefix = args
    col = [0] * len(adj)
    for v, c in zip(order, prefix):
        col[v] = c
    found, nodes, exhausted = _dfs(adj, order, k, sym, budget, col, max(prefix, default=0), len(prefix))
    return found, nodes, exhausted, (tuple(col) if found else None)


def _threads(cfg: SolverConfig) -> int:
    if cfg.thread_hint is not None:
        return max(1, cfg.thread_hint)
    env = os.environ.get(THREADS_ENV)
    return max(1, int(env)) if env and env.isdigit() else 1


def exists_star_coloring(g: Graph, cfg: SolverConfig) -> SearchOutcome:
    """Decide whether ``g`` has a star coloring with ``cfg.k`` colors.

    With several workers the first two levels of the search tree are split
    into independent subtrees; the reported witness is the one from the
    earliest satisfiable subtree, which is exactly the sequential witness.
    A node budget applies to each subtree separately in that mode.
    """
    if g.vertex_count > MAX_VERTICES:
        raise DomainError(f"exact search limited to {MAX_VERTICES} vertices")
    if cfg.k < 1:
        raise DomainError("palette size must be >= 1")
    t0 = time.perf_counter()
    adj = g.adjacency
    order = vertex_order(g, VertexOrder(cfg.vertex_order))
    sym = cfg.symmetry_breaking
    workers = _threads(cfg)

    if workers > 1 and g.vertex_count > 2:
        prefixes = _split_prefixes(adj, order, cfg.k, sym, 2)
        jobs = [(adj, order, cfg.k, sym, cfg.node_budget, p) for p in prefixes]
        total = len(prefixes)
        found_col = None
        exhausted = False
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for found, nodes, cut, col in pool.map(_run_subtree, jobs):
                total += nodes
                if found_col is None and not exhausted:
                    if found:
                        found_col = col
                    elif cut:
                        exhausted = True
        if found_col is not None:
            status, witness = Status.SATISFIABLE, Coloring.of(g, found_col, cfg.k)
        else:
            status = Status.BUDGET_EXHAUSTED if exhausted else Status.UNSATISFIABLE
            witness = None
    else:
        col = [0] * g.vertex_count
        found, total, cut = _dfs(adj, order, cfg.k, sym, cfg.node_budget, col, 0, 0)
        if found:
            status, witness = Status.SATISFIABLE, Coloring.of(g, col, cfg.k)
        else:
            status = Status.BUDGET_EXHAUSTED if cut else Status.UNSATISFIABLE
            witness = None

    if witness is not None and not verify_star(g, witness).ok:
        raise AssertionError("solver produced an invalid witness")
    return SearchOutcome(status, witness, total, time.perf_counter() - t0)


def star_chromatic_number(g: Graph, kmax: int, **cfg_kwargs) -> tuple[int, SearchOutcome]:
    """Smallest ``k <= kmax`` admitting a star coloring, with its search outcome.

    Raises:
        PaletteExhausted: every ``k <= kmax`` is unsatisfiable.
        BudgetExhausted: some ``k`` could not be decided within the node budget.
    """
    from .errors import BudgetExhausted

    if kmax < 1:
        raise DomainError("kmax must be >= 1")
    for k in range(1, kmax + 1):
        out = exists_star_coloring(g, SolverConfig(k=k, **cfg_kwargs))
        if out.status is Status.SATISFIABLE:
            return k, out
        if out.status is Status.BUDGET_EXHAUSTED:
            raise BudgetExhausted(k, out.nodes_explored)
    raise PaletteExhausted(kmax)
