"""Verified 5-star colorings of every torus grid ``C_m x C_n``.

Colorings are assembled from catalog tiles by the case analysis below
(after swapping so that ``m <= n``):

    m = 3            Figure 2 tiles directly, else blocks of width 4, 6, 7
    m = 4, 5         Figure 3 / 4 tiles directly, else blocks of width 4, 5
    m = 6, 8, 9, 10  copies of the 3-, 4- or 5-row solution stacked
    m = 7            blocks of width 3, 4 from Figure 5
    m = 11           the stored 11x11 tile, else 11-column bands of height 4, 5
    m >= 12          a grid of 4x4, 4x5, 5x4, 5x5 blocks

C3 x C3 and C3 x C5 need six colors. Every assembly is verified before it is
returned; if the first block order fails, all distinct orders are tried and
then a bounded exact search.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import ConstructionError, DomainError, ParseError
from .graph import make_torus
from .solver import SolverConfig, Status, exists_star_coloring
from .tiles import Tile, get_tile, hconcat, tile_catalog, vstack
from .verify import Coloring, verify_star

DEFAULT_SEARCH_BUDGET = 10_000_000
MAX_ORDERINGS = 5_000

# Block width -> tile, for each row count handled by concatenation.
ROW_BLOCKS = {
    3: {7: "Fig2(iii)", 6: "Fig2(ii)", 4: "Fig2(i)"},
    4: {5: "Fig3(ii)", 4: "Fig3(i)"},
    5: {5: "Fig4(ii)", 4: "Fig4(i)"},
    7: {4: "Fig5(ii)", 3: "Fig5(i)"},
}
DIRECT = {
    (3, 3): "C3C3-6",
    (3, 5): "Fig1",
    (3, 4): "Fig2(i)",
    (3, 6): "Fig2(ii)",
    (3, 7): "Fig2(iii)",
    (3, 9): "Fig2(iv)",
    (4, 4): "Fig3(i)",
    (4, 5): "Fig3(ii)",
    (4, 6): "Fig3(iii)",
    (4, 7): "Fig3(iv)",
    (4, 11): "Fig3(v)",
    (5, 4): "Fig4(i)",
    (5, 5): "Fig4(ii)",
    (5, 6): "Fig4(iii)",
    (5, 7): "Fig4(iv)",
    (5, 11): "Fig4(v)",
    (7, 3): "Fig5(i)",
    (7, 4): "Fig5(ii)",
    (11, 11): "C11C11-5",
}
# Bands of 11 columns used to build (n x 11), then transposed.
ELEVEN_BANDS = {5: "Fig4(v)", 4: "Fig3(v)"}
STACKED = {6: (3, 2), 8: (4, 2), 9: (3, 3), 10: (5, 2)}
EXCEPTIONAL = {(3, 3), (3, 5)}


@dataclass(frozen=True)
class Decomposition:
    """``target = sum(size * count)`` over ``parts``, sizes in descending order."""

    target: int
    parts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if sum(s * c for s, c in self.parts) != self.target or any(c < 0 for _, c in self.parts):
            raise DomainError(f"invalid decomposition of {self.target}: {self.parts}")

    def blocks(self) -> list[int]:
        """Block sizes, widest first."""
        return [s for s, c in sorted(self.parts, reverse=True) for _ in range(c)]

    def __str__(self):
        terms = [f"{c}*{s}" for s, c in self.parts if c]
        return f"{self.target} = " + " + ".join(terms)


@dataclass
class ConstructionPlan:
    m: int
    n: int
    strategy: str
    trace: list[str] = field(default_factory=list)

    @property
    def expression(self) -> str:
        return next(t[5:] for t in reversed(self.trace) if t.startswith("expr "))


def sylvester_decompose(t: int, r: int, s: int) -> tuple[int, int] | None:
    """Non-negative ``(alpha, beta)`` with ``alpha*r + beta*s = t`` and ``alpha`` maximal.

    For coprime ``r, s`` a solution exists whenever ``t >= (r-1)(s-1)``.
    """
    if r < 2 or s < 2:
        raise DomainError("block sizes must be >= 2")
    if t < 0:
        return None
    for beta in range(t // s + 1):
        rest = t - beta * s
        if rest % r == 0:
            return rest // r, beta
    return None


def multi_decompose(t: int, sizes: Iterable[int]) -> Decomposition | None:
    """First decomposition of ``t`` when count vectors (largest size first) are
    tried in decreasing lexicographic order."""
    sizes = sorted(set(sizes), reverse=True)
    if not sizes or any(s < 3 for s in sizes):
        raise DomainError("sizes must be nonempty and all >= 3")

    def rec(rest, idx):
        if idx == len(sizes) - 1:
            s = sizes[idx]
            return [rest // s] if rest % s == 0 else None
        for c in range(rest // sizes[idx], -1, -1):
            tail = rec(rest - c * sizes[idx], idx + 1)
            if tail is not None:
                return [c] + tail
        return None

    if t < 0:
        return None
    counts = rec(t, 0)
    if counts is None:
        return None
    return Decomposition(t, tuple(zip(sizes, counts)))


def _pair_decomposition(t: int, small: int, large: int) -> Decomposition | None:
    ab = sylvester_decompose(t, small, large)
    if ab is None:
        return None
    return Decomposition(t, ((large, ab[1]), (small, ab[0])))


def distinct_orderings(blocks: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Distinct permutations of a multiset, starting from the given order."""
    counts: dict[int, int] = {}
    for b in blocks:
        counts[b] = counts.get(b, 0) + 1
    keys = list(dict.fromkeys(blocks))
    out: list[int] = []

    def rec():
        if len(out) == len(blocks):
            yield tuple(out)
            return
        for key in keys:
            if counts[key]:
                counts[key] -= 1
                out.append(key)
                yield from rec()
                out.pop()
                counts[key] += 1

    yield from rec()


# -- plan expressions ------------------------------------------------------
#
# A plan's final trace line is "expr <e>" where <e> is a catalog tile name,
# concat(e,...), stack(e,...), transpose(e) or search(m,n,k,budget). These are
# exactly the source strings Tile operations produce, so replay is a parse.


def replay_expression(expr: str) -> Tile:
    names = sorted((t.source for t in tile_catalog()), key=len, reverse=True)
    pos = 0

    def parse() -> Tile:
        nonlocal pos
        for op in ("concat(", "stack(", "transpose(", "search("):
            if expr.startswith(op, pos):
                pos += len(op)
                if op == "search(":
                    end = expr.index(")", pos)
                    m, n, k, budget = (int(x) for x in expr[pos:end].split(","))
                    pos = end + 1
                    found = search_fallback(m, n, k, budget)
                    if found is None:
                        raise ParseError(f"replayed search {expr!r} found nothing")
                    return _tile_from_coloring(found, m, n, k, budget)
                args = [parse()]
                while expr.startswith(",", pos):
                    pos += 1
                    args.append(parse())
                if not expr.startswith(")", pos):
                    raise ParseError(f"expected ')' at offset {pos} in {expr!r}")
                pos += 1
                if op == "concat(":
                    return hconcat(args)
                if op == "stack(":
                    return vstack(args)
                if len(args) != 1:
                    raise ParseError("transpose takes one argument")
                return args[0].transpose()
        for name in names:
            if expr.startswith(name, pos):
                pos += len(name)
                return get_tile(name)
        raise ParseError(f"unrecognised term at offset {pos} in {expr!r}")

    tile = parse()
    if pos != len(expr):
        raise ParseError(f"trailing text at offset {pos} in {expr!r}")
    return tile


def replay_plan(plan: ConstructionPlan) -> Coloring:
    tile = replay_expression(plan.expression)
    return Coloring.of(make_torus(plan.m, plan.n), tile.flat, tile.palette_size)


def _tile_from_coloring(c: Coloring, m: int, n: int, k: int, budget: int) -> Tile:
    return Tile(f"search({m},{n},{k},{budget})", k, tuple(map(tuple, c.grid(n))))


# -- search fallback -------------------------------------------------------


def search_fallback(m: int, n: int, k: int, budget: int = DEFAULT_SEARCH_BUDGET) -> Coloring | None:
    """First star coloring of the torus found by exact search, or None.

    Deterministic: row-major order, first-use color symmetry breaking, single worker.
    """
    if m < 3 or n < 3 or k < 3:
        raise DomainError("search_fallback needs m, n >= 3 and k >= 3")
    cfg = SolverConfig(k=k, node_budget=budget, thread_hint=1)
    out = exists_star_coloring(make_torus(m, n), cfg)
    return out.witness if out.status is Status.SATISFIABLE else None


# -- candidate generation --------------------------------------------------


def _row_candidates(m: int, n: int, trace: list[str]) -> Iterator[Tile]:
    """Candidate tiles for an m-row torus built by horizontal concatenation."""
    blocks_by_width = ROW_BLOCKS[m]
    widths = sorted(blocks_by_width)
    if m == 3 and n < 18:
        dec = multi_decompose(n, widths)
    else:
        dec = _pair_decomposition(n, widths[0], widths[-1])
    if dec is None:
        trace.append(f"no decomposition of {n} into {widths}")
        return
    trace.append(f"columns {dec}")
    for order in itertools.islice(distinct_orderings(dec.blocks()), MAX_ORDERINGS):
        yield hconcat([get_tile(blocks_by_width[w]) for w in order])


def _candidates(m: int, n: int, trace: list[str]) -> Iterator[Tile]:
    """Candidates for ``C_m x C_n``, most preferred first.

    ``m <= n`` unless ``(m, n)`` is a catalog shape.
    """
    if (m, n) in DIRECT:
        trace.append(f"catalog tile {DIRECT[m, n]}")
        yield get_tile(DIRECT[m, n])
        return
    if m in ROW_BLOCKS:
        yield from _row_candidates(m, n, trace)
    elif m in STACKED:
        base_m, copies = STACKED[m]
        trace.append(f"rows {m} = {copies}*{base_m}")
        for base in _candidates(base_m, n, trace):
            yield vstack([base] * copies)
    elif m == 11:
        dec = _pair_decomposition(n, 4, 5)
        trace.append(f"bands of 11 columns, rows {dec}")
        for order in itertools.islice(distinct_orderings(dec.blocks()), MAX_ORDERINGS):
            yield vstack([get_tile(ELEVEN_BANDS[h]) for h in order]).transpose()
    else:
        rows = _pair_decomposition(m, 4, 5)
        cols = _pair_decomposition(n, 4, 5)
        trace.append(f"rows {rows}; columns {cols}")
        pairs = itertools.product(distinct_orderings(rows.blocks()), distinct_orderings(cols.blocks()))
        for row_order, col_order in itertools.islice(pairs, MAX_ORDERINGS):
            bands = [hconcat([get_tile(ROW_BLOCKS[h][w]) for w in col_order]) for h in row_order]
            yield vstack(bands)


def _strategy(m: int, n: int) -> str:
    if (min(m, n), max(m, n)) in EXCEPTIONAL:
        return "exceptional_6"
    if (m, n) in DIRECT:
        return "direct_tile"
    if m in ROW_BLOCKS:
        return "hconcat"
    return "vstack_of_hconcats"


def construct(m: int, n: int, budget: int = DEFAULT_SEARCH_BUDGET) -> tuple[Coloring, ConstructionPlan]:
    """A verified star coloring of ``C_m x C_n`` with the optimal palette.

    Raises:
        DomainError: ``m`` or ``n`` is below 3.
        ConstructionError: no candidate verified and the fallback search failed.
    """
    if m < 3 or n < 3:
        raise DomainError(f"torus requires m, n >= 3 (got {m}, {n})")
    # tiles drawn with more rows than columns are used as they are
    swap = m > n and (m, n) not in DIRECT
    a, b = (n, m) if swap else (m, n)
    k = 6 if (min(m, n), max(m, n)) in EXCEPTIONAL else 5
    g = make_torus(m, n)
    trace: list[str] = [f"C{m} x C{n}, palette {k}"]
    if swap:
        trace.append(f"built as C{a} x C{b}, then transposed")
    strategy = _strategy(a, b)

    chosen = None
    tried = 0
    for cand in _candidates(a, b, trace):
        tried += 1
        tile = cand.transpose() if swap else cand
        if tile.palette_size <= k and verify_star(g, Coloring.of(g, tile.flat, k)).ok:
            chosen = tile
            break
    if tried > 1:
        trace.append(f"accepted block order #{tried}" if chosen else f"all {tried} block orders failed")

    if chosen is None:
        strategy = "fallback_search"
        found = search_fallback(m, n, k, budget)
        if found is None:
            raise ConstructionError(m, n, f"fallback search exhausted {budget} nodes")
        chosen = _tile_from_coloring(found, m, n, k, budget)

    coloring = Coloring.of(g, chosen.flat, k)
    report = verify_star(g, coloring)
    if not report.ok:
        raise ConstructionError(m, n, f"assembled coloring failed verification: {report.describe()}")
    trace.append(f"expr {chosen.source}")
    return coloring, ConstructionPlan(m, n, strategy, trace)


__all__ = [
    "ConstructionPlan",
    "Decomposition",
    "construct",
    "distinct_orderings",
    "multi_decompose",
    "replay_expression",
    "replay_plan",
    "search_fallback",
    "sylvester_decompose",
]
