import random

import pytest

from conftest import random_graph
from oracles import star_colorable_by_enumeration
from star_torus.errors import BudgetExhausted, DomainError, PaletteExhausted
from star_torus.graph import Graph, make_cycle, make_path, make_torus
from star_torus.solver import (
    SolverConfig,
    Status,
    VertexOrder,
    exists_star_coloring,
    incremental_feasible,
    star_chromatic_number,
)
from star_torus.verify import Coloring, verify_star


def solve(g, k, **kw):
    out = exists_star_coloring(g, SolverConfig(k=k, **kw))
    if out.status is Status.SATISFIABLE:
        assert verify_star(g, out.witness).ok
    return out


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def small_corpus():
    rng = random.Random(7)
    graphs = [make_path(n) for n in range(1, 8)] + [make_cycle(n) for n in range(3, 10)]
    graphs.append(Graph.from_edges(4, [(u, v) for u in range(4) for v in range(u + 1, 4)]))  # K4
    graphs.append(Graph.from_edges(5, [(0, i) for i in range(1, 5)]))  # star K1,4
    graphs.append(Graph.from_edges(5, [(u, v) for u in range(2) for v in range(2, 5)]))  # K2,3
    graphs.append(Graph.from_edges(6, [(u, v) for u in range(3) for v in range(3, 6)]))  # K3,3
    for _ in range(12):
        graphs.append(random_graph(rng, rng.randint(4, 8), rng.choice([0.3, 0.5])))
    return graphs


class TestExamples:
    def test_c3c5_needs_six(self):
        assert solve(make_torus(3, 5), 5).status is Status.UNSATISFIABLE

    def test_c3c3_needs_six(self):
        assert solve(make_torus(3, 3), 5).status is Status.UNSATISFIABLE

    def test_pentagon(self):
        assert solve(make_cycle(5), 3).status is Status.UNSATISFIABLE
        assert solve(make_cycle(5), 4).status is Status.SATISFIABLE

    def test_path_three_colors(self):
        assert solve(make_path(4), 3).satisfiable

    def test_size_guard(self):
        with pytest.raises(DomainError):
            exists_star_coloring(make_torus(65, 65), SolverConfig(k=5))


class TestChromaticNumber:
    def test_heptagon(self):
        assert star_chromatic_number(make_cycle(7), 5)[0] == 3

    def test_c3c4(self):
        assert star_chromatic_number(make_torus(3, 4), 6)[0] == 5

    def test_c4c4(self):
        assert star_chromatic_number(make_torus(4, 4), 6)[0] == 5

    def test_range_error(self):
        with pytest.raises(PaletteExhausted) as exc:
            star_chromatic_number(make_torus(3, 3), 5)
        assert exc.value.kmax == 5

    def test_budget_error(self):
        with pytest.raises(BudgetExhausted):
            star_chromatic_number(make_torus(10, 10), 5, node_budget=50)


class TestIncremental:
    def test_triangle(self):
        assert not incremental_feasible(make_cycle(3), (1, 2), 2, 1)

    def test_path_p4(self):
        assert not incremental_feasible(make_path(4), (1, 2, 1), 3, 2)
        assert incremental_feasible(make_path(4), (1, 2, 1), 3, 3)

    def test_matches_full_verifier_on_prefixes(self):
        rng = random.Random(3)
        checked = 0
        for _ in range(400):
            g = random_graph(rng, rng.randint(2, 12), 0.35)
            k = rng.randint(2, 5)
            v = rng.randint(0, g.vertex_count - 1)
            partial = [rng.randint(1, k) for _ in range(v)]
            if v and not verify_star(*_induced(g, partial, k)).ok:
                continue  # precondition: the prefix is already a star coloring
            c = rng.randint(1, k)
            expected = verify_star(*_induced(g, partial + [c], k)).ok
            assert incremental_feasible(g, partial, v, c) == expected
            checked += 1
        assert checked > 100


def _induced(g, colors, k):
    """Subgraph on vertices 0..len(colors)-1 with its coloring."""
    n = len(colors)
    sub = Graph.from_edges(n, [(a, b) for a, b in g.edges() if b < n])
    return sub, Coloring.of(sub, colors, k)


def test_full_enumeration_oracle():
    for g in small_corpus():
        for k in range(1, 5):
            got = solve(g, k).satisfiable
            assert got == star_colorable_by_enumeration(g, k), (g.adjacency, k)


def test_symmetry_breaking_parity():
    graphs = small_corpus() + [make_torus(3, 3), make_torus(3, 4), make_cycle(11), make_cycle(12)]
    for g in graphs:
        for k in range(1, 6):
            on = solve(g, k, symmetry_breaking=True)
            off = solve(g, k, symmetry_breaking=False)
            assert on.status == off.status
            assert on.nodes_explored <= off.nodes_explored


def test_monotone_in_k():
    for m, n in [(3, 4), (4, 4), (4, 5), (5, 5), (3, 7)]:
        verdicts = [solve(make_torus(m, n), k).satisfiable for k in range(3, 8)]
        assert verdicts == sorted(verdicts)


@pytest.mark.parametrize("m,n", [(3, 4), (4, 4), (4, 5), (5, 5), (3, 7)])
def test_five_is_optimal_on_audit_set(m, n):
    assert solve(make_torus(m, n), 4).status is Status.UNSATISFIABLE
    assert solve(make_torus(m, n), 5).satisfiable


def test_degree_order():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (1, 3), (1, 4)])
    out = solve(g, 2, vertex_order=VertexOrder.DEGREE_DESCENDING)
    assert out.satisfiable


def test_deterministic_single_thread():
    a = solve(make_torus(6, 7), 5)
    b = solve(make_torus(6, 7), 5)
    assert a.witness == b.witness and a.nodes_explored == b.nodes_explored


def test_budget_exhausted_status():
    out = solve(make_torus(10, 10), 5, node_budget=100)
    assert out.status is Status.BUDGET_EXHAUSTED and out.witness is None
    assert out.nodes_explored == 100


@pytest.mark.parametrize("m,n,k", [(6, 7, 5), (3, 5, 5), (4, 4, 4), (3, 3, 6)])
def test_parallel_matches_sequential(m, n, k):
    g = make_torus(m, n)
    seq = solve(g, k, thread_hint=1)
    par = solve(g, k, thread_hint=3)
    assert par.status == seq.status
    assert par.witness == seq.witness


def test_thread_env(monkeypatch):
    monkeypatch.setenv("STAR_TORUS_THREADS", "2")
    out = solve(make_torus(3, 4), 5)
    assert out.satisfiable
