"""
Tests for flippable, simultaneously flippable and ps-flippable edge sets,
and for the separability ledger.
"""

import math

import networkx as nx
import pytest

from enumeration.triangulations import enumerate_triangulations
from flippability.decomposition import (
    ConvexDecomposition,
    FaceMap,
    check_decomposition,
    completion_count,
    exact_max_ps_flippable,
    greedy_ps_flippable,
)
from flippability.flippable import (
    conflict_graph,
    flippable_set,
    greedy_simultaneously_flippable,
    is_simultaneously_flippable,
    max_simultaneously_flippable,
    simultaneously_flippable,
)
from flippability.independent_set import greedy_independent_set, maximum_independent_set
from flippability.separability import decomposition_check, is_separable, separability_report, separable_edges
from generators.generators import gen_convex, gen_low_flip, gen_random
from stem.exceptions import BoundViolation, IdentityViolation, InstanceTooLarge
from triangulation.triangulation import build_initial


class TestIndependentSet:
    """Test the exact maximum independent set."""

    @pytest.mark.parametrize("graph,size", [
        (nx.path_graph(7), 4),
        (nx.cycle_graph(7), 3),
        (nx.complete_graph(5), 1),
        (nx.petersen_graph(), 4),
        (nx.empty_graph(4), 4),
    ])
    def test_known_sizes(self, graph, size):
        """Test independence numbers of small named graphs."""
        chosen = maximum_independent_set(graph)
        assert len(chosen) == size
        assert not any(graph.has_edge(u, v) for u in chosen for v in chosen)

    def test_greedy_is_maximal(self):
        """Test greedy picks a maximal independent set."""
        graph = nx.petersen_graph()
        chosen = greedy_independent_set(graph)
        assert all(v in chosen or any(u in chosen for u in graph.adj[v]) for v in graph.nodes)

    def test_empty_graph(self):
        """Test the empty graph."""
        assert maximum_independent_set(nx.Graph()) == set()


class TestFlippable:
    """Test flippable and simultaneously flippable sets."""

    def test_convex_fan(self, convex6_fan):
        """Test every diagonal of a convex fan flips."""
        assert flippable_set(convex6_fan) == {(0, 2), (0, 3), (0, 4)}

    def test_triangle_with_interior(self, triangle_interior):
        """Test no edge flips around a degree-3 interior vertex."""
        assert flippable_set(build_initial(triangle_interior)) == set()

    def test_low_flip(self, low_flip12):
        """Test the low-flip construction reaches its lower bound."""
        _, tri = low_flip12
        assert len(flippable_set(tri)) == 4
        assert len(max_simultaneously_flippable(tri)) == 4

    def test_conflict_graph_fan(self, convex6_fan):
        """Test consecutive fan diagonals share a triangle."""
        graph = conflict_graph(convex6_fan)
        assert set(graph.edges) == {((0, 2), (0, 3)), ((0, 3), (0, 4))}

    def test_simultaneous_fan(self, convex6_fan):
        """Test the maximum simultaneous set of a fan skips alternate diagonals."""
        chosen = max_simultaneously_flippable(convex6_fan)
        assert chosen == {(0, 2), (0, 4)}
        assert is_simultaneously_flippable(convex6_fan, chosen)
        assert not is_simultaneously_flippable(convex6_fan, [(0, 2), (0, 3)])
        assert not is_simultaneously_flippable(convex6_fan, [(0, 1)])

    def test_cap(self, convex6_fan):
        """Test the exact search refuses instances above its cap."""
        with pytest.raises(InstanceTooLarge) as exc:
            max_simultaneously_flippable(convex6_fan, cap=5)
        assert exc.value.kind == "mis"

    def test_greedy_fallback(self, convex6_fan):
        """Test the greedy fallback above the cap."""
        chosen, exact = simultaneously_flippable(convex6_fan, cap=5)
        assert exact is False
        assert is_simultaneously_flippable(convex6_fan, chosen)
        assert chosen == greedy_simultaneously_flippable(convex6_fan)

    @pytest.mark.parametrize("N", [5, 6, 7, 8, 9])
    def test_lower_bounds_over_all_triangulations(self, N):
        """Test flip and flip_s lower bounds on every triangulation of a random set."""
        ps = gen_random(N, N)
        for tri in enumerate_triangulations(ps):
            assert len(flippable_set(tri)) >= math.ceil(N / 2) - 2
            assert len(max_simultaneously_flippable(tri)) >= math.ceil((N - 4) / 5)


class TestDecomposition:
    """Test convex decompositions and ps-flippable sets."""

    def test_convex_greedy_removes_all_diagonals(self, convex6_fan):
        """Test a convex fan collapses to the hull polygon."""
        removed, decomposition = greedy_ps_flippable(convex6_fan)
        assert removed == {(0, 2), (0, 3), (0, 4)}
        assert decomposition.faces == ((0, 1, 2, 3, 4, 5),)
        assert completion_count(decomposition) == 14

    def test_exact_convex(self, convex6_fan):
        """Test exact ps on a convex hexagon."""
        assert len(exact_max_ps_flippable(convex6_fan)) == 3

    def test_low_flip_tight(self):
        """Test greedy and exact ps match the lower bound on low-flip sets."""
        _, tri = gen_low_flip(10)
        assert len(exact_max_ps_flippable(tri)) == 3
        assert len(greedy_ps_flippable(tri)[0]) == 3

    def test_exact_cap(self, convex6_fan):
        """Test the exact search refuses instances above its cap."""
        with pytest.raises(InstanceTooLarge):
            exact_max_ps_flippable(convex6_fan, cap=4)

    @pytest.mark.parametrize("seed", range(6))
    def test_greedy_valid_and_bounded(self, seed):
        """Test greedy output is a convex decomposition meeting the lower bound."""
        ps = gen_random(9, seed)
        for tri in enumerate_triangulations(ps)[:40]:
            removed, decomposition = greedy_ps_flippable(tri)
            check_decomposition(decomposition)
            assert len(removed) >= max(ps.N // 2 - 2, ps.h - 3)
            first_pass = {e for e, p in decomposition.removal_passes if p == 1}
            assert first_pass <= flippable_set(tri)
            assert removed <= flippable_set(tri)
            assert len(exact_max_ps_flippable(tri)) >= len(removed)

    def test_face_map_rejects_reflex_merge(self, triangle_interior):
        """Test removal is refused when it would leave a reflex corner."""
        tri = build_initial(triangle_interior)
        fm = FaceMap.from_triangulation(tri)
        assert not any(fm.can_remove(e) for e in tri.interior_edges)
        assert not fm.can_remove((0, 1))

    def test_check_decomposition_reflex(self, triangle_interior):
        """Test a reflex face is reported."""
        decomposition = ConvexDecomposition(
            owner=triangle_interior,
            edges=frozenset({(0, 1), (1, 2), (0, 2), (0, 3), (1, 3)}),
            faces=((0, 1, 3), (0, 3, 1, 2)),
            removed=frozenset({(2, 3)}),
        )
        with pytest.raises(IdentityViolation):
            check_decomposition(decomposition)


class TestSeparability:
    """Test separable edges and the accounting identities."""

    def test_triangle_with_interior(self, triangle_interior):
        """Test the degree-3 interior vertex is counted once."""
        _, decomposition = greedy_ps_flippable(build_initial(triangle_interior))
        report = separability_report(decomposition)
        assert (report.v3, report.a, report.m_double, report.removed_count) == (1, 3, 0, 0)
        assert sorted(separable_edges(decomposition)[3]) == [0, 1, 2]
        assert is_separable(decomposition, 3, 0)

    def test_edge_not_in_decomposition(self, convex6_fan):
        """Test separability of a missing edge is an error."""
        _, decomposition = greedy_ps_flippable(convex6_fan)
        with pytest.raises(IdentityViolation):
            is_separable(decomposition, 0, 3)

    def test_low_flip_ledger(self, low_flip12):
        """Test the face and edge bounds are tight on the low-flip construction."""
        _, tri = low_flip12
        _, decomposition = greedy_ps_flippable(tri)
        diagnostics = decomposition_check(decomposition)
        assert diagnostics.removed == 4
        assert diagnostics.face_slack == 0
        assert diagnostics.edge_slack == 0
        assert diagnostics.identities_ok

    @pytest.mark.parametrize("seed", range(10))
    def test_identities_on_random_sets(self, seed):
        """Test every ledger identity on random initial triangulations."""
        ps = gen_random(10, 100 + seed)
        _, decomposition = greedy_ps_flippable(build_initial(ps))
        report = separability_report(decomposition)
        diagnostics = decomposition_check(decomposition, report)
        assert diagnostics.face_slack >= 0
        assert diagnostics.edge_slack >= 0
        assert diagnostics.removed_slack >= 0
        assert report.v3 + report.v40 + report.v41 + report.v42 == ps.n

    def test_bound_violation_reported(self, convex6):
        """Test a tampered report trips the removed-count bound."""
        _, decomposition = greedy_ps_flippable(build_initial(convex6))
        report = separability_report(decomposition).model_copy(update={"removed_count": 0})
        with pytest.raises(BoundViolation) as exc:
            decomposition_check(decomposition, report)
        assert exc.value.identity == "removed bound"
