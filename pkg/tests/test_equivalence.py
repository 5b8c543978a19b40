import random

import pytest

from wdag.digraph import (
    DimensionFunction,
    VWDigraph,
    dag_census,
    enumerate_acyclic,
    is_acyclic,
)
from wdag.equivalence import (
    OrbitBudgetError,
    count_equivalence_classes,
    facet_permutation_action,
    local_complement,
    orbit,
    permute_out_weights,
    reorder_vertices,
    sigma_k_local_complement,
    sigma_local_complement,
    standard_generators,
)
from wdag.gf2 import GF2Vector
from wdag.permutation import Permutation, all_permutations, reduce_top

SIGMA = Permutation.from_cycles(3, (1, 2, 3))


def graph(dims, edges):
    return VWDigraph(
        DimensionFunction(dims),
        {(i, j): GF2Vector.from_string(w) for i, j, w in edges},
    )


class TestWorkedExample:
    """Golden four-vertex example, checked edge for edge and bit for bit."""

    def test_sigma_local_complement(self, fig_graph):
        expected = graph(
            (2, 3, 3, 3),
            [
                (1, 2, "01"),
                (1, 3, "11"),
                (1, 4, "11"),
                (4, 3, "011"),
                (4, 2, "111"),
            ],
        )
        assert sigma_local_complement(fig_graph, 4, SIGMA) == expected

    def test_sigma_k_local_complement(self, fig_graph):
        expected = graph(
            (2, 3, 3, 3),
            [(1, 2, "01"), (1, 4, "11"), (4, 3, "011"), (4, 2, "100")],
        )
        assert sigma_k_local_complement(fig_graph, 4, SIGMA, 2) == expected

    def test_plain_lc_at_v4(self, fig_graph):
        # Same cross-pair effect as the sigma move, without relabeling
        # v4's out-weights.
        result = local_complement(fig_graph, 4)
        assert result.weight(1, 2).to_string() == "01"
        assert result.weight(1, 3).to_string() == "11"
        assert result.weight(4, 3).to_string() == "101"

    def test_matrix_action_matches(self, fig_graph):
        sigma_full = Permutation((4, 3, 1, 2))
        assert reduce_top(sigma_full) == SIGMA
        assert sigma_full(4) == 2
        assert facet_permutation_action(fig_graph, 4, sigma_full) == (
            sigma_k_local_complement(fig_graph, 4, SIGMA, 2)
        )


class TestLocalComplement:
    def test_no_in_or_out_neighbors(self):
        g = graph((2, 1), [(1, 2, "10")])
        assert local_complement(g, 2) == g  # no out-neighbors
        assert local_complement(g, 1) == g  # no in-neighbors

    def test_classical_involution_on_all_dags(self):
        omega = DimensionFunction.of(1, 1, 1)
        one = GF2Vector.all_ones(1)
        for edges in dag_census(3):
            g = VWDigraph(omega, {e: one for e in edges})
            for v in (1, 2, 3):
                assert local_complement(local_complement(g, v), v) == g

    def test_sigma_identity_reduces_to_plain(self, fig_graph):
        assert sigma_local_complement(fig_graph, 4, Permutation.identity(3)) == (
            local_complement(fig_graph, 4)
        )

    def test_isolated_vertex_fixed(self):
        g = graph((2, 1, 3), [(1, 2, "10")])
        assert sigma_local_complement(g, 3, Permutation.identity(3)) == g


class TestSigmaKMove:
    def test_unit_dimension_reduces_to_classical(self):
        omega = DimensionFunction.of(1, 1, 1)
        one = GF2Vector.all_ones(1)
        ident = Permutation.identity(1)
        for edges in dag_census(3):
            g = VWDigraph(omega, {e: one for e in edges})
            for v in (1, 2, 3):
                assert sigma_k_local_complement(g, v, ident, 1) == local_complement(g, v)

    def test_involution_exhaustive(self):
        omega = DimensionFunction.of(2, 2)
        for g in enumerate_acyclic(omega):
            for v in (1, 2):
                ident = Permutation.identity(2)
                for k in (1, 2):
                    once = sigma_k_local_complement(g, v, ident, k)
                    assert sigma_k_local_complement(once, v, ident, k) == g

    def test_argument_validation(self, fig_graph):
        with pytest.raises(ValueError):
            sigma_k_local_complement(fig_graph, 4, SIGMA, 4)
        with pytest.raises(ValueError):
            sigma_k_local_complement(fig_graph, 4, Permutation.identity(2), 1)
        with pytest.raises(ValueError):
            sigma_k_local_complement(fig_graph, 9, SIGMA, 1)


class TestMatrixActionOracle:
    def test_identity_fixes(self, fig_graph):
        ident = Permutation.identity(4)
        assert facet_permutation_action(fig_graph, 4, ident) == fig_graph

    @pytest.mark.parametrize("dims", [(1, 2), (2, 2)])
    def test_transposition_is_k_move(self, dims):
        omega = DimensionFunction(dims)
        for g in enumerate_acyclic(omega):
            for v in range(1, omega.m + 1):
                d = omega.dim(v)
                for k in range(1, d + 1):
                    sigma_full = Permutation.transposition(d + 1, k, d + 1)
                    assert facet_permutation_action(g, v, sigma_full) == (
                        sigma_k_local_complement(g, v, Permutation.identity(d), k)
                    )

    @pytest.mark.parametrize("dims", [(1, 2), (2, 2)])
    def test_full_contract(self, dims):
        omega = DimensionFunction(dims)
        for g in enumerate_acyclic(omega):
            for v in range(1, omega.m + 1):
                d = omega.dim(v)
                for sigma_full in all_permutations(d + 1):
                    bar = reduce_top(sigma_full)
                    if sigma_full(d + 1) == d + 1:
                        expected = permute_out_weights(g, v, bar)
                    else:
                        expected = sigma_k_local_complement(g, v, bar, sigma_full(d + 1))
                    assert facet_permutation_action(g, v, sigma_full) == expected

    def test_degree_validation(self, fig_graph):
        with pytest.raises(ValueError):
            facet_permutation_action(fig_graph, 4, Permutation.identity(3))

    def test_single_vertex_always_fixed(self):
        g = VWDigraph(DimensionFunction.of(2))
        for sigma_full in all_permutations(3):
            assert facet_permutation_action(g, 1, sigma_full) == g

    def test_right_action_composition_law(self):
        # Applying sigma then tau at one vertex equals one application of
        # sigma∘tau; this is what lets transpositions generate everything.
        omega = DimensionFunction.of(1, 2)
        for g in enumerate_acyclic(omega):
            for v in (1, 2):
                d = omega.dim(v)
                for sigma in all_permutations(d + 1):
                    for tau in all_permutations(d + 1):
                        step = facet_permutation_action(
                            facet_permutation_action(g, v, sigma), v, tau
                        )
                        assert step == facet_permutation_action(
                            g, v, sigma.compose(tau)
                        )

    def test_actions_at_distinct_vertices_commute(self):
        omega = DimensionFunction.of(1, 2)
        for g in enumerate_acyclic(omega):
            for sigma in all_permutations(2):
                for tau in all_permutations(3):
                    one = facet_permutation_action(
                        facet_permutation_action(g, 1, sigma), 2, tau
                    )
                    two = facet_permutation_action(
                        facet_permutation_action(g, 2, tau), 1, sigma
                    )
                    assert one == two


class TestReorderAndWeights:
    def test_identity_reorder(self, fig_graph):
        assert reorder_vertices(fig_graph, Permutation.identity(4)) == fig_graph

    def test_swap_isolated_same_dimension(self):
        g = graph((1, 2, 2), [(2, 1, "10")])
        # v3 is isolated; swapping the two dimension-2 vertices moves the edge.
        swapped = reorder_vertices(g, Permutation.transposition(3, 2, 3))
        assert swapped == graph((1, 2, 2), [(3, 1, "10")])
        empty = VWDigraph(DimensionFunction.of(1, 2, 2))
        assert reorder_vertices(empty, Permutation.transposition(3, 2, 3)) == empty

    def test_reorder_round_trip_random(self):
        rng = random.Random(7)
        omega = DimensionFunction.of(2, 1, 2, 1)
        graphs = [g for _, g in zip(range(40), enumerate_acyclic(omega))]
        mus = [
            Permutation.identity(4),
            Permutation.transposition(4, 1, 3),
            Permutation.transposition(4, 2, 4),
            Permutation.transposition(4, 1, 3).compose(
                Permutation.transposition(4, 2, 4)
            ),
        ]
        for _ in range(30):
            g = rng.choice(graphs)
            mu = rng.choice(mus)
            assert reorder_vertices(reorder_vertices(g, mu), mu.inverse()) == g

    def test_reorder_rejects_dimension_change(self, fig_graph):
        with pytest.raises(ValueError):
            reorder_vertices(fig_graph, Permutation.transposition(4, 1, 2))

    def test_permute_out_weights(self):
        g = graph((2, 1), [(1, 2, "10")])
        swap = Permutation.transposition(2, 1, 2)
        assert permute_out_weights(g, 1, swap) == graph((2, 1), [(1, 2, "01")])
        assert permute_out_weights(permute_out_weights(g, 1, swap), 1, swap) == g


class TestOrbits:
    def test_empty_graph_is_fixed(self):
        g = VWDigraph(DimensionFunction.of(1, 2))
        report = orbit(g, include_members=True)
        assert report.size == 1
        assert report.members == (g,)

    def test_single_edge_pair(self):
        g = graph((1, 1), [(1, 2, "1")])
        report = orbit(g, include_members=True)
        assert report.size == 2
        assert set(report.members) == {g, graph((1, 1), [(2, 1, "1")])}

    def test_zero_count_merging(self):
        # Weights (1,1) and (1,0) on the same edge: zero counts 0 and 1 sum
        # to dimension-1, so one orbit.
        a = graph((2, 3), [(1, 2, "11")])
        b = graph((2, 3), [(1, 2, "10")])
        report = orbit(a, include_members=True)
        assert b in report.members

    def test_canonical_is_lexicographic_least(self):
        g = graph((2, 2), [(1, 2, "11"), (1, 2, "11")][:1])
        report = orbit(g, include_members=True)
        assert report.canonical.serial == min(m.serial for m in report.members)

    def test_membership_symmetric(self):
        g = graph((1, 2), [(2, 1, "10")])
        for gen in standard_generators(g.omega):
            image = gen.apply(g)
            back = orbit(image, include_members=True)
            assert g in back.members

    def test_budget_error(self):
        g = graph((2, 3), [(1, 2, "11")])
        with pytest.raises(OrbitBudgetError) as err:
            orbit(g, budget=1)
        assert err.value.partial_size > 1

    def test_generators_preserve_acyclicity_spot(self):
        omega = DimensionFunction.of(2, 2)
        for g in enumerate_acyclic(omega):
            for gen in standard_generators(omega):
                assert is_acyclic(gen.apply(g))


class TestClassCounts:
    def test_two_vertex_counts(self):
        assert count_equivalence_classes(DimensionFunction.of(1, 1)) == 2
        assert count_equivalence_classes(DimensionFunction.of(1, 2)) == 3

    def test_invariance_under_dimension_permutation(self):
        assert count_equivalence_classes(
            DimensionFunction.of(1, 2)
        ) == count_equivalence_classes(DimensionFunction.of(2, 1))
        assert count_equivalence_classes(
            DimensionFunction.of(1, 1, 2)
        ) == count_equivalence_classes(DimensionFunction.of(2, 1, 1))

    def test_three_unit_vertices(self):
        # 25 graphs fall into 5 classes: empty, single edges, out-stars,
        # in-stars, paths with their chorded triangles.
        assert count_equivalence_classes(DimensionFunction.of(1, 1, 1)) == 5

    def test_four_unit_vertices_regression(self):
        # No closed form at four vertices; 19 is the frozen orbit count of
        # the 543 graphs, pinned to catch generator regressions.
        assert count_equivalence_classes(DimensionFunction.of(1, 1, 1, 1)) == 19

    def test_orbit_rejects_cyclic_input(self):
        g = VWDigraph(
            DimensionFunction.of(1, 1),
            {(1, 2): GF2Vector.all_ones(1), (2, 1): GF2Vector.all_ones(1)},
        )
        with pytest.raises(ValueError, match="acyclic"):
            orbit(g)
