import random

import pytest

from posetfano import (
    DegenerateInput,
    OriginOnHyperplane,
    Walk,
    WalkNotEligible,
    build_vertex_set,
    det_fraction_free,
    enumerate_facets,
    is_fano,
    is_gorenstein,
    is_simplicial,
    is_smooth_geometric,
    is_terminal,
    witness_hyperplane,
)
from conftest import antichain, chain
from oracles import cofactor_det, qhull_exact_facets

CROSS2 = [(-1, 0), (1, 0), (0, -1), (0, 1)]


def facet_set(points):
    return {(f.normal, f.offset) for f in enumerate_facets(points)}


class TestDeterminant:
    def test_small_cases(self):
        assert det_fraction_free([[5]]) == 5
        assert det_fraction_free([[1, 2], [3, 4]]) == -2
        assert det_fraction_free([[1, 0], [0, 1]]) == 1

    def test_agrees_with_cofactor_expansion(self):
        rng = random.Random(29)
        for _ in range(300):
            n = rng.randint(1, 4)
            m = [[rng.choice((-1, 0, 1)) for _ in range(n)] for _ in range(n)]
            assert det_fraction_free(m) == cofactor_det(m)

    def test_singular(self):
        assert det_fraction_free([[1, 1], [1, 1]]) == 0
        assert det_fraction_free([[0, 0, 0], [1, 2, 3], [4, 5, 6]]) == 0


class TestEnumerateFacets:
    def test_antichain2(self):
        vs = build_vertex_set(antichain(2).hat())
        assert facet_set(vs.vectors) == {
            ((1, 1), 1), ((1, -1), 1), ((-1, 1), 1), ((-1, -1), 1)
        }

    def test_chain2_simplex(self):
        vs = build_vertex_set(chain(2).hat())
        facets = enumerate_facets(vs.vectors)
        assert len(facets) == 3
        assert all(f.offset == 1 for f in facets)

    def test_example_poset_offsets_and_qhull_agreement(self, two_chain_plus_point):
        vs = build_vertex_set(two_chain_plus_point.hat())
        facets = enumerate_facets(vs.vectors)
        assert all(f.offset == 1 for f in facets)
        qh = qhull_exact_facets(vs.vectors)
        assert {(f.normal, f.offset): f.incident for f in facets} == qh

    def test_self_consistency(self, v_poset, diamond):
        for p in (v_poset, diamond):
            vs = build_vertex_set(p.hat())
            for f in enumerate_facets(vs.vectors):
                for k, pt in enumerate(vs.vectors):
                    val = sum(a * x for a, x in zip(f.normal, pt))
                    assert val <= f.offset
                    assert (val == f.offset) == (k in f.incident)
                assert len(f.incident) >= p.d

    def test_degenerate_input(self):
        with pytest.raises(DegenerateInput):
            enumerate_facets([(0, 0), (1, 1), (2, 2)])
        with pytest.raises(DegenerateInput):
            enumerate_facets([(1, 0)])

    def test_origin_on_hyperplane(self):
        with pytest.raises(OriginOnHyperplane):
            enumerate_facets([(0, 0), (1, 0), (0, 1)])


class TestIsFano:
    def test_segment(self):
        assert is_fano([(-1,), (1,)])

    def test_poset_polytopes(self, chain3, v_poset, diamond):
        for p in (chain3, v_poset, diamond):
            vs = build_vertex_set(p.hat())
            assert is_fano(vs.vectors)

    def test_shifted_triangle_not_fano(self):
        # (1,0) is a second interior lattice point of this hull
        assert is_fano([(1, 0), (0, 1), (-1, -1)])
        assert not is_fano([(2, 0), (0, 1), (-1, -1)])

    def test_origin_on_boundary_not_fano(self):
        assert not is_fano([(0, 0), (1, 0), (0, 1)])


class TestIsTerminal:
    def test_cross(self):
        assert is_terminal(CROSS2)

    def test_segment(self):
        assert is_terminal([(-1,), (1,)])

    def test_square_with_midpoints(self):
        # (0,1) lies on an edge of the big square without being a vertex
        assert not is_terminal([(1, 1), (1, -1), (-1, 1), (-1, -1)])

    def test_long_segment(self):
        assert not is_terminal([(-2,), (1,)])


class TestIsGorenstein:
    def test_cross(self):
        assert is_gorenstein(enumerate_facets(CROSS2))

    def test_triangle_with_unit_offsets(self):
        # all three facets have primitive offset 1: x+y=1, -x+y=1, x-3y=1
        facets = enumerate_facets([(1, 0), (0, 1), (-2, -1)])
        assert {(f.normal, f.offset) for f in facets} == {
            ((1, 1), 1), ((-1, 1), 1), ((1, -3), 1)
        }
        assert is_gorenstein(facets)

    def test_triangle_with_offset_three(self):
        facets = enumerate_facets([(1, 0), (0, 1), (-1, -3)])
        assert any(f.offset != 1 for f in facets)
        assert not is_gorenstein(facets)


class TestSimplicialAndSmooth:
    def test_chain_simplex_smooth(self, chain3):
        vs = build_vertex_set(chain3.hat())
        facets = enumerate_facets(vs.vectors)
        assert is_simplicial(facets)
        assert is_smooth_geometric(vs.vectors, facets)

    def test_antichain_smooth(self):
        facets = enumerate_facets(CROSS2)
        assert is_simplicial(facets)
        assert is_smooth_geometric(CROSS2, facets)

    def test_v_poset_not_simplicial(self, v_poset):
        vs = build_vertex_set(v_poset.hat())
        facets = enumerate_facets(vs.vectors)
        assert not is_simplicial(facets)
        assert not is_smooth_geometric(vs.vectors, facets)
        assert max(len(f.incident) for f in facets) == 4

    def test_simplicial_but_not_smooth(self):
        # unimodularity genuinely cuts: this simplex has facet det 2
        points = [(1, 0), (0, 1), (-1, -2)]
        facets = enumerate_facets(points)
        assert is_simplicial(facets)
        assert any(abs(det_fraction_free([points[k] for k in f.incident])) != 1
                   for f in facets)
        assert not is_smooth_geometric(points, facets)


class TestWitnessHyperplane:
    def check_witness(self, p, walk):
        h = p.hat()
        hp = witness_hyperplane(h, walk)
        assert hp.offset == 1
        vs = build_vertex_set(h)
        from posetfano.polytope import edge_vector
        walk_vecs = [edge_vector(h, e) for e in walk.edge_pairs()]
        for v in walk_vecs:
            assert sum(a * x for a, x in zip(hp.normal, v)) == 1
        for v in vs.vectors:
            assert sum(a * x for a, x in zip(hp.normal, v)) <= 1
        return hp

    def test_diamond_cycle(self, diamond):
        walk = Walk.from_elements(diamond.hat(), (1, 2, 4, 3), "cycle")
        self.check_witness(diamond, walk)

    def test_v_poset_cycle(self, v_poset):
        # cycle through the top: the top's level pins the base value
        walk = Walk.from_elements(v_poset.hat(), (1, 2, 4, 3), "cycle")
        self.check_witness(v_poset, walk)

    def test_lambda_poset_cycle(self, lambda_poset):
        # cycle through the bottom: the bottom's level pins the base value
        h = lambda_poset.hat()
        walk = Walk.from_elements(h, (0, 2, 1, 3), "cycle")
        assert 0 in walk.elements
        self.check_witness(lambda_poset, walk)

    def test_zigzag_path(self, zigzag7):
        h = zigzag7.hat()
        walk = Walk.from_elements(h, (0, 1, 2, 3, 4, 5, 6, 7, 8), "path")
        self.check_witness(zigzag7, walk)

    def test_all_up_path_rejected(self, chain3):
        h = chain3.hat()
        walk = Walk.from_elements(h, (0, 1, 2, 3, 4), "path")
        with pytest.raises(WalkNotEligible):
            witness_hyperplane(h, walk)

    def test_unbalanced_cycle_rejected(self, broom6):
        h = broom6.hat()
        # odd cycle through the pendant maximal: never balanced
        walk = Walk.from_elements(h, (1, 2, 3, 7, 6), "cycle")
        with pytest.raises(WalkNotEligible):
            witness_hyperplane(h, walk)

    def test_cycle_failing_gaps_rejected(self, broom6):
        h = broom6.hat()
        walk = Walk.from_elements(h, (1, 2, 3, 7, 4, 5), "cycle")
        with pytest.raises(WalkNotEligible):
            witness_hyperplane(h, walk)
