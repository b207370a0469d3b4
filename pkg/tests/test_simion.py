#!/usr/bin/env python
import os
import unittest
import sys
from math import comb

from test_common import TestCommon

sys.path.append(os.path.join(os.path.dirname(__file__), '..', 'library'))
from cyclohedron_common import CyclohedronInvariantError, CyclohedronUnsupportedScaleError, CyclohedronValidationError
from pulling import SimplicialComplex, minimal_nonfaces
from representation import Arrow
from simion import (FaceVector, compatibility_graph, diameter_arrow, enumerate_faces, enumerate_facets, f_vector,
                    facet_type, facets_by_type, h_from_f, h_vector, is_face, is_facet, link_of_diameter,
                    satisfies_facet_conditions)


class TestFaces(TestCommon):

    def test_example_digraph_is_a_face(self):
        self.assertTrue(is_face(self.arrows(10, self.EXAMPLE_ARROWS)))
        self.assertTrue(is_face([]))
        self.assertFalse(is_face(self.arrows(3, [(1, 3), (2, 4)])))

    def test_faces_of_the_segment(self):
        faces = list(enumerate_faces(1))
        self.assertEqual(faces[0], frozenset())
        self.assertEqual(set(faces), {frozenset(), self.arrows(1, [(2, 1)]), self.arrows(1, [(1, 2)])})
        self.assertEqual(len(faces), 3)

    def test_facet_count(self):
        self.assertEqual(len(list(enumerate_faces(3, 2))), 20)
        for n in range(1, 7):
            self.assertEqual(len(list(enumerate_facets(n))), comb(2 * n, n))

    def test_compatibility_graph(self):
        graph = compatibility_graph(2)
        self.assertEqual(graph.number_of_nodes(), 6)
        self.assertEqual(graph.number_of_edges(), 6)

    def test_complex_is_flag(self):
        for n in range(1, 6):
            complex_ = SimplicialComplex(enumerate_facets(n), n)
            self.assertTrue(all(len(s) == 2 for s in minimal_nonfaces(complex_)), n)
            self.assertTrue(complex_.is_pure())


class TestFacets(TestCommon):

    def test_facet_examples(self):
        self.assertTrue(is_facet(self.arrows(2, [(1, 2), (3, 2)])))
        self.assertTrue(is_facet(self.arrows(2, [(3, 1), (2, 1)])))
        self.assertFalse(is_facet(self.arrows(2, [(1, 2), (2, 1)])))
        self.assertFalse(is_facet(self.arrows(3, [(4, 1)])))

    def test_facet_type(self):
        self.assertEqual(facet_type(self.arrows(2, [(3, 1), (2, 1)])), 1)
        self.assertEqual(facet_type(self.arrows(2, [(1, 2), (3, 2)])), 2)

    def test_facet_type_rejects_non_facets(self):
        with self.assertRaises(CyclohedronInvariantError):
            facet_type(self.arrows(10, self.EXAMPLE_ARROWS))
        with self.assertRaises(CyclohedronInvariantError):
            facet_type([])

    def test_every_facet_has_one_diameter_and_satisfies_the_conditions(self):
        for n in range(1, 7):
            for facet in enumerate_facets(n):
                self.assertEqual(len([k for k in range(1, n + 2) if diameter_arrow(k, n) in facet]), 1)
                self.assertTrue(satisfies_facet_conditions(facet), sorted(facet))

    def test_conditions_reject_non_facets(self):
        self.assertFalse(satisfies_facet_conditions(self.arrows(2, [(1, 2), (2, 1)])))
        self.assertFalse(satisfies_facet_conditions(self.arrows(3, [(4, 1), (1, 3), (2, 3)])))

    def test_type_one_facets_are_backward(self):
        for n in range(1, 7):
            for facet in facets_by_type(n)[1]:
                self.assertTrue(all(a.backward for a in facet))

    def test_type_classes_are_catalan(self):
        for n in range(1, 7):
            sizes = {len(c) for c in facets_by_type(n).values()}
            self.assertEqual(sizes, {self.CATALAN[n]})

    def test_link_of_a_diameter(self):
        link = link_of_diameter(1, 3)
        self.assertEqual(len(link), 5)
        self.assertTrue(all(len(f) == 2 for f in link))

    def test_diameter_arrow(self):
        self.assertEqual(diameter_arrow(1, 4), Arrow(4, 5, 1))
        self.assertEqual(diameter_arrow(3, 4), Arrow(4, 2, 3))


class TestFaceVectors(TestCommon):

    def test_formula(self):
        self.assertEqual(f_vector(3).proper, (12, 30, 20))
        self.assertEqual(f_vector(2).proper, (6, 6))
        self.assertEqual(f_vector(3).total, 63)
        self.assertEqual(f_vector(6).f(5), 924)

    def test_enumerated_matches_formula(self):
        for n in range(1, 7):
            self.assertEqual(f_vector(n, 'enumerated'), f_vector(n, 'formula'))

    def test_enumeration_gate(self):
        with self.assertRaises(CyclohedronUnsupportedScaleError):
            f_vector(8, 'enumerated')
        with self.assertRaises(CyclohedronValidationError):
            f_vector(3, 'guess')

    def test_face_vector_validation(self):
        with self.assertRaises(CyclohedronValidationError):
            FaceVector(2, (2, 6, 6))

    def test_h_vector(self):
        self.assertEqual(h_vector(3), (1, 9, 9, 1))
        self.assertEqual(h_vector(1), (1, 1))
        self.assertEqual(h_from_f((1, 12, 30, 20)), (1, 9, 9, 1))
        for n in range(1, 7):
            self.assertEqual(h_vector(n, 'from_f'), h_vector(n, 'formula'))
            self.assertEqual(h_vector(n, 'enumerated'), h_vector(n, 'formula'))
            self.assertEqual(sum(h_vector(n)), comb(2 * n, n))


if __name__ == '__main__':
    unittest.main()
