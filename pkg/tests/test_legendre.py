#!/usr/bin/env python
import os
import unittest
import sys
from itertools import combinations

from test_common import TestCommon

sys.path.append(os.path.join(os.path.dirname(__file__), '..', 'library'))
from cyclohedron_common import CyclohedronDomainError, CyclohedronUnsupportedScaleError, CyclohedronValidationError
from legendre import (LatticeFace, affine_rank, common_face, coned_facet_volume, enumerate_faces, enumerate_facets,
                      face_facets, incidence_is_totally_unimodular, is_simplex_set, maximal_faces_containing, origin,
                      positive_vertices, simplex_normalized_volume, vertex_coordinates)
from representation import Arrow, all_arrows
from simion import enumerate_faces as enumerate_noncrossing_faces


class TestLatticeFace(TestCommon):

    def test_lattice_face_validation(self):
        with self.assertRaises(CyclohedronValidationError):
            LatticeFace(2, {1}, set())
        with self.assertRaises(CyclohedronValidationError):
            LatticeFace(2, {1, 2}, {2})
        with self.assertRaises(CyclohedronValidationError):
            LatticeFace(2, {1}, {4})

    def test_lattice_face_shape(self):
        square = LatticeFace(3, {1, 2}, {3, 4})
        self.assertEqual(square.dimension, 2)
        self.assertTrue(square.is_facet)
        self.assertFalse(square.is_simplex)
        self.assertEqual(len(square.arrows()), 4)
        self.assertEqual(LatticeFace.from_json(3, square.to_json()), square)

    def test_vertex_coordinates(self):
        self.assertEqual(vertex_coordinates(Arrow(2, 2, 1)), (1, -1, 0))
        self.assertEqual(vertex_coordinates(Arrow(2, 1, 3)), (-1, 0, 1))

    def test_positive_vertices_are_backward(self):
        self.assertEqual(len(positive_vertices(4)), 10)


class TestFaceLattice(TestCommon):

    def test_vertices_and_facets_of_the_hexagon(self):
        self.assertEqual(len(list(enumerate_faces(2, 0))), 6)
        self.assertEqual(len(list(enumerate_facets(2))), 6)

    def test_facets_of_p3(self):
        facets = list(enumerate_facets(3))
        self.assertEqual(len(facets), 14)
        self.assertEqual(len([f for f in facets if len(f.I) == 2]), 6)

    def test_dimension_out_of_range(self):
        with self.assertRaises(CyclohedronDomainError):
            list(enumerate_faces(3, 3))

    def test_face_facets(self):
        self.assertEqual(set(face_facets(LatticeFace(3, {1, 2}, {3}))),
                         {LatticeFace(3, {1}, {3}), LatticeFace(3, {2}, {3})})
        self.assertEqual(len(face_facets(LatticeFace(3, {1, 2}, {3, 4}))), 4)
        with self.assertRaises(CyclohedronDomainError):
            face_facets(LatticeFace(3, {1}, {2}))

    def test_face_dimension_is_the_affine_rank(self):
        for n in range(1, 5):
            for face in enumerate_faces(n):
                points = [vertex_coordinates(a) for a in face.arrows()]
                self.assertEqual(affine_rank(points), face.dimension, face)

    def test_face_lattice_is_centrally_symmetric(self):
        for n in range(1, 5):
            faces = set(enumerate_faces(n))
            self.assertEqual({f.opposite() for f in faces}, faces)
            for face in faces:
                self.assertEqual(face.opposite().dimension, face.dimension)
                self.assertEqual({Arrow(n, a.head, a.tail) for a in face.arrows()}, face.opposite().arrows())

    def test_facet_count(self):
        for n in range(1, 6):
            self.assertEqual(len(list(enumerate_facets(n))), 2 ** (n + 1) - 2)

    def test_face_facets_match_a_subface_scan(self):
        for n in range(1, 5):
            faces = list(enumerate_faces(n))
            for face in faces:
                if face.dimension < 1:
                    continue
                scanned = {g for g in faces if g.dimension == face.dimension - 1 and g.arrows() <= face.arrows()}
                self.assertEqual(set(face_facets(face)), scanned, face)

    def test_maximal_faces_containing(self):
        faces = maximal_faces_containing(Arrow(2, 2, 1), 2)
        self.assertEqual(set(faces), {LatticeFace(2, {2}, {1, 3}), LatticeFace(2, {2, 3}, {1})})
        self.assertEqual(len(maximal_faces_containing(Arrow(3, 4, 1), 3)), 4)

    def test_common_face(self):
        self.assertEqual(common_face([Arrow(3, 1, 3), Arrow(3, 2, 3)]), LatticeFace(3, {1, 2}, {3}))
        self.assertIsNone(common_face([Arrow(3, 1, 2), Arrow(3, 2, 3)]))

    def test_common_face_is_the_smallest_face(self):
        for n in range(1, 5):
            faces = list(enumerate_faces(n))
            arrows = all_arrows(n)
            for size in range(1, 4):
                for chosen in combinations(arrows, size):
                    tails = {a.tail for a in chosen}
                    heads = {a.head for a in chosen}
                    face = common_face(chosen)
                    if tails & heads:
                        self.assertIsNone(face, chosen)
                        self.assertFalse(any(set(chosen) <= f.arrows() for f in faces))
                        continue
                    self.assertEqual((face.I, face.J), (tails, heads))
                    for f in faces:
                        if set(chosen) <= f.arrows():
                            self.assertTrue(face.arrows() <= f.arrows())


class TestSimplices(TestCommon):

    def test_is_simplex_set(self):
        self.assertTrue(is_simplex_set(self.arrows(3, [(1, 2), (3, 2), (3, 4)])))
        self.assertFalse(is_simplex_set(self.arrows(3, [(1, 3), (1, 4), (2, 3), (2, 4)])))
        self.assertTrue(is_simplex_set([]))

    def test_antiparallel_arrows_are_a_cycle(self):
        self.assertFalse(is_simplex_set(self.arrows(2, [(1, 2), (2, 1)])))

    def test_normalized_volume(self):
        points = [origin(2), vertex_coordinates(Arrow(2, 2, 1)), vertex_coordinates(Arrow(2, 3, 1))]
        self.assertEqual(simplex_normalized_volume(points), 1)
        degenerate = [origin(2), vertex_coordinates(Arrow(2, 2, 1)), vertex_coordinates(Arrow(2, 2, 1))]
        self.assertEqual(simplex_normalized_volume(degenerate), 0)

    def test_normalized_volume_checks_input(self):
        with self.assertRaises(CyclohedronDomainError):
            simplex_normalized_volume([origin(2)])
        with self.assertRaises(CyclohedronDomainError):
            simplex_normalized_volume([(1, 0, 0), (0, 1, 0), (0, 0, 1)])

    def test_affine_rank(self):
        self.assertEqual(affine_rank([origin(2), (1, -1, 0), (2, -2, 0)]), 1)

    def test_associahedron_facets_are_unimodular(self):
        for n in range(1, 6):
            for facet in enumerate_noncrossing_faces(n, n - 1):
                self.assertEqual(coned_facet_volume(facet), 1, sorted(facet))


class TestTotalUnimodularity(TestCommon):

    def test_incidence_matrix_is_totally_unimodular(self):
        for n in range(1, 4):
            self.assertTrue(incidence_is_totally_unimodular(n))

    def test_scale_gate(self):
        with self.assertRaises(CyclohedronUnsupportedScaleError):
            incidence_is_totally_unimodular(4)


if __name__ == '__main__':
    unittest.main()
