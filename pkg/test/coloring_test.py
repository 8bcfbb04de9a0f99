# Copyright 2026, Linkforge authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


import random
import unittest

import numpy as np
import sympy

from linkforge.coloring import fp
from linkforge.coloring.fox import boundary_image, coloring_count_brute, \
    coloring_space, determinant, relation_matrix
from linkforge.coloring.snf import SmithForm, invariant_factors
from linkforge.diagram.braid import BraidWord, braid_closure
from linkforge.diagram.catalog import catalog
from linkforge.diagram.pd import linking_matrix_mod2
from linkforge.diagram.rational import rational_tangle
from linkforge.errors import ColoringError, MoveError
from linkforge.moves import reidemeister
from linkforge.moves.engine import apply
from linkforge.moves.model import Move, MoveSite
from linkforge.moves.sites import face_walk

DETERMINANTS = {"unknot": 1, "hopf": 2, "3_1": 3, "4_1": 5, "whitehead": 8,
                "7_4": 15, "8_8": 25, "8_16": 35, "9_40": 75, "9_49": 25,
                "borromean": 16, "closure_(σ1σ2)^6": 0, "T_2": 0, "T_4": 0}

SMALL = ("unknot", "hopf", "3_1", "4_1", "whitehead", "borromean", "T_3")


def triangles(d):
    emb = d.embedding_
    return [[emb.label(x) for x in face] for face in emb.faces()
            if len(face) == 3 and len({v for v, _ in face}) == 3]


def random_insertion_site(rng: random.Random, d):
    """ Two distinct edges on a common face, or None. """
    emb = d.embedding_
    e1 = rng.choice(d.labels())
    side = rng.randrange(2)
    start = emb.darts_of(e1)[side]
    others = sorted({emb.label(x) for x in face_walk(d, start)} - {e1})
    if not others:
        return None
    return MoveSite((e1, rng.choice(others)), side)


class TestSmithForm(unittest.TestCase):
    def test_against_sympy(self):
        rng = random.Random(3)
        for _ in range(40):
            n = rng.randrange(1, 6)
            m = [[rng.randrange(-9, 10) for _ in range(n)] for _ in range(n)]
            ours = invariant_factors(m)
            oracle = sympy.Matrix(m)
            self.assertEqual(len(ours), oracle.rank(), m)
            for a, b in zip(ours, ours[1:]):
                self.assertEqual(b % a, 0, m)
            det = abs(int(oracle.det()))
            if det:
                self.assertEqual(int(np.prod(ours, dtype=object)), det, m)
            entries = [x for row in m for x in row if x]
            if entries:
                self.assertEqual(ours[0], int(sympy.igcd(*entries))
                                 if len(entries) > 1 else abs(entries[0]))

    def test_transforms(self):
        m = np.array([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
        snf = SmithForm(m)
        d, left, right = snf.compute()
        np.testing.assert_array_equal(left.dot(m.astype(object)).dot(right),
                                      d)
        self.assertEqual(snf.diagonal(), [2, 6, 12])


class TestFp(unittest.TestCase):
    def test_nullspace(self):
        m = np.array([[1, 2, 0], [0, 0, 1]])
        basis = fp.nullspace(m, 5)
        self.assertEqual(basis.shape, (1, 3))
        self.assertFalse(np.any(m.dot(basis.T) % 5))

    def test_rank_and_contains(self):
        m = np.array([[1, 1], [2, 2]])
        self.assertEqual(fp.rank(m, 3), 1)
        self.assertTrue(fp.contains(fp.row_space(m, 3), [4, 4], 3))
        self.assertFalse(fp.contains(fp.row_space(m, 3), [1, 0], 3))


class TestColorings(unittest.TestCase):
    def test_trefoil(self):
        space = coloring_space(catalog("3_1"), 3)
        self.assertEqual(space.cardinality(), 9)
        self.assertEqual(space.dim, 2)

    def test_known_cardinalities(self):
        self.assertEqual(coloring_space(catalog("9_49"), 5).cardinality(),
                         125)
        self.assertEqual(coloring_space(catalog("4_1"), 5).cardinality(), 25)
        self.assertEqual(coloring_space(catalog("T_3"), 7).cardinality(),
                         343)
        self.assertEqual(coloring_space(catalog("unknot"), 4).cardinality(),
                         4)

    def test_composite_modulus(self):
        # H_1 of the double cover of 8_8 is Z_25
        space = coloring_space(catalog("8_8"), 25)
        self.assertEqual(sorted(space.cyclic_factors_), [25, 25])
        self.assertEqual(space.cardinality(), 625)

    def test_against_enumeration(self):
        for name in SMALL:
            d = catalog(name)
            for k in range(2, 8):
                self.assertEqual(coloring_space(d, k).cardinality(),
                                 coloring_count_brute(d, k), (name, k))

    def test_bad_modulus(self):
        with self.assertRaises(ColoringError):
            coloring_space(catalog("3_1"), 1)

    def test_mirror_keeps_colorings(self):
        from linkforge.diagram.pd import mirror
        d = catalog("3_1")
        self.assertEqual(coloring_space(mirror(d), 3).cardinality(), 9)

    def test_relation_rows(self):
        m = relation_matrix(catalog("3_1"))
        self.assertEqual(m.shape, (3, 3))
        np.testing.assert_array_equal(m.sum(axis=1), [0, 0, 0])


class TestDeterminant(unittest.TestCase):
    def test_catalog(self):
        for name, det in DETERMINANTS.items():
            self.assertEqual(determinant(catalog(name)), det, name)

    def test_consistent_with_colorings(self):
        for name, det in DETERMINANTS.items():
            if det == 0:
                continue
            d = catalog(name)
            for p in (3, 5, 7):
                dim = coloring_space(d, p).dim
                self.assertEqual(dim > 1, det % p == 0, (name, p))


class TestBoundaryImage(unittest.TestCase):
    def test_rational_tangle(self):
        image = boundary_image(rational_tangle([3]), 3)
        self.assertEqual(image.image_dim, 2)
        self.assertEqual(image.kernel_dim, 0)

    def test_prime_required(self):
        with self.assertRaises(ColoringError):
            boundary_image(rational_tangle([2]), 4)


class TestMoveInvariance(unittest.TestCase):
    def test_k_moves_keep_colorings(self):
        rng = random.Random(2024)
        names = ("3_1", "4_1", "whitehead", "borromean", "7_4")
        trials = 0
        while trials < 100:
            d = catalog(rng.choice(names))
            k = rng.choice((3, 4, 5, 7))
            site = random_insertion_site(rng, d)
            if site is None:
                continue
            moved = apply(d, Move('NMove', (rng.choice((k, -k)),), site))
            self.assertEqual(coloring_space(moved, k).cardinality_exponents_,
                             coloring_space(d, k).cardinality_exponents_)
            trials += 1

    def test_reidemeister_moves_keep_colorings(self):
        rng = random.Random(2025)
        pool = [catalog(name) for name in ("3_1", "4_1", "whitehead")]
        pool.append(braid_closure(BraidWord(3, [1, 2, 1])))
        pool.append(braid_closure(BraidWord(3, [1, -2, 1, 2])))
        done = {"R1": 0, "R2": 0, "R3": 0}
        while sum(done.values()) < 100:
            d = rng.choice(pool)
            kind = rng.choice(sorted(done))
            if kind == "R1":
                moved = reidemeister.r1_insert(d, rng.choice(d.labels()),
                                               rng.randrange(2),
                                               rng.choice((1, -1)))
            elif kind == "R2":
                site = random_insertion_site(rng, d)
                if site is None:
                    continue
                moved = apply(d, Move('R2+', (rng.randrange(2),), site))
            else:
                faces = triangles(d)
                if not faces:
                    continue
                try:
                    moved = reidemeister.r3(d, rng.choice(faces))
                except MoveError:
                    continue
            for k in (3, 4, 5, 7):
                self.assertEqual(
                    coloring_space(moved, k).cardinality_exponents_,
                    coloring_space(d, k).cardinality_exponents_, (kind, k))
            done[kind] += 1
            if moved.crossing_count() < 12:
                pool.append(moved)
        self.assertTrue(all(done.values()), done)

    def test_four_moves_keep_linking_parity(self):
        rng = random.Random(4)
        names = ("hopf", "whitehead", "borromean")
        trials = 0
        while trials < 100:
            d = catalog(rng.choice(names))
            site = random_insertion_site(rng, d)
            if site is None:
                continue
            moved = apply(d, Move('NMove', (rng.choice((4, -4)),), site))
            before = linking_matrix_mod2(d)
            after = linking_matrix_mod2(moved)
            self.assertEqual(before.shape, after.shape)
            # component order may change; compare the multiset of rows
            self.assertEqual(sorted(before.sum(axis=0).tolist()),
                             sorted(after.sum(axis=0).tolist()))
            self.assertEqual(int(before.sum()), int(after.sum()))
            trials += 1


if __name__ == '__main__':
    unittest.main()
