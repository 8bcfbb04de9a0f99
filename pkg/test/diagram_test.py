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
from fractions import Fraction

import numpy as np

from linkforge.diagram.braid import BraidWord, braid_closure, parse_braid, \
    serialize_braid
from linkforge.diagram.catalog import catalog, catalog_names
from linkforge.diagram.pd import Diagram, components, from_json, \
    linking_matrix_mod2, mirror, parse_pd, serialize, switch, to_json
from linkforge.diagram.rational import continued_fraction, \
    evaluate_fraction, fraction_tangle, rational_tangle
from linkforge.diagram.tangle import identity_tangle, numerator, \
    denominator, parse_tangle, random_algebraic_tangle, serialize_tangle, \
    tangle_compose, tangle_glue, tangle_rotate, zero_tangle
from linkforge.errors import CatalogError, DiagramError, ParseError, \
    TangleError

TREFOIL = """
# trefoil
X 1 5 2 4
X 3 1 4 6
X 5 3 6 2
"""


class TestParsing(unittest.TestCase):
    def test_trefoil(self):
        d = parse_pd(TREFOIL)
        self.assertEqual(d.crossing_count(), 3)
        self.assertEqual(components(d), 1)

    def test_free_loop_only(self):
        d = parse_pd("O")
        self.assertEqual(d.crossing_count(), 0)
        self.assertEqual(components(d), 1)

    def test_empty_input(self):
        with self.assertRaises(ParseError):
            parse_pd("# nothing here\n")

    def test_free_loop_count_must_be_integer(self):
        for bad in ("a", None, [1]):
            with self.assertRaises(DiagramError):
                Diagram((), bad)
            with self.assertRaises(DiagramError):
                from_json({"crossings": [], "loops": bad or "x"})
        self.assertEqual(Diagram((), "2").free_loops_, 2)

    def test_label_used_three_times(self):
        with self.assertRaises(DiagramError):
            parse_pd("X 1 5 2 4\nX 3 1 4 6\nX 5 3 6 1")

    def test_malformed_record(self):
        with self.assertRaises(ParseError):
            parse_pd("X 1 2 3")
        with self.assertRaises(ParseError):
            parse_pd("Y 1 2 3 4")

    def test_round_trip(self):
        for name in ("3_1", "4_1", "9_49", "borromean", "T_3"):
            d = catalog(name)
            self.assertEqual(parse_pd(serialize(d)), d, name)
            self.assertEqual(from_json(to_json(d)), d, name)


class TestBraids(unittest.TestCase):
    def test_trefoil_closure(self):
        d = braid_closure(BraidWord(2, [1, 1, 1]))
        self.assertEqual(d.crossing_count(), 3)
        self.assertEqual(components(d), 1)

    def test_identity_braid(self):
        d = braid_closure(BraidWord(3, []))
        self.assertEqual(d.crossing_count(), 0)
        self.assertEqual(components(d), 3)

    def test_chen_braid(self):
        d = braid_closure(BraidWord(5, [1, 2, 3, 4] * 10))
        self.assertEqual(d.crossing_count(), 40)
        self.assertEqual(components(d), 5)

    def test_generator_range(self):
        with self.assertRaises(DiagramError):
            BraidWord(2, [2])

    def test_text(self):
        w = parse_braid("BR 3: 1 -2 1 -2")
        self.assertEqual(w, BraidWord(3, [1, -2, 1, -2]))
        self.assertEqual(parse_braid(serialize_braid(w)), w)

    def test_components_match_permutation(self):
        rng = random.Random(7)
        for _ in range(30):
            n = rng.randrange(1, 6)
            letters = [rng.choice([1, -1]) * rng.randrange(1, n)
                       for _ in range(rng.randrange(0, 9))] if n > 1 else []
            w = BraidWord(n, letters)
            self.assertEqual(components(braid_closure(w)), w.cycle_count())


class TestTransformations(unittest.TestCase):
    def test_mirror_involution(self):
        for name in ("unknot", "3_1", "8_16", "whitehead"):
            d = catalog(name)
            self.assertEqual(mirror(mirror(d)), d)

    def test_switch_involution(self):
        d = catalog("4_1")
        for c in d.crossings_:
            self.assertEqual(switch(switch(d, c.id_), c.id_), d)

    def test_linking_matrix(self):
        np.testing.assert_array_equal(linking_matrix_mod2(catalog("hopf")),
                                      [[0, 1], [1, 0]])
        np.testing.assert_array_equal(
            linking_matrix_mod2(catalog("borromean")), np.zeros((3, 3)))
        np.testing.assert_array_equal(linking_matrix_mod2(catalog("T_2")),
                                      np.zeros((2, 2)))
        with self.assertRaises(DiagramError):
            linking_matrix_mod2(catalog("3_1"))


class TestTangles(unittest.TestCase):
    def test_parse(self):
        t = parse_tangle("X 1 2 3 4\nB 1 2 3 4")
        self.assertEqual(t.n, 2)
        self.assertEqual(parse_tangle(serialize_tangle(t)), t)
        with self.assertRaises(ParseError):
            parse_tangle("X 1 2 3 4")

    def test_arity_mismatch(self):
        with self.assertRaises(TangleError):
            tangle_compose(identity_tangle(2), identity_tangle(3))

    def test_identity_composition(self):
        t = tangle_compose(identity_tangle(3), identity_tangle(3))
        self.assertEqual(t.n, 3)
        self.assertEqual(len(t.crossings_), 0)

    def test_rotation(self):
        t = rational_tangle([3])
        self.assertEqual(tangle_rotate(t, 4), t)
        self.assertEqual(tangle_rotate(tangle_rotate(t, 1), 3), t)

    def test_closures(self):
        self.assertEqual(components(numerator(zero_tangle())), 2)
        self.assertEqual(components(denominator(zero_tangle())), 1)
        self.assertEqual(components(numerator(rational_tangle([2]))), 2)
        self.assertEqual(components(numerator(rational_tangle([3]))), 1)

    def test_glue_with_identity(self):
        # the identity n-tangle glued to itself gives n circles
        d = tangle_glue(identity_tangle(3), identity_tangle(3))
        self.assertEqual(d.crossing_count(), 0)
        self.assertEqual(components(d), 3)

    def test_random_algebraic_tangles_are_valid(self):
        rng = random.Random(11)
        for _ in range(50):
            n = rng.randrange(2, 5)
            t = random_algebraic_tangle(rng, n, rng.randrange(1, 7))
            self.assertEqual(t.n, n)
            t.validate()


class TestRational(unittest.TestCase):
    def test_continued_fraction(self):
        self.assertEqual(continued_fraction(5, 2), [2, 2])
        self.assertEqual(continued_fraction(-5, 2), [-2, -2])
        self.assertEqual(continued_fraction(7, 1), [7])

    def test_evaluation(self):
        self.assertEqual(evaluate_fraction([2, 2]), Fraction(5, 2))
        self.assertEqual(evaluate_fraction([3, 1, 3]), Fraction(15, 4))
        for p, q in ((7, 3), (-11, 4), (13, 5)):
            self.assertEqual(evaluate_fraction(continued_fraction(p, q)),
                             Fraction(p, q))

    def test_fraction_tangle(self):
        self.assertEqual(len(fraction_tangle(5, 2).crossings_), 4)
        with self.assertRaises(TangleError):
            fraction_tangle(4, 2)


class TestCatalog(unittest.TestCase):
    def test_names(self):
        names = catalog_names()
        for name in ("unknot", "3_1", "4_1", "7_4", "8_8", "8_16", "9_40",
                     "9_49", "chen_braid", "parallel_borromean", "T_n"):
            self.assertIn(name, names)

    def test_trivial_links(self):
        for n in range(1, 6):
            d = catalog("T_%d" % n)
            self.assertEqual(d.crossing_count(), 0)
            self.assertEqual(components(d), n)

    def test_unknown(self):
        with self.assertRaises(CatalogError):
            catalog("10_161")
        with self.assertRaises(CatalogError):
            catalog("T_0")

    def test_every_entry_builds(self):
        for name in catalog_names():
            if name != "T_n":
                self.assertIsInstance(catalog(name), Diagram)


if __name__ == '__main__':
    unittest.main()
