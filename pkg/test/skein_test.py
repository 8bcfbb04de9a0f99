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


import os
import random
import unittest

from linkforge.burnside.quotient import burnside_report
from linkforge.coloring.fox import coloring_space
from linkforge.diagram.catalog import catalog, catalog_names
from linkforge.diagram.pd import mirror
from linkforge.diagram.tangle import denominator, numerator
from linkforge.errors import BudgetExceededError, SkeinError
from linkforge.moves.engine import apply, move_tangle
from linkforge.moves.model import Move, MoveSite
from linkforge.moves.reidemeister import r1_insert
from linkforge.moves.sites import face_walk
from linkforge.skein import GoldenValue, LaurentPoly2, clear_cache, \
    decompose, eval_phi5, kauffman_framed, phi5_decomposition, \
    skein_quadruple, verify_double_twist_sign
from linkforge.skein.kauffman import GoldenRing, LaurentRing, SkeinEvaluator, \
    SkeinMemo

SMALL_KNOTS = ("3_1", "4_1", "hopf", "whitehead", "7_4")


def random_insertion_site(rng: random.Random, d):
    emb = d.embedding_
    e1 = rng.choice(d.labels())
    side = rng.randrange(2)
    walk = face_walk(d, emb.darts_of(e1)[side])
    others = sorted({emb.label(x) for x in walk} - {e1})
    if not others:
        return None
    return MoveSite((e1, rng.choice(others)), side)


def at_golden(f: LaurentPoly2) -> GoldenValue:
    """ Put ``a = 1`` and ``x = 2cos(2pi/5)`` into a Laurent polynomial. """
    x = GoldenValue(0, 1)
    out = GoldenValue(0, 0)
    for (_, j), c in f.terms_.items():
        out = out + c * x ** j
    return out


class TestGoldenValue(unittest.TestCase):
    def test_relation(self):
        x = GoldenValue(0, 1)
        self.assertEqual(x * x, GoldenValue(1, -1))
        self.assertEqual(GoldenValue.sqrt5() * GoldenValue.sqrt5(), 5)
        self.assertAlmostEqual(float(x), 0.6180339887, places=9)

    def test_inverse(self):
        x = GoldenValue(0, 1)
        self.assertEqual(x * x.inverse(), 1)
        self.assertEqual(x ** -3 * x ** 3, 1)
        with self.assertRaises(SkeinError):
            GoldenValue(2, 0).inverse()

    def test_decompose(self):
        self.assertEqual(decompose(GoldenValue(1, 0)), (1, 0))
        self.assertEqual(decompose(GoldenValue(-1, -2)), (-1, 1))
        self.assertEqual(decompose(GoldenValue(25, 0)), (1, 4))
        self.assertEqual(decompose(GoldenValue(-5, -10)), (-1, 3))
        for bad in (GoldenValue(2, 0), GoldenValue(0, 1), GoldenValue(0, 0)):
            with self.assertRaises(SkeinError):
                decompose(bad)


class TestLaurentPoly(unittest.TestCase):
    def test_arithmetic(self):
        a = LaurentPoly2.monomial(1, 0)
        x = LaurentPoly2.monomial(0, 1)
        self.assertEqual((a + 1) * (a - 1), a ** 2 - 1)
        self.assertEqual(a ** -2 * a ** 2, 1)
        self.assertTrue((x - x).is_zero())
        with self.assertRaises(ValueError):
            (a + x) ** -1

    def test_substitute_and_terms(self):
        f = LaurentPoly2({(1, 0): 2, (-1, 1): 3, (0, 0): -1})
        self.assertEqual(f.substitute_a(-1),
                         LaurentPoly2({(0, 0): -3, (0, 1): -3}))
        self.assertEqual(f.term_list(), [[-1, 1, 3], [0, 0, -1], [1, 0, 2]])


class TestKauffman(unittest.TestCase):
    def test_trivial_links(self):
        self.assertEqual(kauffman_framed(catalog("unknot")), 1)
        delta = LaurentPoly2({(1, -1): 1, (-1, -1): 1, (0, 0): -1})
        self.assertEqual(kauffman_framed(catalog("T_3")), delta ** 2)

    def test_empty_diagram(self):
        from linkforge.diagram.pd import Diagram
        with self.assertRaises(SkeinError):
            kauffman_framed(Diagram((), 0))

    def test_mirror_inverts_a(self):
        for name in SMALL_KNOTS:
            d = catalog(name)
            f = kauffman_framed(d)
            flipped = LaurentPoly2({(-i, j): c
                                    for (i, j), c in f.terms_.items()})
            self.assertEqual(kauffman_framed(mirror(d)), flipped, name)

    def test_curls_change_framing(self):
        d = catalog("3_1")
        f = kauffman_framed(d)
        for sign in (1, -1):
            for side in (0, 1):
                curled = r1_insert(d, d.labels()[0], side, sign)
                self.assertEqual(kauffman_framed(curled),
                                 f * LaurentPoly2.monomial(sign, 0))

    def test_skein_relation(self):
        x = LaurentPoly2.monomial(0, 1)
        for name in ("3_1", "4_1", "whitehead"):
            d = catalog(name)
            for c in d.crossings_:
                q = skein_quadruple(d, c.id_)
                self.assertEqual(
                    kauffman_framed(q.plus) + kauffman_framed(q.minus),
                    x * (kauffman_framed(q.zero) +
                         kauffman_framed(q.infinity)), (name, c.id_))

    def test_matches_golden_evaluation(self):
        for name in SMALL_KNOTS + ("borromean", "8_8"):
            d = catalog(name)
            self.assertEqual(at_golden(kauffman_framed(d)), eval_phi5(d),
                             name)

    def test_memo_evicts_least_recent(self):
        memo = SkeinMemo(limit=2)
        memo.put("a", 1)
        memo.put("b", 2)
        self.assertEqual(memo.get("a"), 1)
        memo.put("c", 3)
        self.assertEqual(len(memo), 2)
        self.assertNotIn("b", memo)
        self.assertEqual((memo.get("a"), memo.get("c")), (1, 3))
        self.assertIsNone(memo.get("b"))

    def test_bounded_memo_keeps_values(self):
        for ring, name in ((LaurentRing, "7_4"), (GoldenRing, "8_8")):
            d = catalog(name)
            memo = SkeinMemo(limit=3)
            small = SkeinEvaluator(ring, memo).evaluate(d)
            self.assertLessEqual(len(memo), 3)
            self.assertEqual(small, SkeinEvaluator(ring).evaluate(d), name)
            self.assertEqual(SkeinEvaluator(ring, memo).evaluate(d), small)

    def test_memo_limit_from_environment(self):
        old = os.environ.get("LINKFORGE_MEMO_LIMIT")
        os.environ["LINKFORGE_MEMO_LIMIT"] = "4"
        try:
            memo = SkeinMemo()
            evaluator = SkeinEvaluator(GoldenRing, memo)
            for name in SMALL_KNOTS + ("9_40",):
                evaluator.evaluate(catalog(name))
                self.assertLessEqual(len(memo), 4, name)
        finally:
            if old is None:
                del os.environ["LINKFORGE_MEMO_LIMIT"]
            else:
                os.environ["LINKFORGE_MEMO_LIMIT"] = old

    def test_node_budget(self):
        old = os.environ.get("LINKFORGE_NODE_BUDGET")
        os.environ["LINKFORGE_NODE_BUDGET"] = "1"
        try:
            clear_cache()
            with self.assertRaises(BudgetExceededError):
                eval_phi5(catalog("4_1"))
        finally:
            if old is None:
                del os.environ["LINKFORGE_NODE_BUDGET"]
            else:
                os.environ["LINKFORGE_NODE_BUDGET"] = old
            clear_cache()


class TestGoldenInvariant(unittest.TestCase):
    def test_known_values(self):
        self.assertEqual(eval_phi5(catalog("unknot")), 1)
        self.assertEqual(eval_phi5(catalog("3_1")), GoldenValue(-1, 0))
        self.assertEqual(eval_phi5(catalog("4_1")), GoldenValue(-1, -2))
        self.assertEqual(eval_phi5(catalog("9_49")), GoldenValue(-5, 0))
        self.assertEqual(phi5_decomposition(catalog("9_49")), (-1, 2))

    def test_trivial_links(self):
        for n in range(1, 6):
            self.assertEqual(eval_phi5(catalog("T_%d" % n)),
                             GoldenValue.sqrt5() ** (n - 1))

    def test_five_colorings(self):
        # |Col_5| = 5 F^2 for every link
        for name in catalog_names():
            if name == "T_n":
                continue
            d = catalog(name)
            if d.crossing_count() > 12:
                continue
            f = eval_phi5(d)
            col = coloring_space(d, 5).cardinality()
            self.assertEqual(5 * f * f, GoldenValue(col, 0), name)
            self.assertEqual(col, 5 ** (decompose(f).lambda_ + 1), name)

    def test_two_two_moves_change_sign(self):
        rng = random.Random(55)
        trials = 0
        while trials < 100:
            d = catalog(rng.choice(SMALL_KNOTS))
            site = random_insertion_site(rng, d)
            if site is None:
                continue
            variant, params = rng.choice([('SQMove', (2, 2)),
                                          ('SQMove', (-2, -2)),
                                          ('RationalMove', (5, 2)),
                                          ('RationalMove', (-5, 2))])
            moved = apply(d, Move(variant, params, site))
            self.assertEqual(eval_phi5(moved), -eval_phi5(d),
                             (variant, params, site))
            trials += 1

    def test_five_moves_keep_value(self):
        rng = random.Random(8)
        trials = 0
        while trials < 20:
            d = catalog(rng.choice(SMALL_KNOTS))
            site = random_insertion_site(rng, d)
            if site is None:
                continue
            n = rng.choice((5, -5))
            moved = apply(d, Move('NMove', (n,), site))
            self.assertEqual(eval_phi5(moved), eval_phi5(d))
            trials += 1

    def test_square_move_is_rational_move(self):
        for s in (-3, -2, -1, 1, 2, 3):
            for q in (-3, -2, -1, 1, 2, 3):
                square = move_tangle(Move('SQMove', (s, q)))
                fraction = move_tangle(Move('RationalMove', (s * q + 1, q)))
                for closure in (numerator, denominator):
                    a, b = closure(square), closure(fraction)
                    self.assertEqual(eval_phi5(a), eval_phi5(b), (s, q))
                    for m in range(2, 14):
                        self.assertEqual(
                            coloring_space(a, m).cardinality_exponents_,
                            coloring_space(b, m).cardinality_exponents_,
                            (s, q, m))
                    for p in (3, 5):
                        self.assertEqual(burnside_report(a, p).dims,
                                         burnside_report(b, p).dims,
                                         (s, q, p))
                if s > 1 and q > 1:
                    self.assertEqual(square.code(), fraction.code())

    def test_double_twist_sign_on_random_sites(self):
        rng = random.Random(31)
        checked = 0
        while checked < 20:
            d = catalog(rng.choice(SMALL_KNOTS))
            site = random_insertion_site(rng, d)
            if site is None:
                continue
            report = verify_double_twist_sign(d, site)
            self.assertTrue(report.holds, site)
            self.assertEqual(report.constant, -1)
            checked += 1


if __name__ == '__main__':
    unittest.main()
