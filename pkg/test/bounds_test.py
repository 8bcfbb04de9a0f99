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


import unittest
from fractions import Fraction

from linkforge.bounds import bound_report, certificate_bound, \
    distance_bound, parity_bound, quadruple_consistency, report_to_json, \
    wendt_bound
from linkforge.coloring.fox import coloring_space, determinant
from linkforge.diagram.catalog import catalog
from linkforge.diagram.pd import self_writhe, switch
from linkforge.diagram.rational import evaluate_fraction
from linkforge.errors import BoundsError
from linkforge.moves.certificate import five_move_certificate, \
    two_two_certificate, verify_certificate
from linkforge.moves.model import Move, MoveSite
from linkforge.skein import LaurentPoly2, eval_phi5, kauffman_framed, \
    phi5_decomposition

KNOTS = ("unknot", "3_1", "4_1", "7_4", "8_8", "9_40", "9_49")


def unframed(d):
    return kauffman_framed(d) * LaurentPoly2.monomial(-self_writhe(d), 0)


class TestFormulas(unittest.TestCase):
    def test_certificate_bound(self):
        self.assertEqual(certificate_bound(2, 4), 2)
        self.assertEqual(certificate_bound(2, 0), 2)
        self.assertEqual(certificate_bound(2, 1), 1)
        self.assertEqual(certificate_bound(1, 1), 1)
        self.assertEqual(certificate_bound(3, 2), 2)

    def test_knot_bounds(self):
        self.assertEqual(wendt_bound(catalog("9_49")), 2)
        self.assertEqual(parity_bound(catalog("9_49")), 3)
        self.assertEqual(parity_bound(catalog("3_1")), 1)
        self.assertEqual(parity_bound(catalog("4_1")), 1)
        self.assertEqual(parity_bound(catalog("unknot")), 0)

    def test_distance(self):
        self.assertEqual(distance_bound(catalog("3_1"), catalog("4_1")), 2)
        self.assertEqual(distance_bound(catalog("unknot"), catalog("4_1")), 1)
        self.assertEqual(distance_bound(catalog("4_1"), catalog("unknot")), 1)
        self.assertEqual(distance_bound(catalog("9_49"), catalog("9_49")), 0)

    def test_links_rejected(self):
        for name in ("hopf", "borromean"):
            with self.assertRaises(BoundsError):
                wendt_bound(catalog(name))
            with self.assertRaises(BoundsError):
                parity_bound(catalog(name))


class TestReports(unittest.TestCase):
    def test_nine_49(self):
        report = bound_report(catalog("9_49"), "9_49")
        self.assertEqual(report.best, 3)
        self.assertEqual([b.source for b in report.bounds],
                         ["wendt", "parity"])
        obj = report_to_json(report)
        self.assertEqual(obj["subject"], "9_49")
        self.assertEqual(obj["bounds"][1],
                         {"value": 3, "source": "parity",
                          "inputs": {"epsilon": -1, "lambda": 2}})

    def test_certificates(self):
        for terms in ([4, -5, 1], [3, -5, 2]):
            c = five_move_certificate(terms)
            report = bound_report(c.start_, certificate=c)
            cert = [b for b in report.bounds if b.source == "certificate"]
            self.assertEqual(len(cert), 1)
            self.assertEqual(cert[0].value, 2)
            self.assertEqual(cert[0].inputs, {"n": 2, "k": 4})
            self.assertEqual(report.best, 2)

    def test_eight_sixteen_certificate(self):
        start = catalog("8_16")
        c = two_two_certificate(start, start_name="8_16")
        self.assertEqual(c.to_json()["start"], {"catalog": "8_16"})
        replay = verify_certificate(c)
        self.assertTrue(replay.valid, replay.reason)
        self.assertEqual((replay.final_crossings, replay.final_components),
                         (0, 2))
        self.assertEqual(replay.two_two_moves % 2, 0)
        self.assertEqual(certificate_bound(2, replay.two_two_moves), 2)
        report = bound_report(start, certificate=c, against=catalog("T_2"))
        cert = [b for b in report.bounds if b.source == "certificate"]
        self.assertEqual(cert[0].value, 2)
        self.assertEqual(cert[0].inputs,
                         {"n": 2, "k": replay.two_two_moves})
        distance = [b for b in report.bounds if b.source == "distance"]
        self.assertEqual(distance[0].value,
                         distance_bound(start, catalog("T_2")))
        self.assertLessEqual(distance[0].value, report.best)
        self.assertEqual(report.best, 2)

    def test_certificate_starts_are_catalog_knots(self):
        for terms, name, plain in (([4, -5, 1], "7_4", [3, 1, 3]),
                                   ([3, -5, 2], "8_8", [2, 1, 3, 2])):
            self.assertEqual(evaluate_fraction(terms),
                             evaluate_fraction(plain))
            start = five_move_certificate(terms).start_
            known = catalog(name)
            self.assertEqual(determinant(start), determinant(known))
            for m in range(2, 14):
                self.assertEqual(
                    coloring_space(start, m).cardinality_exponents_,
                    coloring_space(known, m).cardinality_exponents_, (name, m))
            self.assertEqual(eval_phi5(start), eval_phi5(known))
            self.assertEqual(unframed(start), unframed(known), name)
        self.assertEqual(evaluate_fraction([4, -5, 1]), Fraction(15, 4))
        self.assertEqual(evaluate_fraction([3, -5, 2]), Fraction(25, 9))

    def test_against(self):
        report = bound_report(catalog("3_1"), against=catalog("4_1"))
        distance = [b for b in report.bounds if b.source == "distance"]
        self.assertEqual(distance[0].value, 2)
        self.assertEqual(report.best, 2)

    def test_link_without_knot_bounds(self):
        report = bound_report(catalog("hopf"), against=catalog("T_2"))
        self.assertEqual([b.source for b in report.bounds], ["distance"])

    def test_bad_certificates(self):
        c = five_move_certificate([4, -5, 1])
        with self.assertRaises(BoundsError):
            bound_report(catalog("hopf"), certificate=c)
        c.steps_.append(Move('R1-', (), MoveSite(crossings=[12345])))
        with self.assertRaises(BoundsError):
            bound_report(c.start_, certificate=c)
        short = five_move_certificate([4, -5, 1])
        del short.steps_[-1]
        short.claim_.clear()
        with self.assertRaises(BoundsError):
            bound_report(short.start_, certificate=short)


class TestCrossingChanges(unittest.TestCase):
    def test_lambda_moves_by_at_most_one(self):
        for name in KNOTS:
            d = catalog(name)
            base = phi5_decomposition(d).lambda_
            for c in d.crossings_:
                changed = phi5_decomposition(switch(d, c.id_)).lambda_
                self.assertLessEqual(abs(changed - base), 1, (name, c.id_))

    def test_quadruples(self):
        applied = 0
        for name in ("3_1", "4_1", "7_4", "9_49"):
            d = catalog(name)
            for c in d.crossings_:
                check = quadruple_consistency(d, c.id_)
                self.assertTrue(check.holds, (name, c.id_, check.values))
                applied += check.applies
        self.assertGreater(applied, 0)


if __name__ == '__main__':
    unittest.main()
