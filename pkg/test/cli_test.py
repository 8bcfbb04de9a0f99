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


import io
import json
import os
import tempfile
import unittest

from linkforge.cli import main
from linkforge.diagram.rational import rational_tangle
from linkforge.diagram.tangle import serialize_tangle
from linkforge.moves.certificate import five_move_certificate

TREFOIL = "X 1 5 2 4\nX 3 1 4 6\nX 5 3 6 2\n"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), stdout=out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run(*argv)
    return code, json.loads(text)


class TestInvariantCommands(unittest.TestCase):
    def test_colorings(self):
        code, obj = run_json("colorings", "--catalog", "9_49",
                             "--modulus", "5")
        self.assertEqual(code, 0)
        self.assertEqual(obj, {"modulus": 5, "cardinality": "5^3",
                               "cardinality_value": 125,
                               "cyclic_factors": [5, 5, 5], "dim": 3})

    def test_determinant_from_text(self):
        self.assertEqual(run_json("determinant", "--text", TREFOIL),
                         (0, {"determinant": 3}))
        self.assertEqual(run_json("determinant", "--braid",
                                  "--text", "BR 3: 1 -2 1 -2"),
                         (0, {"determinant": 5}))

    def test_kauffman(self):
        code, obj = run_json("kauffman", "--catalog", "3_1", "--phi5")
        self.assertEqual(code, 0)
        self.assertEqual(obj, {"u": -1, "v": 0, "epsilon": -1, "lambda": 0})
        code, obj = run_json("kauffman", "--catalog", "unknot")
        self.assertEqual(obj["terms"], [[0, 0, 1]])

    def test_bounds(self):
        code, obj = run_json("bounds", "--catalog", "9_49")
        self.assertEqual(code, 0)
        self.assertEqual(obj["best"], 3)
        code, obj = run_json("bounds", "--catalog", "3_1",
                             "--against", "4_1")
        self.assertEqual(obj["best"], 2)
        self.assertEqual(run("bounds", "--catalog", "hopf",
                             "--against", "T_2")[0], 0)

    def test_burnside(self):
        code, obj = run_json("burnside", "--catalog", "T_5", "--p", "3")
        self.assertEqual(code, 0)
        self.assertEqual(obj["order_exponent"], 14)
        code, obj = run_json("burnside", "--catalog", "9_49", "--p", "5",
                             "--class", "2")
        self.assertEqual((len(obj["dims"]), obj["dims"][0]), (2, 2))
        self.assertNotIn("order_exponent", obj)

    def test_lagrangian(self):
        text = serialize_tangle(rational_tangle([3]))
        code, obj = run_json("lagrangian", "--text", text, "--p", "3")
        self.assertEqual(code, 0)
        self.assertEqual((obj["dim"], obj["lagrangian"],
                          obj["lagrangian_count"]), (1, True, 4))
        code, obj = run_json("lagrangian", "--text", text, "--p", "5",
                             "--rotations")
        self.assertEqual(code, 0)
        self.assertEqual((obj["rotation_invariant"],
                          obj["reflection_invariant"],
                          obj["rotation_invariant_count"],
                          obj["flip_invariant_count"]), (True, True, 6, 6))


class TestMoveCommands(unittest.TestCase):
    def setUp(self):
        self.dir_ = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.dir_.cleanup()

    def write(self, name, obj):
        path = os.path.join(self.dir_.name, name)
        with open(path, "w", encoding="utf-8") as f:
            json.dump(obj, f)
        return path

    def test_apply(self):
        move = json.dumps({"move": {"variant": "R1+", "params": [1]},
                           "site": {"edges": [1], "side": 0}})
        code, obj = run_json("moves", "apply", "--catalog", "3_1",
                             "--move", move, "--move", move)
        self.assertEqual(code, 0)
        self.assertEqual(obj["crossings"], 5)
        self.assertEqual(obj["components"], 1)

    def test_apply_needs_moves(self):
        code, obj = run_json("moves", "apply", "--catalog", "3_1")
        self.assertEqual(code, 2)
        self.assertEqual(obj["error"], "UsageError")

    def test_verify(self):
        path = self.write("c.json", five_move_certificate([4, -5, 1])
                          .to_json())
        code, obj = run_json("moves", "verify", "--certificate", path)
        self.assertEqual(code, 0)
        self.assertTrue(obj["valid"])
        self.assertEqual((obj["final_crossings"], obj["final_components"],
                          obj["two_two_moves"]), (0, 2, 4))

    def test_certificate_bound(self):
        c = five_move_certificate([3, -5, 2])
        path = self.write("c.json", c.to_json())
        diagram = self.write("d.json", c.to_json()["start"])
        code, obj = run_json("bounds", "--file", diagram,
                             "--certificate", path)
        self.assertEqual(code, 0)
        self.assertEqual(obj["best"], 2)
        self.assertIn({"value": 2, "source": "certificate",
                       "inputs": {"k": 4, "n": 2}}, obj["bounds"])

    def test_rotor(self):
        code, obj = run_json("rotor", "--catalog", "7_4",
                             "--crossings", "0,1,2", "--order", "2")
        self.assertEqual(code, 0)
        self.assertEqual((obj["rotor_ends"], obj["order"]), (4, 2))
        code, obj = run_json("rotor", "--catalog", "7_4", "--crossings",
                             "0,1,2", "--order", "2", "--p", "3")
        self.assertEqual(code, 0)
        self.assertEqual((obj["colorings_dim"], obj["flip_keeps_colorings"]),
                         ([2, 2], True))
        self.assertEqual(run("rotor", "--catalog", "7_4",
                             "--crossings", "0,x")[0], 2)


class TestSurface(unittest.TestCase):
    def test_text_format(self):
        code, text = run("--format", "text", "parse", "--text", "O")
        self.assertEqual((code, text), (0, "O\n"))
        code, text = run("--format", "text", "determinant",
                         "--catalog", "4_1")
        self.assertEqual(text, "determinant: 5\n")

    def test_format_after_command(self):
        code, text = run("colorings", "--catalog", "4_1", "--modulus", "5",
                         "--format", "text")
        self.assertEqual(code, 0)
        self.assertIn("cardinality_value: 25\n", text)
        self.assertEqual(run("determinant", "--catalog", "4_1",
                             "--format", "text"), (0, "determinant: 5\n"))
        self.assertEqual(run_json("determinant", "--catalog", "4_1",
                                  "--format", "json"),
                         (0, {"determinant": 5}))
        self.assertEqual(run("determinant", "--catalog", "4_1",
                             "--format", "yaml")[0], 2)

    def test_catalog(self):
        code, obj = run_json("catalog", "list")
        self.assertEqual(code, 0)
        self.assertIn("9_49", obj["names"])
        self.assertIn("T_n", obj["names"])
        code, obj = run_json("catalog", "show", "3_1")
        self.assertEqual(len(obj["diagram"]["crossings"]), 3)
        self.assertEqual(run("catalog", "show")[0], 2)

    def test_library_errors(self):
        code, obj = run_json("colorings", "--catalog", "3_1",
                             "--modulus", "1")
        self.assertEqual((code, obj["error"]), (1, "ColoringError"))
        code, obj = run_json("determinant", "--catalog", "10_1")
        self.assertEqual((code, obj["error"]), (1, "CatalogError"))
        code, obj = run_json("parse", "--text", "X 1 2 3")
        self.assertEqual((code, obj["error"]), (1, "ParseError"))
        code, obj = run_json("parse", "--text",
                             '{"crossings": [], "loops": "a"}')
        self.assertEqual((code, obj["error"]), (1, "DiagramError"))
        self.assertIn("message", obj)
        code, obj = run_json("burnside", "--catalog", "3_1", "--p", "2")
        self.assertEqual((code, obj["error"]), (1, "UnsupportedError"))

    def test_usage_errors(self):
        code, obj = run_json("parse", "--file", "/nonexistent/diagram.txt")
        self.assertEqual((code, obj["error"]), (2, "UsageError"))
        self.assertEqual(run("colorings", "--catalog", "3_1")[0], 2)
        self.assertEqual(run("no-such-command")[0], 2)

    def test_deterministic(self):
        argv = ("kauffman", "--catalog", "whitehead")
        self.assertEqual(run(*argv), run(*argv))


if __name__ == '__main__':
    unittest.main()
