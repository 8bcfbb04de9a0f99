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


"""
Command line front end. Every subcommand reads one diagram (or tangle),
calls the library and prints JSON with sorted keys, so equal inputs give
byte-identical output.

Exit status is 0 on success, 1 when the library raises a
:py:class:`~linkforge.errors.LinkforgeException` (an error object is printed
instead of the result) and 2 on usage errors.
"""

import argparse
import json
import logging
import os
import sys
from typing import List, Optional

from linkforge import bounds, util
from linkforge.burnside import quotient
from linkforge.coloring.fox import boundary_image, coloring_space, \
    determinant
from linkforge.diagram.braid import braid_closure, braid_from_json, \
    parse_braid
from linkforge.diagram.catalog import CATALOG_VERSION, catalog, \
    catalog_names
from linkforge.diagram.pd import Diagram, components, from_json, parse_pd, \
    serialize, to_json
from linkforge.diagram.tangle import Tangle, parse_tangle, tangle_from_json
from linkforge.errors import LinkforgeException, ParseError, UsageError
from linkforge.moves import certificate, rotor
from linkforge.moves.engine import apply
from linkforge.moves.model import Move
from linkforge.skein.golden import decompose
from linkforge.skein.kauffman import eval_phi5, kauffman_framed
from linkforge.symplectic import lagrangian_count, reflect_subspace, \
    rotate_subspace, rotation_invariant_lagrangians, tangle_lagrangian

LOG = logging.getLogger(__name__)

FORMATS = ("json", "text")


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as f:
            return f.read()
    except OSError as exc:
        raise UsageError("cannot read %s: %s" % (path, exc.strerror))


def _json(text: str):
    try:
        return json.loads(text)
    except ValueError as exc:
        raise ParseError("invalid JSON: %s" % exc)


def _is_json(text: str) -> bool:
    return text.lstrip().startswith("{")


def diagram_from_text(text: str, braid: bool = False) -> Diagram:
    if braid:
        w = braid_from_json(_json(text)) if _is_json(text) \
            else parse_braid(text)
        return braid_closure(w)
    return from_json(_json(text)) if _is_json(text) else parse_pd(text)


def _source_text(args) -> str:
    return _read(args.file) if args.file is not None else args.text


def load_diagram(args) -> Diagram:
    if args.catalog is not None:
        if args.braid:
            raise UsageError("--braid does not apply to catalog entries")
        return catalog(args.catalog)
    return diagram_from_text(_source_text(args), args.braid)


def load_tangle(args) -> Tangle:
    if args.catalog is not None or args.braid:
        raise UsageError("a tangle is read from --file or --text only")
    text = _source_text(args)
    return tangle_from_json(_json(text)) if _is_json(text) \
        else parse_tangle(text)


def _named_or_file(value: str) -> Diagram:
    if os.path.isfile(value):
        return diagram_from_text(_read(value))
    return catalog(value)


def _load_certificate(path: str) -> certificate.MoveCertificate:
    return certificate.MoveCertificate.from_json(_json(_read(path)))


def cmd_parse(args):
    d = load_diagram(args)
    return {"crossings": d.crossing_count(),
            "components": components(d),
            "loops": d.free_loops_,
            "diagram": to_json(d)}, serialize(d)


def cmd_colorings(args):
    space = coloring_space(load_diagram(args), args.modulus)
    card = util.cardinality_json(space.cardinality_exponents_)
    out = {"modulus": args.modulus,
           "cardinality": card["factored"],
           "cyclic_factors": space.cyclic_factors_,
           "dim": space.dim}
    if "value" in card:
        out["cardinality_value"] = card["value"]
    return out, None


def cmd_determinant(args):
    return {"determinant": determinant(load_diagram(args))}, None


def cmd_lagrangian(args):
    t = load_tangle(args)
    w = tangle_lagrangian(t, args.p)
    image = boundary_image(t, args.p)
    out = {"n": t.n,
           "p": args.p,
           "dim": w.dim,
           "lagrangian": w.is_lagrangian(),
           "basis": w.basis_.tolist(),
           "boundary_image_dim": image.image_dim,
           "kernel_dim": image.kernel_dim,
           "lagrangian_count": lagrangian_count(t.n, args.p)}
    if args.rotations:
        fixed = rotation_invariant_lagrangians(w.space_)
        out["rotation_invariant"] = rotate_subspace(w, 2) == w
        out["reflection_invariant"] = reflect_subspace(w) == w
        out["rotation_invariant_count"] = len(fixed)
        out["flip_invariant_count"] = sum(1 for x in fixed
                                          if reflect_subspace(x) == x)
    return out, None


def cmd_kauffman(args):
    d = load_diagram(args)
    if args.phi5:
        g = eval_phi5(d)
        phi = decompose(g)
        return {"u": g.u_, "v": g.v_, "epsilon": phi.epsilon,
                "lambda": phi.lambda_}, None
    f = kauffman_framed(d)
    return {"terms": f.term_list(), "expression": repr(f)}, None


def cmd_bounds(args):
    d = load_diagram(args)
    cert = _load_certificate(args.certificate) if args.certificate else None
    against = _named_or_file(args.against) if args.against else None
    subject = args.catalog or args.file or "text"
    report = bounds.bound_report(d, subject, cert, against)
    return bounds.report_to_json(report), None


def cmd_burnside(args):
    report = quotient.burnside_report(load_diagram(args), args.p,
                                      args.class_bound, args.kill)
    return quotient.report_to_json(report), None


def cmd_moves(args):
    if args.action == "verify":
        if not args.certificate:
            raise UsageError("moves verify needs --certificate")
        report = certificate.verify_certificate(
            _load_certificate(args.certificate))
        return certificate.report_to_json(report), None
    if not args.move:
        raise UsageError("moves apply needs at least one --move")
    if args.catalog is None and args.file is None and args.text is None:
        raise UsageError("moves apply needs an input diagram")
    d = load_diagram(args)
    for raw in args.move:
        d = apply(d, Move.from_json(_json(raw)))
    return {"crossings": d.crossing_count(),
            "components": components(d),
            "diagram": to_json(d)}, serialize(d)


def cmd_rotor(args):
    d = load_diagram(args)
    try:
        ids = [int(x) for x in args.crossings.split(",") if x.strip()]
    except ValueError:
        raise UsageError("--crossings takes comma separated crossing ids")
    inner, _ = rotor.split_rotor(d, ids, args.base)
    rotant = rotor.flip_region(d, ids, args.base, args.order)
    out = {"rotor_ends": len(inner.boundary_),
           "rotant": to_json(rotant)}
    if args.order is not None:
        out["order"] = args.order
    if args.p is not None:
        out["p"] = args.p
        out["colorings_dim"] = [coloring_space(d, args.p).dim,
                                coloring_space(rotant, args.p).dim]
        if args.order is not None:
            out["flip_keeps_colorings"] = rotor.flip_keeps_colorings(
                inner, args.p)
    return out, serialize(rotant)


def cmd_catalog(args):
    if args.action == "list":
        return {"version": CATALOG_VERSION, "names": catalog_names()}, \
            "\n".join(catalog_names()) + "\n"
    if not args.name:
        raise UsageError("catalog show needs a name")
    d = catalog(args.name)
    return {"name": args.name, "version": CATALOG_VERSION,
            "diagram": to_json(d)}, serialize(d)


def _add_input(p: argparse.ArgumentParser, required: bool = True):
    group = p.add_mutually_exclusive_group(required=required)
    group.add_argument("--catalog", metavar="NAME",
                       help="bundled diagram, see 'catalog list'")
    group.add_argument("--file", metavar="PATH",
                       help="diagram records or JSON in a file")
    group.add_argument("--text", metavar="TEXT",
                       help="diagram records or JSON inline")
    p.add_argument("--braid", action="store_true",
                   help="read the input as a braid word and close it")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linkforge",
        description="Invariants obstructing elementary moves on links.")
    parser.add_argument("--format", choices=FORMATS, default="json")
    # accepted after the subcommand too; SUPPRESS keeps the top-level value
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("parse", parents=[common],
                       help="validate and normalize a diagram")
    _add_input(p)
    p.set_defaults(handler=cmd_parse)

    p = sub.add_parser("colorings", parents=[common],
                       help="Fox colorings modulo k")
    _add_input(p)
    p.add_argument("--modulus", type=int, required=True)
    p.set_defaults(handler=cmd_colorings)

    p = sub.add_parser("determinant", parents=[common],
                       help="link determinant")
    _add_input(p)
    p.set_defaults(handler=cmd_determinant)

    p = sub.add_parser("lagrangian", parents=[common],
                       help="boundary coloring subspace of a tangle")
    _add_input(p)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--rotations", action="store_true",
                   help="also count Lagrangians fixed by a two step rotation")
    p.set_defaults(handler=cmd_lagrangian)

    p = sub.add_parser("kauffman", parents=[common],
                       help="Kauffman polynomial")
    _add_input(p)
    which = p.add_mutually_exclusive_group()
    which.add_argument("--phi5", action="store_true",
                       help="value at a = 1, x = 2cos(2pi/5)")
    which.add_argument("--full", action="store_true",
                       help="framed polynomial in a and x (default)")
    p.set_defaults(handler=cmd_kauffman)

    p = sub.add_parser("bounds", parents=[common],
                       help="unknotting number lower bounds")
    _add_input(p)
    p.add_argument("--certificate", metavar="PATH")
    p.add_argument("--against", metavar="NAME_OR_PATH")
    p.set_defaults(handler=cmd_bounds)

    p = sub.add_parser("burnside", parents=[common],
                       help="graded Burnside group quotient")
    _add_input(p)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--class", dest="class_bound", type=int,
                   default=quotient.MAX_CLASS)
    p.add_argument("--kill", type=int, default=0,
                   help="core group generator put to 1")
    p.set_defaults(handler=cmd_burnside)

    p = sub.add_parser("moves", parents=[common],
                       help="apply moves or verify a certificate")
    p.add_argument("action", choices=["apply", "verify"])
    _add_input(p, required=False)
    p.add_argument("--move", action="append", metavar="JSON")
    p.add_argument("--certificate", metavar="PATH")
    p.set_defaults(handler=cmd_moves)

    p = sub.add_parser("rotor", parents=[common],
                       help="flip a rotor inside a diagram")
    _add_input(p)
    p.add_argument("--crossings", required=True, metavar="IDS")
    p.add_argument("--base", type=int)
    p.add_argument("--order", type=int)
    p.add_argument("--p", type=int,
                   help="compare Col_p before and after the flip")
    p.set_defaults(handler=cmd_rotor)

    p = sub.add_parser("catalog", parents=[common],
                       help="bundled diagrams")
    p.add_argument("action", choices=["list", "show"])
    p.add_argument("name", nargs="?")
    p.set_defaults(handler=cmd_catalog)
    return parser


def _emit(obj, text: Optional[str], fmt: str, stream):
    if fmt == "text":
        if text is not None:
            stream.write(text)
            return
        for key in sorted(obj):
            stream.write("%s: %s\n" % (key, json.dumps(obj[key],
                                                       sort_keys=True)))
        return
    stream.write(json.dumps(obj, sort_keys=True, ensure_ascii=False) + "\n")


def _error(exc: Exception, stream):
    stream.write(json.dumps({"error": type(exc).__name__,
                             "message": str(exc)}, sort_keys=True) + "\n")


def main(argv: Optional[List[str]] = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code is None else int(exc.code)
    try:
        result, text = args.handler(args)
    except UsageError as exc:
        _error(exc, stdout)
        return 2
    except LinkforgeException as exc:
        _error(exc, stdout)
        return 1
    _emit(result, text, args.format, stdout)
    return 0


__all__ = ['diagram_from_text', 'load_diagram', 'load_tangle',
           'build_parser', 'main']
