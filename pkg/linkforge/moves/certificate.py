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
Move certificates: a start diagram, a list of moves and a claim about the
diagram they end in. Certificate files are JSON::

    {"start": {"catalog": "7_4"},
     "steps": [{"move": {"variant": "NMove", "params": [-5]},
                "site": {"edges": [14, 15], "side": 0}}, ...],
     "claim": {"final_components": 2, "final_crossings": 0}}

``start`` is either a catalog reference or an inline diagram in the JSON
diagram form.
"""

import collections
import logging
from typing import Dict, List, NamedTuple, Optional, Sequence

from linkforge.coloring.fox import determinant
from linkforge.diagram.canonical import canonical_code
from linkforge.diagram.catalog import catalog
from linkforge.diagram.pd import Diagram, components, from_json, to_json
from linkforge.diagram.rational import rational_tangle
from linkforge.diagram.tangle import numerator
from linkforge.errors import CatalogError, CertificateError, DiagramError, \
    MoveError, TangleError
from linkforge.moves.engine import apply
from linkforge.moves.model import Move, MoveSite
from linkforge.moves.simplify import simplify
from linkforge.moves.sites import face_walk

LOG = logging.getLogger(__name__)


class MoveCertificate(object):
    def __init__(self, start: Diagram, steps: Sequence[Move],
                 claim: Optional[Dict[str, int]] = None,
                 start_name: Optional[str] = None) -> None:
        self.start_ = start
        self.steps_ = list(steps)  # type: List[Move]
        self.claim_ = dict(claim) if claim else {}
        """ Expected ``final_components`` and ``final_crossings``; either
            may be absent.
        """
        self.start_name_ = start_name
        """ Catalog name the start came from, kept for serialization. """

    def to_json(self) -> dict:
        start = {"catalog": self.start_name_} if self.start_name_ \
            else to_json(self.start_)
        return {"start": start,
                "steps": [m.to_json() for m in self.steps_],
                "claim": dict(sorted(self.claim_.items()))}

    @staticmethod
    def from_json(obj: dict) -> 'MoveCertificate':
        """ :raises CertificateError: malformed certificate """
        if not isinstance(obj, dict) or "start" not in obj:
            raise CertificateError("certificate needs a 'start' diagram")
        start = obj["start"]
        name = None
        try:
            if isinstance(start, dict) and "catalog" in start:
                name = start["catalog"]
                diagram = catalog(name)
            else:
                diagram = from_json(start)
        except (CatalogError, DiagramError) as exc:
            raise CertificateError("bad start diagram: %s" % exc)
        steps = []
        for index, raw in enumerate(obj.get("steps", [])):
            try:
                steps.append(Move.from_json(raw))
            except MoveError as exc:
                raise CertificateError(str(exc), index)
        claim = obj.get("claim") or {}
        if not isinstance(claim, dict):
            raise CertificateError("'claim' must be an object")
        return MoveCertificate(diagram, steps, claim, name)


CertificateReport = NamedTuple('CertificateReport', [
    ('valid', bool),
    ('final', Optional[Diagram]),
    ('final_crossings', Optional[int]),
    ('final_components', Optional[int]),
    ('counts', Dict[str, int]),
    ('two_two_moves', int),
    ('failed_step', Optional[int]),
    ('reason', Optional[str])])
""" Outcome of a replay. ``two_two_moves`` is the number k of +-(2,2)-moves
    the certificate stands for.
"""


def report_to_json(r: CertificateReport) -> dict:
    out = {"valid": r.valid, "counts": dict(sorted(r.counts.items())),
           "two_two_moves": r.two_two_moves}
    if r.final is not None:
        out["final_crossings"] = r.final_crossings
        out["final_components"] = r.final_components
    if not r.valid:
        out["failed_step"] = r.failed_step
        out["reason"] = r.reason
    return out


def verify_certificate(c: MoveCertificate,
                       strict: bool = False) -> CertificateReport:
    """ Replay every step, then compare the end with the claim.

        :param strict: raise instead of reporting a failure
        :raises CertificateError: with ``strict``, on the first failing step
            (``index_`` set) or a claim mismatch (``index_`` is the number
            of steps)
    """
    d = c.start_
    counts = {}  # type: Dict[str, int]
    k = 0
    for index, step in enumerate(c.steps_):
        try:
            d = apply(d, step)
        except (MoveError, DiagramError, TangleError) as exc:
            if strict:
                raise CertificateError(str(exc), index)
            LOG.info("certificate fails at step %d: %s", index, exc)
            return CertificateReport(False, None, None, None, counts, k,
                                     index, str(exc))
        counts[step.variant_] = counts.get(step.variant_, 0) + 1
        k += step.two_two_count()

    final_crossings, final_components = d.crossing_count(), components(d)
    expected = (c.claim_.get("final_crossings", final_crossings),
                c.claim_.get("final_components", final_components))
    if expected != (final_crossings, final_components):
        reason = "claim of %d crossings and %d components, found %d and %d" \
                 % (expected + (final_crossings, final_components))
        if strict:
            raise CertificateError(reason, len(c.steps_))
        return CertificateReport(False, d, final_crossings, final_components,
                                 counts, k, len(c.steps_), reason)
    LOG.info("certificate verified: %d steps, k=%d, %d components",
             len(c.steps_), k, final_components)
    return CertificateReport(True, d, final_crossings, final_components,
                             counts, k, None, None)


def _corner_sites(d: Diagram):
    """ Insertion sites between consecutive ends of one crossing; a twist
        put there merges with that crossing's twist region.
    """
    emb = d.embedding_
    for c in d.crossings_:
        for pos in range(4):
            e1, e2 = c.ends_[pos], c.ends_[(pos + 1) % 4]
            if e1 == e2:
                continue
            for side in (0, 1):
                start = emb.darts_of(e1)[side]
                if e2 in {emb.label(x) for x in face_walk(d, start)}:
                    yield MoveSite((e1, e2), side)


def _code(d: Diagram):
    return canonical_code(d.crossings_, (), d.free_loops_)


def _try(d: Diagram, move: Move):
    try:
        return simplify(apply(d, move))
    except (MoveError, DiagramError, TangleError):
        return None


def _cancelling_five_move(d: Diagram):
    """ First NMove(+-5) at a corner of some crossing after which greedy
        simplification loses at least five crossings.
    """
    for site in _corner_sites(d):
        for n in (-5, 5):
            move = Move('NMove', (n,), site)
            reduced = _try(d, move)
            if reduced is not None and reduced.diagram.crossing_count() <= \
                    d.crossing_count() - 5:
                return move, reduced
    return None


def _isotopy_finish(d: Diagram, budget: int) -> Optional[List[Move]]:
    """ Breadth first over R3 slides with greedy simplification, closing
        with one cancelling 5-move, until a crossingless diagram appears.
    """
    queue = collections.deque([(d, [])])
    seen = {_code(d)}
    while queue and budget > 0:
        budget -= 1
        d, steps = queue.popleft()
        if not d.crossings_:
            return steps
        found = _cancelling_five_move(d)
        if found is not None:
            move, reduced = found
            if not reduced.diagram.crossings_:
                return steps + [move] + reduced.steps
        emb = d.embedding_
        for face in emb.faces():
            if len(face) != 3 or len({v for v, _ in face}) != 3:
                continue
            move = Move('R3', (), MoveSite([emb.label(x) for x in face]))
            reduced = _try(d, move)
            if reduced is None:
                continue
            key = _code(reduced.diagram)
            if key not in seen:
                seen.add(key)
                queue.append((reduced.diagram,
                              steps + [move] + reduced.steps))
    return None


def two_two_certificate(start: Diagram, max_moves: int = 2, beam: int = 12,
                        budget: int = 300,
                        start_name: Optional[str] = None) -> MoveCertificate:
    """ Search for up to ``max_moves`` +-(2,2)-moves at crossing corners
        which, after R3 slides and greedy simplification, leave a diagram
        one 5-move takes to a crossingless one.

        Each layer keeps the ``beam`` results of smallest determinant;
        ``budget`` caps the diagrams visited per isotopy search.

        :raises MoveError: nothing found within these bounds
    """
    layer = [(start, [])]
    candidates = list(layer)
    for _ in range(max_moves):
        found = {}
        for d, steps in layer:
            for site in _corner_sites(d):
                for params in ((2, 2), (-2, -2)):
                    move = Move('SQMove', params, site)
                    reduced = _try(d, move)
                    if reduced is None:
                        continue
                    key = _code(reduced.diagram)
                    if key not in found:
                        found[key] = (reduced.diagram,
                                      steps + [move] + reduced.steps)
        ranked = sorted(found.values(),
                        key=lambda e: (determinant(e[0]),
                                       e[0].crossing_count()))
        layer = ranked[:beam]
        candidates.extend(layer)
        LOG.debug("(2,2)-move layer: %d diagrams, best determinant %s",
                  len(found), determinant(layer[0][0]) if layer else None)

    candidates.sort(key=lambda e: (len(e[1]) == 0, determinant(e[0]),
                                   e[0].crossing_count()))
    for d, steps in candidates:
        tail = _isotopy_finish(d, budget)
        if tail is None:
            continue
        end = d
        for move in tail:
            end = apply(end, move)
        claim = {"final_components": components(end), "final_crossings": 0}
        certificate = MoveCertificate(start, steps + tail, claim, start_name)
        verify_certificate(certificate, strict=True)
        LOG.info("(2,2)-move certificate: %d steps", len(certificate.steps_))
        return certificate
    raise MoveError("no (2,2)-move reduction of %r within %d moves"
                    % (start, max_moves))


def five_move_certificate(terms: Sequence[int]) -> MoveCertificate:
    """ Reduce the rational knot ``N([c0; c1, c2])`` by 5-moves when ``c1``
        and ``c0 + c2`` are multiples of five: one 5-move undoes the middle
        twists, the rest merge into ``c0 + c2`` twists for the next ones.

        Each 5-move counts as two +-(2,2)-moves, so the certificate proves
        an even count.

        :raises MoveError: the terms do not have that shape, or no
            cancelling move is found
    """
    terms = [int(t) for t in terms]
    if len(terms) != 3 or 0 in terms or terms[1] % 5 or \
            (terms[0] + terms[2]) % 5:
        raise MoveError("need three nonzero terms with 5 | c1 and "
                        "5 | c0 + c2, got %s" % terms)
    start = numerator(rational_tangle(terms))
    d = start
    steps = []
    while d.crossing_count():
        found = _cancelling_five_move(d)
        if found is None:
            raise MoveError("no cancelling 5-move in %r" % d)
        move, reduced = found
        steps.append(move)
        steps.extend(reduced.steps)
        d = reduced.diagram
    claim = {"final_components": components(d), "final_crossings": 0}
    certificate = MoveCertificate(start, steps, claim)
    verify_certificate(certificate, strict=True)
    LOG.info("5-move certificate for %s: %d steps", terms, len(steps))
    return certificate


__all__ = ['MoveCertificate', 'CertificateReport', 'report_to_json',
           'verify_certificate', 'five_move_certificate',
           'two_two_certificate']
