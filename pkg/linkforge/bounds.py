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
Lower bounds on unknotting numbers and Gordian distances from the value
``F(1, 2cos(2pi/5)) = epsilon * sqrt(5)^lambda`` and from reductions by
+-(2,2)-moves.
"""

import logging
from typing import Dict, List, NamedTuple, Optional

from linkforge.diagram.pd import Diagram, components
from linkforge.errors import BoundsError
from linkforge.moves.certificate import MoveCertificate, verify_certificate
from linkforge.skein.golden import PhiDecomposition, decompose
from linkforge.skein.kauffman import eval_phi5, skein_quadruple

LOG = logging.getLogger(__name__)

Bound = NamedTuple('Bound', [('value', int), ('source', str),
                             ('inputs', Dict[str, int])])
""" One lower bound; ``source`` is wendt, parity, certificate or distance. """

BoundReport = NamedTuple('BoundReport', [('subject', str),
                                         ('bounds', List[Bound]),
                                         ('best', int)])


def _require_knot(d: Diagram):
    n = components(d)
    if n != 1:
        raise BoundsError("a knot is required, the diagram has %d "
                          "components" % n)


def _phi(d: Diagram) -> PhiDecomposition:
    return decompose(eval_phi5(d))


def wendt_bound(d: Diagram) -> int:
    """ ``u(K) >= lambda(K)`` """
    _require_knot(d)
    return _phi(d).lambda_


def parity_bound(d: Diagram) -> int:
    """ ``lambda + 1`` when ``epsilon = -(-1)^lambda``, else ``lambda``. """
    _require_knot(d)
    phi = _phi(d)
    if phi.epsilon == -(-1) ** phi.lambda_:
        return phi.lambda_ + 1
    return phi.lambda_


def certificate_bound(n: int, k: int) -> int:
    """ A knot taken to the n-component trivial link by k +-(2,2)-moves has
        ``u >= n + ((-1)^(n-k) - 1)/2``.
    """
    return n + ((-1) ** ((n - k) % 2) - 1) // 2


def distance_bound(d1: Diagram, d2: Diagram) -> int:
    """ ``|lambda2 - lambda1| + |epsilon1 epsilon2 - (-1)^(lambda2 -
        lambda1)| / 2`` """
    a, b = _phi(d1), _phi(d2)
    gap = b.lambda_ - a.lambda_
    return abs(gap) + abs(a.epsilon * b.epsilon - (-1) ** (gap % 2)) // 2


def bound_report(d: Diagram, subject: str = "",
                 certificate: Optional[MoveCertificate] = None,
                 against: Optional[Diagram] = None) -> BoundReport:
    """ Every bound that applies, the best being the largest.

        :raises BoundsError: a knot bound was asked for a link, or the
            certificate does not verify or does not end in a trivial link
    """
    bounds = []
    phi = _phi(d)
    if components(d) == 1:
        bounds.append(Bound(wendt_bound(d), "wendt",
                            {"lambda": phi.lambda_}))
        bounds.append(Bound(parity_bound(d), "parity",
                            {"epsilon": phi.epsilon,
                             "lambda": phi.lambda_}))
    if certificate is not None:
        _require_knot(d)
        report = verify_certificate(certificate)
        if not report.valid:
            raise BoundsError("certificate fails at step %s: %s"
                              % (report.failed_step, report.reason))
        if report.final_crossings != 0:
            raise BoundsError("certificate ends with %d crossings, not a "
                              "trivial link" % report.final_crossings)
        n, k = report.final_components, report.two_two_moves
        bounds.append(Bound(certificate_bound(n, k), "certificate",
                            {"n": n, "k": k}))
    if against is not None:
        other = _phi(against)
        bounds.append(Bound(distance_bound(d, against), "distance",
                            {"lambda": phi.lambda_, "epsilon": phi.epsilon,
                             "other_lambda": other.lambda_,
                             "other_epsilon": other.epsilon}))
    best = max((b.value for b in bounds), default=0)
    LOG.info("bounds for %s: best %d from %d criteria", subject or d, best,
             len(bounds))
    return BoundReport(subject, bounds, best)


def report_to_json(r: BoundReport) -> dict:
    return {"subject": r.subject,
            "best": r.best,
            "bounds": [{"value": b.value, "source": b.source,
                        "inputs": dict(sorted(b.inputs.items()))}
                       for b in r.bounds]}


QuadrupleCheck = NamedTuple('QuadrupleCheck', [
    ('values', Dict[str, PhiDecomposition]),
    ('applies', bool),
    ('holds', bool)])
""" Decompositions of ``L+, L-, L0, Linf``. When the lambdas of ``L+`` and
    ``L-`` differ by one, the lower one ``L_low`` must satisfy
    ``-epsilon(L_low) = epsilon(L_high) = epsilon(L0) = epsilon(Linf)`` and
    ``lambda(L0) = lambda(Linf) = lambda(L_low)``; equal signs for ``L+``
    and ``L-`` are impossible there.
"""


def quadruple_consistency(d: Diagram, crossing_id: int) -> QuadrupleCheck:
    quad = skein_quadruple(d, crossing_id)
    values = {"plus": _phi(quad.plus), "minus": _phi(quad.minus),
              "zero": _phi(quad.zero), "infinity": _phi(quad.infinity)}
    low, high = sorted((values["plus"], values["minus"]),
                       key=lambda v: v.lambda_)
    applies = high.lambda_ - low.lambda_ == 1
    holds = True
    if applies:
        zero, infinity = values["zero"], values["infinity"]
        holds = -low.epsilon == high.epsilon == zero.epsilon == \
            infinity.epsilon and \
            zero.lambda_ == infinity.lambda_ == low.lambda_
    return QuadrupleCheck(values, applies, holds)


__all__ = ['Bound', 'BoundReport', 'wendt_bound', 'parity_bound',
           'certificate_bound', 'distance_bound', 'bound_report',
           'report_to_json', 'QuadrupleCheck', 'quadruple_consistency']
