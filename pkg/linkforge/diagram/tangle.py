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

""" Tangles with 2n boundary points and their algebra.

    The boundary is listed counterclockwise. For the n-tangles of the
    algebraic construction the order is ``L1 .. Ln, Rn .. R1``: the left
    endpoints top to bottom, then the right endpoints bottom to top. For
    2-tangles this is ``NW, SW, SE, NE``.
"""

import logging
import random
from typing import Iterable, List, Sequence, Tuple

from linkforge.diagram.canonical import canonical_code
from linkforge.diagram.graph import Crossing, Embedding, splice
from linkforge.diagram.pd import Diagram, parse_records
from linkforge.errors import ParseError, TangleError

LOG = logging.getLogger(__name__)


class Tangle(object):
    """ Crossings inside a disk plus the labels of the edges meeting its
        boundary. An edge running straight from one boundary point to another
        shows up twice in ``boundary_`` and nowhere else.
    """

    def __init__(self, crossings: Iterable[Crossing], boundary: Sequence[int],
                 free_loops: int = 0, validate: bool = True) -> None:
        self.crossings_ = tuple(sorted(crossings, key=lambda c: c.id_))
        self.boundary_ = tuple(boundary)
        self.free_loops_ = int(free_loops)
        self.embedding_ = Embedding(self.crossings_, self.boundary_)
        if validate:
            self.validate()

    def validate(self):
        if not self.boundary_ or len(self.boundary_) % 2:
            raise TangleError("boundary length must be even and positive, "
                              "got %d" % len(self.boundary_))
        if len({c.id_ for c in self.crossings_}) != len(self.crossings_):
            raise TangleError("duplicate crossing id")
        self.embedding_.check_labels()
        self.embedding_.check_planar()

    @property
    def n(self) -> int:
        """ Half the number of boundary points. """
        return len(self.boundary_) // 2

    @property
    def diagram(self) -> Diagram:
        """ The crossings as an unvalidated Diagram (boundary labels occur
            once, so it is not a closed diagram).
        """
        return Diagram(self.crossings_, self.free_loops_, validate=False)

    def labels(self) -> List[int]:
        return sorted(self.embedding_.occurrences_)

    def next_label(self) -> int:
        return max(self.embedding_.occurrences_, default=0) + 1

    def next_id(self) -> int:
        return max((c.id_ for c in self.crossings_), default=-1) + 1

    def code(self):
        return canonical_code(self.crossings_, self.boundary_,
                              self.free_loops_)

    def __eq__(self, other):
        return isinstance(other, Tangle) \
            and self.crossings_ == other.crossings_ \
            and self.boundary_ == other.boundary_ \
            and self.free_loops_ == other.free_loops_

    def __hash__(self):
        return hash((self.crossings_, self.boundary_, self.free_loops_))

    def __repr__(self):
        return "Tangle(n=%d, %d crossings, boundary=%s)" % (
            self.n, len(self.crossings_), list(self.boundary_))


def parse_tangle(text: str) -> Tangle:
    """ Diagram text plus one ``B l1 .. l2n`` boundary record. """
    ends_list, loops, boundary = parse_records(text, allow_boundary=True)
    if boundary is None:
        raise ParseError("tangle text needs a 'B' boundary record")
    return Tangle((Crossing(i, e) for i, e in enumerate(ends_list)),
                  boundary, loops)


def serialize_tangle(t: Tangle) -> str:
    lines = ["X %d %d %d %d" % c.ends_ for c in t.crossings_]
    lines.extend("O" for _ in range(t.free_loops_))
    lines.append("B " + " ".join(str(x) for x in t.boundary_))
    return "\n".join(lines) + "\n"


def tangle_to_json(t: Tangle) -> dict:
    return {"crossings": [list(c.ends_) for c in t.crossings_],
            "loops": t.free_loops_,
            "boundary": list(t.boundary_)}


def tangle_from_json(obj: dict) -> Tangle:
    if not isinstance(obj, dict) or "boundary" not in obj:
        raise ParseError("tangle JSON needs a 'boundary' list")
    try:
        crossings = [Crossing(i, [int(x) for x in e])
                     for i, e in enumerate(obj.get("crossings", []))]
        boundary = [int(x) for x in obj["boundary"]]
    except (TypeError, ValueError):
        raise ParseError("tangle JSON entries must be integers")
    return Tangle(crossings, boundary, obj.get("loops", 0))


def shifted(t: Tangle, label_shift: int, id_shift: int) -> Tangle:
    """ Copy with every label and crossing id moved by a constant. """
    mapping = {x: x + label_shift for x in t.labels()}
    return Tangle((c.relabeled(mapping).with_id(c.id_ + id_shift)
                   for c in t.crossings_),
                  [mapping[x] for x in t.boundary_], t.free_loops_,
                  validate=False)


def _disjoint(a: Tangle, b: Tangle) -> Tangle:
    """ ``b`` moved clear of every label and crossing id of ``a``. """
    label_shift = max(a.labels(), default=0) - min(b.labels(), default=0) + 1
    id_shift = a.next_id() - min((c.id_ for c in b.crossings_), default=0)
    return shifted(b, label_shift, id_shift)


def _check_arity(a: Tangle, b: Tangle):
    if len(a.boundary_) != len(b.boundary_):
        raise TangleError("arity mismatch: %d and %d boundary points"
                          % (len(a.boundary_), len(b.boundary_)))


def tangle_rotate(t: Tangle, i: int) -> Tangle:
    """ Rotate by ``i`` boundary positions counterclockwise:
        ``new[j] = old[(j - i) mod 2n]``.
    """
    size = len(t.boundary_)
    boundary = [t.boundary_[(j - i) % size] for j in range(size)]
    return Tangle(t.crossings_, boundary, t.free_loops_)


def tangle_compose(a: Tangle, b: Tangle) -> Tangle:
    """ Put ``b`` to the right of ``a``, joining ``a``'s right endpoints to
        ``b``'s left endpoints.

        :raises TangleError: arity mismatch
    """
    _check_arity(a, b)
    b = _disjoint(a, b)
    n = a.n
    size = 2 * n
    pairs = [(a.boundary_[size - i], b.boundary_[i - 1])
             for i in range(1, n + 1)]
    boundary = list(a.boundary_[:n]) + list(b.boundary_[n:])
    crossings, boundary, loops = splice(a.crossings_ + b.crossings_,
                                        boundary, pairs)
    return Tangle(crossings, boundary, a.free_loops_ + b.free_loops_ + loops)


def tangle_glue(inner: Tangle, outer: Tangle) -> Diagram:
    """ Close two tangles of equal arity into a diagram: ``inner`` boundary
        point ``k`` meets ``outer`` boundary point ``2n - 1 - k``.
    """
    _check_arity(inner, outer)
    outer = _disjoint(inner, outer)
    size = len(inner.boundary_)
    pairs = [(inner.boundary_[k], outer.boundary_[size - 1 - k])
             for k in range(size)]
    crossings, _, loops = splice(inner.crossings_ + outer.crossings_, (),
                                 pairs)
    return Diagram(crossings,
                   inner.free_loops_ + outer.free_loops_ + loops)


def zero_tangle(top: int = 1, bottom: int = 2) -> Tangle:
    """ Two horizontal strands, NW-NE and SW-SE. """
    return Tangle((), (top, bottom, bottom, top))


def infinity_tangle(left: int = 1, right: int = 2) -> Tangle:
    """ Two vertical strands, NW-SW and NE-SE. """
    return Tangle((), (left, left, right, right))


def numerator(t: Tangle) -> Diagram:
    """ N closure: join NW to NE and SW to SE. """
    if t.n != 2:
        raise TangleError("numerator closure needs a 2-tangle")
    nw, sw, se, ne = t.boundary_
    crossings, _, loops = splice(t.crossings_, (), [(nw, ne), (sw, se)])
    return Diagram(crossings, t.free_loops_ + loops)


def denominator(t: Tangle) -> Diagram:
    """ D closure: join NW to SW and NE to SE. """
    if t.n != 2:
        raise TangleError("denominator closure needs a 2-tangle")
    nw, sw, se, ne = t.boundary_
    crossings, _, loops = splice(t.crossings_, (), [(nw, sw), (ne, se)])
    return Diagram(crossings, t.free_loops_ + loops)


def flip_tangle(t: Tangle) -> Tangle:
    """ Turn the disk over about its vertical axis: the plane picture is
        reflected left to right and every crossing changes over for under.
    """
    size = len(t.boundary_)
    return Tangle((c.reversed() for c in t.crossings_),
                  [t.boundary_[size - 1 - k] for k in range(size)],
                  t.free_loops_)


def identity_tangle(n: int, first_label: int = 1) -> Tangle:
    """ n horizontal strands joining ``Li`` to ``Ri``. """
    labels = list(range(first_label, first_label + n))
    return Tangle((), labels + labels[::-1])


def crossing_tangle(n: int, i: int, sign: int, first_label: int = 1) -> Tangle:
    """ The identity n-tangle with strands ``i`` and ``i+1`` (1-based, top to
        bottom) crossed once; ``sign`` +1 takes the strand from ``Li`` under.
    """
    if not 1 <= i < n:
        raise TangleError("crossing between strands %d and %d of %d"
                          % (i, i + 1, n))
    labels = list(range(first_label, first_label + n))
    boundary = labels + labels[::-1]
    upper_in = first_label + n
    lower_in, lower_out, upper_out = upper_in + 1, upper_in + 2, upper_in + 3
    boundary[i - 1] = upper_in
    boundary[i] = lower_in
    boundary[2 * n - 1 - i] = lower_out
    boundary[2 * n - i] = upper_out
    if sign > 0:
        ends = (lower_in, lower_out, upper_out, upper_in)
    else:
        ends = (upper_in, lower_in, lower_out, upper_out)
    return Tangle([Crossing(0, ends)], boundary)


def random_algebraic_tangle(rng: random.Random, n: int, leaves: int) -> Tangle:
    """ A random n-algebraic tangle: a binary tree of ``r^i(A) * r^j(B)``
        compositions over identity and single-crossing n-tangles.
    """
    if leaves <= 1:
        if n < 2 or rng.random() < 0.25:
            return identity_tangle(n)
        return crossing_tangle(n, rng.randrange(1, n), rng.choice((1, -1)))
    left = rng.randrange(1, leaves)
    a = random_algebraic_tangle(rng, n, left)
    b = random_algebraic_tangle(rng, n, leaves - left)
    a = tangle_rotate(a, rng.randrange(2 * n))
    b = tangle_rotate(b, rng.randrange(2 * n))
    return tangle_compose(a, b)


def extract_tangle(d: Diagram, crossing_ids: Iterable[int],
                   base_label: int = None) -> Tuple[Tangle, Tangle]:
    """ Cut a diagram along a disk holding the given crossings.

        The cut edges are the ones with a single end among the crossings.
        Walking the faces of the sub-diagram, each cut edge is met once on
        the face outside the disk, in counterclockwise order around it.

        :param base_label: cut edge placed at boundary position 0 (default the
            smallest)
        :returns: ``(inner, outer)`` with ``tangle_glue(inner, outer)`` equal
            to ``d`` up to relabeling
        :raises TangleError: the crossings do not fill a disk
    """
    wanted = set(crossing_ids)
    if not wanted:
        raise TangleError("empty region")
    for cid in wanted:
        d.crossing(cid)
    emb = d.embedding_
    inside = {d.index_of(cid) for cid in wanted}

    def is_cut(dart):
        return emb.alpha(dart)[0] not in inside

    seen = set()
    orbits = []
    for i in sorted(inside):
        for pos in range(4):
            dart = (i, pos)
            if dart in seen:
                continue
            cuts = []
            while dart not in seen:
                seen.add(dart)
                if is_cut(dart):
                    cuts.append(emb.label(dart))
                    dart = emb.sigma(dart)
                else:
                    dart = emb.phi(dart)
            if cuts:
                orbits.append(cuts)
    if not orbits:
        raise TangleError("region has no boundary")
    if len(orbits) > 1:
        raise TangleError("region is not a disk: cut edges lie on %d faces"
                          % len(orbits))
    order = orbits[0]
    if len(order) != len(set(order)):
        raise TangleError("region is not a disk: a cut edge repeats")
    base = min(order) if base_label is None else base_label
    if base not in order:
        raise TangleError("label %s is not a cut edge" % base)
    k = order.index(base)
    boundary = order[k:] + order[:k]

    inner = Tangle((c for c in d.crossings_ if c.id_ in wanted), boundary)
    outer = Tangle((c for c in d.crossings_ if c.id_ not in wanted),
                   boundary[::-1], d.free_loops_)
    return inner, outer


__all__ = ['Tangle', 'parse_tangle', 'serialize_tangle', 'tangle_to_json',
           'tangle_from_json', 'shifted', 'tangle_rotate', 'tangle_compose',
           'tangle_glue', 'zero_tangle', 'infinity_tangle', 'numerator',
           'denominator', 'flip_tangle', 'identity_tangle', 'crossing_tangle',
           'random_algebraic_tangle', 'extract_tangle']
