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
Combinatorial layer under diagrams and tangles: crossings, darts and the
rotation system.

A dart is a pair ``(vertex, position)``. Crossing vertices are indexed by
their place in the crossing sequence, the boundary of a tangle is the single
vertex :py:data:`OUTER`. Rotating counterclockwise at a vertex is ``sigma``,
swapping the two ends of an edge is ``alpha``; faces are the orbits of
``sigma(alpha(d))`` and each face lies to the right of the edges traversed.
"""

import logging
from typing import Dict, Iterable, List, Sequence, Tuple

from linkforge.errors import DiagramError

LOG = logging.getLogger(__name__)

OUTER = -1
""" Vertex index of the tangle boundary. Its darts turn in reversed order,
    the boundary being listed counterclockwise as seen from inside the disk.
"""

Dart = Tuple[int, int]


class Crossing(object):
    """ A crossing in planar-diagram convention. ``ends_`` lists the four edge
        labels counterclockwise starting at an under-strand end, so positions
        0 and 2 are the under-strand and positions 1 and 3 the over-strand.
        The half-turn ``(c, d, a, b)`` describes the same crossing.
    """

    __slots__ = ('id_', 'ends_')

    def __init__(self, id_: int, ends: Sequence[int]):
        if len(ends) != 4:
            raise DiagramError("crossing %s needs 4 ends, got %d"
                               % (id_, len(ends)))
        self.id_ = int(id_)
        self.ends_ = tuple(ends)  # type: Tuple[int, int, int, int]

    def key(self) -> Tuple[int, int, int, int]:
        """ Ends normalized over the half-turn. """
        e = self.ends_
        return min(e, e[2:] + e[:2])

    def under(self) -> Tuple[int, int]:
        return self.ends_[0], self.ends_[2]

    def over(self) -> Tuple[int, int]:
        return self.ends_[1], self.ends_[3]

    def switched(self) -> 'Crossing':
        """ Same position in the plane, over and under exchanged. """
        e = self.ends_
        return Crossing(self.id_, e[1:] + e[:1])

    def reversed(self) -> 'Crossing':
        """ Reflected in the plane with over and under exchanged, which is the
            rotation by pi about an axis lying in the plane.
        """
        return Crossing(self.id_, tuple(reversed(self.ends_)))

    def relabeled(self, mapping: Dict[int, int]) -> 'Crossing':
        return Crossing(self.id_, tuple(mapping.get(x, x) for x in self.ends_))

    def with_id(self, new_id: int) -> 'Crossing':
        return Crossing(new_id, self.ends_)

    def kink_position(self):
        """ Position ``i`` such that ``ends[i] == ends[i+1]``, or None. """
        e = self.ends_
        for i in range(4):
            if e[i] == e[(i + 1) % 4]:
                return i
        return None

    def __eq__(self, other):
        return isinstance(other, Crossing) and self.id_ == other.id_ \
            and self.key() == other.key()

    def __hash__(self):
        return hash((self.id_, self.key()))

    def __repr__(self):
        return "X%d%s" % (self.id_, list(self.ends_))


class UnionFind(object):
    """ Disjoint sets over arbitrary hashable items. """

    def __init__(self, items: Iterable = ()):
        self.parent_ = {}
        for x in items:
            self.add(x)

    def add(self, x):
        if x not in self.parent_:
            self.parent_[x] = x

    def find(self, x):
        self.add(x)
        root = x
        while self.parent_[root] != root:
            root = self.parent_[root]
        while self.parent_[x] != root:
            self.parent_[x], x = root, self.parent_[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent_[max(rx, ry)] = min(rx, ry)

    def classes(self) -> List[list]:
        groups = {}
        for x in self.parent_:
            groups.setdefault(self.find(x), []).append(x)
        return sorted(sorted(g) for g in groups.values())


class Embedding(object):
    """ Rotation system of a set of crossings plus an optional boundary. """

    def __init__(self, crossings: Sequence[Crossing], boundary=()):
        self.crossings_ = tuple(crossings)
        self.boundary_ = tuple(boundary)
        self.occurrences_ = {}  # type: Dict[int, List[Dart]]
        for i, c in enumerate(self.crossings_):
            for pos, label in enumerate(c.ends_):
                self.occurrences_.setdefault(label, []).append((i, pos))
        for k, label in enumerate(self.boundary_):
            self.occurrences_.setdefault(label, []).append((OUTER, k))
        self._faces = None

    def label(self, dart: Dart) -> int:
        vertex, pos = dart
        if vertex == OUTER:
            return self.boundary_[pos]
        return self.crossings_[vertex].ends_[pos]

    def darts_of(self, label) -> List[Dart]:
        """ Both ends of an edge, ordered by (crossing id, position) with
            boundary ends last.
        """
        def order(d):
            if d[0] == OUTER:
                return 1, 0, d[1]
            return 0, self.crossings_[d[0]].id_, d[1]
        return sorted(self.occurrences_.get(label, []), key=order)

    def alpha(self, dart: Dart) -> Dart:
        first, second = self.occurrences_[self.label(dart)]
        return second if first == dart else first

    def sigma(self, dart: Dart) -> Dart:
        vertex, pos = dart
        if vertex == OUTER:
            return OUTER, (pos - 1) % len(self.boundary_)
        return vertex, (pos + 1) % 4

    def phi(self, dart: Dart) -> Dart:
        return self.sigma(self.alpha(dart))

    def darts(self) -> List[Dart]:
        out = [(i, p) for i in range(len(self.crossings_)) for p in range(4)]
        out.extend((OUTER, k) for k in range(len(self.boundary_)))
        return out

    def check_labels(self):
        for label, occ in self.occurrences_.items():
            if len(occ) != 2:
                raise DiagramError("non-matching arc: label %s appears %d "
                                   "times" % (label, len(occ)))

    def faces(self) -> List[List[Dart]]:
        if self._faces is None:
            seen = set()
            faces = []
            for d in self.darts():
                if d in seen:
                    continue
                orbit = []
                while d not in seen:
                    seen.add(d)
                    orbit.append(d)
                    d = self.phi(d)
                faces.append(orbit)
            self._faces = faces
        return self._faces

    def face_of(self, dart: Dart) -> List[Dart]:
        for face in self.faces():
            if dart in face:
                return face
        raise DiagramError("dart %s not in the embedding" % (dart,))

    def pieces(self) -> List[List[int]]:
        """ Vertex sets of the connected pieces, each sorted. """
        uf = UnionFind()
        for i in range(len(self.crossings_)):
            uf.add(i)
        if self.boundary_:
            uf.add(OUTER)
        for occ in self.occurrences_.values():
            if len(occ) == 2:
                uf.union(occ[0][0], occ[1][0])
        return [sorted(g) for g in uf.classes()]

    def check_planar(self):
        vertex_piece = {}
        pieces = self.pieces()
        for n, piece in enumerate(pieces):
            for v in piece:
                vertex_piece[v] = n
        euler = [len(piece) for piece in pieces]
        for occ in self.occurrences_.values():
            euler[vertex_piece[occ[0][0]]] -= 1
        for face in self.faces():
            euler[vertex_piece[face[0][0]]] += 1
        for n, chi in enumerate(euler):
            if chi != 2:
                raise DiagramError("diagram is not planar: piece %d has "
                                   "V - E + F = %d" % (n, chi))


def splice(crossings: Sequence[Crossing], boundary: Sequence[int],
           glue_pairs: Iterable[Tuple[int, int]]):
    """ Join edge labels pairwise. The caller has already removed whatever
        crossings and boundary points the gluing replaces; every glued class
        must be left with two loose ends (renamed to the smallest label that
        still has one) or none (the class closes into a free loop).

        :returns: ``(crossings, boundary, new_free_loops)``
    """
    uf = UnionFind()
    for x, y in glue_pairs:
        uf.union(x, y)
    if not uf.parent_:
        return tuple(crossings), tuple(boundary), 0

    remaining = {}
    for c in crossings:
        for label in c.ends_:
            remaining[label] = remaining.get(label, 0) + 1
    for label in boundary:
        remaining[label] = remaining.get(label, 0) + 1

    mapping = {}
    loops = 0
    for group in uf.classes():
        ends = sum(remaining.get(x, 0) for x in group)
        if ends == 0:
            loops += 1
        elif ends == 2:
            name = min(x for x in group if remaining.get(x, 0))
            for x in group:
                mapping[x] = name
        else:
            raise DiagramError("non-matching arc: glued class %s keeps %d "
                               "ends" % (group, ends))
    new_crossings = tuple(c.relabeled(mapping) for c in crossings)
    new_boundary = tuple(mapping.get(x, x) for x in boundary)
    return new_crossings, new_boundary, loops


__all__ = ['OUTER', 'Crossing', 'UnionFind', 'Embedding', 'splice']
