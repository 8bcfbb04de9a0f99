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

""" Closed link diagrams in planar-diagram notation: parsing and
    serialization, validation, strand traversal and the pure transformations
    every other module builds on.

    Text format, one record per line::

        # trefoil
        X 1 5 2 4
        X 3 1 4 6
        X 5 3 6 2
        O

    ``X a b c d`` is a crossing, ``O`` a free loop, ``#`` starts a comment.
"""

import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from linkforge.diagram.graph import Crossing, Embedding, UnionFind, splice
from linkforge.errors import DiagramError, ParseError

LOG = logging.getLogger(__name__)


class Diagram(object):
    """ An unoriented link diagram: crossings sorted by id plus a number of
        crossing-free circles. Values are immutable; every transformation
        returns a new Diagram.
    """

    def __init__(self, crossings: Iterable[Crossing] = (), free_loops: int = 0,
                 validate: bool = True) -> None:
        self.crossings_ = tuple(sorted(crossings, key=lambda c: c.id_))
        """ Crossings ordered by id. Ids are stable under moves, so they need
            not be contiguous.
        """

        # number of circles without crossings
        try:
            self.free_loops_ = int(free_loops)
        except (TypeError, ValueError):
            raise DiagramError("free loop count must be an integer, got %r"
                               % (free_loops,))

        self.embedding_ = Embedding(self.crossings_)
        self._index = {c.id_: i for i, c in enumerate(self.crossings_)}

        if validate:
            self.validate()

    def validate(self):
        if len(self._index) != len(self.crossings_):
            raise DiagramError("duplicate crossing id")
        if self.free_loops_ < 0:
            raise DiagramError("negative free loop count")
        self.embedding_.check_labels()
        self.embedding_.check_planar()

    def crossing(self, crossing_id: int) -> Crossing:
        try:
            return self.crossings_[self._index[crossing_id]]
        except KeyError:
            raise DiagramError("no crossing with id %s" % crossing_id)

    def index_of(self, crossing_id: int) -> int:
        if crossing_id not in self._index:
            raise DiagramError("no crossing with id %s" % crossing_id)
        return self._index[crossing_id]

    def has_crossing(self, crossing_id: int) -> bool:
        return crossing_id in self._index

    def labels(self) -> List[int]:
        return sorted(self.embedding_.occurrences_)

    def next_id(self) -> int:
        return max(self._index, default=-1) + 1

    def next_label(self) -> int:
        return max(self.embedding_.occurrences_, default=0) + 1

    def crossing_count(self) -> int:
        return len(self.crossings_)

    def replaced(self, crossings: Iterable[Crossing] = None,
                 free_loops: int = None) -> 'Diagram':
        return Diagram(self.crossings_ if crossings is None else crossings,
                       self.free_loops_ if free_loops is None else free_loops)

    def __eq__(self, other):
        return isinstance(other, Diagram) \
            and self.crossings_ == other.crossings_ \
            and self.free_loops_ == other.free_loops_

    def __hash__(self):
        return hash((self.crossings_, self.free_loops_))

    def __repr__(self):
        return "Diagram(%d crossings, %d loops)" % (len(self.crossings_),
                                                    self.free_loops_)


def parse_records(text: str, allow_boundary: bool = False):
    """ Split diagram text into ``(ends_list, loops, boundary)``.

        :raises ParseError: on a malformed record or empty input
    """
    ends_list = []
    loops = 0
    boundary = None
    records = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        records += 1
        tokens = line.split()
        head = tokens[0]
        try:
            values = [int(t) for t in tokens[1:]]
        except ValueError:
            raise ParseError("line %d: non-integer label in %r"
                             % (lineno, line))
        if head == 'X':
            if len(values) != 4:
                raise ParseError("line %d: crossing record needs 4 labels"
                                 % lineno)
            ends_list.append(tuple(values))
        elif head == 'O':
            if values:
                raise ParseError("line %d: loop record takes no labels"
                                 % lineno)
            loops += 1
        elif head == 'B' and allow_boundary:
            if boundary is not None:
                raise ParseError("line %d: second boundary record" % lineno)
            boundary = tuple(values)
        else:
            raise ParseError("line %d: unknown record %r" % (lineno, head))
    if records == 0:
        raise ParseError("empty input")
    return ends_list, loops, boundary


def parse_pd(text: str) -> Diagram:
    """ Parse the text diagram format. Crossing ids are assigned 0, 1, ... in
        record order.

        :raises ParseError: malformed record or empty input
        :raises DiagramError: a label not appearing exactly twice, or a
            non-planar record set
    """
    ends_list, loops, _ = parse_records(text)
    return Diagram((Crossing(i, e) for i, e in enumerate(ends_list)), loops)


def serialize(d: Diagram) -> str:
    lines = ["X %d %d %d %d" % c.ends_ for c in d.crossings_]
    lines.extend("O" for _ in range(d.free_loops_))
    return "\n".join(lines) + ("\n" if lines else "")


def to_json(d: Diagram) -> dict:
    """ JSON form ``{"crossings": [[a, b, c, d], ...], "loops": k}``. Ids are
        written under ``"ids"`` only when they are not 0, 1, ... in order.
    """
    out = {"crossings": [list(c.ends_) for c in d.crossings_],
           "loops": d.free_loops_}
    ids = [c.id_ for c in d.crossings_]
    if ids != list(range(len(ids))):
        out["ids"] = ids
    return out


def from_json(obj: dict) -> Diagram:
    if not isinstance(obj, dict) or "crossings" not in obj:
        raise ParseError("diagram JSON needs a 'crossings' list")
    crossings = obj["crossings"]
    ids = obj.get("ids", list(range(len(crossings))))
    if len(ids) != len(crossings):
        raise ParseError("'ids' and 'crossings' differ in length")
    try:
        built = [Crossing(i, [int(x) for x in e])
                 for i, e in zip(ids, crossings)]
    except (TypeError, ValueError):
        raise ParseError("crossing entries must be lists of 4 integers")
    loops = obj.get("loops", 0)
    if not built and not loops:
        raise ParseError("empty input")
    return Diagram(built, loops)


def component_classes(d: Diagram) -> List[List[int]]:
    """ Edge labels of each closed strand, ordered by smallest label. Free
        loops are not included.
    """
    uf = UnionFind(d.labels())
    for c in d.crossings_:
        uf.union(c.ends_[0], c.ends_[2])
        uf.union(c.ends_[1], c.ends_[3])
    return uf.classes()


def components(d: Diagram) -> int:
    """ Number of link components, free loops included. """
    return len(component_classes(d)) + d.free_loops_


def arcs(d: Diagram) -> List[List[int]]:
    """ Over-arcs: maximal runs of edges joined through over-crossings,
        ordered by smallest label. A closed strand without under-crossings is
        one arc.
    """
    uf = UnionFind(d.labels())
    for c in d.crossings_:
        uf.union(c.ends_[1], c.ends_[3])
    return uf.classes()


def arc_index(d: Diagram) -> Dict[int, int]:
    """ Map every edge label to the index of its arc in :py:func:`arcs`. """
    out = {}
    for n, group in enumerate(arcs(d)):
        for label in group:
            out[label] = n
    return out


def switch(d: Diagram, crossing_id: int) -> Diagram:
    """ Exchange over and under at one crossing. """
    target = d.crossing(crossing_id)
    return Diagram((c.switched() if c is target else c for c in d.crossings_),
                   d.free_loops_)


def mirror(d: Diagram) -> Diagram:
    return Diagram((c.switched() for c in d.crossings_), d.free_loops_)


def relabel(d: Diagram, mapping: Dict[int, int]) -> Diagram:
    """ Rename edge labels; ``mapping`` must be injective on the labels. """
    return Diagram((c.relabeled(mapping) for c in d.crossings_),
                   d.free_loops_)


def remove_and_glue(d: Diagram, removed_ids: Iterable[int],
                    glue_pairs: Iterable[Tuple[int, int]],
                    extra: Iterable[Crossing] = ()) -> Diagram:
    """ Drop some crossings, add ``extra`` ones, then join loose label pairs.
        Classes closing up completely become free loops.
    """
    removed = set(removed_ids)
    for cid in removed:
        d.crossing(cid)
    kept = [c for c in d.crossings_ if c.id_ not in removed]
    kept.extend(extra)
    crossings, _, loops = splice(kept, (), glue_pairs)
    return Diagram(crossings, d.free_loops_ + loops)


def smoothings(d: Diagram, crossing_id: int) -> Tuple[Diagram, Diagram]:
    """ The two smoothings at a crossing ``(a, b, c, d)``: joining a-b, c-d
        and joining a-d, b-c.
    """
    a, b, c, e = d.crossing(crossing_id).ends_
    return (remove_and_glue(d, [crossing_id], [(a, b), (c, e)]),
            remove_and_glue(d, [crossing_id], [(a, e), (b, c)]))


def strand_walks(crossings: Sequence[Crossing]) -> List[List[Tuple[int, int]]]:
    """ Traverse every closed strand once, giving each an orientation.

        A walk is the list of ``(crossing index, entry position)`` pairs in
        order of passage. Strands are walked in order of their smallest label,
        starting along that label toward the end whose onward edge has the
        smaller label. Straight-through pairs never change under a crossing
        switch, so neither do the walks.
    """
    emb = Embedding(crossings)
    seen = set()
    walks = []
    for label in sorted(emb.occurrences_):
        if label in seen:
            continue
        first, second = emb.darts_of(label)
        start = first
        if emb.label(_exit(second)) < emb.label(_exit(first)):
            start = second
        walk = []
        dart = start
        while True:
            seen.add(emb.label(dart))
            walk.append(dart)
            out = _exit(dart)
            seen.add(emb.label(out))
            dart = emb.alpha(out)
            if dart == start:
                break
        walks.append(walk)
    return walks


def _exit(dart):
    return dart[0], (dart[1] + 2) % 4


def crossing_signs(d: Diagram) -> Dict[int, int]:
    """ Sign of every crossing (by id) for the orientation of
        :py:func:`strand_walks`: +1 when the under-strand enters at position 0
        and the over-strand at position 3, or both the other way round.
    """
    under_in = {}
    over_in = {}
    for walk in strand_walks(d.crossings_):
        for i, pos in walk:
            if pos % 2 == 0:
                under_in[i] = pos
            else:
                over_in[i] = pos
    out = {}
    for i, c in enumerate(d.crossings_):
        u = 1 if under_in[i] == 0 else -1
        o = 1 if over_in[i] == 3 else -1
        out[c.id_] = u * o
    return out


def self_writhe(d: Diagram) -> int:
    """ Sum of signs over crossings whose two strands belong to the same
        component.
    """
    walk_of = {}
    for n, walk in enumerate(strand_walks(d.crossings_)):
        for i, pos in walk:
            walk_of[(i, pos % 2)] = n
    signs = crossing_signs(d)
    return sum(signs[c.id_] for i, c in enumerate(d.crossings_)
               if walk_of[(i, 0)] == walk_of[(i, 1)])


def first_ascending(d: Diagram) -> Optional[int]:
    """ Id of the first crossing met on its under-strand by the traversal, or
        None when the diagram is descending.
    """
    seen = set()
    for walk in strand_walks(d.crossings_):
        for i, pos in walk:
            if i in seen:
                continue
            seen.add(i)
            if pos % 2 == 0:
                return d.crossings_[i].id_
    return None


def linking_matrix_mod2(d: Diagram) -> np.ndarray:
    """ Symmetric 0/1 matrix of the pairwise linking numbers mod 2.
        Components are ordered as in :py:func:`component_classes`, free loops
        last. The parity does not depend on the orientations chosen.

        :raises DiagramError: fewer than two components
    """
    classes = component_classes(d)
    size = len(classes) + d.free_loops_
    if size < 2:
        raise DiagramError("linking matrix needs at least 2 components, "
                           "got %d" % size)
    comp_of = {}
    for n, group in enumerate(classes):
        for label in group:
            comp_of[label] = n
    signs = crossing_signs(d)
    doubled = np.zeros((size, size), dtype=int)
    for c in d.crossings_:
        i, j = comp_of[c.ends_[0]], comp_of[c.ends_[1]]
        if i != j:
            doubled[i, j] += signs[c.id_]
            doubled[j, i] += signs[c.id_]
    return (doubled // 2) % 2


__all__ = ['Diagram', 'parse_records', 'parse_pd', 'serialize', 'to_json',
           'from_json', 'component_classes', 'components', 'arcs',
           'arc_index', 'switch', 'mirror', 'relabel', 'remove_and_glue',
           'smoothings', 'strand_walks', 'crossing_signs', 'self_writhe',
           'first_ascending', 'linking_matrix_mod2']
