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

""" Label-free codes for diagrams and tangles. Two inputs get the same code
    exactly when some relabeling of edges (and renumbering of crossings)
    turns one into the other, with tangle boundaries matched point by point.
"""

import logging
from collections import deque
from typing import Dict, Sequence, Tuple

from linkforge.diagram.graph import OUTER, Crossing, Embedding

LOG = logging.getLogger(__name__)


def _read_from(pos: int) -> int:
    """ Crossings are read starting at an under end: the arrival position if
        it is one, otherwise the next one counterclockwise.
    """
    return pos if pos % 2 == 0 else (pos + 1) % 4


def _explore(emb: Embedding, queue: deque, numbering: Dict[int, int],
             visited: Dict[int, Tuple[int, ...]]):
    while queue:
        i, arrival = queue.popleft()
        if i in visited:
            continue
        start = _read_from(arrival)
        ends = emb.crossings_[i].ends_
        code = []
        for step in range(4):
            pos = (start + step) % 4
            label = ends[pos]
            if label not in numbering:
                numbering[label] = len(numbering)
            code.append(numbering[label])
            other = emb.alpha((i, pos))
            if other[0] != OUTER and other[0] not in visited:
                queue.append(other)
        visited[i] = min(tuple(code), tuple(code[2:] + code[:2]))


def _closed_piece_code(emb: Embedding, piece: Sequence[int]):
    best = None
    for i in piece:
        for start in (0, 2):
            visited = {}
            _explore(emb, deque([(i, start)]), {}, visited)
            code = tuple(sorted(visited.values()))
            if best is None or code < best:
                best = code
    return best


def canonical_code(crossings: Sequence[Crossing], boundary: Sequence[int] = (),
                   free_loops: int = 0):
    """ Hashable code, invariant under relabeling and crossing renumbering.

        Pieces attached to the boundary are numbered outward from the boundary
        points in order; closed pieces take the minimum over every starting
        under end.
    """
    emb = Embedding(crossings, boundary)
    numbering = {}
    visited = {}
    boundary_code = []
    queue = deque()
    for k, label in enumerate(emb.boundary_):
        if label not in numbering:
            numbering[label] = len(numbering)
        boundary_code.append(numbering[label])
        other = emb.alpha((OUTER, k))
        if other[0] != OUTER:
            queue.append(other)
        _explore(emb, queue, numbering, visited)
    attached = tuple(sorted(visited.values()))

    closed = []
    for piece in emb.pieces():
        if OUTER in piece or piece[0] in visited:
            continue
        closed.append(_closed_piece_code(emb, piece))
    return tuple(boundary_code), attached, tuple(sorted(closed)), free_loops


__all__ = ['canonical_code']
