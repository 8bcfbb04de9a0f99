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
Rotors. A tangle with 2n ends is an n-rotor when turning it by ``2pi/n``,
two boundary positions, gives back the same tangle. Flipping a rotor over
(rotating it by pi about an axis in the plane) while keeping the rest of the
diagram, the stator, gives the rotant.
"""

import logging
from typing import Iterable, Optional, Tuple

from linkforge.diagram.graph import splice
from linkforge.diagram.pd import Diagram
from linkforge.diagram.tangle import Tangle, extract_tangle, flip_tangle, \
    shifted, tangle_glue, tangle_rotate
from linkforge.errors import MoveError, TangleError
from linkforge.symplectic import SymplecticSubspace, reflect_subspace, \
    rotate_subspace, tangle_lagrangian

LOG = logging.getLogger(__name__)


def is_n_rotor(t: Tangle, n: int) -> bool:
    """ :raises TangleError: ``t`` does not have ``2n`` ends """
    if len(t.boundary_) != 2 * n:
        raise TangleError("an %d-rotor has %d ends, this tangle has %d"
                          % (n, 2 * n, len(t.boundary_)))
    return tangle_rotate(t, 2).code() == t.code()


def rotor_flip(stator: Tangle, rotor: Tangle) -> Diagram:
    """ Glue the flipped rotor back into the stator. """
    return tangle_glue(flip_tangle(rotor), stator)


def split_rotor(d: Diagram, crossing_ids: Iterable[int],
                base: Optional[int] = None) -> Tuple[Tangle, Tangle]:
    """ ``(rotor, stator)`` for the disk holding ``crossing_ids``. """
    try:
        return extract_tangle(d, crossing_ids, base)
    except TangleError as exc:
        raise MoveError("rotor region %s: %s" % (sorted(crossing_ids), exc))


def flip_region(d: Diagram, crossing_ids: Iterable[int],
                base: Optional[int] = None,
                order: Optional[int] = None) -> Diagram:
    """ Rotant of ``d`` for the rotor made of ``crossing_ids``.

        :param order: if given, the rotor must be an ``order``-rotor
        :raises MoveError: the crossings do not fill a disk, or the claimed
            symmetry does not hold
    """
    ids = sorted(crossing_ids)
    rotor, stator = split_rotor(d, ids, base)
    if order is not None:
        try:
            symmetric = is_n_rotor(rotor, order)
        except TangleError as exc:
            raise MoveError(str(exc))
        if not symmetric:
            raise MoveError("crossings %s are not a %d-rotor" % (ids, order))
    LOG.debug("flipping rotor %s with %d ends", ids, len(rotor.boundary_))
    return rotor_flip(stator, rotor)


def necklace_rotor(piece: Tangle, n: int) -> Tangle:
    """ An n-rotor made of ``n`` copies of ``piece`` set around a circle,
        north side out. Copy ``k`` holds boundary points ``2k`` (its last
        end) and ``2k + 1`` (its first end); its other left ends meet the
        right ends of copy ``k + 1`` at the same height.

        :raises TangleError: ``n < 2`` or ``piece`` has fewer than 4 ends
    """
    if n < 2 or piece.n < 2:
        raise TangleError("a necklace needs n >= 2 copies of a tangle with "
                          "at least 4 ends, got n=%d and %d ends"
                          % (n, len(piece.boundary_)))
    labels = piece.labels()
    span = max(labels) - min(labels) + 1 if labels else 1
    copies = [shifted(piece, k * span, k * piece.next_id())
              for k in range(n)]
    size = len(piece.boundary_)
    m = piece.n
    boundary = []
    pairs = []
    for k, t in enumerate(copies):
        boundary.extend((t.boundary_[size - 1], t.boundary_[0]))
        right = copies[(k + 1) % n].boundary_
        pairs.extend((t.boundary_[i], right[size - 1 - i])
                     for i in range(1, m))
    crossings, boundary, loops = splice(
        [c for t in copies for c in t.crossings_], boundary, pairs)
    return Tangle(crossings, boundary, n * piece.free_loops_ + loops)


def rotor_lagrangian(rotor: Tangle, p: int) -> SymplecticSubspace:
    """ Boundary Lagrangian of an n-rotor, checked to be fixed by the
        rotation that fixes the rotor.

        :raises MoveError: the Lagrangian moves under that rotation
    """
    w = tangle_lagrangian(rotor, p)
    if rotate_subspace(w, 2) != w:
        raise MoveError("boundary Lagrangian of %r is not rotation invariant"
                        % rotor)
    return w


def flip_keeps_colorings(rotor: Tangle, p: int) -> bool:
    """ Whether flipping the rotor leaves ``Col_p`` unchanged for every
        stator. It does exactly when the reversed boundary Lagrangian is the
        Lagrangian itself; otherwise the rotor glued to a copy of itself
        changes under the flip.
    """
    w = rotor_lagrangian(rotor, p)
    kept = reflect_subspace(w) == w
    LOG.debug("rotor with %d ends %s Col_%d under a flip",
              len(rotor.boundary_), "keeps" if kept else "may change", p)
    return kept


__all__ = ['is_n_rotor', 'rotor_flip', 'split_rotor', 'flip_region',
           'necklace_rotor', 'rotor_lagrangian', 'flip_keeps_colorings']
