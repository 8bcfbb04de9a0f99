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


""" Finitely presented groups with words as tuples of signed integers:
    letter ``k + 1`` is generator ``k`` and ``-(k + 1)`` its inverse.
"""

import logging
from typing import Dict, List, NamedTuple, Sequence, Set, Tuple

import numpy as np

from linkforge.diagram.pd import Diagram, arc_index, arcs
from linkforge.errors import GroupError

LOG = logging.getLogger(__name__)

Word = Tuple[int, ...]


def free_reduce(word: Sequence[int]) -> Word:
    out = []
    for letter in word:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def cyclic_reduce(word: Sequence[int]) -> Word:
    w = free_reduce(word)
    start, stop = 0, len(w)
    while stop - start > 1 and w[start] == -w[stop - 1]:
        start += 1
        stop -= 1
    return w[start:stop]


def invert(word: Sequence[int]) -> Word:
    return tuple(-letter for letter in reversed(word))


def letter(generator: int, exponent: int = 1) -> int:
    return generator + 1 if exponent > 0 else -(generator + 1)


class GroupPresentation(object):
    """ Generators by name and relators as reduced words. """

    def __init__(self, generators: Sequence[str],
                 relators: Sequence[Sequence[int]] = ()) -> None:
        self.generators_ = list(generators)
        self.relators_ = []  # type: List[Word]
        for r in relators:
            w = cyclic_reduce(r)
            if any(abs(x) > len(self.generators_) or x == 0 for x in w):
                raise GroupError("relator %s uses an unknown generator"
                                 % (w,))
            if w:
                self.relators_.append(w)

    @property
    def rank(self) -> int:
        return len(self.generators_)

    def abelian_matrix(self) -> np.ndarray:
        """ Exponent sums: one row per relator, one column per generator. """
        m = np.zeros((len(self.relators_), self.rank), dtype=np.int64)
        for row, w in enumerate(self.relators_):
            for x in w:
                m[row, abs(x) - 1] += 1 if x > 0 else -1
        return m

    def to_json(self) -> dict:
        return {"generators": list(self.generators_),
                "relators": [list(w) for w in self.relators_]}

    def __repr__(self):
        return "GroupPresentation(%d generators, %d relators)" % (
            self.rank, len(self.relators_))


def core_group(d: Diagram) -> GroupPresentation:
    """ One generator per over-arc, then one per free loop, and the relator
        ``y_i y_j^-1 y_i y_k^-1`` for every crossing with over-arc ``y_i`` and
        under-arcs ``y_j, y_k``. Abelianized, the rows are the Fox coloring
        relations.
    """
    index = arc_index(d)
    count = len(arcs(d)) + d.free_loops_
    relators = []
    for c in d.crossings_:
        over = index[c.ends_[1]]
        j, k = index[c.ends_[0]], index[c.ends_[2]]
        relators.append((letter(over), letter(j, -1), letter(over),
                         letter(k, -1)))
    names = ["y%d" % n for n in range(count)]
    g = GroupPresentation(names, relators)
    LOG.debug("core group of %s: %r", d, g)
    return g


def kill_generator(g: GroupPresentation, killed: int) -> GroupPresentation:
    """ Set generator ``killed`` to the identity and renumber the rest. """
    if not 0 <= killed < g.rank:
        raise GroupError("no generator %d in %r" % (killed, g))

    def renumber(x: int) -> int:
        k = abs(x) - 1
        shifted = k if k < killed else k - 1
        return letter(shifted, x)

    relators = [tuple(renumber(x) for x in w if abs(x) - 1 != killed)
                for w in g.relators_]
    names = [n for i, n in enumerate(g.generators_) if i != killed]
    return GroupPresentation(names, relators)


def double_cover_presentation(g: GroupPresentation,
                              killed: int = 0) -> GroupPresentation:
    """ The core group is the fundamental group of the double branched
        cover free product Z; putting any one generator to 1 leaves the
        fundamental group of the cover.

        :raises GroupError: the presentation has no generators
    """
    if g.rank == 0:
        raise GroupError("empty presentation has no generator to kill")
    return kill_generator(g, killed)


Action = NamedTuple('Action', [('generator', int), ('relator', int)])
""" Define ``generator`` from relator number ``relator``, or seed it as a new
    free generator when ``relator`` is -1.
"""

Elimination = NamedTuple('Elimination', [('actions', List[Action]),
                                         ('seeds', List[int]),
                                         ('remaining', List[int])])


def _solvable(w: Word, defined: Set[int]):
    """ The one undefined generator of ``w`` if it occurs exactly once. """
    undefined = [abs(x) - 1 for x in w if abs(x) - 1 not in defined]
    if len(undefined) == 1:
        return undefined[0]
    return None


def _propagate(g: GroupPresentation, defined: Set[int],
               used: Set[int]) -> List[Action]:
    added = []
    changed = True
    while changed:
        changed = False
        for n, w in enumerate(g.relators_):
            if n in used:
                continue
            k = _solvable(w, defined)
            if k is not None:
                defined.add(k)
                used.add(n)
                added.append(Action(k, n))
                changed = True
    return added


def eliminate(g: GroupPresentation) -> Elimination:
    """ Tietze elimination: a relator in which exactly one undefined
        generator occurs, and occurs once, defines that generator. When none
        is left, seed the undefined generator that lets the most definitions
        follow. Used relators are dropped; the rest remain.
    """
    defined = set()  # type: Set[int]
    used = set()  # type: Set[int]
    actions = _propagate(g, defined, used)
    seeds = []
    while len(defined) < g.rank:
        best, best_gain = None, -1
        for k in range(g.rank):
            if k in defined:
                continue
            trial_defined, trial_used = defined | {k}, set(used)
            gain = len(_propagate(g, trial_defined, trial_used))
            if gain > best_gain:
                best, best_gain = k, gain
        seeds.append(best)
        defined.add(best)
        actions.append(Action(best, -1))
        actions.extend(_propagate(g, defined, used))
    remaining = [n for n in range(len(g.relators_)) if n not in used]
    LOG.debug("eliminated %d of %d generators, %d relators remain",
              g.rank - len(seeds), g.rank, len(remaining))
    return Elimination(actions, seeds, remaining)


def evaluate_word(group, values: Dict[int, object], w: Sequence[int]):
    """ Multiply out ``w`` in ``group`` given a value per generator. """
    out = group.identity()
    for x in w:
        v = values[abs(x) - 1]
        out = group.multiply(out, v if x > 0 else group.inverse(v))
    return out


def evaluate_elimination(group, g: GroupPresentation, plan: Elimination):
    """ Realize the eliminated presentation in ``group``, whose generators
        stand for the seeds in order.

        :returns: the images of the remaining relators
    """
    values = {}
    seed_no = 0
    for action in plan.actions:
        if action.relator < 0:
            values[action.generator] = group.generator(seed_no)
            seed_no += 1
            continue
        w = g.relators_[action.relator]
        t = next(i for i, x in enumerate(w) if abs(x) - 1 == action.generator)
        left = evaluate_word(group, values, w[:t])
        right = evaluate_word(group, values, w[t + 1:])
        # u x^e v = 1 gives x^e = u^-1 v^-1
        power = group.multiply(group.inverse(left), group.inverse(right))
        values[action.generator] = power if w[t] > 0 else \
            group.inverse(power)
    return [evaluate_word(group, values, g.relators_[n])
            for n in plan.remaining]


__all__ = ['Word', 'free_reduce', 'cyclic_reduce', 'invert', 'letter',
           'GroupPresentation', 'core_group', 'kill_generator',
           'double_cover_presentation', 'Action', 'Elimination', 'eliminate',
           'evaluate_word', 'evaluate_elimination']
