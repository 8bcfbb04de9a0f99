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


""" Moves and the sites they act on, with their JSON form::

        {"move": {"variant": "NMove", "params": [5]},
         "site": {"edges": [12, 7], "side": 0}}

    Insertion sites name edges (``"O"`` for a free loop), deletion sites name
    the crossing ids the move consumes.
"""

import logging
from math import gcd
from typing import Optional, Sequence, Tuple, Union

from linkforge.errors import MoveError

LOG = logging.getLogger(__name__)

LOOP = "O"
""" Edge reference standing for a free loop. """

EdgeRef = Union[int, str]

VARIANTS = ('R1+', 'R1-', 'R2+', 'R2-', 'R3', 'NMove', 'SQMove',
            'RationalMove', 'RotorFlip')

PARAM_COUNTS = {'R1+': (1,), 'R1-': (0,), 'R2+': (0, 1), 'R2-': (0,),
                'R3': (0,), 'NMove': (1,), 'SQMove': (2,),
                'RationalMove': (2,), 'RotorFlip': (0, 1)}
""" Allowed parameter tuple lengths per variant. """

TWIST_VARIANTS = ('NMove', 'SQMove', 'RationalMove')


class MoveSite(object):
    """ Where a move acts.

        :param edges: edge labels or :py:data:`LOOP` (two for insertions, one
            for R1+, three for R3)
        :param side: which end of the first edge starts the insertion frame
        :param crossings: crossing ids consumed by a deletion or marking a
            rotor
        :param base: for rotor flips, the cut edge at boundary position 0
    """

    def __init__(self, edges: Sequence[EdgeRef] = (), side: int = 0,
                 crossings: Sequence[int] = (),
                 base: Optional[int] = None) -> None:
        self.edges_ = tuple(_edge_ref(e) for e in edges)
        self.side_ = int(side)
        self.crossings_ = tuple(int(c) for c in crossings)
        self.base_ = base
        if self.side_ not in (0, 1):
            raise MoveError("site side must be 0 or 1, got %s" % side)

    def is_deletion(self) -> bool:
        return bool(self.crossings_)

    def to_json(self) -> dict:
        out = {}
        if self.edges_:
            out["edges"] = list(self.edges_)
            out["side"] = self.side_
        if self.crossings_:
            out["crossings"] = list(self.crossings_)
        if self.base_ is not None:
            out["base"] = self.base_
        return out

    @staticmethod
    def from_json(obj: dict) -> 'MoveSite':
        if not isinstance(obj, dict):
            raise MoveError("site must be a JSON object")
        return MoveSite(obj.get("edges", ()), obj.get("side", 0),
                        obj.get("crossings", ()), obj.get("base"))

    def __eq__(self, other):
        return isinstance(other, MoveSite) and \
            self.to_json() == other.to_json()

    def __hash__(self):
        return hash((self.edges_, self.side_, self.crossings_, self.base_))

    def __repr__(self):
        return "MoveSite(%s)" % self.to_json()


def _edge_ref(e) -> EdgeRef:
    if e == LOOP:
        return LOOP
    if isinstance(e, bool):
        raise MoveError("edge reference %r is not a label" % e)
    try:
        return int(e)
    except (TypeError, ValueError):
        raise MoveError("edge reference %r is neither a label nor %r"
                        % (e, LOOP))


class Move(object):
    """ A move variant with its integer parameters and its site. """

    def __init__(self, variant: str, params: Sequence[int] = (),
                 site: MoveSite = None) -> None:
        if variant not in VARIANTS:
            raise MoveError("unknown move variant %r" % variant)
        self.variant_ = variant
        try:
            self.params_ = tuple(int(x) for x in params)  # type: Tuple[int, ...]
        except (TypeError, ValueError):
            raise MoveError("%s parameters must be integers" % variant)
        self.site_ = site or MoveSite()
        self._check()

    def _check(self):
        v, params = self.variant_, self.params_
        if len(params) not in PARAM_COUNTS[v]:
            raise MoveError("%s takes %s parameters, got %d"
                            % (v, " or ".join(str(n) for n in PARAM_COUNTS[v]),
                               len(params)))
        if v == 'R1+' and params[0] not in (1, -1):
            raise MoveError("R1+ sign must be 1 or -1")
        if v == 'R2+' and params and params[0] not in (0, 1):
            raise MoveError("R2+ over strand must be 0 or 1")
        if v == 'NMove' and params[0] == 0:
            raise MoveError("NMove needs a nonzero twist count")
        if v == 'SQMove' and 0 in params:
            raise MoveError("SQMove needs nonzero s and q")
        if v == 'RationalMove':
            p, q = params
            if q == 0 or gcd(p, q) != 1:
                raise MoveError("RationalMove %d/%d needs q != 0 and "
                                "gcd(p, q) = 1" % (p, q))
        if v == 'RotorFlip' and params and params[0] < 1:
            raise MoveError("rotor order must be positive")

    def two_two_count(self) -> int:
        """ Number of +-(2,2)-moves this move stands for: SQMove(2,2) and
            RationalMove(5/2) of either sign count one, NMove(+-5) counts two.
        """
        v, params = self.variant_, self.params_
        if v == 'SQMove':
            s, q = params
            return 1 if abs(s) == 2 and s == q else 0
        if v == 'RationalMove':
            p, q = params
            return 1 if abs(p) == 5 and abs(q) == 2 else 0
        if v == 'NMove':
            return 2 if abs(params[0]) == 5 else 0
        return 0

    def to_json(self) -> dict:
        return {"move": {"variant": self.variant_,
                         "params": list(self.params_)},
                "site": self.site_.to_json()}

    @staticmethod
    def from_json(obj: dict) -> 'Move':
        if not isinstance(obj, dict) or not isinstance(obj.get("move"), dict):
            raise MoveError("step needs a 'move' object")
        m = obj["move"]
        return Move(m.get("variant"), m.get("params", ()),
                    MoveSite.from_json(obj.get("site", {})))

    def __eq__(self, other):
        return isinstance(other, Move) and self.to_json() == other.to_json()

    def __hash__(self):
        return hash((self.variant_, self.params_, self.site_))

    def __repr__(self):
        return "%s%s@%s" % (self.variant_, list(self.params_),
                            self.site_.to_json())


__all__ = ['LOOP', 'VARIANTS', 'TWIST_VARIANTS', 'MoveSite', 'Move']
