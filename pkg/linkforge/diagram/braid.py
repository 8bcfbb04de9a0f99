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

""" Braid words and their closures. Text form: ``BR k: i1 i2 ...``. """

import logging
import re
from typing import List, Sequence

from linkforge.diagram.graph import Crossing, splice
from linkforge.diagram.pd import Diagram
from linkforge.errors import DiagramError, ParseError

LOG = logging.getLogger(__name__)

_BRAID_RE = re.compile(r'^\s*BR\s+(-?\d+)\s*:(.*)$')


class BraidWord(object):
    """ Word in the braid generators on ``strand_count_`` strands; letter
        ``+i`` is ``sigma_i`` and ``-i`` its inverse.
    """

    def __init__(self, strand_count: int, letters: Sequence[int]) -> None:
        self.strand_count_ = int(strand_count)
        self.letters_ = tuple(int(x) for x in letters)
        if self.strand_count_ < 1:
            raise DiagramError("braid needs at least one strand")
        for x in self.letters_:
            if not 1 <= abs(x) <= self.strand_count_ - 1:
                raise DiagramError("generator %d out of range for %d strands"
                                   % (x, self.strand_count_))

    def permutation(self) -> List[int]:
        """ Where each starting position ends up. """
        perm = list(range(self.strand_count_))
        for x in self.letters_:
            i = abs(x) - 1
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
        return perm

    def cycle_count(self) -> int:
        """ Number of cycles of the underlying permutation, which is the
            component count of the closure.
        """
        perm = self.permutation()
        # perm[p] is the strand sitting at position p; cycles are the same
        # for a permutation and its inverse.
        seen = set()
        cycles = 0
        for start in range(self.strand_count_):
            if start in seen:
                continue
            cycles += 1
            x = start
            while x not in seen:
                seen.add(x)
                x = perm[x]
        return cycles

    def exponent_sum(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters_)

    def __eq__(self, other):
        return isinstance(other, BraidWord) \
            and self.strand_count_ == other.strand_count_ \
            and self.letters_ == other.letters_

    def __hash__(self):
        return hash((self.strand_count_, self.letters_))

    def __repr__(self):
        return "BraidWord(%d, %s)" % (self.strand_count_, list(self.letters_))


def parse_braid(text: str) -> BraidWord:
    lines = [line.split('#', 1)[0].strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines:
        raise ParseError("empty input")
    if len(lines) != 1:
        raise ParseError("braid text must be a single 'BR k: ...' record")
    m = _BRAID_RE.match(lines[0])
    if m is None:
        raise ParseError("malformed braid record %r" % lines[0])
    try:
        letters = [int(t) for t in m.group(2).split()]
    except ValueError:
        raise ParseError("non-integer braid letter in %r" % lines[0])
    return BraidWord(int(m.group(1)), letters)


def serialize_braid(w: BraidWord) -> str:
    return "BR %d: %s\n" % (w.strand_count_,
                            " ".join(str(x) for x in w.letters_))


def braid_to_json(w: BraidWord) -> dict:
    return {"strands": w.strand_count_, "letters": list(w.letters_)}


def braid_from_json(obj: dict) -> BraidWord:
    if not isinstance(obj, dict) or "strands" not in obj:
        raise ParseError("braid JSON needs 'strands' and 'letters'")
    return BraidWord(obj["strands"], obj.get("letters", []))


def braid_closure(w: BraidWord) -> Diagram:
    """ Standard closure. Strands run left to right, position 1 on top; the
        crossings get ids in letter order. A positive letter carries
        the strand from the upper position over the other one.
    """
    n = w.strand_count_
    initial = list(range(1, n + 1))
    current = list(initial)
    next_label = n + 1
    crossings = []
    for cid, x in enumerate(w.letters_):
        i = abs(x) - 1
        in_upper, in_lower = current[i], current[i + 1]
        out_upper, out_lower = next_label, next_label + 1
        next_label += 2
        if x > 0:
            ends = (in_lower, out_lower, out_upper, in_upper)
        else:
            ends = (in_upper, in_lower, out_lower, out_upper)
        crossings.append(Crossing(cid, ends))
        current[i], current[i + 1] = out_upper, out_lower

    loops = 0
    pairs = []
    for start, end in zip(initial, current):
        if start == end:
            loops += 1
        else:
            pairs.append((end, start))
    crossings, _, extra = splice(crossings, (), pairs)
    return Diagram(crossings, loops + extra)


__all__ = ['BraidWord', 'parse_braid', 'serialize_braid', 'braid_to_json',
           'braid_from_json', 'braid_closure']
