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

""" Bundled diagrams of named links. Every entry is checked against its
    expected crossing count, component count and determinant the first time
    it is built.
"""

import logging
import re
from typing import Callable, Dict, List, NamedTuple, Optional

from linkforge.diagram.braid import BraidWord, braid_closure
from linkforge.diagram.graph import Crossing
from linkforge.diagram.pd import Diagram, components
from linkforge.diagram.rational import rational_tangle
from linkforge.diagram.tangle import numerator
from linkforge.errors import CatalogError

LOG = logging.getLogger(__name__)

CATALOG_VERSION = "1"
""" Bumped whenever a bundled diagram changes. """

_T_RE = re.compile(r'^T_(\d+)$')

Entry = NamedTuple('Entry', [('build', Callable[[], Diagram]),
                             ('crossings', int),
                             ('components', int),
                             ('determinant', Optional[int])])

NINE_40_PD = [(2, 1, 6, 5), (5, 4, 9, 8), (8, 7, 3, 2), (1, 3, 11, 10),
              (4, 6, 14, 13), (7, 9, 17, 16), (10, 12, 15, 14),
              (13, 15, 18, 17), (16, 18, 12, 11)]
""" 9_40 as a planar diagram code. """


def _rational(*terms) -> Callable[[], Diagram]:
    return lambda: numerator(rational_tangle(terms))


def _braid(strands: int, letters: List[int]) -> Callable[[], Diagram]:
    return lambda: braid_closure(BraidWord(strands, letters))


def _pd(records) -> Callable[[], Diagram]:
    return lambda: Diagram(Crossing(i, e) for i, e in enumerate(records))


def nine_49() -> Diagram:
    """ The closure of ``(s1^2 s2^-1)^3`` with the disk around its first two
        crossings turned a quarter, which turns the pretzel-like closure into
        9_49.
    """
    d = braid_closure(BraidWord(3, [1, 1, -2] * 3))
    first, second = d.crossing(0), d.crossing(1)
    # NW, SW, SE, NE of the disk around the first two crossings
    corners = [first.ends_[3], first.ends_[0], second.ends_[1],
               second.ends_[2]]
    turn = {corners[1]: corners[0], corners[2]: corners[1],
            corners[3]: corners[2], corners[0]: corners[3]}
    crossings = [c.relabeled(turn) if c.id_ in (0, 1) else c
                 for c in d.crossings_]
    return Diagram(crossings, d.free_loops_)


_ENTRIES = {
    "unknot": Entry(lambda: Diagram((), 1), 0, 1, 1),
    "hopf": Entry(_rational(2), 2, 2, 2),
    "3_1": Entry(_rational(3), 3, 1, 3),
    "4_1": Entry(_rational(2, 2), 4, 1, 5),
    "whitehead": Entry(_rational(2, 1, 2), 5, 2, 8),
    "7_4": Entry(_rational(3, 1, 3), 7, 1, 15),
    "8_8": Entry(_rational(2, 1, 3, 2), 8, 1, 25),
    "8_16": Entry(_braid(3, [1, 1, -2, 1, 1, -2, 1, -2]), 8, 1, 35),
    "9_40": Entry(_pd(NINE_40_PD), 9, 1, 75),
    "9_49": Entry(nine_49, 9, 1, 25),
    "borromean": Entry(_braid(3, [1, -2] * 3), 6, 3, 16),
    "chen_braid": Entry(_braid(5, [1, 2, 3, 4] * 10), 40, 5, None),
    "parallel_borromean": Entry(_braid(6, [2, 1, 3, 2, -4, -3, -5, -4] * 3),
                                24, 6, None),
    "closure_(σ1σ2)^6": Entry(_braid(3, [1, 2] * 6), 12, 3, 0),
}

ALIASES = {"closure_(s1s2)^6": "closure_(σ1σ2)^6"}

_cache = {}  # type: Dict[str, Diagram]


def catalog_names() -> List[str]:
    """ Bundled names; ``T_n`` stands for the family of trivial links. """
    return sorted(_ENTRIES) + ["T_n"]


def _lookup(name: str) -> Entry:
    name = ALIASES.get(name, name)
    if name in _ENTRIES:
        return _ENTRIES[name]
    m = _T_RE.match(name)
    if m is not None and int(m.group(1)) >= 1:
        n = int(m.group(1))
        return Entry(lambda: Diagram((), n), 0, n, 1 if n == 1 else 0)
    raise CatalogError("unknown catalog name %r" % name)


def catalog(name: str) -> Diagram:
    """ Return the bundled diagram for ``name``.

        :raises CatalogError: unknown name, or the built diagram fails its
            crossing, component or determinant check
    """
    key = ALIASES.get(name, name)
    if key in _cache:
        return _cache[key]
    entry = _lookup(key)
    d = entry.build()
    verify_entry(key, d, entry)
    _cache[key] = d
    return d


def expected(name: str) -> Entry:
    return _lookup(name)


def verify_entry(name: str, d: Diagram, entry: Entry):
    from linkforge.coloring.fox import determinant

    if d.crossing_count() != entry.crossings:
        raise CatalogError("%s: %d crossings, expected %d"
                           % (name, d.crossing_count(), entry.crossings))
    if components(d) != entry.components:
        raise CatalogError("%s: %d components, expected %d"
                           % (name, components(d), entry.components))
    if entry.determinant is not None:
        det = determinant(d)
        if det != entry.determinant:
            raise CatalogError("%s: determinant %d, expected %d"
                               % (name, det, entry.determinant))
    LOG.debug("catalog entry %s verified", name)


__all__ = ['CATALOG_VERSION', 'NINE_40_PD', 'catalog', 'catalog_names',
           'expected', 'nine_49', 'verify_entry']
