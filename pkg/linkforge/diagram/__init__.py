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

from linkforge.diagram.graph import Crossing
from linkforge.diagram.pd import Diagram, parse_pd, serialize, components, \
    mirror, switch, linking_matrix_mod2
from linkforge.diagram.tangle import Tangle, parse_tangle, tangle_rotate, \
    tangle_compose, tangle_glue
from linkforge.diagram.braid import BraidWord, parse_braid, braid_closure
from linkforge.diagram.rational import rational_tangle, fraction_tangle, \
    continued_fraction
from linkforge.diagram.catalog import catalog, catalog_names

__all__ = ['Crossing', 'Diagram', 'parse_pd', 'serialize', 'components',
           'mirror', 'switch', 'linking_matrix_mod2', 'Tangle',
           'parse_tangle', 'tangle_rotate', 'tangle_compose', 'tangle_glue',
           'BraidWord', 'parse_braid', 'braid_closure', 'rational_tangle',
           'fraction_tangle', 'continued_fraction', 'catalog',
           'catalog_names']
