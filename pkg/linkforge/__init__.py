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

from linkforge.util import start_linkforge
from linkforge.diagram import Diagram, Tangle, parse_pd, catalog
from linkforge.coloring import coloring_space, determinant
from linkforge.skein import eval_phi5, kauffman_framed
from linkforge.bounds import bound_report
from linkforge.burnside import burnside_report

start_linkforge()
