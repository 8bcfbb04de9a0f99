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
Core groups of diagrams, the double branched cover, and the graded Lie
quotients of Burnside groups of links.
"""
from linkforge.burnside.presentation import GroupPresentation, core_group, \
    double_cover_presentation
from linkforge.burnside.quotient import GradedLieQuotient, BurnsideReport, \
    lie_quotient, burnside_report

__all__ = ['GroupPresentation', 'core_group', 'double_cover_presentation',
           'GradedLieQuotient', 'BurnsideReport', 'lie_quotient',
           'burnside_report']
