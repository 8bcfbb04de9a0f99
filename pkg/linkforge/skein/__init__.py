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
The two-variable Kauffman polynomial by skein recursion, and its value at
``a = 1, x = 2cos(2pi/5)``.
"""
from linkforge.skein.laurent import LaurentPoly2
from linkforge.skein.golden import GoldenValue, PhiDecomposition, decompose
from linkforge.skein.kauffman import kauffman_framed, eval_phi5, \
    phi5_decomposition, clear_cache, skein_quadruple, \
    verify_double_twist_sign

__all__ = ['LaurentPoly2', 'GoldenValue', 'PhiDecomposition', 'decompose',
           'kauffman_framed', 'eval_phi5', 'phi5_decomposition',
           'clear_cache', 'skein_quadruple', 'verify_double_twist_sign']
