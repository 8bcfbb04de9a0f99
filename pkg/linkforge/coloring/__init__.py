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
Fox colorings over Z_k, Smith normal form and linear algebra over F_p.
"""
from linkforge.coloring.fox import ColoringSpace, BoundaryColoringSpace, \
    coloring_space, boundary_image, determinant, relation_matrix

__all__ = ['ColoringSpace', 'BoundaryColoringSpace', 'coloring_space',
           'boundary_image', 'determinant', 'relation_matrix']
