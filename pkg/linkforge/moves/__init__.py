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


from linkforge.moves.model import LOOP, Move, MoveSite
from linkforge.moves.engine import apply
from linkforge.moves.simplify import simplify
from linkforge.moves.rotor import is_n_rotor, rotor_flip
from linkforge.moves.certificate import MoveCertificate, \
    verify_certificate, five_move_certificate

__all__ = ['LOOP', 'Move', 'MoveSite', 'apply', 'simplify', 'is_n_rotor',
           'rotor_flip', 'MoveCertificate', 'verify_certificate',
           'five_move_certificate']
