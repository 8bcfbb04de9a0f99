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

""" Exact arithmetic in ``Z[x]/(x^2 + x - 1)`` with ``x = 2cos(2pi/5)``.

    ``2x + 1`` squares to 5 and plays the part of the square root of five.
"""

import logging
from typing import NamedTuple

from linkforge.errors import SkeinError

LOG = logging.getLogger(__name__)


class GoldenValue(object):
    """ ``u + v x`` """

    __slots__ = ('u_', 'v_')

    def __init__(self, u: int = 0, v: int = 0) -> None:
        self.u_ = int(u)
        self.v_ = int(v)

    @staticmethod
    def sqrt5() -> 'GoldenValue':
        return GoldenValue(1, 2)

    def is_zero(self) -> bool:
        return self.u_ == 0 and self.v_ == 0

    def __add__(self, other):
        other = _coerce(other)
        return GoldenValue(self.u_ + other.u_, self.v_ + other.v_)

    __radd__ = __add__

    def __neg__(self):
        return GoldenValue(-self.u_, -self.v_)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        # x^2 = 1 - x
        uu = self.u_ * other.u_
        uv = self.u_ * other.v_ + self.v_ * other.u_
        vv = self.v_ * other.v_
        return GoldenValue(uu + vv, uv - vv)

    __rmul__ = __mul__

    def norm(self) -> int:
        """ Product with the conjugate ``x -> -1 - x``. """
        return self.u_ * self.u_ - self.u_ * self.v_ - self.v_ * self.v_

    def inverse(self) -> 'GoldenValue':
        n = self.norm()
        if n not in (1, -1):
            raise SkeinError("%r is not a unit" % self)
        # conjugate of u + v x is (u - v) - v x
        return GoldenValue((self.u_ - self.v_) * n, -self.v_ * n)

    def __pow__(self, k: int):
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        out = GoldenValue(1, 0)
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = GoldenValue(other, 0)
        return isinstance(other, GoldenValue) and \
            self.u_ == other.u_ and self.v_ == other.v_

    def __hash__(self):
        return hash((self.u_, self.v_))

    def __float__(self):
        return self.u_ + self.v_ * (5 ** 0.5 - 1) / 2

    def __repr__(self):
        return "GoldenValue(%d, %d)" % (self.u_, self.v_)


def _coerce(value) -> GoldenValue:
    if isinstance(value, GoldenValue):
        return value
    if isinstance(value, int):
        return GoldenValue(value, 0)
    raise TypeError("cannot combine GoldenValue with %r" % type(value))


PhiDecomposition = NamedTuple('PhiDecomposition', [('epsilon', int),
                                                   ('lambda_', int)])
""" ``g = epsilon * (2x + 1)^lambda_`` """


def decompose(g: GoldenValue) -> PhiDecomposition:
    """ Write ``g`` as ``+-sqrt(5)^lambda``.

        :raises SkeinError: ``g`` has no such form
    """
    if g.v_ == 0:
        u = abs(g.u_)
        lam = 0
        while u > 1 and u % 5 == 0:
            u //= 5
            lam += 2
        if u == 1:
            return PhiDecomposition(1 if g.u_ > 0 else -1, lam)
    elif g.u_ * 2 == g.v_:
        # c (2x + 1) with c = u
        inner = decompose(GoldenValue(g.u_, 0))
        return PhiDecomposition(inner.epsilon, inner.lambda_ + 1)
    raise SkeinError("not a +-sqrt(5) power: %r" % g)


__all__ = ['GoldenValue', 'PhiDecomposition', 'decompose']
