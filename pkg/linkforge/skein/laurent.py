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

""" Integer Laurent polynomials in ``a`` and ``x``. """

import logging
from typing import Dict, List, Tuple

import sympy

LOG = logging.getLogger(__name__)

A_SYMBOL, X_SYMBOL = sympy.symbols('a x')


class LaurentPoly2(object):
    """ Sparse polynomial ``sum c[i, j] a^i x^j``. Exponents of both
        variables may be negative (the trivial-link factor carries
        ``x^-1``); zero coefficients are never stored.
    """

    __slots__ = ('terms_',)

    def __init__(self, terms: Dict[Tuple[int, int], int] = None) -> None:
        self.terms_ = {k: int(v) for k, v in (terms or {}).items() if v}

    @staticmethod
    def constant(c: int) -> 'LaurentPoly2':
        return LaurentPoly2({(0, 0): c})

    @staticmethod
    def monomial(a_exp: int, x_exp: int, c: int = 1) -> 'LaurentPoly2':
        return LaurentPoly2({(a_exp, x_exp): c})

    def is_zero(self) -> bool:
        return not self.terms_

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self.terms_)
        for k, v in other.terms_.items():
            out[k] = out.get(k, 0) + v
        return LaurentPoly2(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly2({k: -v for k, v in self.terms_.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        out = {}
        for (i1, j1), c1 in self.terms_.items():
            for (i2, j2), c2 in other.terms_.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return LaurentPoly2(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms_) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (i, j), c = next(iter(self.terms_.items()))
            if abs(c) != 1:
                raise ValueError("monomial coefficient must be a unit")
            m = -k
            return LaurentPoly2({(-i * m, -j * m): c ** m})
        out = LaurentPoly2.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly2.constant(other)
        return isinstance(other, LaurentPoly2) and self.terms_ == other.terms_

    def __hash__(self):
        return hash(frozenset(self.terms_.items()))

    def substitute_a(self, sign: int) -> 'LaurentPoly2':
        """ Put ``a = sign`` (+1 or -1), leaving a polynomial in ``x``. """
        out = {}
        for (i, j), c in self.terms_.items():
            out[(0, j)] = out.get((0, j), 0) + c * sign ** (i % 2)
        return LaurentPoly2(out)

    def term_list(self) -> List[List[int]]:
        """ ``[[a_exp, x_exp, coefficient], ...]`` sorted by exponents. """
        return [[i, j, c] for (i, j), c in sorted(self.terms_.items())]

    def to_sympy(self):
        return sympy.Add(*[c * A_SYMBOL ** i * X_SYMBOL ** j
                           for (i, j), c in sorted(self.terms_.items())])

    def __repr__(self):
        if not self.terms_:
            return "0"
        return str(self.to_sympy())


def _coerce(value) -> LaurentPoly2:
    if isinstance(value, LaurentPoly2):
        return value
    if isinstance(value, int):
        return LaurentPoly2.constant(value)
    raise TypeError("cannot combine LaurentPoly2 with %r" % type(value))


__all__ = ['LaurentPoly2', 'A_SYMBOL', 'X_SYMBOL']
