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
import logging
import os
from typing import Dict

import sympy

LOG = logging.getLogger(__name__)

DEFAULT_NODE_BUDGET = 2000000
""" Skein recursion nodes allowed when ``LINKFORGE_NODE_BUDGET`` is unset. """

DEFAULT_LAGRANGIAN_GUARD = 10 ** 7
""" Candidate subspaces scanned by Lagrangian enumeration at most. """

DEFAULT_MEMO_LIMIT = 100000
""" Cached skein values kept per coefficient ring. """

INT63 = 2 ** 63


def start_linkforge():
    """
    This is invoked on ``import linkforge``. Function checks OS environment
    variables documented at :doc:`../configuration`.
    """
    level = os.getenv("LINKFORGE_LOG_LEVEL", "")
    if level and level in ['CRITICAL', 'ERROR', 'WARNING', 'INFO', 'DEBUG',
                           'NOTSET']:
        the_logger = logging.getLogger("linkforge")
        the_logger.setLevel(getattr(logging, level))

    if os.getenv("LINKFORGE_ENABLE_LOG_FORMAT", "no").lower() in ["1", "yes",
                                                                  "true", "on"]:
        log_fmt = '%(asctime)-15s [%(name)s] %(module)s:%(lineno)i: %(message)s'
        logging.basicConfig(format=log_fmt)


def _positive_env(name: str, default: int) -> int:
    raw = os.getenv(name, "")
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        LOG.warning("%s=%r is not an integer, using %d", name, raw, default)
        return default
    if value <= 0:
        LOG.warning("%s=%r must be positive, using %d", name, raw, default)
        return default
    return value


def node_budget() -> int:
    """ Skein recursion node cap, from ``LINKFORGE_NODE_BUDGET``. Read on every
        call so a changed environment takes effect for the next evaluation.
    """
    return _positive_env("LINKFORGE_NODE_BUDGET", DEFAULT_NODE_BUDGET)


def memo_limit() -> int:
    return _positive_env("LINKFORGE_MEMO_LIMIT", DEFAULT_MEMO_LIMIT)


def lagrangian_guard() -> int:
    return _positive_env("LINKFORGE_LAGRANGIAN_GUARD",
                         DEFAULT_LAGRANGIAN_GUARD)


def is_prime(n: int) -> bool:
    return n >= 2 and bool(sympy.isprime(n))


def factor_exponents(factors) -> Dict[int, int]:
    """ Multiply out a list of integers into a prime -> exponent map.

        :param factors: iterable of positive integers
        :returns: dict of prime to exponent, sorted by prime
    """
    total = {}
    for f in factors:
        for prime, exp in sympy.factorint(int(f)).items():
            total[int(prime)] = total.get(int(prime), 0) + int(exp)
    return dict(sorted(total.items()))


def format_factored(exponents: Dict[int, int]) -> str:
    """ Render ``{5: 3, 2: 1}`` as ``"2*5^3"``; the empty map renders as ``"1"``.
    """
    if not exponents:
        return "1"
    parts = []
    for prime, exp in sorted(exponents.items()):
        parts.append(str(prime) if exp == 1 else "%d^%d" % (prime, exp))
    return "*".join(parts)


def expand_factored(exponents: Dict[int, int]) -> int:
    value = 1
    for prime, exp in exponents.items():
        value *= prime ** exp
    return value


def cardinality_json(exponents: Dict[int, int]) -> dict:
    """ Structured cardinality: factored text always, the raw integer only
        while it fits a signed 64-bit value.
    """
    out = {"factored": format_factored(exponents)}
    value = expand_factored(exponents)
    if value < INT63:
        out["value"] = value
    return out


__all__ = ['start_linkforge', 'node_budget', 'lagrangian_guard', 'is_prime',
           'factor_exponents', 'format_factored', 'expand_factored',
           'cardinality_json']
