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

LOG = logging.getLogger("linkforge")


class LinkforgeException(Exception):
    pass


class DiagramError(LinkforgeException):
    def __init__(self, msg, *args, **kwargs):
        LOG.error("DiagramError: %s", msg)
        Exception.__init__(self, msg, *args, **kwargs)


class ParseError(DiagramError):
    def __init__(self, msg, *args, **kwargs):
        LOG.error("ParseError: %s", msg)
        Exception.__init__(self, msg, *args, **kwargs)


class TangleError(LinkforgeException):
    def __init__(self, msg, *args, **kwargs):
        LOG.error("TangleError: %s", msg)
        Exception.__init__(self, msg, *args, **kwargs)


class CatalogError(LinkforgeException):
    def __init__(self, msg, *args, **kwargs):
        LOG.error("CatalogError: %s", msg)
        Exception.__init__(self, msg, *args, **kwargs)


class ColoringError(LinkforgeException):
    def __init__(self, msg, *args, **kwargs):
        LOG.error("ColoringError: %s", msg)
        Exception.__init__(self, msg, *args, **kwargs)


class SymplecticError(LinkforgeException):
    def __init__(self, msg, *args, **kwargs):
        LOG.error("SymplecticError: %s", msg)
        Exception.__init__(self, msg, *args, **kwargs)


class SkeinError(LinkforgeException):
    def __init__(self, msg, *args, **kwargs):
        LOG.error("SkeinError: %s", msg)
        Exception.__init__(self, msg, *args, **kwargs)


class BudgetExceededError(SkeinError):
    def __init__(self, msg, *args, **kwargs):
        LOG.error("Budget: %s", msg)
        Exception.__init__(self, msg, *args, **kwargs)


class MoveError(LinkforgeException):
    def __init__(self, msg, *args, **kwargs):
        LOG.error("MoveError: %s", msg)
        Exception.__init__(self, msg, *args, **kwargs)


class CertificateError(MoveError):
    def __init__(self, msg, index=None, *args, **kwargs):
        LOG.error("CertificateError at step %s: %s", index, msg)
        Exception.__init__(self, msg, *args, **kwargs)
        self.index_ = index
        """ Index of the failing step, or None if the certificate itself is
            malformed. """


class BoundsError(LinkforgeException):
    def __init__(self, msg, *args, **kwargs):
        LOG.error("BoundsError: %s", msg)
        Exception.__init__(self, msg, *args, **kwargs)


class GroupError(LinkforgeException):
    def __init__(self, msg, *args, **kwargs):
        LOG.error("GroupError: %s", msg)
        Exception.__init__(self, msg, *args, **kwargs)


class UnsupportedError(GroupError):
    def __init__(self, msg, *args, **kwargs):
        LOG.error("Unsupported: %s", msg)
        Exception.__init__(self, msg, *args, **kwargs)


class UsageError(LinkforgeException):
    def __init__(self, msg, *args, **kwargs):
        LOG.error("UsageError: %s", msg)
        Exception.__init__(self, msg, *args, **kwargs)
