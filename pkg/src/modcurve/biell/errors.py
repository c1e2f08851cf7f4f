# -*- coding: utf-8 -*-
#
# This file is part of MODCURVE.BIELL.
#
# MODCURVE.BIELL is free software: you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation, version 2.
#
# This program is distributed in the hope that it will be useful, but WITHOUT
# ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS
# FOR A PARTICULAR PURPOSE. See the GNU General Public License for more
# details.
#
# You should have received a copy of the GNU General Public License along with
# this program; if not, write to the Free Software Foundation, Inc., 51
# Franklin Street, Fifth Floor, Boston, MA 02110-1301 USA.
#
# Copyright 2026 by its authors.
# Some rights reserved, see README and LICENSE.



class BiellError(Exception):
    """Base class of the errors raised by this package
    """


class IntegrityError(BiellError):
    """A computed value contradicts an identity it must satisfy, or the
    golden data it is checked against
    """


class OrderViolation(BiellError, ValueError):
    """Two elements do not commute under the known rules, or their product
    is not an involution
    """

    def __init__(self, left, right, rule):
        self.left = left
        self.right = right
        self.rule = rule
        message = "{} * {}: {}".format(left, right, rule)
        super(OrderViolation, self).__init__(message)


class NotApplicable(BiellError, ValueError):
    """The preconditions of a reduction are not met
    """


class DataFileError(BiellError):
    """A data file could not be parsed
    """

    def __init__(self, message, path=None, lineno=None):
        self.path = path
        self.lineno = lineno
        if lineno is not None:
            message = "{}:{}: {}".format(path or "<input>", lineno, message)
        super(DataFileError, self).__init__(message)


class DuplicateLabel(DataFileError):
    """The same label appears twice in a data file
    """


class MissingDataError(DataFileError):
    """A rank, a modular degree or a whole data file is not available
    """
