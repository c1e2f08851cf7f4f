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

import logging

PRODUCT_NAME = "modcurve.biell"

logger = logging.getLogger(PRODUCT_NAME)


def setup_logging(level=logging.WARNING, stream=None):
    """Attaches a stream handler to the package logger, once
    """
    if not logger.handlers:
        handler = logging.StreamHandler(stream)
        handler.setFormatter(logging.Formatter(
            "%(asctime)s %(levelname)s [%(name)s] %(message)s"))
        logger.addHandler(handler)
    logger.setLevel(level)
    return logger
