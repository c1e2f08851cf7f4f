# -*- coding: utf-8 -*-
#
# modcurve.biell documentation build configuration file

import os
import sys

sys.path.insert(0, os.path.abspath(os.path.join("..", "src")))

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.viewcode",
    "sphinx_rtd_theme",
]

templates_path = ["_templates"]
source_suffix = ".rst"
master_doc = "index"

project = u"modcurve.biell"
copyright = u"2026, by its authors"
version = "1.0.0"
release = "1.0.0"

exclude_patterns = ["_build"]
pygments_style = "sphinx"

html_theme = "sphinx_rtd_theme"
htmlhelp_basename = "modcurvebielldoc"

man_pages = [
    ("index", "modcurve-biell", u"modcurve.biell Documentation",
     [u"modcurve.biell authors"], 1)
]
