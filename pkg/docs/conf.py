# -*- coding: utf-8 -*-
#
# polydisc-bounds documentation build configuration file
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys
import os

# If extensions (or modules to document with autodoc) are in another directory,
# add these directories to sys.path here. If the directory is relative to the
# documentation root, use os.path.abspath to make it absolute, like shown here.
sys.path.insert(0, os.path.abspath(".."))

__version__ = "0.1.0"

# -- General configuration ------------------------------------------------

needs_sphinx = "1.5.5"

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.autosummary",
    "sphinx.ext.intersphinx",
    "sphinx.ext.coverage",
    "sphinx.ext.napoleon",
    "sphinx.ext.todo",
    "sphinx.ext.viewcode",
    "recommonmark",
]

# autodoc/autosummary flags
autoclass_content = "both"
autodoc_default_options = {"members": True}
autosummary_generate = True

templates_path = []

source_suffix = [".rst", ".md"]

# The main toctree document.
root_doc = "index"

# General information about the project.
project = u"polydisc-bounds"
copyright = u"2026, The polydisc-bounds Authors"
author = u"The polydisc-bounds Authors"

# The full version, including alpha/beta/rc tags.
release = __version__
# The short X.Y version.
version = ".".join(release.split(".")[0:2])

language = "en"

exclude_patterns = ["_build"]

pygments_style = "sphinx"

todo_include_todos = True


# -- Options for HTML output ----------------------------------------------

html_theme = "alabaster"

html_theme_options = {
    "description": "Sidon constant and Bohr radius bounds",
    "font_family": "'Roboto', Georgia, sans",
    "head_font_family": "'Roboto', Georgia, serif",
    "code_font_family": "'Roboto Mono', 'Consolas', monospace",
}

htmlhelp_basename = "polydisc-bounds-doc"

# -- Options for manual page output ---------------------------------------

man_pages = [
    (
        root_doc,
        "polydisc",
        u"polydisc-bounds Documentation",
        [author],
        1,
    )
]


intersphinx_mapping = {
    "python": ("https://docs.python.org/3/", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
    "mpmath": ("https://mpmath.org/doc/current/", None),
}


# Napoleon settings
napoleon_google_docstring = True
napoleon_numpy_docstring = False
napoleon_include_private_with_doc = False
napoleon_include_special_with_doc = True
napoleon_use_admonition_for_examples = False
napoleon_use_admonition_for_notes = False
napoleon_use_admonition_for_references = False
napoleon_use_ivar = False
napoleon_use_param = True
napoleon_use_rtype = True
