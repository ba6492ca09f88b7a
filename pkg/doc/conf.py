#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# PennyLane-SqBath documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys, os, re

# If extensions (or modules to document with autodoc) are in another directory,
# add these directories to sys.path here.
sys.path.insert(0, os.path.abspath('..'))

# -- General configuration ------------------------------------------------

needs_sphinx = '1.6'

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.autosummary",
    "sphinx.ext.todo",
    "sphinx.ext.coverage",
    "sphinx.ext.mathjax",
    "sphinx.ext.napoleon",
    "sphinx.ext.inheritance_diagram",
    "sphinx.ext.intersphinx",
    'sphinx.ext.viewcode',
    "sphinx_automodapi.automodapi"
]

autosummary_generate = True
autosummary_imported_members = False
automodapi_toctreedirnm = "code/api"
automodsumm_inherited_members = True

intersphinx_mapping = {
    "numpy": ("https://numpy.org/doc/stable/", None),
    "scipy": ("https://docs.scipy.org/doc/scipy/", None),
    "pennylane": ("https://docs.pennylane.ai/en/stable/", None),
}

from pennylane_sphinx_theme import templates_dir
templates_path = [templates_dir()]

source_suffix = '.rst'
master_doc = 'index'

# General information about the project.
project = 'PennyLane-SqBath'
copyright = "2024, Xanadu Inc."
author = 'Xanadu'

add_module_names = False

# The full version, including alpha/beta/rc tags.
import pennylane_sqbath
release = pennylane_sqbath.__version__

# The short X.Y version.
version = re.match(r'^(\d+\.\d+)', release).expand(r'\1')

language = None
today_fmt = '%Y-%m-%d'
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
show_authors = True
pygments_style = 'sphinx'
todo_include_todos = True

# -- Options for HTML output ----------------------------------------------

html_theme = 'pennylane'
html_theme_options = {
    "navbar_name": "PennyLane-SqBath",
    "toc_overview": True,
    "navbar_active_link": 3,
}
htmlhelp_basename = 'PennyLaneSqBathdoc'

# -- Options for LaTeX, manual page and Texinfo output --------------------

latex_elements = {}
latex_documents = [
    (master_doc, 'PennyLane-SqBath.tex',
     'PennyLane-SqBath Documentation',
     'Xanadu Inc.',
     'manual'),
]
man_pages = [
    (master_doc, 'pennylane-sqbath',
     'PennyLane-SqBath Documentation',
     [author], 1)
]
texinfo_documents = [
    (master_doc,
     'PennyLane-SqBath',
     'PennyLane-SqBath Documentation',
     author,
     'PennyLane-SqBath',
     'Two qubits in a squeezed thermal bath for the PennyLane quantum machine learning library.',
     'Miscellaneous'),
]

# xref to functions in autodoc
autodoc_member_order = 'bysource'

# inheritance_diagram graphviz attributes
inheritance_node_attrs = dict(color='lightskyblue1', style='filled')
