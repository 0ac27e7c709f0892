#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# python-hilbertmetric documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys
import os

sys.path.insert(0, os.path.abspath('..'))

# -- General configuration ------------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.mathjax', 'myst_parser']

templates_path = ['_templates']
source_suffix = ['.rst', '.md']
master_doc = 'index'

project = 'python-hilbertmetric'
copyright = '2024, Tuomas Mursu, Cristian Libotean'
author = 'Tuomas Mursu, Cristian Libotean'

# The short X.Y version.
version = '0.1'
# The full version, including alpha/beta/rc tags.
release = '0.1.0'

language = 'en'
exclude_patterns = ['_build']
pygments_style = 'sphinx'
todo_include_todos = False

autodoc_member_order = 'bysource'

# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_static_path = []
htmlhelp_basename = 'python-hilbertmetricdoc'

# -- Options for LaTeX output ---------------------------------------------

latex_elements = {}
latex_documents = [
    (master_doc, 'python-hilbertmetric.tex', 'python-hilbertmetric Documentation',
     author, 'manual'),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'python-hilbertmetric', 'python-hilbertmetric Documentation',
     [author], 1)
]
