#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# cliffcz documentation build configuration file.

import sys, os
from unittest.mock import MagicMock

sys.path.append(os.path.abspath('..'))


# Mock module to bypass pip install
class Mock(MagicMock):
    @classmethod
    def __getattr__(cls, name):
        return MagicMock()

MOCK_MODULES = ['numpy', 'networkx', 'networkx.algorithms', 'tqdm', 'dotenv']
sys.modules.update((mod_name, Mock()) for mod_name in MOCK_MODULES)

# -- General configuration ------------------------------------------------

extensions = ['sphinx.ext.doctest',
    'sphinx.ext.todo',
    'sphinx.ext.coverage',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'sphinx.ext.githubpages',
    'sphinx.ext.autodoc']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'cliffcz'
copyright = '2026, cliffcz developers'
author = 'cliffcz developers'

version = '0.1.0'
release = '0.1.0'

language = None
exclude_patterns = []
pygments_style = 'sphinx'
todo_include_todos = True

# Class docstrings carry the constructor parameters
autoclass_content = 'class'
autodoc_member_order = 'bysource'

# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_static_path = ['_static']
html_sidebars = {
    '**': [
        'relations.html',
        'searchbox.html',
    ]
}
htmlhelp_basename = 'cliffczdoc'

# -- Options for other builders -------------------------------------------

latex_documents = [
    (master_doc, 'cliffcz.tex', 'cliffcz Documentation', author, 'manual'),
]

man_pages = [
    (master_doc, 'cliffcz', 'cliffcz Documentation', [author], 1)
]

texinfo_documents = [
    (master_doc, 'cliffcz', 'cliffcz Documentation', author, 'cliffcz',
     'Clifford cosets and minimal CZ synthesis.', 'Miscellaneous'),
]
