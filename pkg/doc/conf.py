# Configuration file for the Sphinx documentation builder.
#
# For the full list of built-in configuration values, see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import os
import sys

import sphinx_fontawesome  # noqa: F401
import sphinx_rtd_theme  # noqa: F401

sys.path.insert(0, os.path.abspath('..'))

from kh_lib import __version__  # noqa: E402


# -- Project information -----------------------------------------------------
project = 'kh-lib Python Library'
copyright = '2026, kh-lib developers'
author = 'kh-lib developers'
release = __version__
html_show_copyright = True
html_show_sourcelink = False


# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.autosummary',
    'sphinx.ext.napoleon',  # Google-style docstrings
    'sphinx.ext.viewcode',
    'sphinx.ext.doctest',
    'sphinx_rtd_dark_mode',
    'sphinx_fontawesome',
    'sphinx_togglebutton',
    'sphinx.ext.autosectionlabel',
]

default_dark_mode = False

add_module_names = False
autodoc_class_signature = 'separated'
autodoc_member_order = 'bysource'
toc_object_entries_show_parents = "hide"
templates_path = ['_templates']
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
autosummary_generate = True

napoleon_google_docstring = True
napoleon_numpy_docstring = False
napoleon_include_init_with_doc = True
napoleon_use_param = True
napoleon_use_rtype = True


# -- Options for HTML output -------------------------------------------------
# https://sphinx-rtd-theme.readthedocs.io/en/stable/configuring.html#theme-options

html_theme = 'sphinx_rtd_theme'
html_theme_options = {
    'collapse_navigation': True,
    'sticky_navigation': True,
    'navigation_depth': 3,
    'prev_next_buttons_location': 'bottom',
}

html_title = 'kh-lib Python Library'
html_last_updated_fmt = '%b %d, %Y %H:%M'
html_show_sphinx = False

pygments_style = 'monokai'

# `text` resolves to any cross reference target
default_role = 'any'
highlight_language = 'python'

source_suffix = ['.rst']

suppress_warnings = ['autosectionlabel.*']
