#!/usr/bin/env python3
#
# reciprocals documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import os
import sys

sys.path.insert(0, os.path.abspath('..'))

from reciprocals import __version__  # noqa: E402


extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.intersphinx',
    'sphinx.ext.viewcode',
    'sphinx.ext.mathjax',
    'sphinxcontrib.asyncio',
]

intersphinx_mapping = {'python': ('http://docs.python.org/3', None),
                       'sympy': ('https://docs.sympy.org/latest/', None),
                       'click': ('https://click.palletsprojects.com/en/8.1.x/',
                                 None),
                       }

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = 'reciprocals'
copyright = '2026, reciprocals contributors'

release = __version__
version = '.'.join(__version__.split('.')[:2])

exclude_patterns = ['_build']

pygments_style = 'sphinx'

highlight_language = 'python3'

on_rtd = os.environ.get('READTHEDOCS', None) == 'True'

if on_rtd:
    html_theme = 'default'
else:
    html_theme = 'pyramid'

html_static_path = ['_static']

htmlhelp_basename = 'reciprocalsdoc'

man_pages = [
    ('cli', 'reciprocals', 'reciprocals command line tool',
     ['reciprocals contributors'], 1)
]
