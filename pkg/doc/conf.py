# -*- coding: utf-8 -*-
#
# treespec documentation build configuration file
#
# This file is execfile()d with the current directory set to its containing
# dir.

import sys, os
import sphinx_bootstrap_theme

# -- General configuration -------------------------------------------------

extensions = ['sphinx.ext.mathjax']

templates_path = ['_templates']
source_suffix = '.rst'
source_encoding = 'utf-8'
master_doc = 'index'

project = u'treespec'
copyright = u'2024, treespec developers'

# The short X.Y version.
version = '1.0'
# The full version, including alpha/beta/rc tags.
release = '1.0.0'

exclude_trees = ['_build']
pygments_style = 'sphinx'

# -- Options for HTML output -----------------------------------------------

html_theme = 'bootstrap'
html_theme_options = {
    'navbar_title': "treespec",
    'navbar_site_name': "Site",
    'navbar_links': [
        ("Options", "command-options"),
        ("Output", "output-files"),
    ],
    'navbar_sidebarrel': True,
    'navbar_pagenav': True,
    'globaltoc_depth': 1,
    'globaltoc_includehidden': "true",
    'navbar_class': "navbar",
    'navbar_fixed_top': "true",
    'source_link_position': "footer",
    'bootswatch_theme': "cosmo",
    'bootstrap_version': "3",
}
html_theme_path = sphinx_bootstrap_theme.get_html_theme_path()

html_title = 'treespec v.%s' % release
html_static_path = []
htmlhelp_basename = 'treespecdoc'

# -- Options for LaTeX output ----------------------------------------------

latex_documents = [
    ('index', 'treespec.tex', u'treespec manual',
     u'treespec developers', 'manual'),
]
