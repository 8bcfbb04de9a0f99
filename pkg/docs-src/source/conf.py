# Sphinx configuration for the Linkforge documentation.
# Build with: sphinx-build docs-src/source docs

import os
import sys
sys.path.insert(0, os.path.abspath("../../"))

extensions = ['sphinx.ext.autodoc']
autodoc_member_order = 'bysource'

source_suffix = '.rst'
master_doc = 'index'

project = 'Linkforge'
copyright = '2026, Linkforge authors'
author = 'Linkforge authors'
version = '0.1'
release = '0.1'

exclude_patterns = []
pygments_style = 'sphinx'

html_theme = 'alabaster'
htmlhelp_basename = 'LinkforgeDoc'
