# -*- coding: utf-8 -*-
#
# swe2 documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import os
from datetime import datetime

import swe2 as package

package_name = package.__name__
package_author = package.__author__
package_version = package.__version__

# -- General configuration ------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.doctest",
    "sphinx.ext.intersphinx",
    "sphinx.ext.mathjax",
    "sphinx.ext.viewcode",
    "sphinx_copybutton",
    "sphinx_design",
    "docfly.directives",
]

templates_path = ["_templates"]
source_suffix = ".rst"
master_doc = "index"

project = package_name
copyright = "{}, {}".format(datetime.utcnow().year, package_author)
author = package_author

# |version| and |release|
version = package_version
release = package_version

language = "en"
exclude_patterns = []
pygments_style = "monokai"

# -- Options for HTML output ----------------------------------------------

html_theme = "furo"
html_theme_options = {
    "sidebar_hide_name": False,
}
pygments_dark_style = "monokai"
html_static_path = ["_static"]
htmlhelp_basename = "{}doc".format(package_name)

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "torch": ("https://pytorch.org/docs/stable", None),
    "numpy": ("https://numpy.org/doc/stable", None),
}

autodoc_member_order = "bysource"

# Enable custom roles
custom_style_file_path = os.path.join(os.path.dirname(__file__), "_static", ".custom-style.rst")
with open(custom_style_file_path, "rb") as f:
    custom_style_file_content = f.read().decode("utf-8")
rst_prolog = "\n" + custom_style_file_content + "\n"

# Api Reference Doc
import docfly

docfly.ApiReferenceDoc(
    conf_file=__file__,
    package_name=package_name,
    ignored_package=[
        "%s.tests" % package_name,
        "%s.vendor" % package_name,
        "%s._version" % package_name,
        "%s.paths" % package_name,
    ]
).fly()
