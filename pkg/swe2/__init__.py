# -*- coding: utf-8 -*-

from ._version import __version__

__short_description__ = "Subword enriched, significant word emphasized hate speech detection with a character-level attack harness."
__github_username__ = "swe2-dev"
__license__ = "MIT"
__author__ = "SWE2 Developers"
__author_email__ = None
__maintainer__ = __author__
__maintainer_email__ = __author_email__
