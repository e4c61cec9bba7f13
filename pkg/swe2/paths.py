# -*- coding: utf-8 -*-

from pathlib import Path

dir_here = Path(__file__).absolute().parent
PACKAGE_NAME = dir_here.name

dir_project_root = dir_here.parent

# ------------------------------------------------------------------------------
# Shipped data files
# ------------------------------------------------------------------------------
dir_data = dir_here / "data"
path_g2p_chunks = dir_data / "g2p_chunks.tsv"
path_confusion_table = dir_data / "confusion.tsv"

# ------------------------------------------------------------------------------
# Test related
# ------------------------------------------------------------------------------
dir_htmlcov = dir_project_root / "htmlcov"
