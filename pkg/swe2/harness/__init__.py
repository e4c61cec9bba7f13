# -*- coding: utf-8 -*-

"""
Datasets, metrics and the experiments built on top of the detector.
"""
