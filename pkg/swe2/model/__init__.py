# -*- coding: utf-8 -*-

"""
The subword enriched, target word emphasized detector network.
"""
