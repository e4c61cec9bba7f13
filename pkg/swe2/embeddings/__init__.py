# -*- coding: utf-8 -*-

"""
Character, phoneme and word level embeddings.
"""
