# -*- coding: utf-8 -*-

"""
Character level black box manipulation of messages.
"""
