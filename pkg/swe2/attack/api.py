# -*- coding: utf-8 -*-

from .bugs import AttackMethod
from .bugs import METHOD_ORDER
from .bugs import ConfusionTable
from .bugs import swap_positions
from .bugs import bug_swap
from .bugs import bug_delete
from .bugs import bug_subc
from .bugs import apply_method
from .impl import select_victim
from .impl import SentenceEncoder
from .impl import MeanWordVectorEncoder
from .impl import sentence_encode
from .impl import cosine_distance
from .impl import Candidate
from .impl import AttackPlan
from .impl import attack_message
from .impl import attack_dataset
