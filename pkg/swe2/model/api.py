# -*- coding: utf-8 -*-

from .config import N_CLASSES
from .config import ModelConfig
from .config import ABLATIONS
from .featurize import BOS
from .featurize import EOS
from .featurize import Providers
from .featurize import EncodedSample
from .featurize import Batch
from .featurize import Featurizer
from .featurize import collate
from .network import SubwordCNN
from .network import AdditiveAttention
from .network import MultiFC
from .network import Activations
from .network import Swe2Network
from .network import build
from .train import Label
from .train import Prediction
from .train import EpochRecord
from .train import weighted_cross_entropy
from .train import inverse_frequency_weights
from .train import predict_logits
from .train import predict
from .train import accuracy
from .train import train
from .gradcheck import grad_check
from .gradcheck import grad_check_head
from .detector import Detector
