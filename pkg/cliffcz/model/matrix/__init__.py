from __future__ import absolute_import
from cliffcz.model.matrix.gate_matrix import *
from cliffcz.model.matrix import gates
