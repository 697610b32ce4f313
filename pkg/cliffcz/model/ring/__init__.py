from __future__ import absolute_import
from cliffcz.model.ring import cyclo_array
from cliffcz.model.ring.cyclo_num import *
