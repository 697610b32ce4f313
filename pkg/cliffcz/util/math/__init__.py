from __future__ import absolute_import
from cliffcz.util.math.numeric import *
