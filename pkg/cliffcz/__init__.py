from __future__ import absolute_import
from cliffcz.atlas import *

__version__ = '0.1.0'
