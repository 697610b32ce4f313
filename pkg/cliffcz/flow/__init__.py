from __future__ import absolute_import
from cliffcz.flow.check import *
from cliffcz.flow.report import *
from cliffcz.flow.pipeline import *
from cliffcz.flow.acceptance import *
