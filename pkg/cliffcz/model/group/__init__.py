from __future__ import absolute_import
from cliffcz.model.group.group_table import *
from cliffcz.model.group.closure import *
