from __future__ import absolute_import
from cliffcz.util.file.matrix_text import *
from cliffcz.util.file.table_file import *
from cliffcz.util.file.orbit_file import *
from cliffcz.util.file.graph_export import *
