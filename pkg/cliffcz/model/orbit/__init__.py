from __future__ import absolute_import
from cliffcz.model.orbit.orbit_atlas import *
from cliffcz.model.orbit.cz_graph import *
from cliffcz.model.orbit.reference_graph import *
