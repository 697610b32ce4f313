from __future__ import absolute_import
from cliffcz.synth.circuit import *
from cliffcz.synth.synthesizer import *
