from cliffcz.util.action import *
from cliffcz.util.method import *
from cliffcz.util.exception import *
from cliffcz.util.claim import *
from cliffcz.util.config import *
