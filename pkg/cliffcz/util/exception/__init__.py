from cliffcz.util.exception.exception_info import *
from cliffcz.util.exception.warning import *
from cliffcz.util.exception.error import *
