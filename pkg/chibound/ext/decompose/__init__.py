from .claims import *
from .decompose_exceptions import *
from .partition import *
from .triangle import *
