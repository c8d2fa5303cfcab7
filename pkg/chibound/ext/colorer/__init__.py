from .assembly import *
from .chi37_coa import *
from .codomino import *
from .color import *
from .colorer_exceptions import *
from .colorer_options import *
from .cotwinc5 import *
from .d1_split import *
from .d2_pair import *
from .replay import *
from .three_part import *
from .trace import *
from .x_family import *
