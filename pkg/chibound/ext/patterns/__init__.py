from .catalog import *
from .matcher import *
from .membership import *
from .pattern import *
from .patterns_exceptions import *
