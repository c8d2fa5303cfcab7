from .fractions import *
from .seeds import *
from .utils import *
