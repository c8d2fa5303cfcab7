from .oracle import *
from .oracle_exceptions import *
