from .bounds_exceptions import *
from .clique_cover import *
from .verify import *
