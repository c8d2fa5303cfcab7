from .canonical import *
from .coloring import *
from .graph import *
from .graph6 import *
from .graph_exceptions import *
from .vertex_set import *
from .witness import *
