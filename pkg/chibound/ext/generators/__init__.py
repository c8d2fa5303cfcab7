from .enumeration import *
from .generators_exceptions import *
from .generators_options import *
from .named import *
from .random_member import *
