from .constants import *
from .exceptions import *
from .from_data_mixin import *
from .json import *
from .json_serializable import *
from .types import *
