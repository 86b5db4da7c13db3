# flake8: noqa

from . import simplicial
from .simplicial import *

from . import generators
from .generators import *
