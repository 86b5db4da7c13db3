# flake8: noqa

from . import maps
from .maps import *

from . import verify
from .verify import *
