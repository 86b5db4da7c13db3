# flake8: noqa

from . import perms
from .perms import *

from . import search
from .search import *

from . import search_nb
