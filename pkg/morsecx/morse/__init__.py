# flake8: noqa

from . import morse
from .morse import *

from . import morse_nb
