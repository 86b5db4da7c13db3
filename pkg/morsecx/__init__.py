# flake8: noqa

from numba.core.errors import NumbaExperimentalFeatureWarning
import warnings

warnings.simplefilter('ignore', category=NumbaExperimentalFeatureWarning)

from ._version import __version__

from . import util
from .util import print_table
from . import flags
from . import defaults

from . import mexceptions
from .mexceptions import *

from . import simplicial
from .simplicial import (
    SimplicialComplex,
    from_facets,
    classify,
)

from . import hasse
from .hasse import HasseDiagram, build_hasse

from . import morse
from .morse import (
    PrimitiveVector,
    DiscreteVectorField,
    make_dvf,
    enumerate_gvfs,
    build_morse_complex,
)

from . import autgroup
from .autgroup import (
    Permutation,
    PermutationGroup,
    complex_automorphisms,
    graph_automorphisms,
)

from . import theorem
from .theorem import verify_main_theorem

from . import facetio
