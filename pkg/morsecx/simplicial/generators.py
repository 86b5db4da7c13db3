"""
Standard complexes used as fixtures and as the exceptional cases of the
automorphism classification
"""
__all__ = [
    'generate_cycle',
    'generate_boundary_simplex',
    'generate_path',
    'generate_simplex',
    'generate_star',
    'generate_kite',
    'generate_moebius',
    'generate_moebius_strip6',
]
import itertools

from .simplicial import SimplicialComplex, from_facets
from ..mexceptions import ComplexError


def _vlabels(n):
    return ['v%d' % i for i in range(n)]


def _check_min(name, value, minval):
    if value < minval:
        raise ComplexError("%s must be >= %d, got %d" % (name, minval, value))


def generate_cycle(n):
    """
    the cycle C_n: vertices v0..v(n-1), edges {v_i, v_(i+1 mod n)}

    Parameters
    ----------
    n: int
        Number of vertices, at least 3
    """
    _check_min('cycle length', n, 3)
    labels = _vlabels(n)
    return from_facets(
        [[labels[i], labels[(i + 1) % n]] for i in range(n)]
    )


def generate_boundary_simplex(n):
    """
    the boundary of the n-simplex: all nonempty proper subsets of an
    (n+1)-vertex set

    Parameters
    ----------
    n: int
        Dimension of the simplex, at least 2.  The boundary of the 1-simplex
        is two isolated points and is rejected.
    """
    _check_min('boundary simplex dimension', n, 2)
    nvert = n + 1
    faces = []
    for size in range(1, nvert):
        faces.extend(itertools.combinations(range(nvert), size))
    return SimplicialComplex(_vlabels(nvert), faces, check=False)


def generate_path(n):
    """
    the path graph on n vertices
    """
    _check_min('path length', n, 2)
    labels = _vlabels(n)
    return from_facets([[labels[i], labels[i + 1]] for i in range(n - 1)])


def generate_simplex(n):
    """
    the full n-simplex on n+1 vertices
    """
    _check_min('simplex dimension', n, 1)
    return from_facets([_vlabels(n + 1)])


def generate_star(nleaves):
    """
    a center vertex c joined by an edge to each of nleaves leaves
    """
    _check_min('number of leaves', nleaves, 1)
    return from_facets([['c', 'l%d' % i] for i in range(nleaves)])


def generate_kite():
    """
    the triangle cycle abc with a pendant edge cd
    """
    return from_facets([['a', 'b'], ['b', 'c'], ['c', 'a'], ['c', 'd']])


def generate_moebius():
    """
    the 5-vertex Moebius band with triangles {v_i, v_(i+1), v_(i+2)} mod 5
    """
    labels = _vlabels(5)
    return from_facets(
        [[labels[i], labels[(i + 1) % 5], labels[(i + 2) % 5]]
         for i in range(5)]
    )


def generate_moebius_strip6():
    """
    a 6-vertex Moebius band drawn as a strip of three squares, each cut by a
    diagonal, with the ends glued after a half twist.  The bottom row is
    v0 b c v3, the top row v3 f g v0.
    """
    return from_facets([
        ['v0', 'v3', 'f'],
        ['v0', 'b', 'f'],
        ['b', 'f', 'g'],
        ['b', 'c', 'g'],
        ['c', 'g', 'v0'],
        ['c', 'v3', 'v0'],
    ])
