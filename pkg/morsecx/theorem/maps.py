"""
Explicit maps between automorphism groups

induced_morse_automorphism
    a simplicial automorphism f of K acts on primitive vectors by
    (sigma, tau) -> (f(sigma), f(tau))
transport
    an automorphism g of the Hasse diagram moves each Hasse edge to another
    edge; reading edges as primitive vectors gives a vertex map of M(K)
reflection, reflection_map, reflection_induced
    complementation in the boundary of a simplex, which reverses inclusion
    and so swaps the roles of face and coface
"""
__all__ = [
    'induced_morse_automorphism',
    'induced_hasse_automorphism',
    'phi_map',
    'phi_image',
    'm_correspondence',
    'transport',
    'transport_group',
    'reflection',
    'reflection_map',
    'reflection_induced',
    'preserves_faces',
]
import logging

from ..hasse import build_hasse, as_graph
from ..morse import primitives
from ..autgroup import (
    Permutation,
    PermutationGroup,
    complex_automorphisms,
    graph_automorphisms,
    is_homomorphism,
    is_injective,
)
from ..simplicial import classify, generate_boundary_simplex
from ..defaults import DEFAULT_GROUP_BUDGET
from ..mexceptions import (
    ComplexError,
    NotAutomorphismError,
    MorseFatalError,
)

logger = logging.getLogger(__name__)


def preserves_faces(M, g):
    """
    True if the vertex permutation g maps every facet of M to a face of M,
    which makes it an automorphism of M
    """
    images = g.images
    return all(M.has_face([images[v] for v in facet]) for facet in M.facets)


def _as_vertex_permutation(f, K):
    images = f.images if isinstance(f, Permutation) else tuple(f)
    if len(images) != K.nvert:
        raise NotAutomorphismError(
            "map has %d images for %d vertices" % (len(images), K.nvert)
        )
    try:
        f = Permutation(images)
    except ValueError:
        raise NotAutomorphismError("map is not a bijection of the vertices")

    for facet in K.facets:
        if not K.has_face([f(v) for v in facet]):
            raise NotAutomorphismError(
                "map sends facet %s outside the complex"
                % K.get_face_label(K.get_face_id(facet))
            )
    return f


def induced_hasse_automorphism(f, K):
    """
    get the permutation of Hasse nodes induced by a simplicial automorphism

    Parameters
    ----------
    f: Permutation or sequence of int
        Vertex map of K
    K: SimplicialComplex

    Returns
    -------
    Permutation over face ids
    """
    f = _as_vertex_permutation(f, K)
    images = f.images
    return Permutation(
        [K.get_face_id(K.map_simplex(images, s)) for s in K.faces],
        check=False,
    )


def induced_morse_automorphism(f, K, M=None):
    """
    get the automorphism of M(K) induced by a simplicial automorphism of K

    Parameters
    ----------
    f: Permutation or sequence of int
        Vertex map of K
    K: SimplicialComplex
    M: SimplicialComplex, optional
        The Morse complex of K.  If sent, the result is checked to preserve
        its faces

    Returns
    -------
    Permutation over primitive ids

    Raises
    ------
    NotAutomorphismError if f is not an automorphism of K
    """
    node_map = induced_hasse_automorphism(f, K)
    H = build_hasse(K)

    images = []
    for p in primitives(K):
        pid = H.get_edge_id(node_map(p.face), node_map(p.coface))
        if pid is None:
            raise MorseFatalError(
                "image of primitive %s is not primitive" % p.get_label(K)
            )
        images.append(pid)

    g = Permutation(images)
    if M is not None and not preserves_faces(M, g):
        raise MorseFatalError("induced map does not preserve the faces of M")
    return g


def phi_map(K, group_budget=DEFAULT_GROUP_BUDGET, autK=None):
    """
    get the map f -> f_* on the automorphisms of K

    Parameters
    ----------
    K: SimplicialComplex
    group_budget: int, optional
        Budget for computing Aut(K)
    autK: PermutationGroup, optional
        Aut(K), if already computed

    Returns
    -------
    dict mapping each Permutation of Aut(K) to a Permutation over primitive
    ids
    """
    if autK is None:
        autK = complex_automorphisms(K, budget=group_budget)
    return {f: induced_morse_automorphism(f, K) for f in autK}


def phi_image(K, group_budget=DEFAULT_GROUP_BUDGET, autK=None):
    """
    get the image of Aut(K) in the automorphisms of M(K)

    The map f -> f_* is checked to be an injective homomorphism.

    Returns
    -------
    PermutationGroup over primitive ids
    """
    if autK is None:
        autK = complex_automorphisms(K, budget=group_budget)
    mapping = phi_map(K, autK=autK)

    if not is_homomorphism(mapping, autK, exhaustive=False):
        raise MorseFatalError("induced maps do not compose")
    if not is_injective(mapping):
        raise MorseFatalError("distinct automorphisms induce the same map")

    return PermutationGroup(
        len(primitives(K)),
        mapping.values(),
        generators=[mapping[g] for g in autK.generators],
    )


def m_correspondence(K):
    """
    get the bijection between Hasse edges and primitive vectors

    Returns
    -------
    dict mapping each (face id, coface id) edge to its primitive id
    """
    H = build_hasse(K)
    return {edge: pid for pid, edge in enumerate(H.edges)}


def transport(g, K, M=None):
    """
    move an automorphism of the Hasse diagram to a vertex map of M(K)

    The edge joining sigma and tau, read as the primitive (sigma, tau), goes
    to the edge joining g(sigma) and g(tau), read with the lower dimensional
    end as the face.

    Parameters
    ----------
    g: Permutation
        Automorphism of the plain Hasse graph, over face ids
    K: SimplicialComplex
    M: SimplicialComplex, optional
        If sent, the result is checked to preserve its faces

    Returns
    -------
    Permutation over primitive ids

    Raises
    ------
    NotAutomorphismError if g is not a Hasse automorphism
    """
    H = build_hasse(K)
    if g.degree != H.nnodes:
        raise NotAutomorphismError(
            "map has degree %d for %d Hasse nodes" % (g.degree, H.nnodes)
        )

    dims = K.dims
    images = []
    for face, coface in H.edges:
        a, b = g(face), g(coface)
        if dims[a] > dims[b]:
            a, b = b, a
        pid = H.get_edge_id(a, b)
        if pid is None:
            raise NotAutomorphismError(
                "map does not send Hasse edge %s-%s to an edge"
                % (K.get_face_label(face), K.get_face_label(coface))
            )
        images.append(pid)

    # an injective edge map on a finite edge set is onto
    result = Permutation(images, check=False)
    if len(set(images)) != len(images):
        raise NotAutomorphismError("map is not injective on Hasse edges")

    if M is not None and not preserves_faces(M, result):
        raise MorseFatalError("transported map does not preserve faces of M")
    return result


def transport_group(K, autH=None, group_budget=DEFAULT_GROUP_BUDGET):
    """
    get the automorphisms of M(K) as the transport of the automorphisms of
    the Hasse diagram, without building M(K)

    Parameters
    ----------
    K: SimplicialComplex
    autH: PermutationGroup, optional
        Automorphisms of the plain Hasse graph, if already computed
    group_budget: int, optional
        Budget for computing the Hasse automorphisms

    Returns
    -------
    PermutationGroup over primitive ids
    """
    if autH is None:
        autH = graph_automorphisms(
            as_graph(build_hasse(K)), budget=group_budget,
        )
    return PermutationGroup(
        len(primitives(K)), [transport(g, K) for g in autH],
    )


def _check_boundary(K):
    cls = classify(K)
    if not cls.is_boundary:
        raise ComplexError("complex is not the boundary of a simplex")
    return cls.n_boundary


def reflection(n, simplex):
    """
    complement of a simplex in the vertex set {0, ..., n}

    Parameters
    ----------
    n: int
        Dimension of the simplex whose boundary is acted on, at least 2
    simplex: sequence of int
        A nonempty proper subset of {0, ..., n}

    Returns
    -------
    sorted tuple of int
    """
    if n < 2:
        raise ComplexError("reflection needs n >= 2, got %d" % n)

    full = frozenset(range(n + 1))
    sigma = frozenset(simplex)
    if not sigma <= full:
        raise ComplexError("%s is not a subset of the vertex set"
                           % (tuple(simplex),))
    if len(sigma) == 0 or sigma == full:
        raise ComplexError("reflection is defined on nonempty proper subsets")

    image = full - sigma
    if full - image != sigma:
        raise MorseFatalError("reflection is not an involution")

    # each codimension one face must reflect to a superset
    for v in sigma:
        face = sigma - {v}
        if len(face) > 0 and not (full - face) >= image:
            raise MorseFatalError("reflection does not reverse inclusion")

    return tuple(sorted(image))


def reflection_map(K):
    """
    get the reflection as a permutation of Hasse nodes of the boundary of a
    simplex

    The result is checked to be an automorphism of the plain Hasse graph.

    Returns
    -------
    Permutation over face ids
    """
    n = _check_boundary(K)
    H = build_hasse(K)

    g = Permutation(
        [K.get_face_id(reflection(n, s)) for s in K.faces], check=False,
    )
    for face, coface in H.edges:
        if not H.has_edge(g(face), g(coface)):
            raise MorseFatalError("reflection is not a Hasse automorphism")
    return g


def reflection_induced(n, K=None, M=None, phi=None, check=True):
    """
    get the ghost automorphism of M of the boundary of the n-simplex,
    (sigma, tau) -> (reflection(tau), reflection(sigma))

    The result is checked to be an involution equal to the transported
    reflection, to commute with every induced automorphism and to be none of
    them.

    Parameters
    ----------
    n: int
        At least 2
    K: SimplicialComplex, optional
        The boundary of the n-simplex, on vertex ids 0..n.  Generated if not
        sent
    M: SimplicialComplex, optional
        The Morse complex of K.  If sent, the result is checked to preserve
        its faces
    phi: PermutationGroup, optional
        phi_image(K), if already computed
    check: bool, optional
        If False, skip all checks.  Default True

    Returns
    -------
    Permutation over primitive ids
    """
    if n < 2:
        raise ComplexError("reflection needs n >= 2, got %d" % n)
    if K is None:
        K = generate_boundary_simplex(n)
    elif _check_boundary(K) != n:
        raise ComplexError("complex is not the boundary of the %d-simplex"
                           % n)

    H = build_hasse(K)
    images = []
    for p in primitives(K):
        face = K.get_face_id(reflection(n, K.faces[p.coface]))
        coface = K.get_face_id(reflection(n, K.faces[p.face]))
        images.append(H.get_edge_id(face, coface))

    ghost = Permutation(images)
    if not check:
        return ghost

    if not ghost.compose(ghost).is_identity():
        raise MorseFatalError("ghost map is not an involution")
    if ghost != transport(reflection_map(K), K):
        raise MorseFatalError("ghost map differs from transported reflection")
    if M is not None and not preserves_faces(M, ghost):
        raise MorseFatalError("ghost map does not preserve the faces of M")

    if phi is None:
        phi = phi_image(K)
    if ghost in phi:
        raise MorseFatalError("ghost map is induced by a simplicial map")
    for g in phi:
        if g.compose(ghost) != ghost.compose(g):
            raise MorseFatalError("ghost map does not commute with %s" % g)

    logger.debug('ghost map on %d primitives', ghost.degree)
    return ghost
