"""
Finite abstract simplicial complexes

Simplices are stored as strictly increasing tuples of dense vertex ids.  The
face table of a complex is sorted by (dimension, vertex tuple); the position
of a simplex in that table is its face id, and every downstream structure
(Hasse diagram, primitive vectors, Morse complex vertices) refers to simplices
by face id.
"""
__all__ = [
    'SimplicialComplex',
    'Classification',
    'from_facets',
    'classify',
    'is_connected',
    'f_vector',
    'dimension',
    'euler_characteristic',
    'concat_labels',
    'simplex_label',
]
import itertools
import logging
import numpy as np
import networkx as nx

from ..mexceptions import ComplexError

logger = logging.getLogger(__name__)

# bitmask fast path is available when every vertex fits in one uint64
MAX_MASK_VERTICES = 64


def concat_labels(labels):
    """
    True if simplex labels of a complex with these vertex labels are written
    by concatenation, which needs every vertex label to be one character
    """
    return all(len(label) == 1 for label in labels)


def simplex_label(labels, simplex, concat=None):
    """
    get a display string for a simplex

    Parameters
    ----------
    labels: sequence of str
        The vertex labels of the complex
    simplex: sequence of int
        Vertex ids of the simplex
    concat: bool, optional
        Join mode, the same for every simplex of a complex.  Default is
        concat_labels(labels)

    Returns
    -------
    label: str
        Labels concatenated, e.g. 'abc', when all vertex labels of the
        complex are single characters, otherwise joined with commas, e.g.
        'v0,v1,v2'
    """
    if concat is None:
        concat = concat_labels(labels)
    names = [labels[v] for v in simplex]
    if concat:
        return ''.join(names)
    return ','.join(names)


class SimplicialComplex(object):
    """
    An immutable finite abstract simplicial complex

    parameters
    ----------
    labels: sequence of str
        Unique vertex labels; the label of vertex id i is labels[i]
    faces: iterable of sequences of int
        All faces of the complex as vertex id collections.  The family must
        be closed under taking nonempty subsets
    check: bool, optional
        If True, verify downward closure and that every vertex is a face.
        Default True

    notes
    -----
    The same class holds the Morse complex M(K), whose vertices are the
    primitive vectors of K.
    """
    def __init__(self, labels, faces, check=True):
        labels = tuple(str(label) for label in labels)
        if len(set(labels)) != len(labels):
            raise ComplexError("vertex labels must be unique")

        nvert = len(labels)
        table = set()
        for face in faces:
            simplex = tuple(sorted(face))
            if len(simplex) == 0:
                raise ComplexError("faces must be nonempty")
            if len(set(simplex)) != len(simplex):
                raise ComplexError("repeated vertex in face %s" % (simplex,))
            if simplex[0] < 0 or simplex[-1] >= nvert:
                raise ComplexError("vertex id out of range in %s" % (simplex,))
            table.add(simplex)

        self._hash = None
        self._labels = labels
        self._concat = concat_labels(labels)
        self._faces = tuple(sorted(table, key=lambda s: (len(s), s)))
        self._index = {s: i for i, s in enumerate(self._faces)}

        if check:
            self._check_closure()

        self._set_facets()
        self._set_dims()
        self._set_masks()

    def _check_closure(self):
        for v in range(self.nvert):
            if (v,) not in self._index:
                raise ComplexError(
                    "vertex %r is in no face" % self._labels[v]
                )

        # codimension one subfaces suffice by induction on dimension
        for simplex in self._faces:
            if len(simplex) < 2:
                continue
            for i in range(len(simplex)):
                sub = simplex[:i] + simplex[i+1:]
                if sub not in self._index:
                    raise ComplexError(
                        "face family is not downward closed: %s is missing"
                        % simplex_label(self._labels, sub, self._concat)
                    )

    def _set_facets(self):
        covered = set()
        for simplex in self._faces:
            if len(simplex) < 2:
                continue
            for i in range(len(simplex)):
                covered.add(simplex[:i] + simplex[i+1:])

        self._facets = tuple(s for s in self._faces if s not in covered)

    def _set_dims(self):
        dims = np.array([len(s) - 1 for s in self._faces], dtype=np.int64)
        dims.flags.writeable = False
        self._dims = dims

    def _set_masks(self):
        if self.nvert <= MAX_MASK_VERTICES:
            masks = np.zeros(len(self._faces), dtype=np.uint64)
            for i, simplex in enumerate(self._faces):
                mask = 0
                for v in simplex:
                    mask |= 1 << v
                masks[i] = mask
            masks.flags.writeable = False
            self._masks = masks
        else:
            self._masks = None

    @property
    def labels(self):
        """
        tuple of vertex labels, indexed by vertex id
        """
        return self._labels

    @property
    def nvert(self):
        """
        number of vertices
        """
        return len(self._labels)

    @property
    def faces(self):
        """
        tuple of all faces, sorted by (dimension, vertex tuple)
        """
        return self._faces

    @property
    def facets(self):
        """
        tuple of maximal faces, in face table order
        """
        return self._facets

    @property
    def dims(self):
        """
        read only array of face dimensions, indexed by face id
        """
        return self._dims

    @property
    def masks(self):
        """
        read only uint64 array of vertex bitmasks indexed by face id, or None
        when the complex has more than 64 vertices
        """
        return self._masks

    @property
    def nfaces(self):
        return len(self._faces)

    def get_face_id(self, simplex):
        """
        get the face id of a simplex

        Parameters
        ----------
        simplex: sequence of int
            Vertex ids, in any order

        Returns
        -------
        face id: int
        """
        key = tuple(sorted(simplex))
        try:
            return self._index[key]
        except KeyError:
            raise ComplexError("%s is not a face" % (key,))

    def has_face(self, simplex):
        return tuple(sorted(simplex)) in self._index

    def get_face_label(self, fid):
        """
        get the display label of the face with the given id
        """
        return simplex_label(self._labels, self._faces[fid], self._concat)

    def get_vertex_id(self, label):
        try:
            return self._labels.index(label)
        except ValueError:
            raise ComplexError("no vertex labeled %r" % label)

    def get_simplex(self, labels):
        """
        convert a sequence of vertex labels to a sorted vertex id tuple
        """
        return tuple(sorted(self.get_vertex_id(label) for label in labels))

    def get_dimension(self):
        """
        dimension of the complex, -1 for the empty complex
        """
        if len(self._faces) == 0:
            return -1
        return len(self._faces[-1]) - 1

    def get_f_vector(self):
        """
        number of faces in each dimension, starting at dimension 0
        """
        counts = np.bincount(self._dims, minlength=self.get_dimension() + 1)
        return [int(c) for c in counts]

    def get_euler_characteristic(self):
        return sum((-1)**i * c for i, c in enumerate(self.get_f_vector()))

    def get_graph(self):
        """
        get the 1-skeleton as a networkx Graph on vertex ids
        """
        graph = nx.Graph()
        graph.add_nodes_from(range(self.nvert))
        graph.add_edges_from(s for s in self._faces if len(s) == 2)
        return graph

    def is_connected(self):
        if self.nvert == 0:
            return False
        return nx.is_connected(self.get_graph())

    def get_face_set(self):
        return frozenset(self._faces)

    def map_simplex(self, images, simplex):
        """
        apply a vertex map to a simplex, returning the sorted image tuple
        """
        return tuple(sorted(images[v] for v in simplex))

    dimension = property(fget=get_dimension)
    f_vector = property(fget=get_f_vector)

    def __len__(self):
        return len(self._faces)

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._labels == other._labels and self._faces == other._faces

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._labels, self._faces))
        return self._hash

    def __repr__(self):
        return 'SimplicialComplex(nvert=%d, f_vector=%s, facets=%d)' % (
            self.nvert, tuple(self.get_f_vector()), len(self._facets),
        )


def from_facets(facet_lists):
    """
    build the closure of a facet presentation

    Parameters
    ----------
    facet_lists: list of lists of str
        Each entry lists the vertex labels of one facet.  Labels are mapped
        to dense ids in order of first appearance.

    Returns
    -------
    SimplicialComplex
    """
    facet_lists = list(facet_lists)
    if len(facet_lists) == 0:
        raise ComplexError("facet list is empty")

    index = {}
    facets = []
    for facet in facet_lists:
        facet = [str(label) for label in facet]
        if len(facet) == 0:
            raise ComplexError("empty facet")
        if len(set(facet)) != len(facet):
            raise ComplexError("duplicate vertex in facet %s" % (facet,))
        for label in facet:
            if label not in index:
                index[label] = len(index)
        facets.append(tuple(sorted(index[label] for label in facet)))

    faces = set()
    for facet in set(facets):
        for size in range(1, len(facet) + 1):
            faces.update(itertools.combinations(facet, size))

    labels = sorted(index, key=index.get)
    logger.debug('closure of %d facets has %d faces', len(facets), len(faces))
    return SimplicialComplex(labels, faces, check=False)


class Classification(object):
    """
    Which case of the automorphism classification a complex falls in

    parameters
    ----------
    tag: str
        One of 'cycle', 'boundary', 'both', 'other'
    n_cycle: int, optional
        Length of the cycle for tags 'cycle' and 'both'
    n_boundary: int, optional
        n such that the complex is the boundary of the n-simplex, for tags
        'boundary' and 'both'
    """
    CYCLE = 'cycle'
    BOUNDARY = 'boundary'
    BOTH = 'both'
    OTHER = 'other'

    def __init__(self, tag, n_cycle=None, n_boundary=None):
        if tag not in (self.CYCLE, self.BOUNDARY, self.BOTH, self.OTHER):
            raise ValueError("bad classification tag: %r" % tag)
        self.tag = tag
        self.n_cycle = n_cycle
        self.n_boundary = n_boundary

    @classmethod
    def cycle(cls, n):
        return cls(cls.CYCLE, n_cycle=n)

    @classmethod
    def boundary(cls, n):
        return cls(cls.BOUNDARY, n_boundary=n)

    @classmethod
    def both(cls, n_cycle=3, n_boundary=2):
        return cls(cls.BOTH, n_cycle=n_cycle, n_boundary=n_boundary)

    @classmethod
    def other(cls):
        return cls(cls.OTHER)

    @property
    def is_cycle(self):
        return self.tag in (self.CYCLE, self.BOTH)

    @property
    def is_boundary(self):
        return self.tag in (self.BOUNDARY, self.BOTH)

    def to_dict(self):
        return {
            'tag': self.tag,
            'n_cycle': self.n_cycle,
            'n_boundary': self.n_boundary,
        }

    def __eq__(self, other):
        if not isinstance(other, Classification):
            return NotImplemented
        return (
            (self.tag, self.n_cycle, self.n_boundary)
            == (other.tag, other.n_cycle, other.n_boundary)
        )

    def __hash__(self):
        return hash((self.tag, self.n_cycle, self.n_boundary))

    def __repr__(self):
        if self.tag == self.CYCLE:
            return 'Cycle(%d)' % self.n_cycle
        elif self.tag == self.BOUNDARY:
            return 'BoundarySimplex(%d)' % self.n_boundary
        elif self.tag == self.BOTH:
            return 'Both(%d, %d)' % (self.n_cycle, self.n_boundary)
        else:
            return 'Other'


def _is_cycle(K):
    if K.dimension != 1 or K.nvert < 3:
        return False
    degrees = np.zeros(K.nvert, dtype=np.int64)
    for simplex in K.faces:
        if len(simplex) == 2:
            degrees[simplex[0]] += 1
            degrees[simplex[1]] += 1
    # a connected 2-regular graph is a cycle
    return bool(np.all(degrees == 2))


def _is_boundary_simplex(K):
    n = K.nvert - 1
    if n < 2:
        return False
    full = tuple(range(K.nvert))
    if K.has_face(full):
        return False
    return len(K) == 2**(n + 1) - 2


def classify(K):
    """
    decide whether K is a cycle, the boundary of a simplex, both or neither

    Parameters
    ----------
    K: SimplicialComplex
        Must be connected

    Returns
    -------
    Classification
    """
    if not K.is_connected():
        raise ComplexError("classification requires a connected complex")

    cycle = _is_cycle(K)
    boundary = _is_boundary_simplex(K)

    if cycle and boundary:
        return Classification.both(n_cycle=K.nvert, n_boundary=K.nvert - 1)
    elif cycle:
        return Classification.cycle(K.nvert)
    elif boundary:
        return Classification.boundary(K.nvert - 1)
    else:
        return Classification.other()


def is_connected(K):
    return K.is_connected()


def f_vector(K):
    return K.get_f_vector()


def dimension(K):
    return K.get_dimension()


def euler_characteristic(K):
    return K.get_euler_characteristic()
