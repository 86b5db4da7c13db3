"""
Discrete vector fields, V-paths and the Morse complex

A primitive vector is a single regular pair (face, coface) with the face of
codimension one in the coface.  Primitive vectors of K are listed in the
order of the Hasse diagram edges, sorted by (coface id, face id); the
position in that list is the vertex id of the primitive in M(K).
"""
__all__ = [
    'PrimitiveVector',
    'DiscreteVectorField',
    'VPath',
    'primitives',
    'primitive_label',
    'make_dvf',
    'is_gradient',
    'is_gradient_by_vpaths',
    'enumerate_v_paths',
    'enumerate_gvfs',
    'build_morse_complex',
    'is_subfield',
    'critical_cells',
    'critical_counts',
    'random_dvf',
]
import logging
import threading
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
import numpy as np

from ..hasse import build_hasse
from ..simplicial import SimplicialComplex
from ..defaults import DEFAULT_GVF_BUDGET, DEFAULT_NWORKERS
from ..mexceptions import ComplexError, MatchingError, BudgetExceeded
from . import morse_nb

logger = logging.getLogger(__name__)


class PrimitiveVector(object):
    """
    A regular pair (face, coface) of face ids

    parameters
    ----------
    face: int
        Face id of sigma, of dimension p
    coface: int
        Face id of tau, of dimension p+1
    index: int, optional
        p+1, derived from the complex by primitives()
    """
    __slots__ = ('face', 'coface', 'index')

    def __init__(self, face, coface, index=None):
        self.face = int(face)
        self.coface = int(coface)
        self.index = index

    def get_label(self, K):
        """
        get the label face|coface, e.g. 'a|ab'
        """
        return '%s|%s' % (K.get_face_label(self.face),
                          K.get_face_label(self.coface))

    def __eq__(self, other):
        if not isinstance(other, PrimitiveVector):
            return NotImplemented
        return self.face == other.face and self.coface == other.coface

    def __lt__(self, other):
        return (self.coface, self.face) < (other.coface, other.face)

    def __hash__(self):
        return hash((self.face, self.coface))

    def __repr__(self):
        return 'PrimitiveVector(%d, %d)' % (self.face, self.coface)


@lru_cache(maxsize=64)
def _get_primitives(K):
    H = build_hasse(K)
    dims = K.dims
    return tuple(
        PrimitiveVector(face, coface, index=int(dims[face]) + 1)
        for face, coface in H.edges
    )


def primitives(K):
    """
    list the primitive vectors of K, one per Hasse edge, sorted by
    (coface id, face id)

    Parameters
    ----------
    K: SimplicialComplex

    Returns
    -------
    list of PrimitiveVector
    """
    return list(_get_primitives(K))


def primitive_label(K, pid):
    """
    get the label of the primitive with id pid, e.g. 'a|ab'
    """
    return _get_primitives(K)[pid].get_label(K)


class DiscreteVectorField(object):
    """
    A set of primitive vectors of K in which every simplex appears at most
    once.  Construct with make_dvf, which checks the matching condition.

    parameters
    ----------
    K: SimplicialComplex
        The complex the pairs live in
    pids: sequence of int
        Primitive ids, positions in primitives(K)
    """
    def __init__(self, K, pids):
        self._complex = K
        self._pids = tuple(sorted(set(int(p) for p in pids)))

        prims = _get_primitives(K)
        self._pairs = tuple(prims[p] for p in self._pids)

        faces = np.array([p.face for p in self._pairs], dtype=np.int64)
        cofaces = np.array([p.coface for p in self._pairs], dtype=np.int64)

        up_match = np.zeros(K.nfaces, dtype=np.int64)
        down_match = np.zeros(K.nfaces, dtype=np.int64)
        bad = morse_nb.fill_match_arrays(faces, cofaces, up_match, down_match)
        if bad >= 0:
            label = K.get_face_label(bad)
            raise MatchingError(
                "simplex %s is in more than one pair" % label,
                simplex=label,
            )

        up_match.flags.writeable = False
        down_match.flags.writeable = False
        self._up_match = up_match
        self._down_match = down_match

    @property
    def complex(self):
        return self._complex

    @property
    def pairs(self):
        """
        tuple of PrimitiveVector in primitive id order
        """
        return self._pairs

    @property
    def pids(self):
        """
        sorted tuple of primitive ids
        """
        return self._pids

    @property
    def up_match(self):
        return self._up_match

    @property
    def down_match(self):
        return self._down_match

    def get_partner(self, fid):
        """
        get the face id paired with fid, or None if fid is critical
        """
        if self._up_match[fid] >= 0:
            return int(self._up_match[fid])
        if self._down_match[fid] >= 0:
            return int(self._down_match[fid])
        return None

    def is_gradient(self):
        """
        True if the field has no nontrivial closed V-path
        """
        H = build_hasse(self._complex)
        return not morse_nb.has_closed_vpath(
            H.down_ptr, H.down_idx, self._up_match, self._down_match,
        )

    def get_critical_cells(self):
        """
        get the face ids that are in no pair
        """
        w, = np.where((self._up_match < 0) & (self._down_match < 0))
        return w

    def get_tokens(self):
        """
        get the pairs as face>coface tokens, e.g. ['a>ab', 'b>bc']
        """
        K = self._complex
        return [
            '%s>%s' % (K.get_face_label(p.face), K.get_face_label(p.coface))
            for p in self._pairs
        ]

    def __len__(self):
        return len(self._pairs)

    def __iter__(self):
        return iter(self._pairs)

    def __contains__(self, pair):
        return pair in self._pairs

    def __eq__(self, other):
        if not isinstance(other, DiscreteVectorField):
            return NotImplemented
        return (
            self._complex == other._complex and self._pids == other._pids
        )

    def __hash__(self):
        return hash(self._pids)

    def __repr__(self):
        return 'DiscreteVectorField(%s)' % ' '.join(self.get_tokens())


def _get_pid(K, pair):
    if isinstance(pair, PrimitiveVector):
        face, coface = pair.face, pair.coface
    else:
        face, coface = pair

    pid = build_hasse(K).get_edge_id(int(face), int(coface))
    if pid is None:
        raise ComplexError(
            "(%d, %d) is not a primitive vector of the complex"
            % (face, coface)
        )
    return pid


def make_dvf(pairs, K):
    """
    make a discrete vector field from a collection of pairs

    Parameters
    ----------
    pairs: iterable
        PrimitiveVector or (face id, coface id) tuples
    K: SimplicialComplex

    Returns
    -------
    DiscreteVectorField

    Raises
    ------
    MatchingError if some simplex is in more than one pair, naming it
    """
    return DiscreteVectorField(K, [_get_pid(K, pair) for pair in pairs])


def is_gradient(V):
    """
    True if V has no nontrivial closed V-path

    Parameters
    ----------
    V: DiscreteVectorField
    """
    return V.is_gradient()


class VPath(object):
    """
    An alternating sequence of face ids a0, b0, a1, b1, ..., ak

    parameters
    ----------
    simplices: sequence of int
    closed: bool
        True if ak == a0 with k >= 1
    """
    __slots__ = ('simplices', 'closed')

    def __init__(self, simplices, closed=False):
        self.simplices = tuple(simplices)
        self.closed = closed

    @property
    def npairs(self):
        return len(self.simplices) // 2

    def get_label(self, K):
        return ','.join(K.get_face_label(s) for s in self.simplices)

    def __eq__(self, other):
        if not isinstance(other, VPath):
            return NotImplemented
        return (
            self.simplices == other.simplices and self.closed == other.closed
        )

    def __hash__(self):
        return hash((self.simplices, self.closed))

    def __repr__(self):
        return 'VPath(%s, closed=%s)' % (self.simplices, self.closed)


def enumerate_v_paths(V, max_len=None):
    """
    list the V-paths of a field directly from the definition

    Paths start at a face a0 that is matched upward, including the trivial
    path (a0).  A face is never revisited except to close the path at a0,
    and a closed path is not extended.  Every closed V-path contains a
    simple closed one, so this list decides gradient-ness.

    Parameters
    ----------
    V: DiscreteVectorField
    max_len: int, optional
        Maximum number of pairs in a path.  Default len(V), which is enough
        to reach every simple closed path.

    Returns
    -------
    list of VPath, in depth first order from each start
    """
    if max_len is None:
        max_len = len(V)

    H = build_hasse(V.complex)
    up_match = V.up_match

    paths = []

    def _extend(path, seen):
        alpha = path[-1]
        if len(path) // 2 >= max_len:
            return
        beta = int(up_match[alpha])
        if beta < 0:
            return
        for nxt in H.get_down(beta):
            nxt = int(nxt)
            if nxt == alpha:
                continue
            if nxt == path[0]:
                paths.append(VPath(path + [beta, nxt], closed=True))
                continue
            if nxt in seen:
                continue
            newpath = path + [beta, nxt]
            paths.append(VPath(newpath))
            seen.add(nxt)
            _extend(newpath, seen)
            seen.remove(nxt)

    for pair in V.pairs:
        start = [pair.face]
        paths.append(VPath(start))
        _extend(start, {pair.face})

    return paths


def is_gradient_by_vpaths(V):
    """
    decide gradient-ness by searching for a closed V-path explicitly; slow,
    used to cross check is_gradient
    """
    return not any(path.closed for path in enumerate_v_paths(V))


def is_subfield(V, W):
    """
    True if every pair of V is a pair of W
    """
    if V.complex != W.complex:
        raise ComplexError("fields live in different complexes")
    return set(V.pids) <= set(W.pids)


def critical_cells(V):
    """
    get the face ids of the simplices in no pair of V
    """
    return V.get_critical_cells()


def critical_counts(V):
    """
    number of critical cells in each dimension
    """
    K = V.complex
    crit = V.get_critical_cells()
    counts = np.bincount(K.dims[crit], minlength=K.dimension + 1)
    return [int(c) for c in counts]


def random_dvf(K, rng, prob=0.5):
    """
    draw a random discrete vector field, not necessarily gradient

    Primitives are visited in a random order and each is kept with
    probability prob if its simplices are still free.

    Parameters
    ----------
    K: SimplicialComplex
    rng: np.random.RandomState
    prob: float, optional
        Acceptance probability, default 0.5

    Returns
    -------
    DiscreteVectorField
    """
    prims = _get_primitives(K)
    used = np.zeros(K.nfaces, dtype=bool)
    pids = []
    for pid in rng.permutation(len(prims)):
        p = prims[pid]
        if used[p.face] or used[p.coface]:
            continue
        if rng.uniform() < prob:
            used[p.face] = True
            used[p.coface] = True
            pids.append(pid)
    return DiscreteVectorField(K, pids)


class _SharedBudget(object):
    """
    number of fields emitted by all searches of one enumeration
    """
    def __init__(self, budget):
        self.budget = budget
        self.count = 0
        self._lock = threading.Lock()

    def take(self):
        with self._lock:
            if self.count >= self.budget:
                raise BudgetExceeded(
                    "more than %d gradient vector fields" % self.budget,
                    count=self.count, budget=self.budget,
                )
            self.count += 1


class _GVFSearch(object):
    """
    depth first enumeration of gradient vector fields

    Each primitive is tried in id order; a primitive extends the current
    field only if its simplices are free and the new pair closes no V-path.
    Fields come out in lexicographic order of their sorted id tuples.
    """
    def __init__(self, K, shared):
        H = build_hasse(K)
        prims = _get_primitives(K)

        self.shared = shared
        self.down_ptr = H.down_ptr
        self.down_idx = H.down_idx
        self.faces = np.array([p.face for p in prims], dtype=np.int64)
        self.cofaces = np.array([p.coface for p in prims], dtype=np.int64)
        self.nprim = len(prims)

        n = K.nfaces
        self.up_match = np.full(n, -1, dtype=np.int64)
        self.down_match = np.full(n, -1, dtype=np.int64)
        self.visited = np.zeros(n, dtype=np.int64)
        self.stack = np.zeros(n, dtype=np.int64)
        self.stamp = 0

    def _free(self, x):
        return self.up_match[x] < 0 and self.down_match[x] < 0

    def _try(self, j):
        s = self.faces[j]
        t = self.cofaces[j]
        if not (self._free(s) and self._free(t)):
            return False

        self.up_match[s] = t
        self.down_match[t] = s
        self.stamp += 1
        closed = morse_nb.closes_vpath(
            s, t, self.down_ptr, self.down_idx, self.up_match,
            self.down_match, self.visited, self.stamp, self.stack,
        )
        if closed:
            self._undo(j)
            return False
        return True

    def _undo(self, j):
        self.up_match[self.faces[j]] = -1
        self.down_match[self.cofaces[j]] = -1

    def _emit(self, current, output):
        self.shared.take()
        output.append(tuple(current))

    def _descend(self, current, start, output):
        for j in range(start, self.nprim):
            if self._try(j):
                current.append(j)
                self._emit(current, output)
                self._descend(current, j + 1, output)
                current.pop()
                self._undo(j)

    def run_root(self, root):
        """
        list every gradient field whose smallest primitive id is root
        """
        output = []
        if self._try(root):
            current = [root]
            self._emit(current, output)
            self._descend(current, root + 1, output)
            self._undo(root)
        return output


def _run_root(args):
    K, shared, root = args
    return _GVFSearch(K, shared).run_root(root)


@lru_cache(maxsize=16)
def _get_gvf_ids(K, budget, nworkers):
    nprim = len(_get_primitives(K))
    # one budget for all roots and threads
    shared = _SharedBudget(budget)

    result = []
    if nworkers > 1:
        with ThreadPoolExecutor(max_workers=nworkers) as executor:
            chunks = executor.map(
                _run_root, [(K, shared, root) for root in range(nprim)],
            )
            for chunk in chunks:
                result.extend(chunk)
    else:
        search = _GVFSearch(K, shared)
        for root in range(nprim):
            result.extend(search.run_root(root))

    logger.debug(
        'enumerated %d gradient vector fields over %d primitives',
        len(result), nprim,
    )
    return tuple(result)


def _check_budget(budget, nworkers):
    if budget <= 0:
        raise ValueError("budget must be positive, got %d" % budget)
    if nworkers < 1:
        raise ValueError("nworkers must be >= 1, got %d" % nworkers)


def enumerate_gvfs(K, budget=DEFAULT_GVF_BUDGET, nworkers=DEFAULT_NWORKERS):
    """
    list every nonempty gradient vector field of K

    Parameters
    ----------
    K: SimplicialComplex
    budget: int, optional
        Maximum number of fields, default DEFAULT_GVF_BUDGET
    nworkers: int, optional
        Number of threads the search is split over, by root primitive.
        The output does not depend on it.  Only the V-path kernel releases
        the GIL; the search bookkeeping is Python, so threads change the
        scheduling more than the run time

    Returns
    -------
    list of DiscreteVectorField in lexicographic order of primitive ids

    Raises
    ------
    BudgetExceeded if there are more than budget fields; the count
    attribute holds the number reached
    """
    _check_budget(budget, nworkers)
    return [
        DiscreteVectorField(K, pids)
        for pids in _get_gvf_ids(K, budget, nworkers)
    ]


def build_morse_complex(
    K, budget=DEFAULT_GVF_BUDGET, nworkers=DEFAULT_NWORKERS,
):
    """
    build the Morse complex M(K)

    The vertices are the primitive vectors of K, labeled face|coface, and the
    faces are the gradient vector fields as sets of primitive ids.

    Parameters
    ----------
    K: SimplicialComplex
    budget: int, optional
        Maximum number of gradient vector fields, default
        DEFAULT_GVF_BUDGET
    nworkers: int, optional
        Number of threads for the enumeration

    Returns
    -------
    SimplicialComplex

    Raises
    ------
    BudgetExceeded
    """
    _check_budget(budget, nworkers)
    return _build_morse_complex(K, budget, nworkers)


@lru_cache(maxsize=16)
def _build_morse_complex(K, budget, nworkers):
    prims = _get_primitives(K)
    labels = [p.get_label(K) for p in prims]
    faces = _get_gvf_ids(K, budget, nworkers)

    M = SimplicialComplex(labels, faces, check=False)
    logger.info('Morse complex f-vector %s', M.get_f_vector())
    return M
