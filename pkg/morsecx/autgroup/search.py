"""
Automorphism and isomorphism search by individualization and refinement

Colorings are refined by iterated neighbor color multisets (1-dimensional
Weisfeiler-Leman) on both graphs at once, so that colors are comparable
across them.  The search individualizes the lowest id node of the smallest
nontrivial color class of the first graph against each node of the same
color in the second, refines, and recurses.  Refinement only prunes; a leaf
is accepted only after its map has been verified directly.
"""
__all__ = [
    'complex_automorphisms',
    'graph_automorphisms',
    'graph_isomorphism',
    'refine_colors',
]
import logging
import numpy as np
import networkx as nx

from ..defaults import DEFAULT_GROUP_BUDGET
from ..mexceptions import BudgetExceeded
from ..util import make_csr
from .perms import Permutation, PermutationGroup
from . import search_nb

logger = logging.getLogger(__name__)


def _get_nodes(G):
    nodes = list(G.nodes())
    try:
        nodes = sorted(nodes)
    except TypeError:
        pass
    return nodes


def _graph_to_csr(G, nodes):
    if nx.number_of_selfloops(G) > 0:
        raise ValueError("graphs with self loops are not supported")
    index = {node: i for i, node in enumerate(nodes)}
    lists = [[index[nb] for nb in G.neighbors(node)] for node in nodes]
    return make_csr(lists)


def _pad_neighbors(ptr, idx, width):
    n = ptr.size - 1
    pad = np.full((n, width), -1, dtype=np.int64)
    for u in range(n):
        deg = ptr[u+1] - ptr[u]
        pad[u, :deg] = idx[ptr[u]:ptr[u+1]]
    return pad


def _signature_rows(colors, pad):
    ext = np.append(colors, -1)
    nbr = np.sort(ext[pad], axis=1)
    return np.column_stack([colors, nbr])


def _refine_pair(colors1, colors2, pad1, pad2):
    n1 = colors1.size
    ncolors = np.unique(np.concatenate([colors1, colors2])).size

    while True:
        rows = np.vstack([
            _signature_rows(colors1, pad1),
            _signature_rows(colors2, pad2),
        ])
        _, inverse = np.unique(rows, axis=0, return_inverse=True)
        inverse = inverse.ravel().astype(np.int64)

        colors1 = inverse[:n1]
        colors2 = inverse[n1:]
        new_ncolors = int(inverse.max()) + 1 if inverse.size > 0 else 0
        if new_ncolors == ncolors:
            break
        ncolors = new_ncolors

    return colors1, colors2


def refine_colors(G, colors=None):
    """
    get the stable 1-WL coloring of a graph

    Parameters
    ----------
    G: networkx Graph
    colors: sequence of int, optional
        Initial colors in sorted node order, default all equal

    Returns
    -------
    colors: int64 array in sorted node order
    """
    nodes = _get_nodes(G)
    ptr, idx = _graph_to_csr(G, nodes)
    if colors is None:
        colors = np.zeros(len(nodes), dtype=np.int64)
    colors = np.asarray(colors, dtype=np.int64)

    width = int(np.diff(ptr).max()) if len(nodes) > 0 else 0
    pad = _pad_neighbors(ptr, idx, width)
    refined, _ = _refine_pair(colors, colors, pad, pad)
    return refined


class _RefinementSearch(object):
    """
    backtracking search for color preserving isomorphisms from graph 1 to
    graph 2

    parameters
    ----------
    ptr1, idx1, ptr2, idx2: int64 arrays
        compressed sorted neighbor lists
    colors1, colors2: int64 arrays
        initial colorings
    leaf_check: callable, optional
        extra test on a candidate images array; adjacency is always checked
    budget: int
        maximum number of maps to return, or of leaves to visit when
        first_only is set
    first_only: bool
        stop at the first verified map
    """
    def __init__(
        self, ptr1, idx1, colors1, ptr2, idx2, colors2,
        leaf_check=None, budget=DEFAULT_GROUP_BUDGET, first_only=False,
    ):
        self.ptr1, self.idx1 = ptr1, idx1
        self.ptr2, self.idx2 = ptr2, idx2
        self.colors1 = np.asarray(colors1, dtype=np.int64)
        self.colors2 = np.asarray(colors2, dtype=np.int64)
        self.leaf_check = leaf_check
        self.budget = budget
        self.first_only = first_only

        width = 0
        for ptr in (ptr1, ptr2):
            if ptr.size > 1:
                width = max(width, int(np.diff(ptr).max()))
        self.pad1 = _pad_neighbors(ptr1, idx1, width)
        self.pad2 = _pad_neighbors(ptr2, idx2, width)

        self.results = []
        self.nnodes = 0
        self.nleaves = 0
        self._done = False

    def run(self):
        """
        run the search

        Returns
        -------
        list of int64 image arrays, in search order
        """
        n = self.colors1.size
        if n != self.colors2.size or self.idx1.size != self.idx2.size:
            return []

        c1, c2 = _refine_pair(
            self.colors1, self.colors2, self.pad1, self.pad2,
        )
        self._search(c1, c2)

        logger.debug(
            'refinement search: %d tree nodes %d leaves %d maps',
            self.nnodes, self.nleaves, len(self.results),
        )
        return self.results

    def _search(self, c1, c2):
        self.nnodes += 1

        ncolors = int(max(c1.max(), c2.max())) + 1 if c1.size > 0 else 0
        counts1 = np.bincount(c1, minlength=ncolors)
        counts2 = np.bincount(c2, minlength=ncolors)
        if not np.array_equal(counts1, counts2):
            return

        sizes = counts1[c1]
        if np.all(sizes == 1):
            self._leaf(c1, c2)
            return

        smallest = sizes[sizes > 1].min()
        v = int(np.flatnonzero(sizes == smallest)[0])
        candidates = np.flatnonzero(c2 == c1[v])

        for w in candidates:
            n1 = c1.copy()
            n2 = c2.copy()
            n1[v] = ncolors
            n2[w] = ncolors
            r1, r2 = _refine_pair(n1, n2, self.pad1, self.pad2)
            self._search(r1, r2)
            if self._done:
                return

    def _leaf(self, c1, c2):
        self.nleaves += 1
        if self.first_only and self.nleaves > self.budget:
            raise BudgetExceeded(
                "isomorphism search visited more than %d leaves"
                % self.budget,
                count=self.budget, budget=self.budget,
            )

        pos = np.zeros(c2.size, dtype=np.int64)
        pos[c2] = np.arange(c2.size)
        images = pos[c1]

        ok = search_nb.preserves_adjacency(
            self.ptr1, self.idx1, self.ptr2, self.idx2, images,
        )
        if ok and self.leaf_check is not None:
            ok = self.leaf_check(images)
        if not ok:
            return

        if len(self.results) >= self.budget:
            raise BudgetExceeded(
                "group has more than %d elements" % self.budget,
                count=len(self.results), budget=self.budget,
            )
        self.results.append(images)
        if self.first_only:
            self._done = True


def _check_budget(budget):
    if budget <= 0:
        raise ValueError("budget must be positive, got %d" % budget)


def graph_automorphisms(G, budget=DEFAULT_GROUP_BUDGET):
    """
    get the automorphism group of a simple undirected graph

    Parameters
    ----------
    G: networkx Graph
        Points of the group are positions in the sorted node list
    budget: int, optional
        Maximum group order, default DEFAULT_GROUP_BUDGET

    Returns
    -------
    PermutationGroup

    Raises
    ------
    BudgetExceeded
    """
    _check_budget(budget)
    nodes = _get_nodes(G)
    ptr, idx = _graph_to_csr(G, nodes)
    colors = np.zeros(len(nodes), dtype=np.int64)

    search = _RefinementSearch(
        ptr, idx, colors, ptr, idx, colors, budget=budget,
    )
    elements = [Permutation(images, check=False) for images in search.run()]
    logger.info('graph automorphism group of order %d', len(elements))
    return PermutationGroup(len(nodes), elements)


def graph_isomorphism(G1, G2, budget=DEFAULT_GROUP_BUDGET):
    """
    find an isomorphism between two simple undirected graphs

    Parameters
    ----------
    G1, G2: networkx Graph
    budget: int, optional
        Maximum number of search leaves to visit

    Returns
    -------
    dict mapping each node of G1 to a node of G2, or None if the graphs are
    not isomorphic

    Raises
    ------
    BudgetExceeded
    """
    _check_budget(budget)
    nodes1 = _get_nodes(G1)
    nodes2 = _get_nodes(G2)
    if len(nodes1) != len(nodes2):
        return None

    ptr1, idx1 = _graph_to_csr(G1, nodes1)
    ptr2, idx2 = _graph_to_csr(G2, nodes2)
    colors = np.zeros(len(nodes1), dtype=np.int64)

    search = _RefinementSearch(
        ptr1, idx1, colors, ptr2, idx2, colors,
        budget=budget, first_only=True,
    )
    results = search.run()
    if len(results) == 0:
        return None

    images = results[0]
    return {nodes1[i]: nodes2[j] for i, j in enumerate(images)}


def _face_count_colors(K):
    counts = np.zeros((K.nvert, K.dimension + 1), dtype=np.int64)
    for simplex, dim in zip(K.faces, K.dims):
        for v in simplex:
            counts[v, dim] += 1
    _, colors = np.unique(counts, axis=0, return_inverse=True)
    return colors.ravel().astype(np.int64)


def _make_facet_check(K):
    if K.masks is not None:
        facet_ids = [K.get_face_id(f) for f in K.facets]
        facet_masks = np.sort(K.masks[facet_ids])

        def check(images):
            return search_nb.maps_facets(facet_masks, images)
    else:
        facet_set = frozenset(K.facets)

        def check(images):
            return all(
                K.map_simplex(images, facet) in facet_set
                for facet in K.facets
            )

    return check


def complex_automorphisms(K, budget=DEFAULT_GROUP_BUDGET):
    """
    get the group of simplicial automorphisms of K

    The search runs on the 1-skeleton with vertices colored by how many
    faces of each dimension contain them; a candidate is accepted only if it
    maps every facet to a facet.

    Parameters
    ----------
    K: SimplicialComplex
    budget: int, optional
        Maximum group order, default DEFAULT_GROUP_BUDGET

    Returns
    -------
    PermutationGroup acting on vertex ids

    Raises
    ------
    BudgetExceeded
    """
    _check_budget(budget)
    nodes = list(range(K.nvert))
    ptr, idx = _graph_to_csr(K.get_graph(), nodes)
    colors = _face_count_colors(K)

    search = _RefinementSearch(
        ptr, idx, colors, ptr, idx, colors,
        leaf_check=_make_facet_check(K), budget=budget,
    )
    elements = [Permutation(images, check=False) for images in search.run()]
    logger.info('complex automorphism group of order %d', len(elements))
    return PermutationGroup(K.nvert, elements)
