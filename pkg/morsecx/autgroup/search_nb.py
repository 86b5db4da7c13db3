import numpy as np
from numba import njit


@njit
def has_neighbor(ptr, idx, u, v):
    """
    check whether v is in the sorted neighbor list of u
    """
    start = ptr[u]
    end = ptr[u+1]
    k = start + np.searchsorted(idx[start:end], v)
    return k < end and idx[k] == v


@njit
def preserves_adjacency(ptr1, idx1, ptr2, idx2, images):
    """
    check that every edge u-v of graph 1 maps to an edge of graph 2

    Neighbor lists must be sorted.  With equal edge counts this makes images
    an isomorphism.
    """
    n = ptr1.size - 1
    for u in range(n):
        iu = images[u]
        for k in range(ptr1[u], ptr1[u+1]):
            v = idx1[k]
            if not has_neighbor(ptr2, idx2, iu, images[v]):
                return False
    return True


@njit
def maps_facets(facet_masks, images):
    """
    check that a vertex map sends each facet to a facet

    parameters
    ----------
    facet_masks: uint64 array
        sorted vertex bitmasks of the facets
    images: int64 array
        the vertex map
    """
    n = images.size
    one = np.uint64(1)
    zero = np.uint64(0)
    nfacets = facet_masks.size

    for i in range(nfacets):
        m = facet_masks[i]
        out = zero
        for v in range(n):
            if ((m >> np.uint64(v)) & one) != zero:
                out |= one << np.uint64(images[v])

        k = np.searchsorted(facet_masks, out)
        if k >= nfacets or facet_masks[k] != out:
            return False

    return True
