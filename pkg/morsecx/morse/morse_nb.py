"""
kernels for acyclicity of discrete vector fields

A field is held as two arrays over face ids: up_match[x] is the coface x is
paired with, down_match[x] the face x is paired with, both -1 when x is not
in that role.  The modified Hasse digraph has an edge face->coface for every
matched pair and coface->face for every unmatched codimension one incidence;
a field is gradient iff this digraph has no directed cycle.
"""
import numpy as np
from numba import njit


@njit
def has_closed_vpath(down_ptr, down_idx, up_match, down_match):
    """
    check the modified Hasse digraph for a directed cycle

    parameters
    ----------
    down_ptr, down_idx: int64 arrays
        compressed face lists of the Hasse diagram
    up_match, down_match: int64 arrays
        the field, see module doc

    returns
    -------
    True if some nontrivial closed V-path exists
    """
    n = up_match.size

    # 0 unseen, 1 on the stack, 2 finished
    color = np.zeros(n, dtype=np.int8)
    node_stack = np.zeros(n, dtype=np.int64)
    pos_stack = np.zeros(n, dtype=np.int64)

    for start in range(n):
        if color[start] != 0 or up_match[start] < 0:
            continue

        top = 0
        node_stack[0] = start
        pos_stack[0] = -1
        color[start] = 1

        while top >= 0:
            x = node_stack[top]
            nxt = -1

            if pos_stack[top] == -1:
                pos_stack[top] = 0
                if up_match[x] >= 0:
                    nxt = up_match[x]

            if nxt == -1:
                p = pos_stack[top]
                nd = down_ptr[x+1] - down_ptr[x]
                while p < nd:
                    y = down_idx[down_ptr[x] + p]
                    p += 1
                    if y != down_match[x]:
                        nxt = y
                        break
                pos_stack[top] = p

            if nxt == -1:
                color[x] = 2
                top -= 1
                continue

            if color[nxt] == 1:
                return True

            if color[nxt] == 0:
                color[nxt] = 1
                top += 1
                node_stack[top] = nxt
                pos_stack[top] = -1

    return False


@njit(nogil=True)
def closes_vpath(
    sigma, tau, down_ptr, down_idx, up_match, down_match, visited, stamp,
    stack,
):
    """
    check whether the pair (sigma, tau), already entered in the match
    arrays, lies on a closed V-path

    Any such path stays in the two layers of the pair, so the walk goes down
    from cofaces through unmatched incidences and up from faces through their
    matched coface only.

    parameters
    ----------
    sigma, tau: int
        face and coface of the new pair
    down_ptr, down_idx: int64 arrays
        compressed face lists of the Hasse diagram
    up_match, down_match: int64 arrays
        the field including the new pair
    visited: int64 array
        scratch, one entry per face; entries equal to stamp count as seen
    stamp: int
        a value not yet present in visited
    stack: int64 array
        scratch, one entry per face

    returns
    -------
    True if sigma is reachable from tau
    """
    top = 0
    stack[0] = tau
    visited[tau] = stamp

    while top >= 0:
        beta = stack[top]
        top -= 1

        for k in range(down_ptr[beta], down_ptr[beta+1]):
            alpha = down_idx[k]
            if alpha == down_match[beta]:
                continue
            if alpha == sigma:
                return True

            nb = up_match[alpha]
            if nb >= 0 and visited[nb] != stamp:
                visited[nb] = stamp
                top += 1
                stack[top] = nb

    return False


@njit
def fill_match_arrays(faces, cofaces, up_match, down_match):
    """
    reset the match arrays and enter the given pairs

    returns
    -------
    the id of the first simplex found in two pairs, or -1
    """
    up_match[:] = -1
    down_match[:] = -1

    for i in range(faces.size):
        s = faces[i]
        t = cofaces[i]
        if up_match[s] >= 0 or down_match[s] >= 0:
            return s
        if up_match[t] >= 0 or down_match[t] >= 0:
            return t
        up_match[s] = t
        down_match[t] = s

    return -1
