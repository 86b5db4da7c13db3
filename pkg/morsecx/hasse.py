"""
Hasse diagram of a simplicial complex

Nodes are the face ids of the parent complex, edges join a face to each of its
codimension one faces.  Adjacency is held in compressed arrays split into a
"down" view (faces of a node) and an "up" view (cofaces of a node); the
automorphism search works on the undirected union.
"""
__all__ = [
    'HasseDiagram',
    'build_hasse',
    'layer_sizes',
    'layer_degree',
    'as_graph',
]
import logging
from functools import lru_cache
import numpy as np
import networkx as nx

from .mexceptions import NonUniformLayerError
from .util import make_csr

logger = logging.getLogger(__name__)


class HasseDiagram(object):
    """
    The Hasse diagram of a complex, viewed as a layered undirected graph

    parameters
    ----------
    K: SimplicialComplex
        The parent complex.  Node i of the diagram is face i of K.
    """
    def __init__(self, K):
        self._complex = K

        down = [[] for _ in range(K.nfaces)]
        up = [[] for _ in range(K.nfaces)]
        edges = []
        for tid, simplex in enumerate(K.faces):
            if len(simplex) < 2:
                continue
            for i in range(len(simplex)):
                sid = K.get_face_id(simplex[:i] + simplex[i+1:])
                down[tid].append(sid)
                up[sid].append(tid)
                edges.append((sid, tid))

        # sorted by (coface, face); edge ids double as primitive vector ids
        edges.sort(key=lambda e: (e[1], e[0]))
        self._edges = tuple(edges)
        self._edge_index = {e: i for i, e in enumerate(self._edges)}

        self._down_ptr, self._down_idx = make_csr(down)
        self._up_ptr, self._up_idx = make_csr(up)

        degrees = np.diff(self._down_ptr) + np.diff(self._up_ptr)
        degrees.flags.writeable = False
        self._degrees = degrees

        layers = []
        for dim in range(K.dimension + 1):
            layer = np.flatnonzero(K.dims == dim)
            layer.flags.writeable = False
            layers.append(layer)
        self._layers = tuple(layers)

        logger.debug(
            'hasse diagram: %d nodes %d edges', self.nnodes, len(self._edges),
        )

    @property
    def complex(self):
        return self._complex

    @property
    def nnodes(self):
        return self._complex.nfaces

    @property
    def edges(self):
        """
        tuple of (face id, coface id) pairs sorted by (coface, face)
        """
        return self._edges

    @property
    def nedges(self):
        return len(self._edges)

    @property
    def down_ptr(self):
        return self._down_ptr

    @property
    def down_idx(self):
        return self._down_idx

    @property
    def up_ptr(self):
        return self._up_ptr

    @property
    def up_idx(self):
        return self._up_idx

    @property
    def degrees(self):
        return self._degrees

    @property
    def layers(self):
        """
        tuple of arrays of node ids, one per dimension
        """
        return self._layers

    def get_down(self, node):
        """
        get the codimension one faces of a node
        """
        return self._down_idx[self._down_ptr[node]:self._down_ptr[node+1]]

    def get_up(self, node):
        """
        get the codimension one cofaces of a node
        """
        return self._up_idx[self._up_ptr[node]:self._up_ptr[node+1]]

    def get_neighbors(self, node):
        return np.concatenate([self.get_down(node), self.get_up(node)])

    def get_edge_id(self, face, coface):
        """
        get the id of the edge joining face to coface, or None
        """
        return self._edge_index.get((face, coface))

    def has_edge(self, a, b):
        """
        True if nodes a and b are adjacent, in either order
        """
        return (a, b) in self._edge_index or (b, a) in self._edge_index

    def get_layer_sizes(self):
        return [len(layer) for layer in self._layers]

    def get_layer_degree(self, i):
        """
        get the common degree of the nodes in layer i

        Parameters
        ----------
        i: int
            Layer index, the dimension of its simplices

        Returns
        -------
        degree: int

        Raises
        ------
        NonUniformLayerError if the nodes of the layer have different degrees
        """
        if i < 0 or i >= len(self._layers):
            raise ValueError(
                "layer %d out of range [0, %d)" % (i, len(self._layers))
            )
        degrees = np.unique(self._degrees[self._layers[i]])
        if degrees.size != 1:
            raise NonUniformLayerError(
                "layer %d has degrees %s" % (i, degrees.tolist())
            )
        return int(degrees[0])

    def get_graph(self):
        """
        get the diagram as a plain undirected networkx Graph on node ids,
        without layer or dimension information
        """
        graph = nx.Graph()
        graph.add_nodes_from(range(self.nnodes))
        graph.add_edges_from(self._edges)
        return graph

    def to_dot(self, name='hasse'):
        """
        get a graphviz description of the diagram, one rank per layer, nodes
        in face table order

        Returns
        -------
        text: str
        """
        K = self._complex
        lines = ['graph %s {' % name, '\trankdir=BT;']
        for layer in self._layers:
            lines.append('\t{')
            lines.append('\t\trank = same;')
            for node in layer:
                lines.append(
                    '\t\t"%d" [label="%s"];' % (node, K.get_face_label(node))
                )
            lines.append('\t}')
        for face, coface in sorted(self._edges):
            lines.append('\t"%d" -- "%d";' % (face, coface))
        lines.append('}')
        return '\n'.join(lines) + '\n'

    def __repr__(self):
        return 'HasseDiagram(nodes=%d, edges=%d, layers=%s)' % (
            self.nnodes, self.nedges, tuple(self.get_layer_sizes()),
        )


@lru_cache(maxsize=64)
def build_hasse(K):
    """
    build the Hasse diagram of K; results are cached per complex

    Parameters
    ----------
    K: SimplicialComplex

    Returns
    -------
    HasseDiagram
    """
    return HasseDiagram(K)


def layer_sizes(H):
    return H.get_layer_sizes()


def layer_degree(H, i):
    return H.get_layer_degree(i)


def as_graph(H):
    return H.get_graph()
