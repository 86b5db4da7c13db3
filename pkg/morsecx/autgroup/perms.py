"""
Permutations and explicitly enumerated permutation groups
"""
__all__ = [
    'Permutation',
    'PermutationGroup',
    'orbit',
    'stabilizer_order',
    'is_homomorphism',
    'is_injective',
]
import logging
import math
import numpy as np

from ..defaults import DEFAULT_GROUP_BUDGET
from ..mexceptions import BudgetExceeded, MapNotTotalError

logger = logging.getLogger(__name__)


class Permutation(object):
    """
    A bijection of the points 0..degree-1

    parameters
    ----------
    images: sequence of int
        images[i] is the image of point i
    check: bool, optional
        If True, raise ValueError when images is not a bijection.  Default
        True
    """
    __slots__ = ('_images',)

    def __init__(self, images, check=True):
        images = tuple(int(i) for i in images)
        if check and sorted(images) != list(range(len(images))):
            raise ValueError("images do not define a permutation: %s"
                             % (images,))
        self._images = images

    @classmethod
    def identity(cls, degree):
        return cls(range(degree), check=False)

    @property
    def images(self):
        return self._images

    @property
    def degree(self):
        return len(self._images)

    @property
    def array(self):
        """
        the images as an int64 array
        """
        return np.array(self._images, dtype=np.int64)

    def compose(self, other):
        """
        get self o other, the map i -> self(other(i))
        """
        if other.degree != self.degree:
            raise ValueError("degrees differ: %d vs %d"
                             % (self.degree, other.degree))
        images = self._images
        return Permutation(
            [images[j] for j in other._images], check=False,
        )

    def inverse(self):
        inv = [0]*self.degree
        for i, j in enumerate(self._images):
            inv[j] = i
        return Permutation(inv, check=False)

    def power(self, k):
        result = Permutation.identity(self.degree)
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            result = base.compose(result)
        return result

    def is_identity(self):
        return all(i == j for i, j in enumerate(self._images))

    def get_cycles(self):
        """
        get the nontrivial cycles, each starting at its smallest point
        """
        seen = [False]*self.degree
        cycles = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            j = self._images[start]
            while j != start:
                cycle.append(j)
                seen[j] = True
                j = self._images[j]
            if len(cycle) > 1:
                cycles.append(tuple(cycle))
        return cycles

    def get_order(self):
        order = 1
        for cycle in self.get_cycles():
            order = order * len(cycle) // math.gcd(order, len(cycle))
        return order

    def apply_block(self, block):
        """
        get the image of a set of points as a sorted tuple
        """
        return tuple(sorted(self._images[i] for i in block))

    def __call__(self, i):
        return self._images[i]

    def __mul__(self, other):
        return self.compose(other)

    def __len__(self):
        return len(self._images)

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images == other._images

    def __lt__(self, other):
        return self._images < other._images

    def __hash__(self):
        return hash(self._images)

    def __str__(self):
        return '(%s)' % ' '.join(str(i) for i in self._images)

    def __repr__(self):
        return 'Permutation(%s)' % (list(self._images),)


class PermutationGroup(object):
    """
    A permutation group stored as the sorted list of all its elements

    parameters
    ----------
    degree: int
        Number of points acted on
    elements: iterable of Permutation
        All elements of the group
    generators: sequence of Permutation, optional
        A generating set.  If not sent, one is chosen greedily on demand.
    """
    def __init__(self, degree, elements, generators=None):
        elements = sorted(set(elements))
        for g in elements:
            if g.degree != degree:
                raise ValueError("element of degree %d in group of degree %d"
                                 % (g.degree, degree))

        self._degree = degree
        self._elements = tuple(elements)
        self._element_set = frozenset(elements)
        self._generators = (
            None if generators is None else tuple(generators)
        )

    @classmethod
    def generate(cls, degree, generators, budget=DEFAULT_GROUP_BUDGET):
        """
        close a set of generators under composition

        Parameters
        ----------
        degree: int
        generators: sequence of Permutation
        budget: int, optional
            Maximum group order, default DEFAULT_GROUP_BUDGET

        Returns
        -------
        PermutationGroup
        """
        generators = list(generators)
        identity = Permutation.identity(degree)
        elements = {identity}
        frontier = [identity]
        while frontier:
            new = []
            for g in frontier:
                for s in generators:
                    h = s.compose(g)
                    if h not in elements:
                        elements.add(h)
                        new.append(h)
                        if len(elements) > budget:
                            raise BudgetExceeded(
                                "group has more than %d elements" % budget,
                                count=budget, budget=budget,
                            )
            frontier = new

        return cls(degree, elements, generators=generators)

    @property
    def degree(self):
        return self._degree

    @property
    def elements(self):
        """
        tuple of all elements in lexicographic order of their images
        """
        return self._elements

    @property
    def order(self):
        return len(self._elements)

    @property
    def generators(self):
        if self._generators is None:
            self._generators = self._choose_generators()
        return self._generators

    def _choose_generators(self):
        gens = []
        span = {Permutation.identity(self._degree)}
        for g in self._elements:
            if g in span:
                continue
            gens.append(g)
            span = PermutationGroup.generate(self._degree, gens)._element_set
            if len(span) == self.order:
                break
        return tuple(gens)

    def get_identity(self):
        return Permutation.identity(self._degree)

    def is_group(self):
        """
        check identity, closure under composition and inverses, and that the
        order divides degree!
        """
        if self.get_identity() not in self._element_set:
            return False
        if math.factorial(self._degree) % self.order != 0:
            return False
        for g in self._elements:
            if g.inverse() not in self._element_set:
                return False
            for h in self._elements:
                if g.compose(h) not in self._element_set:
                    return False
        return True

    def is_subgroup_of(self, other):
        return (
            self._degree == other.degree
            and self._element_set <= other._element_set
        )

    def get_orbit(self, block):
        """
        get the orbit of a set of points under the setwise action

        Returns
        -------
        sorted list of sorted tuples
        """
        return sorted(set(g.apply_block(block) for g in self._elements))

    def get_stabilizer_order(self, block):
        """
        get the order of the setwise stabilizer of a set of points
        """
        key = tuple(sorted(block))
        return sum(1 for g in self._elements if g.apply_block(key) == key)

    def to_dict(self):
        return {
            'degree': self._degree,
            'order': self.order,
            'generators': [list(g.images) for g in self.generators],
        }

    def __contains__(self, g):
        return g in self._element_set

    def __iter__(self):
        return iter(self._elements)

    def __len__(self):
        return len(self._elements)

    def __eq__(self, other):
        if not isinstance(other, PermutationGroup):
            return NotImplemented
        return (
            self._degree == other._degree
            and self._element_set == other._element_set
        )

    def __hash__(self):
        return hash((self._degree, self._element_set))

    def __repr__(self):
        return 'PermutationGroup(degree=%d, order=%d)' % (
            self._degree, self.order,
        )


def orbit(G, block):
    """
    the orbit of a set of points under G, as a sorted list of sorted tuples
    """
    return G.get_orbit(block)


def stabilizer_order(G, block):
    """
    the order of the setwise stabilizer of a set of points in G
    """
    return G.get_stabilizer_order(block)


def is_homomorphism(mapping, G, H=None, exhaustive=True):
    """
    check that a map between groups respects composition

    Parameters
    ----------
    mapping: dict
        Maps each Permutation of G to a Permutation
    G: PermutationGroup
        The domain
    H: PermutationGroup, optional
        If sent, every image must be an element of H
    exhaustive: bool, optional
        If True, test map(fg) = map(f)map(g) for all pairs.  If False, test
        only pairs with f a generator of G, which suffices.  Default True

    Returns
    -------
    bool

    Raises
    ------
    MapNotTotalError if some element of G has no image
    """
    for g in G:
        if g not in mapping:
            raise MapNotTotalError("map is not defined on %s" % g)

    if H is not None:
        for g in G:
            if mapping[g] not in H:
                return False

    left = G.elements if exhaustive else G.generators
    for f in left:
        for g in G:
            fg = f.compose(g)
            if mapping[fg] != mapping[f].compose(mapping[g]):
                logger.debug('homomorphism fails at %s, %s', f, g)
                return False

    if not exhaustive:
        identity = G.get_identity()
        return mapping[identity].is_identity()

    return True


def is_injective(mapping):
    """
    True if no two keys share an image
    """
    return len(set(mapping.values())) == len(mapping)
