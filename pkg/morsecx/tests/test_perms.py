import pytest

from ..autgroup import (
    Permutation,
    PermutationGroup,
    orbit,
    stabilizer_order,
    is_homomorphism,
    is_injective,
)
from ..mexceptions import BudgetExceeded, MapNotTotalError


def _get_s3():
    return PermutationGroup.generate(
        3, [Permutation([1, 0, 2]), Permutation([1, 2, 0])],
    )


def test_permutation():
    p = Permutation([2, 0, 1])
    q = Permutation([1, 0, 2])

    assert p(0) == 2
    assert p.degree == 3
    assert len(p) == 3
    assert p.array.tolist() == [2, 0, 1]
    assert str(p) == '(2 0 1)'
    assert repr(p) == 'Permutation([2, 0, 1])'

    # p o q: 0 -> q -> 1 -> p -> 0
    assert p.compose(q) == Permutation([0, 2, 1])
    assert p * q == p.compose(q)
    assert q.compose(p) == Permutation([2, 1, 0])

    assert p.inverse() == Permutation([1, 2, 0])
    assert p.compose(p.inverse()).is_identity()
    assert p.power(3).is_identity()
    assert p.power(-1) == p.inverse()
    assert p.power(0) == Permutation.identity(3)

    assert p.get_cycles() == [(0, 2, 1)]
    assert p.get_order() == 3
    assert q.get_order() == 2
    assert Permutation([1, 0, 3, 4, 2]).get_order() == 6

    assert p.apply_block([0, 1]) == (0, 2)


def test_permutation_errors():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])
    with pytest.raises(ValueError):
        Permutation([1, 2])
    with pytest.raises(ValueError):
        Permutation([1, 0]).compose(Permutation([0, 1, 2]))


def test_group_generate():
    G = _get_s3()
    assert G.order == 6
    assert len(G) == 6
    assert G.is_group()
    assert G.get_identity() in G
    assert G.elements == tuple(sorted(G.elements))
    assert repr(G) == 'PermutationGroup(degree=3, order=6)'

    regen = PermutationGroup.generate(3, G.generators)
    assert regen == G
    assert hash(regen) == hash(G)


def test_group_chosen_generators():
    G = _get_s3()
    H = PermutationGroup(3, list(G))
    gens = H.generators
    assert 1 <= len(gens) <= 2
    assert PermutationGroup.generate(3, gens) == G

    data = H.to_dict()
    assert data['degree'] == 3
    assert data['order'] == 6
    assert len(data['generators']) == len(gens)


def test_group_budget():
    with pytest.raises(BudgetExceeded) as e:
        PermutationGroup.generate(
            3, [Permutation([1, 0, 2]), Permutation([1, 2, 0])], budget=4,
        )
    assert e.value.budget == 4


def test_group_not_a_group():
    G = PermutationGroup(3, [Permutation.identity(3), Permutation([1, 2, 0])])
    assert not G.is_group()

    G = PermutationGroup(3, [Permutation([1, 0, 2])])
    assert not G.is_group()

    with pytest.raises(ValueError):
        PermutationGroup(2, [Permutation.identity(3)])


def test_group_subgroup():
    G = _get_s3()
    C3 = PermutationGroup.generate(3, [Permutation([1, 2, 0])])
    assert C3.order == 3
    assert C3.is_subgroup_of(G)
    assert not G.is_subgroup_of(C3)


def test_orbit_stabilizer():
    G = _get_s3()
    assert orbit(G, [0]) == [(0,), (1,), (2,)]
    assert stabilizer_order(G, [0]) == 2
    assert orbit(G, [1, 0]) == [(0, 1), (0, 2), (1, 2)]
    assert stabilizer_order(G, [0, 1]) == 2

    for block in ([0], [0, 1], [0, 1, 2]):
        assert len(orbit(G, block)) * stabilizer_order(G, block) == G.order


def _sign(g):
    inversions = sum(
        1
        for i in range(g.degree)
        for j in range(i + 1, g.degree)
        if g(i) > g(j)
    )
    return inversions % 2


def test_is_homomorphism():
    G = _get_s3()
    Z2 = PermutationGroup.generate(2, [Permutation([1, 0])])
    swap = Permutation([1, 0])
    ident = Permutation.identity(2)

    sign = {g: swap if _sign(g) else ident for g in G}
    assert is_homomorphism(sign, G)
    assert is_homomorphism(sign, G, H=Z2)
    assert is_homomorphism(sign, G, exhaustive=False)
    assert not is_injective(sign)

    constant = {g: swap for g in G}
    assert not is_homomorphism(constant, G)
    assert not is_homomorphism(constant, G, exhaustive=False)

    ident_map = {g: g for g in G}
    assert is_homomorphism(ident_map, G)
    assert is_injective(ident_map)
    assert not is_homomorphism(ident_map, G, H=Z2)


def test_is_homomorphism_not_total():
    G = _get_s3()
    mapping = {G.get_identity(): G.get_identity()}
    with pytest.raises(MapNotTotalError):
        is_homomorphism(mapping, G)
