import itertools
import math
import numpy as np
import pytest

from ..simplicial import (
    SimplicialComplex,
    Classification,
    from_facets,
    classify,
    f_vector,
    dimension,
    euler_characteristic,
    is_connected,
    generate_cycle,
    generate_boundary_simplex,
    generate_path,
    generate_simplex,
    generate_star,
    generate_kite,
    generate_moebius,
    generate_moebius_strip6,
)
from ..mexceptions import ComplexError
from ._fixtures import get_triangle, get_path3


def _get_fixtures():
    return [
        get_triangle(),
        get_path3(),
        generate_cycle(4),
        generate_boundary_simplex(3),
        generate_simplex(3),
        generate_star(3),
        generate_kite(),
        generate_moebius(),
        generate_moebius_strip6(),
    ]


def test_simplicial_face_table():
    K = get_triangle()

    assert K.labels == ('a', 'b', 'c')
    assert K.faces == ((0,), (1,), (2,), (0, 1), (0, 2), (1, 2))
    assert K.facets == ((0, 1), (0, 2), (1, 2))
    assert K.dims.tolist() == [0, 0, 0, 1, 1, 1]
    assert K.nfaces == 6
    assert len(K) == 6

    assert K.get_face_id([2, 1]) == 5
    assert K.get_face_label(4) == 'ac'
    assert K.get_simplex(['c', 'a']) == (0, 2)
    assert K.has_face((1, 0))
    assert not K.has_face((0, 1, 2))

    with pytest.raises(ComplexError):
        K.get_face_id((0, 1, 2))
    with pytest.raises(ComplexError):
        K.get_vertex_id('z')


def test_simplicial_masks():
    K = get_triangle()
    assert K.masks.tolist() == [1, 2, 4, 3, 5, 6]


def test_simplicial_long_labels():
    K = generate_cycle(4)
    fid = K.get_face_id((0, 1))
    assert K.get_face_label(fid) == 'v0,v1'


def test_simplicial_label_mode_per_complex():
    K = from_facets([['a', 'b'], ['ab', 'c']])
    edge = K.get_face_id(K.get_simplex(['a', 'b']))
    vertex = K.get_face_id(K.get_simplex(['ab']))
    assert K.get_face_label(edge) == 'a,b'
    assert K.get_face_label(vertex) == 'ab'


@pytest.mark.parametrize('K', _get_fixtures())
def test_simplicial_downward_closed(K):
    faces = K.get_face_set()
    for simplex in K.faces:
        for size in range(1, len(simplex)):
            for sub in itertools.combinations(simplex, size):
                assert sub in faces


def test_simplicial_bad_input():
    # vertex 0 is in no face
    with pytest.raises(ComplexError):
        SimplicialComplex(['a', 'b'], [(0, 1), (1,)])

    with pytest.raises(ComplexError):
        SimplicialComplex(['a', 'a'], [(0,), (1,)])

    with pytest.raises(ComplexError):
        SimplicialComplex(['a'], [(0,), (0, 1)])

    with pytest.raises(ComplexError):
        SimplicialComplex(['a', 'b'], [(0,), (1,), (0, 0)])

    with pytest.raises(ComplexError):
        from_facets([])

    with pytest.raises(ComplexError):
        from_facets([['a', 'a']])

    with pytest.raises(ComplexError):
        from_facets([['a'], []])


def test_simplicial_from_facets_closure():
    K = from_facets([['a', 'b', 'c'], ['c', 'd']])
    assert K.labels == ('a', 'b', 'c', 'd')
    assert K.get_f_vector() == [4, 4, 1]
    assert K.facets == ((2, 3), (0, 1, 2))
    assert K.dimension == 2


@pytest.mark.parametrize('n', [3, 5, 8])
def test_generate_cycle(n):
    K = generate_cycle(n)
    assert K.nvert == n
    assert K.f_vector == [n, n]
    assert K.nfaces == 2*n
    assert K.is_connected()


@pytest.mark.parametrize('n', [2, 3, 4, 5])
def test_generate_boundary_simplex(n):
    K = generate_boundary_simplex(n)
    assert K.nfaces == 2**(n + 1) - 2
    assert K.dimension == n - 1
    for i, count in enumerate(K.get_f_vector()):
        assert count == math.comb(n + 1, i + 1)


def test_generators_small():
    K = generate_path(3)
    assert K.get_f_vector() == [3, 2]

    assert generate_path(2).nfaces == 3
    assert generate_simplex(2).nfaces == 7
    assert generate_star(3).get_f_vector() == [4, 3]
    assert generate_kite().get_f_vector() == [4, 4]
    assert generate_moebius().get_f_vector() == [5, 10, 5]
    assert generate_moebius_strip6().get_f_vector() == [6, 12, 6]


@pytest.mark.parametrize('func, n', [
    (generate_cycle, 2),
    (generate_boundary_simplex, 1),
    (generate_path, 1),
    (generate_simplex, 0),
    (generate_star, 0),
])
def test_generators_minimum(func, n):
    with pytest.raises(ComplexError):
        func(n)


def test_simplicial_queries():
    K = generate_cycle(4)
    assert is_connected(K)
    assert f_vector(K) == [4, 4]
    assert dimension(K) == 1

    assert dimension(generate_boundary_simplex(3)) == 2


@pytest.mark.parametrize('K, chi', [
    (generate_cycle(4), 0),
    (generate_boundary_simplex(3), 2),
    (generate_simplex(2), 1),
    (generate_moebius(), 0),
    (generate_moebius_strip6(), 0),
    (generate_path(4), 1),
])
def test_simplicial_euler_characteristic(K, chi):
    assert euler_characteristic(K) == chi


def test_simplicial_graph():
    K = generate_kite()
    graph = K.get_graph()
    assert graph.number_of_nodes() == 4
    assert graph.number_of_edges() == 4

    K = from_facets([['a', 'b'], ['c', 'd']])
    assert not K.is_connected()


def test_simplicial_equality_and_hash():
    K1 = generate_cycle(4)
    K2 = generate_cycle(4)
    assert K1 == K2
    assert hash(K1) == hash(K2)
    assert K1 != generate_cycle(5)
    assert 'f_vector=(4, 4)' in repr(K1)


@pytest.mark.parametrize('n', range(3, 13))
def test_classify_cycles(n):
    cls = classify(generate_cycle(n))
    if n == 3:
        assert cls == Classification.both(n_cycle=3, n_boundary=2)
        assert repr(cls) == 'Both(3, 2)'
    else:
        assert cls == Classification.cycle(n)
        assert repr(cls) == 'Cycle(%d)' % n
    assert cls.is_cycle
    assert cls.n_cycle == n


@pytest.mark.parametrize('n', [2, 3, 4, 5])
def test_classify_boundary(n):
    cls = classify(generate_boundary_simplex(n))
    assert cls.is_boundary
    assert cls.n_boundary == n
    if n > 2:
        assert cls == Classification.boundary(n)
        assert not cls.is_cycle


@pytest.mark.parametrize('K', [
    generate_path(3),
    generate_simplex(3),
    generate_star(3),
    generate_kite(),
    generate_moebius(),
])
def test_classify_other(K):
    cls = classify(K)
    assert cls == Classification.other()
    assert not cls.is_cycle
    assert not cls.is_boundary
    assert repr(cls) == 'Other'


def test_classify_disconnected():
    K = from_facets([['a', 'b'], ['c', 'd']])
    with pytest.raises(ComplexError):
        classify(K)


def test_classification_bad_tag():
    with pytest.raises(ValueError):
        Classification('torus')


def test_simplicial_map_simplex():
    K = get_path3()
    images = np.array([2, 1, 0])
    assert K.map_simplex(images, (0, 1)) == (1, 2)
