import io
import json
import pytest

from ..facetio import (
    parse_facets,
    read_facets,
    write_facets,
    complex_to_dict,
    complex_from_dict,
    read_json,
    write_json,
    parse_fields,
    read_fields,
    write_fields,
)
from ..morse import make_dvf
from ..simplicial import (
    SimplicialComplex,
    generate_cycle,
    generate_boundary_simplex,
    generate_kite,
    generate_moebius,
)
from ..mexceptions import ComplexError, FacetParseError, MatchingError
from ._fixtures import get_triangle


def test_parse_facets():
    text = """
    # a triangle with a tail
    a b c
    c d   # pendant edge

    """
    K = parse_facets(text)
    assert K.labels == ('a', 'b', 'c', 'd')
    assert K.get_f_vector() == [4, 4, 1]


def test_read_write_facets():
    K = generate_cycle(4)
    stream = io.StringIO()
    write_facets(K, stream)
    assert stream.getvalue() == 'v0 v1\nv0 v3\nv1 v2\nv2 v3\n'

    stream.seek(0)
    assert read_facets(stream).get_face_set() == K.get_face_set()


@pytest.mark.parametrize('text, lineno', [
    ('a b\nb>c\n', 2),
    ('a|b c\n', 1),
    ('a b\n\nx,y z\n', 3),
    ('a b a\n', 1),
])
def test_parse_facets_errors(text, lineno):
    with pytest.raises(FacetParseError) as e:
        parse_facets(text)
    assert e.value.lineno == lineno


def test_parse_facets_empty():
    with pytest.raises(FacetParseError):
        parse_facets('# nothing here\n\n')


@pytest.mark.parametrize('K', [
    get_triangle(),
    generate_cycle(5),
    generate_boundary_simplex(3),
    generate_kite(),
    generate_moebius(),
])
def test_json_reingest(K):
    stream = io.StringIO()
    write_json(K, stream)

    stream.seek(0)
    data = json.load(stream)
    assert data['vertices'] == list(K.labels)
    assert data['f_vector'] == K.get_f_vector()

    stream.seek(0)
    Kread = read_json(stream)
    assert Kread == K


def test_json_extra():
    K = get_triangle()
    stream = io.StringIO()
    write_json(K, stream, extra={'partial': False})
    data = json.loads(stream.getvalue())
    assert data['partial'] is False
    assert data['facets'] == [['a', 'b'], ['a', 'c'], ['b', 'c']]


def test_complex_from_dict_errors():
    with pytest.raises(ComplexError):
        complex_from_dict({'facets': [['a']]})

    with pytest.raises(ComplexError):
        complex_from_dict({'vertices': ['a'], 'facets': [['a', 'b']]})

    with pytest.raises(ComplexError):
        complex_from_dict({'vertices': ['a', 'b'], 'facets': [[]]})

    # vertex b is in no facet
    with pytest.raises(ComplexError):
        complex_from_dict({'vertices': ['a', 'b'], 'facets': [['a']]})

    with pytest.raises(ComplexError):
        read_json(io.StringIO('{not json'))


def test_complex_to_dict_vertex_order():
    data = {'vertices': ['c', 'a', 'b'], 'facets': [['a', 'b'], ['b', 'c']]}
    K = complex_from_dict(data)
    assert K.labels == ('c', 'a', 'b')
    assert complex_to_dict(K)['vertices'] == ['c', 'a', 'b']


def test_parse_fields():
    K = get_triangle()
    text = """
    # two fields
    b>bc a>ab
    c>ac
    """
    fields = parse_fields(text, K)
    assert len(fields) == 2
    assert fields[0].get_tokens() == ['a>ab', 'b>bc']
    assert fields[1].get_tokens() == ['c>ac']

    stream = io.StringIO()
    write_fields(fields, stream)
    assert stream.getvalue() == 'a>ab b>bc\nc>ac\n'

    stream.seek(0)
    assert read_fields(stream, K) == fields


@pytest.mark.parametrize('text, lineno', [
    ('a>ab\na-ab\n', 2),
    ('a>ad\n', 1),
    ('a>ab>b\n', 1),
    # a is not a face of bc
    ('\na>bc\n', 2),
])
def test_parse_fields_errors(text, lineno):
    K = get_triangle()
    with pytest.raises(FacetParseError) as e:
        parse_fields(text, K)
    assert e.value.lineno == lineno


def test_parse_fields_matching():
    K = get_triangle()
    with pytest.raises(MatchingError) as e:
        parse_fields('a>ab a>ac\n', K)
    assert e.value.simplex == 'a'


def test_fields_mixed_label_lengths():
    # the edge {a, b} and the vertex ab must keep distinct labels
    K = parse_facets('a b\nab c\n')
    labels = [K.get_face_label(fid) for fid in range(K.nfaces)]
    assert len(set(labels)) == K.nfaces
    assert 'a,b' in labels

    face = K.get_face_id(K.get_simplex(['ab']))
    coface = K.get_face_id(K.get_simplex(['ab', 'c']))
    V = make_dvf([(face, coface)], K)

    stream = io.StringIO()
    write_fields([V], stream)
    assert stream.getvalue() == 'ab>ab,c\n'
    assert parse_fields(stream.getvalue(), K) == [V]


def test_parse_fields_ambiguous_labels():
    K = SimplicialComplex(['a', 'b', 'a,b'], [(0,), (1,), (2,), (0, 1)])
    with pytest.raises(ComplexError):
        parse_fields('a>a,b\n', K)
