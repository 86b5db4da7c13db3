"""
Reading and writing complexes and discrete vector fields

facet text
    one facet per line as whitespace separated vertex labels; text after #
    is a comment and blank lines are ignored
json
    an object with vertices (label array), facets (array of label arrays)
    and f_vector
field text
    one field per line as whitespace separated face>coface tokens written
    with simplex labels, e.g. "a>ab b>bc"
"""
__all__ = [
    'parse_facets',
    'read_facets',
    'write_facets',
    'complex_to_dict',
    'complex_from_dict',
    'read_json',
    'write_json',
    'parse_fields',
    'read_fields',
    'write_fields',
]
import itertools
import json
import logging

from .simplicial import SimplicialComplex, from_facets
from .morse import make_dvf
from .mexceptions import ComplexError, FacetParseError

logger = logging.getLogger(__name__)

# characters used by simplex, primitive and field labels
RESERVED_CHARS = '>|,'


def _iter_lines(text):
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split('#', 1)[0].strip()
        if line:
            yield lineno, line


def parse_facets(text):
    """
    parse a facet text into a complex

    Parameters
    ----------
    text: str

    Returns
    -------
    SimplicialComplex

    Raises
    ------
    FacetParseError for a malformed line, with its line number
    """
    facets = []
    for lineno, line in _iter_lines(text):
        labels = line.split()
        for label in labels:
            if any(c in label for c in RESERVED_CHARS):
                raise FacetParseError(
                    "line %d: label %r contains one of %r"
                    % (lineno, label, RESERVED_CHARS),
                    lineno=lineno,
                )
        if len(set(labels)) != len(labels):
            raise FacetParseError(
                "line %d: duplicate vertex in facet" % lineno, lineno=lineno,
            )
        facets.append(labels)

    if len(facets) == 0:
        raise FacetParseError("no facets found")

    K = from_facets(facets)
    logger.debug('read complex %r', K)
    return K


def read_facets(stream):
    """
    read a facet text from an open file
    """
    return parse_facets(stream.read())


def write_facets(K, stream):
    """
    write the facets of K, one per line, in face table order
    """
    for facet in K.facets:
        stream.write(' '.join(K.labels[v] for v in facet) + '\n')


def complex_to_dict(K):
    return {
        'vertices': list(K.labels),
        'facets': [[K.labels[v] for v in facet] for facet in K.facets],
        'f_vector': K.get_f_vector(),
    }


def complex_from_dict(data):
    """
    build a complex from a dict as made by complex_to_dict; vertex ids follow
    the order of the vertices entry
    """
    try:
        labels = [str(label) for label in data['vertices']]
        facet_lists = data['facets']
    except (KeyError, TypeError) as err:
        raise ComplexError("bad complex data: %s" % err)

    index = {label: i for i, label in enumerate(labels)}
    faces = set()
    for facet in facet_lists:
        try:
            ids = sorted(index[str(label)] for label in facet)
        except KeyError as err:
            raise ComplexError("facet uses unknown vertex %s" % err)
        if len(ids) == 0 or len(set(ids)) != len(ids):
            raise ComplexError("bad facet %s" % (facet,))
        for size in range(1, len(ids) + 1):
            faces.update(itertools.combinations(ids, size))

    return SimplicialComplex(labels, faces, check=True)


def read_json(stream):
    try:
        data = json.load(stream)
    except ValueError as err:
        raise ComplexError("bad json: %s" % err)
    return complex_from_dict(data)


def write_json(K, stream, extra=None):
    """
    write K as json

    Parameters
    ----------
    K: SimplicialComplex
    stream: open file
    extra: dict, optional
        Additional entries for the object
    """
    data = complex_to_dict(K)
    if extra is not None:
        data.update(extra)
    json.dump(data, stream, indent=2)
    stream.write('\n')


def _face_index(K):
    index = {}
    for fid in range(K.nfaces):
        label = K.get_face_label(fid)
        if label in index:
            raise ComplexError(
                "simplex label %r is ambiguous in this complex" % label
            )
        index[label] = fid
    return index


def parse_fields(text, K):
    """
    parse a field text

    Parameters
    ----------
    text: str
    K: SimplicialComplex
        The complex the fields live in

    Returns
    -------
    list of DiscreteVectorField

    Raises
    ------
    FacetParseError for a malformed token or a pair that is not primitive
    MatchingError for a line that is not a matching
    """
    index = _face_index(K)
    fields = []
    for lineno, line in _iter_lines(text):
        pairs = []
        for token in line.split():
            parts = token.split('>')
            if len(parts) != 2:
                raise FacetParseError(
                    "line %d: bad pair %r" % (lineno, token), lineno=lineno,
                )
            try:
                pair = (index[parts[0]], index[parts[1]])
            except KeyError as err:
                raise FacetParseError(
                    "line %d: unknown simplex %s" % (lineno, err),
                    lineno=lineno,
                )
            pairs.append(pair)

        try:
            fields.append(make_dvf(pairs, K))
        except ComplexError as err:
            raise FacetParseError(
                "line %d: %s" % (lineno, err.value), lineno=lineno,
            )

    return fields


def read_fields(stream, K):
    return parse_fields(stream.read(), K)


def write_fields(fields, stream):
    for V in fields:
        stream.write(' '.join(V.get_tokens()) + '\n')
