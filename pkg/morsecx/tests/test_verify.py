import io
import json
import math
import pytest

from ..theorem import verify_main_theorem, VerificationReport
from ..theorem.verify import EXTERNAL_BASIS
from ..simplicial import (
    Classification,
    generate_cycle,
    generate_boundary_simplex,
    generate_path,
    generate_simplex,
    generate_star,
    generate_kite,
    generate_moebius,
    from_facets,
)
from .. import flags
from ..mexceptions import ComplexError
from ._fixtures import get_triangle, get_path3


def _get_check(report, name):
    for check in report['checks']:
        if check['name'] == name:
            return check
    raise KeyError(name)


def _check_names(report):
    return [check['name'] for check in report['checks']]


def test_verify_triangle(nworkers):
    report = verify_main_theorem(get_triangle(), nworkers=nworkers)

    assert isinstance(report, VerificationReport)
    assert report['overall'], report.get_failed()
    assert report['classification'] == 'Both(3, 2)'
    assert report['orders'] == {'complex': 6, 'hasse': 12, 'morse': 12}
    assert not report['via_hasse']
    assert not report['partial']
    assert report['basis'] is None
    assert report['flags'] == 0
    assert report['flagstr'] == ''

    names = _check_names(report)
    assert 'cycle-hasse-isomorphism' in names
    assert 'cycle-odd-product-order' in names
    assert 'ghost-coset-cover' in names
    assert 'both-orders-agree' in names

    check = _get_check(report, 'both-orders-agree')
    assert check['expected'] == 12
    assert check['actual'] == 12
    assert 'elapsed_ms' not in check


def test_verify_path3():
    report = verify_main_theorem(get_path3())
    assert report['overall'], report.get_failed()
    assert report['classification'] == 'Other'
    assert report['orders'] == {'complex': 2, 'hasse': 2, 'morse': 2}
    assert report['basis'] == EXTERNAL_BASIS

    check = _get_check(report, EXTERNAL_BASIS + ':phi-onto')
    assert check['pass']


def test_verify_boundary3():
    report = verify_main_theorem(generate_boundary_simplex(3))
    assert report['overall'], report.get_failed()
    assert report['classification'] == repr(Classification.boundary(3))
    assert report['orders'] == {'complex': 24, 'hasse': 48, 'morse': 48}

    check = _get_check(report, 'boundary-morse-order')
    assert check['expected'] == 2 * math.factorial(4)

    check = _get_check(report, 'boundary-layer-degrees')
    assert check['actual'] == [3, 4, 3]

    check = _get_check(report, 'boundary-h0-orbit')
    assert check['actual'] == 2

    check = _get_check(report, 'boundary-h0-stabilizer')
    assert check['actual'] == 24


def test_verify_boundary4_via_hasse():
    report = verify_main_theorem(generate_boundary_simplex(4), via_hasse=True)

    assert report['overall'], report.get_failed()
    assert report['via_hasse']
    assert report['partial']
    assert report['orders'] == {'complex': 120, 'hasse': 240, 'morse': 240}

    check = _get_check(report, 'boundary-morse-order')
    assert check['flags'] == flags.NO_ATTEMPT
    assert check['pass']

    check = _get_check(report, 'ghost-product-bijective')
    assert check['pass']
    assert check['actual'] == 240


@pytest.mark.parametrize('n', [4, 5, 6])
def test_verify_cycles(n):
    report = verify_main_theorem(generate_cycle(n))
    assert report['overall'], report.get_failed()
    assert report['classification'] == 'Cycle(%d)' % n
    assert report['orders'] == {
        'complex': 2 * n, 'hasse': 4 * n, 'morse': 4 * n,
    }

    names = _check_names(report)
    assert ('cycle-odd-product-order' in names) == (n % 2 == 1)
    assert not any(name.startswith('boundary-') for name in names)


@pytest.mark.parametrize('K', [
    generate_path(4),
    generate_star(3),
    generate_kite(),
])
def test_verify_other(K):
    report = verify_main_theorem(K)
    assert report['overall'], report.get_failed()
    orders = report['orders']
    assert orders['complex'] == orders['hasse'] == orders['morse']


@pytest.mark.parametrize('K', [
    generate_path(5),
    generate_simplex(3),
    generate_moebius(),
])
def test_verify_other_hasse_order(K):
    report = verify_main_theorem(K, via_hasse=True)
    check = _get_check(report, EXTERNAL_BASIS + ':hasse-order')
    assert check['pass']
    assert report['orders']['complex'] == report['orders']['hasse']


def test_verify_gvf_budget():
    # M does not fit, Aut(M) comes from the Hasse diagram instead
    report = verify_main_theorem(get_triangle(), budget=3)

    assert report['via_hasse']
    assert report['partial']
    assert report['overall'], report.get_failed()
    assert not report.budget_exceeded()
    assert report['orders']['morse'] == 12

    check = _get_check(report, 'ghost-preserves-faces')
    assert check['flags'] == flags.NO_ATTEMPT


def test_verify_group_budget():
    report = verify_main_theorem(get_triangle(), group_budget=1)

    assert not report['overall']
    assert report.budget_exceeded()
    assert report['flags'] & flags.BUDGET_EXCEEDED != 0
    assert 'budget exceeded' in report['flagstr']
    assert report['orders']['complex'] is None

    for check in report.get_failed():
        assert check['flags'] & flags.BUDGET_EXCEEDED


def test_verify_timings_and_oracle():
    report = verify_main_theorem(
        generate_cycle(4), timings=True, oracle_sweep=50, seed=31415,
    )
    assert report['overall'], report.get_failed()
    for check in report['checks']:
        assert check['elapsed_ms'] >= 0

    check = _get_check(report, 'oracle-sweep')
    assert check['expected'] == 50
    assert check['actual'] == 50


def test_verify_disconnected():
    K = from_facets([['a', 'b'], ['c', 'd']])
    with pytest.raises(ComplexError):
        verify_main_theorem(K)


def test_report_output():
    report = verify_main_theorem(get_path3())

    data = json.loads(report.to_json())
    assert data['overall'] is True
    assert data['orders']['morse'] == 2
    assert len(data['checks']) == len(report['checks'])

    stream = io.StringIO()
    report.write_table(stream=stream)
    lines = stream.getvalue().splitlines()
    assert lines[0] == 'classification: Other'
    assert lines[1] == 'orders (complex, hasse, morse): (2, 2, 2)'
    assert lines[2] == 'basis: ' + EXTERNAL_BASIS
    assert lines[3].split() == ['check', 'expected', 'actual', 'pass', 'flags']
    assert lines[-1] == 'overall: pass'
