import pytest


@pytest.fixture(
    scope="module",
    params=[1, 2],
)
def nworkers(request):
    """
    number of threads used by the gradient field enumeration
    """
    return request.param
