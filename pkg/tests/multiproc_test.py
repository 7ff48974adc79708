import math
from functools import partial

from plankcert.coverage import check_coverage
from plankcert.geom import make_regular
from plankcert.share.multiproc_utils import batch_map


def _square(x):
    return x * x


def test_serial_order():
    assert batch_map(_square, range(50), chunk_size=7) == [x * x for x in range(50)]


def test_pool_order():
    results = batch_map(_square, range(50), n_cores=2, chunk_size=3)
    assert results == [x * x for x in range(50)]


def test_empty():
    assert batch_map(_square, [], n_cores=2) == []


def test_partial_is_picklable():
    results = batch_map(partial(math.pow, 2.0), [0, 1, 2, 3], n_cores=2, chunk_size=1)
    assert results == [1.0, 2.0, 4.0, 8.0]


def test_coverage_parity(config):
    eps = config.epsilon
    domains = [
        make_regular(config, 0.0, 1, eps),
        make_regular(config, math.pi + 0.01, 1, eps),
    ]
    serial = check_coverage(config, domains, radial_steps=64)
    pooled = check_coverage(config, domains, radial_steps=64, n_cores=2)
    assert serial == pooled
    assert not serial.covered
