import numpy as np
import pytest

from stjac import _accel
from stjac._accel import (
    _resolve_backend,
    affine_count_numpy,
    char_pair_histogram_numpy,
    dlog_table_numpy,
)
from stjac.primes import prime_range

numba_missing = not _accel._HAVE_NUMBA


def test_resolve_backend():
    assert _resolve_backend("auto", True) == "numba"
    assert _resolve_backend("auto", False) == "numpy"
    assert _resolve_backend("numpy", True) == "numpy"
    assert _resolve_backend("numba", True) == "numba"
    assert _resolve_backend("", False) == "numpy"
    with pytest.raises(ImportError):
        _resolve_backend("numba", False)
    with pytest.raises(ValueError):
        _resolve_backend("cuda", True)


def test_numpy_dlog_table_correct():
    for p, g in [(11, 2), (19, 2), (7, 3), (1009, 11)]:
        table = dlog_table_numpy(p, g)
        assert table[0] == -1
        for x in range(1, p):
            assert pow(g, int(table[x]), p) == x


def test_numpy_histogram_counts_all_pairs():
    table = dlog_table_numpy(11, 2)
    hist = char_pair_histogram_numpy(table, 1, 5, 10)
    assert hist.sum() == 9  # x runs over F_11 minus {0, 1}
    assert hist.min() >= 0


def test_numpy_affine_count_tiny():
    # y^2 = x^3 + 1 over F_5 has 5 affine points
    assert affine_count_numpy(5, 3, 1, False) == 5
    # y^2 = x^7 + x over F_7 has 7 affine points
    assert affine_count_numpy(7, 7, 1, True) == 7


@pytest.mark.skipif(numba_missing, reason="numba not importable")
def test_backends_agree():
    from stjac._accel import (
        affine_count_numba,
        char_pair_histogram_numba,
        dlog_table_numba,
    )

    for p, g in [(11, 2), (101, 2), (997, 7)]:
        a = dlog_table_numba(p, g)
        b = dlog_table_numpy(p, g)
        assert np.array_equal(a, b)
        n = p - 1
        for pair in [(1, n // 2), (3, 5), (0, 0)]:
            ha = char_pair_histogram_numba(a, pair[0], pair[1], n)
            hb = char_pair_histogram_numpy(b, pair[0], pair[1], n)
            assert np.array_equal(ha, hb)
    for p in prime_range(3, 60):
        for d, c, linear in [(6, 1, False), (9, 2, False), (7, 3, True)]:
            assert affine_count_numpy(p, d, c, linear) == int(
                affine_count_numba(p, d, c, linear)
            )


def test_dispatch_names_bound():
    assert _accel.BACKEND in ("numba", "numpy")
    table = _accel.dlog_table(13, 2)
    assert pow(2, int(table[5]), 13) == 5
    assert _accel.affine_count(5, 3, 1, False) == 5
