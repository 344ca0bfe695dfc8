import os
import subprocess
import sys

import numpy as np
import pytest

from reflfields import _kernels as K
from reflfields.numtheory import enumerate_fundamental_discriminants, kronecker_symbol

DS = [fd.d for fd in enumerate_fundamental_discriminants(100_000)[::311]]

needs_numba = pytest.mark.skipif(not K.USE_NUMBA, reason="numba backend not active")


def test_numpy_table_matches_scalar():
    for d in DS[:40]:
        want = [kronecker_symbol(d, n) for n in range(-d)]
        assert K.kronecker_table_np(d).tolist() == want


def test_numpy_forms_match_counts():
    for d in DS[:40]:
        forms = K.reduced_forms_np(d)
        h, amb = K.form_counts_np(d)
        assert forms.shape == (h, 3)
        assert np.all(forms[:, 1] ** 2 - 4 * forms[:, 0] * forms[:, 2] == d)


@needs_numba
def test_backends_agree_on_tables():
    for d in DS:
        assert np.array_equal(K.kronecker_table_nb(d), K.kronecker_table_np(d))


@needs_numba
def test_backends_agree_on_forms():
    for d in DS:
        assert np.array_equal(K.reduced_forms_nb(d), K.reduced_forms_np(d))
        assert tuple(K.form_counts_nb(d)) == K.form_counts_np(d)


@needs_numba
def test_backends_agree_on_series():
    for d in DS[:20]:
        table = K.kronecker_table_np(d)
        n = 1000 * (int(np.sqrt(-d)) + 1)
        a = K.l_series_sum_nb(table, n)
        b = K.l_series_sum_np(table, n)
        # both are within n * eps of the exact partial sum
        assert abs(a - b) <= 2 * n * 2.0**-52


def test_env_flag_selects_numpy():
    env = dict(os.environ, REFLFIELDS_PURE_NUMPY="1")
    out = subprocess.run(
        [sys.executable, "-c", "import reflfields; print(reflfields.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "numpy"
