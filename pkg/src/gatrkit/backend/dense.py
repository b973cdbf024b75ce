"""Pure-NumPy fallback for the blade-table bilinear product."""

import numpy as np


def bilinear(x, y, table):
    # out[..., k] = sum_ij C[i, j, k] * x[..., i] * y[..., j]
    t = np.tensordot(x, table.dense, axes=([-1], [0]))
    return np.einsum("...jk,...j->...k", t, y)
