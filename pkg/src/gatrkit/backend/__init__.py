"""Kernel backend selection.

The hot kernel of the whole package is the blade-table bilinear product
(geometric product, wedge, join, and their transposes used by backprop).
A Cython extension implements it over the sparse table entries; if the
extension is unavailable, or ``GATRKIT_BACKEND=numpy`` is set, a dense
NumPy contraction is used instead. Both produce the same values up to
floating-point summation order.
"""

import os

import numpy as np

from . import dense as _dense

try:
    from . import _tables as _compiled
except ImportError:
    _compiled = None

_choice = os.environ.get("GATRKIT_BACKEND", "auto").lower()
if _choice not in ("auto", "compiled", "numpy"):
    raise RuntimeError(f"GATRKIT_BACKEND must be auto|compiled|numpy, got {_choice!r}")
if _choice == "compiled" and _compiled is None:
    raise RuntimeError("GATRKIT_BACKEND=compiled but the extension is not built")

_use_compiled = _compiled is not None and _choice in ("auto", "compiled")


def active_backend() -> str:
    """Name of the backend actually in use ('compiled' or 'numpy')."""
    return "compiled" if _use_compiled else "numpy"


def bilinear(x, y, table):
    """Blade-table bilinear product ``out_k = sum_{ij} s_{ijk} x_i y_j``.

    Parameters
    ----------
    x, y : arrays broadcastable against each other, last axis = table dim.
    table : BilinearTable (provides .dense and sparse triplets).

    Returns
    -------
    Array of the broadcast shape with the same last axis.
    """
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if not _use_compiled:
        return _dense.bilinear(x, y, table)
    shape = np.broadcast_shapes(x.shape, y.shape)
    d = shape[-1]
    x2 = np.ascontiguousarray(np.broadcast_to(x, shape)).reshape(-1, d)
    y2 = np.ascontiguousarray(np.broadcast_to(y, shape)).reshape(-1, d)
    out = np.zeros((x2.shape[0], d), dtype=np.float64)
    _compiled.table_bilinear(x2, y2, table.nz_i, table.nz_j, table.nz_k, table.nz_s, out)
    return out.reshape(shape)
