"""Operations of the projective geometric algebra G(3,0,1).

All functions act on plain NumPy arrays whose last axis has length 16 and
broadcast over any leading axes. They are pure and thread-safe; the tables
they share are built once at import time.
"""

from __future__ import annotations

import numpy as np

from .. import backend
from .cayley import PGA, Algebra

SCALAR = 0
E0 = 1
E123 = PGA.blade_index[(1, 2, 3)]
PSS = PGA.blade_index[(0, 1, 2, 3)]

_GRADE_MASKS = np.stack(
    [(PGA.grades == g).astype(np.float64) for g in range(5)]
)


def geometric_product(x, y):
    """Geometric product, bilinear and associative."""
    return backend.bilinear(x, y, PGA.geometric)


def wedge(x, y):
    """Exterior (wedge) product."""
    return backend.bilinear(x, y, PGA.wedge)


def inner(x, y):
    """Invariant scalar product <x~ y>_0 of the degenerate metric.

    Only the 8 components free of e0 contribute; returns an array without
    the blade axis.
    """
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    return ((x * y) @ PGA.inner_weights)


def norm(x):
    """sqrt(inner(x, x)); zero exactly on ideal (e0-containing) content."""
    return np.sqrt(inner(x, x))


def reverse(x):
    """Reversal of vector factors; per-grade signs (+, +, -, -, +)."""
    return np.asarray(x, dtype=np.float64) * PGA.reverse_signs


def grade_involution(x):
    """Sign flip on odd grades; per-grade signs (+, -, +, -, +)."""
    return np.asarray(x, dtype=np.float64) * PGA.involution_signs


def grade_projection(x, k):
    """Zero all components whose grade differs from k."""
    if not 0 <= k <= 4:
        raise ValueError(f"grade must be in 0..4, got {k}")
    return np.asarray(x, dtype=np.float64) * _GRADE_MASKS[k]


def dual(x):
    """Right complement: per blade b the signed blade b* with b ^ b* = e0123."""
    x = np.asarray(x, dtype=np.float64)
    out = np.zeros_like(x)
    out[..., PGA.dual_index] = x * PGA.dual_sign
    return out


def dual_inverse(x):
    """Inverse of the right complement; dual_inverse(dual(x)) == x."""
    x = np.asarray(x, dtype=np.float64)
    out = np.zeros_like(x)
    out[..., PGA.dual_inv_index] = x * PGA.dual_inv_sign
    return out


def join(x, y):
    """join(x, y) = dual_inverse(dual(x) ^ dual(y))."""
    return backend.bilinear(x, y, PGA.join)


def equi_join(x, y, ref):
    """Join scaled by the e0123 coefficient of the reference multivector.

    The scaling restores equivariance under odd (mirror) transformations
    when the reference is derived from the transformed data.
    """
    ref = np.asarray(ref, dtype=np.float64)
    return ref[..., PSS, None] * join(x, y)


def left_contraction(x, y):
    """Left contraction x ⌟ y, summed over the grade parts of both inputs."""
    return backend.bilinear(x, y, PGA.left_contraction)


def versor_inverse(u, tol=1e-12):
    """Inverse of a versor: reverse(u) / <u u~>_0.

    Raises ValueError when the scalar square norm vanishes (non-invertible).
    """
    u = np.asarray(u, dtype=np.float64)
    s = inner(u, u)
    if np.any(np.abs(s) < tol):
        raise ValueError("versor is not invertible: <u u~>_0 is ~0")
    return reverse(u) / s[..., None]


def sandwich(u_mv, odd, x):
    """Sandwich action: u x u^-1 for even versors, u x^ u^-1 for odd ones."""
    u_inv = versor_inverse(u_mv)
    xx = grade_involution(x) if odd else np.asarray(x, dtype=np.float64)
    return geometric_product(geometric_product(u_mv, xx), u_inv)


def sandwich_matrix(u_mv, odd):
    """16x16 matrix M of the sandwich action, M @ coeffs == sandwich(u, x)."""
    return sandwich(u_mv, odd, np.eye(16)).T


def euclidean_join(x, y, algebra: Algebra = PGA):
    """Join of the Euclidean (e0-free) subalgebra, computed inside G(3,0,1).

    Defined as ((x I3~) ^ (y I3~)) I3 with I3 = e123; used by the
    decomposition cross-check of the projective join.
    """
    i3 = algebra.blade_mv((1, 2, 3))
    i3_rev = i3 * algebra.reverse_signs[algebra.blade_index[(1, 2, 3)]]
    xa = backend.bilinear(x, i3_rev, algebra.geometric)
    ya = backend.bilinear(y, i3_rev, algebra.geometric)
    return backend.bilinear(
        backend.bilinear(xa, ya, algebra.wedge), i3, algebra.geometric
    )


def ideal_split(x):
    """Split x = t + e0 p into the Euclidean part t and the e0-cofactor p.

    Both returned arrays are Euclidean (supported on e0-free blades); the
    identity e0 p = ideal part of x holds exactly in this basis.
    """
    x = np.asarray(x, dtype=np.float64)
    t = x * PGA.inner_weights
    p = np.zeros_like(x)
    # prepending e0 to an ascending e0-free blade never flips orientation,
    # so the cofactor is a plain component move
    src = np.nonzero(PGA.null_mask)[0]
    dst = np.array([PGA.blade_index[tuple(b for b in PGA.blades[i] if b != 0)] for i in src])
    p[..., dst] = x[..., src]
    return t, p
