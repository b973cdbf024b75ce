"""Embedding dictionary between Euclidean data and G(3,0,1) multivectors.

Component conventions are fixed so that the sandwich action reproduces the
correct Euclidean maps on embedded points:

* ``embed_plane(n, d)`` (equal to its reflection versor) reflects across
  the plane {x : n.x = d},
* ``embed_translation(t)`` translates by t,
* ``embed_rotation(q)`` rotates by the unit quaternion q = (w, x, y, z)
  in the Hamilton convention,
* ``embed_point_reflection(p)`` reflects through p.

Odd versors may return a point embedding with weight -1; ``extract_point``
divides by the weight, so the recovered Euclidean point is unaffected.
"""

from __future__ import annotations

import numpy as np

from .cayley import PGA

_I = PGA.blade_index
SCALAR = 0
E0 = _I[(0,)]
E1, E2, E3 = _I[(1,)], _I[(2,)], _I[(3,)]
E01, E02, E03 = _I[(0, 1)], _I[(0, 2)], _I[(0, 3)]
E12, E13, E23 = _I[(1, 2)], _I[(1, 3)], _I[(2, 3)]
E012, E013, E023 = _I[(0, 1, 2)], _I[(0, 1, 3)], _I[(0, 2, 3)]
E123 = _I[(1, 2, 3)]
E0123 = _I[(0, 1, 2, 3)]

POINT_AT_INFINITY_TOL = 1e-9


def _new(shape_src):
    return np.zeros(shape_src.shape[:-1] + (16,), dtype=np.float64)


def embed_scalar(lam):
    """Scalar lambda -> lambda * 1."""
    lam = np.asarray(lam, dtype=np.float64)
    out = np.zeros(lam.shape + (16,))
    out[..., SCALAR] = lam
    return out


def embed_pseudoscalar(mu):
    """Pseudoscalar mu -> mu * e0123."""
    mu = np.asarray(mu, dtype=np.float64)
    out = np.zeros(mu.shape + (16,))
    out[..., E0123] = mu
    return out


def embed_plane(normal, d):
    """Plane {x : n.x = d} -> d e0 + n1 e1 + n2 e2 + n3 e3."""
    normal = np.asarray(normal, dtype=np.float64)
    if np.any(np.linalg.norm(normal, axis=-1) == 0):
        raise ValueError("plane normal must be nonzero")
    out = _new(normal)
    out[..., E0] = d
    out[..., [E1, E2, E3]] = normal
    return out


def embed_reflection(normal, d):
    """Reflection across the plane {x : n.x = d}; identical to embed_plane."""
    return embed_plane(normal, d)


def embed_line(direction, shift):
    """Line with direction n through the point s.

    Matches ``join(embed_point(s), embed_point(s + n))``: the Euclidean
    bivector part carries the direction, the ideal part the moment s x n.
    """
    n = np.asarray(direction, dtype=np.float64)
    s = np.asarray(shift, dtype=np.float64)
    out = _new(n)
    out[..., [E12, E13, E23]] = np.stack([-n[..., 2], n[..., 1], -n[..., 0]], axis=-1)
    out[..., [E01, E02, E03]] = np.cross(s, n)
    return out


def embed_point(p):
    """Point p -> e123 + p1 e023 - p2 e013 + p3 e012."""
    p = np.asarray(p, dtype=np.float64)
    out = _new(p)
    out[..., E123] = 1.0
    out[..., [E023, E013, E012]] = np.stack(
        [p[..., 0], -p[..., 1], p[..., 2]], axis=-1
    )
    return out


def embed_point_reflection(p):
    """Point reflection through p; the point trivector acts as an odd versor."""
    return embed_point(p)


def embed_translation(t):
    """Translation by t -> 1 + (t1 e01 + t2 e02 + t3 e03) / 2."""
    t = np.asarray(t, dtype=np.float64)
    out = _new(t)
    out[..., SCALAR] = 1.0
    out[..., [E01, E02, E03]] = t / 2.0
    return out


def embed_rotation(q):
    """Unit quaternion (w, x, y, z), Hamilton convention -> w - x e23 + y e13 - z e12."""
    q = np.asarray(q, dtype=np.float64)
    out = _new(q)
    out[..., SCALAR] = q[..., 0]
    out[..., E23] = -q[..., 1]
    out[..., E13] = q[..., 2]
    out[..., E12] = -q[..., 3]
    return out


def extract_point(mv, tol=POINT_AT_INFINITY_TOL):
    """Recover the Euclidean point: divide the ideal trivector components by e123.

    Raises ValueError when |e123| < tol (point at infinity).
    """
    mv = np.asarray(mv, dtype=np.float64)
    w = mv[..., E123]
    if np.any(np.abs(w) < tol):
        raise ValueError("point at infinity: |e123 component| below tolerance")
    p = np.stack([mv[..., E023], -mv[..., E013], mv[..., E012]], axis=-1)
    return p / w[..., None]
