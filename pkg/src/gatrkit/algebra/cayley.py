"""Blade bases and Cayley tables for geometric algebras with metric signs in {0, 1}.

Blades are subsets of basis vectors, ordered by (grade, lexicographic index
tuple); the ascending-index orientation carries the + sign. For the
projective algebra over (e0, e1, e2, e3) this yields the basis order

    [1, e0, e1, e2, e3, e01, e02, e03, e12, e13, e23,
     e012, e013, e023, e123, e0123]

All tables are exact: signs live in {-1, 0, +1} and are constructed in
integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

import numpy as np


def _blade_basis(n):
    blades = [()]
    for k in range(1, n + 1):
        blades.extend(combinations(range(n), k))
    return tuple(blades)


def _mul_blades(a, b, metric):
    """Product of two basis blades -> (result blade tuple, sign in {-1,0,1})."""
    factors = list(a) + list(b)
    sign = 1
    # insertion sort; every adjacent transposition of distinct vectors flips the sign
    for i in range(1, len(factors)):
        j = i
        while j > 0 and factors[j - 1] > factors[j]:
            factors[j - 1], factors[j] = factors[j], factors[j - 1]
            sign = -sign
            j -= 1
    out = []
    i = 0
    while i < len(factors):
        if i + 1 < len(factors) and factors[i] == factors[i + 1]:
            sign *= metric[factors[i]]
            i += 2
        else:
            out.append(factors[i])
            i += 1
    return tuple(out), sign


@dataclass(frozen=True)
class BilinearTable:
    """Functional blade table: pair (i, j) -> blade ``index[i,j]`` with ``sign[i,j]``."""

    name: str
    index: np.ndarray  # [dim, dim] int64
    sign: np.ndarray   # [dim, dim] int8

    @property
    def dim(self) -> int:
        return self.index.shape[0]

    @cached_property
    def dense(self) -> np.ndarray:
        """Dense [dim, dim, dim] tensor C with C[i, j, index[i,j]] = sign[i,j]."""
        d = self.dim
        c = np.zeros((d, d, d), dtype=np.float64)
        ii, jj = np.nonzero(self.sign)
        c[ii, jj, self.index[ii, jj]] = self.sign[ii, jj]
        return c

    @cached_property
    def _triplets(self):
        ii, jj = np.nonzero(self.sign)
        kk = self.index[ii, jj]
        ss = self.sign[ii, jj].astype(np.float64)
        return (ii.astype(np.intc), jj.astype(np.intc), kk.astype(np.intc), ss)

    @property
    def nz_i(self):
        return self._triplets[0]

    @property
    def nz_j(self):
        return self._triplets[1]

    @property
    def nz_k(self):
        return self._triplets[2]

    @property
    def nz_s(self):
        return self._triplets[3]

    def _rebuild(self, name, rows, cols, outs, signs):
        d = self.dim
        index = np.zeros((d, d), dtype=np.int64)
        sign = np.zeros((d, d), dtype=np.int8)
        for r, c, o, s in zip(rows, cols, outs, signs):
            if sign[r, c] != 0:
                raise ValueError(f"{name}: transposed table is not functional")
            index[r, c] = o
            sign[r, c] = s
        return BilinearTable(name, index, sign)

    @cached_property
    def transpose_left(self) -> "BilinearTable":
        """Table T with bilinear(g, y, T) = d/dx of bilinear(x, y, self) applied to g."""
        ii, jj, kk, ss = self._triplets
        return self._rebuild(self.name + "_Tx", kk, jj, ii, ss)

    @cached_property
    def transpose_right(self) -> "BilinearTable":
        """Table T with bilinear(g, x, T) = d/dy of bilinear(x, y, self) applied to g."""
        ii, jj, kk, ss = self._triplets
        return self._rebuild(self.name + "_Ty", kk, ii, jj, ss)


class Algebra:
    """Structural data for the geometric algebra with the given diagonal metric."""

    def __init__(self, metric, name="ga"):
        self.name = name
        self.metric = tuple(int(m) for m in metric)
        if any(m not in (0, 1) for m in self.metric):
            raise ValueError("metric entries must be 0 or 1")
        self.n = len(self.metric)
        self.dim = 1 << self.n
        self.blades = _blade_basis(self.n)
        self.blade_index = {b: i for i, b in enumerate(self.blades)}
        self.grades = np.array([len(b) for b in self.blades], dtype=np.int64)
        k = self.grades
        self.reverse_signs = np.where(k * (k - 1) // 2 % 2 == 0, 1.0, -1.0)
        self.involution_signs = np.where(k % 2 == 0, 1.0, -1.0)

        degenerate = {i for i, m in enumerate(self.metric) if m == 0}
        self.null_mask = np.array(
            [bool(degenerate & set(b)) for b in self.blades], dtype=bool
        )
        # the invariant scalar product <x~ y>_0 reduces to a masked dot product
        self.inner_weights = (~self.null_mask).astype(np.float64)

        self.geometric = self._build_table("geometric", self.metric)
        self.wedge = self._build_table("wedge", (0,) * self.n)
        self.dual_index, self.dual_sign = self._build_dual()
        self.dual_inv_index = np.empty(self.dim, dtype=np.int64)
        self.dual_inv_sign = np.empty(self.dim, dtype=np.float64)
        self.dual_inv_index[self.dual_index] = np.arange(self.dim)
        self.dual_inv_sign[self.dual_index] = self.dual_sign
        self.join = self._build_join()
        self.left_contraction = self._build_left_contraction()

        self.grade_indices = tuple(
            np.nonzero(self.grades == g)[0] for g in range(self.n + 1)
        )

    def _build_table(self, name, metric):
        index = np.zeros((self.dim, self.dim), dtype=np.int64)
        sign = np.zeros((self.dim, self.dim), dtype=np.int8)
        for i, a in enumerate(self.blades):
            for j, b in enumerate(self.blades):
                blade, s = _mul_blades(a, b, metric)
                if s != 0:
                    index[i, j] = self.blade_index[blade]
                    sign[i, j] = s
        return BilinearTable(name, index, sign)

    def _build_dual(self):
        """Right complement: blade b -> signed blade c with b wedge c = +pseudoscalar."""
        full = set(range(self.n))
        index = np.zeros(self.dim, dtype=np.int64)
        sign = np.zeros(self.dim, dtype=np.float64)
        for i, b in enumerate(self.blades):
            comp = tuple(sorted(full - set(b)))
            _, s = _mul_blades(b, comp, (1,) * self.n)  # pure permutation parity
            index[i] = self.blade_index[comp]
            sign[i] = s
        return index, sign

    def _build_join(self):
        """join(x, y) = dual_inverse(dual(x) wedge dual(y)), tabulated per blade pair."""
        index = np.zeros((self.dim, self.dim), dtype=np.int64)
        sign = np.zeros((self.dim, self.dim), dtype=np.int8)
        for i in range(self.dim):
            di, si = self.dual_index[i], self.dual_sign[i]
            for j in range(self.dim):
                dj, sj = self.dual_index[j], self.dual_sign[j]
                w = self.wedge.sign[di, dj]
                if w == 0:
                    continue
                m = self.wedge.index[di, dj]
                index[i, j] = self.dual_inv_index[m]
                sign[i, j] = int(si * sj * w * self.dual_inv_sign[m])
        return BilinearTable("join", index, sign)

    def _build_left_contraction(self):
        """a ⌟ b = <a b>_{grade(b) - grade(a)}, tabulated per blade pair."""
        keep = self.grades[self.geometric.index] == (self.grades[None, :] - self.grades[:, None])
        sign = np.where(keep, self.geometric.sign, 0).astype(np.int8)
        index = np.where(sign != 0, self.geometric.index, 0)
        return BilinearTable("left_contraction", index, sign)

    def blade_mv(self, blade, coeff=1.0):
        """Multivector array with a single blade component set."""
        out = np.zeros(self.dim)
        out[self.blade_index[tuple(blade)]] = coeff
        return out


PGA = Algebra((0, 1, 1, 1), name="pga3")
EUCLIDEAN3 = Algebra((1, 1, 1), name="euclidean3")
