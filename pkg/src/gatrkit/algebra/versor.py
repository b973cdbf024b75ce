"""Versors (products of unit plane reflections) and their random generation."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import embed, ops


@dataclass(frozen=True)
class Versor:
    """A unit versor with its reflection parity.

    ``mv`` is a product of unit-norm grade-1 elements with <mv mv~>_0 = 1;
    ``odd`` records whether the number of reflections is odd, which selects
    the grade-involuted form of the sandwich action.
    """

    mv: np.ndarray
    odd: bool

    def __call__(self, x):
        """Apply the sandwich action to a multivector array [..., 16]."""
        return ops.sandwich(self.mv, self.odd, x)

    def inverse(self) -> "Versor":
        return Versor(ops.versor_inverse(self.mv), self.odd)

    def compose(self, other: "Versor") -> "Versor":
        """Versor acting as self after other (left-to-right sandwich order)."""
        return Versor(
            ops.geometric_product(self.mv, other.mv), self.odd ^ other.odd
        ).normalized()

    def normalized(self) -> "Versor":
        s = ops.inner(self.mv, self.mv)
        if s <= 0:
            raise ValueError("cannot normalize: <u u~>_0 is not positive")
        return Versor(self.mv / np.sqrt(s), self.odd)

    def matrix(self) -> np.ndarray:
        """16x16 matrix of the sandwich action on coefficient vectors."""
        return ops.sandwich_matrix(self.mv, self.odd)


def identity_versor() -> Versor:
    mv = np.zeros(16)
    mv[0] = 1.0
    return Versor(mv, odd=False)


def random_versor(rng, n_reflections, translation_scale=1.0) -> Versor:
    """Product of random unit plane reflections.

    Normals are uniform on the sphere; offsets are Normal(0, translation_scale).
    ``translation_scale=0`` gives planes through the origin (an O(3) action).
    """
    if n_reflections < 1:
        raise ValueError("n_reflections must be >= 1")
    mv = None
    for _ in range(n_reflections):
        n = rng.normal(size=3)
        n /= np.linalg.norm(n)
        d = rng.normal() * translation_scale if translation_scale else 0.0
        plane = embed.embed_plane(n, d)
        mv = plane if mv is None else ops.geometric_product(mv, plane)
    v = Versor(mv, odd=bool(n_reflections % 2))
    return v.normalized()


def random_translation(rng, scale=1.0) -> Versor:
    """Random translation versor with Normal(0, scale) offsets per axis."""
    return Versor(embed.embed_translation(rng.normal(size=3) * scale), odd=False)
