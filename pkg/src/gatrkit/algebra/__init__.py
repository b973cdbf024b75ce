"""G(3,0,1) projective geometric algebra: tables, operations, embeddings, versors."""

from .cayley import EUCLIDEAN3, PGA, Algebra, BilinearTable
from .embed import (
    embed_line,
    embed_plane,
    embed_point,
    embed_point_reflection,
    embed_pseudoscalar,
    embed_reflection,
    embed_rotation,
    embed_scalar,
    embed_translation,
    extract_point,
)
from .ops import (
    dual,
    dual_inverse,
    equi_join,
    euclidean_join,
    geometric_product,
    grade_involution,
    grade_projection,
    ideal_split,
    inner,
    join,
    left_contraction,
    norm,
    reverse,
    sandwich,
    sandwich_matrix,
    versor_inverse,
    wedge,
)
from .versor import Versor, identity_versor, random_translation, random_versor

__all__ = [
    "Algebra",
    "BilinearTable",
    "EUCLIDEAN3",
    "PGA",
    "Versor",
    "dual",
    "dual_inverse",
    "embed_line",
    "embed_plane",
    "embed_point",
    "embed_point_reflection",
    "embed_pseudoscalar",
    "embed_reflection",
    "embed_rotation",
    "embed_scalar",
    "embed_translation",
    "equi_join",
    "euclidean_join",
    "extract_point",
    "geometric_product",
    "grade_involution",
    "grade_projection",
    "ideal_split",
    "identity_versor",
    "inner",
    "join",
    "left_contraction",
    "norm",
    "random_translation",
    "random_versor",
    "reverse",
    "sandwich",
    "sandwich_matrix",
    "versor_inverse",
    "wedge",
]
