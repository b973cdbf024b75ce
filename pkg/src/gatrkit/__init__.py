"""gatrkit: projective geometric algebra, E(3)-equivariant transformer layers,
a minimal reverse-mode autodiff engine, and an n-body regression benchmark."""

__version__ = "0.1.0"
