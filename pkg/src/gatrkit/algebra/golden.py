"""Golden-file rendering of the committed sign tables.

The committed files pin the resolved blade-order/orientation convention;
CI diffs freshly generated tables against them so any accidental change to
the basis or the sign algorithm fails loudly.

Formats (plain text, '#' comment lines):
  cayley_geometric.txt / cayley_wedge.txt : one line per pair ``i j k s``
  dual_signs.txt                          : one line per blade ``i k s``
"""

from __future__ import annotations

from pathlib import Path

from .cayley import PGA, Algebra, BilinearTable

GOLDEN_DIR = Path(__file__).parent / "golden"


def render_product_table(table: BilinearTable) -> str:
    lines = [f"# {table.name} product table: i j k s (zero entries have s=0)"]
    for i in range(table.dim):
        for j in range(table.dim):
            lines.append(f"{i} {j} {table.index[i, j]} {table.sign[i, j]}")
    return "\n".join(lines) + "\n"


def render_dual(algebra: Algebra = PGA) -> str:
    lines = ["# right-complement dual: i k s"]
    for i in range(algebra.dim):
        lines.append(f"{i} {algebra.dual_index[i]} {int(algebra.dual_sign[i])}")
    return "\n".join(lines) + "\n"


def expected_files(algebra: Algebra = PGA) -> dict[str, str]:
    return {
        "cayley_geometric.txt": render_product_table(algebra.geometric),
        "cayley_wedge.txt": render_product_table(algebra.wedge),
        "dual_signs.txt": render_dual(algebra),
    }


def write_golden_files(directory: Path = GOLDEN_DIR) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    for name, text in expected_files().items():
        (directory / name).write_text(text)


if __name__ == "__main__":
    write_golden_files()
