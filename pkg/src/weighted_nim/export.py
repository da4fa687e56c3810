"""Delimited export of Grundy tables, with rendered figures alongside.

The CSV schema is stable for regression diffing:
    x,y,grundy,family,s,param1,param2
rows sorted by (x, y).  `grundy` is the brute-force oracle value, the
remaining columns come from the closed-form classification (param1/param2
are n/m for family N and k/j for families A/B).  Figures are PNG renderings
of the same table: a Grundy-value heatmap and a categorical family map.
"""

from __future__ import annotations

import csv
from pathlib import Path
from typing import Iterator

import numpy as np

from .families import Family, classify
from .engine import GrundyTable, grundy_table

CSV_HEADER = ["x", "y", "grundy", "family", "s", "param1", "param2"]

_FAMILY_CODE = {Family.N: 0, Family.A: 1, Family.B: 2}


def table_rows(table: GrundyTable) -> Iterator[tuple[int, int, int, str, int, int, int]]:
    """CSV rows for every position in the table's box, sorted by (x, y)."""
    for x in range(table.x_max + 1):
        for y in range(table.y_max + 1):
            c = classify((x, y))
            yield x, y, int(table.values[x, y]), c.family.value, c.s, c.param1, c.param2


def write_table_csv(path: Path | str, table: GrundyTable) -> int:
    """Write the table to CSV; returns the number of data rows."""
    path = Path(path)
    rows = 0
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER)
        for row in table_rows(table):
            writer.writerow(row)
            rows += 1
    return rows


def render_table_figures(table: GrundyTable, values_path: Path | str, families_path: Path | str) -> None:
    """Render the Grundy heatmap and the family map to PNG files."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    from matplotlib.colors import ListedColormap
    from matplotlib.patches import Patch

    extent = (-0.5, table.x_max + 0.5, -0.5, table.y_max + 0.5)

    fig, ax = plt.subplots(figsize=(7, 5.5))
    im = ax.imshow(table.values.T, origin="lower", extent=extent, interpolation="nearest")
    fig.colorbar(im, ax=ax, label="Grundy value")
    ax.set_xlabel("x (pile 1, weight +1)")
    ax.set_ylabel("y (pile 2, weight -2)")
    ax.set_title(f"Grundy values, x<={table.x_max}, y<={table.y_max}")
    fig.tight_layout()
    fig.savefig(values_path, dpi=150)
    plt.close(fig)

    codes = np.empty_like(table.values)
    for x in range(table.x_max + 1):
        for y in range(table.y_max + 1):
            codes[x, y] = _FAMILY_CODE[classify((x, y)).family]
    cmap = ListedColormap(["#4477aa", "#ee6677", "#ccbb44"])
    fig, ax = plt.subplots(figsize=(7, 5.5))
    ax.imshow(codes.T, origin="lower", extent=extent, cmap=cmap, vmin=0, vmax=2,
              interpolation="nearest")
    ax.legend(
        handles=[
            Patch(color="#4477aa", label="N: x >= 2y"),
            Patch(color="#ee6677", label="A: x even, y > x/2"),
            Patch(color="#ccbb44", label="B: x odd, y > x/2"),
        ],
        loc="upper right",
    )
    ax.set_xlabel("x (pile 1, weight +1)")
    ax.set_ylabel("y (pile 2, weight -2)")
    ax.set_title(f"Position families, x<={table.x_max}, y<={table.y_max}")
    fig.tight_layout()
    fig.savefig(families_path, dpi=150)
    plt.close(fig)


def export_table(
    x_max: int,
    y_max: int,
    csv_path: Path | str,
    *,
    figures: bool = True,
) -> dict:
    """Compute the table, write the CSV and (optionally) figures next to it.

    Returns {"csv": path, "rows": n, "figures": [paths]}.
    """
    csv_path = Path(csv_path)
    table = grundy_table(x_max, y_max)
    rows = write_table_csv(csv_path, table)
    written: list[str] = []
    if figures:
        values_png = csv_path.with_name(csv_path.stem + "_values.png")
        families_png = csv_path.with_name(csv_path.stem + "_families.png")
        render_table_figures(table, values_png, families_png)
        written = [str(values_png), str(families_png)]
    return {"csv": str(csv_path), "rows": rows, "figures": written}
