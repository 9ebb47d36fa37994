"""Explicit rows of the square-mosaic path-count triangles {4,q}, q >= 4.

Rows are the per-edge restriction of the simplex levels: class ``1`` wingers
bound each row, two-parent A entries sit between consecutive parents, and each
A or B parent additionally spawns a block of single-parent B copies (q-4 of
them for an A parent, q-3 for a B parent; none at q=4, which reproduces the
classical binomial triangle).

Entry ordering convention: each parent pair's shared A child comes first,
immediately followed by the right parent's B block.  This is display order
only; censuses and value sums do not depend on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .census import VertexClass


class Entry(NamedTuple):
    kind: VertexClass  # ONE, A, or B
    value: int


_ROW_CLASSES = (VertexClass.ONE, VertexClass.A, VertexClass.B)


def _b_block_size(q: int, kind: VertexClass) -> int:
    if kind is VertexClass.A:
        return q - 4
    if kind is VertexClass.B:
        return q - 3
    return 0  # wingers spawn no B copies


@dataclass(frozen=True)
class HptRow:
    """One row of a {4,q} triangle: ordered (class, value) entries."""

    q: int
    index: int
    entries: tuple

    def __post_init__(self):
        if self.q < 4:
            raise ValueError("q must be at least 4")
        if self.index < 0:
            raise ValueError("row index must be nonnegative")
        for e in self.entries:
            if e.kind not in _ROW_CLASSES:
                raise ValueError(f"rows carry only classes 1/A/B, got {e.kind}")
            if e.value < 1:
                raise ValueError("row values are positive path counts")

    def values(self) -> tuple:
        return tuple(e.value for e in self.entries)

    def __len__(self) -> int:
        return len(self.entries)


class RowCensus(NamedTuple):
    count_a: int
    count_b: int
    sum_a: int
    sum_b: int
    winger_count: int
    winger_sum: int


def first_row(q: int) -> HptRow:
    """Row 0: the lone base vertex."""
    return HptRow(q=q, index=0, entries=(Entry(VertexClass.ONE, 1),))


def _children(row: HptRow) -> list:
    """Children of a row in order, each as (kind, value, parent positions)."""
    entries = row.entries
    out = [(VertexClass.ONE, 1, (0,))]
    for i in range(len(entries) - 1):
        left, right = entries[i], entries[i + 1]
        out.append((VertexClass.A, left.value + right.value, (i, i + 1)))
        n_b = _b_block_size(row.q, right.kind)
        out.extend((VertexClass.B, right.value, (i + 1,)) for _ in range(n_b))
    out.append((VertexClass.ONE, 1, (len(entries) - 1,)))
    return out


def next_row(row: HptRow) -> HptRow:
    """Construct row index+1 from its parent row."""
    children = _children(row)
    return HptRow(q=row.q, index=row.index + 1,
                  entries=tuple(Entry(kind, value) for kind, value, _ in children))


def triangle_rows(q: int, last_row: int) -> list:
    """Rows 0..last_row of the {4,q} triangle."""
    if last_row < 0:
        raise ValueError("row count must be nonnegative")
    rows = [first_row(q)]
    for _ in range(last_row):
        rows.append(next_row(rows[-1]))
    return rows


def row_census(row: HptRow) -> RowCensus:
    """Per-class counts and value sums of one row."""
    count = {VertexClass.ONE: 0, VertexClass.A: 0, VertexClass.B: 0}
    total = {VertexClass.ONE: 0, VertexClass.A: 0, VertexClass.B: 0}
    for e in row.entries:
        count[e.kind] += 1
        total[e.kind] += e.value
    return RowCensus(
        count_a=count[VertexClass.A], count_b=count[VertexClass.B],
        sum_a=total[VertexClass.A], sum_b=total[VertexClass.B],
        winger_count=count[VertexClass.ONE], winger_sum=total[VertexClass.ONE],
    )


_DOT_SHAPE = {VertexClass.ONE: "box", VertexClass.A: "circle", VertexClass.B: "diamond"}
_DOT_COLOR = {VertexClass.ONE: "lightgrey", VertexClass.A: "lightcoral", VertexClass.B: "cyan"}


def rows_to_dot(rows) -> str:
    """Layered DOT digraph of consecutive rows: one rank per row, edges parent->child."""
    rows = list(rows)
    if not rows:
        raise ValueError("need at least one row")
    q = rows[0].q
    for prev, cur in zip(rows, rows[1:]):
        if cur.q != q or cur.index != prev.index + 1:
            raise ValueError("rows must be consecutive rows of one triangle")
    lines = [f"digraph triangle_q{q} {{", "  rankdir=TB;", "  node [style=filled];"]
    for row in rows:
        names = []
        for pos, e in enumerate(row.entries):
            name = f"r{row.index}p{pos}"
            names.append(
                f'{name} [label="{e.value}", shape={_DOT_SHAPE[e.kind]}, '
                f'fillcolor="{_DOT_COLOR[e.kind]}"];')
        lines.append("  { rank=same; " + " ".join(names) + " }")
    for row, child_row in zip(rows, rows[1:]):
        for pos, (_, _, parents) in enumerate(_children(row)):
            for parent in parents:
                lines.append(f"  r{row.index}p{parent} -> r{child_row.index}p{pos};")
    lines.append("}")
    return "\n".join(lines) + "\n"
