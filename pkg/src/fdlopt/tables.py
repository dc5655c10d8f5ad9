"""Built-in reference tables of coverage bounds.

Four fixed families of profiles around the (16, 6) and (26, 10) instances:
two list top-level profiles directly, two list level-2 sequences that are
lifted to level 1 before evaluation.  The bounds are computed live; the test
suite pins every row to its reference value bit-exactly.
"""

from dataclasses import dataclass

from .construction import _closed_form_B
from .profiles import TransformContext, _left_pre

_LEVEL1_TABLES: tuple[tuple[str, int, int, tuple[tuple[int, ...], ...]], ...] = (
    (
        "adjacent-gap-level-1",
        16,
        6,
        (
            (3, 3, 2, 1, 5, 2),
            (3, 3, 2, 2, 4, 2),
            (3, 3, 2, 3, 3, 2),
            (3, 3, 2, 4, 2, 2),
            (3, 3, 2, 5, 1, 2),
        ),
    ),
    (
        "unit-swap-level-1",
        16,
        6,
        (
            (2, 3, 2, 3, 3, 3),
            (3, 2, 2, 3, 3, 3),
            (3, 2, 3, 2, 3, 3),
            (3, 2, 3, 3, 2, 3),
            (3, 2, 3, 3, 3, 2),
            (3, 3, 2, 3, 3, 2),
            (3, 3, 3, 2, 3, 2),
        ),
    ),
)

_LEVEL2_TABLES: tuple[tuple[str, int, int, tuple[tuple[int, ...], ...]], ...] = (
    (
        "adjacent-gap-level-2",
        26,
        10,
        (
            (1, 1, 5, 1, 1, 1),
            (1, 1, 4, 2, 1, 1),
            (1, 1, 3, 3, 1, 1),
            (1, 1, 2, 4, 1, 1),
            (1, 1, 1, 5, 1, 1),
        ),
    ),
    (
        "unit-swap-level-2",
        26,
        10,
        (
            (2, 2, 2, 1, 2, 1),
            (2, 2, 1, 2, 2, 1),
            (2, 2, 1, 2, 1, 2),
            (2, 1, 2, 2, 1, 2),
            (1, 2, 2, 2, 1, 2),
            (1, 2, 2, 1, 2, 2),
            (1, 2, 1, 2, 2, 2),
        ),
    ),
)


@dataclass(frozen=True)
class TableRow:
    table: str
    m: int
    k: int
    source: tuple[int, ...] | None  # level-2 sequence, when the row is lifted
    profile: tuple[int, ...]  # top-level profile that was evaluated
    value: int

    def label(self) -> str:
        """Profile column of the CSV output."""
        if self.source is None:
            return ",".join(str(p) for p in self.profile)
        src = ",".join(str(p) for p in self.source)
        dst = ",".join(str(p) for p in self.profile)
        return f"({src})→({dst})"


def table_rows() -> tuple[TableRow, ...]:
    """All rows of the four reference tables, with freshly computed bounds."""
    rows: list[TableRow] = []
    for name, m, k, profiles in _LEVEL1_TABLES:
        for parts in profiles:
            rows.append(TableRow(name, m, k, None, parts, _closed_form_B(parts)))
    for name, m, k, sequences in _LEVEL2_TABLES:
        ctx = TransformContext.of(m, k)
        for seq in sequences:
            lifted = _left_pre(seq, ctx)
            rows.append(TableRow(name, m, k, seq, lifted, _closed_form_B(lifted)))
    return tuple(rows)


def tables_csv() -> str:
    """CSV rendering: header ``profile,B`` with the profile column quoted."""
    lines = ["profile,B"]
    lines.extend(f'"{row.label()}",{row.value}' for row in table_rows())
    return "\n".join(lines) + "\n"
