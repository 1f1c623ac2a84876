"""Torus colorings used as assembly blocks.

Each tile is a complete star coloring of ``C_m x C_w``. ``cells[r][c]`` is the
color of row ``r``, column ``c``; row 0 is the bottom row of the drawn figure
and column 0 its leftmost column.

Concatenated tiles are only *candidates*; nothing here assumes that seams are
compatible. Callers verify.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import DomainError
from .graph import make_torus
from .verify import Coloring, ColoringDocument, VerifyReport, verify_star


@dataclass(frozen=True)
class Tile:
    source: str
    palette_size: int
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        widths = {len(r) for r in self.cells}
        if len(widths) != 1:
            raise DomainError(f"tile {self.source}: ragged rows")

    @property
    def m(self) -> int:
        return len(self.cells)

    @property
    def w(self) -> int:
        return len(self.cells[0])

    @property
    def flat(self) -> tuple[int, ...]:
        return tuple(c for row in self.cells for c in row)

    def to_coloring(self) -> Coloring:
        return Coloring.of(make_torus(self.m, self.w), self.flat, self.palette_size)

    def verify(self) -> VerifyReport:
        return verify_star(make_torus(self.m, self.w), self.to_coloring())

    def transpose(self) -> "Tile":
        return Tile(f"transpose({self.source})", self.palette_size, tuple(zip(*self.cells)))

    def to_document(self) -> ColoringDocument:
        return ColoringDocument(self.palette_size, list(self.flat), self.m, self.w, {"source": self.source})


def _tile(source, palette, rows):
    return Tile(source, palette, tuple(tuple(r) for r in rows))


def _joined_source(op: str, parts: Sequence[Tile]) -> str:
    return f"{op}(" + ",".join(p.source for p in parts) + ")"


def hconcat(parts: Sequence[Tile]) -> Tile:
    """Place tiles side by side, left to right. The result is unverified."""
    if not parts:
        raise DomainError("hconcat needs at least one tile")
    if len(parts) == 1:
        return parts[0]
    if len({p.m for p in parts}) != 1:
        raise DomainError("hconcat: tiles have different row counts")
    if sum(p.w for p in parts) < 3:
        raise DomainError("hconcat: total width below 3")
    cells = tuple(sum((p.cells[r] for p in parts), ()) for r in range(parts[0].m))
    return Tile(_joined_source("concat", parts), max(p.palette_size for p in parts), cells)


def vstack(parts: Sequence[Tile]) -> Tile:
    """Stack tiles bottom to top (first part gets the lowest rows). Unverified."""
    if not parts:
        raise DomainError("vstack needs at least one tile")
    if len(parts) == 1:
        return parts[0]
    if len({p.w for p in parts}) != 1:
        raise DomainError("vstack: tiles have different widths")
    if sum(p.m for p in parts) < 3:
        raise DomainError("vstack: total height below 3")
    cells = tuple(row for p in parts for row in p.cells)
    return Tile(_joined_source("stack", parts), max(p.palette_size for p in parts), cells)


# Figure colorings, plus two tiles found by exhaustive search: a 6-coloring of
# C3 x C3 and a 5-coloring of C11 x C11.
_CATALOG = (
    _tile("Fig1", 6, (
        (5, 3, 1, 6, 3),
        (3, 4, 5, 1, 2),
        (1, 2, 3, 4, 6),
    )),
    _tile("Fig2(i)", 5, (
        (1, 5, 4, 2),
        (3, 1, 2, 5),
        (4, 2, 3, 1),
    )),
    _tile("Fig2(ii)", 5, (
        (1, 5, 4, 1, 3, 4),
        (3, 1, 2, 5, 1, 2),
        (4, 2, 3, 4, 2, 5),
    )),
    _tile("Fig2(iii)", 5, (
        (1, 5, 4, 2, 3, 4, 2),
        (3, 1, 2, 5, 4, 1, 5),
        (4, 2, 3, 1, 5, 2, 3),
    )),
    _tile("Fig2(iv)", 5, (
        (1, 5, 4, 1, 3, 4, 5, 3, 2),
        (3, 1, 2, 5, 1, 2, 3, 4, 1),
        (4, 2, 3, 4, 2, 5, 1, 2, 5),
    )),
    _tile("Fig3(i)", 5, (
        (4, 5, 1, 5),
        (2, 3, 4, 3),
        (4, 5, 1, 5),
        (1, 2, 3, 2),
    )),
    _tile("Fig3(ii)", 5, (
        (4, 5, 1, 2, 3),
        (2, 3, 4, 5, 1),
        (4, 5, 1, 2, 3),
        (1, 2, 3, 4, 5),
    )),
    _tile("Fig3(iii)", 5, (
        (4, 2, 5, 2, 3, 2),
        (5, 1, 3, 1, 4, 1),
        (2, 4, 2, 5, 2, 3),
        (1, 3, 1, 4, 1, 5),
    )),
    _tile("Fig3(iv)", 5, (
        (5, 1, 4, 1, 5, 1, 4),
        (1, 3, 1, 2, 1, 3, 2),
        (4, 1, 5, 1, 4, 1, 5),
        (1, 2, 1, 3, 1, 2, 3),
    )),
    _tile("Fig3(v)", 5, (
        (4, 5, 1, 2, 3, 4, 5, 1, 2, 1, 5),
        (2, 3, 4, 5, 1, 2, 3, 4, 5, 4, 3),
        (4, 5, 1, 2, 3, 4, 5, 1, 2, 1, 5),
        (1, 2, 3, 4, 5, 1, 2, 3, 4, 3, 2),
    )),
    _tile("Fig4(i)", 5, (
        (3, 4, 5, 4),
        (5, 1, 2, 1),
        (2, 3, 4, 3),
        (4, 5, 1, 5),
        (1, 2, 3, 2),
    )),
    _tile("Fig4(ii)", 5, (
        (3, 4, 5, 1, 2),
        (5, 1, 2, 3, 4),
        (2, 3, 4, 5, 1),
        (4, 5, 1, 2, 3),
        (1, 2, 3, 4, 5),
    )),
    _tile("Fig4(iii)", 5, (
        (2, 5, 2, 3, 2, 4),
        (3, 2, 4, 2, 5, 2),
        (5, 1, 3, 1, 4, 1),
        (2, 4, 2, 5, 2, 3),
        (1, 3, 1, 4, 1, 5),
    )),
    _tile("Fig4(iv)", 5, (
        (2, 5, 1, 5, 4, 1, 3),
        (1, 4, 5, 2, 3, 4, 5),
        (4, 2, 3, 1, 5, 2, 3),
        (5, 1, 2, 5, 4, 1, 2),
        (1, 3, 4, 3, 2, 5, 4),
    )),
    _tile("Fig4(v)", 5, (
        (3, 4, 5, 1, 2, 3, 4, 5, 1, 5, 4),
        (5, 1, 2, 3, 4, 5, 1, 2, 3, 2, 1),
        (2, 3, 4, 5, 1, 2, 3, 4, 5, 4, 3),
        (4, 5, 1, 2, 3, 4, 5, 1, 2, 1, 5),
        (1, 2, 3, 4, 5, 1, 2, 3, 4, 3, 2),
    )),
    _tile("Fig5(i)", 5, (
        (3, 5, 2),
        (2, 1, 4),
        (5, 4, 3),
        (1, 5, 2),
        (3, 2, 4),
        (2, 1, 5),
        (4, 3, 1),
    )),
    _tile("Fig5(ii)", 5, (
        (3, 5, 3, 1),
        (2, 1, 4, 5),
        (5, 4, 2, 3),
        (1, 5, 3, 4),
        (3, 2, 5, 1),
        (2, 1, 4, 5),
        (4, 3, 2, 3),
    )),
    _tile("C3C3-6", 6, (
        (1, 2, 3),
        (2, 4, 5),
        (3, 5, 6),
    )),
    _tile("C11C11-5", 5, (
        (1, 2, 1, 3, 1, 2, 1, 3, 1, 2, 3),
        (3, 4, 5, 1, 4, 1, 5, 1, 4, 1, 5),
        (2, 1, 3, 2, 1, 3, 1, 2, 1, 3, 1),
        (1, 5, 1, 4, 5, 1, 4, 1, 5, 1, 4),
        (3, 1, 2, 1, 3, 2, 1, 3, 1, 2, 1),
        (1, 4, 1, 5, 1, 4, 5, 1, 4, 1, 5),
        (2, 1, 3, 1, 2, 1, 3, 2, 1, 3, 1),
        (1, 5, 1, 4, 1, 5, 1, 4, 5, 1, 4),
        (3, 1, 2, 1, 3, 2, 4, 3, 1, 2, 1),
        (2, 4, 3, 5, 4, 1, 5, 1, 4, 1, 5),
        (3, 5, 4, 2, 5, 3, 4, 2, 5, 3, 4),
    )),
)


def tile_catalog() -> tuple[Tile, ...]:
    return _CATALOG


@lru_cache(maxsize=None)
def _index() -> dict[str, Tile]:
    return {t.source: t for t in _CATALOG}


def get_tile(source: str) -> Tile:
    try:
        return _index()[source]
    except KeyError:
        raise DomainError(f"no catalog tile named {source!r}") from None


def validate_catalog() -> list[tuple[str, VerifyReport]]:
    return [(t.source, t.verify()) for t in _CATALOG]
