"""Coloring files: the JSON document and the ``dimacs-col`` listing.

``dimacs-col`` is one ``s <k>`` line followed by ``v <vertex> <color>`` lines
with 1-based vertex ids; ``c`` lines are comments.
"""

from __future__ import annotations

from .errors import ParseError
from .verify import ColoringDocument, parse_coloring_json


def write_dimacs_col(doc: ColoringDocument, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"c {c}" for c in comment.splitlines())
    out.append(f"s {doc.k}")
    out.extend(f"v {v + 1} {c}" for v, c in enumerate(doc.colors))
    return "\n".join(out) + "\n"


def parse_dimacs_col(text: str) -> ColoringDocument:
    k = None
    assigned: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        tok = raw.split()
        if not tok or tok[0] == "c":
            continue
        try:
            if tok[0] == "s" and len(tok) == 2:
                k = int(tok[1])
            elif tok[0] == "v" and len(tok) == 3:
                v, c = int(tok[1]), int(tok[2])
                if v < 1 or v in assigned:
                    raise ParseError(f"bad or repeated vertex {v}", lineno)
                assigned[v] = c
            else:
                raise ParseError(f"unrecognised line {raw.strip()!r}", lineno)
        except ValueError:
            raise ParseError(f"non-integer field in {raw.strip()!r}", lineno) from None
    if k is None:
        raise ParseError("missing 's <k>' line")
    if sorted(assigned) != list(range(1, len(assigned) + 1)):
        raise ParseError("vertex ids must cover 1..N without gaps")
    return ColoringDocument(k, [assigned[v] for v in range(1, len(assigned) + 1)])


def load_coloring(text: str) -> ColoringDocument:
    """Parse either format, picking JSON when the text starts with ``{``."""
    if text.lstrip().startswith("{"):
        return parse_coloring_json(text)
    return parse_dimacs_col(text)
