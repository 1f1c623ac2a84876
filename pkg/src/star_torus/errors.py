"""Exception types shared across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class ParseError(DomainError):
    """Malformed input text. ``lineno`` is 1-based, or None if not line-specific."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class ConstructionError(RuntimeError):
    """No verified coloring could be assembled for a torus."""

    def __init__(self, m: int, n: int, detail: str = ""):
        self.m, self.n = m, n
        msg = f"could not construct a star coloring of C{m} x C{n}"
        super().__init__(f"{msg}: {detail}" if detail else msg)


class PaletteExhausted(Exception):
    """No star coloring exists with at most ``kmax`` colors."""

    def __init__(self, kmax: int):
        self.kmax = kmax
        super().__init__(f"no star coloring with at most {kmax} colors")


class BudgetExhausted(Exception):
    """The exact search stopped at its node budget before reaching a verdict."""

    def __init__(self, k: int, nodes: int):
        self.k = k
        self.nodes = nodes
        super().__init__(f"node budget exhausted at k={k} after {nodes} nodes")
