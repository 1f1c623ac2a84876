"""Star colorings of Cartesian products of cycles.

Every torus grid ``C_m x C_n`` with ``m, n >= 3`` has a star coloring with
five colors, except ``C3 x C3`` and ``C3 x C5`` which need six. This package
builds such colorings from a small catalog of tiles, verifies them, and
decides star-colorability exactly for small graphs.
"""

__version__ = "0.1.0"

from .compose import ConstructionPlan, Decomposition, construct, multi_decompose, search_fallback, sylvester_decompose
from .errors import BudgetExhausted, ConstructionError, DomainError, PaletteExhausted, ParseError
from .graph import Graph, cartesian_product, make_cycle, make_path, make_torus, parse_dimacs, write_dimacs
from .solver import SearchOutcome, SolverConfig, Status, exists_star_coloring, star_chromatic_number
from .tiles import Tile, hconcat, tile_catalog, validate_catalog, vstack
from .verify import Coloring, Verdict, VerifyReport, check_proper, find_bicolored_p4, verify_star
