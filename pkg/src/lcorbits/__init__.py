"""Local-complementation orbits of graphs, self-dual additive GF(4) codes,
and peak-to-average power ratio of Boolean functions under {I,H,N}^n."""

from .boolean import BooleanFunction, parse_anf
from .canon import canonical_form, is_isomorphic
from .codes import AdditiveCode, code_from_graph, parse_matrix, to_graph_form
from .construct import build, example_spec, load_spec
from .graph import Graph, lc
from .interlace import log2_par_recursive
from .orbit import (OrbitRecord, enumerate_all, enumerate_orbits, lam, lc_orbit,
                    orbit_record, tables)
from .spectra import par, par_exact, sample_par

__version__ = "0.1.0"

__all__ = [
    "AdditiveCode", "BooleanFunction", "Graph", "OrbitRecord", "build",
    "canonical_form", "code_from_graph", "enumerate_all", "enumerate_orbits",
    "example_spec", "is_isomorphic", "lam", "lc", "lc_orbit", "load_spec",
    "log2_par_recursive", "orbit_record", "par", "par_exact", "parse_anf",
    "parse_matrix", "sample_par", "tables", "to_graph_form",
]
