"""Minimum-degree conditions for G -> (K_r, P_t): constructions, certificate
extraction, and an exhaustive colouring oracle."""

from .constructions import ConstructedInstance, construct_example_large_n, construct_example_tight_n
from .errors import BudgetExceeded, Graph6Error, InvariantViolation, PreconditionError, RamseyError
from .graph import (
    Colour,
    EdgeColouring,
    Graph,
    RamseyParams,
    Witness,
    WitnessKind,
    colour_degree,
    induced_subgraph,
    min_degree,
    parse_graph6,
    to_graph6,
)
from .oracle import ArrowVerdict, arrows, ramsey_number, tightness_sweep
from .paths import (
    LongPath,
    Partition,
    PathCert,
    decompose,
    guaranteed_long_path,
    longest_path_exact,
    maximal_path,
    posa_close_cycle,
)
from .transversal import (
    MultipartiteView,
    TransversalCert,
    augment_with_clique_gadget,
    bes_condition_holds,
    blow_up_balanced,
    dominates,
    find_independent_transversal,
    find_multipartite_triangle,
    haxell_condition_holds,
)
from .witness import WitnessTrace, arrow_witness, triangle_arrow_witness, validate_witness

__version__ = "0.1.0"
