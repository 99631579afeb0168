"""Construction and analysis of the tetravalent half-transitive graphs Gamma(n, a)."""

from .automorphism import (
    arc_stabilizer_probe,
    are_isomorphic,
    automorphism_group,
    canonical_form,
    cayley_regular_check,
    named_automorphisms,
    transitivity,
    verify_relations,
)
from .construction import GammaGraph, Vertex, build, export, neighbors, tau_map
from .groups import Permutation, PermGroup
from .modular import (
    AdmissiblePair,
    UnitGroupContext,
    admissible_pairs,
    audit_relations,
    euler_phi,
    multiplicative_order,
    order3_elements,
)
from .structure import (
    BudgetExceeded,
    bipartition,
    chromatic_number,
    cycle_census,
    girth,
    hamiltonian_cycle,
    odd_girth,
)

__version__ = "0.1.0"
