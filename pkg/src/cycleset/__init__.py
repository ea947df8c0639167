"""Finite cycle sets, braces, radical rings, and their Yang-Baxter solutions.

The carrier of every structure is {0, .., n-1}; operations are full
tables, permutations are tuples, and everything is immutable.  The main
entry points:

  cycle_set    validation, duals, retraction towers, exhaustive search
  ybe          braid/quantum solution checks and the cycle-set bijection
  brace        braces, radical rings, socle machinery, small-order oracles
  extension    the integer-vector extension and its finite quotient brace
  construction prime-power indecomposable cycle sets with cyclic group
  formats/cli  text documents and the command-line front end
"""

from .brace import (
    FiniteBrace,
    FiniteRing,
    abelian_factor_lists,
    abelian_group_table,
    additive_automorphisms,
    adjoint_circle,
    brace_from_ring,
    brace_to_lcs,
    check_linear_cycle_set,
    enumerate_left_braces,
    enumerate_right_braces,
    is_jacobson_radical,
    is_nil,
    is_nilpotent,
    is_two_sided,
    lambda_map,
    lcs_to_brace,
    nilpotency_index,
    opposite,
    quotient,
    ring_mult,
    socle,
    socle_series,
    solution_from_left_brace,
    validate_brace,
    validate_ring,
)
from .construction import (
    ConsParams,
    CyclicAnalysis,
    VerificationReport,
    analyze_cyclic,
    build,
    enumerate_construction,
    enumerate_params,
    make_params,
    params_violation,
    psi,
    validate_params,
    verify_build,
)
from .cycle_set import (
    CycleSet,
    canonical_form,
    dual,
    enumerate_cycle_sets,
    is_indecomposable,
    is_irretractable,
    is_nondegenerate,
    multipermutation_level,
    permutation_group,
    retraction,
    retraction_tower_sizes,
    validate,
)
from .extension import (
    ExtensionContext,
    adjoint_inverse,
    adjoint_mult,
    check_generator_relations,
    check_right_brace_sampled,
    extension_context,
    retracted_extension,
    sigma_of_vector,
)
from .formats import Document, ParseError, emit, parse
from .perm import PermGroup, closure, group_properties
from .tables import Table, ValidationError
from .ybe import (
    BraidMap,
    QybeMap,
    check_braid,
    check_involutive,
    check_qybe,
    check_unitary,
    flip_compose,
    from_cycle_set,
    involutive_shortcut_check,
    nondegeneracy,
    to_cycle_set,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
