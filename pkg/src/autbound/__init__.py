"""Finite-group toolkit: tables, decompositions, automorphisms, bounds."""

from .aut import (
    Automorphism,
    AutGroup,
    automorphism_count,
    automorphism_group,
    endomorphism_count,
    inner_automorphism_group,
)
from .bounds import (
    BoundReport,
    TheoremAWitness,
    bound_report,
    central_p_complement,
    equality_classifier,
    schur_data,
    theorem_a_witness,
)
from .core import (
    FiniteGroup,
    Homomorphism,
    Permutation,
    Subgroup,
    abelian,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    elementary_abelian,
    find_isomorphism,
    from_cayley_table,
    from_generators,
    quaternion8,
    read_cayley_table,
    standard_group,
    symmetric,
    write_cayley_table,
)
from .decomp import (
    AbelianDecomposition,
    primary_component,
    primary_decomposition,
    split_cyclic_containing,
    split_over_subgroup,
)

__version__ = "0.1.0"
