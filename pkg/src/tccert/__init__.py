"""Exact F2 certificates for the topological complexity of connected sums of real projective spaces."""

from .bar import BarChain, BiChain, alpha_cycle, aw, beta_cycle, boundary, ez, gamma_cycle, kunneth_project
from .certificate import (
    CertificateReport,
    certify_g2,
    genus_reduction_check,
    kunneth_scan,
    reproduce_example3,
    wedge_reduction,
)
from .cocycle import nu, nu_power
from .groups import (
    CyclicTwo,
    Dihedral,
    DihedralGroup,
    FreeProduct,
    FreeWord,
    Pair,
    iso_to_dihedral,
    project_last_generator,
    project_to_y,
    project_to_z,
)
from .planner import CellComplexDescription, projective_sum_preset, synthesize, tc_bracket
from .ring import RingElement
from .tensor import (
    CoinvariantClass,
    TensorElement,
    WedgeElement,
    coinvariant_reduce,
    diagonal_action,
    expand,
    finite_quotient,
    map_factors,
    s_element_nonzero,
    wedge_project,
)

__version__ = "0.1.0"

__all__ = [
    "BarChain",
    "BiChain",
    "CellComplexDescription",
    "CertificateReport",
    "CoinvariantClass",
    "CyclicTwo",
    "Dihedral",
    "DihedralGroup",
    "FreeProduct",
    "FreeWord",
    "Pair",
    "RingElement",
    "TensorElement",
    "WedgeElement",
    "alpha_cycle",
    "aw",
    "beta_cycle",
    "boundary",
    "certify_g2",
    "coinvariant_reduce",
    "diagonal_action",
    "expand",
    "ez",
    "finite_quotient",
    "gamma_cycle",
    "genus_reduction_check",
    "iso_to_dihedral",
    "kunneth_project",
    "kunneth_scan",
    "map_factors",
    "nu",
    "nu_power",
    "project_last_generator",
    "project_to_y",
    "project_to_z",
    "projective_sum_preset",
    "reproduce_example3",
    "s_element_nonzero",
    "synthesize",
    "tc_bracket",
    "wedge_project",
    "wedge_reduction",
]
