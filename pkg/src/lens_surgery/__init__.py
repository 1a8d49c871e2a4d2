"""Exact torsion and lens-space classification for surgeries on twisted Whitehead links."""

from .cyclo import CycloInt, CycloNum, UnitWitness, cyclotomic_polynomial, invert, unit_equivalent
from .laurent import MultiLaurent, divide_exact, format_laurent, parse_laurent, symmetric_agreement
from .alex import LinkFamilyParams, alexander_Wbar, alexander_Wn, epsilon_of_g, g_poly
from .torsion import Side, SurgerySpec, homology_order, lens_torsion, torsion_closed_form, torsion_pipeline
from .lens import Indeterminate, Lens, LensSpace, NotLens, classify_generalized, classify_theorem, obstruct
from .rolfsen import RationalCoeff, constructive_lens, r1_twist, torus_link_lens, trefoil_surgery

__version__ = "0.1.0"

__all__ = [
    "CycloInt",
    "CycloNum",
    "UnitWitness",
    "cyclotomic_polynomial",
    "invert",
    "unit_equivalent",
    "MultiLaurent",
    "divide_exact",
    "format_laurent",
    "parse_laurent",
    "symmetric_agreement",
    "LinkFamilyParams",
    "alexander_Wbar",
    "alexander_Wn",
    "epsilon_of_g",
    "g_poly",
    "Side",
    "SurgerySpec",
    "homology_order",
    "lens_torsion",
    "torsion_closed_form",
    "torsion_pipeline",
    "Indeterminate",
    "Lens",
    "LensSpace",
    "NotLens",
    "classify_generalized",
    "classify_theorem",
    "obstruct",
    "RationalCoeff",
    "constructive_lens",
    "r1_twist",
    "torus_link_lens",
    "trefoil_surgery",
]
