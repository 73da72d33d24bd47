"""Exact checks for pinwheel structures on rational surfaces.

Submodules:

* ``zlin``: 2x2 integer matrices, Smith normal form, Gram form analysis
* ``pinwheel`` and ``catalog``: gluing monodromy, continued fractions,
  handle trading and the table of known pinwheels
* ``torus_actions``: orbit data to intersection form and pinwheel
* ``fpgroups``: presentations, coset enumeration, surgery-family groups
* ``swkit``: basic classes, minimality, surgery-family invariants
"""
from .catalog import CATALOG, catalog_lookup
from .fpgroups import build_family_presentation, parse_presentation, todd_coxeter, verify_trivial
from .laurent import LaurentPoly, parse_laurent
from .pinwheel import (
    ExtRational,
    Pinwheel,
    PinwheelComponent,
    SurgeryInvariants,
    apply_standard_surgeries,
    continued_fraction,
    cyclic_cf_all_zero,
    gluing_alpha,
    gluing_beta,
    gluing_phi,
    handle_trade,
    monodromy_check,
    push_through,
    theta,
    validate_pinwheel,
)
from .swkit import (
    AdjConstraint,
    CharClass,
    OddLattice,
    canonical_genus_feasibility,
    distinguishing_invariant,
    enumerate_basic_classes,
    minimality_check,
    mms_family,
    surgery_h1,
)
from .torus_actions import (
    OrbitData,
    barycentric_pinwheel,
    classify_action,
    parse_orbit_data,
    sphere_geometry,
    validate_orbit_data,
)
from .zlin import FormReport, MatZ2, gram_analyze, mat2_product, smith_normal_form

__version__ = "0.1.0"
