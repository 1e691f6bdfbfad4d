"""Exact computations with graded cofinite subalgebras of the Weyl algebra on the affine line."""

from .certificate import Certificate, IdealCertificate, Unknown
from .classify import (Classification, InconsistentBase, Triple, Verification, classify,
                       extract_triple, forward, verify_triple)
from .dxy import DxyVerdict, GeneralPoly, PurePower, dxy_closure_check, dxy_member
from .graded import (CofinitenessVerdict, GradedGenSet, NotMember, Status, cofinite_check,
                     graded_generators, graded_member)
from .invariants import (NonInvariantFlank, WeightObstruction, invariant_basis, is_invariant,
                         retraction_check, reynolds, weight, weight_components, weight_obstruction)
from .parse import ParseError, parse_graded, parse_op, parse_poly
from .perms import InvalidPermutation, sn_uniform
from .poly import GradedPoly, Poly
from .ramification import (RamificationProfile, UnsupportedFactorization, hurwitz_check,
                           ramification_profile, uniform_ramified)
from .subalgebra import FilteredGenSet, SearchBounds, base, member, verify_certificate
from .twist import TwistForm, canonicalize_p, derivation_t, trace_poly, twist, untwist
from .weyl import WeylOp, ad_power, apply, commutator, mul, order, symbol

__version__ = "0.1.0"
