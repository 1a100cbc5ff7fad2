"""Exact skew polynomial rings D[x, sigma, delta] and their dynamics."""

from .algebra import *  # noqa: F401,F403
from .dynamics import (
    OrbitReport,
    PeriodicityCertificate,
    check_cor1,
    check_fixed_point,
    check_lemma_good,
    check_phew,
    check_thm1,
    constant_adjusted,
    formal_orbit,
    formal_power,
    naive_iterate,
    verify_periodicity,
)
from .errors import DomainMismatchError, HypothesisError, LiteralSyntaxError, ResourceError, TwistError
from .skewpoly import (
    NEG_INF,
    SkewPoly,
    check_extend_deriv,
    check_extend_endo,
    compose,
    delta_lift,
    eval_via_remainder,
    poly_add,
    poly_eval,
    poly_genpow,
    poly_mul,
    poly_right_divide,
    product_eval,
    sigma_lift,
)

__version__ = "0.1.0"
