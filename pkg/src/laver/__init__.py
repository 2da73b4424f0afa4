"""Cyclic left-distributive algebras (Laver tables), the critical-point
calculus over them, conjecture verifiers, and the symbolic enumeration of
ordinals between consecutive critical points."""

__version__ = "0.1.0"

from laver import errors
from laver.conjectures import (
    VerificationReport,
    check_shifted_range_transfer,
    check_threshold_image_stability,
    check_upper_half_twin,
    check_variant_equivalence,
    revalidate,
    run_verifier,
    verify_th,
    verify_twin,
    verify_uh,
    verify_weak_uh,
    verify_wth,
)
from laver.crit import (
    CertifiedIndex,
    act_on_gamma,
    crit,
    in_range,
    least_range_witness,
    signature,
)
from laver.kernels import BACKEND
from laver.ordinals import (
    Crit,
    IntervalEnumeration,
    OrdinalEnumerator,
    Pair,
    enumerate_below,
    enumerate_interval,
    image,
    render_text,
)
from laver.store import load, save
from laver.table import DEFAULT_ENTRY_CAP, LaverTable, TableStack, build_table
from laver.words import App, Word, eval_word, format_word, integer_word, parse_word

__all__ = [
    "App",
    "BACKEND",
    "CertifiedIndex",
    "Crit",
    "DEFAULT_ENTRY_CAP",
    "IntervalEnumeration",
    "LaverTable",
    "OrdinalEnumerator",
    "Pair",
    "TableStack",
    "VerificationReport",
    "Word",
    "__version__",
    "act_on_gamma",
    "build_table",
    "check_shifted_range_transfer",
    "check_threshold_image_stability",
    "check_upper_half_twin",
    "check_variant_equivalence",
    "crit",
    "enumerate_below",
    "enumerate_interval",
    "errors",
    "eval_word",
    "format_word",
    "image",
    "in_range",
    "integer_word",
    "least_range_witness",
    "load",
    "parse_word",
    "render_text",
    "revalidate",
    "run_verifier",
    "save",
    "signature",
    "verify_th",
    "verify_twin",
    "verify_uh",
    "verify_weak_uh",
    "verify_wth",
]
