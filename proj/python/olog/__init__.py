"""Ologs as finite categories, set-valued instances and the chain model."""

from ._core import (
    Classification,
    Domain,
    Instance,
    OlogError,
    Schema,
    SimParams,
    bundled_schema,
    bundled_schema_text,
    check_equations,
    check_fiber_products,
    cmd_analogy,
    cmd_check,
    cmd_iso,
    compute_pullback,
    estimate_link_failure_noise_mc,
    find_isomorphism,
    generate,
    link_failure_noise,
    matched_social_defaults,
    much_greater,
    parse_instance,
    parse_schema,
    protein_defaults,
    roughly_equal,
    serialize_instance,
    serialize_schema,
    social_defaults,
    validate_instance,
)

__all__ = [name for name in dir() if not name.startswith("_")]
