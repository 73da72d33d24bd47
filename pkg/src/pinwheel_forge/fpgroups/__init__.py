"""Finitely presented groups: words, presentations, coset enumeration."""
from .coset import (
    DEFAULT_MAX_COSETS,
    EnumResult,
    TrivialityVerdict,
    abelianization,
    default_max_cosets,
    todd_coxeter,
    verify_trivial,
)
from .words import (
    Presentation,
    PresentationSyntaxError,
    Word,
    commutator,
    format_presentation,
    parse_presentation,
    parse_word,
)

__all__ = [
    "DEFAULT_MAX_COSETS", "EnumResult", "TrivialityVerdict", "abelianization",
    "default_max_cosets", "todd_coxeter", "verify_trivial", "Presentation",
    "PresentationSyntaxError", "Word", "commutator", "format_presentation",
    "parse_presentation", "parse_word",
]

from .families import FamilyParams, SUPPORTED_FAMILIES, build_family_presentation, family_text  # noqa: E402

__all__ += ["FamilyParams", "SUPPORTED_FAMILIES", "build_family_presentation", "family_text"]
