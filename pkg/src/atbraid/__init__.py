"""Canonical forms and word-problem tools for braid groups of types A and B.

The main entry points are :func:`normal_form` (signed Artin word to canonical
form), :func:`verify_basis` (exhaustive composition check of a rule system)
and the oracle functions :func:`artin_equal` and :func:`positive_equal`.
"""
from .alphabet import (
    ATLetter,
    CanonicalBraid,
    alphabet,
    delta,
    delta_inv,
    format_word,
    from_artin,
    gen,
    is_left_weighted,
    letter_compare,
    parse_word,
    word_compare,
)
from .coxeter import (
    CapExceeded,
    CoxeterElement,
    Family,
    GroupSpec,
    complement,
    enumerate_elements,
    flip,
    inverse,
    left_descents,
    longest_element,
    multiply,
    nf_reduce,
    perp,
    right_descents,
)
from .oracle import OracleLimitExceeded, PositiveWord, artin_equal, coxeter_bfs, positive_equal
from .rewrite import (
    RewriteRule,
    RewriteTrace,
    RuleFamily,
    evaluate,
    normal_form,
    normalize,
    normalize_fast,
    normalize_positive,
    reduce_word,
)
from .verify import CompositionReport, enumerate_rules, find_ambiguities, verify_basis

__version__ = "0.1.0"

__all__ = [
    "ATLetter",
    "CanonicalBraid",
    "CapExceeded",
    "CompositionReport",
    "CoxeterElement",
    "Family",
    "GroupSpec",
    "OracleLimitExceeded",
    "PositiveWord",
    "RewriteRule",
    "RewriteTrace",
    "RuleFamily",
    "alphabet",
    "artin_equal",
    "complement",
    "coxeter_bfs",
    "delta",
    "delta_inv",
    "enumerate_elements",
    "enumerate_rules",
    "evaluate",
    "find_ambiguities",
    "flip",
    "format_word",
    "from_artin",
    "gen",
    "inverse",
    "is_left_weighted",
    "left_descents",
    "letter_compare",
    "longest_element",
    "multiply",
    "nf_reduce",
    "normal_form",
    "normalize",
    "normalize_fast",
    "normalize_positive",
    "parse_word",
    "perp",
    "positive_equal",
    "reduce_word",
    "right_descents",
    "verify_basis",
    "word_compare",
    "BraidNormalizer",
    "__version__",
]


def __getattr__(name):
    # keep scikit-learn an import-time cost only for the estimator
    if name == "BraidNormalizer":
        from .estimator import BraidNormalizer

        return BraidNormalizer
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
