"""Input checks shared by the estimator and the CLI-facing helpers."""
from __future__ import annotations

from numbers import Integral
from typing import Iterable

from .coxeter import Family, GroupSpec


def check_word(word, spec: GroupSpec | None = None) -> list[int]:
    """Coerce one signed Artin word to a list of nonzero ints.

    Strings are split on whitespace and commas.
    """
    if isinstance(word, str):
        word = word.replace(",", " ").split()
    try:
        items = list(word)
    except TypeError:
        raise TypeError(f"expected a sequence of generator indices, got {type(word).__name__}") from None
    out = []
    for x in items:
        if isinstance(x, bool):
            raise TypeError("booleans are not generator indices")
        if isinstance(x, str):
            try:
                x = int(x)
            except ValueError:
                raise ValueError(f"cannot parse generator {x!r}") from None
        elif isinstance(x, Integral):
            x = int(x)
        else:
            raise TypeError(f"generator indices must be integers, got {type(x).__name__}")
        if x == 0:
            raise ValueError("generator index 0 is not allowed")
        if spec is not None and abs(x) > spec.n:
            raise ValueError(f"generator {x} out of range ±1..±{spec.n}")
        out.append(x)
    return out


def check_words(X, spec: GroupSpec | None = None) -> list[list[int]]:
    """Validate a collection of words; a bare string is rejected, wrap it in a list."""
    if isinstance(X, (str, bytes)):
        raise TypeError("expected a collection of words, got a single string")
    try:
        rows = list(X)
    except TypeError:
        raise TypeError(f"expected a collection of words, got {type(X).__name__}") from None
    return [check_word(w, spec) for w in rows]


def infer_rank(words: Iterable[list[int]], family: Family | str) -> int:
    """Smallest rank whose generators cover every index used."""
    top = max((abs(x) for w in words for x in w), default=1)
    family = Family(str(family).upper()) if not isinstance(family, Family) else family
    return max(top, 2) if family is Family.B else top
