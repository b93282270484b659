"""scikit-learn transformer wrapping braid normalization."""
from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_words, infer_rank
from .alphabet import CanonicalBraid, from_artin
from .coxeter import GroupSpec
from .rewrite import evaluate, normalize, normalize_fast

__all__ = ["BraidNormalizer"]

_OUTPUTS = ("braid", "artin", "json", "text")


class BraidNormalizer(TransformerMixin, BaseEstimator):
    """Map signed Artin words to their canonical forms.

    Parameters
    ----------
    braid_type : {"a", "b"}
        Coxeter type of the braid group.
    n : int or None
        Rank.  With None the rank is the largest index seen by ``fit``.
    method : {"fast", "rewrite"}
        Greedy normalizer or the rule-based rewriting engine; both give the
        same result.
    output : {"braid", "artin", "json", "text"}
        Form of each transformed row: a :class:`CanonicalBraid`, its signed
        Artin word, its JSON dict, or its text rendering.

    Attributes
    ----------
    spec_ : GroupSpec
    n_ : int
    """

    def __init__(self, braid_type="a", n=None, method="fast", output="braid"):
        self.braid_type = braid_type
        self.n = n
        self.method = method
        self.output = output

    def _validate_params(self):
        if str(self.braid_type).lower() not in ("a", "b"):
            raise ValueError(f"braid_type must be 'a' or 'b', got {self.braid_type!r}")
        if self.method not in ("fast", "rewrite"):
            raise ValueError(f"method must be 'fast' or 'rewrite', got {self.method!r}")
        if self.output not in _OUTPUTS:
            raise ValueError(f"output must be one of {_OUTPUTS}, got {self.output!r}")
        if self.n is not None and (isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1):
            raise ValueError(f"n must be a positive int or None, got {self.n!r}")

    def fit(self, X, y=None):
        self._validate_params()
        words = check_words(X)
        n = self.n if self.n is not None else infer_rank(words, self.braid_type)
        self.spec_ = GroupSpec(str(self.braid_type), n)
        check_words(words, self.spec_)
        self.n_ = n
        return self

    def _normalize(self, word) -> CanonicalBraid:
        u = from_artin(self.spec_, word)
        if self.method == "rewrite":
            return normalize(self.spec_, u)[0]
        return normalize_fast(self.spec_, u)

    def _render(self, c: CanonicalBraid):
        if self.output == "artin":
            return evaluate(self.spec_, c)
        if self.output == "json":
            return c.to_json()
        if self.output == "text":
            return str(c)
        return c

    def transform(self, X):
        check_is_fitted(self, "spec_")
        return [self._render(self._normalize(w)) for w in check_words(X, self.spec_)]

    def inverse_transform(self, C):
        """Signed Artin words for canonical forms (any supported output form)."""
        check_is_fitted(self, "spec_")
        out = []
        for c in C:
            if isinstance(c, dict):
                c = CanonicalBraid.from_json(self.spec_, c)
            if isinstance(c, CanonicalBraid):
                out.append(evaluate(self.spec_, c))
            elif isinstance(c, (list, tuple)):
                out.append(check_words([c], self.spec_)[0])
            else:
                raise TypeError(f"cannot invert a row of type {type(c).__name__}")
        return out

    def __sklearn_tags__(self):
        tags = super().__sklearn_tags__()
        tags.input_tags.two_d_array = False
        tags.input_tags.string = True
        tags.requires_fit = True
        return tags
