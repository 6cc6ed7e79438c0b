"""scikit-learn style wrappers.

Fitting does the expensive one-off work (building a Parikh image,
normalizing a cone); ``predict`` then answers one membership query per row.
Rows may be object arrays or lists so that huge entries stay exact.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_basis, check_mode, check_nfa, check_vectors
from .automata import NORMALIZATIONS, parikh_image
from .decision import IpInstance, ip_feasible, nfa_member, semilinear_member
from .geometry import GeneratorSet
from .normalform import cone_normal_form, normalize_semilinear


class ParikhImage(BaseEstimator):
    """Membership in the Parikh image of a fitted automaton.

    ``normalize`` and ``bound`` control the stored ``basis_``; queries go
    through ``nfa_member`` with the given ``strategy``.
    """

    def __init__(self, normalize="off", bound=None, strategy="auto"):
        self.normalize = normalize
        self.bound = bound
        self.strategy = strategy

    def fit(self, X, y=None):
        A = check_nfa(X)
        if self.normalize not in NORMALIZATIONS:
            raise ValueError(f"normalize must be one of {NORMALIZATIONS}")
        self.mode_ = check_mode(self.bound)
        self.nfa_ = A
        self.basis_ = parikh_image(A, self.normalize, self.mode_)
        self.n_features_in_ = A.k
        return self

    def predict(self, X):
        check_is_fitted(self, "basis_")
        rows = check_vectors(X, self.n_features_in_)
        mode = None if self.bound is None else self.mode_
        return np.array([nfa_member(self.nfa_, b, self.strategy, mode) for b in rows], dtype=bool)


class ConeMembership(BaseEstimator):
    """Integer cone of the fitted rows; ``predict`` decides ``b`` in cone_N(rows).

    Fitting normalizes the cone once. ``solve`` also returns nonnegative
    coefficients over the fitted rows.
    """

    def __init__(self, bound=None):
        self.bound = bound

    def fit(self, X, y=None):
        rows = check_vectors(X)
        if not rows:
            raise ValueError("need at least one generator row")
        self.mode_ = check_mode(self.bound)
        self.generators_ = tuple(rows)
        self.n_features_in_ = len(rows[0])
        nonzero = [r for r in rows if any(r)]
        self.normal_form_ = cone_normal_form(GeneratorSet(nonzero), self.mode_) if nonzero else None
        return self

    def solve(self, X) -> list:
        check_is_fitted(self, "generators_")
        rows = check_vectors(X, self.n_features_in_)
        matrix = tuple(zip(*self.generators_))
        return [ip_feasible(IpInstance(matrix, b), self.mode_) for b in rows]

    def predict(self, X):
        return np.array([r.feasible for r in self.solve(X)], dtype=bool)


class SemilinearNormalizer(TransformerMixin, BaseEstimator):
    """Rewrite a semilinear basis so every generator set is independent."""

    def __init__(self, bound=None):
        self.bound = bound

    def fit(self, X, y=None):
        B = check_basis(X)
        self.mode_ = check_mode(self.bound)
        self.n_features_in_ = B.dim
        return self

    def transform(self, X):
        check_is_fitted(self, "mode_")
        B = check_basis(X)
        if B.dim != self.n_features_in_:
            raise ValueError(f"basis has dimension {B.dim}, expected {self.n_features_in_}")
        return normalize_semilinear(B, self.mode_)

    def contains(self, B, X):
        """Membership of each row of ``X`` in the set denoted by ``B``."""
        check_is_fitted(self, "mode_")
        rows = check_vectors(X, check_basis(B).dim)
        return np.array([semilinear_member(b, B, self.mode_) for b in rows], dtype=bool)
