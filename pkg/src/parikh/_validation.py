"""Input checks shared by the estimator wrappers."""
from __future__ import annotations

from numbers import Integral

import numpy as np

from .automata import Nfa
from .geometry import SemilinearBasis
from .normalform import EXACT, NormalizeMode


def check_vectors(X, dim=None, name: str = "X") -> list:
    """Rows of ``X`` as tuples of Python ints.

    Accepts nested lists or integer / object numpy arrays, so entries beyond
    64 bits pass through untouched. Floats are rejected rather than rounded.
    """
    if isinstance(X, np.ndarray):
        if X.dtype.kind not in "iuO":
            raise TypeError(f"{name} must hold integers, got dtype {X.dtype}")
        if X.ndim != 2:
            raise ValueError(f"{name} must be 2-dimensional; wrap a single vector as [v]")
        rows = X.tolist()
    else:
        rows = list(X)
    if any(isinstance(r, (Integral, str)) for r in rows):
        raise ValueError(f"{name} must be 2-dimensional; wrap a single vector as [v]")
    rows = [list(r) for r in rows]
    out = []
    for i, r in enumerate(rows):
        for x in r:
            if isinstance(x, bool) or not isinstance(x, Integral):
                raise TypeError(f"{name}[{i}] holds a non-integer entry {x!r}")
        out.append(tuple(int(x) for x in r))
    widths = {len(r) for r in out}
    if len(widths) > 1:
        raise ValueError(f"{name} rows have different lengths {sorted(widths)}")
    if dim is not None and widths and widths != {dim}:
        raise ValueError(f"{name} has {widths.pop()} features, expected {dim}")
    if widths == {0}:
        raise ValueError(f"{name} rows must be nonempty")
    return out


def check_nfa(A) -> Nfa:
    if not isinstance(A, Nfa):
        raise TypeError(f"expected an Nfa, got {type(A).__name__}")
    return A


def check_basis(B) -> SemilinearBasis:
    if not isinstance(B, SemilinearBasis):
        raise TypeError(f"expected a SemilinearBasis, got {type(B).__name__}")
    return B


def check_mode(bound) -> NormalizeMode:
    if bound is None:
        return EXACT
    if isinstance(bound, bool) or not isinstance(bound, Integral) or bound < 0:
        raise ValueError(f"bound must be a nonnegative integer or None, got {bound!r}")
    return NormalizeMode.bounded(int(bound))
