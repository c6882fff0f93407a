"""CSS quantum code parameters from binary self-orthogonal codes."""

from __future__ import annotations

from dataclasses import dataclass

from .code import (
    DEFAULT_MINDIST_LIMIT_K,
    LinearCode,
    dual,
    is_self_orthogonal_oracle,
    min_distance,
    min_weight_outside,
)
from .gf2 import in_row_space

DEFAULT_MAX_DUAL_DIM = 24


class QuantumError(ValueError):
    pass


class NotSelfOrthogonalError(QuantumError):
    pass


class DualTooLargeError(QuantumError):
    pass


class HypothesisViolatedError(QuantumError):
    """The distance of the CSS code is not the dual distance for this input."""


@dataclass(frozen=True)
class QuantumParams:
    n: int
    k_q: int
    d_q: int
    source_k: int
    source_d: int
    source: str = ""

    def __str__(self) -> str:
        return f"[[{self.n},{self.k_q},{self.d_q}]]"

    def to_dict(self) -> dict:
        return {
            "d_q": self.d_q,
            "k_q": self.k_q,
            "n": self.n,
            "source": {"d": self.source_d, "k": self.source_k, "name": self.source},
        }


def css_params(code: LinearCode, max_dual_dim: int = DEFAULT_MAX_DUAL_DIM) -> QuantumParams:
    """[[n, n - 2k, d(C^perp)]] for a self-orthogonal [n, k] code C.

    The CSS distance is the least weight in C^perp \\ C. That set is
    enumerated exactly and must reach d(C^perp); otherwise (a self-dual C, or
    every minimum-weight word of C^perp lying in C) HypothesisViolatedError
    is raised with both numbers.
    """
    n, k = code.length, code.dimension
    if k == 0:
        raise QuantumError("the zero code does not define a CSS code")
    if not is_self_orthogonal_oracle(code):
        raise NotSelfOrthogonalError("code is not self-orthogonal")
    if n - k > max_dual_dim:
        raise DualTooLargeError(f"dual dimension {n - k} exceeds limit {max_dual_dim}")
    perp = dual(code)
    d_dual = min_distance(perp, max(max_dual_dim, DEFAULT_MINDIST_LIMIT_K))
    d_code = min_distance(code)
    outside = min_weight_outside(perp.generator, code.generator, max(max_dual_dim, DEFAULT_MINDIST_LIMIT_K))
    if outside is None:
        raise HypothesisViolatedError("C is self-dual: C^perp \\ C is empty")
    if outside != d_dual:
        raise HypothesisViolatedError(
            f"least weight in C^perp \\ C is {outside} but d(C^perp) = {d_dual} (d(C) = {d_code})"
        )
    return QuantumParams(n, n - 2 * k, d_dual, k, d_code, code.name)


def css_params_nested(
    inner: LinearCode, outer: LinearCode, max_dim: int = DEFAULT_MAX_DUAL_DIM
) -> QuantumParams:
    """[[n, k2 - k1, d]] from C1 ⊆ C2 with d = min(dist(C2 \\ C1), dist(C1^perp \\ C2^perp))."""
    n = inner.length
    if outer.length != n:
        raise QuantumError("codes have different lengths")
    k1, k2 = inner.dimension, outer.dimension
    basis = inner.basis()
    if not all(in_row_space(basis.row(i), outer.generator) for i in range(basis.rows)):
        raise QuantumError("inner code is not contained in outer code")
    if k2 == k1:
        raise QuantumError("codes are equal; no logical qubits")
    if k2 > max_dim or n - k1 > max_dim:
        raise DualTooLargeError(f"enumeration dimension exceeds limit {max_dim}")
    limit = max(max_dim, DEFAULT_MINDIST_LIMIT_K)
    first = min_weight_outside(outer.generator, inner.generator, limit)
    second = min_weight_outside(dual(inner).generator, dual(outer).generator, limit)
    d = min(first, second)
    d_inner = min_distance(inner) if k1 else 0
    return QuantumParams(n, k2 - k1, d, k1, d_inner, inner.name)
