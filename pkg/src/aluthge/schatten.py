"""Schatten p-norms and the commutator inequalities tied to the Aluthge transform.

The norm is ||M||_p = (sum of singular values^p)^(1/p) with p = inf
denoting the operator norm. The off-diagonal block embedding
[[0, A], [B, 0]] has p-th power norm equal to the sum of the two block
contributions, which is also the mechanism behind the two-operator
lower bound below.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import inf, sqrt
from typing import Any

import numpy as np

from .linalg import (
    DEFAULT_TOL,
    CheckReport,
    Tolerances,
    adjoint,
    as_matrix,
    as_square,
    fro_norm,
    min_hermitian_eigenvalue,
    op_norm,
    psd_power,
    singular_values,
)
from .polar import MODE_UNITARY, aluthge, polar_decompose

__all__ = [
    "InequalityReport",
    "schatten_norm",
    "block_embed",
    "block_identity_check",
    "aluthge_commutator_bound",
    "aluthge_intertwiner_bound",
    "exact_intertwiner_transfer",
    "approx_commutator_bound",
]


@dataclass(frozen=True)
class InequalityReport:
    """One evaluated norm inequality.

    ``slack`` is lhs - rhs as computed. The inequality is only asserted
    by callers when ``hypotheses_ok`` is true; ``a_value`` is the
    certified lower bound on the Hermitian part entering the constant.
    ``details`` carries check-specific diagnostics (block cross-check
    values, individual hypothesis flags).
    """

    lhs: float
    rhs: float
    slack: float
    hypotheses_ok: bool
    a_value: float
    p: float
    details: dict[str, Any] = field(default_factory=dict)


def _validate_p(p: float) -> float:
    p = float(p)
    if p != inf and p < 1.0:
        raise ValueError("p must be at least 1 (or inf)")
    return p


def _power_sum(s: np.ndarray, p: float) -> float:
    """Sum of singular values to the p-th power, scaled for stability."""
    if s.size == 0 or s[0] == 0.0:
        return 0.0
    top = float(s[0])
    return float(top**p * np.sum((s / top) ** p))


def schatten_norm(M, p: float) -> float:
    """Schatten p-norm of M; p = inf gives the operator norm."""
    p = _validate_p(p)
    s = singular_values(M)
    if p == inf:
        return float(s[0])
    if s[0] == 0.0:
        return 0.0
    return float(s[0] * np.sum((s / s[0]) ** p) ** (1.0 / p))


def block_embed(A, B) -> np.ndarray:
    """Off-diagonal block matrix [[0, A], [B, 0]]; must come out square."""
    A = as_matrix(A)
    B = as_matrix(B)
    m, n = A.shape
    k, l = B.shape
    if m + k != n + l:
        raise ValueError(f"blocks {A.shape} and {B.shape} do not form a square matrix")
    return np.block([[np.zeros((m, l)), A], [B, np.zeros((k, n))]])


def block_identity_check(A, B, p: float, tol: Tolerances = DEFAULT_TOL) -> CheckReport:
    """Verify the block norm identity for [[0, A], [B, 0]].

    For finite p the p-th power of the block norm equals the sum of the
    two block contributions; at p = inf it is the larger operator norm.
    Any p > 0 is accepted here (below 1 the power sum is a quasi-norm
    check). The residual is relative to the larger side.
    """
    if p != inf and p <= 0:
        raise ValueError("p must be positive (or inf)")
    Z = block_embed(A, B)
    if p == inf:
        lhs = op_norm(Z)
        rhs = max(op_norm(A), op_norm(B))
    else:
        # Zero singular values of the block are pure roundoff dust and would
        # dominate the comparison for p < 1; cut them on both sides alike.
        sz, sa, sb = singular_values(Z), singular_values(A), singular_values(B)
        cutoff = tol.rank_rel * max(sz[0], sa[0], sb[0])
        lhs = _power_sum(sz[sz > cutoff], p)
        rhs = _power_sum(sa[sa > cutoff], p) + _power_sum(sb[sb > cutoff], p)
    rel = abs(lhs - rhs) / max(lhs, rhs, np.finfo(float).tiny)
    return CheckReport(
        ok=bool(rel <= tol.residual_rel),
        max_residual=rel,
        threshold=tol.residual_rel,
        details={"lhs": lhs, "rhs": rhs, "p": p},
    )


def _polar_root(A: np.ndarray, tol: Tolerances) -> tuple[np.ndarray, np.ndarray, float]:
    """Angular part U, positive square root |A|^(1/2) and a = min eig Re(U |A|^(1/2))."""
    parts = polar_decompose(A, MODE_UNITARY, tol)
    root = psd_power(parts.positive, 0.5, tol)
    return parts.angular, root, min_hermitian_eigenvalue(parts.angular @ root)


def aluthge_commutator_bound(A, X, p: float, tol: Tolerances = DEFAULT_TOL) -> InequalityReport:
    """Lower bound on the transformed commutator of a self-adjoint X.

    Hypotheses: X self-adjoint, U* X = X U for the angular part U, and
    a = min eig Re(U |A|^(1/2)) strictly positive. Then with T the
    Aluthge transform of A,

        ||T* X - X T||_p  >=  2 a ||  |A|^(1/2) X - X |A|^(1/2) ||_p.

    Violated hypotheses produce hypotheses_ok = False rather than an
    error; the inequality is then not asserted.
    """
    A = as_square(A)
    X = as_square(X)
    if X.shape != A.shape:
        raise ValueError("X must have the same shape as A")
    p = _validate_p(p)
    U, root, a = _polar_root(A, tol)
    xn = fro_norm(X)
    self_adjoint = fro_norm(X - adjoint(X)) <= tol.residual_rel * max(xn, 1.0)
    commutes = fro_norm(adjoint(U) @ X - X @ U) <= tol.residual_rel * max(2.0 * xn, 1.0)
    hypotheses = bool(a > 0.0 and self_adjoint and commutes)
    T = aluthge(A, tol)
    lhs = schatten_norm(adjoint(T) @ X - X @ T, p)
    rhs = 2.0 * a * schatten_norm(root @ X - X @ root, p)
    return InequalityReport(
        lhs=lhs,
        rhs=rhs,
        slack=lhs - rhs,
        hypotheses_ok=hypotheses,
        a_value=float(a),
        p=p,
        details={"self_adjoint": bool(self_adjoint), "angular_commutes": bool(commutes)},
    )


def aluthge_intertwiner_bound(A, B, X, p: float, tol: Tolerances = DEFAULT_TOL) -> InequalityReport:
    """Two-operator lower bound with the block-embedding cross-check.

    Hypotheses: U* X = X V for the two angular parts, and both
    min eig Re(U |A|^(1/2)) and min eig Re(V |B|^(1/2)) at least some
    a > 0 (the certified a is the smaller of the two). Then

        ||T_A* X - X T_B||_p  >=  2 a ||  |A|^(1/2) X - X |B|^(1/2) ||_p.

    The same quantities are recomputed through the block embedding
    diag(A, B) against [[0, X], [X*, 0]] and reported in ``details`` as
    ``block_lhs`` / ``block_rhs``; both routes must agree.
    """
    A = as_square(A)
    B = as_square(B)
    X = as_matrix(X)
    n1, n2 = A.shape[0], B.shape[0]
    if X.shape != (n1, n2):
        raise ValueError("X must map the space of B into the space of A")
    p = _validate_p(p)
    U, root_a, a_left = _polar_root(A, tol)
    V, root_b, a_right = _polar_root(B, tol)
    a = min(a_left, a_right)
    xn = fro_norm(X)
    commutes = fro_norm(adjoint(U) @ X - X @ V) <= tol.residual_rel * max(2.0 * xn, 1.0)
    hypotheses = bool(a > 0.0 and commutes)
    Ta = aluthge(A, tol)
    Tb = aluthge(B, tol)
    lhs = schatten_norm(adjoint(Ta) @ X - X @ Tb, p)
    rhs = 2.0 * a * schatten_norm(root_a @ X - X @ root_b, p)

    T = np.zeros((n1 + n2, n1 + n2), dtype=complex)
    T[:n1, :n1] = A
    T[n1:, n1:] = B
    Y = np.zeros_like(T)
    Y[:n1, n1:] = X
    Y[n1:, :n1] = adjoint(X)
    Tt = aluthge(T, tol)
    root_t = psd_power(polar_decompose(T, MODE_UNITARY, tol).positive, 0.5, tol)
    num = schatten_norm(adjoint(Tt) @ Y - Y @ Tt, p)
    den = schatten_norm(root_t @ Y - Y @ root_t, p)
    if p == inf:
        block_lhs, block_rhs = num, 2.0 * a * den
    else:
        block_lhs = (num**p / 2.0) ** (1.0 / p)
        block_rhs = 2.0 * a * (den**p / 2.0) ** (1.0 / p)
    return InequalityReport(
        lhs=lhs,
        rhs=rhs,
        slack=lhs - rhs,
        hypotheses_ok=hypotheses,
        a_value=float(a),
        p=p,
        details={
            "a_left": float(a_left),
            "a_right": float(a_right),
            "angular_intertwines": bool(commutes),
            "block_lhs": float(block_lhs),
            "block_rhs": float(block_rhs),
        },
    )


def exact_intertwiner_transfer(A, B, X, tol: Tolerances = DEFAULT_TOL) -> CheckReport:
    """When the transformed relation holds exactly, the positive parts intertwine.

    Under the hypotheses of :func:`aluthge_intertwiner_bound` plus
    T_A* X = X T_B (within tolerance), it follows that |A| X = X |B| and
    that Y = |A| X satisfies A* Y = Y B. Hypothesis violations raise.
    """
    A = as_square(A)
    B = as_square(B)
    X = as_matrix(X)
    if X.shape != (A.shape[0], B.shape[0]):
        raise ValueError("X must map the space of B into the space of A")
    pa = polar_decompose(A, MODE_UNITARY, tol)
    pb = polar_decompose(B, MODE_UNITARY, tol)
    root_a = psd_power(pa.positive, 0.5, tol)
    root_b = psd_power(pb.positive, 0.5, tol)
    a = min(min_hermitian_eigenvalue(pa.angular @ root_a), min_hermitian_eigenvalue(pb.angular @ root_b))
    xn = fro_norm(X)
    if a <= 0.0:
        raise ValueError("hypothesis violated: Re(U |A|^(1/2)) and Re(V |B|^(1/2)) must be positive definite")
    if fro_norm(adjoint(pa.angular) @ X - X @ pb.angular) > tol.residual_rel * max(2.0 * xn, 1.0):
        raise ValueError("hypothesis violated: U* X = X V does not hold within tolerance")
    Ta = aluthge(A, tol)
    Tb = aluthge(B, tol)
    pre_thr = tol.residual_rel * max((op_norm(Ta) + op_norm(Tb)) * xn, 1.0)
    r_pre = fro_norm(adjoint(Ta) @ X - X @ Tb)
    if r_pre > pre_thr:
        raise ValueError("hypothesis violated: the transformed intertwining relation does not hold within tolerance")
    na, nb = op_norm(A), op_norm(B)
    r_pos = fro_norm(pa.positive @ X - X @ pb.positive)
    Y = pa.positive @ X
    r_adj = fro_norm(adjoint(A) @ Y - Y @ B)
    thr_pos = max((sqrt(na) + sqrt(nb)) / (2.0 * a) * pre_thr, tol.residual_rel * max((na + nb) * xn, 1.0))
    thr_adj = na * (thr_pos + tol.residual_rel * max(2.0 * xn, 1.0) * nb) + tol.residual_rel
    ok = bool(r_pos <= thr_pos and r_adj <= thr_adj)
    return CheckReport(
        ok=ok,
        max_residual=max(r_pos, r_adj),
        threshold=max(thr_pos, thr_adj),
        details={
            "positive_transfer_residual": r_pos,
            "adjoint_transfer_residual": r_adj,
            "positive_threshold": thr_pos,
            "adjoint_threshold": thr_adj,
            "a_value": float(a),
        },
    )


def approx_commutator_bound(A, X, delta: float, tol: Tolerances = DEFAULT_TOL) -> InequalityReport:
    """Upper bound on the transformed commutator of a near-commuting X.

    Requires X within delta (operator norm) of commuting with
    |A|^(1/2) and of satisfying U* X = X U; both memberships are
    verified and violations raise. Then with T the transform of A,

        ||T* X - X T||  <=  (2 ||A||^(1/2) + ||A||) delta.

    When a = min eig Re(U |A|^(1/2)) is positive the report also
    carries psi = bound / (2a), the induced commutator bound on
    |A|^(1/2) itself.
    """
    A = as_square(A)
    X = as_square(X)
    if X.shape != A.shape:
        raise ValueError("X must have the same shape as A")
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    U, root, a = _polar_root(A, tol)
    d_root = op_norm(root @ X - X @ root)
    d_angular = op_norm(adjoint(U) @ X - X @ U)
    if d_root > delta or d_angular > delta:
        raise ValueError("X is not within delta of the required commutants")
    T = aluthge(A, tol)
    lhs = op_norm(adjoint(T) @ X - X @ T)
    na = op_norm(A)
    rhs = (2.0 * sqrt(na) + na) * delta
    details: dict[str, Any] = {"delta": float(delta), "root_commutator": d_root, "angular_commutator": d_angular}
    if a > 0.0:
        details["psi"] = rhs / (2.0 * a)
    return InequalityReport(
        lhs=lhs,
        rhs=rhs,
        slack=lhs - rhs,
        hypotheses_ok=True,
        a_value=float(a),
        p=inf,
        details=details,
    )
