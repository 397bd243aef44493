"""Polar decompositions and the |A|^s U |A|^t transform family.

A square matrix factors as A = U|A| with |A| = (A*A)^(1/2) positive
semidefinite. Two conventions for the angular part are supported: a
full unitary extension, and the canonical partial isometry vanishing on
ker|A|. The Aluthge transform |A|^(1/2) U |A|^(1/2), its (s,t) variant
and its iterates are built on top.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import (
    DEFAULT_TOL,
    CheckReport,
    Tolerances,
    adjoint,
    as_square,
    hermitian_part,
    op_norm,
    spectral_radius,
)

__all__ = [
    "MODE_UNITARY",
    "MODE_PARTIAL",
    "PolarParts",
    "AluthgeTrajectory",
    "polar_decompose",
    "aluthge",
    "aluthge_st",
    "aluthge_iterate",
    "product_polar_check",
    "involution_angular_check",
]

MODE_UNITARY = "unitary_extension"
MODE_PARTIAL = "partial_isometry"


@dataclass(frozen=True)
class PolarParts:
    """Result of a polar decomposition A = angular @ positive.

    ``positive`` is Hermitian PSD; ``angular`` is unitary in
    ``unitary_extension`` mode and the canonical partial isometry
    (initial space = range(positive)) in ``partial_isometry`` mode.
    ``rank`` counts singular values kept by the relative cutoff.
    """

    angular: np.ndarray
    positive: np.ndarray
    mode: str
    rank: int


@dataclass(frozen=True)
class AluthgeTrajectory:
    """Iterated transforms of a matrix together with norm diagnostics.

    ``iterates[0]`` is the input itself, ``iterates[k]`` its k-fold
    transform; ``norms`` are the matching operator norms and ``radius``
    the spectral radius of the input (the lower limit of the norms).
    """

    iterates: list[np.ndarray]
    norms: list[float]
    radius: float


def polar_decompose(A, mode: str = MODE_UNITARY, tol: Tolerances = DEFAULT_TOL) -> PolarParts:
    """Polar decomposition of a square matrix via the SVD.

    With A = W diag(s) Q*, the positive part is Q diag(s) Q*. The
    angular part is W Q* (unitary mode) or W R Q* where R keeps only
    singular values above ``rank_rel`` times the largest (partial
    isometry mode). For singular A the unitary extension is fixed
    deterministically by the computed SVD factors; only its action on
    range(positive) is contractual.
    """
    A = as_square(A)
    if mode not in (MODE_UNITARY, MODE_PARTIAL):
        raise ValueError(f"unknown polar mode {mode!r}")
    W, s, Qh = np.linalg.svd(A)
    Q = Qh.conj().T
    positive = hermitian_part(Q @ (s[:, None] * Qh))
    smax = float(s[0]) if s.size else 0.0
    keep = s > tol.rank_rel * smax
    rank = int(np.count_nonzero(keep))
    if mode == MODE_UNITARY:
        angular = W @ Qh
    else:
        angular = (W * keep) @ Qh
    return PolarParts(angular=angular, positive=positive, mode=mode, rank=rank)


def aluthge_st(A, s: float, t: float, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """(s,t) transform |A|^s U |A|^t with s, t > 0.

    Singular values below the rank cutoff are treated as exact zeros, so
    the result does not depend on how the angular part is extended to
    ker|A|. The boundary s = 0 or t = 0 is rejected: |A|^0 is
    convention-dependent for singular A.
    """
    A = as_square(A)
    if s <= 0 or t <= 0:
        raise ValueError("exponents s and t must be positive")
    W, sv, Qh = np.linalg.svd(A)
    Q = Qh.conj().T
    smax = float(sv[0]) if sv.size else 0.0
    sv = np.where(sv > tol.rank_rel * smax, sv, 0.0)
    left = Q @ (np.power(sv, s)[:, None] * Qh)
    right = Q @ (np.power(sv, t)[:, None] * Qh)
    return left @ (W @ Qh) @ right


def aluthge(A, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Aluthge transform |A|^(1/2) U |A|^(1/2)."""
    return aluthge_st(A, 0.5, 0.5, tol)


def aluthge_iterate(A, n: int, tol: Tolerances = DEFAULT_TOL) -> AluthgeTrajectory:
    """First n iterated transforms of A with their operator norms.

    The norm sequence is nonincreasing and bounded below by the
    spectral radius of A.
    """
    A = as_square(A)
    if n < 1:
        raise ValueError("iteration count n must be at least 1")
    iterates = [A]
    for _ in range(n):
        iterates.append(aluthge(iterates[-1], tol))
    norms = [op_norm(M) for M in iterates]
    return AluthgeTrajectory(iterates=iterates, norms=norms, radius=spectral_radius(A))


def product_polar_check(T, S, tol: Tolerances = DEFAULT_TOL) -> CheckReport:
    """Verify the polar decomposition of a product.

    With T = U|T|, S = V|S| and |T||S*| = W ||T||S*|| (all canonical
    partial isometries), the product UWV together with |TS| from the
    direct polar decomposition of TS must reconstruct TS, and
    (UWV)* TS must reproduce |TS|. Residuals are measured in operator
    norm against ``residual_rel * ||T|| * ||S||``.
    """
    T = as_square(T)
    S = as_square(S)
    if T.shape != S.shape:
        raise ValueError(f"shape mismatch: {T.shape} vs {S.shape}")
    pT = polar_decompose(T, MODE_PARTIAL, tol)
    pS = polar_decompose(S, MODE_PARTIAL, tol)
    abs_s_star = polar_decompose(adjoint(S), MODE_PARTIAL, tol).positive
    W = polar_decompose(pT.positive @ abs_s_star, MODE_PARTIAL, tol).angular
    prod = T @ S
    pos_prod = polar_decompose(prod, MODE_PARTIAL, tol).positive
    uwv = pT.angular @ W @ pS.angular
    r_reconstruct = op_norm(uwv @ pos_prod - prod)
    r_positive = op_norm(adjoint(uwv) @ prod - pos_prod)
    scale = op_norm(T) * op_norm(S)
    threshold = tol.residual_rel * scale
    worst = max(r_reconstruct, r_positive)
    return CheckReport(
        ok=bool(worst <= threshold),
        max_residual=worst,
        threshold=threshold,
        details={"reconstruction": r_reconstruct, "positive_match": r_positive},
    )


def involution_angular_check(A, tol: Tolerances = DEFAULT_TOL) -> CheckReport:
    """For A with A^2 = I, verify that the angular part satisfies U^2 = I.

    Raises ValueError if A does not square to the identity within
    tolerance; the claim is conditional on that hypothesis.
    """
    A = as_square(A)
    eye = np.eye(A.shape[0])
    r_involution = op_norm(A @ A - eye)
    if r_involution > tol.residual_rel * max(1.0, op_norm(A) ** 2):
        raise ValueError("input does not square to the identity within tolerance")
    U = polar_decompose(A, MODE_UNITARY, tol).angular
    residual = op_norm(U @ U - eye)
    return CheckReport(
        ok=bool(residual <= tol.residual_rel),
        max_residual=residual,
        threshold=tol.residual_rel,
        details={"involution_residual": r_involution},
    )
