"""
Radial multipliers T_w -> r^{|w|} T_w and the Kraus form of their
restriction to a single generator algebra span{1, T_s}.
"""
from fractions import Fraction
from typing import Iterable, Tuple

import numpy as np

from modules.coxeter import PreconditionError
from modules.hecke import HeckeElement, PolyScalar, p_value


def _exact(r) -> Fraction:
    return r if isinstance(r, Fraction) else Fraction(str(r))


def radial_multiplier(r, a: HeckeElement) -> HeckeElement:
    """
    Phi_r(a) with r in (0, 1]. Floats are read through their decimal repr so
    that Phi_0.5 scales by exactly 1/2 per letter.
    """
    r = _exact(r)
    if not 0 < r <= 1:
        raise PreconditionError(f"Radial parameter must lie in (0, 1], got {r}")
    return HeckeElement(a.graph, {w: c * PolyScalar.constant(r ** len(w)) for w, c in a.terms.items()})


def kraus_matrices(r: float) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    if not 0 < r < 1:
        raise PreconditionError(f"Kraus form needs 0 < r < 1, got {r}")
    a = np.array([[np.sqrt(1 - r), 0.0], [0.0, 0.0]])
    b = np.array([[0.0, np.sqrt(1 - r)], [0.0, 0.0]])
    c = np.sqrt(r) * np.eye(2)
    return a, b, c


def generator_matrix(q: float) -> np.ndarray:
    """Left multiplication by T_s on the basis (1, T_s)."""
    return np.array([[0.0, 1.0], [1.0, p_value(q)]])


def kraus_check(r: float, q: float = 1.0, tol: float = 1e-12) -> bool:
    """
    Checks A*A + B*B + C*C = I and that x -> A*xA + B*xB + C*xC sends
    1 -> 1 and T_s -> r T_s in the matrix picture at q.
    """
    a, b, c = kraus_matrices(r)
    identity = np.eye(2)
    if not np.allclose(a.T @ a + b.T @ b + c.T @ c, identity, atol=tol):
        return False
    ts = generator_matrix(q)
    for x, expected in ((identity, identity), (ts, r * ts)):
        image = a.T @ x @ a + b.T @ x @ b + c.T @ x @ c
        if not np.allclose(image, expected, atol=tol):
            return False
    return True


def kraus_grid(points: int = 99, qs: Iterable[float] = (1.0, 2.0), tol: float = 1e-12):
    """(r, q) pairs on an even grid of (0, 1) where kraus_check fails."""
    return [(r, q) for q in qs for r in np.linspace(0, 1, points + 2)[1:-1] if not kraus_check(float(r), q, tol)]
