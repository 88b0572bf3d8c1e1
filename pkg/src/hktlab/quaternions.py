"""Quaternion arithmetic and the flat hypercomplex structure on R^{4n}.

Coordinates come in blocks of four, (x0, x1, x2, x3) ~ x0 + x1 i + x2 j + x3 k.
The three complex structures act on tangent vectors by LEFT multiplication by
i, j, k; holomorphic coordinates for the first one are z0 = x0 + sqrt(-1) x1,
z1 = x2 + sqrt(-1) x3 per block.

Component formulas work with any scalar type supporting ring arithmetic, so
connection coefficients built from them stay differentiable through duals.
"""

from __future__ import annotations

import numpy as np

# basis quaternions as component 4-tuples
UNITS = {
    "1": (1, 0, 0, 0),
    "i": (0, 1, 0, 0),
    "j": (0, 0, 1, 0),
    "k": (0, 0, 0, 1),
}


def quat_mul(a, b):
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def quat_conj(a):
    a0, a1, a2, a3 = a
    return (a0, -a1, -a2, -a3)


def quat_im(a):
    a0, a1, a2, a3 = a
    return (0 * a0, a1, a2, a3)


def quat_abs2(a):
    a0, a1, a2, a3 = a
    return a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3


def left_mult_matrix(unit: str) -> np.ndarray:
    """4x4 real matrix of b -> unit * b on components."""
    u = UNITS[unit]
    cols = []
    for c in range(4):
        e = [0, 0, 0, 0]
        e[c] = 1
        cols.append(quat_mul(u, tuple(e)))
    return np.array(cols, dtype=float).T


def right_mult_matrix(q) -> np.ndarray:
    """4x4 real matrix of b -> b * q on components."""
    cols = []
    for c in range(4):
        e = [0, 0, 0, 0]
        e[c] = 1
        cols.append(quat_mul(tuple(e), q))
    return np.array(cols, dtype=float).T


def hypercomplex_matrices(n: int) -> dict[str, np.ndarray]:
    """Block-diagonal tangent actions of I, J, K on R^{4n}."""
    out = {}
    for unit in ("i", "j", "k"):
        blk = left_mult_matrix(unit)
        mats = [blk] * n
        full = np.zeros((4 * n, 4 * n))
        for t in range(n):
            full[4 * t:4 * t + 4, 4 * t:4 * t + 4] = mats[t]
        out[{"i": "I", "j": "J", "k": "K"}[unit]] = full
    return out


def right_mult_c2(q):
    """b -> b * q on H = C^2, written in coordinates b = v0 + v1 j.

    The complex structure is left multiplication by i, under which right
    multiplications are the C-linear quaternionic-structure-preserving
    endomorphisms.  Returns a 2x2 row-major nested list so dual-number
    components pass through.
    """
    q0, q1, q2, q3 = q
    return [
        [q0 + 1j * q1, -q2 + 1j * q3],
        [q2 + 1j * q3, q0 - 1j * q1],
    ]


def fiber_j_matrix() -> np.ndarray:
    """Matrix M of the antilinear map v -> M conj(v) given by left j on H."""
    return np.array([[0.0, -1.0], [1.0, 0.0]], dtype=complex)
