"""Reference closed forms used as independent oracles.

Nothing in the computational path calls these; the verification suites and
the tests compare the engine's output against them.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb

F = Fraction


def spinor_curv(n: int) -> Fraction:
    """``n(n-1)/8``, the scalar-curvature term for spinors on the unit sphere."""
    return F(n * (n - 1), 8)


# Laplacian eigenvalues --------------------------------------------------------


def spinor_laplacian(n: int, j: int, k: int, s: int) -> Fraction:
    return (j + k + F(n, 2)) ** 2 + s * (s + n - 2) - spinor_curv(n)


def sym_laplacian(n: int, j: int, k: int, s: int) -> Fraction:
    return F((k + j) * (k + j + n - 1) + s * (n + s - 3))


def form_laplacian(n: int, j: int, k: int, up: bool) -> Fraction:
    if up:
        return F((k + j + 1) * (n + k - j))
    return F((k + j) * (n - j + k + 1))


def spinor_form_laplacian(n: int, j: int, k: int, up: bool) -> Fraction:
    if up:
        return F((k + j + 1) * (n - j + k + 1)) + F(n * (n + 1), 8)
    return F((k + j) * (n - j + k + 2)) + F(n * (n + 1), 8)


# dimensions ------------------------------------------------------------------


def spinor_fiber_dim(n: int, j: int) -> int:
    """dim W_j = 2^[n/2] C(n+j-2, j) (both halves for even n)."""
    return 2 ** (n // 2) * comb(n + j - 2, j)


def dirac_multiplicity(n: int, k: int) -> int:
    """Multiplicity of each sign of the Dirac eigenvalue +-(k + n/2)."""
    return 2 ** (n // 2) * comb(k + n - 1, k)


def spinor_member_dim(n: int, j: int, k: int, s: int) -> Fraction:
    """dim V_j(k,s)' (both signs on odd n, one copy on even n), l = k + j."""
    l = k + j
    return (
        2 ** ((n + 1) // 2)
        * F((l + n - 1 + s) * (l + 1 - s), (n - 1) * (n - 2))
        * comb(l + n - 2, l + 1)
        * comb(s + n - 3, s)
    )


def sym_member_dim(n: int, j: int, k: int, s: int) -> Fraction:
    """dim V_j(k,s), l = k + j; valid for n >= 4."""
    l = k + j
    return F(
        (2 * l + n - 1) * (2 * s + n - 3) * (l + n - 2 + s) * (l + 1 - s),
        (n - 1) * (n - 2) * (s + n - 3) * (l + n - 2),
    ) * comb(l + n - 2, l + 1) * comb(s + n - 3, s)


# Weitzenboeck coefficients ---------------------------------------------------


def wf1(n: int, j: int):
    """Delta = a D~^2 + b (T~-)*T~- + const on S_j."""
    return (
        F((n + 2 * j) * (n - 2), n + 2 * j - 2),
        F(4 * (n + j - 2), n + 2 * j - 2),
        F(j * (n + j - 2)) - spinor_curv(n),
    )


def wf2(n: int, j: int):
    """Delta = a (T~+)*T~+ + b D~^2 + const on S_j (the second formula at spin j)."""
    return (
        F(4 * (j + 1), n + 2 * j),
        F((n + 2 * j - 2) * (n - 2), n + 2 * j),
        F((j + 1) * (n + j - 1)) - spinor_curv(n),
    )


def sym_weitzenboeck(n: int, j: int):
    """Delta = a (T+)*T+ + b (T-)*T- + const on Sym_0^j."""
    return F(j + 1), F(-(n + j - 3)), F(2 * j * (n + j - 2))


def sym_relative_ratio(n: int, j: int) -> Fraction:
    """(T_{j+1}^-)*T_{j+1}^- = ratio * T_j^+ (T_j^+)*."""
    return F((j + 1) * (n + 2 * j - 2), (n + j - 2) * (n + 2 * j))


def estimate_lines(n: int, j: int) -> dict:
    """The three spinor-form identities, keyed by the pair of kept gradients.

    Lines whose coefficients have a vanishing denominator are omitted.
    """
    out = {}
    if n - 2 * j + 2 != 0:
        out[("D", "Tminus")] = (
            F((n + 2) * (n - 2 * j), n - 2 * j + 2),
            F(4 * (n - 2 * j + 1) * (n - j + 2), (n - 2 * j + 3) * (n - 2 * j + 2)),
            F(j * (n - j)) - spinor_curv(n),
        )
    if (n - 2 * j - 1) * (n - 2 * j) != 0:
        out[("Tplus", "D")] = (
            F(-4 * (n - 2 * j + 1) * (j + 1), (n - 2 * j - 1) * (n - 2 * j)),
            F((n - 2 * j + 2) * (n + 2), n - 2 * j),
            F((j - 1) * (n - j + 1)) - spinor_curv(n),
        )
        out[("U", "Tplus")] = (
            F((n - j + 2) * (n + 2), (n - j + 1) * (n + 1)),
            F((n - 2 * j) * (n - 2 * j + 1), (n - 2 * j - 1) * (n - j + 1)),
            F(j * (n - j + 2)) + F(n * (n + 1), 8),
        )
    return out


def spinor_form_curvature(n: int, j: int) -> Fraction:
    """Half the curvature action on E_j."""
    return F(j * (n - j + 1)) + spinor_curv(n)


# normalizations --------------------------------------------------------------


def spinor_normalization_sq(op: str, n: int, j: int) -> Fraction:
    if op == "D":
        return F((n + 2 * j) * (n - 2), n + 2 * j - 2)
    if op == "Tplus":
        return F(4 * (j + 1), n + 2 * j)
    if op == "Tminus":
        return F(4 * (n + j - 2), n + 2 * j - 2)
    raise KeyError(op)


def spinor_form_normalization_sq(op: str, n: int, j: int) -> Fraction:
    if op == "D":
        return F((n + 2) * (n - 2 * j), n - 2 * j + 2)
    if op == "Tminus":
        return F(4 * (n - 2 * j + 1) * (n - j + 2), (n - 2 * j + 3) * (n - 2 * j + 2))
    if op == "Tplus":
        return F(4 * (j + 1), n - 2 * j)
    raise KeyError(op)


# conformal weights on the spinor family ---------------------------------------


def spinor_conformal_weights(n: int, j: int) -> dict:
    return {"Tplus": F(2 * j + 1, 2), "U": F(-1, 2), "D": F(1 - n, 2), "Tminus": F(3 - 2 * n - 2 * j, 2)}


def spinor_relative_dims(n: int, j: int) -> dict:
    return {
        "Tplus": F(n + j - 1, j + 1),
        "U": F((n - 3) * (n + j - 1) * j, (n + j - 2) * (j + 1)),
        "D": F(1),
        "Tminus": F(j, n + j - 2),
    }
