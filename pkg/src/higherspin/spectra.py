"""Exact eigenvalues of the natural operators on each isotypic summand.

Every operator here commutes with Spin(n+1), so it acts on a family member
by a single rational number.  The Laplacian comes from the Casimir of the
parent weight; the first-order gradients come from closed formulas.  All
values are for curvature ``c = 1`` and scale linearly in ``c``.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable

from .branching import (
    BundleDescriptor,
    Family,
    FamilyMember,
    frobenius_decompose,
)
from .errors import NotApplicable
from .rep_core import RationalLike, as_rational, casimir


class OperatorKind(Enum):
    LAPLACIAN = "lap"
    DIRAC_SQ = "D2"
    TPLUS = "Tplus"      # (T+)* T+
    TMINUS = "Tminus"    # (T-)* T-
    U = "U"              # U* U
    DSTAR_D = "dstard"   # d* d
    D_DSTAR = "ddstar"   # d d*
    C = "C"              # C* C

    @classmethod
    def parse(cls, name: str) -> "OperatorKind":
        for op in cls:
            if name in (op.value, op.name, op.name.lower()):
                return op
        raise ValueError(f"unknown operator {name!r}; choose from {', '.join(o.value for o in cls)}")


_SPINOR_OPS = (OperatorKind.LAPLACIAN, OperatorKind.DIRAC_SQ, OperatorKind.TPLUS, OperatorKind.TMINUS, OperatorKind.U)
_SYM_OPS = (OperatorKind.LAPLACIAN, OperatorKind.TPLUS, OperatorKind.TMINUS, OperatorKind.U)
_FORM_OPS = (OperatorKind.LAPLACIAN, OperatorKind.D_DSTAR, OperatorKind.DSTAR_D, OperatorKind.C)

APPLICABLE = {
    Family.SPINOR_SPHERE: _SPINOR_OPS,
    Family.SYM_SPHERE: _SYM_OPS,
    Family.FORM_UP: _FORM_OPS,
    Family.FORM_DOWN: _FORM_OPS,
    Family.SPINOR_FORM_UP: _SPINOR_OPS,
    Family.SPINOR_FORM_DOWN: _SPINOR_OPS,
}

# adjoint squares, i.e. everything but the Laplacian
ADJOINT_SQUARES = tuple(op for op in OperatorKind if op is not OperatorKind.LAPLACIAN)


def applicable_ops(family: Family) -> tuple:
    return APPLICABLE[family]


def is_absent(op: OperatorKind, family: Family, n: int, j: int) -> bool:
    """True where the operator is defined to be zero (no target bundle)."""
    if family is Family.SPINOR_SPHERE:
        return (op is OperatorKind.TMINUS and j == 0) or (op is OperatorKind.U and j == 0)
    if family is Family.SYM_SPHERE:
        return op in (OperatorKind.TMINUS, OperatorKind.U) and j == 0
    if family in (Family.SPINOR_FORM_UP, Family.SPINOR_FORM_DOWN):
        if op is OperatorKind.DIRAC_SQ:
            return n == 2 * j
        if op is OperatorKind.TPLUS:
            return n == 2 * j or n == 2 * j + 1
    return False


def laplacian_ev(member: FamilyMember, c: RationalLike = 1) -> Fraction:
    """Casimir of the parent weight (the same for both signs of a pair)."""
    return as_rational(c) * casimir(member.parents[0])


F = Fraction


def _spinor(op: OperatorKind, n: int, j: int, k: int, s: int) -> Fraction:
    if op is OperatorKind.DIRAC_SQ:
        return F(n + 2 * s - 2, n + 2 * j - 2) ** 2 * (j + k + F(n, 2)) ** 2
    if op is OperatorKind.TPLUS:
        return F(k * (j - s + 1) * (2 * j + k + n) * (j + s + n - 1)) / (j + F(n, 2)) ** 2
    if op is OperatorKind.TMINUS:
        return F((k + 1) * (j - s) * (2 * j + k + n - 1) * (j + s + n - 2)) / (j + F(n, 2) - 1) ** 2
    if op is OperatorKind.U:
        return F((n - 3) * s * (j + k + 1) * (n + s - 2) * (j + k + n - 1), (n - 2) * (j + 1) * (j + n - 2))
    raise AssertionError(op)


def _sym(op: OperatorKind, n: int, j: int, k: int, s: int, extrapolate_n3: bool) -> Fraction:
    if op is OperatorKind.TPLUS:
        return F(k * (n + k + 2 * j - 1) * (j - s + 1) * (n + j + s - 2), (j + 1) * (n + 2 * j - 2))
    if op is OperatorKind.TMINUS:
        return F((j - s) * (k + 1) * (n + k + 2 * j - 2) * (n + j + s - 3), (n + j - 3) * (n + 2 * j - 2))
    if op is OperatorKind.U:
        if n == 3 and not extrapolate_n3:
            raise NotApplicable(
                "U*U on trace-free symmetric tensors over S^3 is not an elliptic gradient; "
                "pass extrapolate_n3=True to evaluate the formula anyway"
            )
        return F(s * (k + j + 1) * (n + s - 3) * (n + k + j - 2), (j + 1) * (n + j - 3))
    raise AssertionError(op)


def _form(op: OperatorKind, up: bool, n: int, j: int, k: int, lap: Fraction) -> Fraction:
    if op is OperatorKind.D_DSTAR:
        return F(0) if up else lap
    if op is OperatorKind.DSTAR_D:
        return lap if up else F(0)
    if op is OperatorKind.C:
        ratio = F(j, j + 1) if up else F(n - j, n - j + 1)
        return ratio * k * (n + k + 1)
    raise AssertionError(op)


def _spinor_form(op: OperatorKind, up: bool, n: int, j: int, k: int) -> Fraction:
    if op is OperatorKind.DIRAC_SQ:
        base = (F(n, 2) + k + 1) ** 2
        return base if up else F(n - 2 * j, n - 2 * j + 2) ** 2 * base
    if op is OperatorKind.TMINUS:
        if up:
            return F(0)
        return F(4 * (n - 2 * j + 1) * (k + j) * (n - j + k + 2), (n - 2 * j + 2) ** 2)
    if op is OperatorKind.TPLUS:
        if not up:
            return F(0)
        return F(4 * (n - 2 * j - 1) * (n - j + k + 1) * (k + j + 1), (n - 2 * j) ** 2)
    if op is OperatorKind.U:
        ratio = F((n + 1) * j, (n + 2) * (j + 1)) if up else F((n + 1) * (n - j + 1), (n + 2) * (n - j + 2))
        return ratio * k * (n + k + 2)
    raise AssertionError(op)


def operator_ev(
    op: OperatorKind,
    member: FamilyMember,
    c: RationalLike = 1,
    extrapolate_n3: bool = False,
) -> Fraction:
    """Eigenvalue of ``op`` on ``member``.

    Operators with no target bundle (``U_0``, ``T_0^-``, ``T^+`` in top
    degree, ``D`` on ``E_m`` over ``S^{2m}``) give 0 without evaluating a
    formula that could divide by zero.
    """
    op = OperatorKind(op)
    fam = member.family
    if op not in APPLICABLE[fam]:
        raise NotApplicable(f"{op.value} is not defined on the {fam.value} family")
    c = as_rational(c)
    if op is OperatorKind.LAPLACIAN:
        return laplacian_ev(member, c)
    n, j, k, s = member.n, member.j, member.k, member.s
    if is_absent(op, fam, n, j):
        return F(0)
    if fam is Family.SPINOR_SPHERE:
        value = _spinor(op, n, j, k, s)
    elif fam is Family.SYM_SPHERE:
        value = _sym(op, n, j, k, s, extrapolate_n3)
    elif fam in (Family.FORM_UP, Family.FORM_DOWN):
        value = _form(op, fam is Family.FORM_UP, n, j, k, laplacian_ev(member))
    else:
        value = _spinor_form(op, fam is Family.SPINOR_FORM_UP, n, j, k)
    return c * value


# ---------------------------------------------------------------------------
# kernels


def _spinor_kernel(op, m: FamilyMember) -> bool:
    if op is OperatorKind.TPLUS:
        return m.k == 0
    if op is OperatorKind.TMINUS:
        return m.s == m.j
    if op is OperatorKind.U:
        return m.s == 0 or m.n == 3
    return False  # D^2 is invertible on the round sphere


def _sym_kernel(op, m: FamilyMember) -> bool:
    if op is OperatorKind.TPLUS:
        return m.k == 0
    if op is OperatorKind.TMINUS:
        return m.s == m.j
    return m.s == 0


def _form_kernel(op, m: FamilyMember) -> bool:
    up = m.family is Family.FORM_UP
    if op is OperatorKind.DSTAR_D:
        return not up
    if op is OperatorKind.D_DSTAR:
        return up or m.j == 0  # constants are the whole j = 0 closed part
    return m.k == 0 or (up and m.j == 0)


def _spinor_form_kernel(op, m: FamilyMember) -> bool:
    up = m.family is Family.SPINOR_FORM_UP
    n, j = m.n, m.j
    if op is OperatorKind.TMINUS:
        return up or j == 0
    if op is OperatorKind.TPLUS:
        return not up or n in (2 * j, 2 * j + 1)
    if op is OperatorKind.U:
        return m.k == 0 or (up and j == 0)
    return n == 2 * j


_KERNELS = {
    Family.SPINOR_SPHERE: _spinor_kernel,
    Family.SYM_SPHERE: _sym_kernel,
    Family.FORM_UP: _form_kernel,
    Family.FORM_DOWN: _form_kernel,
    Family.SPINOR_FORM_UP: _spinor_form_kernel,
    Family.SPINOR_FORM_DOWN: _spinor_form_kernel,
}


def kernel_family(op: OperatorKind) -> Callable[[FamilyMember], bool]:
    """Predicate picking out the members on which an adjoint square vanishes.

    Encodes the kernel descriptions by family (``ker T^+`` is the ``k = 0``
    slice, ``ker T^-`` the ``s = j`` slice, ``ker d`` the down family, ...),
    independently of the eigenvalue formulas.
    """
    op = OperatorKind(op)
    if op is OperatorKind.LAPLACIAN:
        raise NotApplicable("the Laplacian is not an adjoint square")

    def predicate(member: FamilyMember) -> bool:
        if op not in APPLICABLE[member.family]:
            raise NotApplicable(f"{op.value} is not defined on the {member.family.value} family")
        return _KERNELS[member.family](op, member)

    return predicate


# ---------------------------------------------------------------------------
# tables


@dataclass(frozen=True)
class SpectrumLine:
    member: FamilyMember
    op: OperatorKind
    eigenvalue: Fraction
    dim: int
    multiplicity: int


def spectrum_table(
    bundle: BundleDescriptor,
    op: OperatorKind,
    k_max: int,
    c: RationalLike = 1,
    extrapolate_n3: bool = False,
) -> list:
    op = OperatorKind(op)
    lines = []
    for member in frobenius_decompose(bundle, k_max):
        ev = operator_ev(op, member, c, extrapolate_n3)
        lines.append(SpectrumLine(member, op, ev, member.dim, member.multiplicity))
    return lines
