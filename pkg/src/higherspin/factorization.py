"""Factorization formulas, checked one eigenspace at a time.

A product of commuting second-order operators vanishes on the sphere iff on
every isotypic summand at least one factor has eigenvalue zero.  The checks
below evaluate every factor (no early exit) so a report always carries the
full list of factor values.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Optional

from .branching import BundleKind, Family, FamilyMember, frobenius_decompose, make_bundle
from .errors import FactorizationViolated, NotApplicable
from .rep_core import RationalLike, as_rational
from .spectra import OperatorKind, laplacian_ev, operator_ev

F = Fraction
O = OperatorKind


@dataclass(frozen=True)
class FactorReport:
    member: FamilyMember
    factor_evs: tuple
    vanishing_index: Optional[int]
    product: Fraction

    @property
    def zeros(self) -> list:
        return [i for i, v in enumerate(self.factor_evs) if v == 0]

    @property
    def ok(self) -> bool:
        return self.product == 0 and len(self.zeros) == 1


def _report(member: FamilyMember, values) -> FactorReport:
    values = tuple(values)
    zeros = [i for i, v in enumerate(values) if v == 0]
    return FactorReport(member, values, zeros[0] if len(zeros) == 1 else None, prod(values, start=F(1)))


def _curv(n: int) -> Fraction:
    return F(n * (n - 1), 8)


def b_factor_ev(s_prime: int, member: FamilyMember, c: RationalLike = 1) -> Fraction:
    """Eigenvalue of ``B(s';j) = D^2 - ((n+2s'-2)/(n+2j-2))^2 (Delta - (s'(n+s'-2) - n(n-1)/8) c)``."""
    if member.family is not Family.SPINOR_SPHERE:
        raise NotApplicable("B(s;j) acts on higher spin fields only")
    n, j = member.n, member.j
    if not 0 <= s_prime <= j:
        raise NotApplicable(f"s' must lie in 0..{j}")
    c = as_rational(c)
    ratio = F(n + 2 * s_prime - 2, n + 2 * j - 2) ** 2
    shift = s_prime * (n + s_prime - 2) - _curv(n)
    return operator_ev(O.DIRAC_SQ, member, c) - ratio * (laplacian_ev(member, c) - shift * c)


def sym_a(n: int, j: int, s: int) -> Fraction:
    return F((j - s + 1) * (n + j + s - 2), (j + 1) * (n + 2 * j - 2))


def sym_b(n: int, j: int, s: int) -> Fraction:
    return F(j * (n + j - 1) + s * (n + s - 3))


def sym_factor_ev(s_prime: int, member: FamilyMember, c: RationalLike = 1) -> Fraction:
    """``(T+)*T+ - a(s';j)(Delta - b(s';j) c)`` on a symmetric-tensor member."""
    if member.family is not Family.SYM_SPHERE:
        raise NotApplicable("the symmetric-tensor factors act on Sym_0^j only")
    n, j = member.n, member.j
    c = as_rational(c)
    return operator_ev(O.TPLUS, member, c) - sym_a(n, j, s_prime) * (laplacian_ev(member, c) - sym_b(n, j, s_prime) * c)


def spinor_form_factor_evs(member: FamilyMember, c: RationalLike = 1) -> tuple:
    """Values of the factors that annihilate ``Gamma(E_j)``.

    For ``1 <= j <= (n-1)//2`` these are the two factors

        ``D^2 - ((n-2j)/(n-2j+2))^2 (Delta - ((j-1)(n-j+1) - n(n-1)/8) c)``,
        ``D^2 - (Delta - (j(n-j) - n(n-1)/8) c)``.

    For ``j = 0`` only the second survives (it vanishes identically).  For
    ``n = 2m, j = m``, where ``D`` is absent, the single statement
    ``Delta - (T-)*T- - n(n+1)/8 c`` is returned instead.
    """
    if member.family not in (Family.SPINOR_FORM_UP, Family.SPINOR_FORM_DOWN):
        raise NotApplicable("spinor-form factors act on E_j only")
    n, j = member.n, member.j
    c = as_rational(c)
    lap = laplacian_ev(member, c)
    if n == 2 * j:
        return (lap - operator_ev(O.TMINUS, member, c) - F(n * (n + 1), 8) * c,)
    d2 = operator_ev(O.DIRAC_SQ, member, c)
    second = d2 - (lap - (j * (n - j) - _curv(n)) * c)
    if j == 0:
        return (second,)
    first = d2 - F(n - 2 * j, n - 2 * j + 2) ** 2 * (lap - ((j - 1) * (n - j + 1) - _curv(n)) * c)
    return (first, second)


def _members(kind: BundleKind, n: int, j: int, k_max: int) -> list:
    return frobenius_decompose(make_bundle(kind, n, j), k_max)


def verify_factorization(kind, n: int, j: int, k_max: int, c: RationalLike = 1) -> list:
    """One :class:`FactorReport` per member; raises on any violation.

    Expected vanishing index: ``s`` for spinor and symmetric members; for
    spinor-forms with two factors, the down family kills the first and the
    up family the second.
    """
    kind = BundleKind(kind)
    reports = []
    for member in _members(kind, n, j, k_max):
        if kind is BundleKind.SPINOR:
            rep = _report(member, (b_factor_ev(s, member, c) for s in range(j + 1)))
            expected = member.s
        elif kind is BundleKind.SYM:
            rep = _report(member, (sym_factor_ev(s, member, c) for s in range(j + 1)))
            expected = member.s
        elif kind is BundleKind.SPINOR_FORM:
            rep = _report(member, spinor_form_factor_evs(member, c))
            if len(rep.factor_evs) == 1:
                expected = 0
            else:
                expected = 1 if member.family is Family.SPINOR_FORM_UP else 0
        else:
            raise NotApplicable(f"no factorization formula for {kind.value}")
        if not rep.ok or rep.vanishing_index != expected:
            raise FactorizationViolated(
                f"{member.label} on S^{n}: factor values {[str(v) for v in rep.factor_evs]}, "
                f"expected only index {expected} to vanish",
                rep,
            )
        reports.append(rep)
    return reports


# the T+ form ---------------------------------------------------------------


def tplus_a(n: int, j: int, s: int) -> Fraction:
    return F(4 * (j - s + 1) * (n + j + s - 1), (n + 2 * j) ** 2)


def tplus_b(n: int, j: int, s: int) -> Fraction:
    return F(j * (n + j) + s * (n + s - 2)) + F(n * (n + 1), 8)


def tplus_factor_ev(s_prime: int, member: FamilyMember, c: RationalLike = 1) -> Fraction:
    n, j = member.n, member.j
    c = as_rational(c)
    return operator_ev(O.TPLUS, member, c) - tplus_a(n, j, s_prime) * (laplacian_ev(member, c) - tplus_b(n, j, s_prime) * c)


def tplus_factorization_check(n: int, j: int, k_max: int, c: RationalLike = 1) -> list:
    """``prod_{s'} ((T+)*T+ - a'(s';j)(Delta - b'(s';j) c)) = 0`` on every member.

    Also checks that on the conformal Killing members ``V_j(0,s)'`` the
    Laplacian equals ``b'(s;j) c``.
    """
    reports = []
    c = as_rational(c)
    for member in _members(BundleKind.SPINOR, n, j, k_max):
        rep = _report(member, (tplus_factor_ev(s, member, c) for s in range(j + 1)))
        if not rep.ok or rep.vanishing_index != member.s:
            raise FactorizationViolated(f"T+ factorization fails on {member.label} over S^{n}", rep)
        if member.k == 0 and laplacian_ev(member, c) != tplus_b(n, j, member.s) * c:
            raise FactorizationViolated(f"Delta on {member.label} is not b'(s;j)", rep)
        reports.append(rep)
    return reports


# grading -------------------------------------------------------------------


@dataclass(frozen=True)
class GradingReport:
    slices: dict  # s -> list of members
    filtration_ok: bool
    kernel_equality: bool  # every member killed by B(s;j) has that s

    @property
    def ok(self) -> bool:
        return self.filtration_ok


def grading_decomposition(kind, n: int, j: int, k_max: int) -> GradingReport:
    """Split the decomposition by ``s`` and check the filtration by factor kernels.

    ``F_t = ker prod_{s=t}^{j} B(s;j)`` must consist exactly of the members
    with ``s >= t``.
    """
    kind = BundleKind(kind)
    if kind is BundleKind.SPINOR:
        factor = b_factor_ev
    elif kind is BundleKind.SYM:
        factor = sym_factor_ev
    else:
        raise NotApplicable("the grading is defined for spinor and symmetric-tensor fields")
    members = _members(kind, n, j, k_max)
    slices = {s: [m for m in members if m.s == s] for s in range(j + 1)}
    values = {id(m): [factor(s, m) for s in range(j + 1)] for m in members}
    filtration_ok = all(
        (prod(values[id(m)][t:], start=F(1)) == 0) == (m.s >= t)
        for m in members
        for t in range(j + 1)
    )
    kernel_equality = all(
        (values[id(m)][s] == 0) == (m.s == s) for m in members for s in range(j + 1)
    )
    return GradingReport(slices, filtration_ok, kernel_equality)
