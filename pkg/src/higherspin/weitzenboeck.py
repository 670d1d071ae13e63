"""Weitzenboeck formulas from conformal weights and shifted Casimirs.

For an irreducible fiber ``W`` over so(n), the summands ``W_lambda`` of
``W (x) C^n`` label the generalized gradients ``P_lambda``.  On the round
sphere the squares ``X_lambda = P_lambda^* P_lambda`` obey

* ``Delta = sum X_lambda + C`` with ``C`` the so(n) Casimir of ``W``,
* ``sum w(lambda) X_lambda = -C``,
* ``sum a(lambda) X_lambda = R4``,

where ``w`` is the conformal weight, ``a(lambda)`` a cubic in the shifted
weight whose coefficients are shifted Casimir eigenvalues, and ``R4`` a
further shifted Casimir.  Eliminating gradients between these relations
produces the Weitzenboeck identities used everywhere else in the package.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, Optional, Sequence

from .branching import (
    BundleKind,
    spinor_fiber_weight,
    spinor_form_fiber_weight,
)
from .errors import (
    AbsentOperator,
    IncompleteTargets,
    NotASummand,
    SingularElimination,
    UnsupportedFiber,
)
from .rep_core import (
    AlgebraDescriptor,
    IrrepLabel,
    casimir,
    tensor_with_standard,
    validate_weight,
    weyl_dim,
)

F = Fraction

ROLE_ORDER = ("Tplus", "U", "D", "Tminus")


def conformal_weight(source: IrrepLabel, target: IrrepLabel) -> Fraction:
    """``(casimir(target) - casimir(source) - (n - 1)) / 2``."""
    if target not in tensor_with_standard(source):
        raise NotASummand(f"{target} is not a summand of {source} (x) C^{source.n}")
    return (casimir(target) - casimir(source) - (source.n - 1)) / 2


def relative_dim(source: IrrepLabel, target: IrrepLabel) -> Fraction:
    return F(weyl_dim(target), weyl_dim(source))


@dataclass(frozen=True)
class GradientTarget:
    """One generalized gradient, possibly aggregating several irreducible targets.

    Targets sharing a role (for instance ``(j, 1)`` and ``(j, -1)`` over
    so(4)) have equal Casimir, hence equal conformal weight, so their
    relative dimensions simply add.
    """

    role: str
    source: IrrepLabel
    targets: tuple
    conformal_weight: Fraction
    relative_dim: Fraction

    @property
    def target(self) -> IrrepLabel:
        return self.targets[0]

    @property
    def shifted_weight(self) -> Fraction:
        return self.conformal_weight + F(self.source.n - 1, 2)


@dataclass(frozen=True)
class WeitzenboeckSystem:
    kind: Optional[BundleKind]
    n: int
    j: Optional[int]
    source: IrrepLabel
    targets: tuple  # GradientTarget, in ROLE_ORDER

    @property
    def roles(self) -> tuple:
        return tuple(t.role for t in self.targets)

    def target(self, role: str) -> GradientTarget:
        for t in self.targets:
            if t.role == role:
                return t
        raise AbsentOperator(f"no {role} gradient on this fiber")

    @property
    def curvature(self) -> Fraction:
        """``C = R1 / 2``: the so(n) Casimir of the fiber, acting on the unit sphere."""
        return casimir(self.source)


def _classify(kind: BundleKind, j: int, source: IrrepLabel, target: IrrepLabel) -> str:
    sw, tw = source.weight, target.weight
    if kind is BundleKind.SYM:
        if tw[0] == sw[0] + 1:
            return "Tplus"
        if tw[0] == sw[0] - 1:
            return "Tminus"
        return "U"
    if casimir(target) == casimir(source):
        return "D"
    if kind is BundleKind.SPINOR:
        if tw[0] == sw[0] + 1:
            return "Tplus"
        if tw[0] == sw[0] - 1:
            return "Tminus"
        return "U"
    # spinor-form
    if sum(tw) < sum(sw):
        return "Tminus"
    if j >= 1 and tw[0] == sw[0] + 1:
        return "U"
    return "Tplus"


def _fiber_source(kind: BundleKind, n: int, j: int) -> IrrepLabel:
    alg = AlgebraDescriptor(n)
    if kind is BundleKind.SPINOR:
        w = spinor_fiber_weight(n, j)
    elif kind is BundleKind.SYM:
        w = (F(j),) + (F(0),) * (alg.rank - 1)
    elif kind is BundleKind.SPINOR_FORM:
        if j > n // 2:
            raise UnsupportedFiber(f"E_{j} needs j <= {n // 2}")
        w = spinor_form_fiber_weight(n, j)
    else:
        raise UnsupportedFiber(kind)
    return validate_weight(alg, w)


def build_system(kind, n: int, j: int) -> WeitzenboeckSystem:
    """All gradients on the (first irreducible component of the) fiber."""
    kind = BundleKind(kind)
    if j < 0:
        raise UnsupportedFiber("degree must be non-negative")
    source = _fiber_source(kind, n, j)
    return system_for(source, kind, j)


def system_for(source: IrrepLabel, kind: Optional[BundleKind] = None, j: Optional[int] = None) -> WeitzenboeckSystem:
    """Gradient system of an arbitrary irreducible fiber.

    Without a ``kind`` each irreducible target keeps its own entry, labelled
    by its weight.
    """
    groups: dict = {}
    for target in tensor_with_standard(source):
        role = _classify(kind, j, source, target) if kind else str(target)
        groups.setdefault(role, []).append(target)
    targets = []
    for role, labs in groups.items():
        w = conformal_weight(source, labs[0])
        if any(conformal_weight(source, t) != w for t in labs[1:]):
            raise AssertionError(f"targets sharing role {role} have different conformal weights")
        targets.append(GradientTarget(role, source, tuple(labs), w, sum((relative_dim(source, t) for t in labs), F(0))))
    order = {r: i for i, r in enumerate(ROLE_ORDER)}
    targets.sort(key=lambda t: (order.get(t.role, len(order)), t.role))
    return WeitzenboeckSystem(kind, source.n, j, source, tuple(targets))


def shifted_casimir(system: WeitzenboeckSystem, order: int) -> Fraction:
    """``sum over targets of shifted_weight**order * relative_dim``.

    The order-0 value is ``n`` when the target list is complete, which is
    checked before anything is returned.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    total_reldim = sum((t.relative_dim for t in system.targets), F(0))
    if total_reldim != system.n:
        raise IncompleteTargets(f"relative dimensions sum to {total_reldim}, expected {system.n}")
    return sum((t.shifted_weight ** order * t.relative_dim for t in system.targets), F(0))


def a_coefficient(system: WeitzenboeckSystem, target: GradientTarget) -> Fraction:
    """``a(lambda) = sum_{p=0}^{3} c^_{3-p} (-w^(lambda))^p``."""
    return sum(
        (shifted_casimir(system, 3 - p) * (-target.shifted_weight) ** p for p in range(4)),
        F(0),
    )


def r4_constant(system: WeitzenboeckSystem) -> Fraction:
    return shifted_casimir(system, 5) - F(system.n - 1, 2) * shifted_casimir(system, 4)


@dataclass(frozen=True)
class Relation:
    """``sum coeffs[role] * X_role = constant``."""

    coeffs: dict
    constant: Fraction


def relations(system: WeitzenboeckSystem) -> list:
    """The two Weitzenboeck relations, first-order then higher-order."""
    c = system.curvature
    first = Relation({t.role: t.conformal_weight for t in system.targets}, -c)
    second = Relation({t.role: a_coefficient(system, t) for t in system.targets}, r4_constant(system))
    return [first, second]


@dataclass(frozen=True)
class Identity:
    """``Delta = sum coeffs[role] * X_role + constant`` with projection gradients ``X``."""

    system: WeitzenboeckSystem
    coeffs: dict
    constant: Fraction

    def normalized(self) -> "Identity":
        """Coefficients with respect to the normalized operators."""
        kind = self.system.kind
        out = {}
        for role, a in self.coeffs.items():
            out[role] = a / normalization_sq(role, kind, self.system.n, self.system.j)
        return Identity(self.system, out, self.constant)

    def evaluate(self, values: dict) -> Fraction:
        return sum((a * values[r] for r, a in self.coeffs.items()), F(0)) + self.constant


def solve(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> Optional[list]:
    """Exact Gaussian elimination for a square system; ``None`` if singular."""
    size = len(matrix)
    aug = [[F(x) for x in row] + [F(b)] for row, b in zip(matrix, rhs)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[-1] for row in aug]


def derive_identities(system: WeitzenboeckSystem, keep: Iterable[str]) -> Identity:
    """Express ``Delta`` through the kept gradients alone.

    Kept roles missing from the system are ignored (the operator is absent).
    Every other gradient is eliminated with the first ``d`` relations, ``d``
    being the number of discarded gradients.
    """
    keep = [r for r in keep if r in system.roles]
    drop = [r for r in system.roles if r not in keep]
    rels = relations(system)
    if len(drop) > len(rels):
        raise SingularElimination(f"cannot eliminate {drop} with {len(rels)} relations")
    use = rels[: len(drop)]
    # drop-block M x_drop = const - K x_keep ; solve for each kept column and the constant
    m = [[rel.coeffs[r] for r in drop] for rel in use]
    columns = {}
    for r in keep:
        sol = solve(m, [-rel.coeffs[r] for rel in use]) if drop else []
        if sol is None:
            raise SingularElimination(f"relations degenerate on discarded gradients {drop}")
        columns[r] = sol
    const_sol = solve(m, [rel.constant for rel in use]) if drop else []
    if const_sol is None:
        raise SingularElimination(f"relations degenerate on discarded gradients {drop}")
    # Delta = sum_keep X + sum_drop X + C
    coeffs = {r: 1 + sum(columns[r], F(0)) for r in keep}
    constant = system.curvature + sum(const_sol, F(0))
    return Identity(system, coeffs, constant)


def _rank(rows: list) -> int:
    rows = [list(r) for r in rows]
    rank, col, width = 0, 0, len(rows[0]) if rows else 0
    while rank < len(rows) and col < width:
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(rank + 1, len(rows)):
            f = rows[r][col] / rows[rank][col]
            rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def is_consequence(system: WeitzenboeckSystem, coeffs: dict, constant: Fraction) -> bool:
    """True if ``Delta = sum coeffs * X + constant`` follows from the relations.

    Needed when fewer than two gradients are discarded, where the kept
    pair admits more than one representation.  Each equation is a vector
    over ``(Delta, X_roles..., 1)``.
    """
    roles = system.roles
    if any(r not in roles for r in coeffs):
        return False

    def vec(delta, cs, const):
        return [F(delta)] + [F(cs.get(r, 0)) for r in roles] + [F(const)]

    base = [vec(1, {r: -1 for r in roles}, -system.curvature)]
    base += [vec(0, rel.coeffs, -rel.constant) for rel in relations(system)]
    cand = vec(1, {r: -a for r, a in coeffs.items()}, -constant)
    return _rank(base + [cand]) == _rank(base)


# ---------------------------------------------------------------------------
# normalizations


@dataclass(frozen=True)
class Normalization:
    """Normalized operator = sign * sqrt(square) * projection gradient."""

    square: Fraction
    sign: int = 1


def normalization(op: str, kind, n: int, j: int) -> Normalization:
    kind = BundleKind(kind)
    if kind is BundleKind.SPINOR:
        if op == "D":
            return Normalization(F((n + 2 * j) * (n - 2), n + 2 * j - 2))
        if op == "Dprime":
            return Normalization(F((n + 2 * j - 2) * (n - 2), n + 2 * j), -1)
        if op == "Tplus":
            return Normalization(F(4 * (j + 1), n + 2 * j))
        if op == "Tminus":
            if j == 0:
                raise AbsentOperator("T_0^- is zero")
            return Normalization(F(4 * (n + j - 2), n + 2 * j - 2))
        if op == "U":
            if j == 0 or n == 3:
                raise AbsentOperator("U_j is zero for j = 0 and on S^3")
            return Normalization(F(1))
    elif kind is BundleKind.SYM:
        if op in ("Tplus", "U", "Tminus"):
            if op != "Tplus" and j == 0:
                raise AbsentOperator(f"{op} is zero on functions")
            return Normalization(F(1))
    elif kind is BundleKind.SPINOR_FORM:
        if op == "D":
            if n == 2 * j:
                raise AbsentOperator("D_m is zero on E_m over S^{2m}")
            return Normalization(F((n + 2) * (n - 2 * j), n - 2 * j + 2))
        if op == "Tminus":
            if j == 0:
                raise AbsentOperator("T_0^- is zero")
            return Normalization(F(4 * (n - 2 * j + 1) * (n - j + 2), (n - 2 * j + 3) * (n - 2 * j + 2)))
        if op == "Tplus":
            if n in (2 * j, 2 * j + 1):
                raise AbsentOperator("T_j^+ has no target in top degree")
            return Normalization(F(4 * (j + 1), n - 2 * j))
        if op == "U":
            if j == 0:
                raise AbsentOperator("U_0 is zero")
            return Normalization(F(1))
    raise AbsentOperator(f"no normalization for {op} on {kind.value} fibers")


def normalization_sq(op: str, kind, n: int, j: int) -> Fraction:
    return normalization(op, kind, n, j).square


def exact_sqrt(q: Fraction) -> Optional[Fraction]:
    """The rational square root of ``q`` when it exists."""
    if q < 0:
        return None
    a, b = isqrt(q.numerator), isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return F(a, b)
    return None


def dirac_prime_ratio(n: int, j: int) -> Fraction:
    """``D_j' / D_j``: the signed ratio of the two normalized Dirac operators on S_j."""
    d = normalization("D", BundleKind.SPINOR, n, j)
    dp = normalization("Dprime", BundleKind.SPINOR, n, j)
    root = exact_sqrt(dp.square / d.square)
    if root is None:
        raise ArithmeticError("normalization ratio is not a rational square")
    return dp.sign * d.sign * root
