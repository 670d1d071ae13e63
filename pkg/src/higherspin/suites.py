"""Grid verification suites behind ``higherspin verify``.

Each suite walks a parameter grid, compares the engine against the closed
forms in :mod:`higherspin.closed_forms` and the structural identities, and
counts every individual comparison.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import closed_forms as cf
from .branching import (
    BundleKind,
    Family,
    branch,
    contains,
    family_generic_mismatch,
    form_members,
    frobenius_decompose,
    make_bundle,
    spinor_bundle,
    spinor_form_bundle,
    spinor_form_members,
    spinor_member,
    sym_member,
)
from .errors import FactorizationViolated, HigherSpinError
from .factorization import (
    grading_decomposition,
    tplus_factorization_check,
    verify_factorization,
)
from .killing import chain_ok, excluded_absent, killing_forms, killing_space_dim
from .rep_core import HALF, AlgebraDescriptor, IrrepLabel, validate_weight, weyl_dim
from .spectra import OperatorKind, applicable_ops, kernel_family, operator_ev
from .weitzenboeck import (
    build_system,
    derive_identities,
    dirac_prime_ratio,
    is_consequence,
    normalization_sq,
    relative_dim,
    shifted_casimir,
)

F = Fraction
O = OperatorKind
SAMPLE_CVALUES = (F(1), F(2), F(1, 3))


@dataclass(frozen=True)
class Grid:
    n_min: int = 3
    n_max: int = 10
    j_max: int = 4
    k_max: int = 15
    seed: int = 0

    def __post_init__(self):
        if self.n_min < 3:
            raise ValueError("n-min must be at least 3")
        if self.n_min > self.n_max:
            raise ValueError(f"empty grid: n-min {self.n_min} > n-max {self.n_max}")
        if self.j_max < 0 or self.k_max < 0:
            raise ValueError("j-max and k-max must be non-negative")

    @property
    def ns(self) -> range:
        return range(self.n_min, self.n_max + 1)


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    violations: list = field(default_factory=list)

    def check(self, ok: bool, message: Callable[[], str] | str) -> None:
        self.checks += 1
        if not ok:
            self.violations.append(message() if callable(message) else message)

    def equal(self, got, want, what: str) -> None:
        self.check(got == want, lambda: f"{what}: got {got}, expected {want}")

    @property
    def ok(self) -> bool:
        return not self.violations


def _guard(result: SuiteResult, what: str, fn: Callable[[], object]):
    """Run ``fn``; turn an unexpected package error into a counted violation."""
    try:
        return fn()
    except FactorizationViolated as exc:
        result.check(False, f"{what}: {exc}")
    except HigherSpinError as exc:
        result.check(False, f"{what}: {type(exc).__name__}: {exc}")
    return None


# ---------------------------------------------------------------------------


def random_dominant(rng: random.Random, alg: AlgebraDescriptor, half: bool, top: Fraction = F(9, 2)) -> IrrepLabel:
    """A uniformly drawn dominant weight with entries bounded by ``top`` in absolute value."""
    offset = HALF if half else F(0)
    cap = int(top - offset)
    vals = sorted((F(rng.randint(0, cap)) + offset for _ in range(alg.rank)), reverse=True)
    if alg.series == "D" and vals[-1] != 0 and rng.random() < 0.5:
        vals[-1] = -vals[-1]
    return validate_weight(alg, vals)


def _bundle_degrees(kind: BundleKind, n: int, j_max: int) -> range:
    if kind in (BundleKind.FORM, BundleKind.SPINOR_FORM):
        return range(0, min(j_max, n // 2) + 1)
    return range(0, j_max + 1)


def suite_branching(grid: Grid, samples: int = 500) -> SuiteResult:
    res = SuiteResult("branching")
    rng = random.Random(grid.seed)
    parents = [n + 1 for n in grid.ns if (n + 1) // 2 <= 5] or [grid.n_min + 1]
    for t in range(samples):
        alg = AlgebraDescriptor(parents[t % len(parents)])
        parent = random_dominant(rng, alg, half=bool(t % 2))
        children = branch(parent).children
        res.equal(sum(weyl_dim(c) for c in children), weyl_dim(parent), f"dimension conservation for {parent}")
        res.check(len(set(children)) == len(children), f"repeated child in branch({parent})")
        child = children[rng.randrange(len(children))]
        res.equal(contains(parent, child), 1, f"contains({parent}, {child})")
    k_gen = min(grid.k_max, 4)
    for n in grid.ns:
        for kind in BundleKind:
            for j in _bundle_degrees(kind, n, min(grid.j_max, 3)):
                diff = family_generic_mismatch(make_bundle(kind, n, j), k_gen)
                res.check(not diff, lambda: f"family/generic mismatch for {kind.value} n={n} j={j}: {diff}")
    return res


def suite_weitzenboeck(grid: Grid) -> SuiteResult:
    res = SuiteResult("weitzenboeck")
    for n in grid.ns:
        for j in range(grid.j_max + 1):
            sysm = build_system(BundleKind.SPINOR, n, j)
            res.equal(shifted_casimir(sysm, 0), n, f"spinor c^_0 n={n} j={j}")
            weights = cf.spinor_conformal_weights(n, j)
            rdims = cf.spinor_relative_dims(n, j)
            res.equal(set(sysm.roles), {r for r, v in rdims.items() if v}, f"spinor targets n={n} j={j}")
            for t in sysm.targets:
                res.equal(t.conformal_weight, weights[t.role], f"w({t.role}) n={n} j={j}")
                res.equal(t.relative_dim, rdims[t.role], f"reldim({t.role}) n={n} j={j}")
                res.equal(t.shifted_weight - t.conformal_weight, F(n - 1, 2), "shifted weight offset")
            a, b, c = cf.wf1(n, j)
            ident = derive_identities(sysm, ("D", "Tminus"))
            want = {"D": a, "Tminus": b} if j else {"D": a}
            res.equal((ident.coeffs, ident.constant), (want, c), f"first spinor identity n={n} j={j}")
            a, b, c = cf.wf2(n, j)
            if len(sysm.targets) > 2:
                ident = derive_identities(sysm, ("Tplus", "D"))
                res.equal((ident.coeffs, ident.constant), ({"Tplus": a, "D": b}, c), f"second spinor identity n={n} j={j}")
            res.check(is_consequence(sysm, {"Tplus": a, "D": b}, c), f"second spinor identity not implied n={n} j={j}")
            res.check(not is_consequence(sysm, {"Tplus": a, "D": b}, c + 1), f"consequence test too weak n={n} j={j}")
            for op in ("D", "Tplus", "Tminus"):
                if op == "Tminus" and j == 0:
                    continue
                res.equal(normalization_sq(op, BundleKind.SPINOR, n, j), cf.spinor_normalization_sq(op, n, j), f"spinor {op} normalization n={n} j={j}")
            res.equal(dirac_prime_ratio(n, j), -F(n + 2 * j - 2, n + 2 * j), f"D'/D n={n} j={j}")

            sym = build_system(BundleKind.SYM, n, j)
            res.equal(shifted_casimir(sym, 0), n, f"sym c^_0 n={n} j={j}")
            res.equal(sym.curvature, F(j * (n + j - 2)), f"sym curvature n={n} j={j}")
            if j >= 1:
                a, b, c = cf.sym_weitzenboeck(n, j)
                ident = derive_identities(sym, ("Tplus", "Tminus"))
                res.equal((ident.coeffs, ident.constant), ({"Tplus": a, "Tminus": b}, c), f"sym identity n={n} j={j}")
            up = build_system(BundleKind.SYM, n, j + 1).source
            res.equal(relative_dim(up, sym.source), cf.sym_relative_ratio(n, j), f"sym adjoint ratio n={n} j={j}")

        for j in range(min(grid.j_max, n // 2) + 1):
            sysm = build_system(BundleKind.SPINOR_FORM, n, j)
            res.equal(shifted_casimir(sysm, 0), n, f"E c^_0 n={n} j={j}")
            res.equal(sysm.curvature, cf.spinor_form_curvature(n, j), f"E curvature n={n} j={j}")
            for keep, (a, b, c) in cf.estimate_lines(n, j).items():
                want = {r: v for r, v in zip(keep, (a, b)) if r in sysm.roles}
                ident = derive_identities(sysm, keep)
                exact = (ident.coeffs, ident.constant) == (want, c)
                res.check(exact or is_consequence(sysm, want, c), f"E identity {keep} n={n} j={j}: got {ident.coeffs}, {ident.constant}")
            for op in ("D", "Tplus", "Tminus"):
                present = {"D": n != 2 * j, "Tplus": n not in (2 * j, 2 * j + 1), "Tminus": j >= 1}[op]
                if present:
                    res.equal(normalization_sq(op, BundleKind.SPINOR_FORM, n, j), cf.spinor_form_normalization_sq(op, n, j), f"E {op} normalization n={n} j={j}")
    return res


def suite_factorization(grid: Grid) -> SuiteResult:
    res = SuiteResult("factorization")
    for n in grid.ns:
        for j in range(grid.j_max + 1):
            for kind in (BundleKind.SPINOR, BundleKind.SYM):
                reps = _guard(res, f"{kind.value} n={n} j={j}", lambda: verify_factorization(kind, n, j, grid.k_max))
                for rep in reps or ():
                    res.check(rep.ok, f"{rep.member.label}: {rep.factor_evs}")
                g = grading_decomposition(kind, n, j, min(grid.k_max, 8))
                res.check(g.filtration_ok, f"filtration {kind.value} n={n} j={j}")
                res.check(g.kernel_equality, f"slice kernel equality {kind.value} n={n} j={j}")
            reps = _guard(res, f"T+ form n={n} j={j}", lambda: tplus_factorization_check(n, j, grid.k_max))
            for rep in reps or ():
                res.check(rep.ok, f"T+ form {rep.member.label}")
            for s in range(j + 1):
                m = sym_member(n, j, 0, s)
                res.equal(operator_ev(O.LAPLACIAN, m), F(j * (n + j - 1) + s * (n + s - 3)), f"Delta on ker T+ slice n={n} j={j} s={s}")
        for j in range(min(grid.j_max, n // 2) + 1):
            reps = _guard(res, f"E n={n} j={j}", lambda: verify_factorization(BundleKind.SPINOR_FORM, n, j, grid.k_max))
            for rep in reps or ():
                res.check(rep.ok, f"E {rep.member.label}: {rep.factor_evs}")
    return res


def _check_kernels(res: SuiteResult, member, values: dict):
    for op, ev in values.items():
        if op is O.LAPLACIAN:
            continue
        res.check(ev >= 0, f"negative {op.value} on {member.label} n={member.n}")
        res.check((ev == 0) == kernel_family(op)(member), f"kernel of {op.value} at {member.label} n={member.n}: ev {ev}")


def suite_crosscheck(grid: Grid) -> SuiteResult:
    res = SuiteResult("crosscheck")
    for n in grid.ns:
        curv = cf.spinor_curv(n)
        for k in range(grid.k_max + 1):
            m = spinor_member(n, 0, k, 0)
            res.equal(operator_ev(O.DIRAC_SQ, m), (k + F(n, 2)) ** 2, f"Dirac n={n} k={k}")
            per_sign = [weyl_dim(p) for p in m.parents] * m.multiplicity
            res.equal(per_sign, [cf.dirac_multiplicity(n, k)] * 2, f"Dirac multiplicity n={n} k={k}")
        for j in range(grid.j_max + 1):
            for k in range(grid.k_max + 1):
                for s in range(j + 1):
                    m = spinor_member(n, j, k, s)
                    v = {op: operator_ev(op, m) for op in applicable_ops(m.family)}
                    lap = v[O.LAPLACIAN]
                    tag = f"n={n} j={j} k={k} s={s}"
                    res.equal(lap, cf.spinor_laplacian(n, j, k, s), f"spinor Delta {tag}")
                    res.equal(v[O.DIRAC_SQ], F(n + 2 * s - 2, n + 2 * j - 2) ** 2 * (j + k + F(n, 2)) ** 2, f"D^2 {tag}")
                    res.equal(m.dim, cf.spinor_member_dim(n, j, k, s), f"spinor dim {tag}")
                    res.equal(lap, v[O.DIRAC_SQ] + v[O.TMINUS] + j * (n + j - 2) - curv, f"first spinor Weitzenboeck {tag}")
                    res.equal(lap, v[O.TPLUS] + F(n + 2 * j - 2, n + 2 * j) ** 2 * v[O.DIRAC_SQ] + (j + 1) * (n + j - 1) - curv, f"second spinor Weitzenboeck {tag}")
                    grad = v[O.TPLUS] / cf.spinor_normalization_sq("Tplus", n, j) + v[O.U] + v[O.DIRAC_SQ] / cf.spinor_normalization_sq("D", n, j)
                    if j:
                        grad += v[O.TMINUS] / cf.spinor_normalization_sq("Tminus", n, j)
                    res.equal(lap - (j * (n + j - 1) + curv), grad, f"gradient sum rule {tag}")
                    if n == 3:
                        res.equal(v[O.U], 0, f"U vanishes on S^3 {tag}")
                    if k >= 1:
                        res.equal(operator_ev(O.DIRAC_SQ, spinor_member(n, j + 1, k - 1, s)), F(n + 2 * j - 2, n + 2 * j) ** 2 * v[O.DIRAC_SQ], f"D^2 intertwining {tag}")
                    for c in SAMPLE_CVALUES[1:]:
                        scaled = operator_ev(O.DIRAC_SQ, m, c) + operator_ev(O.TMINUS, m, c) + (j * (n + j - 2) - curv) * c
                        res.equal(operator_ev(O.LAPLACIAN, m, c), scaled, f"scaled Weitzenboeck c={c} {tag}")
                    _check_kernels(res, m, v)

                    m = sym_member(n, j, k, s)
                    v = {op: operator_ev(op, m) for op in applicable_ops(m.family) if not (op is O.U and n == 3)}
                    lap = v[O.LAPLACIAN]
                    res.equal(lap, cf.sym_laplacian(n, j, k, s), f"sym Delta {tag}")
                    if n >= 4:
                        res.equal(m.dim, cf.sym_member_dim(n, j, k, s), f"sym dim {tag}")
                    res.equal(lap, (j + 1) * v[O.TPLUS] - (n + j - 3) * v[O.TMINUS] + 2 * j * (n + j - 2), f"sym Weitzenboeck {tag}")
                    if n >= 4:
                        res.equal(F(j * (n + j - 2)), -j * v[O.TPLUS] + v[O.U] + (n + j - 2) * v[O.TMINUS], f"sym curvature identity {tag}")
                    res.equal(
                        operator_ev(O.TMINUS, sym_member(n, j + 1, k, s)),
                        cf.sym_relative_ratio(n, j) * operator_ev(O.TPLUS, sym_member(n, j, k + 1, s)),
                        f"sym adjoint ratio {tag}",
                    )
                    _check_kernels(res, m, v)
        for j in range(n // 2 + 1):
            for k in range(grid.k_max + 1):
                tag = f"n={n} j={j} k={k}"
                for m in form_members(n, j, k):
                    up = m.family is Family.FORM_UP
                    v = {op: operator_ev(op, m) for op in applicable_ops(m.family)}
                    res.equal(v[O.LAPLACIAN], cf.form_laplacian(n, j, k, up), f"form Delta {tag} up={up}")
                    res.equal(v[O.LAPLACIAN], v[O.D_DSTAR] + v[O.DSTAR_D], f"Hodge {tag} up={up}")
                    ratio = F(j, j + 1) if up else F(n - j, n - j + 1)
                    res.equal(v[O.C], ratio * k * (n + k + 1), f"C*C {tag} up={up}")
                    _check_kernels(res, m, v)
                    if up and j + 1 <= n // 2 and n != 2 * j:
                        nxt = [x for x in form_members(n, j + 1, k) if x.family is Family.FORM_DOWN]
                        for x in nxt:
                            res.equal(operator_ev(O.D_DSTAR, x), v[O.DSTAR_D], f"d intertwining {tag}")
                for m in spinor_form_members(n, j, k):
                    up = m.family is Family.SPINOR_FORM_UP
                    v = {op: operator_ev(op, m) for op in applicable_ops(m.family)}
                    lap = v[O.LAPLACIAN]
                    res.equal(lap, cf.spinor_form_laplacian(n, j, k, up), f"E Delta {tag} up={up}")
                    base = (F(n, 2) + k + 1) ** 2
                    res.equal(v[O.DIRAC_SQ], base if up else F(n - 2 * j, n - 2 * j + 2) ** 2 * base, f"E D^2 {tag} up={up}")
                    res.equal(lap, v[O.DIRAC_SQ] + v[O.TMINUS] + j * (n - j) - curv, f"E first identity {tag} up={up}")
                    if n - 2 * j - 1 > 0:
                        res.equal(
                            lap,
                            -F(n - 2 * j + 1, n - 2 * j - 1) * v[O.TPLUS] + F(n - 2 * j + 2, n - 2 * j) ** 2 * v[O.DIRAC_SQ] + (j - 1) * (n - j + 1) - curv,
                            f"E second identity {tag} up={up}",
                        )
                    if j >= 1:
                        gap = lap - F(n * (n + 1), 8)
                        res.check(gap >= j * (n - j + 2) > 0, f"E harmonic piece not empty {tag}")
                    _check_kernels(res, m, v)
            if n == 2 * j:
                for m in spinor_form_members(n, j, 0):
                    res.equal(operator_ev(O.DIRAC_SQ, m), 0, f"D absent on E_m n={n}")
        # E_0 against S_0
        e0, s0 = Counter(), Counter()
        for m in frobenius_decompose(spinor_form_bundle(n, 0), grid.k_max):
            e0[operator_ev(O.DIRAC_SQ, m)] += m.dim * m.multiplicity
        for m in frobenius_decompose(spinor_bundle(n, 0), grid.k_max + 1):
            s0[operator_ev(O.DIRAC_SQ, m)] += m.dim * m.multiplicity
        top = max(e0)
        res.equal(e0, Counter({ev: d for ev, d in s0.items() if ev <= top}), f"E_0 vs S_0 spectra n={n}")
    return res


def suite_killing(grid: Grid) -> SuiteResult:
    res = SuiteResult("killing")
    for n in grid.ns:
        res.equal(killing_space_dim(n, 1).total_dim, n * (n + 1) // 2, f"Killing vectors on S^{n}")
        for j in range(grid.j_max + 1):
            kd = killing_space_dim(n, j)
            res.equal(kd.total_dim, sum(kd.graded_pieces.values()), f"graded total n={n} j={j}")
            for i in range(j // 2 + 1):
                res.check(chain_ok(n, j, i), f"Killing chain n={n} j={j} i={i}")
                res.check(excluded_absent(n, j, i), f"excluded weight present n={n} j={j} i={i}")
        for j in range(n // 2 + 1):
            kf = killing_forms(n, j)
            killing_members = [m for m in form_members(n, j, 0) if m.family is Family.FORM_UP]
            res.equal([m.parents for m in killing_members], [kf.killing], f"Killing forms as members n={n} j={j}")
            for m in killing_members:
                res.equal(operator_ev(O.C, m), 0, f"C*C on Killing forms n={n} j={j}")
                res.equal(operator_ev(O.D_DSTAR, m), 0, f"dd* on Killing forms n={n} j={j}")
            co = [m for m in form_members(n, j, 0) if m.family is Family.FORM_DOWN]
            res.equal([m.parents for m in co], [kf.co_killing], f"co-Killing forms as members n={n} j={j}")
            for m in co:
                res.equal(operator_ev(O.C, m), 0, f"C*C on co-Killing forms n={n} j={j}")
                res.equal(operator_ev(O.DSTAR_D, m), 0, f"d*d on co-Killing forms n={n} j={j}")
    return res


SUITES = {
    "branching": suite_branching,
    "weitzenboeck": suite_weitzenboeck,
    "factorization": suite_factorization,
    "crosscheck": suite_crosscheck,
    "killing": suite_killing,
}


def run_suites(names, grid: Grid) -> list:
    if names == "all":
        names = list(SUITES)
    return [SUITES[name](grid) for name in names]
