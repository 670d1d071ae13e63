"""Spin(n+1) -> Spin(n) branching and Frobenius decomposition over S^n.

Sections of a homogeneous bundle ``Spin(n+1) x_Spin(n) W`` decompose as the
sum over Spin(n+1) irreps ``V_rho`` containing the fiber ``W``, counted with
``dim Hom(V_rho, W)``.  The branching rule is multiplicity free, so that
count is the number of fiber components that ``rho`` interlaces.

Two routes produce the decomposition.  *Family mode* writes down the known
closed families (``V_j(k,s)'``, ``V_j(k,s)``, ``V_j(k)``, ``V_j(k)'``);
*generic mode* scans every dominant weight below a bound and tests
containment.  The two must agree; :func:`family_generic_mismatch` reports
any difference.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Optional

from .errors import RankMismatch, UnsupportedFiber
from .rep_core import (
    HALF,
    AlgebraDescriptor,
    IrrepLabel,
    Weight,
    dominant_weights,
    format_weight,
    validate_weight,
    weyl_dim,
)


@dataclass(frozen=True)
class BranchingList:
    parent: IrrepLabel
    children: tuple

    def dims(self):
        return [weyl_dim(c) for c in self.children]


def _check_parent(parent: IrrepLabel):
    if parent.n < 4:
        raise RankMismatch(f"parent must live on so(n+1) with n >= 3, got {parent.algebra}")


def _child_ranges(parent: IrrepLabel):
    """Interval of each child entry, as (upper, lower) pairs."""
    rho = parent.weight
    m = parent.algebra.rank
    if parent.algebra.series == "B":
        # so(2m+1) -> so(2m): rho^1 >= l^1 >= rho^2 >= ... >= rho^m >= l^m >= -rho^m
        return [(rho[i], rho[i + 1] if i + 1 < m else -rho[m - 1]) for i in range(m)]
    # so(2m) -> so(2m-1): rho^1 >= l^1 >= ... >= rho^{m-1} >= l^{m-1} >= |rho^m|
    return [(rho[i], rho[i + 1] if i + 1 < m - 1 else abs(rho[m - 1])) for i in range(m - 1)]


def branch(parent: IrrepLabel) -> BranchingList:
    """All Spin(n) summands of the Spin(n+1) irrep ``parent`` (each once)."""
    _check_parent(parent)
    child_alg = AlgebraDescriptor(parent.n - 1)
    axes = []
    for upper, lower in _child_ranges(parent):
        vals = []
        a = upper
        while a >= lower:
            vals.append(a)
            a -= 1
        axes.append(vals)
    children = tuple(IrrepLabel(child_alg, tuple(c)) for c in product(*axes))
    return BranchingList(parent, children)


def contains(parent: IrrepLabel, fiber: IrrepLabel) -> int:
    """1 if ``fiber`` occurs in the restriction of ``parent``, else 0."""
    if fiber.n != parent.n - 1:
        raise RankMismatch(f"{fiber.algebra} is not the isotropy algebra of {parent.algebra}")
    _check_parent(parent)
    lam = fiber.weight
    if (parent.weight[0] - lam[0]).denominator != 1:
        return 0
    for x, (upper, lower) in zip(lam, _child_ranges(parent)):
        if not (lower <= x <= upper):
            return 0
    return 1


# ---------------------------------------------------------------------------
# bundles


class BundleKind(Enum):
    SPINOR = "spinor"            # S_j, spin j + 1/2 fields
    SYM = "sym"                  # Sym_0^j, trace-free symmetric tensors
    FORM = "form"                # Lambda^j
    SPINOR_FORM = "spinor-form"  # E_j, spinors coupled with j-forms


@dataclass(frozen=True)
class BundleDescriptor:
    """A homogeneous bundle over S^n given by its (possibly reducible) fiber."""

    base_n: int
    fiber: tuple  # ((IrrepLabel, multiplicity), ...)
    kind: Optional[BundleKind] = None
    j: Optional[int] = None

    def __post_init__(self):
        for label, mult in self.fiber:
            if label.n != self.base_n:
                raise RankMismatch(f"fiber {label} does not live on so({self.base_n})")
            if mult < 1:
                raise ValueError("fiber multiplicities must be positive")

    @property
    def fiber_dim(self) -> int:
        return sum(weyl_dim(lab) * mult for lab, mult in self.fiber)

    @classmethod
    def generic(cls, label: IrrepLabel) -> "BundleDescriptor":
        return cls(label.n, ((label, 1),))


def _negate_last(w: Weight) -> Weight:
    return w[:-1] + (-w[-1],)


def _with_sign_pair(n: int, w: Weight) -> tuple:
    """Fiber components: ``w`` plus its last-entry mirror when that differs (D series)."""
    alg = AlgebraDescriptor(n)
    labels = [validate_weight(alg, w)]
    if alg.series == "D" and w[-1] != 0:
        labels.append(validate_weight(alg, _negate_last(w)))
    return tuple((lab, 1) for lab in labels)


def spinor_fiber_weight(n: int, j: int) -> Weight:
    """Highest weight ``(j+1/2, (1/2)_{m-1})`` of (the + half of) W_j over so(n)."""
    m = n // 2
    return (Fraction(2 * j + 1, 2),) + (HALF,) * (m - 1)


def spinor_form_fiber_weight(n: int, j: int) -> Weight:
    m = n // 2
    return (Fraction(3, 2),) * j + (HALF,) * (m - j)


def form_fiber_weight(n: int, j: int) -> Weight:
    m = n // 2
    return (Fraction(1),) * j + (Fraction(0),) * (m - j)


def _check_nj(n, j, j_max=None):
    if not isinstance(n, int) or n < 3:
        raise UnsupportedFiber(f"sphere dimension must be >= 3, got {n!r}")
    if not isinstance(j, int) or j < 0:
        raise UnsupportedFiber(f"degree must be a non-negative integer, got {j!r}")
    if j_max is not None and j > j_max:
        raise UnsupportedFiber(f"degree j={j} exceeds floor(n/2)={j_max} on S^{n}")


def spinor_bundle(n: int, j: int) -> BundleDescriptor:
    _check_nj(n, j)
    return BundleDescriptor(n, _with_sign_pair(n, spinor_fiber_weight(n, j)), BundleKind.SPINOR, j)


def sym_bundle(n: int, j: int) -> BundleDescriptor:
    _check_nj(n, j)
    alg = AlgebraDescriptor(n)
    w = (Fraction(j),) + (Fraction(0),) * (alg.rank - 1)
    return BundleDescriptor(n, ((validate_weight(alg, w), 1),), BundleKind.SYM, j)


def form_bundle(n: int, j: int) -> BundleDescriptor:
    _check_nj(n, j, n // 2)
    return BundleDescriptor(n, _with_sign_pair(n, form_fiber_weight(n, j)), BundleKind.FORM, j)


def spinor_form_bundle(n: int, j: int) -> BundleDescriptor:
    _check_nj(n, j, n // 2)
    return BundleDescriptor(
        n, _with_sign_pair(n, spinor_form_fiber_weight(n, j)), BundleKind.SPINOR_FORM, j
    )


BUNDLES = {
    BundleKind.SPINOR: spinor_bundle,
    BundleKind.SYM: sym_bundle,
    BundleKind.FORM: form_bundle,
    BundleKind.SPINOR_FORM: spinor_form_bundle,
}


def make_bundle(kind, n: int, j: int) -> BundleDescriptor:
    return BUNDLES[BundleKind(kind)](n, j)


# ---------------------------------------------------------------------------
# family members


class Family(Enum):
    SPINOR_SPHERE = "spinor"
    SYM_SPHERE = "sym"
    FORM_UP = "form-up"                  # V_{j+1}(k) in ker d*
    FORM_DOWN = "form-down"              # V_j(k) in ker d
    SPINOR_FORM_UP = "spinor-form-up"    # V_{j+1}(k)' in ker T_j^-
    SPINOR_FORM_DOWN = "spinor-form-down"  # V_j(k)' in ker T_j^+


FAMILY_KIND = {
    Family.SPINOR_SPHERE: BundleKind.SPINOR,
    Family.SYM_SPHERE: BundleKind.SYM,
    Family.FORM_UP: BundleKind.FORM,
    Family.FORM_DOWN: BundleKind.FORM,
    Family.SPINOR_FORM_UP: BundleKind.SPINOR_FORM,
    Family.SPINOR_FORM_DOWN: BundleKind.SPINOR_FORM,
}


@dataclass(frozen=True)
class FamilyMember:
    """One isotypic summand of L^2 sections.

    ``parent_weights`` holds the Spin(n+1) weights of the summand: one weight,
    or the ``+/-`` pair that the notation ``V'`` bundles together on odd
    spheres.  ``multiplicity`` is 2 where the whole summand occurs twice.
    """

    family: Family
    n: int
    j: int
    k: int
    s: Optional[int]
    parent_weights: tuple
    multiplicity: int = 1

    @property
    def parent_weight(self) -> Weight:
        return self.parent_weights[0]

    @property
    def parents(self) -> tuple:
        alg = AlgebraDescriptor(self.n + 1)
        return tuple(IrrepLabel(alg, w) for w in self.parent_weights)

    @property
    def dim(self) -> int:
        """Dimension of one copy (summed over the +/- pair)."""
        return sum(weyl_dim(p) for p in self.parents)

    @property
    def kind(self) -> BundleKind:
        return FAMILY_KIND[self.family]

    @property
    def label(self) -> str:
        f = self.family
        if f is Family.SPINOR_SPHERE:
            return f"V_{self.j}({self.k},{self.s})'"
        if f is Family.SYM_SPHERE:
            return f"V_{self.j}({self.k},{self.s})"
        idx = self.j + 1 if f in (Family.FORM_UP, Family.SPINOR_FORM_UP) else self.j
        if f is Family.FORM_UP and self.n == 2 * self.j:
            idx = self.j  # middle degree: the ker d* copy of V_m(k)
        prime = "'" if f in (Family.SPINOR_FORM_UP, Family.SPINOR_FORM_DOWN) else ""
        return f"V_{idx}({self.k}){prime}"

    def summands(self):
        """``(weight, multiplicity)`` pairs, one per irreducible parent."""
        return [(w, self.multiplicity) for w in self.parent_weights]


def _paired(n: int, w: Weight) -> tuple:
    """Parent weights over so(n+1): both signs of the last entry on odd n."""
    if (n + 1) % 2 == 0 and w[-1] != 0:
        return (w, _negate_last(w))
    return (w,)


def spinor_member(n: int, j: int, k: int, s: int) -> FamilyMember:
    m = (n + 1) // 2  # rank of so(n+1)
    w = (Fraction(2 * (k + j) + 1, 2), Fraction(2 * s + 1, 2)) + (HALF,) * (m - 2)
    return FamilyMember(Family.SPINOR_SPHERE, n, j, k, s, _paired(n, w), 2 if n % 2 == 0 else 1)


def sym_member(n: int, j: int, k: int, s: int) -> FamilyMember:
    m = (n + 1) // 2
    w = (Fraction(k + j), Fraction(s)) + (Fraction(0),) * (m - 2)
    return FamilyMember(Family.SYM_SPHERE, n, j, k, s, _paired(n, w), 1)


def form_weight(n: int, i: int, k: int) -> Weight:
    """V_i(k): (k, 0, ...) + (1_i, 0, ...) over so(n+1)."""
    m = (n + 1) // 2
    w = [Fraction(0)] * m
    w[0] += k
    for t in range(i):
        w[t] += 1
    return tuple(w)


def spinor_form_weight(n: int, i: int, k: int) -> Weight:
    """V_i(k)': (k+1/2, (1/2)_{m-1}) + (1_i, 0, ...) over so(n+1)."""
    m = (n + 1) // 2
    w = [HALF] * m
    w[0] += k
    for t in range(i):
        w[t] += 1
    return tuple(w)


def form_members(n: int, j: int, k: int) -> list:
    """Members of L^2(Lambda^j) at level k; empty where the level has none."""
    m = n // 2
    out = []
    if n % 2 == 0 and j == m:
        # middle degree: 2 V_m(k), one copy in ker d*, one in ker d
        w = (form_weight(n, m, k),)
        out.append(FamilyMember(Family.FORM_UP, n, j, k, None, w, 1))
        out.append(FamilyMember(Family.FORM_DOWN, n, j, k, None, w, 1))
        return out
    out.append(FamilyMember(Family.FORM_UP, n, j, k, None, _paired(n, form_weight(n, j + 1, k)), 1))
    if j >= 1 or k == 0:
        out.append(FamilyMember(Family.FORM_DOWN, n, j, k, None, _paired(n, form_weight(n, j, k)), 1))
    return out


def spinor_form_members(n: int, j: int, k: int) -> list:
    m = n // 2
    mult = 2 if n % 2 == 0 else 1
    out = []
    if not (n % 2 == 0 and j == m):
        w = spinor_form_weight(n, j + 1, k)
        out.append(FamilyMember(Family.SPINOR_FORM_UP, n, j, k, None, _paired(n, w), mult))
    if j >= 1 or k == 0:
        w = spinor_form_weight(n, j, k)
        out.append(FamilyMember(Family.SPINOR_FORM_DOWN, n, j, k, None, _paired(n, w), mult))
    return out


def members_at(kind: BundleKind, n: int, j: int, k: int) -> list:
    """All family members at level ``k`` for the bundle of the given kind."""
    kind = BundleKind(kind)
    if kind is BundleKind.SPINOR:
        return [spinor_member(n, j, k, s) for s in range(j + 1)]
    if kind is BundleKind.SYM:
        return [sym_member(n, j, k, s) for s in range(j + 1)]
    if kind is BundleKind.FORM:
        return form_members(n, j, k)
    return spinor_form_members(n, j, k)


def frobenius_decompose(bundle: BundleDescriptor, k_max: int) -> list:
    """Family-mode decomposition, truncated at ``k <= k_max``, sorted by (k, s)."""
    if bundle.kind is None:
        raise UnsupportedFiber("family mode needs one of the four supported bundles; use generic_decompose")
    if k_max < 0:
        raise ValueError("k_max must be non-negative")
    out = []
    for k in range(k_max + 1):
        out.extend(members_at(bundle.kind, bundle.base_n, bundle.j, k))
    return out


def generic_bound(bundle: BundleDescriptor, k_max: int) -> Fraction:
    first = max(lab.weight[0] for lab, _ in bundle.fiber)
    return first + k_max + 1


def generic_decompose(bundle: BundleDescriptor, k_max: int) -> list:
    """Generic mode: every so(n+1) dominant ``rho`` below the bound that contains the fiber.

    Returns ``[(IrrepLabel, multiplicity), ...]`` where the multiplicity is
    ``sum(mult * contains(rho, component))`` over fiber components.
    """
    n = bundle.base_n
    alg = AlgebraDescriptor(n + 1)
    half = bundle.fiber[0][0].weight[0].denominator == 2
    bound = generic_bound(bundle, k_max)
    out = []
    for rho in dominant_weights(alg, bound, half):
        parent = IrrepLabel(alg, rho)
        mult = sum(m * contains(parent, lab) for lab, m in bundle.fiber)
        if mult:
            out.append((parent, mult))
    return out


def family_multiset(members) -> Counter:
    c = Counter()
    for mem in members:
        for w, mult in mem.summands():
            c[w] += mult
    return c


def family_generic_mismatch(bundle: BundleDescriptor, k_max: int) -> dict:
    """Compare the two modes on their common range; empty dict means agreement.

    The common range is ``rho^1 <= max rho^1`` over the family output, which
    every supported family fills completely.
    """
    fam = family_multiset(frobenius_decompose(bundle, k_max))
    top = max(w[0] for w in fam)
    gen = Counter({lab.weight: m for lab, m in generic_decompose(bundle, k_max) if lab.weight[0] <= top})
    diff = {}
    for w in set(fam) | set(gen):
        if fam.get(w, 0) != gen.get(w, 0):
            diff[format_weight(w)] = (fam.get(w, 0), gen.get(w, 0))
    return diff
