"""Killing tensors and Killing forms on S^n as Spin(n+1) representations."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .branching import contains, form_weight, sym_bundle
from .errors import DegreeOutOfRange, UnsupportedFiber
from .rep_core import AlgebraDescriptor, IrrepLabel, is_dominant, validate_weight, weyl_dim

F = Fraction


def _parent_labels(n: int, first: int, second: int) -> tuple:
    """so(n+1) labels of weight (first, second, 0, ...); both signs of ``second`` on S^3."""
    alg = AlgebraDescriptor(n + 1)
    w = (F(first), F(second)) + (F(0),) * (alg.rank - 2)
    labels = [validate_weight(alg, w)]
    if alg.rank == 2 and alg.series == "D" and second != 0:
        labels.append(validate_weight(alg, (F(first), F(-second))))
    return tuple(labels)


@dataclass(frozen=True)
class PrimitivePiece:
    """The trace-free Killing tensors of degree ``degree`` inside ``V_degree(0, s)``."""

    degree: int
    s: int
    labels: tuple

    @property
    def weight(self):
        return self.labels[0].weight

    @property
    def dim(self) -> int:
        return sum(weyl_dim(lab) for lab in self.labels)


@dataclass(frozen=True)
class KillingDecomposition:
    n: int
    degree: int
    primitive_pieces: tuple  # PrimitivePiece for s = j, j-2, ...
    graded_pieces: dict      # i -> dim P^{j-2i}
    total_dim: int


def _check(n: int, j: int):
    if not isinstance(n, int) or n < 3:
        raise UnsupportedFiber(f"sphere dimension must be >= 3, got {n!r}")
    if not isinstance(j, int) or j < 0:
        raise DegreeOutOfRange(f"degree must be a non-negative integer, got {j!r}")


def primitive_killing(n: int, j: int) -> tuple:
    """Pieces ``(j, j-2i, 0...)`` for ``0 <= i <= j//2`` of the trace-free Killing j-tensors."""
    _check(n, j)
    return tuple(PrimitivePiece(j, j - 2 * i, _parent_labels(n, j, j - 2 * i)) for i in range(j // 2 + 1))


def primitive_dim(n: int, j: int) -> int:
    return sum(p.dim for p in primitive_killing(n, j))


def killing_space_dim(n: int, j: int) -> KillingDecomposition:
    """All Killing j-tensors: ``sum_i g^i P^{j-2i}``."""
    _check(n, j)
    graded = {i: primitive_dim(n, j - 2 * i) for i in range(j // 2 + 1)}
    return KillingDecomposition(n, j, primitive_killing(n, j), graded, sum(graded.values()))


@dataclass(frozen=True)
class KillingForms:
    n: int
    degree: int
    killing: tuple     # labels of V_{j+1}(0)
    co_killing: tuple  # labels of V_j(0)

    @property
    def killing_dim(self) -> int:
        return sum(weyl_dim(lab) for lab in self.killing)

    @property
    def co_killing_dim(self) -> int:
        return sum(weyl_dim(lab) for lab in self.co_killing)


def _form_labels(n: int, i: int) -> tuple:
    alg = AlgebraDescriptor(n + 1)
    w = form_weight(n, i, 0)
    labels = [validate_weight(alg, w)]
    if alg.series == "D" and w[-1] != 0:
        labels.append(validate_weight(alg, w[:-1] + (-w[-1],)))
    return tuple(labels)


def killing_forms(n: int, j: int) -> KillingForms:
    """Killing j-forms ``V_{j+1}(0)`` and co-Killing j-forms ``V_j(0)``.

    In the middle degree of an even sphere both are ``V_m(0)``.
    """
    _check(n, j)
    if j > n // 2:
        raise DegreeOutOfRange(f"degree {j} exceeds n//2 = {n // 2}; use Hodge duality")
    up = j if n == 2 * j else j + 1
    return KillingForms(n, j, _form_labels(n, up), _form_labels(n, j))


# Killing-equation bookkeeping ------------------------------------------------


def chain_weights(n: int, j: int, i: int) -> list:
    """Components ``K_{s'} in V_{j-2s'}(2s', j-2i)`` for ``s' = 0..i``.

    Each has parent weight ``(j, j-2i, 0...)`` and must occur in the
    sections of ``Sym_0^{j-2s'}``.
    """
    alg = AlgebraDescriptor(n + 1)
    w = (F(j), F(j - 2 * i)) + (F(0),) * (alg.rank - 2)
    if not is_dominant(alg, w):
        return []
    parent = IrrepLabel(alg, w)
    out = []
    for sp in range(i + 1):
        fiber = sym_bundle(n, j - 2 * sp).fiber[0][0]
        out.append((sp, fiber, contains(parent, fiber)))
    return out


def chain_ok(n: int, j: int, i: int) -> bool:
    chain = chain_weights(n, j, i)
    return len(chain) == i + 1 and all(flag == 1 for _, _, flag in chain)


def excluded_absent(n: int, j: int, i: int) -> bool:
    """The parity-shifted weight ``(j, j-2i+1)`` never meets ``Sym_0^{j-2i}``."""
    alg = AlgebraDescriptor(n + 1)
    w = (F(j), F(j - 2 * i + 1)) + (F(0),) * (alg.rank - 2)
    if not is_dominant(alg, w):
        return True
    fiber = sym_bundle(n, j - 2 * i).fiber[0][0]
    return contains(IrrepLabel(alg, w), fiber) == 0

