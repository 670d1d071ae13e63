"""Highest-weight bookkeeping for the orthogonal Lie algebras so(n).

Weights are tuples of :class:`fractions.Fraction` in the orthonormal basis
``e_1, ..., e_m`` with ``m = n // 2``.  The pairing is the Euclidean one,
``<mu, nu> = sum(mu_i * nu_i)``, with no root-length renormalization; in this
normalization the Casimir eigenvalue ``<rho, rho + 2 delta>`` of a
Spin(n+1) label is the eigenvalue of the standard Laplacian on S^n.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence, Union

from .errors import InternalNonInteger, MixedParity, NotDominant, WrongLength

RationalLike = Union[int, str, Fraction]
Weight = tuple  # tuple[Fraction, ...]

HALF = Fraction(1, 2)


def as_rational(x: RationalLike) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, str or Fraction")
    return Fraction(x)


def as_weight(entries: Iterable[RationalLike]) -> Weight:
    return tuple(as_rational(x) for x in entries)


def parse_weight(text: str) -> Weight:
    """Parse ``"5/2,3/2,1/2"`` into a weight tuple."""
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(p == "" for p in parts):
        raise ValueError(f"cannot parse weight {text!r}")
    try:
        return tuple(Fraction(p) for p in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse weight entry in {text!r}: {exc}") from None


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_weight(w: Weight) -> str:
    return "(" + ",".join(format_rational(x) for x in w) + ")"


@dataclass(frozen=True)
class AlgebraDescriptor:
    """so(n) with ``n >= 3``: series B for odd n, D for even n."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 3:
            raise ValueError(f"so(n) requires an integer n >= 3, got {self.n!r}")

    @property
    def rank(self) -> int:
        return self.n // 2

    @property
    def series(self) -> str:
        return "B" if self.n % 2 else "D"

    def __str__(self):
        return f"so({self.n})"


@dataclass(frozen=True)
class IrrepLabel:
    algebra: AlgebraDescriptor
    weight: Weight

    @classmethod
    def of(cls, n: int, entries: Iterable[RationalLike]) -> "IrrepLabel":
        return validate_weight(AlgebraDescriptor(n), entries)

    @property
    def n(self) -> int:
        return self.algebra.n

    def __str__(self):
        return f"{self.algebra}{format_weight(self.weight)}"


def is_dominant(algebra: AlgebraDescriptor, w: Sequence[Fraction]) -> bool:
    m = algebra.rank
    if len(w) != m:
        return False
    if any(w[i] < w[i + 1] for i in range(m - 1)):
        return False
    if algebra.series == "B":
        return w[-1] >= 0
    return m == 1 or w[-2] >= abs(w[-1])


def _parity_class(w: Sequence[Fraction]):
    """0 for all-integer, 1 for all-half-odd-integer, None for anything else."""
    if all(x.denominator == 1 for x in w):
        return 0
    if all(x.denominator == 2 for x in w):
        return 1
    return None


def validate_weight(algebra: AlgebraDescriptor, entries: Iterable[RationalLike]) -> IrrepLabel:
    w = as_weight(entries)
    if len(w) != algebra.rank:
        raise WrongLength(f"{algebra} needs {algebra.rank} entries, got {len(w)}: {format_weight(w)}")
    if _parity_class(w) is None:
        raise MixedParity(f"entries of {format_weight(w)} are neither all integers nor all half-odd-integers")
    if not is_dominant(algebra, w):
        raise NotDominant(f"{format_weight(w)} is not dominant for {algebra}")
    return IrrepLabel(algebra, w)


@lru_cache(maxsize=None)
def positive_roots(algebra: AlgebraDescriptor) -> tuple:
    """Positive roots as integer tuples: e_i -+ e_j (i < j), plus e_i for series B."""
    m = algebra.rank
    roots = []
    for i, j in combinations(range(m), 2):
        for sign in (-1, 1):
            r = [0] * m
            r[i], r[j] = 1, sign
            roots.append(tuple(r))
    if algebra.series == "B":
        for i in range(m):
            r = [0] * m
            r[i] = 1
            roots.append(tuple(r))
    return tuple(roots)


@lru_cache(maxsize=None)
def delta_vector(algebra: AlgebraDescriptor) -> Weight:
    """Half the sum of the positive roots."""
    m = algebra.rank
    if algebra.series == "B":
        return tuple(Fraction(2 * (m - i) - 1, 2) for i in range(m))
    return tuple(Fraction(m - 1 - i) for i in range(m))


def inner(mu: Sequence[Fraction], nu: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(mu, nu)), Fraction(0))


@lru_cache(maxsize=200_000)
def _weyl_dim(algebra: AlgebraDescriptor, weight: Weight) -> int:
    d = delta_vector(algebra)
    shifted = tuple(a + b for a, b in zip(weight, d))
    num = Fraction(1)
    den = Fraction(1)
    for root in positive_roots(algebra):
        num *= inner(shifted, root)
        den *= inner(d, root)
    q = num / den
    if q.denominator != 1 or q < 1:
        raise InternalNonInteger(f"Weyl product gave {q} for {algebra}{format_weight(weight)}")
    return q.numerator


def weyl_dim(label: IrrepLabel) -> int:
    """Dimension by the Weyl product over positive roots."""
    return _weyl_dim(label.algebra, label.weight)


def casimir(label: IrrepLabel) -> Fraction:
    """``<rho, rho> + 2 <rho, delta>``."""
    d = delta_vector(label.algebra)
    return inner(label.weight, label.weight) + 2 * inner(label.weight, d)


def tensor_with_standard(label: IrrepLabel) -> list:
    """Irreducible summands of ``V_label (x) C^n``, each with multiplicity one.

    The summands are ``label +- e_i`` whenever dominant, plus ``label`` itself
    for series B when its last entry is positive.  Every other term of the
    Brauer-Klimyk sum lands on a Weyl-chamber wall or cancels the zero-weight
    term, so this list is complete; ``tests`` check it by dimension count.
    """
    alg = label.algebra
    w = label.weight
    out = []
    for i in range(alg.rank):
        for step in (1, -1):
            v = list(w)
            v[i] += step
            if is_dominant(alg, v):
                out.append(IrrepLabel(alg, tuple(v)))
    if alg.series == "B" and w[-1] > 0:
        out.append(label)
    return out


def dominant_weights(algebra: AlgebraDescriptor, first_max: Fraction, half_integral: bool):
    """All dominant weights of one parity class with first entry ``<= first_max``."""
    m = algebra.rank
    offset = HALF if half_integral else Fraction(0)
    top = first_max - offset
    if top < 0:
        return
    top = int(top)  # floor for non-negative rationals

    def rec(prefix, upper):
        i = len(prefix)
        if i == m - 1:
            if algebra.series == "B":
                for a in range(upper, -1, -1):
                    yield prefix + (Fraction(a) + offset,)
            else:
                # D series has rank >= 2 here; last entry runs over [-w_{m-1}, w_{m-1}]
                a = prefix[-1]
                while a >= -prefix[-1]:
                    yield prefix + (a,)
                    a -= 1
            return
        for a in range(upper, -1, -1):
            yield from rec(prefix + (Fraction(a) + offset,), a)

    yield from rec((), top)
