"""Weitzenboeck identities by linear elimination over the gradient targets.

For each fiber the engine lists the irreducible summands of fiber x R^n,
turns their Casimirs into conformal weights and relative dimensions, and
solves the two universal relations for the Laplacian.
"""
from fractions import Fraction

from higherspin import BundleKind, build_system, derive_identities, is_consequence, shifted_casimir


def describe(kind: BundleKind, n: int, j: int) -> None:
    system = build_system(kind, n, j)
    print(f"{kind.value} fiber, n={n}, j={j}: source {system.source}")
    for t in system.targets:
        print(f"  {t.role:<7} w = {str(t.conformal_weight):>6}   dim ratio {t.relative_dim}")
    print(f"  sum of dim ratios = {shifted_casimir(system, 0)}")


def show(kind: BundleKind, n: int, j: int, keep: tuple) -> None:
    system = build_system(kind, n, j)
    ident = derive_identities(system, keep)
    terms = " + ".join(f"({a}) {r}" for r, a in ident.coeffs.items())
    print(f"  Delta = {terms} + ({ident.constant})")
    norm = ident.normalized()
    print(f"  normalized: {', '.join(f'{r}: {a}' for r, a in norm.coeffs.items())}")


def main() -> None:
    describe(BundleKind.SPINOR, 5, 1)
    show(BundleKind.SPINOR, 5, 1, ("D", "Tminus"))
    show(BundleKind.SPINOR, 5, 1, ("Tplus", "D"))
    print()

    # with only two targets the kept pair is not unique, so test membership instead
    system = build_system(BundleKind.SPINOR, 5, 0)
    coeffs, constant = {"Tplus": Fraction(4, 5), "D": Fraction(9, 5)}, Fraction(3, 2)
    print("spin 1/2, n=5: Delta = 4/5 T+ + 9/5 D^2 + 3/2 follows from the relations:",
          is_consequence(system, coeffs, constant))
    print()

    describe(BundleKind.SYM, 4, 2)
    show(BundleKind.SYM, 4, 2, ("Tplus", "Tminus"))
    print()

    describe(BundleKind.SPINOR_FORM, 6, 1)
    show(BundleKind.SPINOR_FORM, 6, 1, ("D", "Tminus"))


if __name__ == "__main__":
    main()
