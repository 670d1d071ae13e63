"""Dirac and Rarita-Schwinger spectra on S^n, straight from parent weights.

Run: python3 demos/dirac_spectrum.py [n]
"""
import sys
from fractions import Fraction
from math import comb

from higherspin import OperatorKind, spectrum_table, spinor_bundle


def show(n: int, j: int, k_max: int) -> None:
    print(f"S^{n}, spin {j} + 1/2")
    for line in spectrum_table(spinor_bundle(n, j), OperatorKind.DIRAC_SQ, k_max):
        m = line.member
        print(f"  k={m.k} s={m.s}  D^2 = {str(line.eigenvalue):>8}  dim {line.dim} x{line.multiplicity}  {m.label}")


def main() -> None:
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    show(n, 0, 3)
    # the classical count is per sign of the eigenvalue, so each member carries twice that
    for k in range(4):
        print(f"  classical multiplicity of +-{Fraction(2 * k + n, 2)}: {2 ** (n // 2) * comb(k + n - 1, k)} each")
    print()
    show(n, 1, 2)


if __name__ == "__main__":
    main()
