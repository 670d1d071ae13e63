"""Each factor of the higher spin Laplace-Dirac product kills exactly one slice.

For spin j + 1/2 on S^n the factor B(s';j) vanishes on V_j(k,s)' exactly
when s' = s, which is how the grading of sections by s shows up spectrally.
"""
from higherspin import BundleKind, frobenius_decompose, spinor_bundle
from higherspin.factorization import b_factor_ev, grading_decomposition, verify_factorization


def table(n: int, j: int, k_max: int) -> None:
    print(f"B(s';{j}) on S^{n}")
    print("  member        " + "  ".join(f"s'={s:<6}" for s in range(j + 1)))
    for m in frobenius_decompose(spinor_bundle(n, j), k_max):
        cells = "  ".join(f"{str(b_factor_ev(s, m)):<9}" for s in range(j + 1))
        print(f"  {m.label:<13} {cells}")


def main() -> None:
    table(5, 2, 2)
    print()
    for kind in (BundleKind.SPINOR, BundleKind.SYM, BundleKind.SPINOR_FORM):
        reports = verify_factorization(kind, 7, 2, 12)
        print(f"{kind.value:<12} n=7 j=2: {len(reports)} members, all with one vanishing factor")
    g = grading_decomposition(BundleKind.SYM, 4, 2, 5)
    print("slices of Sym_0^2 on S^4:", {s: [m.k for m in ms] for s, ms in g.slices.items()})
    print("every member killed by B(s;j) lies in slice s:", g.kernel_equality)


if __name__ == "__main__":
    main()
