"""Counting Killing tensors and Killing forms on spheres."""
from math import comb

from higherspin import killing_forms, killing_space_dim
from higherspin.rep_core import format_weight


def main() -> None:
    for n in range(3, 8):
        kd = killing_space_dim(n, 2)
        vectors = comb(n + 1, 2)
        # quadratic products of Killing vectors modulo the Pluecker relations
        products = comb(vectors + 1, 2) - comb(n + 1, 4)
        pieces = ", ".join(f"{format_weight(p.weight)}:{p.dim}" for p in kd.primitive_pieces)
        print(f"S^{n}: vectors {killing_space_dim(n, 1).total_dim}, 2-tensors {kd.total_dim} = {products}  [{pieces}]")
    print()
    for j in range(3):
        kf = killing_forms(4, j)
        print(f"S^4 degree {j}: Killing {kf.killing_dim}, co-Killing {kf.co_killing_dim}")


if __name__ == "__main__":
    main()
