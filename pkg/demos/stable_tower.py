"""Basis vectors that do not change as the rank grows, and exterior powers.

An infinite pattern only differs from its neighbours up to its degree, so its
basis vector can be computed at that rank and embedded upward; the check
recomputes it at every larger rank and compares exactly.
"""

from gtbasis import enumerate_infinite_patterns, fundamental_basis, stability_check, stable_basis_vector


def main() -> None:
    weight = (2, 1)
    print(f"infinite patterns of weight {weight} up to degree 3")
    for p in enumerate_infinite_patterns(weight, 3):
        tower = stable_basis_vector(p)
        stable = stability_check(p, 5)
        print(f"  degree {p.degree}: {tower.representative}   stable to rank 5: {stable}")

    print("\nsecond exterior power at rank 4")
    for el in fundamental_basis(2, 4):
        print(f"  e_{el.indices[0]} ^ e_{el.indices[1]}  <->  {el.pattern}   scalar {el.scalar}")


if __name__ == "__main__":
    main()
