"""Column monomials in the Weyl module and how they straighten.

A filling with a decreasing row is rewritten as a combination of
semistandard ones; the generators E_ij act by replacing one entry j with i.
"""

from gtbasis import ModuleVector, act_E, cyclic_span_dimension, highest_weight_vector, straighten, weyl_dimension


def main() -> None:
    shape, n = (2, 1), 3
    raw = ModuleVector.monomial(shape, n, [[2, 3], [1]])
    print("raw monomial      ", raw)
    print("straightened      ", straighten(raw))

    v = highest_weight_vector(shape, n)
    print("highest weight    ", v)
    print("E_12 v            ", act_E(1, 2, v))
    print("E_21 v            ", act_E(2, 1, v))
    print("E_31 E_21 v       ", act_E(3, 1, act_E(2, 1, v)))

    span = cyclic_span_dimension(shape, n)
    print(f"cyclic span of v has dimension {span} (Weyl dimension {weyl_dimension(shape, n)})")


if __name__ == "__main__":
    main()
