"""Gelfand-Tsetlin patterns, tableaux and the three ways of counting them.

Run with ``python demos/patterns_and_tableaux.py``.
"""

from gtbasis import enumerate_patterns, pattern_to_tableau, pattern_weight, weyl_dimension


def main() -> None:
    weight, n = (2, 1), 3
    patterns = enumerate_patterns(weight, n)
    print(f"weight {weight} at rank {n}: {len(patterns)} patterns, Weyl dimension {weyl_dimension(weight, n)}")
    for p in patterns:
        t = pattern_to_tableau(p)
        rows = " / ".join(" ".join(map(str, r)) for r in t.rows)
        print(f"  {str(p):<28} weight {pattern_weight(p)}  tableau {rows}")


if __name__ == "__main__":
    main()
