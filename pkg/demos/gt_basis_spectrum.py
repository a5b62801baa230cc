"""The Gelfand-Tsetlin basis and the quantum minors that diagonalize it.

Each basis vector is produced from the highest weight vector by lowering
operators; every quantum minor A_m(u) then acts on it by a polynomial in u
whose roots are read off the pattern.
"""

from gtbasis import EigenvaluePolynomial, gt_basis, quantum_minor_apply


def show_poly(coeffs) -> str:
    out = ""
    for s in range(len(coeffs) - 1, -1, -1):
        c = coeffs[s]
        if not c:
            continue
        mag = abs(c)
        body = ("" if mag == 1 and s else str(mag)) + ("u" if s else "") + (f"^{s}" if s > 1 else "")
        sign = "-" if c < 0 else "+"
        out += f" {sign} {body}" if out else ("-" if c < 0 else "") + body
    return out or "0"


def main() -> None:
    weight, n = (2, 1), 3
    for pattern, v in gt_basis(weight, n):
        print(pattern)
        print("   e =", v)
        for m in range(1, n + 1):
            expected = EigenvaluePolynomial.for_pattern(pattern, m).coefficients()
            poly = quantum_minor_apply(m, v)
            ok = all(poly[s] == v * c for s, c in enumerate(expected)) and poly.degree == m
            print(f"   A_{m}(u) e = ({show_poly(expected)}) e   {'exact' if ok else 'MISMATCH'}")


if __name__ == "__main__":
    main()
