"""The closed-form n-th power of a 2x2 upper-triangular matrix.

For A = [[p, q], [0, r]] the power A^n equals s_n A - p r s_(n-1) I, where
s_m is the complete homogeneous symmetric sum of degree m-1 in p and r.
The sums are accumulated term by term, so p = r costs nothing special.
This script checks the formula against brute-force multiplication and then
uses it to classify triangular roots of the identity by their diagonal.
"""

import cmath
import math

import numpy as np

from matroot import (
    TriangularParams,
    identity,
    lemma1_root_classifier,
    mat_mul,
    triangular_power_formula,
)


def naive_power(m, n):
    out = identity(2, m.backend)
    for _ in range(n):
        out = mat_mul(out, m)
    return out


def main():
    print("exact check at p=2, q=1, r=3, n=2:")
    print("   formula:", triangular_power_formula(TriangularParams(2, 1, 3, 2)).rows())
    print("   naive:  ", naive_power(TriangularParams(2, 1, 3, 2).matrix(), 2).rows())

    print("\nequal diagonal (the would-be singular case p = r):")
    print("   [[1,1],[0,1]]^4 =",
          triangular_power_formula(TriangularParams(1, 1, 1, 4)).rows())

    rng = np.random.default_rng(0)
    worst = 0.0
    for _ in range(300):
        p, q, r = (complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(3))
        n = int(rng.integers(2, 21))
        got = triangular_power_formula(TriangularParams(p, q, r, n))
        want = naive_power(TriangularParams(p, q, r, n).matrix(), n)
        scale = max(1.0, max(abs(e) for e in want.entries()))
        worst = max(
            worst,
            max(abs(x - y) for x, y in zip(got.entries(), want.entries())) / scale,
        )
    print(f"\n300 random complex params, n up to 20: worst scaled deviation {worst:.2e}")

    print("\nclassifying triangular n-th roots of I by their diagonal:")
    zeta = lambda n, u: cmath.exp(2j * math.pi * u / n)
    samples = [
        TriangularParams(zeta(3, 1), 5.0, zeta(3, 2), 3),
        TriangularParams(zeta(8, 3), -1.0 + 0.5j, zeta(8, 5), 8),
        TriangularParams(1, 0, 1, 4),
        TriangularParams(1, 1, 1, 4),
        TriangularParams(2, 0, 1, 4),
    ]
    for params in samples:
        got = lemma1_root_classifier(params)
        label = f"(u, v) = {got}" if got else "not a non-simple root of I"
        print(f"   p={params.p!s:<24} q={params.q!s:<12} r={params.r!s:<24}"
              f" n={params.n}: {label}")
    print("\nnote the diagonal exponents always cancel mod n when the trace")
    print("and determinant are real, matching the real-coefficient constraint")


if __name__ == "__main__":
    main()
