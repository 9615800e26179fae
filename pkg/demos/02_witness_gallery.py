"""A gallery of witness constructions: every family, verified on the spot.

Each witness is a concrete non-simple n-th root of a*I showing that some
(k, n, a) cell of the two factor sentences fails; the nilpotent family
covers a = 0, six block families cover a = +-1 under sentence 1, the
two-angle rotation sum covers sentence 2, and a diagonal matrix over the
complex numbers shows the complex variant of sentence 1 collapses entirely.
"""

from matroot import (
    CaseTag,
    case_counterexample,
    complex_counterexample,
    conjugate_random,
    mat_pow,
    shift_nilpotent,
    theorem2_counterexample,
    verify_witness,
    witness_to_json,
    zeros,
)


def banner(text):
    print(f"\n--- {text} ---")


def main():
    banner("a = 0: nilpotents whose index is exactly n")
    for k, n in [(4, 4), (4, 2), (6, 4)]:
        a = shift_nilpotent(k, n)
        print(f"shift_nilpotent({k}, {n}): A^{n} = O: "
              f"{mat_pow(a, n) == zeros(k, 'rational')}, "
              f"A^{n - 1} != O: {mat_pow(a, n - 1) != zeros(k, 'rational')}")
    print("rows of shift_nilpotent(4, 4):", shift_nilpotent(4, 4).rows())

    banner("a = +-1: the six case families")
    cells = [
        (CaseTag.CASE_I, 4, 4),
        (CaseTag.CASE_II, 5, 2),
        (CaseTag.CASE_III, 4, 3),
        (CaseTag.CASE_IV, 5, 5),
        (CaseTag.CASE_V, 6, 3),
        (CaseTag.CASE_VI, 3, 7),
    ]
    for tag, k, n in cells:
        w = case_counterexample(tag, k, n)
        print(f"{tag.value:>8}: k={k} n={n} a={w.a:+}  "
              f"backend={w.matrix.backend:<8} refutes sentence {w.refutes_sentence} "
              f"(verified: {verify_witness(w)})")

    banner("similarity conjugation preserves every claim")
    w = case_counterexample(CaseTag.CASE_I, 4, 4)
    for seed in (0, 1, 2):
        c = conjugate_random(w, seed)
        print(f"seed {seed}: conjugated entries {c.matrix.rows()[0]} ... "
              f"still verified: {verify_witness(c)}")

    banner("a = -1, even n: the two-angle rotation witness")
    w = theorem2_counterexample(6, 4)
    print("block angles pi/4 and 3 pi/4; A^4 = -I and no quadratic factor")
    print(f"vanishes at A (verified: {verify_witness(w)})")

    banner("complex scalars: the sentence fails everywhere")
    w = complex_counterexample(3, 3, 1)
    print("diag(1, zeta_3, zeta_3) is a cube root of I over the complexes;")
    print(f"its factor sum has (1,1) entry 3, so it refutes "
          f"(verified: {verify_witness(w)})")

    banner("wire form")
    import json

    print(json.dumps(witness_to_json(case_counterexample(CaseTag.CASE_I, 2, 2))))


if __name__ == "__main__":
    main()
