"""Witness constructions: nilpotents, case families, rotations, conjugation."""

import json
import math
from fractions import Fraction

import numpy as np
import pytest

from matroot import (
    CaseTag,
    Matrix,
    RootConvention,
    Tolerance,
    Witness,
    case_counterexample,
    complex_counterexample,
    conjugate_matrix,
    conjugate_random,
    determinant,
    geometric_factor_sum,
    identity,
    is_zero,
    mat_eq,
    mat_pow,
    quadratic_factor_eval,
    rotation,
    scalar_matrix,
    scalar_mul,
    scale_from_unit,
    scale_to_unit,
    shift_nilpotent,
    swap_block,
    theorem2_counterexample,
    verify_witness,
    witness_from_json,
    witness_to_json,
    zeros,
)

TOL = Tolerance(1e-9, 1e-9)


# --- shift_nilpotent ------------------------------------------------------------


def test_full_shift_has_first_superdiagonal():
    a = shift_nilpotent(4, 4)
    assert a == Matrix([[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 0, 0]])


def test_square_nilpotent_is_top_right_corner():
    a = shift_nilpotent(4, 2)
    expected = zeros(4, "rational").array.copy()
    expected[0, 3] = 1
    assert a == Matrix._wrap(expected, "rational")
    assert mat_pow(a, 2) == zeros(4, "rational")
    assert a != zeros(4, "rational")


def test_smallest_shift():
    assert shift_nilpotent(2, 2) == Matrix([[0, 1], [0, 0]])


def test_shift_nilpotency_index_is_exactly_n():
    for k in range(2, 13):
        for n in range(2, k + 1):
            a = shift_nilpotent(k, n)
            assert mat_pow(a, n) == zeros(k, "rational")
            assert mat_pow(a, n - 1) != zeros(k, "rational")


def test_shift_rejects_out_of_range_indices():
    with pytest.raises(ValueError):
        shift_nilpotent(3, 4)
    with pytest.raises(ValueError):
        shift_nilpotent(3, 1)


# --- the six case families --------------------------------------------------------


def test_case_i_is_swap_blocks():
    w = case_counterexample(CaseTag.CASE_I, 4, 4)
    t = swap_block()
    assert w.matrix.backend == "rational"
    assert w.matrix == Matrix(
        [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]
    )
    assert mat_pow(w.matrix, 4) == identity(4, "rational")
    assert w.a == 1 and w.refutes_sentence == 1
    value = geometric_factor_sum(w.matrix, 4, RootConvention.real(4, 1))
    assert not is_zero(value)


def test_case_ii_has_unit_corner_and_refutes():
    w = case_counterexample(CaseTag.CASE_II, 5, 2)
    assert w.matrix[0, 0] == 1
    assert mat_pow(w.matrix, 2) == identity(5, "rational")
    value = geometric_factor_sum(w.matrix, 2, RootConvention.real(2, 1))
    assert value[0, 0] == 2  # the (1,1) entry accumulates one per power
    assert not is_zero(value)


def test_case_iii_entries_and_factor_sum():
    w = case_counterexample(CaseTag.CASE_III, 4, 3)
    m = w.matrix
    assert m.backend == "real"
    assert m[0, 0] == 1.0 and m[1, 1] == 1.0
    assert abs(m[2, 2] - math.cos(2.0 * math.pi / 3.0)) < 1e-15
    assert mat_eq(mat_pow(m, 3), identity(4, "real"), TOL)
    value = geometric_factor_sum(m, 3, RootConvention.real(3, 1))
    assert abs(value[0, 0] - 3.0) < 1e-12  # (1,1) entry of each power is 1
    assert not is_zero(value, TOL)


def test_case_v_alternating_sum_entry_is_n():
    w = case_counterexample(CaseTag.CASE_V, 4, 3)
    m = w.matrix
    assert w.a == -1
    assert mat_eq(mat_pow(m, 3), scalar_matrix(-1.0, 4, "real"), TOL)
    value = geometric_factor_sum(m, 3, RootConvention.real(3, -1))
    assert abs(value[0, 0] - 3.0) < 1e-12
    assert not is_zero(value, TOL)


@pytest.mark.parametrize(
    "tag,k,n",
    [
        (CaseTag.CASE_I, 2, 2),
        (CaseTag.CASE_I, 8, 6),
        (CaseTag.CASE_II, 3, 8),
        (CaseTag.CASE_II, 9, 2),
        (CaseTag.CASE_III, 4, 5),
        (CaseTag.CASE_III, 8, 9),
        (CaseTag.CASE_IV, 3, 3),
        (CaseTag.CASE_IV, 7, 7),
        (CaseTag.CASE_V, 6, 5),
        (CaseTag.CASE_VI, 5, 9),
    ],
)
def test_case_witnesses_satisfy_equation_and_refute(tag, k, n):
    w = case_counterexample(tag, k, n)
    target = scalar_matrix(float(w.a), k, "real")
    assert mat_eq(
        mat_pow(w.matrix if w.matrix.backend == "real" else scalar_mul(1.0, w.matrix), n),
        target,
        TOL,
    )
    conv = RootConvention.real(n, w.a)
    assert not mat_eq(
        scalar_mul(1.0, w.matrix), scalar_matrix(conv.root, k, "real"), TOL
    )
    assert verify_witness(w)


@pytest.mark.parametrize(
    "tag,k,n",
    [
        (CaseTag.CASE_I, 3, 4),  # odd k
        (CaseTag.CASE_I, 4, 3),  # odd n
        (CaseTag.CASE_II, 4, 4),  # even k
        (CaseTag.CASE_III, 2, 3),  # k = 2: sentence is true there
        (CaseTag.CASE_III, 4, 4),  # even n
        (CaseTag.CASE_IV, 4, 3),  # even k
        (CaseTag.CASE_IV, 1, 3),  # k too small
        (CaseTag.CASE_V, 2, 5),  # k = 2 rejected
        (CaseTag.CASE_V, 5, 5),  # odd k
        (CaseTag.CASE_VI, 3, 4),  # even n
        (CaseTag.NILPOTENT_SHIFT, 4, 4),  # not a case family tag
    ],
)
def test_case_parity_validation(tag, k, n):
    with pytest.raises(ValueError):
        case_counterexample(tag, k, n)


# --- theorem-2 counterexample -------------------------------------------------------


def test_two_angle_witness_structure_and_power():
    w = theorem2_counterexample(4, 4)
    m = w.matrix
    r1, r2 = rotation(math.pi / 4.0), rotation(3.0 * math.pi / 4.0)
    assert mat_eq(Matrix([[m[0, 0], m[0, 1]], [m[1, 0], m[1, 1]]]), r1, TOL)
    assert mat_eq(Matrix([[m[2, 2], m[2, 3]], [m[3, 2], m[3, 3]]]), r2, TOL)
    assert mat_eq(mat_pow(m, 4), scalar_matrix(-1.0, 4, "real"), Tolerance(1e-10, 0.0))
    for i in (1, 2):
        assert not is_zero(quadratic_factor_eval(m, 4, -1, i), TOL)
    assert w.refutes_sentence == 2 and w.a == -1


def test_two_angle_witness_larger_orders():
    w = theorem2_counterexample(6, 4)
    assert w.matrix.order == 6
    assert mat_eq(mat_pow(w.matrix, 4), scalar_matrix(-1.0, 6, "real"), TOL)
    for i in (1, 2):
        assert not is_zero(quadratic_factor_eval(w.matrix, 4, -1, i), TOL)

    w = theorem2_counterexample(4, 6)
    assert mat_eq(
        mat_pow(w.matrix, 6), scalar_matrix(-1.0, 4, "real"), Tolerance(1e-10, 0.0)
    )
    assert verify_witness(w)


@pytest.mark.parametrize("k,n", [(4, 2), (5, 4), (2, 4), (3, 6), (4, 5)])
def test_two_angle_witness_rejects_degenerate_cells(k, n):
    with pytest.raises(ValueError):
        theorem2_counterexample(k, n)


# --- complex witness -----------------------------------------------------------------


def test_complex_witness_simplest_case_is_real_diagonal():
    w = complex_counterexample(2, 2, 1)
    m = w.matrix
    assert m.backend == "complex"
    assert abs(m[0, 0] - 1) < 1e-15 and abs(m[1, 1] + 1) < 1e-15
    assert mat_eq(mat_pow(m, 2), identity(2, "complex"), TOL)
    assert verify_witness(w)


def test_complex_witness_cube_root_fills_diagonal():
    w = complex_counterexample(3, 3, 1)
    conv = RootConvention.principal(3, 1)
    value = geometric_factor_sum(w.matrix, 3, conv)
    assert abs(value[0, 0] - 3.0) < 1e-12
    assert verify_witness(w)


def test_complex_witness_scales_with_principal_root():
    w = complex_counterexample(2, 4, 16)
    m = w.matrix
    assert abs(m[0, 0] - 2.0) < 1e-12
    assert abs(m[1, 1] - 2.0j) < 1e-12
    assert mat_eq(
        mat_pow(m, 4), scalar_matrix(16.0 + 0.0j, 2, "complex"), Tolerance(1e-10, 1e-10)
    )


def test_complex_witness_rejects_zero_scalar():
    with pytest.raises(ValueError):
        complex_counterexample(2, 2, 0)


# --- conjugation ------------------------------------------------------------------------


def test_conjugation_is_deterministic_per_seed():
    w = case_counterexample(CaseTag.CASE_I, 4, 4)
    a = conjugate_random(w, seed=1)
    b = conjugate_random(w, seed=1)
    assert a.matrix == b.matrix
    c = conjugate_random(w, seed=2)
    assert c.matrix != a.matrix


def test_conjugated_swap_witness_still_refutes_exactly():
    w = conjugate_random(case_counterexample(CaseTag.CASE_I, 4, 4), seed=0)
    assert w.matrix.backend == "rational"
    assert mat_pow(w.matrix, 4) == identity(4, "rational")
    value = geometric_factor_sum(w.matrix, 4, RootConvention.real(4, 1))
    assert not is_zero(value)
    assert verify_witness(w)


def test_conjugation_preserves_nilpotency_across_many_seeds():
    a = shift_nilpotent(5, 3)
    for seed in range(100):
        c = conjugate_matrix(a, seed)
        assert mat_pow(c, 3) == zeros(5, "rational")
        assert mat_pow(c, 2) != zeros(5, "rational")


def test_conjugation_preserves_determinant_exactly():
    m = Matrix([[2, 1, 0], [0, 1, 3], [1, 0, 1]])
    for seed in (0, 5, 17):
        assert determinant(conjugate_matrix(m, seed)) == determinant(m)


def test_float_conjugation_respects_invariance_tolerance():
    w = case_counterexample(CaseTag.CASE_III, 6, 5)
    loose = Tolerance(1e-7, 1e-7)
    for seed in range(25):
        c = conjugate_random(w, seed)
        assert mat_eq(mat_pow(c.matrix, 5), identity(6, "real"), loose)
        assert verify_witness(c, loose)


def test_conjugation_keeps_tag_and_instance_fields():
    w = conjugate_random(theorem2_counterexample(4, 4), seed=9)
    assert w.tag is CaseTag.THEOREM2_CE
    assert (w.k, w.n, w.a, w.refutes_sentence) == (4, 4, -1, 2)


def test_conjugated_complex_witness_still_refutes():
    w = complex_counterexample(3, 3, 2 - 1j)
    for seed in (0, 4, 9):
        assert verify_witness(conjugate_random(w, seed), Tolerance(1e-7, 1e-7))


# --- scaling ---------------------------------------------------------------------------


def test_scale_to_unit_with_perfect_square_stays_rational():
    x = scalar_mul(2, swap_block())
    back = scale_to_unit(x, 2, 4)
    assert back.backend == "rational"
    assert back == swap_block()


def test_scale_to_unit_fixes_identity():
    assert scale_to_unit(identity(3, "rational"), 3, 1) == identity(3, "rational")


def test_scale_to_unit_negative_scalar_rotation():
    x = scalar_mul(3.0, rotation(math.pi / 4.0))
    back = scale_to_unit(x, 4, -81)
    assert mat_eq(back, rotation(math.pi / 4.0), Tolerance(1e-12, 1e-12))
    # x is indeed a 4th root of -81 I
    assert mat_eq(
        mat_pow(x, 4), scalar_matrix(-81.0, 2, "real"), Tolerance(1e-9, 1e-9)
    )


def test_scale_round_trip():
    rng = np.random.default_rng(59)
    for a in (2, -3, 0.5, Fraction(9, 4)):
        n = 3 if (isinstance(a, (int, float, Fraction)) and a < 0) else 2
        x = Matrix(rng.uniform(-2.0, 2.0, size=(3, 3)))
        there = scale_from_unit(x, n, a)
        back = scale_to_unit(there, n, a)
        assert mat_eq(back, x, Tolerance(1e-12, 1e-12))


def test_scale_round_trip_exact_for_perfect_roots():
    x = Matrix([[1, 2], [3, 4]])
    there = scale_from_unit(x, 2, Fraction(9, 4))
    assert there.backend == "rational"
    assert scale_to_unit(there, 2, Fraction(9, 4)) == x


def test_scaling_rejects_zero():
    with pytest.raises(ValueError):
        scale_to_unit(identity(2, "rational"), 3, 0)


# --- witness JSON ------------------------------------------------------------------------


@pytest.mark.parametrize(
    "witness",
    [
        case_counterexample(CaseTag.CASE_I, 4, 4),
        case_counterexample(CaseTag.CASE_VI, 5, 3),
        theorem2_counterexample(6, 4),
        complex_counterexample(3, 4, 2 + 1j),
        Witness(shift_nilpotent(5, 3), CaseTag.NILPOTENT_SHIFT, 5, 3, 0, 1),
    ],
)
def test_witness_json_round_trip(witness):
    data = witness_to_json(witness)
    again = witness_from_json(json.loads(json.dumps(data)))
    assert again.matrix == witness.matrix
    assert again.tag == witness.tag
    assert (again.k, again.n) == (witness.k, witness.n)
    assert again.a == witness.a
    assert again.refutes_sentence == witness.refutes_sentence


def test_witness_validates_order():
    with pytest.raises(ValueError):
        Witness(identity(3, "rational"), CaseTag.CASE_I, 4, 4, 1, 1)
