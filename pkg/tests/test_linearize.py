from fractions import Fraction as F

import pytest

from bessellin import (
    BiLaurent,
    IdentityViolation,
    LinTable,
    PositivityViolation,
    UniPoly,
    a1,
    a2,
    berg_vignat_check,
    berg_vignat_substitute,
    bessel_q,
    coefficient_closed_form,
    coefficient_hypergeometric,
    ensure_all_pass,
    linearize,
    linearize_oracle,
    pochhammer,
    qbasis_to_monomial,
    verify_shift_recurrences,
)
from bessellin.report import FAIL, PASS, CheckRecord

HALF = F(1, 2)


def test_oracle_smallest_cases():
    assert linearize_oracle(0, 0).coeffs == (BiLaurent.constant(1),)
    table = linearize_oracle(1, 1)
    assert table.coeffs == (
        BiLaurent.constant(1) - a1 - a2,
        a1 + a2 - 3 * a1 * a2,
        3 * a1 * a2,
    )
    assert table.engine == "oracle"


def test_oracle_expands_the_defining_product():
    for n, m in [(2, 3), (4, 1), (0, 5)]:
        table = linearize_oracle(n, m)
        product = bessel_q(n).scale_argument(a1) * bessel_q(m).scale_argument(a2)
        assert qbasis_to_monomial(table.coeffs) == product


def test_golden_table_3_5(golden_35):
    table = linearize_oracle(3, 5)
    assert len(table) == 9
    for k in range(9):
        assert table[k] == golden_35[k], f"k={k}"


def test_golden_beta4_misprint(golden_35, golden_35_beta4_as_printed):
    """The k=4 reference entry circulates with a misprinted final term.

    Swapping the corrected 35*a1*a2^2 bracket term back to the printed
    35*a1*a2 breaks the defining expansion, so the corrected form is the
    one the table pins.
    """
    table = linearize_oracle(3, 5)
    assert table[4] == golden_35[4]
    assert table[4] != golden_35_beta4_as_printed
    literal = list(table.coeffs)
    literal[4] = golden_35_beta4_as_printed
    product = bessel_q(3).scale_argument(a1) * bessel_q(5).scale_argument(a2)
    assert qbasis_to_monomial(literal) != product
    assert qbasis_to_monomial(table.coeffs) == product


def test_closed_form_golden_entries(golden_35):
    assert coefficient_closed_form(3, 5, 8) == 143 * a1**3 * a2**5
    assert coefficient_closed_form(3, 5, 1) == golden_35[1]
    assert coefficient_closed_form(3, 5, 0) == golden_35[0]


def test_hypergeometric_golden_entries(golden_35):
    assert coefficient_hypergeometric(3, 5, 0) == BiLaurent.constant(1) - a1 - a2
    assert coefficient_hypergeometric(1, 1, 2) == 3 * a1 * a2
    assert coefficient_hypergeometric(3, 5, 8) == golden_35[8]


@pytest.mark.parametrize("n", range(5))
@pytest.mark.parametrize("m", range(5))
def test_engines_agree_small_grid(n, m):
    oracle = linearize_oracle(n, m)
    for k in range(n + m + 1):
        assert coefficient_closed_form(n, m, k) == oracle[k]
        assert coefficient_hypergeometric(n, m, k) == oracle[k]


def test_engine_dispatch_and_rejection():
    assert linearize(2, 2, engine="closed_form").engine == "closed_form"
    assert linearize(2, 2, engine="hypergeometric").coeffs == linearize_oracle(2, 2).coeffs
    with pytest.raises(ValueError):
        linearize(1, 1, engine="maple")


def test_coefficient_index_bounds():
    with pytest.raises(ValueError):
        coefficient_closed_form(2, 2, 5)
    with pytest.raises(ValueError):
        coefficient_hypergeometric(2, 2, -1)


def test_lintable_length_guard():
    with pytest.raises(ValueError):
        LinTable(n=1, m=1, coeffs=(BiLaurent.constant(1),), engine="oracle")


def test_top_coefficient_formula():
    for n, m in [(1, 1), (3, 5), (2, 4), (6, 2)]:
        expected = (
            pochhammer(HALF, n + m) / (pochhammer(HALF, n) * pochhammer(HALF, m))
        ) * a1**n * a2**m
        assert linearize_oracle(n, m)[n + m] == expected
    # the (3,5) constant is exactly 143
    assert pochhammer(HALF, 8) / (pochhammer(HALF, 3) * pochhammer(HALF, 5)) == 143


def test_total_degree_bound_and_top_nonzero():
    for n in range(5):
        for m in range(5):
            table = linearize_oracle(n, m)
            assert table[n + m]
            for coeff in table.coeffs:
                degree = coeff.total_degree
                assert degree is None or degree <= n + m


def test_symmetry_under_swapping_roles():
    for n, m in [(1, 2), (3, 5), (4, 1)]:
        left = linearize_oracle(n, m)
        right = linearize_oracle(m, n)
        for k in range(n + m + 1):
            swapped = BiLaurent(
                {(e2, e1): c for (e1, e2), c in right[k].terms()}
            )
            assert left[k] == swapped


def test_sum_rule_reconstructs_at_unit_point():
    for n, m in [(2, 2), (3, 4)]:
        table = linearize_oracle(n, m)
        values = [coeff.substitute(1, 1) for coeff in table.coeffs]
        total = UniPoly()
        for k, value in enumerate(values):
            total = total + bessel_q(k) * value
        assert total == bessel_q(n) * bessel_q(m)


@pytest.mark.parametrize("n,m", [(1, 1), (3, 5), (8, 2)])
def test_shift_recurrences_pass(n, m):
    records = verify_shift_recurrences(n, m)
    assert len(records) == n + m + 1
    assert all(record.status == PASS for record in records)
    ensure_all_pass(records)


def test_shift_recurrences_require_positive_degrees():
    with pytest.raises(ValueError):
        verify_shift_recurrences(0, 3)


def test_berg_vignat_substitute_line():
    # 3*a1*a2 restricted to (a, 1-a) is 3a - 3a^2.
    poly = berg_vignat_substitute(3 * a1 * a2)
    assert poly == UniPoly([F(0), F(3), F(-3)])
    assert poly.evaluate(HALF) == F(3, 4)


@pytest.mark.parametrize("n,m", [(1, 1), (2, 8), (3, 5), (5, 3)])
def test_berg_vignat_checks_pass(n, m):
    records = berg_vignat_check(n, m)
    assert all(record.status == PASS for record in records)
    vanishing = [r for r in records if r.check == "berg-vignat-vanishing"]
    assert sorted(r.k for r in vanishing) == list(range(min(n, m)))


def test_berg_vignat_vanishing_is_exact_polynomial_zero():
    table = linearize_oracle(2, 8)
    for k in range(2):
        assert not berg_vignat_substitute(table[k])
    assert not berg_vignat_substitute(linearize_oracle(3, 5)[2])


def test_berg_vignat_recurrence_hand_case():
    # (n,m)=(1,1), k=0: beta_1(a)/1 = a^2 beta_0^{(0,1)}(a) + (1-a)^2 beta_0^{(1,0)}(a).
    lhs = berg_vignat_substitute(linearize_oracle(1, 1)[1])
    sub_left = berg_vignat_substitute(linearize_oracle(0, 1)[0])
    sub_right = berg_vignat_substitute(linearize_oracle(1, 0)[0])
    a_sq = UniPoly([0, 0, F(1)])
    one_minus_a_sq = UniPoly([F(1), F(-2), F(1)])
    assert lhs == a_sq * sub_left + one_minus_a_sq * sub_right


def test_violation_helpers():
    bad = CheckRecord(check="berg-vignat-positivity", n=1, m=1, k=2, status=FAIL)
    with pytest.raises(PositivityViolation):
        ensure_all_pass([bad])
    bad = CheckRecord(check="shift-recurrence", n=1, m=1, k=0, status=FAIL)
    with pytest.raises(IdentityViolation):
        ensure_all_pass([bad])
