from fractions import Fraction

import pytest

import superjack as sj


def test_worked_example_cmin():
    closed = sj.c_min_closed("(3,1,0;4,2,1)")
    assert closed == sj.c_min_via_configurations("(3,1,0;4,2,1)")
    assert closed.num == "1"
    assert closed.den == "6*alpha^5 + 55*alpha^4 + 195*alpha^3 + 335*alpha^2 + 279*alpha + 90"
    assert sj.c_min_closed_factored("(3,1,0;4,2,1)") == (
        "1 / ((3*alpha + 5)*(2*alpha + 3)*(alpha + 2)*(alpha + 1)*(alpha + 3))"
    )
    # at alpha = 1 the product is 8 * 5 * 3 * 2 * 4
    assert closed(1) == Fraction(1, 960)


def test_expansion_agrees_with_closed_form():
    for sp in sj.superpartitions(3, 1) + sj.superpartitions(2, 2):
        assert sj.c_min_via_expansion(sp) == sj.c_min_closed(sp)


def test_classical_jack():
    coeffs = sj.jack_expand("(;2)")
    assert set(coeffs) == {"(;2)", "(;1,1)"}
    assert coeffs["(;1,1)"] == sj.parse_alpha_rational("2", "alpha + 1")
    assert coeffs["(;2)"] == sj.AlphaRational(1)


def test_structure():
    assert sj.conjugate("(3,1,0;5,3,2)") == "(5,4,1;3,1)"
    assert sj.diagram_rows("(3,1,0;5,3,2)") == "(5,3,3,2,1,0)"
    assert sj.star("(3,1,0;5,3,2)") == [5, 3, 3, 2, 1]
    assert sj.lambda_min(11, 3) == "(2,1,0;1,1,1,1,1,1,1,1)"


def test_nonsym_jack():
    e = sj.nonsym_jack([1, 0])
    assert e[(1, 0)] == sj.AlphaRational(1)
    assert e[(0, 1)](2) == Fraction(1, 3)
    assert sorted(sj.admissible_tableaux([0, 1])) == ["./2"]


def test_identities():
    assert sj.sigma_gamma("") == "1"
    assert sj.sigma_gamma("0") == sj.det_M("0") == sj.vandermonde_shift(2)
    for bits in ["00", "01", "10", "11"]:
        assert sj.identity2_check(bits)[0]
        assert sj.det_check(bits)[0]
        assert sj.lgv_involution_check(bits)[0]
    assert sj.recurrence_suite(1, 4).ok
    assert sj.verify_config_reduction("(2,0;1)")[0]


def test_norm_conventions():
    ok, _, failures = sj.verify_norm("(1,0;)")
    assert not ok and failures
    assert sj.verify_norm("(1,0;)", "signed")[0]
    assert sj.scalar_product_jacks("(1,0;)", "(1,0;)") == sj.expected_norm("(1,0;)", "signed")


def test_errors():
    with pytest.raises(ValueError):
        sj.c_min_closed("(1,2;3)")
    with pytest.raises(ValueError):
        sj.sigma_gamma("2")
