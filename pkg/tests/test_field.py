from fractions import Fraction

import pytest

from quasihopf.field import FieldError, FieldSpec, ModP


def test_rational_parsing_and_canonical_strings():
    Q = FieldSpec.rationals()
    assert Q.of("-3/7") == Fraction(-3, 7)
    assert Q.of("4/2") == Fraction(2)
    assert Q.to_str(Q.of("4/2")) == "2"
    assert Q.to_str(Q.of("-3/7")) == "-3/7"
    assert Q.of(5) == Fraction(5)


def test_prime_field_arithmetic():
    F = FieldSpec.prime(5)
    a = F.of(3)
    b = F.of(4)
    assert a + b == F.of(2)
    assert a * b == F.of(2)
    assert a - b == F.of(4)
    assert -a == F.of(2)
    assert (a / b) * b == a
    assert F.of(-1) == F.of(4)
    with pytest.raises(ZeroDivisionError):
        a / F.zero


def test_prime_validation():
    with pytest.raises(FieldError):
        FieldSpec.prime(6)
    with pytest.raises(FieldError):
        FieldSpec.prime(1)
    with pytest.raises(FieldError):
        FieldSpec.prime(2 ** 31)
    FieldSpec.prime(2 ** 31 - 1)  # Mersenne prime, largest allowed


def test_mixed_fields_rejected():
    F5, F7 = FieldSpec.prime(5), FieldSpec.prime(7)
    with pytest.raises(FieldError):
        ModP(1, 5) + ModP(1, 7)
    with pytest.raises(FieldError):
        F5.of(ModP(1, 7))
    with pytest.raises(FieldError):
        FieldSpec.rationals().of(ModP(1, 5))


def test_fraction_coercion_into_prime_field():
    F = FieldSpec.prime(7)
    assert F.of(Fraction(1, 2)) == F.of(4)  # 2 * 4 = 8 = 1 mod 7
    with pytest.raises(FieldError):
        F.of(Fraction(1, 7))


def test_residues_always_reduced():
    x = ModP(12, 5)
    assert 0 <= x.v < 5
    y = ModP(-1, 5)
    assert y.v == 4
