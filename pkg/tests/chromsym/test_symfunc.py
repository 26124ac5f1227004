# Copyright 2024 - chromsym contributors

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

# pylint: disable=missing-module-docstring
# pylint: disable=missing-function-docstring

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from chromsym.errors import BasisMismatchError, InvalidStructureError
from chromsym.partitions import compositions_of, partitions_of
from chromsym.symfunc import (
    Basis,
    SymFunc,
    basis_vector_in_m,
    chromatic_polynomial,
    convert,
    inverse_kostka,
    inverse_kostka_matrix,
    kostka,
    kostka_matrix,
    monomial_at_ones,
    omega,
    semistandard_tableaux,
    specialize_ones,
    transition_matrix,
)

from tests.chromsym.const import P


def x_path3() -> SymFunc:
    return SymFunc(3, Basis.MONOMIAL, {P("1,1,1"): 6, P("2,1"): 1})


def symfuncs(basis: Basis, max_degree: int = 5):
    return st.integers(min_value=1, max_value=max_degree).flatmap(
        lambda d: st.lists(
            st.integers(min_value=-5, max_value=5),
            min_size=len(partitions_of(d)),
            max_size=len(partitions_of(d)),
        ).map(lambda values: SymFunc.from_vector(d, basis, values))
    )


# region SymFunc


def test_zero_coefficients_are_dropped():
    f = SymFunc(2, Basis.MONOMIAL, {P("2"): 0, P("1,1"): 3})
    assert f.coeffs == {P("1,1"): Fraction(3)}
    assert f == SymFunc(2, "m", {P("1,1"): Fraction(3)})


def test_keys_must_have_the_degree():
    with pytest.raises(InvalidStructureError):
        SymFunc(3, Basis.MONOMIAL, {P("2"): 1})


def test_non_rational_coefficient_is_rejected():
    with pytest.raises(InvalidStructureError):
        SymFunc(2, Basis.MONOMIAL, {P("2"): 0.5})


def test_unknown_basis():
    with pytest.raises(InvalidStructureError):
        Basis.parse("p")
    assert Basis.parse(" S ") is Basis.SCHUR


def test_arithmetic():
    f = SymFunc.basis_element(Basis.ELEMENTARY, P("2,1"))
    g = SymFunc.basis_element(Basis.ELEMENTARY, P("3"))
    total = 3 * g + f
    assert total[P("3")] == 3
    assert total[P("2,1")] == 1
    assert (total - f) == g * 3
    assert (f - f) == SymFunc.zero(3, Basis.ELEMENTARY)


def test_arithmetic_rejects_mixed_bases():
    with pytest.raises(BasisMismatchError):
        _ = SymFunc.zero(2, Basis.MONOMIAL) + SymFunc.zero(2, Basis.SCHUR)
    with pytest.raises(BasisMismatchError):
        _ = SymFunc.zero(2, Basis.MONOMIAL) + SymFunc.zero(3, Basis.MONOMIAL)


def test_transition_matrix_rejects_wrong_input():
    with pytest.raises(BasisMismatchError):
        transition_matrix(3, Basis.ELEMENTARY, Basis.MONOMIAL).apply(x_path3())


def test_vector_and_integer_coefficients():
    f = x_path3()
    assert f.vector() == [0, 1, 6]
    assert f.integer_coefficients() == {P("3"): 0, P("2,1"): 1, P("1,1,1"): 6}
    with pytest.raises(InvalidStructureError):
        SymFunc(1, Basis.MONOMIAL, {P("1"): Fraction(1, 2)}).integer_coefficients()


def test_from_vector_checks_length():
    with pytest.raises(InvalidStructureError):
        SymFunc.from_vector(3, Basis.MONOMIAL, [1, 2])


def test_dict_serialization():
    f = SymFunc(2, Basis.SCHUR, {P("2"): Fraction(-1, 2), P("1,1"): 4})
    data = f.to_dict()
    assert data == {
        "degree": 2,
        "basis": "s",
        "coeffs": [
            {"partition": "2", "num": -1, "den": 2},
            {"partition": "1,1", "num": 4, "den": 1},
        ],
    }
    assert SymFunc.from_dict(data) == f


def test_from_dict_missing_keys():
    with pytest.raises(InvalidStructureError, match="coeffs"):
        SymFunc.from_dict({"degree": 1, "basis": "m"})


def test_pretty():
    assert convert(x_path3(), Basis.ELEMENTARY).pretty() == "3·e_{3} + 1·e_{2,1}"
    assert SymFunc.zero(4, Basis.SCHUR).pretty() == "0"
    s22 = convert(SymFunc.basis_element(Basis.SCHUR, P("2,2")), Basis.COMPLETE)
    assert str(s22) == "-1·h_{3,1} + 1·h_{2,2}"


# endregion
# region Kostka numbers


def test_semistandard_tableaux():
    fillings = sorted(semistandard_tableaux(P("2,1"), (1, 1, 1)))
    assert fillings == [((1, 2), (3,)), ((1, 3), (2,))]


@pytest.mark.parametrize(
    "mu,nu,expected",
    [
        ("2,1", (1, 1, 1), 2),
        ("3", (1, 1, 1), 1),
        ("1,1,1", (3,), 0),
        ("2,2", (2, 1, 1), 1),
        ("3,1", (2, 1, 1), 2),
        ("3,1", (1, 1, 2), 2),
        ("3,2,1", (1,) * 6, 16),
    ],
)
def test_kostka(mu, nu, expected):
    assert kostka(P(mu), nu) == expected


def test_kostka_size_mismatch():
    with pytest.raises(InvalidStructureError):
        kostka(P("2,1"), (1, 1))


def test_kostka_matrix_is_unitriangular():
    matrix = kostka_matrix(5)
    for i, row in enumerate(matrix):
        assert row[i] == 1
        assert all(value == 0 for value in row[:i])


@pytest.mark.parametrize("d", range(1, 9))
def test_kostka_is_triangular_in_dominance_order(d):
    index = partitions_of(d)
    for mu, row in zip(index, kostka_matrix(d)):
        for nu, value in zip(index, row):
            if mu == nu:
                assert value == 1
            elif value:
                assert mu.dominates(nu)


@pytest.mark.parametrize("d", range(1, 7))
def test_kostka_ignores_content_order(d):
    for nu in compositions_of(d):
        content = tuple(sorted(nu, reverse=True))
        for mu in partitions_of(d):
            assert kostka(mu, nu) == kostka(mu, content)


def test_inverse_kostka_values():
    assert inverse_kostka(P("2"), P("1,1")) == -1
    assert inverse_kostka(P("2,1"), P("1,1,1")) == -2
    assert inverse_kostka(P("3"), P("1,1,1")) == 1
    assert inverse_kostka(P("3,1"), P("2,2")) == -1
    assert inverse_kostka(P("2,2"), P("2,2")) == 1


def test_inverse_kostka_size_mismatch():
    with pytest.raises(InvalidStructureError):
        inverse_kostka(P("2"), P("1,1,1"))


@pytest.mark.parametrize("d", range(1, 7))
def test_inverse_kostka_methods_agree(d):
    assert inverse_kostka_matrix(d) == inverse_kostka_matrix(d, method="algebraic")


def test_inverse_kostka_unknown_method():
    with pytest.raises(InvalidStructureError):
        inverse_kostka_matrix(3, method="guess")


# endregion
# region Basis changes


def test_schur_monomial_expansion():
    s21 = basis_vector_in_m(Basis.SCHUR, P("2,1"))
    assert s21.integer_coefficients() == {P("3"): 0, P("2,1"): 1, P("1,1,1"): 2}


def test_elementary_and_complete_monomial_expansion():
    e21 = basis_vector_in_m(Basis.ELEMENTARY, P("2,1"))
    assert e21.integer_coefficients() == {P("3"): 0, P("2,1"): 1, P("1,1,1"): 3}
    h2 = basis_vector_in_m(Basis.COMPLETE, P("2"))
    assert h2.integer_coefficients() == {P("2"): 1, P("1,1"): 1}


def test_path3_in_every_basis():
    x = x_path3()
    assert convert(x, "e") == SymFunc(3, "e", {P("3"): 3, P("2,1"): 1})
    assert convert(x, "s") == SymFunc(3, "s", {P("2,1"): 1, P("1,1,1"): 4})
    assert convert(convert(x, "h"), "m") == x


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(list(Basis)).flatmap(symfuncs))
def test_conversion_round_trip(f):
    for basis in Basis:
        assert convert(convert(f, basis), f.basis) == f


@settings(max_examples=40, deadline=None)
@given(symfuncs(Basis.MONOMIAL, max_degree=4))
def test_omega_is_an_involution(f):
    assert omega(omega(f)) == f


@pytest.mark.parametrize("d", range(1, 7))
@pytest.mark.parametrize("basis", list(Basis))
def test_omega_is_an_involution_on_basis_elements(d, basis):
    for lam in partitions_of(d):
        element = SymFunc.basis_element(basis, lam)
        assert omega(omega(element)) == element


def test_omega_swaps_e_and_h():
    e21 = SymFunc.basis_element(Basis.ELEMENTARY, P("2,1"))
    assert omega(e21) == SymFunc.basis_element(Basis.COMPLETE, P("2,1"))
    s31 = SymFunc.basis_element(Basis.SCHUR, P("3,1"))
    assert omega(s31) == SymFunc.basis_element(Basis.SCHUR, P("2,1,1"))


def test_omega_in_monomial_basis():
    # omega(m_{1,1}) = omega(e_2) = h_2 = m_2 + m_{1,1}
    m11 = SymFunc.basis_element(Basis.MONOMIAL, P("1,1"))
    assert omega(m11) == SymFunc(2, "m", {P("2"): 1, P("1,1"): 1})


# endregion
# region Specializations


def test_monomial_at_ones():
    assert monomial_at_ones(P("1,1,1"), 3) == 1
    assert monomial_at_ones(P("2,1"), 3) == 6
    assert monomial_at_ones(P("2,1"), 1) == 0
    assert monomial_at_ones(P("1,1"), 4) == 6


def test_specialize_ones_counts_colorings():
    assert specialize_ones(x_path3(), 3) == 12
    assert specialize_ones(convert(x_path3(), Basis.SCHUR), 3) == 12
    with pytest.raises(InvalidStructureError):
        specialize_ones(x_path3(), -1)


def test_chromatic_polynomial():
    k = sympy.Symbol("k")
    assert sympy.expand(chromatic_polynomial(x_path3(), 3) - k * (k - 1) ** 2) == 0


# endregion
