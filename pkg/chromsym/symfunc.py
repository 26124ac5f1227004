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

"""
Homogeneous symmetric functions as exact coefficient vectors.

A degree-d function is stored in one of the bases m, e, h, s. The monomial basis is
the hub: every other basis element is expanded into monomials by working in exactly
d variables, and every conversion is an exact rational solve against those
expansions (done once per degree with ``sympy`` and cached).
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import Iterator, Mapping, Sequence

import sympy

from .const import LOGGER, StructureValidator
from .errors import BasisMismatchError, InvalidStructureError, SingularSystemError
from .partitions import Partition, partitions_of
from .tableaux import signed_tabloid_count

Scalar = int | Fraction


class Basis(Enum):
    """Basis of the ring of symmetric functions.

    Allowed values are:
        - MONOMIAL ("m")
        - ELEMENTARY ("e")
        - COMPLETE ("h", complete homogeneous)
        - SCHUR ("s")
    """

    MONOMIAL = "m"
    ELEMENTARY = "e"
    COMPLETE = "h"
    SCHUR = "s"

    @classmethod
    def parse(cls, text: "str | Basis") -> "Basis":
        """Accept either a Basis or its one-letter name."""
        if isinstance(text, Basis):
            return text
        try:
            return cls(text.strip().lower())
        except ValueError as e:
            raise InvalidStructureError(
                f"Unknown basis '{text}' (expected one of m, e, h, s)"
            ) from e


def _to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    raise InvalidStructureError(f"Coefficient {value!r} is not an exact rational")


@dataclass
class SymFunc:
    """
    A homogeneous symmetric function of a fixed degree in a fixed basis.

    Zero coefficients are dropped on construction, so two functions are equal iff
    their nonzero coefficients agree.

    Raises:
        InvalidStructureError: If some key is not a partition of ``degree``.
    """

    degree: int
    basis: Basis
    coeffs: dict[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        self.basis = Basis.parse(self.basis)
        normalized: dict[Partition, Fraction] = {}
        for lam, value in self.coeffs.items():
            if not isinstance(lam, Partition) or lam.size != self.degree:
                raise InvalidStructureError(
                    f"Key {lam!r} is not a partition of {self.degree}"
                )
            value = _to_fraction(value)
            if value:
                normalized[lam] = value
        self.coeffs = normalized

    # region Construction

    @classmethod
    def zero(cls, degree: int, basis: Basis) -> "SymFunc":
        """The zero function."""
        return cls(degree, basis, {})

    @classmethod
    def basis_element(cls, basis: Basis, lam: Partition) -> "SymFunc":
        """The basis element ``b_lam`` itself."""
        return cls(lam.size, basis, {lam: Fraction(1)})

    @classmethod
    def from_vector(
        cls, degree: int, basis: Basis, values: Sequence[Scalar]
    ) -> "SymFunc":
        """Build a function from a dense vector in canonical partition order."""
        index = partitions_of(degree)
        StructureValidator.get_validator().validate_same_size(
            "coefficient vector", len(values), len(index)
        )
        return cls(degree, basis, dict(zip(index, (Fraction(v) for v in values))))

    # endregion
    # region Access

    def __getitem__(self, lam: Partition) -> Fraction:
        return self.coeffs.get(lam, Fraction(0))

    def vector(self) -> list[Fraction]:
        """Dense coefficient vector in canonical partition order."""
        return [self[lam] for lam in partitions_of(self.degree)]

    def terms(self) -> Iterator[tuple[Partition, Fraction]]:
        """Nonzero terms in canonical partition order."""
        for lam in partitions_of(self.degree):
            if lam in self.coeffs:
                yield lam, self.coeffs[lam]

    def is_integral(self) -> bool:
        """Whether every coefficient is an integer."""
        return all(c.denominator == 1 for c in self.coeffs.values())

    def integer_coefficients(self) -> dict[Partition, int]:
        """
        Every coefficient (zeros included) as an int, in canonical order.

        Raises:
            InvalidStructureError: If some coefficient is not an integer.
        """
        if not self.is_integral():
            raise InvalidStructureError(f"Non-integral coefficients in {self}")
        return {lam: int(self[lam]) for lam in partitions_of(self.degree)}

    # endregion
    # region Arithmetic

    def _check_compatible(self, other: "SymFunc") -> None:
        if self.basis != other.basis or self.degree != other.degree:
            raise BasisMismatchError(
                f"Cannot combine {self.basis.value}-basis degree {self.degree} with "
                f"{other.basis.value}-basis degree {other.degree}"
            )

    def __add__(self, other: "SymFunc") -> "SymFunc":
        self._check_compatible(other)
        result = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            result[lam] = result.get(lam, Fraction(0)) + c
        return SymFunc(self.degree, self.basis, result)

    def __neg__(self) -> "SymFunc":
        return SymFunc(self.degree, self.basis, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def __mul__(self, scalar: Scalar) -> "SymFunc":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return SymFunc(
            self.degree, self.basis, {k: v * scalar for k, v in self.coeffs.items()}
        )

    __rmul__ = __mul__

    # endregion
    # region Serialization

    def to_dict(self) -> dict:
        """JSON-ready representation with partitions in canonical order."""
        return {
            "degree": self.degree,
            "basis": self.basis.value,
            "coeffs": [
                {"partition": str(lam), "num": c.numerator, "den": c.denominator}
                for lam, c in self.terms()
            ],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "SymFunc":
        """
        Inverse of :meth:`to_dict`.

        Raises:
            InvalidStructureError: If a required key is missing.
        """
        missing = [k for k in ("degree", "basis", "coeffs") if k not in data]
        if missing:
            raise InvalidStructureError(
                f"Data is missing required keys: {', '.join(missing)}"
            )
        return cls(
            int(data["degree"]),
            Basis.parse(data["basis"]),
            {
                Partition.parse(term["partition"]): Fraction(term["num"], term["den"])
                for term in data["coeffs"]
            },
        )

    def pretty(self) -> str:
        """Single line rendering, e.g. ``3·e_{3} + 1·e_{2,1}``."""
        pieces: list[str] = []
        for lam, c in self.terms():
            term = f"{abs(c)}·{self.basis.value}_{{{lam}}}"
            if not pieces:
                pieces.append(term if c > 0 else f"-{term}")
            else:
                pieces.append(f" + {term}" if c > 0 else f" - {term}")
        return "".join(pieces) or "0"

    def __str__(self) -> str:
        return self.pretty()

    # endregion


@dataclass(frozen=True)
class TransitionMatrix:
    """
    Exact change of basis for degree ``d``.

    Row vectors convert as ``c_to = c_from · entries``; rows and columns are
    indexed by the partitions of ``d`` in canonical order.
    """

    degree: int
    from_basis: Basis
    to_basis: Basis
    entries: tuple[tuple[Fraction, ...], ...]

    def apply(self, f: SymFunc) -> SymFunc:
        """Convert ``f`` (which must be in ``from_basis``)."""
        if f.basis != self.from_basis or f.degree != self.degree:
            raise BasisMismatchError(
                f"Matrix converts {self.from_basis.value}->{self.to_basis.value} "
                f"in degree {self.degree}, got {f.basis.value} in degree {f.degree}"
            )
        source = f.vector()
        size = len(source)
        nonzero = [i for i in range(size) if source[i]]
        target = [
            sum((source[i] * self.entries[i][j] for i in nonzero), Fraction(0))
            for j in range(size)
        ]
        return SymFunc.from_vector(self.degree, self.to_basis, target)


# region Monomial expansions


def semistandard_tableaux(
    shape: Partition, content: Sequence[int]
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """
    Semistandard fillings of ``shape`` with content ``content``.

    Entries are 1-based: the value ``v`` is used ``content[v-1]`` times. Rows weakly
    increase, columns strictly increase. Fillings are built by adding one
    horizontal strip per value.
    """
    rows = shape.length

    def strips(
        inner: tuple[int, ...], remaining: int, i: int, outer: tuple[int, ...]
    ):
        # Outer shapes with inner <= outer <= shape and outer/inner a horizontal strip:
        # row i may grow up to the old length of row i-1
        if i == rows:
            if remaining == 0:
                yield outer
            return
        upper = shape.parts[i] if i == 0 else min(shape.parts[i], inner[i - 1])
        for grow in range(min(upper - inner[i], remaining), -1, -1):
            yield from strips(
                inner, remaining - grow, i + 1, outer + (inner[i] + grow,)
            )

    def fill(
        current: tuple[int, ...], value: int, filling: tuple[tuple[int, ...], ...]
    ):
        if value > len(content):
            if current == shape.parts:
                yield filling
            return
        for outer in strips(current, content[value - 1], 0, ()):
            yield from fill(
                outer,
                value + 1,
                tuple(
                    filling[r] + (value,) * (outer[r] - current[r]) for r in range(rows)
                ),
            )

    yield from fill((0,) * rows, 1, ((),) * rows)


def kostka(mu: Partition, nu: Sequence[int] | Partition) -> int:
    """
    The Kostka number K_{mu,nu}: semistandard tableaux of shape mu and content nu.

    ``nu`` may be any composition; the count does not depend on its order.

    Raises:
        InvalidStructureError: If ``|mu| != |nu|``.
    """
    content = tuple(nu)
    StructureValidator.get_validator().validate_same_size(
        "Kostka number", mu.size, sum(content)
    )
    return sum(1 for _ in semistandard_tableaux(mu, content))


@lru_cache(maxsize=None)
def _monomial_coefficient(
    kind: str, factors: tuple[int, ...], residual: tuple[int, ...]
) -> int:
    # Coefficient of x^residual in prod_k e_k (kind "e") or prod_k h_k (kind "h")
    if not factors:
        return 0 if any(residual) else 1
    k, rest = factors[0], factors[1:]
    total = 0
    if kind == "e":
        support = [i for i, r in enumerate(residual) if r > 0]
        for chosen in combinations(support, k):
            nxt = list(residual)
            for i in chosen:
                nxt[i] -= 1
            total += _monomial_coefficient(kind, rest, tuple(sorted(nxt, reverse=True)))
    else:
        for used in _bounded_vectors(residual, k):
            nxt = tuple(sorted((r - u for r, u in zip(residual, used)), reverse=True))
            total += _monomial_coefficient(kind, rest, nxt)
    return total


def _bounded_vectors(bounds: tuple[int, ...], total: int) -> Iterator[tuple[int, ...]]:
    if not bounds:
        if total == 0:
            yield ()
        return
    for first in range(min(bounds[0], total), -1, -1):
        for rest in _bounded_vectors(bounds[1:], total - first):
            yield (first,) + rest


def basis_vector_in_m(basis: Basis, lam: Partition) -> SymFunc:
    """
    The monomial expansion of ``e_lam``, ``h_lam`` or ``s_lam``.

    The coefficient of ``m_mu`` is the coefficient of the monomial ``x^mu`` in the
    defining polynomial in ``d = |lam|`` variables; for Schur functions it is the
    number of semistandard fillings of shape lam with content mu.
    """
    basis = Basis.parse(basis)
    d = lam.size
    if basis is Basis.MONOMIAL:
        return SymFunc.basis_element(Basis.MONOMIAL, lam)
    coeffs: dict[Partition, Fraction] = {}
    for mu in partitions_of(d):
        if basis is Basis.SCHUR:
            value = kostka(lam, mu)
        else:
            padded = mu.parts + (0,) * (d - mu.length)
            value = _monomial_coefficient(basis.value, lam.parts, padded)
        coeffs[mu] = Fraction(value)
    return SymFunc(d, Basis.MONOMIAL, coeffs)


@lru_cache(maxsize=None)
def _expansion_matrix(d: int, basis: Basis) -> sympy.Matrix:
    # Row i holds the m-expansion of the i-th basis element
    LOGGER.debug("Expanding the %s basis of degree %d into monomials", basis.value, d)
    return sympy.Matrix(
        [
            [sympy.Rational(c.numerator, c.denominator) for c in row.vector()]
            for row in (basis_vector_in_m(basis, lam) for lam in partitions_of(d))
        ]
    )


@lru_cache(maxsize=None)
def _inverse_expansion_matrix(d: int, basis: Basis) -> sympy.Matrix:
    matrix = _expansion_matrix(d, basis)
    try:
        return matrix.inv()
    except (ValueError, ZeroDivisionError) as e:
        raise SingularSystemError(
            f"The {basis.value}-basis expansion matrix of degree {d} is singular"
        ) from e


@lru_cache(maxsize=None)
def transition_matrix(d: int, from_basis: Basis, to_basis: Basis) -> TransitionMatrix:
    """The exact change of basis matrix from ``from_basis`` to ``to_basis``."""
    product = _expansion_matrix(d, from_basis) * _inverse_expansion_matrix(d, to_basis)
    size = len(partitions_of(d))
    return TransitionMatrix(
        d,
        from_basis,
        to_basis,
        tuple(
            tuple(_to_fraction(product[i, j]) for j in range(size)) for i in range(size)
        ),
    )


# endregion
# region Operations


def convert(f: SymFunc, target: Basis | str) -> SymFunc:
    """Re-expand ``f`` in the ``target`` basis."""
    target = Basis.parse(target)
    if f.basis is target:
        return SymFunc(f.degree, f.basis, dict(f.coeffs))
    return transition_matrix(f.degree, f.basis, target).apply(f)


def omega(f: SymFunc) -> SymFunc:
    """The involution with ``omega e_lam = h_lam`` and ``omega s_lam = s_lam'``."""
    if f.basis is Basis.ELEMENTARY:
        return SymFunc(f.degree, Basis.COMPLETE, dict(f.coeffs))
    if f.basis is Basis.COMPLETE:
        return SymFunc(f.degree, Basis.ELEMENTARY, dict(f.coeffs))
    if f.basis is Basis.SCHUR:
        return SymFunc(
            f.degree, Basis.SCHUR, {lam.conjugate(): c for lam, c in f.coeffs.items()}
        )
    return convert(omega(convert(f, Basis.SCHUR)), Basis.MONOMIAL)


def monomial_at_ones(lam: Partition, n: int) -> int:
    """Value of ``m_lam`` with ``n`` variables set to 1 and the rest to 0."""
    if n < lam.length:
        return 0
    denominator = factorial(n - lam.length)
    for r in lam.multiplicities().values():
        denominator *= factorial(r)
    return factorial(n) // denominator


def specialize_ones(f: SymFunc, n: int) -> Fraction:
    """Value of ``f`` at ``x_1 = ... = x_n = 1`` and all other variables 0."""
    if n < 0:
        raise InvalidStructureError(f"Number of variables must be >= 0, got {n}")
    expanded = convert(f, Basis.MONOMIAL)
    return sum(
        (c * monomial_at_ones(lam, n) for lam, c in expanded.terms()), Fraction(0)
    )


def chromatic_polynomial(f: SymFunc, n_vertices: int) -> sympy.Expr:
    """
    Interpolate ``n -> specialize_ones(f, n)`` on ``n = 0..n_vertices``.

    For a chromatic symmetric function this is the chromatic polynomial, in the
    variable ``k``.
    """
    k = sympy.Symbol("k")
    points = [
        (n, sympy.Rational(v.numerator, v.denominator))
        for n, v in ((n, specialize_ones(f, n)) for n in range(n_vertices + 1))
    ]
    if len(points) == 1:
        return sympy.Integer(points[0][1])
    return sympy.expand(sympy.interpolate(points, k))


def kostka_matrix(d: int) -> tuple[tuple[int, ...], ...]:
    """Rows/columns in canonical order: entry ``[mu][nu] = K_{mu,nu}``."""
    index = partitions_of(d)
    return tuple(tuple(kostka(mu, nu) for nu in index) for mu in index)


def inverse_kostka(lam: Partition, mu: Partition) -> int:
    """
    ``K^{-1}_{lam,mu}`` as the signed count of special rim hook tabloids of shape
    mu and type lam.

    Raises:
        InvalidStructureError: If ``|lam| != |mu|``.
    """
    StructureValidator.get_validator().validate_same_size(
        "inverse Kostka number", lam.size, mu.size
    )
    return signed_tabloid_count(mu, lam)


def inverse_kostka_matrix(
    d: int, method: str = "tabloids"
) -> tuple[tuple[int, ...], ...]:
    """
    The inverse Kostka matrix with entry ``[lam][mu] = K^{-1}_{lam,mu}``.

    Args:
        d (int): the degree.
        method (str): ``"tabloids"`` for the signed tabloid count, ``"algebraic"``
            for the exact inverse of :func:`kostka_matrix`.
    """
    index = partitions_of(d)
    if method == "tabloids":
        return tuple(tuple(inverse_kostka(lam, mu) for mu in index) for lam in index)
    if method == "algebraic":
        inverse = sympy.Matrix(kostka_matrix(d)).inv()
        return tuple(
            tuple(int(inverse[i, j]) for j in range(len(index)))
            for i in range(len(index))
        )
    raise InvalidStructureError(f"Unknown inverse Kostka method '{method}'")


# endregion
