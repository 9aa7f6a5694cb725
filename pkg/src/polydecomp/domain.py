"""Coefficient domains and their elements.

Three kinds of domain are supported:

  * ``Rationals()``             exact rational numbers, characteristic 0
  * ``PrimeField(p)``           integers mod a prime p, characteristic p
  * ``PolynomialRing(D, v)``    polynomials in v over a base domain D

``PolynomialRing`` nests, so K[a1][a2]...[an] realizes a multivariate
polynomial ring as iterated univariate rings.  Variable names inside one
tower must be pairwise distinct.

Every element is kept in canonical form at all times: rational values
are reduced fractions with positive denominator (``fractions.Fraction``
guarantees this), prime field values are residues in [0, p), and
polynomial values carry no leading zero coefficient.  Equality is
structural, so two elements compare equal exactly when their canonical
forms coincide.  Floating point never appears anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .errors import DomainMismatch, NotInvertible


class Element:
    """A domain value tagged with the domain it lives in.

    Arithmetic is defined between elements of equal domains only; mixing
    domains raises DomainMismatch.  Instances are immutable by
    convention and hashable.
    """

    __slots__ = ("domain", "value")

    def __init__(self, domain: "Domain", value):
        self.domain = domain
        self.value = value

    def _check(self, other: "Element") -> None:
        d = self.domain
        if d is not other.domain and d != other.domain:
            raise DomainMismatch(f"{d} vs {other.domain}")

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._check(other)
        return Element(self.domain, self.domain._add(self.value, other.value))

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._check(other)
        return Element(self.domain, self.domain._sub(self.value, other.value))

    def __mul__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._check(other)
        return Element(self.domain, self.domain._mul(self.value, other.value))

    def __neg__(self):
        return Element(self.domain, self.domain._neg(self.value))

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        d = self.domain
        return (d is other.domain or d == other.domain) and self.value == other.value

    def __hash__(self):
        return hash((self.domain, self.value))

    @property
    def is_zero(self) -> bool:
        return self.domain._is_zero(self.value)

    @property
    def is_ground(self) -> bool:
        """True when the element is a constant through every tower level."""
        el = self
        while isinstance(el.domain, PolynomialRing):
            if el.value.degree > 0:
                return False
            el = el.value.coeff(0)
        return True

    def ground_value(self) -> "Element":
        """The underlying ground constant; requires ``is_ground``."""
        el = self
        while isinstance(el.domain, PolynomialRing):
            if el.value.degree > 0:
                raise ValueError("element is not a ground constant")
            el = el.value.coeff(0)
        return el

    def inverse(self) -> "Element":
        """Multiplicative inverse; raises NotInvertible when there is none."""
        return Element(self.domain, self.domain._invert(self.value))

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"Element({self.value!r}, {self.domain})"


class Domain:
    """Base class of all coefficient domains.

    Subclasses provide the raw value hooks (_add, _sub, _mul, _neg,
    _invert, _is_zero) plus construction and metadata.  Domains compare
    structurally and are cheap to construct; equal domains are fully
    interchangeable.
    """

    is_field = False

    def element(self, value) -> Element:
        """Coerce ``value`` into this domain, canonicalizing it."""
        raise NotImplementedError

    def from_int(self, n: int) -> Element:
        """The image of the integer n in this domain."""
        return self.element(n)

    @property
    def zero(self) -> Element:
        try:
            return self._zero
        except AttributeError:
            self._zero = self.element(0)
            return self._zero

    @property
    def one(self) -> Element:
        try:
            return self._one
        except AttributeError:
            self._one = self.element(1)
            return self._one

    @property
    def characteristic(self) -> int:
        raise NotImplementedError

    def invert_integer(self, m: int) -> Element:
        """The inverse of the integer m in this domain, if it has one."""
        raise NotImplementedError


class Rationals(Domain):
    """The field of rational numbers."""

    is_field = True

    def element(self, value) -> Element:
        if isinstance(value, Element):
            if value.domain != self:
                raise DomainMismatch(f"{value.domain} is not {self}")
            return value
        if isinstance(value, float):
            raise TypeError("floating point values are not allowed")
        return Element(self, Fraction(value))

    @property
    def characteristic(self) -> int:
        return 0

    def invert_integer(self, m: int) -> Element:
        if m == 0:
            raise NotInvertible("0 has no inverse")
        return Element(self, Fraction(1, m))

    def _add(self, a, b):
        return a + b

    def _sub(self, a, b):
        return a - b

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def _invert(self, a):
        if a == 0:
            raise NotInvertible("0 has no inverse")
        return 1 / a

    def _is_zero(self, a) -> bool:
        return a == 0

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash(Rationals)

    def __str__(self):
        return "QQ"

    def __repr__(self):
        return "Rationals()"


def _is_prime(n: int) -> bool:
    """Trial division, adequate for word-sized candidates."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class PrimeField(Domain):
    """Integers modulo a prime p.  Values are residues in [0, p)."""

    is_field = True

    def __init__(self, p: int):
        if not isinstance(p, int) or isinstance(p, bool):
            raise TypeError("p must be an int")
        if p >= 2**31:
            raise ValueError("p must be below 2**31")
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    def element(self, value) -> Element:
        if isinstance(value, Element):
            if value.domain != self:
                raise DomainMismatch(f"{value.domain} is not {self}")
            return value
        if isinstance(value, float):
            raise TypeError("floating point values are not allowed")
        if isinstance(value, Fraction):
            num, den = value.numerator, value.denominator
            if den % self.p == 0:
                raise NotInvertible(f"{den} is not invertible modulo {self.p}")
            return Element(self, num * pow(den, self.p - 2, self.p) % self.p)
        return Element(self, value % self.p)

    @property
    def characteristic(self) -> int:
        return self.p

    def invert_integer(self, m: int) -> Element:
        r = m % self.p
        if r == 0:
            raise NotInvertible(f"{m} is not invertible modulo {self.p}")
        return Element(self, pow(r, self.p - 2, self.p))

    def _add(self, a, b):
        return (a + b) % self.p

    def _sub(self, a, b):
        return (a - b) % self.p

    def _mul(self, a, b):
        return a * b % self.p

    def _neg(self, a):
        return -a % self.p

    def _invert(self, a):
        if a == 0:
            raise NotInvertible(f"0 is not invertible modulo {self.p}")
        return pow(a, self.p - 2, self.p)

    def _is_zero(self, a) -> bool:
        return a == 0

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash((PrimeField, self.p))

    def __str__(self):
        return f"GF({self.p})"

    def __repr__(self):
        return f"PrimeField({self.p})"


class PolynomialRing(Domain):
    """Polynomials in one variable over a base domain.

    Elements are Poly values over ``base`` in ``variable``.  Nesting
    rings gives multivariate coefficients; the variable being adjoined
    must not already occur deeper in the tower.
    """

    is_field = False

    def __init__(self, base: Domain, variable: str):
        if not isinstance(base, Domain):
            raise TypeError("base must be a Domain")
        if not variable or not variable[0].isalpha() or not variable.isalnum():
            raise ValueError(f"bad variable name {variable!r}")
        d = base
        while isinstance(d, PolynomialRing):
            if d.variable == variable:
                raise ValueError(f"variable {variable!r} already occurs in the tower")
            d = d.base
        self.base = base
        self.variable = variable

    def element(self, value) -> Element:
        from .poly import Poly

        if isinstance(value, Element):
            if value.domain == self:
                return value
            # an element of a deeper level lifts to a constant
            return Element(self, Poly.constant(self.base, self.variable, value))
        if isinstance(value, Poly):
            if value.domain == self.base and value.variable == self.variable:
                return Element(self, value)
            raise DomainMismatch(f"{value.variable!r}-polynomial does not fit {self}")
        return Element(self, Poly.constant(self.base, self.variable, value))

    @property
    def characteristic(self) -> int:
        return self.base.characteristic

    def invert_integer(self, m: int) -> Element:
        return self.element(self.base.invert_integer(m))

    def generator(self, name: str | None = None) -> Element:
        """The variable ``name`` (default: this level's own) as an element."""
        from .poly import Poly

        if name is None or name == self.variable:
            x = Poly(self.base, self.variable, (self.base.zero, self.base.one))
            return Element(self, x)
        if isinstance(self.base, PolynomialRing):
            return self.element(self.base.generator(name))
        raise ValueError(f"no variable {name!r} in this tower")

    def _add(self, a, b):
        return a + b

    def _sub(self, a, b):
        return a - b

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def _invert(self, a):
        from .poly import Poly

        # units of A[y] are the units of A
        if a.degree != 0:
            raise NotInvertible("only nonzero constants are invertible here")
        return Poly.constant(self.base, self.variable, a.coeff(0).inverse())

    def _is_zero(self, a) -> bool:
        return a.is_zero

    def __eq__(self, other):
        return (
            isinstance(other, PolynomialRing)
            and other.variable == self.variable
            and other.base == self.base
        )

    def __hash__(self):
        return hash((PolynomialRing, self.variable, self.base))

    def __str__(self):
        return f"{self.base}[{self.variable}]"

    def __repr__(self):
        return f"PolynomialRing({self.base!r}, {self.variable!r})"


def polynomial_tower(base: Domain, names: Sequence[str]) -> Domain:
    """Adjoin variables left to right: tower(QQ, ["y", "z"]) is QQ[y][z]."""
    domain = base
    for name in names:
        domain = PolynomialRing(domain, name)
    return domain


def ground_domain(domain: Domain) -> Domain:
    """The innermost non-ring domain under a tower."""
    while isinstance(domain, PolynomialRing):
        domain = domain.base
    return domain


def specialize(el: Element, values: Mapping[str, Element]) -> Element:
    """Evaluate a tower element at ground values for its variables.

    ``values`` maps every variable occurring in el's tower to an element
    of the ground domain.  Plain ground elements pass through unchanged.
    """
    if not isinstance(el.domain, PolynomialRing):
        return el
    p = el.value
    try:
        point = values[p.variable]
    except KeyError:
        raise ValueError(f"no value given for variable {p.variable!r}") from None
    acc = point.domain.zero
    for c in reversed(p.coeffs):
        acc = acc * point + specialize(c, values)
    return acc
