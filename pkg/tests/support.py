"""Shared helpers for the test suite: random data and canonical audits."""

import math
import random
from fractions import Fraction

from polydecomp import Element, Poly, PolynomialRing, PrimeField, Rationals


def rand_fraction(rng: random.Random, lo: int = -9, hi: int = 9) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, 9))


def rand_element(rng: random.Random, domain, size: int = 2) -> Element:
    """A random element: small fraction, residue, or small nested poly."""
    if isinstance(domain, Rationals):
        return domain.element(rand_fraction(rng))
    if isinstance(domain, PrimeField):
        return domain.element(rng.randrange(domain.p))
    length = rng.randint(0, size + 1)
    coeffs = [rand_element(rng, domain.base, size) for _ in range(length)]
    return domain.element(Poly(domain.base, domain.variable, coeffs))


def rand_poly(rng: random.Random, domain, variable: str, degree: int, monic: bool = False) -> Poly:
    """A random polynomial of exactly the requested degree."""
    coeffs = [rand_element(rng, domain) for _ in range(degree)]
    if monic:
        coeffs.append(domain.one)
    else:
        lead = rand_element(rng, domain)
        while lead.is_zero:
            lead = rand_element(rng, domain)
        coeffs.append(lead)
    return Poly(domain, variable, coeffs)


def rand_int_poly(rng: random.Random, domain, variable: str, degree: int, monic: bool = False) -> Poly:
    """Random polynomial with small integer coefficients (keeps rational
    arithmetic cheap in the larger suites)."""
    coeffs = [domain.from_int(rng.randint(-9, 9)) for _ in range(degree)]
    if monic:
        coeffs.append(domain.one)
    else:
        coeffs.append(domain.from_int(rng.choice([i for i in range(-9, 10) if i])))
    return Poly(domain, variable, coeffs)


def assert_canonical_element(el: Element) -> None:
    """Audit the canonical-form invariants of one element, recursively."""
    v = el.value
    if isinstance(el.domain, Rationals):
        assert isinstance(v, Fraction)
        assert v.denominator > 0
        assert math.gcd(v.numerator, v.denominator) == 1
    elif isinstance(el.domain, PrimeField):
        assert isinstance(v, int)
        assert 0 <= v < el.domain.p
    elif isinstance(el.domain, PolynomialRing):
        assert isinstance(v, Poly)
        assert v.domain == el.domain.base
        assert v.variable == el.domain.variable
        assert_canonical_poly(v)
    else:
        raise AssertionError(f"unknown domain kind {el.domain!r}")


def assert_canonical_poly(p: Poly) -> None:
    """Audit a polynomial: tuple storage, no leading zero, coeffs canonical."""
    assert isinstance(p.coeffs, tuple)
    if p.coeffs:
        assert not p.coeffs[-1].is_zero
    for c in p.coeffs:
        assert c.domain == p.domain
        assert_canonical_element(c)


def power_by_repeated_mul(f: Poly, e: int) -> Poly:
    """Oracle for __pow__: plain iterated multiplication."""
    out = Poly.constant(f.domain, f.variable, 1)
    for _ in range(e):
        out = out * f
    return out
