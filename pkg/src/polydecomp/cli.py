"""Command line interface and text/JSON serialization.

Polynomial grammar (whitespace between tokens is ignored):

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := atom ('^' uint)?
    atom     := rational | ident | '(' expr ')' | '-' factor
    rational := uint ('/' uint)?
    ident    := letter (letter | digit)*

Multiplication is always explicit ('2*x', never '2x') and '/' exists
only inside rational literals.  Text output of format_poly re-parses to
a structurally equal polynomial under this grammar.

Exit codes: 0 for success (for check: decomposable), 2 for a well-formed
input that is not decomposable (check only), 1 for any error.  Errors
print to stderr as ``error: <Code>: <message>`` with the stable codes
from errors.py plus ``UsageError`` for bad invocations.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from .approot import approx_root
from .decide import (
    DecomposabilityVerdict,
    VarietySystem,
    is_decomposable_multi,
    is_decomposable_uni,
    variety_equations,
)
from .decomp import Decomposition, decompose, verify
from .domain import Domain, Element, PolynomialRing, PrimeField, Rationals, polynomial_tower
from .errors import (
    DivisionByZeroLiteral,
    NotInvertible,
    ParseError,
    PolyDecompError,
    UnknownVariable,
)
from .poly import Poly

MAX_EXPONENT = 10_000


class UsageError(PolyDecompError):
    """Bad command line or malformed flag values."""

    code = "UsageError"


# ----------------------------------------------------------------------
# parsing


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    end = len(text)
    while pos < end:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        start = pos
        if ch.isdigit():
            while pos < end and text[pos].isdigit():
                pos += 1
            tokens.append(("number", text[start:pos], start))
        elif ch.isalpha():
            while pos < end and text[pos].isalnum():
                pos += 1
            tokens.append(("ident", text[start:pos], start))
        elif ch in "+-*^()/":
            tokens.append((ch, ch, start))
            pos += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", start)
    tokens.append(("end", "", end))
    return tokens


class _Parser:
    """Recursive descent over the token list, building Poly values."""

    def __init__(self, text: str, domain: Domain, main: str, others: Sequence[str], field: Domain):
        self.tokens = _tokenize(text)
        self.index = 0
        self.domain = domain
        self.main = main
        self.others = set(others)
        self.field = field

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.index]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def expect(self, kind: str) -> tuple[str, str, int]:
        tok = self.take()
        if tok[0] != kind:
            shown = tok[1] if tok[0] != "end" else "end of input"
            raise ParseError(f"expected {kind!r}, found {shown!r}", tok[2])
        return tok

    def parse(self) -> Poly:
        result = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return result

    def expr(self) -> Poly:
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def term(self) -> Poly:
        node = self.factor()
        while self.peek()[0] == "*":
            self.take()
            node = node * self.factor()
        return node

    def factor(self) -> Poly:
        atom = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.expect("number")
            e = int(tok[1])
            if e > MAX_EXPONENT:
                raise ParseError(f"exponent {e} is too large", tok[2])
            atom = atom**e
        return atom

    def atom(self) -> Poly:
        kind, text, pos = self.take()
        if kind == "-":
            return -self.factor()
        if kind == "(":
            node = self.expr()
            self.expect(")")
            return node
        if kind == "number":
            num = int(text)
            den = 1
            if self.peek()[0] == "/":
                self.take()
                den_tok = self.expect("number")
                den = int(den_tok[1])
                if den == 0:
                    raise DivisionByZeroLiteral("denominator is zero", den_tok[2])
                pos = den_tok[2]
            try:
                ground = self.field.element(Fraction(num, den))
            except NotInvertible:
                raise DivisionByZeroLiteral(
                    f"denominator {den} is zero in {self.field}", pos
                ) from None
            return Poly.constant(self.domain, self.main, ground)
        if kind == "ident":
            if text == self.main:
                return Poly.gen(self.domain, self.main)
            if text in self.others:
                return Poly.constant(self.domain, self.main, self.domain.generator(text))
            raise UnknownVariable(f"unknown variable {text!r}", pos)
        shown = text if kind != "end" else "end of input"
        raise ParseError(f"unexpected {shown!r}", pos)


def parse_poly(
    text: str,
    field: Domain,
    variables: Sequence[str],
    main_var: str | None = None,
) -> Poly:
    """Parse text into a Poly in the main variable over field[other vars].

    ``variables`` fixes which identifiers are legal; the tower adjoins
    the non-main ones in the order given, main variable outermost.
    """
    names = list(variables)
    if not names:
        raise ValueError("at least one variable is required")
    if len(set(names)) != len(names):
        raise ValueError("variable names must be distinct")
    main = names[0] if main_var is None else main_var
    if main not in names:
        raise ValueError(f"main variable {main!r} is not among {names}")
    others = [v for v in names if v != main]
    domain = polynomial_tower(field, others)
    return _Parser(text, domain, main, others, field).parse()


# ----------------------------------------------------------------------
# formatting


def poly_to_json(f: Poly) -> dict:
    """Schema: {"var": name, "coeffs": [c0, c1, ...]} ascending, where a
    coefficient is a rational/residue string or a nested object."""
    return {"var": f.variable, "coeffs": [_coeff_to_json(c) for c in f.coeffs]}


def _coeff_to_json(c: Element):
    if isinstance(c.domain, PolynomialRing):
        return poly_to_json(c.value)
    return str(c.value)


def poly_from_json(obj: dict, domain: Domain) -> Poly:
    """Rebuild a Poly from its JSON form over a known domain tower."""
    coeffs = []
    for entry in obj["coeffs"]:
        if isinstance(entry, dict):
            if not isinstance(domain, PolynomialRing):
                raise ValueError("nested coefficient over a ground domain")
            if entry["var"] != domain.variable:
                raise ValueError(f"coefficient variable {entry['var']!r} does not match {domain}")
            coeffs.append(Element(domain, poly_from_json(entry, domain.base)))
        else:
            coeffs.append(domain.element(Fraction(entry)))
    return Poly(domain, obj["var"], coeffs)


def format_poly(f: Poly, mode: str = "text") -> str:
    """Render a polynomial as grammar-compatible text or as JSON."""
    if mode == "text":
        return str(f)
    if mode == "json":
        return json.dumps(poly_to_json(f))
    raise ValueError(f"unknown mode {mode!r}")


def _tower_variables(el: Element) -> list[str]:
    order = []
    d = el.domain
    while isinstance(d, PolynomialRing):
        order.append(d.variable)
        d = d.base
    return order


def _monomials(el: Element, acc: tuple):
    if not isinstance(el.domain, PolynomialRing):
        if not el.is_zero:
            yield acc, el
        return
    for e, c in enumerate(el.value.coeffs):
        deeper = acc + ((el.value.variable, e),) if e else acc
        yield from _monomials(c, deeper)


def element_to_text(el: Element) -> str:
    """Flatten a tower element to explicit monomials, outermost variable
    sorted first, so nested constants print like ordinary polynomials."""
    if el.is_zero:
        return "0"
    order = _tower_variables(el)
    terms = list(_monomials(el, ()))

    def key(item):
        exps = dict(item[0])
        return tuple(exps.get(v, 0) for v in order)

    terms.sort(key=key, reverse=True)
    parts: list[str] = []
    for pairs, ground in terms:
        g = ground.value
        sign = "+"
        if isinstance(g, Fraction) and g < 0:
            sign, g = "-", -g
        names = "*".join(v if e == 1 else f"{v}^{e}" for v, e in reversed(pairs))
        if not names:
            body = str(g)
        elif g == 1:
            body = names
        else:
            body = f"{g}*{names}"
        if not parts:
            parts.append(body if sign == "+" else "-" + body)
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


# ----------------------------------------------------------------------
# commands


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="polydecomp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("poly", help="polynomial text, e.g. 'x^6+6*x^5+6*x+1'")
        sp.add_argument("--d", type=int, required=True, help="outer degree d >= 2")
        sp.add_argument("--field", default="Q", help="Q (default) or gf:<prime>")
        sp.add_argument("--vars", default="x", help="comma separated variables, default x")
        sp.add_argument("--main-var", dest="main_var", default=None,
                        help="main variable, default the first of --vars")
        sp.add_argument("--json", action="store_true", help="emit JSON instead of text")

    sp = sub.add_parser("root", help="approximate d-th root of a monic polynomial")
    common(sp)
    sp = sub.add_parser("decompose", help="write p as h(Q) + R")
    common(sp)
    sp.add_argument("--verify", action="store_true", help="also print the condition report")
    sp = sub.add_parser("check", help="decide d-decomposability (exit 0 yes, 2 no)")
    common(sp)
    sp = sub.add_parser("variety", help="equations cutting out the decomposable locus")
    sp.add_argument("--n", type=int, required=True, help="degree of the generic polynomial")
    sp.add_argument("--d", type=int, required=True, help="outer degree d >= 2")
    sp.add_argument("--json", action="store_true", help="emit JSON instead of text")
    return parser


def _parse_field(spec: str) -> Domain:
    if spec == "Q":
        return Rationals()
    if spec.startswith("gf:"):
        try:
            p = int(spec[3:])
        except ValueError:
            raise UsageError(f"bad prime in field spec {spec!r}") from None
        try:
            return PrimeField(p)
        except (TypeError, ValueError) as exc:
            raise UsageError(str(exc)) from None
    raise UsageError(f"unknown field {spec!r}, expected Q or gf:<prime>")


def _input_poly(args) -> Poly:
    field = _parse_field(args.field)
    variables = [v.strip() for v in args.vars.split(",") if v.strip()]
    try:
        return parse_poly(args.poly, field, variables, args.main_var)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _decomposition_json(p: Poly, dec: Decomposition) -> dict:
    report = verify(p, dec)
    return {
        "h": poly_to_json(dec.h),
        "Q": poly_to_json(dec.q),
        "R": poly_to_json(dec.r),
        "d": dec.d,
        "conditions": {
            "monic": report.monic,
            "degree_bound": report.degree_bound,
            "index_condition": report.index_condition,
            "reconstruction": report.reconstruction,
        },
    }


def _verdict_json(verdict: DecomposabilityVerdict) -> dict:
    return {
        "decomposable": verdict.decomposable,
        "h": poly_to_json(verdict.witness.h) if verdict.witness else None,
        "Q": poly_to_json(verdict.witness.q) if verdict.witness else None,
        "residual": poly_to_json(verdict.residual) if verdict.residual is not None else None,
        "normalization": str(verdict.normalization) if verdict.normalization is not None else None,
    }


def _variety_json(system: VarietySystem) -> dict:
    return {
        "n": system.n,
        "d": system.d,
        "indeterminates": list(system.indeterminates),
        "equations": [_coeff_to_json(eq) for eq in system.equations],
    }


def _cmd_root(args) -> int:
    p = _input_poly(args)
    q = approx_root(p, args.d)
    print(format_poly(q, "json") if args.json else f"Q = {q}")
    return 0


def _cmd_decompose(args) -> int:
    p = _input_poly(args)
    dec = decompose(p, args.d)
    if args.json:
        print(json.dumps(_decomposition_json(p, dec)))
        return 0
    print(f"h = {dec.h}")
    print(f"Q = {dec.q}")
    print(f"R = {dec.r}")
    if args.verify:
        report = verify(p, dec)
        for name, passed in (
            ("monic", report.monic),
            ("degree_bound", report.degree_bound),
            ("index_condition", report.index_condition),
            ("reconstruction", report.reconstruction),
        ):
            print(f"{name}: {'pass' if passed else 'fail'}")
    return 0


def _cmd_check(args) -> int:
    p = _input_poly(args)
    if isinstance(p.domain, PolynomialRing):
        verdict = is_decomposable_multi(p, args.d)
    else:
        verdict = is_decomposable_uni(p, args.d)
    if args.json:
        print(json.dumps(_verdict_json(verdict)))
    else:
        print(f"decomposable: {'yes' if verdict.decomposable else 'no'}")
        if verdict.witness is not None:
            print(f"h = {verdict.witness.h}")
            print(f"Q = {verdict.witness.q}")
        elif verdict.residual is not None:
            print(f"R = {verdict.residual}")
            if verdict.residual.is_zero:
                print("obstruction: the outer polynomial has non-constant coefficients")
        if verdict.normalization is not None:
            print(f"scaled by: {verdict.normalization}")
    return 0 if verdict.decomposable else 2


def _cmd_variety(args) -> int:
    system = variety_equations(args.n, args.d)
    if args.json:
        print(json.dumps(_variety_json(system)))
    else:
        for eq in system.equations:
            print(element_to_text(eq))
    return 0


_COMMANDS = {
    "root": _cmd_root,
    "decompose": _cmd_decompose,
    "check": _cmd_check,
    "variety": _cmd_variety,
}


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return _COMMANDS[args.command](args)
    except PolyDecompError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
