"""Degree-truncated subalgebras of polynomial rings over Q.

Everything here is exact linear algebra on the space of polynomials of
total degree at most a cap. A :class:`TruncatedSubalgebra` is filtered by
the degrees of its generators: its degree-``d`` piece is spanned by the
products of generators whose degrees add up to at most ``d``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Mapping, Sequence

from .exactlin import EchelonSpace, RatMatrix, format_rational, is_nilpotent, kernel_basis, parse_rational

DEFAULT_DEGREE_CAP = 12

Exps = tuple  # tuple[int, ...]


class Poly:
    """Polynomial in named variables; ``terms`` maps exponent tuples to nonzero coefficients."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[Exps, object] | None = None):
        self.variables = tuple(variables)
        clean = {}
        for e, c in (terms or {}).items():
            if len(e) != len(self.variables):
                raise ValueError("exponent vector does not match the variables")
            c = Fraction(c)
            if c:
                clean[tuple(e)] = c
        self.terms = clean

    @classmethod
    def constant(cls, variables: Sequence[str], c=1) -> "Poly":
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, variables: Sequence[str], name: str) -> "Poly":
        i = list(variables).index(name)
        return cls(variables, {tuple(int(k == i) for k in range(len(variables))): 1})

    @classmethod
    def monomial(cls, variables: Sequence[str], exps: Exps, c=1) -> "Poly":
        return cls(variables, {tuple(exps): c})

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def _check(self, other: "Poly") -> None:
        if self.variables != other.variables:
            raise ValueError("polynomials in different variables")

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        return Poly.constant(self.variables, other)

    def __add__(self, other) -> "Poly":
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(self.variables, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "Poly":
        return self._lift(other) - self

    def __mul__(self, other) -> "Poly":
        other = self._lift(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        out = Poly.constant(self.variables)
        for _ in range(k):
            out = out * self
        return out

    def diff(self, i: int) -> "Poly":
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                out[tuple(f)] = c * e[i]
        return Poly(self.variables, out)

    def substitute(self, images: Sequence["Poly"]) -> "Poly":
        out = Poly(self.variables)
        for e, c in self.terms.items():
            term = Poly.constant(self.variables, c)
            for img, k in zip(images, e):
                if k:
                    term = term * img ** k
            out = out + term
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.variables == other.variables and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Poly.constant(self.variables, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.variables, frozenset(self.terms.items())))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=_monomial_key):
            c = self.terms[e]
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, e) if k
            )
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
            else:
                body = format_rational(mag)
            parts.append(("-" if c < 0 else "+", body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"


def _monomial_key(e: Exps) -> tuple:
    return (-sum(e), tuple(-k for k in e))


def monomials(nvars: int, degree: int) -> list[Exps]:
    """Exponent vectors of exact total ``degree``, lex-descending."""
    out = set()
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.add(tuple(e))
    return sorted(out, key=_monomial_key)


def monomials_upto(nvars: int, degree: int) -> list[Exps]:
    return [e for d in range(degree, -1, -1) for e in monomials(nvars, d)]


class _Coords:
    """Coordinates of polynomials of degree <= cap in the monomial basis."""

    def __init__(self, nvars: int, cap: int):
        self.monos = monomials_upto(nvars, cap)
        self.index = {e: i for i, e in enumerate(self.monos)}

    def vector(self, f: Poly) -> tuple:
        v = [Fraction(0)] * len(self.monos)
        for e, c in f.terms.items():
            v[self.index[e]] = c
        return tuple(v)


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def parse_poly(text: str, variables: Sequence[str]) -> Poly:
    """Parse ``+ - * ^`` expressions with parentheses and ``p/q`` literals."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        num, name, sym = m.groups()
        tokens.append(("num", num) if num else ("name", name) if name else ("sym", sym))
        pos = m.end()
    variables = tuple(variables)
    i = 0

    def peek():
        return tokens[i] if i < len(tokens) else (None, None)

    def take():
        nonlocal i
        tok = peek()
        i += 1
        return tok

    def expr() -> Poly:
        out = term()
        while peek() in (("sym", "+"), ("sym", "-")):
            op = take()[1]
            t = term()
            out = out + t if op == "+" else out - t
        return out

    def term() -> Poly:
        out = factor()
        while peek() == ("sym", "*"):
            take()
            out = out * factor()
        return out

    def factor() -> Poly:
        if peek() == ("sym", "-"):
            take()
            return -factor()
        base = atom()
        if peek() == ("sym", "^"):
            take()
            kind, val = take()
            if kind != "num" or "/" in val:
                raise ValueError(f"exponent must be a nonnegative integer in {text!r}")
            base = base ** int(val)
        return base

    def atom() -> Poly:
        kind, val = take()
        if kind == "num":
            return Poly.constant(variables, parse_rational(val))
        if kind == "name":
            if val not in variables:
                raise ValueError(f"unknown variable {val!r} in {text!r}")
            return Poly.var(variables, val)
        if (kind, val) == ("sym", "("):
            inner = expr()
            if take() != ("sym", ")"):
                raise ValueError(f"unbalanced parentheses in {text!r}")
            return inner
        raise ValueError(f"unexpected token {val!r} in {text!r}")

    result = expr()
    if i != len(tokens) or pos != len(text):
        raise ValueError(f"trailing input in polynomial {text!r}")
    return result


class LinearAction:
    """One-parameter unipotent action ``x -> exp(a N) x`` on the variables.

    Row ``i`` of ``generator`` is the linear form that the derivation sends
    variable ``i`` to; ``x -> x + a*y`` has ``D(x) = y``, ``D(y) = 0``.
    """

    def __init__(self, variables: Sequence[str], generator: RatMatrix):
        self.variables = tuple(variables)
        if generator.shape != (len(self.variables), len(self.variables)):
            raise ValueError("generator must be square of the variable count")
        if not is_nilpotent(generator):
            raise ValueError("action generator must be nilpotent")
        self.generator = generator

    @classmethod
    def trivial(cls, variables: Sequence[str]) -> "LinearAction":
        return cls(variables, RatMatrix.zeros(len(variables)))

    @classmethod
    def from_images(cls, variables: Sequence[str], images: Mapping[str, Poly]) -> "LinearAction":
        """Build from derivation images of variables (missing ones map to 0)."""
        n = len(variables)
        rows = [[Fraction(0)] * n for _ in range(n)]
        for name, img in images.items():
            if img.degree > 1 or any(sum(e) == 0 for e in img.terms):
                raise ValueError(f"image of {name} must be a linear form")
            i = list(variables).index(name)
            for e, c in img.terms.items():
                rows[i][e.index(1)] = c
        return cls(variables, RatMatrix.from_rows(rows, n))

    def image(self, i: int) -> Poly:
        n = len(self.variables)
        return Poly(self.variables, {tuple(int(k == j) for k in range(n)): self.generator[i, j] for j in range(n)})

    def derive(self, f: Poly) -> Poly:
        out = Poly(f.variables)
        for i in range(len(self.variables)):
            img = self.image(i)
            if not img.is_zero():
                out = out + img * f.diff(i)
        return out

    def act(self, a, f: Poly) -> Poly:
        """``f`` with each variable ``x`` replaced by ``exp(a N) x``."""
        a = Fraction(a)
        n = len(self.variables)
        expo = RatMatrix.zeros(n)
        term = RatMatrix.identity(n)
        k = 0
        while not term.is_zero():
            expo = expo + term
            k += 1
            term = (term @ self.generator).scale(a / k)
        images = [Poly(self.variables, {tuple(int(r == j) for r in range(n)): expo[i, j] for j in range(n)})
                  for i in range(n)]
        return f.substitute(images)

    def orbit_span(self, f: Poly) -> list[Poly]:
        """``f, Df, D^2 f, ...`` up to the last nonzero term; spans the orbit of ``f``."""
        out = []
        cur = f
        while not cur.is_zero():
            out.append(cur)
            cur = self.derive(cur)
        return out


def invariants_up_to_degree(act: LinearAction, d: int) -> list[Poly]:
    """Basis of invariant polynomials of degree <= ``d`` (kernel of the derivation, degree by degree)."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    variables = act.variables
    out = []
    for k in range(d + 1):
        monos = monomials(len(variables), k)
        idx = {e: i for i, e in enumerate(monos)}
        cols = []
        for e in monos:
            img = act.derive(Poly.monomial(variables, e))
            col = [Fraction(0)] * len(monos)
            for f, c in img.terms.items():
                col[idx[f]] = c
            cols.append(col)
        m = RatMatrix.from_columns(cols, len(monos))
        for v in kernel_basis(m):
            out.append(Poly(variables, {e: c for e, c in zip(monos, v)}))
    return out


class TruncatedSubalgebra:
    """Subalgebra generated by ``generators`` (plus 1), truncated at ``degree_cap``."""

    def __init__(self, generators: Sequence[Poly], degree_cap: int, variables: Sequence[str] | None = None):
        if degree_cap < 0:
            raise ValueError("degree cap must be nonnegative")
        if variables is None:
            if not generators:
                raise ValueError("variables are required when there are no generators")
            variables = generators[0].variables
        self.variables = tuple(variables)
        for g in generators:
            if g.variables != self.variables:
                raise ValueError("generator in different variables")
        self.generators = tuple(generators)
        self.degree_cap = degree_cap
        self._coords = _Coords(len(self.variables), degree_cap)
        self._space = EchelonSpace(len(self._coords.monos))
        one = Poly.constant(self.variables)
        self._space.add(self._coords.vector(one))
        deltas: list[list[Poly]] = [[one]]
        gens = [g for g in self.generators if 0 < g.degree <= degree_cap]
        for d in range(1, degree_cap + 1):
            new = []
            for g in gens:
                j = d - g.degree
                if j < 0:
                    continue
                for e in deltas[j]:
                    p = g * e
                    if self._space.add(self._coords.vector(p)):
                        new.append(p)
            deltas.append(new)
        self._deltas = deltas

    @property
    def span_by_degree(self) -> list[list[Poly]]:
        """For each ``d <= cap``, a basis of the degree-``d`` piece."""
        out, acc = [], []
        for delta in self._deltas:
            acc = acc + delta
            out.append(list(acc))
        return out

    def dimension(self, d: int | None = None) -> int:
        d = self.degree_cap if d is None else d
        return sum(len(x) for x in self._deltas[:d + 1])

    def vector(self, f: Poly) -> tuple:
        return self._coords.vector(f)

    def __repr__(self) -> str:
        return f"TruncatedSubalgebra({len(self.generators)} generators, cap={self.degree_cap}, dim={self.dimension()})"


def membership(ts: TruncatedSubalgebra, f: Poly) -> bool:
    """Whether ``f`` lies in the degree-``cap`` piece of ``ts``."""
    if f.variables != ts.variables:
        raise ValueError("polynomial in different variables")
    if f.degree > ts.degree_cap:
        raise ValueError(f"degree overflow: deg {f.degree} > cap {ts.degree_cap}")
    return ts._space.contains(ts.vector(f))


def build_axy(ideal_gens: Sequence[Poly], d: int, variables: Sequence[str] | None = None) -> TruncatedSubalgebra:
    """Truncation of ``k + I(Y)``, the functions constant on ``Y``.

    The degree-``<= d`` part of ``I(Y)`` is taken as the span of
    ``m * g`` with ``deg m + deg g <= d``.
    """
    if d < 1:
        raise ValueError("degree cap must be at least 1")
    if variables is None:
        if not ideal_gens:
            raise ValueError("variables are required for the zero ideal")
        variables = ideal_gens[0].variables
    variables = tuple(variables)
    coords = _Coords(len(variables), d)
    space = EchelonSpace(len(coords.monos))
    basis = []
    for g in ideal_gens:
        if g.is_zero() or g.degree > d:
            continue
        for e in reversed(monomials_upto(len(variables), d - g.degree)):
            p = g * Poly.monomial(variables, e)
            if space.add(coords.vector(p)):
                basis.append(p)
    return TruncatedSubalgebra([Poly.constant(variables)] + basis, d, variables)


def probe_generators(ts: TruncatedSubalgebra) -> dict[int, list[Poly]]:
    """Per degree, elements of the degree-``d`` piece not generated by lower pieces."""
    coords = ts._coords
    space = EchelonSpace(len(coords.monos))
    for p in ts._deltas[0]:
        space.add(coords.vector(p))
    out = {}
    for d in range(1, ts.degree_cap + 1):
        for i in range(1, d // 2 + 1):
            for a in ts._deltas[i]:
                for b in ts._deltas[d - i]:
                    space.add(coords.vector(a * b))
        out[d] = [p for p in ts._deltas[d] if space.add(coords.vector(p))]
    return out


def fg_probe(ts: TruncatedSubalgebra) -> dict[int, int]:
    """New-generator count per degree ``1..cap``; a positive tail signals non-finite generation."""
    return {d: len(ps) for d, ps in probe_generators(ts).items()}


@dataclass(frozen=True, eq=False)
class ChainLink:
    algebra: TruncatedSubalgebra
    witness: Poly
    adjoined: tuple[Poly, ...]


def chain_demo(ideal_gens: Sequence[Poly], steps: int, cap: int,
               action: LinearAction | None = None) -> list[ChainLink]:
    """Strictly increasing chain of truncated subalgebras inside A(X, Y).

    The base algebra is generated by ``p0`` and ``p0 * x_i`` for a nonzero
    ``p0`` in ``I(Y)``; each link adjoins the next probe generator of
    A(X, Y) that the previous link misses, and stores it as the witness of
    strictness. With ``action``, every adjoined element brings its orbit span.
    """
    if steps < 1:
        raise ValueError("steps must be at least 1")
    nonzero = [g for g in ideal_gens if not g.is_zero()]
    if not nonzero:
        raise ValueError("Y must be a proper subvariety with a nonzero ideal generator")
    variables = nonzero[0].variables
    axy = build_axy(ideal_gens, cap, variables)
    p0 = nonzero[0]
    base = [p0] + [p0 * Poly.var(variables, v) for v in variables]

    def adjoin(fs: Iterable[Poly]) -> list[Poly]:
        out = []
        for f in fs:
            out.extend(action.orbit_span(f) if action is not None else [f])
        return out

    current = adjoin(base)
    prev = TruncatedSubalgebra(current, cap, variables)
    chain: list[ChainLink] = []
    probe = probe_generators(axy)
    stream = [h for d in sorted(probe) for h in probe[d]]
    for h in stream:
        if len(chain) == steps:
            break
        if membership(prev, h):
            continue
        extra = adjoin([h])
        current = current + extra
        nxt = TruncatedSubalgebra(current, cap, variables)
        chain.append(ChainLink(nxt, h, tuple(extra)))
        prev = nxt
    if len(chain) < steps:
        raise ValueError(f"probe exhausted after {len(chain)} of {steps} steps; raise the degree cap")
    return chain
