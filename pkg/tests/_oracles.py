"""Independent oracles: gmpy2 rationals for structure theory, scipy LP and
sympy limits for orbits.

Nothing here calls the package's elimination, bracket, radical or orbit code;
the package is only used to read fixture files and matrix entries.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from pathlib import Path

import numpy as np
import sympy
from gmpy2 import mpq
from scipy.optimize import linprog

from lieaffine.docformat import parse_document
from lieaffine.exactlin import RatMatrix

FIXTURES = Path(__file__).resolve().parent.parent / "src" / "lieaffine" / "fixtures"


def sym(m: RatMatrix) -> sympy.Matrix:
    return sympy.Matrix(m.rows, m.cols, lambda i, j: sympy.Rational(m[i, j].numerator, m[i, j].denominator))


# Plain nested-list matrices with a self-contained elimination, so the oracle
# shares no code with the package and stays fast.

def mat(m: RatMatrix) -> tuple:
    return tuple(tuple(mpq(m[i, j].numerator, m[i, j].denominator) for j in range(m.cols)) for i in range(m.rows))


def mul(a, b):
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    return tuple(tuple(sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m)) for i in range(n))


def sub(a, b):
    return tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(a, b))


def smul(c, a):
    return tuple(tuple(c * x for x in r) for r in a)


def add(a, b):
    return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(a, b))


def is_zero(a) -> bool:
    return all(x == 0 for r in a for x in r)


def bracket(a, b):
    return sub(mul(a, b), mul(b, a))


def flat(a) -> list:
    return [x for r in a for x in r]


class Span:
    """Row-echelon accumulator over exact rationals."""

    def __init__(self):
        self.rows: list[tuple[int, list]] = []  # (pivot, row)

    def reduce(self, v: list) -> list:
        v = list(v)
        for p, r in self.rows:
            if v[p]:
                c = v[p] / r[p]
                v = [x - c * y for x, y in zip(v, r)]
        return v

    def add(self, v: list) -> bool:
        v = self.reduce(v)
        for i, x in enumerate(v):
            if x:
                self.rows.append((i, v))
                return True
        return False

    def __len__(self):
        return len(self.rows)


def span_rank(mats) -> int:
    sp = Span()
    for m in mats:
        sp.add(flat(m))
    return len(sp)


def span_basis(mats) -> list:
    sp = Span()
    return [m for m in mats if sp.add(flat(m))]


def same_span(a, b) -> bool:
    ra, rb = span_rank(a), span_rank(b)
    return ra == rb == span_rank(list(a) + list(b))


def lie_closure(gens) -> list:
    basis = span_basis([g for g in gens if not is_zero(g)])
    changed = True
    while changed:
        changed = False
        for a, b in combinations(list(basis), 2):
            c = bracket(a, b)
            if span_rank(basis + [c]) > len(basis):
                basis.append(c)
                changed = True
    return basis


def ideal_generated(basis, v) -> list:
    sp = Span()
    out = []
    if sp.add(flat(v)):
        out.append(v)
    frontier = list(out)
    while frontier:
        nxt = []
        for w in frontier:
            for b in basis:
                c = bracket(b, w)
                if sp.add(flat(c)):
                    out.append(c)
                    nxt.append(c)
        frontier = nxt
    return out


def is_solvable(mats) -> bool:
    cur = span_basis(mats)
    while cur:
        nxt = span_basis([bracket(a, b) for a, b in combinations(cur, 2)])
        if len(nxt) == len(cur):
            return False
        cur = nxt
    return True


def associatively_nilpotent(mats) -> bool:
    if not mats:
        return True
    n = len(mats[0])
    power = span_basis(mats)
    for _ in range(n):
        power = span_basis([mul(a, b) for a in power for b in mats])
        if not power:
            return True
    return False


def grid_vectors(dim: int, bound: int = 1):
    seen = set()
    for c in product(range(-bound, bound + 1), repeat=dim):
        if any(c) and tuple(-x for x in c) not in seen:
            seen.add(c)
            yield c


def combo(basis, c):
    out = smul(0, basis[0])
    for x, b in zip(c, basis):
        out = add(out, smul(x, b))
    return out


class CoordAlgebra:
    """Structure constants computed by this module's own solver."""

    def __init__(self, basis):
        self.basis = list(basis)
        self.dim = d = len(self.basis)
        self.sc = [[self.solve(bracket(a, b)) for b in self.basis] for a in self.basis]
        # ad[i] maps coordinates w to [b_i, w]
        self.ad = [[[self.sc[i][j][k] for j in range(d)] for k in range(d)] for i in range(d)]

    def solve(self, x) -> list:
        d = self.dim
        rows = [flat(b) + [mpq(int(i == j)) for j in range(d)] for i, b in enumerate(self.basis)]
        sp = Span()
        for r in rows:
            sp.add(r[: len(flat(x))] + r[len(flat(x)):])
        # express x by eliminating against the augmented rows
        n = len(flat(x))
        v = flat(x) + [mpq(0)] * d
        for p, r in sp.rows:
            if p < n and v[p]:
                c = v[p] / r[p]
                v = [a - c * b for a, b in zip(v, r)]
        assert not any(v[:n]), "element outside the algebra"
        return [-a for a in v[n:]]

    def bracket(self, u, w) -> list:
        d = self.dim
        out = [mpq(0)] * d
        for i in range(d):
            if u[i]:
                for j in range(d):
                    if w[j]:
                        c = u[i] * w[j]
                        for k in range(d):
                            out[k] += c * self.sc[i][j][k]
        return out

    def element(self, c):
        return combo(self.basis, c)


def killing(basis) -> list:
    """``tr(ad x ad y)`` on the given basis."""
    alg = CoordAlgebra(basis)
    d = alg.dim

    def prod_trace(a, b):
        return sum(a[i][k] * b[k][i] for i in range(d) for k in range(d))

    return [[prod_trace(alg.ad[i], alg.ad[j]) for j in range(d)] for i in range(d)]


def _coord_ideal(alg: CoordAlgebra, v) -> list:
    sp = Span()
    out = []
    if sp.add(list(v)):
        out.append(list(v))
    frontier = list(out)
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(alg.dim):
                c = [sum(alg.ad[i][k][j] * w[j] for j in range(alg.dim)) for k in range(alg.dim)]
                if sp.add(c):
                    out.append(c)
                    nxt.append(c)
        frontier = nxt
    return out


def _coord_solvable(alg: CoordAlgebra, vs) -> bool:
    cur = vs
    while cur:
        sp = Span()
        nxt = [c for a, b in combinations(cur, 2) for c in [alg.bracket(a, b)] if sp.add(c)]
        if len(nxt) == len(cur):
            return False
        cur = nxt
    return True


def _matrix_nilpotent(m) -> bool:
    p = m
    for _ in range(len(m) - 1):
        p = mul(p, m)
    return is_zero(p)


def _coord_nilpotent(alg: CoordAlgebra, vs) -> bool:
    mats = [alg.element(v) for v in vs]
    if not all(_matrix_nilpotent(m) for m in mats):
        return False
    return associatively_nilpotent(mats)


def _sum_of_ideals(basis, bound: int, accept) -> list:
    alg = CoordAlgebra(basis)
    acc = Span()
    out: list = []
    for c in grid_vectors(len(basis), bound):
        v = [mpq(x) for x in c]
        # elements of the running sum generate sub-ideals of it
        if not any(acc.reduce(v)):
            continue
        ideal = _coord_ideal(alg, v)
        if accept(alg, ideal):
            for w in ideal:
                if acc.add(w):
                    out.append(alg.element(w))
    return out


def radical_oracle(basis, bound: int = 2) -> list:
    """Sum of every solvable ideal generated by one small-integer element."""
    return _sum_of_ideals(basis, bound, _coord_solvable)


def nil_ideal_oracle(basis, bound: int = 2) -> list:
    """Sum of every ideal of nilpotent matrices generated by one small-integer element."""
    return _sum_of_ideals(basis, bound, _coord_nilpotent)


def fixture_generator_set() -> dict[int, list[RatMatrix]]:
    """Every matrix appearing in a group-like section of the bundled fixtures, by size."""
    by_dim: dict[int, list[RatMatrix]] = {}
    for path in sorted(FIXTURES.glob("*.lie")):
        doc = parse_document(path.read_text())
        mats = list(doc.group) + list(doc.subgroup or []) + list(doc.unipotent or []) + list(doc.torus or [])
        bucket = by_dim.setdefault(doc.ambient_dim, [])
        for m in mats:
            if m not in bucket:
                bucket.append(m)
    return by_dim


def small_algebras(max_dim: int = 4, max_gens: int = 3) -> list[tuple[int, tuple[RatMatrix, ...]]]:
    """Generator tuples whose generated algebras have dimension <= max_dim, one per algebra."""
    out = []
    seen = set()
    for n, mats in sorted(fixture_generator_set().items()):
        for k in range(1, max_gens + 1):
            for gens in combinations(mats, k):
                basis = lie_closure([mat(g) for g in gens])
                if not basis or len(basis) > max_dim:
                    continue
                key = (n, sympy.Matrix([flat(b) for b in basis]).rref()[0].as_immutable())
                if key in seen:
                    continue
                seen.add(key)
                out.append((n, gens))
    return out


# ---------------------------------------------------------------- orbit oracles

def relint_oracle(support: list[tuple[int, ...]]) -> bool:
    """0 in the relative interior of conv(support), by LP: max t with lambda_i >= t."""
    k, r = len(support), len(support[0])
    # variables: lambda_1..lambda_k, t ; minimize -t
    c = np.zeros(k + 1)
    c[-1] = -1.0
    a_eq = np.zeros((r + 1, k + 1))
    for i, s in enumerate(support):
        a_eq[:r, i] = s
        a_eq[r, i] = 1.0
    b_eq = np.zeros(r + 1)
    b_eq[r] = 1.0
    a_ub = np.zeros((k, k + 1))
    for i in range(k):
        a_ub[i, i] = -1.0
        a_ub[i, -1] = 1.0
    res = linprog(c, A_ub=a_ub, b_ub=np.zeros(k), A_eq=a_eq, b_eq=b_eq,
                  bounds=[(0, None)] * k + [(None, 1)], method="highs")
    return res.status == 0 and -res.fun > 1e-9


def limit_oracle(weights, basis: RatMatrix | None, v) -> tuple | None:
    t = sympy.symbols("t", positive=True)
    n = len(weights)
    b = sympy.eye(n) if basis is None else sympy.Matrix(n, n, lambda i, j: sympy.Rational(str(basis[i, j])))
    lam = b.inv() * sympy.diag(*[t ** w for w in weights]) * b
    image = lam * sympy.Matrix([sympy.Rational(str(x)) for x in v])
    out = []
    for e in image:
        lim = sympy.limit(sympy.simplify(e), t, 0, "+")
        if lim.is_infinite or lim.has(sympy.oo, -sympy.oo, sympy.zoo):
            return None
        out.append(Fraction(str(lim)))
    return tuple(out)
