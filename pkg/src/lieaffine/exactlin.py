"""Exact rational matrices, elimination, and matrix polynomials.

Scalars are :class:`fractions.Fraction`. Vectors are plain tuples of
fractions. Elimination runs through a fraction-free integer kernel; the
compiled one is used when it imports, unless ``LIEAFFINE_PURE_PYTHON`` is set.
"""
from __future__ import annotations

import os
import re
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from . import _rref_py

if os.environ.get("LIEAFFINE_PURE_PYTHON"):
    _rref_int = _rref_py.rref_int
    BACKEND = "python"
else:
    try:
        from ._rref import rref_int as _rref_int

        BACKEND = "compiled"
    except ImportError:
        _rref_int = _rref_py.rref_int
        BACKEND = "python"

Vector = tuple  # tuple[Fraction, ...]

_RATIONAL_RE = re.compile(r"^-?\d+(?:/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` with an optional leading minus."""
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"not a rational literal: {text!r}")
    value = Fraction(s)
    return value


def format_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def vector(values: Iterable) -> Vector:
    return tuple(Fraction(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def is_zero_vector(v: Sequence[Fraction]) -> bool:
    return not any(v)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def combine(coeffs: Sequence[Fraction], vectors: Sequence[Sequence[Fraction]], n: int) -> Vector:
    """Linear combination ``sum(c * v)`` of length-``n`` vectors."""
    out = [Fraction(0)] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for j, x in enumerate(v):
                if x:
                    out[j] += c * x
    return tuple(out)


class RatMatrix:
    """Immutable dense matrix of fractions."""

    __slots__ = ("rows", "cols", "_data", "_hash")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        data = tuple(x if type(x) is Fraction else Fraction(x) for x in entries)
        if len(data) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(data)}")
        self.rows = rows
        self.cols = cols
        self._data = data
        self._hash = None

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "RatMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, (x for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "RatMatrix":
        cols = len(columns)
        return cls(rows, cols, (columns[j][i] for i in range(rows) for j in range(cols)))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "RatMatrix":
        cols = rows if cols is None else cols
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(n, n, (1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def diag(cls, values: Sequence) -> "RatMatrix":
        n = len(values)
        return cls(n, n, (values[i] if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "RatMatrix":
        """Matrix unit with a single 1 at ``(i, j)`` (zero-based)."""
        return cls(n, n, (1 if (r, c) == (i, j) else 0 for r in range(n) for c in range(n)))

    @classmethod
    def from_vec(cls, n: int, v: Sequence) -> "RatMatrix":
        return cls(n, n, v)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._data[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self._data[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> Vector:
        return self._data[j::self.cols] if self.cols else ()

    def to_rows(self) -> tuple[Vector, ...]:
        return tuple(self.row(i) for i in range(self.rows))

    def vec(self) -> Vector:
        """Row-major flattening."""
        return self._data

    @property
    def T(self) -> "RatMatrix":
        return RatMatrix(self.cols, self.rows, (self[i, j] for j in range(self.cols) for i in range(self.rows)))

    transpose = T

    def _check_same_shape(self, other: "RatMatrix") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        self._check_same_shape(other)
        return RatMatrix(self.rows, self.cols, (a + b for a, b in zip(self._data, other._data)))

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        self._check_same_shape(other)
        return RatMatrix(self.rows, self.cols, (a - b for a, b in zip(self._data, other._data)))

    def __neg__(self) -> "RatMatrix":
        return RatMatrix(self.rows, self.cols, (-a for a in self._data))

    def scale(self, c) -> "RatMatrix":
        c = Fraction(c)
        return RatMatrix(self.rows, self.cols, (c * a for a in self._data))

    def __mul__(self, c) -> "RatMatrix":
        if isinstance(c, RatMatrix):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        n, m, p = self.rows, self.cols, other.cols
        a, b = self._data, other._data
        out = []
        zero = Fraction(0)
        for i in range(n):
            acc = [zero] * p
            base = i * m
            for k in range(m):
                x = a[base + k]
                if x:
                    kb = k * p
                    for j in range(p):
                        y = b[kb + j]
                        if y:
                            acc[j] += x * y
            out.extend(acc)
        return RatMatrix(n, p, out)

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise ValueError(f"vector length {len(v)} != {self.cols}")
        return tuple(dot(self.row(i), v) for i in range(self.rows))

    def trace(self) -> Fraction:
        return sum((self[i, i] for i in range(min(self.rows, self.cols))), Fraction(0))

    def is_zero(self) -> bool:
        return not any(self._data)

    def kron(self, other: "RatMatrix") -> "RatMatrix":
        r, c = self.rows * other.rows, self.cols * other.cols
        return RatMatrix(r, c, (
            self[i1, j1] * other[i2, j2]
            for i1 in range(self.rows) for i2 in range(other.rows)
            for j1 in range(self.cols) for j2 in range(other.cols)
        ))

    def block_diag(self, other: "RatMatrix") -> "RatMatrix":
        r, c = self.rows + other.rows, self.cols + other.cols
        out = [Fraction(0)] * (r * c)
        for i in range(self.rows):
            for j in range(self.cols):
                out[i * c + j] = self[i, j]
        for i in range(other.rows):
            for j in range(other.cols):
                out[(i + self.rows) * c + j + self.cols] = other[i, j]
        return RatMatrix(r, c, out)

    def power(self, k: int) -> "RatMatrix":
        result = RatMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def rank(self) -> int:
        return len(rref(self)[1])

    def inverse(self) -> "RatMatrix":
        if not self.is_square:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        aug = RatMatrix.from_rows([self.row(i) + RatMatrix.identity(n).row(i) for i in range(n)])
        red, piv = rref(aug)
        if piv[:n] != list(range(n)) or len(piv) != n:
            raise ZeroDivisionError("singular matrix")
        return RatMatrix.from_rows([red.row(i)[n:] for i in range(n)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self._data))
        return self._hash

    def to_strings(self) -> list[list[str]]:
        return [[format_rational(x) for x in self.row(i)] for i in range(self.rows)]

    @classmethod
    def from_strings(cls, rows: Sequence[Sequence[str]]) -> "RatMatrix":
        return cls.from_rows([[parse_rational(x) for x in r] for r in rows])

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_rational(x) for x in self.row(i)) for i in range(self.rows))
        return f"RatMatrix([{body}])"


def commutator(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    return a @ b - b @ a


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    out = []
    for r in rows:
        den = lcm(*(x.denominator for x in r)) if r else 1
        out.append([x.numerator * (den // x.denominator) for x in r])
    return out


def rref_rows(rows: Sequence[Sequence[Fraction]], ncols: int) -> tuple[list[Vector], list[int]]:
    """Reduced row echelon form of a list of rows; zero rows dropped."""
    if not rows or ncols == 0:
        return [], []
    ints, pivots = _rref_int(_integer_rows(rows), ncols)
    out = []
    for row, c in zip(ints, pivots):
        p = row[c]
        out.append(tuple(Fraction(a, p) for a in row))
    return out, pivots


def rref(m: RatMatrix) -> tuple[RatMatrix, list[int]]:
    """Reduced row echelon form (same shape, zero rows at the bottom) and pivot columns."""
    red, pivots = rref_rows(m.to_rows(), m.cols)
    zero = (Fraction(0),) * m.cols
    return RatMatrix.from_rows(red + [zero] * (m.rows - len(red)), m.cols), pivots


def span_basis(vectors: Sequence[Sequence[Fraction]], n: int) -> list[Vector]:
    """Canonical (reduced echelon) basis of the span of ``vectors`` in Q^n."""
    return rref_rows([tuple(v) for v in vectors], n)[0]


def kernel_basis(m: RatMatrix) -> list[Vector]:
    """Basis of the right null space, one vector per free column."""
    red, pivots = rref_rows(m.to_rows(), m.cols)
    pivset = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivset:
            continue
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for row, c in zip(red, pivots):
            v[c] = -row[f]
        basis.append(tuple(v))
    return basis


def solve(m: RatMatrix, b: Sequence) -> Vector | None:
    """Some ``x`` with ``m x = b`` (free variables set to zero), or ``None``."""
    if len(b) != m.rows:
        raise ValueError(f"right-hand side has length {len(b)}, expected {m.rows}")
    aug = [m.row(i) + (Fraction(b[i]),) for i in range(m.rows)]
    red, pivots = rref_rows(aug, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [Fraction(0)] * m.cols
    for row, c in zip(red, pivots):
        x[c] = row[-1]
    return tuple(x)


def intersect_spans(a: Sequence[Vector], b: Sequence[Vector], n: int) -> list[Vector]:
    """Canonical basis of span(a) ∩ span(b)."""
    if not a or not b:
        return []
    cols = list(a) + [tuple(-x for x in v) for v in b]
    m = RatMatrix.from_columns(cols, n)
    rel = kernel_basis(m)
    return span_basis([combine(r[:len(a)], a, n) for r in rel], n)


class EchelonSpace:
    """Incrementally grown subspace of Q^n with exact membership tests.

    Rows are kept as primitive integer vectors in a dict keyed by pivot.
    """

    __slots__ = ("n", "_rows")

    def __init__(self, n: int):
        self.n = n
        self._rows: dict[int, list[int]] = {}

    def __len__(self) -> int:
        return len(self._rows)

    def _reduce(self, v: Sequence[Fraction]) -> list[int]:
        den = lcm(*(x.denominator for x in v)) if v else 1
        w = [x.numerator * (den // x.denominator) for x in v]
        # insertion order: each row vanishes on the pivots of earlier rows
        for c, row in self._rows.items():
            e = w[c]
            if e:
                p = row[c]
                g = gcd(p, e)
                p, e = p // g, e // g
                w = [p * a - e * b for a, b in zip(w, row)]
                g = gcd(*w)
                if g > 1:
                    w = [a // g for a in w]
        return w

    def contains(self, v: Sequence[Fraction]) -> bool:
        return not any(self._reduce(v))

    def add(self, v: Sequence[Fraction]) -> bool:
        """Insert ``v``; return True when it enlarged the space."""
        w = self._reduce(v)
        nz = [i for i, a in enumerate(w) if a]
        if not nz:
            return False
        g = gcd(*w)
        c = nz[0]
        if w[c] < 0:
            g = -g
        self._rows[c] = [a // g for a in w]
        return True

    def basis(self) -> list[Vector]:
        return span_basis([tuple(Fraction(a) for a in r) for r in self._rows.values()], self.n)


class UniPoly:
    """Univariate polynomial over Q, coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> "UniPoly":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        lc = self.leading
        return UniPoly(c / lc for c in self.coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return UniPoly(x + y for x, y in zip(a, b))

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            return UniPoly(Fraction(other) * c for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lc = other.leading
        quot = [Fraction(0)] * max(0, len(rem) - dq)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] / lc
            if c:
                quot[k - dq] = c
                for j, b in enumerate(other.coeffs):
                    rem[k - dq + j] -= c * b
        return UniPoly(quot), UniPoly(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[1]

    def derivative(self) -> "UniPoly":
        return UniPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def __call__(self, x):
        """Evaluate at a scalar or a square :class:`RatMatrix` (Horner)."""
        if isinstance(x, RatMatrix):
            n = x.rows
            acc = RatMatrix.zeros(n)
            ident = RatMatrix.identity(n)
            for c in reversed(self.coeffs):
                acc = acc @ x + ident.scale(c)
            return acc
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({[format_rational(c) for c in self.coeffs]})"


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd (zero if both are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def squarefree_part(p: UniPoly) -> UniPoly:
    return (p // poly_gcd(p, p.derivative())).monic()


def is_squarefree(p: UniPoly) -> bool:
    return poly_gcd(p, p.derivative()).degree <= 0


def minimal_polynomial(m: RatMatrix) -> UniPoly:
    """Monic polynomial of least degree annihilating ``m``.

    Found as the first linear dependency among vec(I), vec(m), vec(m^2), ...
    """
    if not m.is_square:
        raise ValueError("minimal polynomial of a non-square matrix")
    n = m.rows
    if n == 0:
        return UniPoly((1,))
    space = EchelonSpace(n * n)
    powers = [RatMatrix.identity(n)]
    space.add(powers[0].vec())
    while True:
        nxt = powers[-1] @ m
        if space.contains(nxt.vec()):
            cols = RatMatrix.from_columns([p.vec() for p in powers], n * n)
            c = solve(cols, nxt.vec())
            return UniPoly([-x for x in c] + [1])
        space.add(nxt.vec())
        powers.append(nxt)


def is_semisimple(m: RatMatrix) -> bool:
    """Diagonalizable over the algebraic closure: squarefree minimal polynomial."""
    return is_squarefree(minimal_polynomial(m))


def is_nilpotent(m: RatMatrix) -> bool:
    return m.power(m.rows).is_zero() if m.rows else True


def jordan_chevalley(m: RatMatrix) -> tuple[RatMatrix, RatMatrix]:
    """Split ``m = s + n`` with ``s`` semisimple, ``n`` nilpotent, ``sn = ns``.

    Newton iteration ``s <- s - q(s) q'(s)^{-1}`` on the squarefree part ``q``
    of the minimal polynomial; every iterate is a polynomial in ``m``.
    """
    if not m.is_square:
        raise ValueError("Jordan-Chevalley decomposition of a non-square matrix")
    q = squarefree_part(minimal_polynomial(m))
    dq = q.derivative()
    s = m
    for _ in range(m.rows + 1):
        qs = q(s)
        if qs.is_zero():
            break
        s = s - qs @ dq(s).inverse()
    else:  # pragma: no cover - quadratic convergence bounds the loop
        raise RuntimeError("Newton iteration did not converge")
    return s, m - s
