"""Representations of matrix Lie algebras and orbit diagnostics.

A :class:`Representation` assigns one action matrix to each basis element
of its algebra. One-parameter subgroups act diagonally with integer weights
in a declared eigenbasis.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .exactlin import RatMatrix, Vector, combine, is_zero_vector, kernel_basis, solve, vector
from .liecore import LieAlgebra, SubalgebraHandle, ValidationError


class Representation:
    """Lie algebra homomorphism ``algebra -> gl(dim)``, checked on construction."""

    def __init__(self, algebra: LieAlgebra, action: Sequence[RatMatrix], *, check: bool = True):
        if len(action) != algebra.dim:
            raise ValueError(f"need {algebra.dim} action matrices, got {len(action)}")
        dims = {a.shape for a in action}
        if len(dims) > 1 or any(r != c for r, c in dims):
            raise ValueError("action matrices must be square of one size")
        self.algebra = algebra
        self.action = tuple(action)
        self.dim = action[0].rows if action else 0
        if check:
            self._check_homomorphism()

    def _check_homomorphism(self) -> None:
        g = self.algebra
        for i, j in combinations(range(g.dim), 2):
            lhs = self.act(g.structure_constants[i][j])
            a, b = self.action[i], self.action[j]
            if lhs != a @ b - b @ a:
                raise ValidationError(f"action is not a homomorphism on basis pair {(i, j)}")

    @classmethod
    def standard(cls, g: LieAlgebra) -> "Representation":
        return cls(g, g.basis, check=False)

    @classmethod
    def adjoint(cls, g: LieAlgebra) -> "Representation":
        return cls(g, g.ad, check=False)

    @classmethod
    def trivial(cls, g: LieAlgebra, dim: int = 1) -> "Representation":
        return cls(g, [RatMatrix.zeros(dim)] * g.dim, check=False)

    def act(self, coords: Sequence[Fraction]) -> RatMatrix:
        """Matrix of the algebra element with the given coordinates."""
        out = RatMatrix.zeros(self.dim)
        for c, a in zip(coords, self.action):
            if c:
                out = out + a.scale(c)
        return out

    def apply(self, coords: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
        return self.act(coords).apply(v)

    def is_fixed(self, coords_list: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> bool:
        """True iff every listed algebra element kills ``v``."""
        return all(is_zero_vector(self.apply(c, v)) for c in coords_list)

    def is_fixed_by_all(self, v: Sequence[Fraction]) -> bool:
        return all(is_zero_vector(a.apply(v)) for a in self.action)

    def __repr__(self) -> str:
        return f"Representation(dim={self.dim} of {self.algebra!r})"


def _same_algebra(r1: Representation, r2: Representation) -> None:
    if r1.algebra != r2.algebra:
        raise ValueError("representations of different algebras")


def dual(r: Representation) -> Representation:
    return Representation(r.algebra, [-a.T for a in r.action])


def direct_sum(r1: Representation, r2: Representation) -> Representation:
    _same_algebra(r1, r2)
    return Representation(r1.algebra, [a.block_diag(b) for a, b in zip(r1.action, r2.action)])


def tensor(r1: Representation, r2: Representation) -> Representation:
    _same_algebra(r1, r2)
    i1, i2 = RatMatrix.identity(r1.dim), RatMatrix.identity(r2.dim)
    return Representation(r1.algebra, [a.kron(i2) + i1.kron(b) for a, b in zip(r1.action, r2.action)])


def tensor_vector(v: Sequence[Fraction], w: Sequence[Fraction]) -> Vector:
    return tuple(a * b for a in v for b in w)


def stabilizer_subalgebra(r: Representation, v: Sequence[Fraction]) -> SubalgebraHandle:
    """``{x in g : x . v = 0}``."""
    if len(v) != r.dim:
        raise ValueError(f"vector length {len(v)} != representation dimension {r.dim}")
    g = r.algebra
    if not g.dim:
        return SubalgebraHandle.zero(g)
    cols = [a.apply(v) for a in r.action]
    m = RatMatrix.from_columns(cols, r.dim)
    return SubalgebraHandle(g, kernel_basis(m) if r.dim else [g.unit_vector(i) for i in range(g.dim)])


def separate_scaling(r: Representation, v: Sequence[Fraction]) -> tuple[Representation, Vector]:
    """``(W + W (x) W, w + w (x) w)``, which has the same stabilizer as ``w``."""
    if is_zero_vector(v):
        raise ValueError("separate_scaling needs a nonzero vector")
    return direct_sum(r, tensor(r, r)), tuple(v) + tensor_vector(v, v)


def fixed_vectors(r: Representation, sub: SubalgebraHandle) -> list[Vector]:
    """Basis of the vectors killed by every element of ``sub``."""
    rows = [row for c in sub.coords for row in r.act(c).to_rows()]
    if not rows:
        return [tuple(Fraction(int(i == j)) for j in range(r.dim)) for i in range(r.dim)]
    return kernel_basis(RatMatrix.from_rows(rows, r.dim))


@dataclass(frozen=True)
class OneParamSubgroup:
    """``t -> diag(t^w_1, ..., t^w_n)`` in the basis given by ``basis_change``.

    ``basis_change`` maps original coordinates to eigenbasis coordinates.
    """

    weights: tuple[int, ...]
    basis_change: RatMatrix | None = None

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if self.basis_change is not None:
            b = self.basis_change
            if b.shape != (len(self.weights), len(self.weights)) or b.rank() != b.rows:
                raise ValueError("basis_change must be an invertible matrix of the weight length")

    def to_eigen(self, v: Sequence[Fraction]) -> Vector:
        if len(v) != len(self.weights):
            raise ValueError("vector length does not match the number of weights")
        return self.basis_change.apply(v) if self.basis_change is not None else tuple(v)

    def from_eigen(self, v: Sequence[Fraction]) -> Vector:
        if self.basis_change is None:
            return tuple(v)
        return solve(self.basis_change, v)

    def act(self, t: Fraction, v: Sequence[Fraction]) -> Vector:
        """``lambda(t) v`` for a nonzero rational ``t``."""
        t = Fraction(t)
        e = self.to_eigen(v)
        return self.from_eigen(tuple(x * t ** w for x, w in zip(e, self.weights)))


@dataclass(frozen=True)
class WeightSplit:
    components: tuple[tuple[int, Vector], ...]

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(w for w, _ in self.components)

    def total(self, n: int) -> Vector:
        return combine([Fraction(1)] * len(self.components), [c for _, c in self.components], n)


def weight_split(lam: OneParamSubgroup, v: Sequence[Fraction]) -> WeightSplit:
    """Group ``v`` into eigencomponents, increasing weight; components sum to ``v``."""
    e = lam.to_eigen(vector(v))
    comps = []
    for w in sorted(set(lam.weights)):
        part = tuple(x if lw == w else Fraction(0) for x, lw in zip(e, lam.weights))
        if not is_zero_vector(part):
            comps.append((w, lam.from_eigen(part)))
    return WeightSplit(tuple(comps))


def hm_limit(lam: OneParamSubgroup, v: Sequence[Fraction]) -> Vector | None:
    """``lim_{t -> 0} lambda(t) v`` if it exists, else ``None``."""
    split = weight_split(lam, v)
    if any(w < 0 for w in split.weights):
        return None
    for w, comp in split.components:
        if w == 0:
            return comp
    return tuple(Fraction(0) for _ in v)


def _in_cone(target: Sequence[Fraction], gens: Sequence[Sequence[Fraction]]) -> bool:
    """Exact conic membership by enumerating linearly independent generator subsets."""
    d = len(target)
    if is_zero_vector(target):
        return True
    uniq = list(dict.fromkeys(tuple(g) for g in gens if not is_zero_vector(g)))
    for size in range(1, min(d, len(uniq)) + 1):
        for subset in combinations(uniq, size):
            m = RatMatrix.from_columns(list(subset), d)
            if m.rank() != size:
                continue
            x = solve(m, target)
            if x is not None and all(c >= 0 for c in x):
                return True
    return False


def torus_orbit_closed(weights: Sequence[Sequence[int]], v: Sequence[Fraction]) -> bool:
    """Closedness of the torus orbit of ``v``: 0 in the relative interior of conv(support weights).

    Equivalently the cone spanned by the support weights is a linear
    subspace, i.e. each support weight's negative lies in that cone.
    """
    if len(weights) != len(v):
        raise ValueError("need one weight vector per coordinate")
    if is_zero_vector(v):
        raise ValueError("torus_orbit_closed needs a nonzero vector")
    support = [vector(w) for w, x in zip(weights, v) if x]
    return all(_in_cone(tuple(-a for a in s), support) for s in support)


def orbit_closed_metabelian2(p: int, q: int, v: Sequence[Fraction]) -> bool:
    """Closedness of the orbit of ``v`` under ``(x1, x2) -> (t^p x1 + a x2, t^q x2)``."""
    if len(v) != 2:
        raise ValueError("metabelian orbit test needs a vector of length 2")
    x1, x2 = Fraction(v[0]), Fraction(v[1])
    if not x1 and not x2:
        raise ValueError("orbit_closed_metabelian2 needs a nonzero vector")
    if x2:
        # orbit is k x (t^q x2): a line when q = 0, else k x k^* whose closure adds u = 0
        return q == 0
    return p == 0
