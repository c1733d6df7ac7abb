"""Matrix Lie algebras and their structure theory over Q.

Elements of a :class:`LieAlgebra` are handled either as ambient matrices or
as coordinate vectors in the algebra's ordered basis. Subalgebras are
:class:`SubalgebraHandle` values holding canonical (reduced echelon)
coordinates, so equal subspaces compare equal.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .exactlin import (
    EchelonSpace,
    RatMatrix,
    Vector,
    combine,
    commutator,
    is_semisimple,
    jordan_chevalley,
    kernel_basis,
    rref_rows,
    span_basis,
)


class ValidationError(Exception):
    """A computed object failed a structural postcondition."""


def _pivot(v: Sequence[Fraction]) -> int:
    for i, x in enumerate(v):
        if x:
            return i
    return -1


class _Span:
    """Reduced echelon basis of a subspace, with residual and quotient maps."""

    __slots__ = ("n", "rows", "pivots", "complement")

    def __init__(self, vectors: Sequence[Sequence[Fraction]], n: int):
        self.n = n
        self.rows = span_basis(vectors, n)
        self.pivots = [_pivot(r) for r in self.rows]
        piv = set(self.pivots)
        self.complement = [j for j in range(n) if j not in piv]

    def residual(self, v: Sequence[Fraction]) -> Vector:
        out = list(v)
        for row, p in zip(self.rows, self.pivots):
            c = out[p]
            if c:
                for j, x in enumerate(row):
                    if x:
                        out[j] -= c * x
        return tuple(out)

    def contains(self, v: Sequence[Fraction]) -> bool:
        return not any(self.residual(v))

    def quotient_coords(self, v: Sequence[Fraction]) -> Vector:
        r = self.residual(v)
        return tuple(r[j] for j in self.complement)

    def in_basis(self, v: Sequence[Fraction]) -> Vector:
        """Coordinates of ``v`` (assumed inside) in the echelon basis."""
        return tuple(v[p] for p in self.pivots)


class LieAlgebra:
    """Finite-dimensional Lie algebra of ``ambient_dim`` x ``ambient_dim`` matrices.

    The basis order is kept as given. Construction computes the structure
    constants ``c[i][j][k]`` with ``[b_i, b_j] = sum_k c[i][j][k] b_k`` and,
    with ``check=True``, asserts closure, antisymmetry and Jacobi.
    """

    def __init__(self, ambient_dim: int, basis: Sequence[RatMatrix], *, check: bool = True):
        for b in basis:
            if b.shape != (ambient_dim, ambient_dim):
                raise ValueError(f"basis matrix of shape {b.shape}, expected {ambient_dim}x{ambient_dim}")
        self.ambient_dim = ambient_dim
        self.basis = tuple(basis)
        self.dim = len(self.basis)
        nn = ambient_dim * ambient_dim
        red, pivots = rref_rows([b.vec() for b in self.basis], nn)
        if len(red) != self.dim:
            raise ValueError("basis matrices are linearly dependent")
        self._pivots = pivots
        if self.dim:
            sub = RatMatrix.from_rows([[b.vec()[p] for p in pivots] for b in self.basis])
            self._coord_map = sub.inverse()
        else:
            self._coord_map = RatMatrix.zeros(0)
        d = self.dim
        sc = [[None] * d for _ in range(d)]
        zero = (Fraction(0),) * d
        for i in range(d):
            sc[i][i] = zero
            for j in range(i + 1, d):
                c = self.coordinates(commutator(self.basis[i], self.basis[j]))
                sc[i][j] = c
                sc[j][i] = tuple(-x for x in c)
        self.structure_constants = tuple(tuple(r) for r in sc)
        self._ad = None
        if check:
            self._check_jacobi()

    def _check_jacobi(self) -> None:
        d = self.dim
        for i, j, k in combinations(range(d), 3):
            e = [tuple(Fraction(int(t == s)) for t in range(d)) for s in (i, j, k)]
            total = [Fraction(0)] * d
            for a, b, c in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
                term = self.bracket(e[a], self.bracket(e[b], e[c]))
                total = [x + y for x, y in zip(total, term)]
            if any(total):
                raise ValidationError(f"Jacobi identity fails on basis triple {(i, j, k)}")

    # -- coordinates ---------------------------------------------------
    def coordinates(self, x: RatMatrix, *, strict: bool = True) -> Vector:
        """Coordinates of the matrix ``x`` in the basis; ValueError if outside the span."""
        if x.shape != (self.ambient_dim, self.ambient_dim):
            raise ValueError("matrix shape does not match the ambient dimension")
        if not self.dim:
            if strict and not x.is_zero():
                raise ValueError("matrix is not in the algebra")
            return ()
        v = x.vec()
        picked = [v[p] for p in self._pivots]
        cm = self._coord_map
        coords = tuple(
            sum((picked[r] * cm[r, i] for r in range(self.dim) if picked[r]), Fraction(0))
            for i in range(self.dim)
        )
        if strict and self.element(coords) != x:
            raise ValueError("matrix is not in the algebra")
        return coords

    def contains(self, x: RatMatrix) -> bool:
        try:
            self.coordinates(x)
        except ValueError:
            return False
        return True

    def element(self, coords: Sequence[Fraction]) -> RatMatrix:
        n = self.ambient_dim
        return RatMatrix(n, n, combine(coords, [b.vec() for b in self.basis], n * n))

    def unit_vector(self, i: int) -> Vector:
        return tuple(Fraction(int(k == i)) for k in range(self.dim))

    def bracket(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
        """Bracket of coordinate vectors via the structure constants."""
        out = [Fraction(0)] * self.dim
        sc = self.structure_constants
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if b and i != j:
                    ab = a * b
                    for k, c in enumerate(sc[i][j]):
                        if c:
                            out[k] += ab * c
        return tuple(out)

    def ad_matrix(self, u: Sequence[Fraction]) -> RatMatrix:
        """Matrix of ``ad u`` in the basis (column j is ``[u, b_j]``)."""
        cols = [self.bracket(u, self.unit_vector(j)) for j in range(self.dim)]
        return RatMatrix.from_columns(cols, self.dim)

    @property
    def ad(self) -> tuple[RatMatrix, ...]:
        if self._ad is None:
            self._ad = tuple(self.ad_matrix(self.unit_vector(i)) for i in range(self.dim))
        return self._ad

    def is_abelian(self) -> bool:
        return not any(any(c) for row in self.structure_constants for c in row)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        return f"LieAlgebra(ambient_dim={self.ambient_dim}, dim={self.dim})"


def generate(ambient_dim: int, generators: Sequence[RatMatrix]) -> LieAlgebra:
    """Smallest bracket-closed subspace containing ``generators``.

    The returned basis is the reduced echelon basis of the vectorized span.
    """
    for g in generators:
        if g.shape != (ambient_dim, ambient_dim):
            raise ValueError(f"generator of shape {g.shape}, expected {ambient_dim}x{ambient_dim}")
    nn = ambient_dim * ambient_dim
    space = EchelonSpace(nn)
    found: list[RatMatrix] = []
    for g in generators:
        if space.add(g.vec()):
            found.append(g)
    frontier = 0
    while frontier < len(found):
        x = found[frontier]
        for y in found[:frontier]:
            z = commutator(x, y)
            if space.add(z.vec()):
                found.append(z)
        frontier += 1
    basis = [RatMatrix(ambient_dim, ambient_dim, v) for v in span_basis([f.vec() for f in found], nn)]
    return LieAlgebra(ambient_dim, basis)


class SubalgebraHandle:
    """Subalgebra of ``parent`` given by canonical coordinate vectors."""

    def __init__(self, parent: LieAlgebra, coords: Sequence[Sequence[Fraction]], *, check: bool = True):
        for c in coords:
            if len(c) != parent.dim:
                raise ValueError("coordinate vector length does not match the parent dimension")
        self.parent = parent
        self._span = _Span(coords, parent.dim)
        self.coords = tuple(self._span.rows)
        self.dim = len(self.coords)
        if check:
            for u, v in combinations(self.coords, 2):
                if not self._span.contains(parent.bracket(u, v)):
                    raise ValidationError("subspace is not closed under the bracket")

    @classmethod
    def full(cls, parent: LieAlgebra) -> "SubalgebraHandle":
        return cls(parent, [parent.unit_vector(i) for i in range(parent.dim)], check=False)

    @classmethod
    def zero(cls, parent: LieAlgebra) -> "SubalgebraHandle":
        return cls(parent, [], check=False)

    @classmethod
    def from_matrices(cls, parent: LieAlgebra, matrices: Sequence[RatMatrix]) -> "SubalgebraHandle":
        """Span of the given elements; they must already span a subalgebra."""
        return cls(parent, [parent.coordinates(m) for m in matrices])

    @classmethod
    def generated_by(cls, parent: LieAlgebra, matrices: Sequence[RatMatrix]) -> "SubalgebraHandle":
        sub = generate(parent.ambient_dim, matrices)
        return cls(parent, [parent.coordinates(m) for m in sub.basis])

    def matrices(self) -> tuple[RatMatrix, ...]:
        return tuple(self.parent.element(c) for c in self.coords)

    def contains(self, coords: Sequence[Fraction]) -> bool:
        return self._span.contains(coords)

    def contains_matrix(self, x: RatMatrix) -> bool:
        try:
            c = self.parent.coordinates(x)
        except ValueError:
            return False
        return self.contains(c)

    def issubset(self, other: "SubalgebraHandle") -> bool:
        return all(other.contains(c) for c in self.coords)

    def quotient_coords(self, coords: Sequence[Fraction]) -> Vector:
        return self._span.quotient_coords(coords)

    @property
    def complement(self) -> list[int]:
        """Parent basis indices whose images span the quotient by this subspace."""
        return list(self._span.complement)

    def in_basis(self, coords: Sequence[Fraction]) -> Vector:
        return self._span.in_basis(coords)

    def as_algebra(self) -> LieAlgebra:
        """The subalgebra as a standalone algebra on the same ambient matrices."""
        return LieAlgebra(self.parent.ambient_dim, self.matrices(), check=False)

    def lift(self, sub: "SubalgebraHandle") -> "SubalgebraHandle":
        """Map a subalgebra of ``self.as_algebra()`` back into the parent."""
        n = self.parent.dim
        return SubalgebraHandle(self.parent, [combine(c, self.coords, n) for c in sub.coords], check=False)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SubalgebraHandle):
            return NotImplemented
        return self.parent == other.parent and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((self.parent, self.coords))

    def __repr__(self) -> str:
        return f"SubalgebraHandle(dim={self.dim} in {self.parent!r})"


def _kernel_of_stack(blocks: Sequence[RatMatrix], ncols: int) -> list[Vector]:
    rows = [r for b in blocks for r in b.to_rows()]
    if not rows:
        return [tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)]
    return kernel_basis(RatMatrix.from_rows(rows, ncols))


def is_ideal(g: LieAlgebra, s: SubalgebraHandle) -> bool:
    return all(s.contains(g.bracket(g.unit_vector(i), c)) for i in range(g.dim) for c in s.coords)


def derived_subalgebra(g: LieAlgebra, s: SubalgebraHandle | None = None) -> SubalgebraHandle:
    coords = s.coords if s is not None else [g.unit_vector(i) for i in range(g.dim)]
    brackets = [g.bracket(u, v) for u, v in combinations(coords, 2)]
    return SubalgebraHandle(g, brackets, check=False)


def is_solvable(g: LieAlgebra, s: SubalgebraHandle | None = None) -> bool:
    cur = s if s is not None else SubalgebraHandle.full(g)
    while cur.dim:
        nxt = derived_subalgebra(g, cur)
        if nxt.dim == cur.dim:
            return False
        cur = nxt
    return True


def killing_form(g: LieAlgebra) -> RatMatrix:
    """Gram matrix of ``trace(ad x ad y)`` on the basis."""
    ads = g.ad
    d = g.dim
    entries = []
    for i in range(d):
        for j in range(d):
            a, b = ads[i], ads[j]
            entries.append(sum((a[p, q] * b[q, p] for p in range(d) for q in range(d) if a[p, q]), Fraction(0)))
    return RatMatrix(d, d, entries)


def trace_form(g: LieAlgebra) -> RatMatrix:
    """Gram matrix of ``trace(x y)`` in the ambient matrix representation."""
    d = g.dim
    n = g.ambient_dim
    b = g.basis
    return RatMatrix(d, d, (
        sum((b[i][p, q] * b[j][q, p] for p in range(n) for q in range(n) if b[i][p, q]), Fraction(0))
        for i in range(d) for j in range(d)
    ))


def solvable_radical(g: LieAlgebra) -> SubalgebraHandle:
    """``{x : kappa(x, [g, g]) = 0}``, the radical in characteristic zero."""
    derived = derived_subalgebra(g)
    kappa = killing_form(g)
    conditions = [kappa.apply(d) for d in derived.coords]
    if conditions:
        rad = SubalgebraHandle(g, kernel_basis(RatMatrix.from_rows(conditions, g.dim)), check=False)
    else:
        rad = SubalgebraHandle.full(g)
    if not is_ideal(g, rad) or not is_solvable(g, rad):
        raise ValidationError("computed radical is not a solvable ideal")
    return rad


def acts_nilpotently(matrices: Sequence[RatMatrix], ambient_dim: int) -> bool:
    """True iff every product of ``ambient_dim`` of the matrices vanishes.

    This makes every element of their span nilpotent.
    """
    if not matrices:
        return True
    nn = ambient_dim * ambient_dim
    layer = [RatMatrix(ambient_dim, ambient_dim, v) for v in span_basis([m.vec() for m in matrices], nn)]
    for _ in range(ambient_dim - 1):
        prods = [p @ m for p in layer for m in matrices]
        layer = [RatMatrix(ambient_dim, ambient_dim, v) for v in span_basis([p.vec() for p in prods], nn)]
        if not layer:
            return True
    return not layer


def validate_unipotent_ideal(g: LieAlgebra, n: SubalgebraHandle) -> None:
    if not is_ideal(g, n):
        raise ValidationError("unipotent radical candidate is not an ideal")
    if not acts_nilpotently(n.matrices(), g.ambient_dim):
        raise ValidationError("unipotent radical candidate contains non-nilpotent matrices")


def unipotent_radical(g: LieAlgebra) -> SubalgebraHandle:
    """Radical intersected with the radical of the ambient trace form.

    Valid for Lie algebras of algebraic groups; the result is checked to be
    an ideal consisting of nilpotent matrices, and ValidationError is raised
    otherwise.
    """
    rad = solvable_radical(g)
    if rad.dim:
        tf = trace_form(g)
        conditions = RatMatrix.from_rows([tf.apply(r) for r in rad.coords], g.dim)
        # x = sum a_r rad_r with tr(x b_j) = 0 for every j
        rel = kernel_basis(conditions.T)
        nil = SubalgebraHandle(g, [combine(a, rad.coords, g.dim) for a in rel], check=False)
    else:
        nil = rad
    validate_unipotent_ideal(g, nil)
    return nil


@dataclass(frozen=True, eq=False)
class QuotientMap:
    """Projection ``source -> source / ideal`` with a faithful matrix realization.

    ``projection`` has one column per source basis element, holding its image
    in the quotient basis. ``complement[a]`` is the source basis index lifting
    quotient basis element ``a``.
    """

    source: LieAlgebra
    ideal: SubalgebraHandle
    quotient: LieAlgebra
    projection: RatMatrix
    complement: tuple[int, ...]

    def project(self, coords: Sequence[Fraction]) -> Vector:
        return self.projection.apply(coords)

    def image(self, h: SubalgebraHandle) -> SubalgebraHandle:
        return SubalgebraHandle(self.quotient, [self.project(c) for c in h.coords], check=False)


def levi_quotient(g: LieAlgebra, ideal: SubalgebraHandle | None = None) -> QuotientMap:
    """Quotient of ``g`` by its unipotent radical (or by a supplied nilpotent ideal).

    The quotient acts on itself by ``ad`` and on its abelianization by
    diagonal matrices; the direct sum of these is a faithful realization
    whenever the quotient is reductive.
    """
    if ideal is None:
        n = unipotent_radical(g)
    else:
        if ideal.parent != g:
            raise ValueError("ideal belongs to a different algebra")
        validate_unipotent_ideal(g, ideal)
        n = ideal
    d = g.dim
    if not n.dim:
        return QuotientMap(g, n, g, RatMatrix.identity(d), tuple(range(d)))
    comp = tuple(n.complement)
    dl = len(comp)
    proj = RatMatrix.from_columns([n.quotient_coords(g.unit_vector(j)) for j in range(d)], dl)
    sc = [[proj.apply(g.bracket(g.unit_vector(comp[a]), g.unit_vector(comp[b]))) for b in range(dl)]
          for a in range(dl)]
    ad_blocks = [RatMatrix.from_columns(sc[a], dl) for a in range(dl)]
    derived = _Span([sc[a][b] for a in range(dl) for b in range(a + 1, dl)], dl)
    abel = [derived.quotient_coords(tuple(Fraction(int(k == a)) for k in range(dl))) for a in range(dl)]
    blocks = [ad_blocks[a].block_diag(RatMatrix.diag(abel[a])) for a in range(dl)]
    size = dl + len(derived.complement)
    if size == 0:
        size = 1
        blocks = []
    try:
        quotient = LieAlgebra(size, blocks)
    except ValueError as exc:
        raise ValidationError(f"realization of the quotient is not faithful: {exc}") from exc
    for a in range(dl):
        for b in range(dl):
            if quotient.structure_constants[a][b] != sc[a][b]:
                raise ValidationError("quotient realization is not a Lie homomorphism")
    return QuotientMap(g, n, quotient, proj, comp)


def centralizer(g: LieAlgebra, s: SubalgebraHandle) -> SubalgebraHandle:
    """``{x in g : [x, y] = 0 for y in s}``."""
    blocks = [g.ad_matrix(c) for c in s.coords]
    return SubalgebraHandle(g, _kernel_of_stack(blocks, g.dim), check=False)


def center(g: LieAlgebra) -> SubalgebraHandle:
    return centralizer(g, SubalgebraHandle.full(g))


def normalizer(g: LieAlgebra, s: SubalgebraHandle) -> SubalgebraHandle:
    """``{x in g : [x, s] in s}``, as the kernel of ``x -> [x, s_j] mod s``."""
    blocks = []
    for c in s.coords:
        ad_c = g.ad_matrix(c)
        cols = [s.quotient_coords(ad_c.col(j)) for j in range(g.dim)]
        if cols and cols[0]:
            blocks.append(RatMatrix.from_columns(cols, len(cols[0])))
    return SubalgebraHandle(g, _kernel_of_stack(blocks, g.dim), check=False)


def _all_semisimple(matrices: Sequence[RatMatrix]) -> bool:
    if not all(is_semisimple(m) for m in matrices):
        return False
    return all(is_semisimple(a + b) for a, b in combinations(matrices, 2))


def is_reductive_subalgebra(g: LieAlgebra, k: SubalgebraHandle) -> bool:
    """Radical equals center, and the center consists of semisimple matrices."""
    if k.parent != g:
        raise ValueError("subalgebra belongs to a different algebra")
    ka = k.as_algebra()
    rad = solvable_radical(ka)
    z = center(ka)
    if rad != z:
        return False
    return _all_semisimple(z.matrices())


def is_toral(g: LieAlgebra, t: SubalgebraHandle) -> bool:
    mats = t.matrices()
    if any(not commutator(a, b).is_zero() for a, b in combinations(mats, 2)):
        return False
    return _all_semisimple(mats)


def is_maximal_toral(g: LieAlgebra, t: SubalgebraHandle) -> bool:
    """Toral, and the semisimple part of every centralizer element lies in ``t``.

    Checked on a basis of the centralizer and its pairwise sums.
    """
    if not is_toral(g, t):
        return False
    cmats = list(centralizer(g, t).matrices())
    probes = cmats + [a + b for a, b in combinations(cmats, 2)]
    for x in probes:
        s, _ = jordan_chevalley(x)
        if not t.contains_matrix(s):
            return False
    return True
