"""Affinely-closed verdicts with replayable certificates.

A pair ``(g, h)`` is decided by passing to the reductive quotient
``l = g / n`` (``n`` the unipotent radical) and testing the image ``k`` of
``h`` there: ``k`` must be reductive and self-normalizing. Each check is
recorded as a :class:`Step` whose witness is enough to rerun it from
scratch.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Sequence

from .exactlin import RatMatrix, Vector, format_rational, parse_rational
from .liecore import (
    LieAlgebra,
    SubalgebraHandle,
    ValidationError,
    is_maximal_toral,
    is_reductive_subalgebra,
    levi_quotient,
    normalizer,
    unipotent_radical,
)
from .repkit import Representation

AFFINELY_CLOSED = "affinely_closed"
NOT_AFFINELY_CLOSED = "not_affinely_closed"
OUT_OF_SCOPE = "out_of_scope"

NON_CONNECTED_REASON = (
    "subgroup declared non-connected: the Lie-level normalizer test cannot see the "
    "component group (a finite subgroup of SL(2), or a finite subgroup of the torus "
    "normalizer, has zero Lie algebra yet can give an affinely closed quotient)"
)
NON_ALGEBRAIC_REASON = "algebra not declared to be the Lie algebra of an algebraic group"


# -- witness encoding ------------------------------------------------------
def encode_matrices(ms: Sequence[RatMatrix]) -> list:
    return [m.to_strings() for m in ms]


def decode_matrices(data: Sequence) -> list[RatMatrix]:
    return [RatMatrix.from_strings(rows) for rows in data]


def encode_vectors(vs: Sequence[Sequence[Fraction]]) -> list:
    return [[format_rational(x) for x in v] for v in vs]


def decode_vectors(data: Sequence) -> list[Vector]:
    return [tuple(parse_rational(x) for x in v) for v in data]


def _algebra_witness(g: LieAlgebra) -> dict:
    return {"ambient_dim": g.ambient_dim, "basis": encode_matrices(g.basis)}


def _algebra_from(w: dict) -> LieAlgebra:
    return LieAlgebra(w["ambient_dim"], decode_matrices(w["basis"]))


def _sub_from(g: LieAlgebra, data: Sequence) -> SubalgebraHandle:
    return SubalgebraHandle(g, decode_vectors(data), check=False)


@dataclass(frozen=True)
class Step:
    criterion: str
    outcome: bool
    witness: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"criterion": self.criterion, "outcome": self.outcome, "witness": self.witness}

    @classmethod
    def from_dict(cls, d: dict) -> "Step":
        return cls(d["criterion"], bool(d["outcome"]), d["witness"])

    def replay(self) -> bool:
        """Rerun the named check on the stored witness; True iff it reproduces."""
        check = _REPLAYERS.get(self.criterion)
        if check is None:
            return False
        try:
            return check(self.witness) == self.outcome
        except (ValidationError, ValueError, KeyError, TypeError):
            return False


# -- individual checks, shared by the engine and by replay -----------------
def _scope_step(connected: bool, algebraic: bool) -> Step:
    return Step("scope", connected and algebraic, {"connected": connected, "algebraic": algebraic})


def _replay_scope(w: dict) -> bool:
    return bool(w["connected"]) and bool(w["algebraic"])


def _reduction_witness(g: LieAlgebra, h: SubalgebraHandle, supplied: SubalgebraHandle | None) -> tuple[Step, Any]:
    base = {**_algebra_witness(g), "subalgebra": encode_vectors(h.coords), "supplied": supplied is not None}
    if supplied is not None:
        base["unipotent"] = encode_vectors(supplied.coords)
    try:
        q = levi_quotient(g, supplied)
    except ValidationError as exc:
        return Step("levi-reduction", False, {**base, "error": str(exc)}), None
    k = q.image(h)
    base.update({
        "unipotent": encode_vectors(q.ideal.coords),
        "quotient": _algebra_witness(q.quotient),
        "projection": q.projection.to_strings(),
        "image": encode_vectors(k.coords),
    })
    return Step("levi-reduction", True, base), (q, k)


def _replay_reduction(w: dict) -> bool:
    g = _algebra_from(w)
    h = _sub_from(g, w["subalgebra"])
    supplied = _sub_from(g, w["unipotent"]) if w["supplied"] else None
    step, _ = _reduction_witness(g, h, supplied)
    if step.witness != w:
        raise ValueError("reduction witness does not reproduce")
    return step.outcome


def _ambient_step(l: LieAlgebra) -> Step:
    try:
        nd = unipotent_radical(l).dim
    except ValidationError:
        nd = -1
    return Step("ambient-reductive", nd == 0, {**_algebra_witness(l), "unipotent_dim": nd})


def _replay_ambient(w: dict) -> bool:
    step = _ambient_step(_algebra_from(w))
    if step.witness["unipotent_dim"] != w["unipotent_dim"]:
        raise ValueError("unipotent dimension does not reproduce")
    return step.outcome


def _reductivity_step(l: LieAlgebra, k: SubalgebraHandle) -> Step:
    return Step("reductivity", is_reductive_subalgebra(l, k),
                {**_algebra_witness(l), "subalgebra": encode_vectors(k.coords)})


def _replay_reductivity(w: dict) -> bool:
    l = _algebra_from(w)
    return is_reductive_subalgebra(l, _sub_from(l, w["subalgebra"]))


def _normalizer_step(l: LieAlgebra, k: SubalgebraHandle) -> Step:
    nk = normalizer(l, k)
    return Step("normalizer-dimension", nk.dim == k.dim, {
        **_algebra_witness(l),
        "subalgebra": encode_vectors(k.coords),
        "normalizer": encode_vectors(nk.coords),
        "subalgebra_dim": k.dim,
        "normalizer_dim": nk.dim,
    })


def _replay_normalizer(w: dict) -> bool:
    l = _algebra_from(w)
    step = _normalizer_step(l, _sub_from(l, w["subalgebra"]))
    if step.witness != w:
        raise ValueError("normalizer witness does not reproduce")
    return step.outcome


def _fixed_step(g: LieAlgebra, coords: Sequence[Vector], r: Representation, x: Sequence[Fraction], scope: str) -> Step:
    return Step("fixed-point", r.is_fixed(coords, x), {
        **_algebra_witness(g),
        "scope": scope,
        "subalgebra": encode_vectors(coords),
        "action": encode_matrices(r.action),
        "vector": [format_rational(c) for c in x],
    })


def _replay_fixed(w: dict) -> bool:
    g = _algebra_from(w)
    r = Representation(g, decode_matrices(w["action"]))
    x = tuple(parse_rational(c) for c in w["vector"])
    coords = decode_vectors(w["subalgebra"])
    if w["scope"] == "group" and SubalgebraHandle(g, coords, check=False) != SubalgebraHandle.full(g):
        raise ValueError("group-fixed witness does not cover the whole algebra")
    return r.is_fixed(coords, x)


def _maximal_torus_step(g: LieAlgebra, t: SubalgebraHandle) -> Step:
    return Step("maximal-torus", is_maximal_toral(g, t),
                {**_algebra_witness(g), "subalgebra": encode_vectors(t.coords)})


def _replay_maximal_torus(w: dict) -> bool:
    g = _algebra_from(w)
    return is_maximal_toral(g, _sub_from(g, w["subalgebra"]))


_REPLAYERS: dict[str, Callable[[dict], bool]] = {
    "scope": _replay_scope,
    "levi-reduction": _replay_reduction,
    "ambient-reductive": _replay_ambient,
    "reductivity": _replay_reductivity,
    "normalizer-dimension": _replay_normalizer,
    "fixed-point": _replay_fixed,
    "maximal-torus": _replay_maximal_torus,
}


def verify_certificate(steps: Sequence[Step]) -> bool:
    return all(s.replay() for s in steps)


def derive_answer(steps: Sequence[Step]) -> str:
    """The answer a certificate supports, from its step outcomes alone."""
    by_name = {s.criterion: s.outcome for s in steps}
    for gate in ("scope", "levi-reduction", "ambient-reductive"):
        if by_name.get(gate) is False:
            return OUT_OF_SCOPE
    if "reductivity" not in by_name or "normalizer-dimension" not in by_name:
        return OUT_OF_SCOPE
    if by_name["reductivity"] and by_name["normalizer-dimension"]:
        return AFFINELY_CLOSED
    return NOT_AFFINELY_CLOSED


@dataclass(frozen=True)
class Verdict:
    answer: str
    certificate: tuple[Step, ...]
    reason: str = ""

    def verify(self) -> bool:
        return verify_certificate(self.certificate) and derive_answer(self.certificate) == self.answer

    def to_dict(self) -> dict:
        return {"answer": self.answer, "reason": self.reason,
                "certificate": [s.to_dict() for s in self.certificate]}

    @classmethod
    def from_dict(cls, d: dict) -> "Verdict":
        return cls(d["answer"], tuple(Step.from_dict(s) for s in d["certificate"]), d.get("reason", ""))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Verdict":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True, eq=False)
class PairSpec:
    """Pair ``(g, h)`` plus the caller's declarations about the groups.

    ``unipotent`` optionally supplies the unipotent radical of ``g`` instead
    of computing it.
    """

    g: LieAlgebra
    h: SubalgebraHandle
    connected: bool = True
    algebraic: bool = True
    unipotent: SubalgebraHandle | None = None

    def __post_init__(self):
        if self.h.parent != self.g:
            raise ValueError("h is not a subalgebra of g")
        if self.unipotent is not None and self.unipotent.parent != self.g:
            raise ValueError("supplied unipotent radical is not inside g")


def luna_test(l: LieAlgebra, k: SubalgebraHandle) -> Verdict:
    """Reductive ambient ``l``: affinely closed iff ``k`` is reductive and self-normalizing."""
    amb = _ambient_step(l)
    if not amb.outcome:
        return Verdict(OUT_OF_SCOPE, (amb,), "ambient algebra is not reductive")
    red = _reductivity_step(l, k)
    nrm = _normalizer_step(l, k)
    answer = AFFINELY_CLOSED if red.outcome and nrm.outcome else NOT_AFFINELY_CLOSED
    reasons = []
    if not red.outcome:
        reasons.append("subalgebra is not reductive")
    if not nrm.outcome:
        reasons.append(f"normalizer has dimension {nrm.witness['normalizer_dim']} > {k.dim}")
    return Verdict(answer, (amb, red, nrm), "; ".join(reasons))


def is_affinely_closed(p: PairSpec) -> Verdict:
    scope = _scope_step(p.connected, p.algebraic)
    if not scope.outcome:
        return Verdict(OUT_OF_SCOPE, (scope,), NON_CONNECTED_REASON if not p.connected else NON_ALGEBRAIC_REASON)
    red, data = _reduction_witness(p.g, p.h, p.unipotent)
    if data is None:
        return Verdict(OUT_OF_SCOPE, (scope, red), f"reduction failed: {red.witness['error']}")
    q, k = data
    lv = luna_test(q.quotient, k)
    return Verdict(lv.answer, (scope, red) + lv.certificate, lv.reason)


@dataclass(frozen=True)
class OrbitCertificate:
    """Certificate that the orbit of ``x`` under the connected group of ``g`` is closed."""

    steps: tuple[Step, ...]

    def verify(self) -> bool:
        if not verify_certificate(self.steps):
            return False
        fixed = [s for s in self.steps if s.criterion == "fixed-point"]
        if not fixed or not all(s.outcome for s in fixed):
            return False
        if any(s.witness["scope"] == "group" for s in fixed):
            return True
        rest = [s for s in self.steps if s.criterion not in ("fixed-point", "maximal-torus")]
        if any(s.criterion == "maximal-torus" and not s.outcome for s in self.steps):
            return False
        return derive_answer(rest) == AFFINELY_CLOSED

    def to_dict(self) -> dict:
        return {"claim": "orbit closed", "steps": [s.to_dict() for s in self.steps]}

    @classmethod
    def from_dict(cls, d: dict) -> "OrbitCertificate":
        return cls(tuple(Step.from_dict(s) for s in d["steps"]))


def closed_orbit_certificate(p: PairSpec, r: Representation, x: Sequence[Fraction]) -> OrbitCertificate | None:
    """Certificate of a closed orbit when ``h`` fixes ``x`` and ``G/H`` is affinely closed.

    Returns ``None`` when no claim can be made; never claims non-closedness.
    """
    if r.algebra != p.g:
        raise ValueError("representation is not of the pair's algebra")
    x = tuple(Fraction(c) for c in x)
    if not r.is_fixed(p.h.coords, x):
        raise ValueError("vector is not fixed by the subalgebra")
    full = SubalgebraHandle.full(p.g)
    if r.is_fixed(full.coords, x):
        return OrbitCertificate((_fixed_step(p.g, full.coords, r, x, "group"),))
    v = is_affinely_closed(p)
    if v.answer != AFFINELY_CLOSED:
        return None
    return OrbitCertificate((_fixed_step(p.g, p.h.coords, r, x, "subgroup"),) + v.certificate)


def torus_fixed_certificate(g: LieAlgebra, t: SubalgebraHandle, r: Representation,
                            x: Sequence[Fraction]) -> OrbitCertificate | None:
    """Closed-orbit certificate for a vector fixed by a maximal torus."""
    mt = _maximal_torus_step(g, t)
    if not mt.outcome:
        raise ValueError("subalgebra is not a maximal toral subalgebra")
    cert = closed_orbit_certificate(PairSpec(g, t, connected=True), r, x)
    if cert is None:
        return None
    return OrbitCertificate((mt,) + cert.steps)


EQUIVALENT_CONDITIONS = (
    "every invariant subalgebra of k[G/H] is finitely generated",
    "no invariant subalgebra of k[G/H] contains a nontrivial invariant ideal",
    "G/H is affinely closed",
    "k[G/H]^{G^u} = k[L/K] with L/K affinely closed",
)


@dataclass(frozen=True)
class GAlgebraReport:
    answer: str  # finitely_generated | not_finitely_generated | out_of_scope
    verdict: Verdict | None
    reason: str
    conditions: tuple[str, ...] = EQUIVALENT_CONDITIONS

    @property
    def all_finitely_generated(self) -> bool | None:
        if self.answer == OUT_OF_SCOPE:
            return None
        return self.answer == "finitely_generated"

    def to_dict(self) -> dict:
        return {"answer": self.answer, "reason": self.reason, "conditions": list(self.conditions),
                "verdict": self.verdict.to_dict() if self.verdict else None}


def classify_g_algebra(p: PairSpec) -> GAlgebraReport:
    """Whether every invariant subalgebra of ``k[G/H]`` is finitely generated.

    Applies only when the unipotent radical acts nontrivially on ``G/H``.
    """
    try:
        n = p.unipotent if p.unipotent is not None else unipotent_radical(p.g)
    except ValidationError as exc:
        return GAlgebraReport(OUT_OF_SCOPE, None, f"unipotent radical unavailable: {exc}")
    if n.issubset(p.h):
        return GAlgebraReport(OUT_OF_SCOPE, None,
                              "unipotent radical lies in h, so it acts trivially on k[G/H] "
                              "(A = A^{G^u}); the equivalence does not apply")
    v = is_affinely_closed(p)
    if v.answer == OUT_OF_SCOPE:
        return GAlgebraReport(OUT_OF_SCOPE, v, v.reason)
    fg = v.answer == AFFINELY_CLOSED
    return GAlgebraReport("finitely_generated" if fg else "not_finitely_generated", v,
                          "all four conditions hold" if fg else "all four conditions fail")
