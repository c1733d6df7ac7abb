from __future__ import annotations

import json

import pytest

from _support import M, sl_generators, unit
from lieaffine.liecore import SubalgebraHandle, generate
from lieaffine.repkit import Representation
from lieaffine.verdict import (
    AFFINELY_CLOSED, NOT_AFFINELY_CLOSED, OUT_OF_SCOPE, OrbitCertificate, PairSpec, Step, Verdict,
    classify_g_algebra, closed_orbit_certificate, derive_answer, is_affinely_closed, luna_test,
    torus_fixed_certificate,
)

H, E, F = M([1, 0], [0, -1]), M([0, 1], [0, 0]), M([0, 0], [1, 0])
E11, E12 = unit(2, 0, 0), unit(2, 0, 1)
PRINCIPAL = [M([2, 0, 0], [0, 0, 0], [0, 0, -2]), M([0, 1, 0], [0, 0, 2], [0, 0, 0]),
             M([0, 0, 0], [2, 0, 0], [0, 1, 0])]


def pair(gens, hgens, n=2, **kw) -> PairSpec:
    g = generate(n, gens)
    return PairSpec(g, SubalgebraHandle.generated_by(g, hgens), **kw)


def test_luna_examples(sl2, sl3):
    t = SubalgebraHandle.from_matrices(sl2, [H])
    assert luna_test(sl2, t).answer == AFFINELY_CLOSED
    b = SubalgebraHandle.from_matrices(sl2, [H, E])
    v = luna_test(sl2, b)
    assert v.answer == NOT_AFFINELY_CLOSED and "not reductive" in v.reason
    assert luna_test(sl2, SubalgebraHandle.zero(sl2)).answer == NOT_AFFINELY_CLOSED
    assert luna_test(sl2, SubalgebraHandle.full(sl2)).answer == AFFINELY_CLOSED
    diag = SubalgebraHandle.from_matrices(sl3, [M([1, 0, 0], [0, -1, 0], [0, 0, 0]),
                                                M([0, 0, 0], [0, 1, 0], [0, 0, -1])])
    assert luna_test(sl3, diag).answer == AFFINELY_CLOSED


def test_schur_case(sl3):
    k = SubalgebraHandle.generated_by(sl3, PRINCIPAL)
    v = luna_test(sl3, k)
    assert v.answer == AFFINELY_CLOSED
    nstep = [s for s in v.certificate if s.criterion == "normalizer-dimension"][0]
    assert nstep.witness["normalizer_dim"] == nstep.witness["subalgebra_dim"] == 3


def test_luna_rejects_non_reductive_ambient():
    g = generate(2, [E11, E12])
    v = luna_test(g, SubalgebraHandle.full(g))
    assert v.answer == OUT_OF_SCOPE


def test_reduction_examples():
    assert is_affinely_closed(pair([H, E], [H])).answer == AFFINELY_CLOSED
    assert is_affinely_closed(pair([E11, E12], [])).answer == NOT_AFFINELY_CLOSED
    assert is_affinely_closed(pair([E11, E12], [E11 - E12])).answer == AFFINELY_CLOSED
    assert is_affinely_closed(pair([H, E], [E])).answer == NOT_AFFINELY_CLOSED


def test_scope_flags():
    v = is_affinely_closed(pair(sl_generators(2), [], connected=False))
    assert v.answer == OUT_OF_SCOPE and "non-connected" in v.reason
    v = is_affinely_closed(pair(sl_generators(2), [H], algebraic=False))
    assert v.answer == OUT_OF_SCOPE and "algebraic" in v.reason


def test_supplied_unipotent():
    g = generate(2, [E11, E12])
    n = SubalgebraHandle.from_matrices(g, [E12])
    p = PairSpec(g, SubalgebraHandle.from_matrices(g, [E11]), unipotent=n)
    v = is_affinely_closed(p)
    assert v.answer == AFFINELY_CLOSED and v.verify()
    bad = PairSpec(g, SubalgebraHandle.from_matrices(g, [E11]), unipotent=SubalgebraHandle.full(g))
    v = is_affinely_closed(bad)
    assert v.answer == OUT_OF_SCOPE and "reduction failed" in v.reason and v.verify()


def test_pair_rejects_foreign_subalgebra(sl2):
    other = generate(2, [H, E])
    with pytest.raises(ValueError):
        PairSpec(sl2, SubalgebraHandle.full(other))


def test_certificates_verify_and_roundtrip():
    for p in (pair([H, E], [H]), pair([E11, E12], []), pair(sl_generators(2), [H]),
              pair(sl_generators(2), [], connected=False)):
        v = is_affinely_closed(p)
        assert v.verify()
        back = Verdict.from_json(v.to_json())
        assert back == v and back.verify()


def test_tampered_certificates_fail():
    v = is_affinely_closed(pair([H, E], [H]))
    # claim a different answer
    assert not Verdict(NOT_AFFINELY_CLOSED, v.certificate, v.reason).verify()
    # flip a step outcome
    steps = list(v.certificate)
    last = steps[-1]
    steps[-1] = Step(last.criterion, not last.outcome, last.witness)
    assert not Verdict(v.answer, tuple(steps), v.reason).verify()
    # corrupt a witness
    d = json.loads(v.to_json())
    for s in d["certificate"]:
        if s["criterion"] == "normalizer-dimension":
            s["witness"]["normalizer_dim"] = 2
    assert not Verdict.from_dict(d).verify()
    # unknown criterion
    assert not Step("made-up", True, {}).replay()


def test_derive_answer_gates():
    assert derive_answer([]) == OUT_OF_SCOPE
    assert derive_answer([Step("scope", False, {})]) == OUT_OF_SCOPE
    assert derive_answer([Step("reductivity", True, {}), Step("normalizer-dimension", False, {})]) \
        == NOT_AFFINELY_CLOSED


def test_closed_orbit_certificate_subgroup_fixed():
    p = pair([E11, E12], [E11 - E12])
    rep = Representation.standard(p.g)
    cert = closed_orbit_certificate(p, rep, (1, 1))
    assert cert is not None and cert.verify()
    back = OrbitCertificate.from_dict(json.loads(json.dumps(cert.to_dict())))
    assert back == cert and back.verify()


def test_closed_orbit_certificate_requires_fixed_vector():
    p = pair([E11, E12], [E11 - E12])
    with pytest.raises(ValueError):
        closed_orbit_certificate(p, Representation.standard(p.g), (1, 0))


def test_no_claim_when_not_closed():
    p = pair([E11, E12], [])
    assert closed_orbit_certificate(p, Representation.standard(p.g), (1, 1)) is None


def test_group_fixed_vector_certificate(sl2):
    p = PairSpec(sl2, SubalgebraHandle.zero(sl2))
    rep = Representation.trivial(sl2, 2)
    cert = closed_orbit_certificate(p, rep, (1, 5))
    assert cert is not None and cert.verify()
    assert cert.steps[0].witness["scope"] == "group"


def test_torus_fixed_certificate(sl2):
    t = SubalgebraHandle.from_matrices(sl2, [H])
    ad = Representation.adjoint(sl2)
    cert = torus_fixed_certificate(sl2, t, ad, sl2.coordinates(H))
    assert cert is not None and cert.verify()
    assert cert.steps[0].criterion == "maximal-torus"
    with pytest.raises(ValueError):
        torus_fixed_certificate(sl2, SubalgebraHandle.from_matrices(sl2, [E]), ad, sl2.coordinates(E))


def test_forged_orbit_certificate_fails(sl2):
    t = SubalgebraHandle.from_matrices(sl2, [H])
    ad = Representation.adjoint(sl2)
    cert = torus_fixed_certificate(sl2, t, ad, sl2.coordinates(H))
    d = cert.to_dict()
    for s in d["steps"]:
        if s["criterion"] == "fixed-point":
            s["witness"]["vector"] = ["0", "1", "0"]
    assert not OrbitCertificate.from_dict(d).verify()


def test_classify_g_algebra():
    r = classify_g_algebra(pair([H, E], [H]))
    assert r.answer == "finitely_generated" and r.all_finitely_generated
    assert len(r.conditions) == 4
    r = classify_g_algebra(pair([E11, E12], []))
    assert r.answer == "not_finitely_generated" and r.all_finitely_generated is False
    r = classify_g_algebra(pair([E12], [E12]))
    assert r.answer == OUT_OF_SCOPE and r.all_finitely_generated is None
    r = classify_g_algebra(pair(sl_generators(2), [H]))
    assert r.answer == OUT_OF_SCOPE
    assert json.dumps(classify_g_algebra(pair([H, E], [H])).to_dict(), sort_keys=True)
