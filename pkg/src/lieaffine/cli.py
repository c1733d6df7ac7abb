"""Command-line front end.

Subcommands read one fixture document (see :mod:`lieaffine.docformat`) and
print a deterministic report, as JSON with ``--json`` or as indented text.

Exit codes: 0 result delivered, 2 out_of_scope, 3 input error,
4 internal validation failure (including certificate replay failure and
corpus expectation mismatch).
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from math import gcd
from pathlib import Path
from typing import Any, Callable, Sequence

from . import BACKEND, __version__
from .docformat import InputDocument, ParseError, parse_document
from .exactlin import RatMatrix, Vector, format_rational, is_zero_vector
from .liecore import (
    LieAlgebra, SubalgebraHandle, ValidationError, generate, levi_quotient, normalizer,
    solvable_radical, unipotent_radical, validate_unipotent_ideal,
)
from .polyprobe import (
    DEFAULT_DEGREE_CAP, LinearAction, Poly, build_axy, chain_demo, fg_probe,
    invariants_up_to_degree, parse_poly, TruncatedSubalgebra,
)
from .repkit import (
    OneParamSubgroup, Representation, direct_sum, dual, hm_limit, orbit_closed_metabelian2,
    separate_scaling, stabilizer_subalgebra, tensor, torus_orbit_closed, weight_split,
)
from .verdict import (
    OUT_OF_SCOPE, OrbitCertificate, PairSpec, Verdict, classify_g_algebra, closed_orbit_certificate,
    encode_matrices, encode_vectors, is_affinely_closed, torus_fixed_certificate,
)

EXIT_OK = 0
EXIT_OUT_OF_SCOPE = 2
EXIT_INPUT = 3
EXIT_INTERNAL = 4

FINITE_GROUP_LIMIT = 10_000


class InputError(Exception):
    """Well-formed document whose content cannot be used."""


@dataclass
class Report:
    command: str
    name: str
    data: dict[str, Any]
    summary: dict[str, str] = field(default_factory=dict)
    certificates: list[Verdict | OrbitCertificate] = field(default_factory=list)
    exit_code: int = EXIT_OK

    def to_dict(self) -> dict:
        return {"command": self.command, "name": self.name, "data": self.data,
                "summary": self.summary, "exit_code": self.exit_code}


# ---------------------------------------------------------------- helpers

def _vec(v: Sequence[Fraction]) -> list[str]:
    return [format_rational(c) for c in v]


def _dims(m: RatMatrix) -> list[list[str]]:
    return m.to_strings()


def _algebra(doc: InputDocument) -> LieAlgebra:
    return generate(doc.ambient_dim, doc.group)


def _subalgebra(g: LieAlgebra, mats: Sequence[RatMatrix], what: str) -> SubalgebraHandle:
    for i, m in enumerate(mats):
        if not g.contains(m):
            raise InputError(f"{what} matrix {i + 1} is not in the group's Lie algebra")
    return SubalgebraHandle.generated_by(g, mats)


def _unipotent(g: LieAlgebra, doc: InputDocument) -> SubalgebraHandle | None:
    if doc.unipotent is None:
        return None
    n = _subalgebra(g, doc.unipotent, "unipotent")
    validate_unipotent_ideal(g, n)
    return n


_REP_TOKEN = re.compile(r"\s*(?:([a-z]+)|(\d+)|(\S))")


def build_representation(g: LieAlgebra, doc: InputDocument) -> Representation:
    """Evaluate the ``[representation]`` expression.

    Grammar: ``sum := prod ('+' prod)*``, ``prod := atom ('*' atom)*``, atoms
    ``standard``, ``adjoint``, ``trivial(N)``, ``dual(sum)``, ``explicit(N)``
    and parenthesized sums. ``+`` is direct sum, ``*`` is tensor product.
    """
    spec = doc.representation
    assert spec is not None
    toks: list[str] = []
    pos = 0
    text = spec.expression
    while pos < len(text):
        m = _REP_TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        toks.append(m.group(1) or m.group(2) or m.group(3))
        pos = m.end()
    toks = [t for t in toks if t is not None]
    i = 0

    def peek() -> str | None:
        return toks[i] if i < len(toks) else None

    def take(expected: str | None = None) -> str:
        nonlocal i
        t = peek()
        if t is None or (expected is not None and t != expected):
            raise InputError(f"representation expression: expected {expected or 'a term'} in {text!r}")
        i += 1
        return t

    def number() -> int:
        t = take()
        if not t.isdigit():
            raise InputError(f"representation expression: expected a size, got {t!r}")
        return int(t)

    def atom() -> Representation:
        t = take()
        if t == "(":
            r = rsum()
            take(")")
            return r
        if t == "standard":
            return Representation.standard(g)
        if t == "adjoint":
            return Representation.adjoint(g)
        if t in ("trivial", "explicit", "dual"):
            take("(")
            if t == "dual":
                r = dual(rsum())
            elif t == "trivial":
                r = Representation.trivial(g, number())
            else:
                r = _explicit(g, doc, number())
            take(")")
            return r
        raise InputError(f"representation expression: unknown term {t!r}")

    def prod() -> Representation:
        r = atom()
        while peek() == "*":
            take()
            r = tensor(r, atom())
        return r

    def rsum() -> Representation:
        r = prod()
        while peek() == "+":
            take()
            r = direct_sum(r, prod())
        return r

    rep = rsum()
    if peek() is not None:
        raise InputError(f"representation expression: trailing input {peek()!r}")
    return rep


def _explicit(g: LieAlgebra, doc: InputDocument, size: int) -> Representation:
    """Representation given by one action matrix per group generator."""
    mats = doc.representation.explicit
    if len(mats) != len(doc.group):
        raise InputError(f"explicit({size}) needs {len(doc.group)} matrices, one per group generator")
    n = doc.ambient_dim
    joint = generate(n + size, [a.block_diag(b) for a, b in zip(doc.group, mats)])
    if joint.dim != g.dim:
        raise InputError("explicit action does not define a homomorphism of the Lie algebra")

    def block(m: RatMatrix, lo: int, hi: int) -> RatMatrix:
        return RatMatrix.from_rows([r[lo:hi] for r in m.to_rows()[lo:hi]], hi - lo)

    firsts = [block(b, 0, n) for b in joint.basis]
    seconds = [block(b, n, n + size) for b in joint.basis]
    lifted = LieAlgebra(n, firsts, check=False)
    action = []
    for b in g.basis:
        c = lifted.coordinates(b)
        out = RatMatrix.zeros(size)
        for coef, s in zip(c, seconds):
            if coef:
                out = out + s.scale(coef)
        action.append(out)
    return Representation(g, action)


def _vector(doc: InputDocument, g: LieAlgebra, rep: Representation | None) -> Vector:
    v = doc.vector
    if isinstance(v, RatMatrix):
        if doc.representation is None or doc.representation.expression.strip() != "adjoint":
            raise InputError("a matrix vector needs the 'adjoint' representation")
        if not g.contains(v):
            raise InputError("vector matrix is not in the Lie algebra")
        return g.coordinates(v)
    return tuple(v)


def _finite_group(gens: Sequence[RatMatrix], limit: int = FINITE_GROUP_LIMIT) -> dict:
    if not gens:
        return {"order": 1, "abelian": True}
    n = gens[0].rows
    seen = {RatMatrix.identity(n)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for a in frontier:
            for s in gens:
                b = a @ s
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
                    if len(seen) > limit:
                        raise InputError(f"subgroup elements generate more than {limit} elements")
        frontier = nxt
    abelian = all(a @ b == b @ a for a in gens for b in gens)
    return {"order": len(seen), "abelian": abelian}


# ---------------------------------------------------------------- commands

def cmd_structure(doc: InputDocument, args) -> Report:
    g = _algebra(doc)
    rad = solvable_radical(g)
    supplied = _unipotent(g, doc)
    n = supplied if supplied is not None else unipotent_radical(g)
    q = levi_quotient(g, n)
    dims = {"g": g.dim, "radical": rad.dim, "unipotent_radical": n.dim, "levi_quotient": q.quotient.dim}
    data: dict[str, Any] = {
        "dimensions": dims,
        "basis": encode_matrices(g.basis),
        "radical": encode_vectors(rad.coords),
        "unipotent_radical": encode_vectors(n.coords),
        "unipotent_supplied": supplied is not None,
        "projection": _dims(q.projection),
    }
    summary = {"structure": f"{g.dim} {rad.dim} {n.dim} {q.quotient.dim}"}
    if doc.subgroup is not None:
        h = _subalgebra(g, doc.subgroup, "subgroup")
        k = q.image(h)
        nh, nk = normalizer(g, h), normalizer(q.quotient, k)
        data["subgroup"] = {"dim": h.dim, "normalizer_dim": nh.dim, "image_dim": k.dim,
                            "image_normalizer_dim": nk.dim}
        summary["structure.normalizer"] = f"{h.dim} {nh.dim} {k.dim} {nk.dim}"
    return Report("structure", doc.name, data, summary)


def _pair(doc: InputDocument, g: LieAlgebra, connected: bool | None = None) -> PairSpec:
    if doc.subgroup is None:
        raise InputError("missing [subgroup] section")
    if doc.connected is None:
        raise InputError("missing 'connected yes|no' header")
    h = _subalgebra(g, doc.subgroup, "subgroup")
    return PairSpec(g, h, connected=doc.connected if connected is None else connected,
                    algebraic=doc.algebraic, unipotent=_unipotent(g, doc))


def cmd_decide(doc: InputDocument, args) -> Report:
    g = _algebra(doc)
    p = _pair(doc, g)
    v = is_affinely_closed(p)
    data: dict[str, Any] = {"verdict": v.to_dict()}
    summary = {"decide": v.answer}
    for step in v.certificate:
        if step.criterion == "normalizer-dimension":
            data["normalizer"] = {"subalgebra_dim": step.witness["subalgebra_dim"],
                                  "normalizer_dim": step.witness["normalizer_dim"]}
            summary["decide.normalizer"] = f"{step.witness['subalgebra_dim']} {step.witness['normalizer_dim']}"
    if v.answer == OUT_OF_SCOPE and (not p.connected or not p.algebraic):
        lie = is_affinely_closed(PairSpec(g, p.h, unipotent=p.unipotent))
        data["lie_level_answer"] = lie.answer
        data["lie_level_note"] = ("answer the Lie-level test would give if the subgroup were connected "
                                  "and algebraic; it is not a verdict")
        summary["decide.lie_level"] = lie.answer
    if doc.subgroup_elements is not None:
        fg = _finite_group(doc.subgroup_elements)
        data["subgroup_elements"] = fg
        summary["decide.finite_order"] = str(fg["order"])
        summary["decide.finite_abelian"] = "yes" if fg["abelian"] else "no"
    ga = classify_g_algebra(p)
    data["g_algebra"] = {"answer": ga.answer, "reason": ga.reason, "conditions": list(ga.conditions)}
    summary["galgebra"] = ga.answer
    code = EXIT_OUT_OF_SCOPE if v.answer == OUT_OF_SCOPE else EXIT_OK
    return Report("decide", doc.name, data, summary, [v], code)


def cmd_orbit(doc: InputDocument, args) -> Report:
    if doc.vector is None:
        raise InputError("missing [vector] section")
    g = _algebra(doc)
    rep = build_representation(g, doc) if doc.representation is not None else None
    v = _vector(doc, g, rep)
    if rep is not None and len(v) != rep.dim:
        raise InputError(f"vector has length {len(v)}, representation has dimension {rep.dim}")
    data: dict[str, Any] = {"vector": _vec(v)}
    summary: dict[str, str] = {}
    certs: list[OrbitCertificate] = []
    zero = is_zero_vector(v)
    if zero:
        data["note"] = "zero vector: every orbit is the fixed point 0 and is closed"

    if rep is not None:
        stab = stabilizer_subalgebra(rep, v)
        data["representation_dim"] = rep.dim
        data["stabilizer"] = {"dim": stab.dim, "basis": encode_matrices(stab.matrices())}
        data["fixed_by_group"] = rep.is_fixed_by_all(v)
        summary["orbit.stabilizer_dim"] = str(stab.dim)
        if not zero:
            r2, v2 = separate_scaling(rep, v)
            data["separated_stabilizer_equal"] = stabilizer_subalgebra(r2, v2) == stab
        if doc.subgroup is not None and doc.connected is not None:
            p = _pair(doc, g)
            if rep.is_fixed(p.h.coords, v):
                cert = closed_orbit_certificate(p, rep, v)
                data["certificate"] = cert.to_dict() if cert else None
                summary["orbit.certificate"] = "issued" if cert else "none"
                if cert:
                    certs.append(cert)
            else:
                data["certificate"] = None
                summary["orbit.certificate"] = "not-fixed"

    if doc.oneparams:
        out = []
        for weights, basis in doc.oneparams:
            if len(weights) != len(v):
                raise InputError("one-parameter weights must match the vector length")
            lam = OneParamSubgroup(weights, basis)
            split = weight_split(lam, v)
            lim = hm_limit(lam, v)
            out.append({"weights": list(weights),
                        "split": [{"weight": w, "component": _vec(c)} for w, c in split.components],
                        "limit": _vec(lim) if lim is not None else None})
        data["one_parameter"] = out
        summary["orbit.limits"] = " ".join("none" if o["limit"] is None else ",".join(o["limit"]) for o in out)

    weights = doc.torus_weights
    if weights is None and rep is not None and doc.torus is not None:
        weights = _torus_weights(g, rep, doc.torus)
        if weights is None:
            data["torus_note"] = "torus does not act diagonally in this basis"
    if weights is not None:
        if len(weights) != len(v):
            raise InputError("need one torus weight per vector coordinate")
        closed = True if zero else torus_orbit_closed(weights, v)
        data["torus"] = {"weights": [list(w) for w in weights], "closed": closed}
        summary["orbit.torus"] = "closed" if closed else "not_closed"

    if rep is not None and doc.torus is not None and doc.connected is not None:
        t = _subalgebra(g, doc.torus, "torus")
        if rep.is_fixed(t.coords, v):
            try:
                cert = torus_fixed_certificate(g, t, rep, v)
            except ValueError as exc:
                data["torus_certificate"] = str(exc)
            else:
                data["torus_certificate"] = cert.to_dict() if cert else None
                if cert:
                    certs.append(cert)

    if doc.metabelian is not None:
        p_, q_ = doc.metabelian
        closed = True if zero else orbit_closed_metabelian2(p_, q_, v)
        data["group_orbit"] = {"p": p_, "q": q_, "closed": closed}
        summary["orbit.group"] = "closed" if closed else "not_closed"
    return Report("orbit", doc.name, data, summary, certs)


def _torus_weights(g: LieAlgebra, rep: Representation, torus: Sequence[RatMatrix]) -> list[tuple[int, ...]] | None:
    cols = []
    for t in torus:
        a = rep.act(g.coordinates(t))
        if any(a[i, j] for i in range(a.rows) for j in range(a.cols) if i != j):
            return None
        diag = [a[i, i] for i in range(a.rows)]
        den = 1
        for x in diag:
            den = den * x.denominator // gcd(den, x.denominator)
        cols.append([int(x * den) for x in diag])
    return [tuple(c[i] for c in cols) for i in range(rep.dim)]


def cmd_polyprobe(doc: InputDocument, args) -> Report:
    fx = doc.polynomial
    if fx is None:
        raise InputError("missing [polynomial] section")
    variables = fx.variables
    cap = args.degree_cap if getattr(args, "degree_cap", None) is not None else (fx.cap or DEFAULT_DEGREE_CAP)

    def poly(text: str) -> Poly:
        try:
            return parse_poly(text, variables)
        except ValueError as exc:
            raise InputError(f"polynomial {text!r}: {exc}") from None

    data: dict[str, Any] = {"variables": list(variables), "degree_cap": cap}
    summary: dict[str, str] = {}
    action = None
    if fx.actions:
        images = {lhs: poly(rhs) for lhs, rhs in fx.actions}
        try:
            action = LinearAction.from_images(variables, images)
        except ValueError as exc:
            raise InputError(f"action: {exc}") from None
        inv = invariants_up_to_degree(action, cap)
        data["invariants"] = [str(f) for f in inv]
        summary["polyprobe.invariants"] = ", ".join(str(f) for f in inv)

    def table(ts: TruncatedSubalgebra) -> dict[str, int]:
        return {str(d): c for d, c in sorted(fg_probe(ts).items())}

    if fx.generators is not None:
        gens = [poly(t) for t in fx.generators]
        if any(f.degree > cap for f in gens):
            raise InputError(f"a generator exceeds the degree cap {cap}")
        tab = table(TruncatedSubalgebra(gens, cap, variables))
        data["generated"] = {"generators": [str(f) for f in gens], "new_generators": tab}
        summary["polyprobe.generated"] = " ".join(str(tab[k]) for k in sorted(tab, key=int))
    if fx.ideal:
        ideal = [poly(t) for t in fx.ideal]
        tab = table(build_axy(ideal, cap, variables))
        data["axy"] = {"ideal": [str(f) for f in ideal], "new_generators": tab}
        summary["polyprobe.axy"] = " ".join(str(tab[k]) for k in sorted(tab, key=int))
        if fx.chain:
            try:
                links = chain_demo(ideal, fx.chain, cap, action)
            except ValueError as exc:
                raise InputError(f"chain: {exc}") from None
            data["chain"] = [{"witness": str(c.witness), "adjoined": [str(f) for f in c.adjoined],
                              "dimension": c.algebra.dimension()} for c in links]
            summary["polyprobe.chain"] = ", ".join(str(c.witness) for c in links)
    return Report("polyprobe", doc.name, data, summary)


COMMANDS: dict[str, Callable[[InputDocument, Any], Report]] = {
    "structure": cmd_structure,
    "decide": cmd_decide,
    "orbit": cmd_orbit,
    "polyprobe": cmd_polyprobe,
}


def applicable(doc: InputDocument) -> list[str]:
    out = []
    if doc.group or not doc.polynomial:
        out.append("structure")
    if doc.subgroup is not None and doc.connected is not None:
        out.append("decide")
    if doc.vector is not None:
        out.append("orbit")
    if doc.polynomial is not None:
        out.append("polyprobe")
    return out


def bundled_fixtures() -> list[tuple[str, str]]:
    root = resources.files("lieaffine") / "fixtures"
    items = sorted((p.name, p.read_text(encoding="utf-8")) for p in root.iterdir() if p.name.endswith(".lie"))
    return items


def run_fixture(name: str, text: str, args) -> dict:
    """All applicable commands on one document, with expectation checks."""
    doc = parse_document(text)
    summary: dict[str, str] = {}
    results = {}
    verified = True
    for cmd in applicable(doc):
        rep = COMMANDS[cmd](doc, args)
        results[cmd] = rep.data
        summary.update(rep.summary)
        if getattr(args, "verify", False):
            verified = verified and all(c.verify() for c in rep.certificates)
    checks = {}
    for key, want in sorted(doc.expect.items()):
        got = summary.get(key)
        checks[key] = {"expected": want, "actual": got, "ok": got == want}
    ok = all(c["ok"] for c in checks.values()) and verified
    return {"file": name, "name": doc.name, "summary": summary, "expect": checks,
            "certificates_verified": verified, "ok": ok, "results": results}


def cmd_corpus(args) -> Report:
    if args.path:
        base = Path(args.path)
        files = sorted(base.glob("*.lie")) if base.is_dir() else [base]
        items = [(f.name, f.read_text(encoding="utf-8")) for f in files]
    else:
        items = bundled_fixtures()
    entries = []
    for name, text in items:
        try:
            entries.append(run_fixture(name, text, args))
        except (ParseError, InputError) as exc:
            entries.append({"file": name, "ok": False, "error": f"input error: {exc}"})
        except ValidationError as exc:
            entries.append({"file": name, "ok": False, "error": f"validation failure: {exc}"})
    passed = sum(1 for e in entries if e["ok"])
    data = {"fixtures": entries, "passed": passed, "total": len(entries)}
    code = EXIT_OK if passed == len(entries) else EXIT_INTERNAL
    return Report("corpus", "", data, exit_code=code)


# ---------------------------------------------------------------- output

def render_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _scalar(x: Any) -> str:
    if x is None:
        return "none"
    if isinstance(x, bool):
        return "yes" if x else "no"
    return str(x)


def render_text(obj: Any, indent: int = 0) -> str:
    pad = "  " * indent
    lines: list[str] = []
    if isinstance(obj, dict):
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)) and v and not _flat_list(v):
                lines.append(f"{pad}{k}:")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_inline(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and v and not _flat_list(v):
                lines.append(f"{pad}-")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_inline(v)}")
    else:
        lines.append(pad + _scalar(obj))
    return "\n".join(lines)


def _flat_list(v: Any) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) and " " not in str(x) for x in v)


def _inline(v: Any) -> str:
    if isinstance(v, list):
        return "[" + " ".join(_scalar(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{}"
    return _scalar(v)


def _text_report(rep: Report) -> str:
    if rep.command == "corpus":
        out = []
        for e in rep.data["fixtures"]:
            status = "ok" if e["ok"] else "FAIL"
            out.append(f"{status:4} {e['file']}" + (f"  ({e['error']})" if "error" in e else ""))
            for key, c in e.get("expect", {}).items():
                if not c["ok"]:
                    out.append(f"       {key}: expected {c['expected']!r}, got {c['actual']!r}")
        out.append(f"{rep.data['passed']}/{rep.data['total']} fixtures passed")
        return "\n".join(out) + "\n"
    head = f"{rep.command}: {rep.name}" if rep.name else rep.command
    return head + "\n" + render_text(rep.data, 1) + "\n"


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lieaffine", description="Affine closedness of homogeneous spaces, exactly.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__} ({BACKEND} kernel)")
    sub = ap.add_subparsers(dest="command", required=True)
    for name, text in (("structure", "radical, unipotent radical, Levi quotient"),
                       ("decide", "affine closedness of G/H with certificate"),
                       ("orbit", "stabilizers, weight splits, orbit closedness"),
                       ("polyprobe", "invariants and finite-generation probes"),
                       ("corpus", "run fixtures and check their expectations")):
        p = sub.add_parser(name, help=text)
        if name == "corpus":
            p.add_argument("path", nargs="?", help="fixture file or directory (default: bundled corpus)")
        else:
            p.add_argument("file", help="fixture document, or - for stdin")
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.add_argument("--verify", action="store_true", help="replay every certificate")
        p.add_argument("--degree-cap", type=int, default=None, metavar="N", help="polynomial degree cap")
        p.add_argument("--out", metavar="FILE", help="write the report to FILE")
    return ap


def run(argv: Sequence[str] | None = None) -> tuple[int, str]:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "corpus":
            rep = cmd_corpus(args)
        else:
            text = sys.stdin.read() if args.file == "-" else Path(args.file).read_text(encoding="utf-8")
            doc = parse_document(text)
            rep = COMMANDS[args.command](doc, args)
            if args.verify and not all(c.verify() for c in rep.certificates):
                rep.data["verification"] = "failed"
                rep.exit_code = EXIT_INTERNAL
            elif args.verify:
                rep.data["verification"] = "passed"
    except (ParseError, InputError, OSError) as exc:
        return EXIT_INPUT, f"input error: {exc}\n"
    except ValidationError as exc:
        return EXIT_INTERNAL, f"validation failure: {exc}\n"
    out = render_json(rep.to_dict()) if args.json else _text_report(rep)
    if args.out:
        Path(args.out).write_text(out, encoding="utf-8")
        out = ""
    return rep.exit_code, out


def main(argv: Sequence[str] | None = None) -> int:
    code, out = run(argv)
    stream = sys.stderr if code == EXIT_INPUT or (code == EXIT_INTERNAL and out.startswith("validation")) else sys.stdout
    stream.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
