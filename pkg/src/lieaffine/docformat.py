"""Parser for the line-oriented fixture format.

A document starts with header lines (``format 1``, ``dim N``, optional
``name``, ``connected``, ``algebraic``) followed by ``[section]`` blocks::

    format 1
    dim 2
    connected yes
    [group]
    [1 0; 0 0]
    [0 1; 0 0]
    [subgroup]
    [1 -1; 0 0]

Matrices are written ``[a b; c d]``; scalars are ``p/q`` or ``p``.
Everything after ``#`` on a line is a comment.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .exactlin import RatMatrix, parse_rational

FORMAT_VERSION = 1

SECTIONS = (
    "group", "subgroup", "unipotent", "torus", "representation", "vector", "onepar",
    "torus-weights", "metabelian", "polynomial", "expect", "subgroup-elements",
)


class ParseError(Exception):
    def __init__(self, line: int, col: int, message: str):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col
        self.message = message


@dataclass
class PolyFixture:
    variables: tuple[str, ...] = ()
    actions: list[tuple[str, str]] = field(default_factory=list)
    ideal: list[str] = field(default_factory=list)
    generators: list[str] | None = None
    cap: int | None = None
    chain: int | None = None


@dataclass
class RepresentationSpec:
    expression: str
    explicit: list[RatMatrix] = field(default_factory=list)
    explicit_dim: int | None = None


@dataclass
class InputDocument:
    version: int
    ambient_dim: int
    name: str = ""
    connected: bool | None = None
    algebraic: bool = True
    group: list[RatMatrix] = field(default_factory=list)
    subgroup: list[RatMatrix] | None = None
    unipotent: list[RatMatrix] | None = None
    torus: list[RatMatrix] | None = None
    subgroup_elements: list[RatMatrix] | None = None
    representation: RepresentationSpec | None = None
    vector: tuple[Fraction, ...] | RatMatrix | None = None
    oneparams: list[tuple[tuple[int, ...], RatMatrix | None]] = field(default_factory=list)
    torus_weights: list[tuple[int, ...]] | None = None
    metabelian: tuple[int, int] | None = None
    polynomial: PolyFixture | None = None
    expect: dict[str, str] = field(default_factory=dict)

    def has(self, section: str) -> bool:
        return section in self._present

    _present: set = field(default_factory=set, repr=False)


def _strip(line: str) -> str:
    return line.split("#", 1)[0].rstrip()


def _lines(text: str) -> Iterator[tuple[int, int, str]]:
    for no, raw in enumerate(text.splitlines(), start=1):
        body = _strip(raw)
        if body.strip():
            indent = len(body) - len(body.lstrip())
            yield no, indent + 1, body.strip()


def _rational(tok: str, line: int, col: int) -> Fraction:
    try:
        return parse_rational(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(line, col, f"bad rational literal {tok!r}") from None


def _tokens(text: str, base_col: int) -> list[tuple[str, int]]:
    return [(m.group(), base_col + m.start()) for m in re.finditer(r"\S+", text)]


def parse_matrix(text: str, line: int, col: int, dim: int | None) -> RatMatrix:
    if not (text.startswith("[") and text.endswith("]")):
        raise ParseError(line, col, "matrix literal must look like [a b; c d]")
    body = text[1:-1]
    rows = []
    offset = col + 1
    for chunk in body.split(";"):
        rows.append([_rational(t, line, c) for t, c in _tokens(chunk, offset)])
        offset += len(chunk) + 1
    width = len(rows[0]) if rows else 0
    if any(len(r) != width for r in rows) or width == 0:
        raise ParseError(line, col, "ragged or empty matrix literal")
    m = RatMatrix.from_rows(rows)
    if dim is not None and m.shape != (dim, dim):
        raise ParseError(line, col, f"expected a {dim}x{dim} matrix, got {m.rows}x{m.cols}")
    return m


def _ints(text: str, line: int, col: int) -> tuple[int, ...]:
    out = []
    for tok, c in _tokens(text, col):
        if not re.fullmatch(r"-?\d+", tok):
            raise ParseError(line, c, f"expected an integer, got {tok!r}")
        out.append(int(tok))
    return tuple(out)


def _flag(value: str, line: int, col: int) -> bool:
    v = value.lower()
    if v in ("yes", "true", "1"):
        return True
    if v in ("no", "false", "0"):
        return False
    raise ParseError(line, col, f"expected yes/no, got {value!r}")


def parse_document(text: str) -> InputDocument:
    header: dict[str, tuple[str, int, int]] = {}
    sections: dict[str, list[tuple[int, int, str]]] = {}
    current = None
    for no, col, body in _lines(text):
        m = re.fullmatch(r"\[([a-z-]+)\]", body)
        if m:
            name = m.group(1)
            if name not in SECTIONS:
                raise ParseError(no, col, f"unknown section [{name}]")
            if name in sections:
                raise ParseError(no, col, f"duplicate section [{name}]")
            sections[name] = []
            current = name
            continue
        if current is None:
            key, _, rest = body.partition(" ")
            if key not in ("format", "dim", "name", "connected", "algebraic"):
                raise ParseError(no, col, f"unknown header line {key!r}")
            header[key] = (rest.strip(), no, col + len(key) + 1)
        else:
            sections[current].append((no, col, body))

    if "format" not in header:
        raise ParseError(1, 1, "missing 'format' header")
    fv, no, col = header["format"]
    if fv != str(FORMAT_VERSION):
        raise ParseError(no, col, f"unsupported format version {fv!r}")
    if "dim" not in header:
        raise ParseError(1, 1, "missing 'dim' header")
    dv, no, col = header["dim"]
    if not re.fullmatch(r"\d+", dv) or int(dv) < 1:
        raise ParseError(no, col, f"dim must be a positive integer, got {dv!r}")
    dim = int(dv)
    doc = InputDocument(version=FORMAT_VERSION, ambient_dim=dim, _present=set(sections))
    if "name" in header:
        doc.name = header["name"][0]
    if "connected" in header:
        doc.connected = _flag(*header["connected"])
    if "algebraic" in header:
        doc.algebraic = _flag(*header["algebraic"])

    def matrices(name: str, size: int | None = dim) -> list[RatMatrix]:
        return [parse_matrix(body, no, col, size) for no, col, body in sections.get(name, [])]

    doc.group = matrices("group")
    for name, attr in (("subgroup", "subgroup"), ("unipotent", "unipotent"), ("torus", "torus"),
                       ("subgroup-elements", "subgroup_elements")):
        if name in sections:
            setattr(doc, attr, matrices(name))

    if "representation" in sections:
        lines = sections["representation"]
        if not lines:
            raise ParseError(1, 1, "empty [representation] section")
        no, col, expr = lines[0]
        spec = RepresentationSpec(expr)
        m = re.search(r"explicit\((\d+)\)", expr)
        if m:
            spec.explicit_dim = int(m.group(1))
            spec.explicit = [parse_matrix(b, n, c, spec.explicit_dim) for n, c, b in lines[1:]]
        elif len(lines) > 1:
            n, c, _ = lines[1]
            raise ParseError(n, c, "matrix lines are only allowed after explicit(N)")
        doc.representation = spec

    if "vector" in sections:
        lines = sections["vector"]
        if len(lines) != 1:
            raise ParseError(lines[0][0] if lines else 1, 1, "[vector] holds exactly one line")
        no, col, body = lines[0]
        if body.startswith("["):
            doc.vector = parse_matrix(body, no, col, dim)
        else:
            doc.vector = tuple(_rational(t, no, c) for t, c in _tokens(body, col))

    for no, col, body in sections.get("onepar", []):
        weights, _, basis = body.partition("|")
        bm = parse_matrix(basis.strip(), no, col + len(weights) + 1, None) if basis.strip() else None
        doc.oneparams.append((_ints(weights, no, col), bm))

    if "torus-weights" in sections:
        doc.torus_weights = [_ints(body, no, col) for no, col, body in sections["torus-weights"]]

    if "metabelian" in sections:
        lines = sections["metabelian"]
        if len(lines) != 1:
            raise ParseError(lines[0][0] if lines else 1, 1, "[metabelian] holds one line 'p q'")
        no, col, body = lines[0]
        pq = _ints(body, no, col)
        if len(pq) != 2:
            raise ParseError(no, col, "[metabelian] needs exactly two integers p q")
        doc.metabelian = (pq[0], pq[1])

    if "polynomial" in sections:
        fx = PolyFixture()
        for no, col, body in sections["polynomial"]:
            key, _, rest = body.partition(" ")
            rest = rest.strip()
            if key == "vars":
                fx.variables = tuple(rest.split())
            elif key == "action":
                lhs, eq, rhs = rest.partition("=")
                if not eq:
                    raise ParseError(no, col, "action lines look like 'action x = y'")
                fx.actions.append((lhs.strip(), rhs.strip()))
            elif key == "ideal":
                fx.ideal = [p.strip() for p in rest.split(",") if p.strip()]
            elif key == "generators":
                fx.generators = [p.strip() for p in rest.split(",") if p.strip()]
            elif key in ("cap", "chain"):
                if not re.fullmatch(r"\d+", rest):
                    raise ParseError(no, col + len(key) + 1, f"{key} needs a nonnegative integer")
                setattr(fx, key, int(rest))
            else:
                raise ParseError(no, col, f"unknown polynomial key {key!r}")
        if not fx.variables:
            raise ParseError(sections["polynomial"][0][0] if sections["polynomial"] else 1, 1,
                             "[polynomial] needs a 'vars' line")
        doc.polynomial = fx

    for no, col, body in sections.get("expect", []):
        key, _, rest = body.partition(" ")
        doc.expect[key] = " ".join(rest.split())
    return doc
