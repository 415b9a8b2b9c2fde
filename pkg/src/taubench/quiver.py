"""Bound-quiver presentations: parsing, validation, gluing, opposites.

Paths are stored left-to-right in diagrammatic order: the word (a, b)
means "a then b", and the file token a*b denotes that word.  All
endpoint bookkeeping below follows this single convention.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .errors import AdmissibilityShape, NotSourceOrSink, ParseError
from .field import Field, field_from_name

_ID_RE = re.compile(r"^[A-Za-z0-9_]+$")


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ParseError("duplicate vertex id")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ParseError("duplicate arrow id")
        if set(names) & set(self.vertices):
            raise ParseError("arrow id clashes with vertex id")
        vs = set(self.vertices)
        for a in self.arrows:
            if a.source not in vs or a.target not in vs:
                raise ParseError(f"arrow {a.name} references undeclared vertex")

    @property
    def arrow_map(self) -> dict[str, Arrow]:
        return {a.name: a for a in self.arrows}

    def arrows_from(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def arrows_into(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.target == v]

    def is_source(self, v: str) -> bool:
        return not self.arrows_into(v)

    def is_sink(self, v: str) -> bool:
        return not self.arrows_from(v)

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for a in self.arrows:
            adj[a.source].add(a.target)
            adj[a.target].add(a.source)
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def word_endpoints(self, word: tuple[str, ...], at: str | None = None):
        """(start, end) of a word; trivial words need `at`."""
        if not word:
            return at, at
        amap = self.arrow_map
        prev = None
        for name in word:
            a = amap[name]
            if prev is not None and prev != a.source:
                raise AdmissibilityShape(f"word {'*'.join(word)} is not composable")
            prev = a.target
        return amap[word[0]].source, prev

    def opposite(self) -> "Quiver":
        return Quiver(
            self.vertices,
            tuple(Arrow(a.name, a.target, a.source) for a in self.arrows),
        )


@dataclass(frozen=True)
class Relation:
    """Sum of coefficient-weighted paths, all length >= 2, shared endpoints.

    Coefficients are stored as exact integers/Fractions and reduced into a
    concrete field only when a PathBasis is built, so one presentation can
    be re-examined over several fields.
    """

    terms: tuple[tuple[Fraction, tuple[str, ...]], ...]

    def validate(self, quiver: Quiver):
        if not self.terms:
            raise AdmissibilityShape("empty relation")
        ends = None
        for coeff, word in self.terms:
            if coeff == 0:
                raise AdmissibilityShape("zero coefficient in a relation term")
            if len(word) < 2:
                raise AdmissibilityShape(
                    f"relation term {'*'.join(word) or '<empty>'} has length < 2"
                )
            se = quiver.word_endpoints(word)
            if ends is None:
                ends = se
            elif ends != se:
                raise AdmissibilityShape("relation terms do not share endpoints")

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def reversed(self) -> "Relation":
        return Relation(tuple((c, tuple(reversed(w))) for c, w in self.terms))

    def __str__(self):
        parts = []
        for c, w in self.terms:
            path = "*".join(w)
            parts.append(path if c == 1 else f"{c} {path}")
        return " + ".join(parts)


@dataclass(frozen=True)
class AlgebraPresentation:
    quiver: Quiver
    relations: tuple[Relation, ...]
    field: Field
    name: str = "algebra"

    def __post_init__(self):
        for r in self.relations:
            r.validate(self.quiver)

    @property
    def n_vertices(self) -> int:
        return len(self.quiver.vertices)

    def with_field(self, fld: Field) -> "AlgebraPresentation":
        if fld is self.field:
            return self
        if fld.is_finite:
            for r in self.relations:
                for c, w in r.terms:
                    if fld.scalar(c) == 0:
                        raise AdmissibilityShape(
                            f"coefficient {c} vanishes over {fld.name}; "
                            "the presentation does not transfer"
                        )
        return AlgebraPresentation(self.quiver, self.relations, fld, self.name)

    def opposite(self) -> "AlgebraPresentation":
        return AlgebraPresentation(
            self.quiver.opposite(),
            tuple(r.reversed() for r in self.relations),
            self.field,
            self.name + "_op",
        )

    def to_text(self) -> str:
        lines = [f"vertices: {' '.join(self.quiver.vertices)}"]
        if self.quiver.arrows:
            lines.append(
                "arrows: "
                + ", ".join(f"{a.name}: {a.source} -> {a.target}" for a in self.quiver.arrows)
            )
        if self.relations:
            lines.append("relations: " + ", ".join(str(r) for r in self.relations))
        lines.append(f"field: {self.field.name}")
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# parsing


def _check_id(tok: str, line_no: int):
    if not _ID_RE.match(tok):
        raise ParseError(f"bad identifier {tok!r}", line=line_no)


def _parse_term(text: str, line_no: int):
    pieces = text.split()
    if not pieces:
        raise ParseError("empty relation term", line=line_no)
    coeff = Fraction(1)
    if len(pieces) == 2:
        try:
            coeff = Fraction(pieces[0])
        except ValueError:
            raise ParseError(f"bad coefficient {pieces[0]!r}", line=line_no)
        path_text = pieces[1]
    elif len(pieces) == 1:
        path_text = pieces[0]
        if path_text.startswith("-"):
            coeff = Fraction(-1)
            path_text = path_text[1:]
    else:
        raise ParseError(f"cannot parse relation term {text!r}", line=line_no)
    word = tuple(path_text.split("*"))
    for tok in word:
        _check_id(tok, line_no)
    return coeff, word


def parse_presentation(text: str, name: str = "algebra") -> AlgebraPresentation:
    """Parse the line-oriented bound-quiver file format.

    Sections: vertices, arrows, relations (optional), field (optional,
    default Q).  `#` starts a comment.  Rejects disconnected input; internal
    constructions (quotients) may still produce disconnected presentations.
    """
    sections: dict[str, tuple[str, int]] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ParseError(f"expected 'key: value', got {line!r}", line=line_no)
        key, _, value = line.partition(":")
        key = key.strip().lower()
        if key not in ("vertices", "arrows", "relations", "field"):
            raise ParseError(f"unknown section {key!r}", line=line_no)
        if key in sections:
            raise ParseError(f"duplicate section {key!r}", line=line_no)
        sections[key] = (value.strip(), line_no)

    if "vertices" not in sections:
        raise ParseError("missing 'vertices:' section")
    vtext, vline = sections["vertices"]
    vertices = tuple(vtext.split())
    if not vertices:
        raise ParseError("no vertices declared", line=vline)
    for v in vertices:
        _check_id(v, vline)

    arrows: list[Arrow] = []
    if "arrows" in sections:
        atext, aline = sections["arrows"]
        if atext:
            for chunk in atext.split(","):
                chunk = chunk.strip()
                if not chunk:
                    continue
                m = re.match(r"^([A-Za-z0-9_]+)\s*:\s*([A-Za-z0-9_]+)\s*->\s*([A-Za-z0-9_]+)$", chunk)
                if not m:
                    raise ParseError(f"cannot parse arrow {chunk!r}", line=aline)
                nm, src, tgt = m.groups()
                if src not in vertices or tgt not in vertices:
                    raise ParseError(
                        f"arrow {nm} references undeclared vertex", line=aline
                    )
                arrows.append(Arrow(nm, src, tgt))

    quiver = Quiver(vertices, tuple(arrows))

    relations: list[Relation] = []
    if "relations" in sections:
        rtext, rline = sections["relations"]
        if rtext:
            for chunk in rtext.split(","):
                chunk = chunk.strip()
                if not chunk:
                    continue
                terms = tuple(_parse_term(t, rline) for t in chunk.split("+"))
                rel = Relation(terms)
                for _, word in rel.terms:
                    for tok in word:
                        if tok not in quiver.arrow_map:
                            raise ParseError(
                                f"relation references unknown arrow {tok!r}", line=rline
                            )
                rel.validate(quiver)
                relations.append(rel)

    fld = field_from_name(sections["field"][0]) if "field" in sections else Field(0)

    pres = AlgebraPresentation(quiver, tuple(relations), fld, name)
    if not quiver.is_connected():
        raise ParseError("quiver is not connected")
    return pres


# ---------------------------------------------------------------------------
# gluing


def glue(pres: AlgebraPresentation, source_v: str, sink_v: str) -> AlgebraPresentation:
    """Identify a source and a sink; kill all new length-2 compositions.

    The merged vertex keeps the source's id and becomes a node.
    """
    q = pres.quiver
    if source_v == sink_v:
        raise NotSourceOrSink("cannot glue a vertex to itself")
    if source_v not in q.vertices or sink_v not in q.vertices:
        raise NotSourceOrSink("unknown vertex")
    if not q.is_source(source_v):
        raise NotSourceOrSink(f"{source_v} is not a source")
    if not q.is_sink(sink_v):
        raise NotSourceOrSink(f"{sink_v} is not a sink")

    merged = source_v

    def remap(v: str) -> str:
        return merged if v == sink_v else v

    vertices = tuple(v for v in q.vertices if v != sink_v)
    arrows = tuple(Arrow(a.name, remap(a.source), remap(a.target)) for a in q.arrows)
    new_q = Quiver(vertices, arrows)

    relations = [
        Relation(tuple((c, w) for c, w in r.terms)) for r in pres.relations
    ]
    incoming = [a.name for a in q.arrows if a.target == sink_v]
    outgoing = [a.name for a in q.arrows if a.source == source_v]
    for alpha in incoming:
        for beta in outgoing:
            relations.append(Relation(((Fraction(1), (alpha, beta)),)))

    return AlgebraPresentation(
        new_q, tuple(relations), pres.field, pres.name + f"_glue_{source_v}_{sink_v}"
    )
