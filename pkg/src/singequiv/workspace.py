"""Line-oriented workspace files: algebras, modules, bimodules, maps, witnesses and tasks.

Grammar (one statement per line, ``#`` starts a comment)::

    FIELD prime 32003 | FIELD rational
    QUIVER <name> VERTICES <v>... [BOUND <n>]
      ARROW <x>: <v> -> <w>
      REL [<c>] <path> {(+|-) [<c>] <path>}        paths like b*a (a first)
    ALGEBRA <name> RAW DIM <n> [LABELS <l>...] [VERTICES <v>...]
      UNIT <c>...
      IDEMPOTENT <c>...                             one line per vertex
      PRODUCT <label> <label> = <c>...              unlisted products are 0
    ALGEBRA <name> = field | opposite <A> | enveloping <A> | tensor <A> <B>
                   | product <A> <B> | corner <A> <v>... | morita <A> <B> <M> <N>
    MODULE <name> OVER <A> DIM <n>
      ACTION <label> = <row> ; <row> ...
    MODULE <name> = regular <A> | simple <A> <v> | dual <M> | sum <M>...
                  | syzygy <M> <n> | restrict <X> left|right
    BIMODULE <name> OVER <B> <A> DIM <n>            a (B, A)-bimodule
      LEFT <label of B> = <rows>
      RIGHT <label of A> = <rows>                   u.a = RIGHT(a) u
    BIMODULE <name> = regular <A> | zero <B> <A> | syzygy <X> <n> | dual <X>
                    | tensor <X> <Y>
    HOM <name> FROM <A> TO <B>
      MAP <label> = <c>...                          image in the basis of B
    HOM <name> = identity <A>
    WITNESS <name> <A> <B> <M> <N> <level>
    TASK <kind> <args>... [SEED s] [CUTOFF c] [MODE m] [NAME n] [...]

Every name must be declared before it is used.  Objects are validated as
soon as their statement is complete.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from .algebra import (
    Algebra,
    AlgebraHom,
    QuiverPresentation,
    algebra_from_quiver,
    corner,
    enveloping,
    field_algebra,
    identity_hom,
    morita_ring,
    opposite,
    product_algebra,
    raw_algebra,
    tensor_algebra,
)
from .errors import ParseError, SingEquivError, ValidationError
from .linalg import DEFAULT_PRIME, Field
from .module import (
    Bimodule,
    Module,
    bimodule_syzygy,
    bimodule_tensor,
    direct_sum,
    dual,
    hom_into_regular,
    simple_modules,
    syzygy,
)
from .witness import Witness

TASK_KINDS = (
    "check-algebra",
    "pd",
    "syzygy",
    "perfect",
    "vdim",
    "gorenstein",
    "mcm",
    "sing-equiv",
    "hom-check",
    "idem-check",
    "ideal-check",
    "idem-witness",
    "morita-witness",
    "build-witness",
    "verify-witness",
    "corollary-witness",
    "downstream-check",
)
TASK_OPTIONS = ("SEED", "CUTOFF", "MODE", "NAME", "S", "SDUAL", "CORNER")
TASK_FLAGS = ("OVERRIDE", "CERTIFY")
TOP = ("FIELD", "QUIVER", "ALGEBRA", "MODULE", "BIMODULE", "HOM", "WITNESS", "TASK")
SUB = {
    "QUIVER": ("ARROW", "REL"),
    "RAW": ("UNIT", "IDEMPOTENT", "PRODUCT"),
    "MODULE": ("ACTION",),
    "BIMODULE": ("LEFT", "RIGHT"),
    "HOM": ("MAP",),
}
_INT = re.compile(r"^-?\d+$")
_FRAC = re.compile(r"^-?\d+/\d+$")
_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_.']*$")


@dataclass(frozen=True)
class Token:
    text: str
    column: int


@dataclass
class Line:
    number: int
    tokens: List[Token]

    @property
    def keyword(self) -> str:
        return self.tokens[0].text

    def canonical(self) -> str:
        return " ".join(t.text for t in self.tokens)


@dataclass
class Statement:
    """A top-level line with its attached sub-lines."""

    head: Line
    body: List[Line] = field(default_factory=list)

    def canonical(self) -> List[str]:
        out = [self.head.canonical()]
        out.extend("  " + b.canonical() for b in self.body)
        return out


@dataclass
class TaskSpec:
    index: int
    kind: str
    args: List[str]
    options: Dict[str, str]
    flags: List[str]
    line: int

    @property
    def name(self) -> Optional[str]:
        return self.options.get("NAME")

    def seed(self, default: int = 0) -> int:
        return int(self.options.get("SEED", default))

    def cutoff(self, default: int = 50) -> int:
        return int(self.options.get("CUTOFF", default))


@dataclass
class Workspace:
    field: Field
    statements: List[Statement]
    objects: Dict[str, Tuple[str, object]]
    tasks: List[TaskSpec]

    def get(self, name: str, kind: Optional[str] = None):
        k, obj = self.objects[name]
        if kind is not None and k != kind:
            raise KeyError(f"{name} is a {k}, not a {kind}")
        return obj

    def serialize(self) -> str:
        return serialize(self)


def tokenize(text: str, number: int) -> Optional[Line]:
    body = text.split("#", 1)[0]
    tokens = []
    for m in re.finditer(r"->|[=;:+]|-(?!\d)|[^\s=;:+]+", body):
        tokens.append(Token(m.group(0), m.start() + 1))
    return Line(number, tokens) if tokens else None


def _strip_colon(tokens: List[Token]) -> List[Token]:
    return [t for t in tokens if t.text != ":"]


class Parser:
    def __init__(self, field_override: Optional[Field] = None):
        self.field = field_override or Field(DEFAULT_PRIME)
        self.field_fixed = field_override is not None
        self.objects: Dict[str, Tuple[str, object]] = {}
        self.statements: List[Statement] = []
        self.tasks: List[TaskSpec] = []

    # -- helpers ---------------------------------------------------------

    def err(self, tok: Token, line: Line, msg: str):
        return ParseError(msg, line.number, tok.column)

    def expect(self, line: Line, i: int, text: str):
        if i >= len(line.tokens):
            raise ParseError(f"expected {text!r}", line.number, self._end(line))
        if line.tokens[i].text != text:
            raise self.err(line.tokens[i], line, f"expected {text!r}, found {line.tokens[i].text!r}")

    def _end(self, line: Line) -> int:
        t = line.tokens[-1]
        return t.column + len(t.text)

    def tok(self, line: Line, i: int, what: str) -> Token:
        if i >= len(line.tokens):
            raise ParseError(f"missing {what}", line.number, self._end(line))
        return line.tokens[i]

    def new_name(self, line: Line, i: int) -> str:
        t = self.tok(line, i, "name")
        if not _NAME.match(t.text):
            raise self.err(t, line, f"invalid name {t.text!r}")
        if t.text in self.objects:
            raise self.err(t, line, f"{t.text} is already declared")
        return t.text

    def ref(self, line: Line, i: int, kind: str):
        t = self.tok(line, i, f"{kind} name")
        got = self.objects.get(t.text)
        if got is None:
            raise self.err(t, line, f"{t.text} is not declared before use")
        if got[0] != kind:
            raise self.err(t, line, f"{t.text} is a {got[0]}, expected a {kind}")
        return got[1]

    def integer(self, line: Line, i: int, what: str = "integer") -> int:
        t = self.tok(line, i, what)
        if not _INT.match(t.text):
            raise self.err(t, line, f"expected {what}, found {t.text!r}")
        return int(t.text)

    def scalar(self, tok: Token, line: Line):
        if _INT.match(tok.text):
            return self.field.scalar(int(tok.text))
        if _FRAC.match(tok.text):
            if self.field.is_prime:
                raise self.err(tok, line, "fractions are only allowed in rational mode")
            num, den = tok.text.split("/")
            if int(den) == 0:
                raise self.err(tok, line, "zero denominator")
            from fractions import Fraction

            return Fraction(int(num), int(den))
        raise self.err(tok, line, f"expected a scalar, found {tok.text!r}")

    def vector(self, line: Line, start: int, n: Optional[int] = None) -> np.ndarray:
        toks = line.tokens[start:]
        if n is not None and len(toks) != n:
            raise ParseError(f"expected {n} scalars, found {len(toks)}", line.number,
                             toks[0].column if toks else self._end(line))
        return self.field.array([self.scalar(t, line) for t in toks]) if toks else self.field.zeros(0)

    def matrix(self, line: Line, start: int, n: int) -> np.ndarray:
        rows, cur = [], []
        for t in line.tokens[start:]:
            if t.text == ";":
                rows.append(cur)
                cur = []
            else:
                cur.append(self.scalar(t, line))
        rows.append(cur)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ParseError(f"expected a {n} x {n} matrix", line.number, line.tokens[start - 1].column)
        return self.field.array(rows).reshape(n, n)

    def label_index(self, alg: Algebra, tok: Token, line: Line) -> int:
        if tok.text not in alg.labels:
            raise self.err(tok, line, f"{tok.text!r} is not a basis label of the algebra")
        return alg.labels.index(tok.text)

    def vertex_idempotent(self, alg: Algebra, line: Line, start: int) -> np.ndarray:
        toks = line.tokens[start:]
        if not toks:
            raise ParseError("expected vertex labels", line.number, self._end(line))
        verts = []
        for t in toks:
            if t.text not in alg.vertex_labels:
                raise self.err(t, line, f"{t.text!r} is not a vertex label")
            verts.append(alg.vertex_labels.index(t.text))
        return alg.idempotent_sum(verts)

    def validated(self, line: Line, build, what: str):
        try:
            return build()
        except ParseError:
            raise
        except SingEquivError as exc:
            raise ValidationError(what, line.number, str(exc)) from exc
        except (ValueError, KeyError, IndexError) as exc:
            raise ValidationError(what, line.number, str(exc)) from exc

    # -- driver ----------------------------------------------------------

    def parse(self, text: str) -> Workspace:
        lines = [ln for ln in (tokenize(t, i + 1) for i, t in enumerate(text.splitlines())) if ln]
        groups: List[Statement] = []
        for ln in lines:
            kw = ln.keyword
            if kw in TOP:
                groups.append(Statement(ln))
                continue
            if not groups:
                raise self.err(ln.tokens[0], ln, f"{kw} outside of any declaration")
            cur = groups[-1]
            allowed = SUB.get(self._block_kind(cur), ())
            if kw not in allowed:
                raise self.err(ln.tokens[0], ln, f"unexpected keyword {kw!r}")
            cur.body.append(ln)
        for st in groups:
            self.statement(st)
            self.statements.append(st)
        return Workspace(self.field, self.statements, self.objects, self.tasks)

    @staticmethod
    def _block_kind(st: Statement) -> str:
        kw = st.head.keyword
        if kw == "ALGEBRA" and len(st.head.tokens) > 2 and st.head.tokens[2].text == "RAW":
            return "RAW"
        return kw

    def statement(self, st: Statement):
        getattr(self, "stmt_" + st.head.keyword.lower())(st)

    # -- statements ------------------------------------------------------

    def stmt_field(self, st: Statement):
        ln = st.head
        if self.objects:
            raise self.err(ln.tokens[0], ln, "FIELD must precede all declarations")
        mode = self.tok(ln, 1, "field mode")
        if mode.text == "prime":
            p = self.integer(ln, 2, "prime")
            fld = self.validated(ln, lambda: Field(p), "p is prime")
        elif mode.text == "rational":
            fld = Field.rational()
        else:
            raise self.err(mode, ln, "field mode must be 'prime' or 'rational'")
        if not self.field_fixed:
            self.field = fld

    def stmt_quiver(self, st: Statement):
        ln = st.head
        name = self.new_name(ln, 1)
        self.expect(ln, 2, "VERTICES")
        toks = ln.tokens[3:]
        bound = None
        if len(toks) >= 2 and toks[-2].text == "BOUND":
            bound = self.integer(ln, len(ln.tokens) - 1, "bound")
            toks = toks[:-2]
        verts = [t.text for t in toks]
        if not verts:
            raise ParseError("a quiver needs at least one vertex", ln.number, self._end(ln))
        arrows, rels = [], []
        for b in st.body:
            if b.keyword == "ARROW":
                t = _strip_colon(b.tokens)
                if len(t) != 5 or t[3].text != "->":
                    raise ParseError("expected 'ARROW x: a -> b'", b.number, b.tokens[0].column)
                for v in (t[2], t[4]):
                    if v.text not in verts:
                        raise self.err(v, b, f"unknown vertex {v.text!r}")
                arrows.append((t[1].text, t[2].text, t[4].text))
            else:
                rels.append(self.relation(b, {a for a, _, _ in arrows}))
        kwargs = {} if bound is None else {"nilpotency_bound": bound}
        q = QuiverPresentation(verts, arrows, rels, name=name, **kwargs)
        alg = self.validated(ln, lambda: algebra_from_quiver(q, self.field), "admissible quiver presentation")
        self.objects[name] = ("algebra", alg)

    def relation(self, ln: Line, arrows) -> list:
        terms = []
        sign = 1
        coeff = None
        for t in ln.tokens[1:]:
            if t.text in ("+", "-"):
                sign = -1 if t.text == "-" else 1
                continue
            if _INT.match(t.text) or _FRAC.match(t.text):
                coeff = self.scalar(t, ln)
                continue
            path = tuple(t.text.split("*"))
            for a in path:
                if a not in arrows:
                    raise self.err(t, ln, f"unknown arrow {a!r}")
            c = 1 if coeff is None else coeff
            terms.append((c if sign == 1 else -c, path))
            coeff, sign = None, 1
        if not terms:
            raise ParseError("empty relation", ln.number, ln.tokens[0].column)
        return terms

    def stmt_algebra(self, st: Statement):
        ln = st.head
        name = self.new_name(ln, 1)
        kind = self.tok(ln, 2, "'=' or RAW")
        if kind.text == "RAW":
            alg = self.raw(st, name)
        elif kind.text == "=":
            alg = self.derived_algebra(ln)
        else:
            raise self.err(kind, ln, "expected '=' or RAW")
        self.objects[name] = ("algebra", alg)

    def raw(self, st: Statement, name: str) -> Algebra:
        ln = st.head
        self.expect(ln, 3, "DIM")
        n = self.integer(ln, 4, "dimension")
        labels, verts = None, None
        i = 5
        while i < len(ln.tokens):
            key = ln.tokens[i].text
            j = i + 1
            while j < len(ln.tokens) and ln.tokens[j].text not in ("LABELS", "VERTICES"):
                j += 1
            vals = [t.text for t in ln.tokens[i + 1:j]]
            if key == "LABELS":
                labels = vals
            elif key == "VERTICES":
                verts = vals
            else:
                raise self.err(ln.tokens[i], ln, f"unexpected {key!r}")
            i = j
        if labels is not None and len(labels) != n:
            raise self.err(ln.tokens[5], ln, f"expected {n} labels")
        labels = labels or [f"b{i}" for i in range(n)]
        S = self.field.zeros((n, n, n))
        unit, idem = None, []
        for b in st.body:
            if b.keyword == "UNIT":
                unit = self.vector(b, 1, n)
            elif b.keyword == "IDEMPOTENT":
                idem.append(self.vector(b, 1, n))
            else:
                if len(b.tokens) < 4:
                    raise ParseError("expected 'PRODUCT x y = ...'", b.number, b.tokens[0].column)
                i1 = self._raw_label(labels, b, 1)
                i2 = self._raw_label(labels, b, 2)
                self.expect(b, 3, "=")
                S[i1, i2] = self.vector(b, 4, n)
        if unit is None:
            raise ParseError("raw algebra needs a UNIT line", ln.number, ln.tokens[0].column)
        if not idem:
            raise ParseError("raw algebra needs IDEMPOTENT lines", ln.number, ln.tokens[0].column)
        if verts is not None and len(verts) != len(idem):
            raise ParseError("one vertex label per idempotent", ln.number, ln.tokens[0].column)
        return self.validated(
            ln,
            lambda: raw_algebra(self.field, S, unit, np.array(idem), labels, verts, name),
            "associative elementary algebra",
        )

    def _raw_label(self, labels, ln: Line, i: int) -> int:
        t = ln.tokens[i]
        if t.text not in labels:
            raise self.err(t, ln, f"unknown label {t.text!r}")
        return labels.index(t.text)

    def derived_algebra(self, ln: Line) -> Algebra:
        op = self.tok(ln, 3, "construction")
        n_args = {"field": 0, "opposite": 1, "enveloping": 1, "tensor": 2, "product": 2, "morita": 4}
        if op.text == "corner":
            a = self.ref(ln, 4, "algebra")
            e = self.vertex_idempotent(a, ln, 5)
            return self.validated(ln, lambda: corner(a, e)[0], "e is a nonzero idempotent")
        if op.text not in n_args:
            raise self.err(op, ln, f"unknown algebra construction {op.text!r}")
        want = n_args[op.text]
        if len(ln.tokens) != 4 + want:
            raise ParseError(f"{op.text} takes {want} argument(s)", ln.number, op.column)
        if op.text == "field":
            return field_algebra(self.field)
        if op.text == "morita":
            a, b = self.ref(ln, 4, "algebra"), self.ref(ln, 5, "algebra")
            m, n = self.ref(ln, 6, "bimodule"), self.ref(ln, 7, "bimodule")
            return self.validated(ln, lambda: morita_ring(a, b, m, n), "bimodules match the corner algebras")
        args = [self.ref(ln, 4 + i, "algebra") for i in range(want)]
        build = {"opposite": opposite, "enveloping": enveloping, "tensor": tensor_algebra, "product": product_algebra}
        return self.validated(ln, lambda: build[op.text](*args), "algebras over one field")

    def stmt_module(self, st: Statement):
        ln = st.head
        name = self.new_name(ln, 1)
        kw = self.tok(ln, 2, "OVER or '='")
        if kw.text == "OVER":
            a = self.ref(ln, 3, "algebra")
            self.expect(ln, 4, "DIM")
            n = self.integer(ln, 5, "dimension")
            acts = {}
            for b in st.body:
                t = self.tok(b, 1, "label")
                self.label_index(a, t, b)
                self.expect(b, 2, "=")
                acts[t.text] = self.matrix(b, 3, n)
            if n == 0:
                m = Module.zero(a)
            else:
                m = self.validated(ln, lambda: Module.from_label_actions(a, acts, name), "module axioms")
            self.objects[name] = ("module", m)
            return
        if kw.text != "=":
            raise self.err(kw, ln, "expected OVER or '='")
        op = self.tok(ln, 3, "construction")
        if op.text == "regular":
            m = Module.regular(self.ref(ln, 4, "algebra"))
        elif op.text == "simple":
            a = self.ref(ln, 4, "algebra")
            v = self.tok(ln, 5, "vertex")
            if v.text not in a.vertex_labels:
                raise self.err(v, ln, f"{v.text!r} is not a vertex label")
            m = simple_modules(a)[a.vertex_labels.index(v.text)]
        elif op.text == "dual":
            m = dual(self.ref(ln, 4, "module"))
        elif op.text == "sum":
            parts = [self.ref(ln, i, "module") for i in range(4, len(ln.tokens))]
            if not parts:
                raise ParseError("sum needs at least one module", ln.number, op.column)
            m = self.validated(ln, lambda: direct_sum(*parts), "summands over one algebra")
        elif op.text == "syzygy":
            x = self.ref(ln, 4, "module")
            m = syzygy(x, self.integer(ln, 5, "syzygy index"))
        elif op.text == "restrict":
            x = self.ref(ln, 4, "bimodule")
            side = self.tok(ln, 5, "side")
            if side.text not in ("left", "right"):
                raise self.err(side, ln, "side must be left or right")
            m = x.restrict(side.text)
        else:
            raise self.err(op, ln, f"unknown module construction {op.text!r}")
        self.objects[name] = ("module", m)

    def stmt_bimodule(self, st: Statement):
        ln = st.head
        name = self.new_name(ln, 1)
        kw = self.tok(ln, 2, "OVER or '='")
        if kw.text == "OVER":
            b = self.ref(ln, 3, "algebra")
            a = self.ref(ln, 4, "algebra")
            self.expect(ln, 5, "DIM")
            n = self.integer(ln, 6, "dimension")
            f = self.field
            la = np.array([f.eye(n) if _is_unit_label(b, i) else f.zeros((n, n)) for i in range(b.dim)])
            ra = np.array([f.eye(n) if _is_unit_label(a, i) else f.zeros((n, n)) for i in range(a.dim)])
            given = {"LEFT": set(), "RIGHT": set()}
            for line in st.body:
                alg, target = (b, la) if line.keyword == "LEFT" else (a, ra)
                t = self.tok(line, 1, "label")
                idx = self.label_index(alg, t, line)
                self.expect(line, 2, "=")
                target[idx] = self.matrix(line, 3, n)
                given[line.keyword].add(idx)
            for side, alg in (("LEFT", b), ("RIGHT", a)):
                for i, lbl in enumerate(alg.labels):
                    if i in given[side] or _is_unit_label(alg, i):
                        continue
                    if "*" in lbl:
                        continue
                    if n:
                        raise ValidationError("bimodule actions given for every basis label", ln.number,
                                              f"missing {side} {lbl}")
            self._fill_paths(b, la, given["LEFT"])
            self._fill_paths(a, ra, given["RIGHT"], right=True)
            x = self.validated(ln, lambda: Bimodule.from_actions(b, a, la.reshape(b.dim, n, n),
                                                                 ra.reshape(a.dim, n, n)), "bimodule axioms")
            self.objects[name] = ("bimodule", x)
            return
        if kw.text != "=":
            raise self.err(kw, ln, "expected OVER or '='")
        op = self.tok(ln, 3, "construction")
        if op.text == "regular":
            x = Bimodule.regular(self.ref(ln, 4, "algebra"))
        elif op.text == "zero":
            x = Bimodule.zero(self.ref(ln, 4, "algebra"), self.ref(ln, 5, "algebra"))
        elif op.text == "syzygy":
            y = self.ref(ln, 4, "bimodule")
            x = bimodule_syzygy(y, self.integer(ln, 5, "syzygy index"))
        elif op.text == "dual":
            x = hom_into_regular(self.ref(ln, 4, "bimodule"), "left")
        elif op.text == "tensor":
            y, z = self.ref(ln, 4, "bimodule"), self.ref(ln, 5, "bimodule")
            x = self.validated(ln, lambda: bimodule_tensor(y, z), "middle algebras agree")
        else:
            raise self.err(op, ln, f"unknown bimodule construction {op.text!r}")
        self.objects[name] = ("bimodule", x)

    def _fill_paths(self, alg: Algebra, acts: np.ndarray, given: set, right: bool = False):
        f = self.field
        for i, lbl in enumerate(alg.labels):
            if i in given or "*" not in lbl:
                continue
            m = f.eye(acts.shape[1])
            for p in lbl.split("*"):
                j = alg.labels.index(p) if p in alg.labels else None
                if j is None:
                    break
                # right actions compose in the opposite order
                m = f.matmul(acts[j], m) if right else f.matmul(m, acts[j])
            acts[i] = m

    def stmt_hom(self, st: Statement):
        ln = st.head
        name = self.new_name(ln, 1)
        kw = self.tok(ln, 2, "FROM or '='")
        if kw.text == "=":
            self.expect(ln, 3, "identity")
            h = identity_hom(self.ref(ln, 4, "algebra"))
        elif kw.text == "FROM":
            a = self.ref(ln, 3, "algebra")
            self.expect(ln, 4, "TO")
            b = self.ref(ln, 5, "algebra")
            mat = self.field.zeros((b.dim, a.dim))
            seen = set()
            for line in st.body:
                t = self.tok(line, 1, "label")
                i = self.label_index(a, t, line)
                self.expect(line, 2, "=")
                mat[:, i] = self.vector(line, 3, b.dim)
                seen.add(i)
            missing = [a.labels[i] for i in range(a.dim) if i not in seen]
            if missing:
                raise ValidationError("images given for every basis label", ln.number, ", ".join(missing))
            h = self.validated(ln, lambda: AlgebraHom(a, b, mat), "unital algebra homomorphism")
        else:
            raise self.err(kw, ln, "expected FROM or '='")
        self.objects[name] = ("hom", h)

    def stmt_witness(self, st: Statement):
        ln = st.head
        name = self.new_name(ln, 1)
        a, b = self.ref(ln, 2, "algebra"), self.ref(ln, 3, "algebra")
        m, n = self.ref(ln, 4, "bimodule"), self.ref(ln, 5, "bimodule")
        level = self.integer(ln, 6, "level")
        if len(ln.tokens) > 7:
            raise self.err(ln.tokens[7], ln, "unexpected token")
        w = self.validated(ln, lambda: Witness(a, b, m, n, level), "M is a (B, A)- and N an (A, B)-bimodule")
        self.objects[name] = ("witness", w)

    def stmt_task(self, st: Statement):
        ln = st.head
        kind = self.tok(ln, 1, "task kind")
        if kind.text not in TASK_KINDS:
            raise self.err(kind, ln, f"unknown task kind {kind.text!r}")
        args, options, flags = [], {}, []
        i = 2
        toks = ln.tokens
        while i < len(toks):
            t = toks[i]
            if t.text in TASK_OPTIONS:
                v = self.tok(ln, i + 1, f"value for {t.text}")
                if t.text in ("SEED", "CUTOFF", "S", "SDUAL") and not _INT.match(v.text):
                    raise self.err(v, ln, f"{t.text} takes an integer")
                options[t.text] = v.text
                i += 2
            elif t.text in TASK_FLAGS:
                flags.append(t.text)
                i += 1
            else:
                if options or flags:
                    raise self.err(t, ln, "positional arguments must precede options")
                args.append(t.text)
                i += 1
        spec = TaskSpec(len(self.tasks), kind.text, args, options, flags, ln.number)
        self.check_task(spec, ln)
        self.tasks.append(spec)

    def check_task(self, spec: TaskSpec, ln: Line):
        """Name resolution for task arguments (forward references are errors)."""
        sig = TASK_SIGNATURES[spec.kind]
        fixed = [s for s in sig if not s.endswith("*")]
        if len(spec.args) < len(fixed) or (not any(s.endswith("*") for s in sig) and len(spec.args) > len(sig)):
            raise ParseError(f"{spec.kind} expects arguments {' '.join(sig)}", ln.number, ln.tokens[1].column)
        for i, kind in enumerate(sig):
            if kind.endswith("*") or kind in ("int", "word"):
                continue
            self.ref(ln, 2 + i, kind)
        if spec.kind in ("idem-check", "idem-witness", "ideal-check") and len(spec.args) < 2:
            raise ParseError(f"{spec.kind} needs vertex labels", ln.number, ln.tokens[1].column)


def _is_unit_label(alg: Algebra, i: int) -> bool:
    """Basis element i is the unit, so its action defaults to the identity."""
    return alg.field.equal(alg.unit, alg.basis_vector(i))


TASK_SIGNATURES = {
    "check-algebra": ["algebra"],
    "pd": ["module"],
    "syzygy": ["module", "int"],
    "perfect": ["module"],
    "vdim": ["algebra"],
    "gorenstein": ["algebra"],
    "mcm": ["module"],
    "sing-equiv": ["bimodule"],
    "hom-check": ["hom"],
    "idem-check": ["algebra", "vertex*"],
    "ideal-check": ["algebra", "vertex*"],
    "idem-witness": ["algebra", "vertex*"],
    "morita-witness": ["algebra", "algebra", "bimodule", "bimodule"],
    "build-witness": ["bimodule"],
    "verify-witness": ["witness"],
    "corollary-witness": ["algebra", "algebra", "bimodule"],
    "downstream-check": ["witness", "module"],
}


def parse_workspace(text: str, field: Optional[Field] = None) -> Workspace:
    """Parse and validate a workspace; ``field`` overrides any FIELD line."""
    return Parser(field).parse(text)


def serialize(ws: Workspace) -> str:
    out = []
    for st in ws.statements:
        out.extend(st.canonical())
    return "\n".join(out) + "\n"
