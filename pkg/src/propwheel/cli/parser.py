"""A small expression language for morphisms of the wheeled PROP.

    expr   := chain (('+' | '-') chain)*
    chain  := term ('.' term)*
    term   := rational? factor ('*' factor)*
    factor := 'mu(' int ')' | 'id(' int ')' | 'w(' int ')'
            | 'xi(' int ',' int ',' expr ')'
            | 'sin[' perm ']' factor | 'sout[' perm ']' factor
            | '(' expr ')'

'*' is the horizontal product and '.' vertical composition, read right to
left: ``g . f`` feeds the outputs of f into the inputs of g.  '*' binds
tighter than '.', which binds tighter than '+' and '-'.  Permutations
are written in cycle notation, ``(1 2)(3 4)`` or ``()``; their size is the
number of inputs (sin) or outputs (sout) of the operand.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .. import wheeled_prop as wp
from ..diagrams import Element, WheeledDiagram
from ..koszul import Permutation


class ExprSyntaxError(ValueError):
    def __init__(self, msg, line, col):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line, self.col = line, col


class ArityInferenceError(ValueError):
    def __init__(self, msg, subterm, line=None, col=None):
        where = f"line {line}, column {col}: " if line is not None else ""
        super().__init__(f"{where}{msg} in subterm {subterm}")
        self.subterm = subterm
        self.line, self.col = line, col


# -- AST ---------------------------------------------------------------------

class Node:
    q: int
    l: int

    @property
    def biarity(self):
        return (self.q, self.l)

    def _fail(self, msg):
        line, col = self.pos if self.pos else (None, None)
        raise ArityInferenceError(msg, to_text(self), line, col)


@dataclass(frozen=True)
class Generator(Node):
    n: int
    pos: tuple | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.n < 1:
            self._fail("the corolla mu(n) needs at least one input")

    q = property(lambda self: self.n)
    l = property(lambda self: 1)


@dataclass(frozen=True)
class Id(Node):
    n: int
    pos: tuple | None = field(default=None, compare=False, repr=False)

    q = property(lambda self: self.n)
    l = property(lambda self: self.n)


@dataclass(frozen=True)
class Wheel(Node):
    n: int
    pos: tuple | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.n < 1:
            self._fail("a wheel needs at least one input")

    q = property(lambda self: self.n)
    l = property(lambda self: 0)


@dataclass(frozen=True)
class Tensor(Node):
    left: Node
    right: Node
    pos: tuple | None = field(default=None, compare=False, repr=False)

    q = property(lambda self: self.left.q + self.right.q)
    l = property(lambda self: self.left.l + self.right.l)


@dataclass(frozen=True)
class Compose(Node):
    upper: Node
    lower: Node
    pos: tuple | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.upper.q != self.lower.l:
            self._fail(f"arity mismatch: inner arities {self.lower.l} (outputs below) "
                       f"vs {self.upper.q} (inputs above)")

    q = property(lambda self: self.lower.q)
    l = property(lambda self: self.upper.l)


@dataclass(frozen=True)
class Contract(Node):
    i: int
    j: int
    expr: Node
    pos: tuple | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if not (1 <= self.i <= self.expr.q and 1 <= self.j <= self.expr.l):
            self._fail(f"contraction of input {self.i} with output {self.j} is out of range "
                       f"for arity ({self.expr.q},{self.expr.l})")

    q = property(lambda self: self.expr.q - 1)
    l = property(lambda self: self.expr.l - 1)


@dataclass(frozen=True)
class ActIn(Node):
    perm: Permutation
    expr: Node
    pos: tuple | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if len(self.perm) != self.expr.q:
            self._fail(f"permutation of {len(self.perm)} inputs on arity ({self.expr.q},{self.expr.l})")

    q = property(lambda self: self.expr.q)
    l = property(lambda self: self.expr.l)


@dataclass(frozen=True)
class ActOut(Node):
    perm: Permutation
    expr: Node
    pos: tuple | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if len(self.perm) != self.expr.l:
            self._fail(f"permutation of {len(self.perm)} outputs on arity ({self.expr.q},{self.expr.l})")

    q = property(lambda self: self.expr.q)
    l = property(lambda self: self.expr.l)


@dataclass(frozen=True)
class Scale(Node):
    coeff: Fraction
    expr: Node
    pos: tuple | None = field(default=None, compare=False, repr=False)

    q = property(lambda self: self.expr.q)
    l = property(lambda self: self.expr.l)


@dataclass(frozen=True)
class Sum(Node):
    exprs: tuple
    pos: tuple | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if len(self.exprs) < 2:
            raise ValueError("a sum needs at least two terms")
        b = self.exprs[0].biarity
        for e in self.exprs[1:]:
            if e.biarity != b:
                self._fail(f"cannot add arity {e.biarity} to arity {b}")

    q = property(lambda self: self.exprs[0].q)
    l = property(lambda self: self.exprs[0].l)


# -- tokenizer and parser ----------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>sout|sin|mu|id|xi|w)|(?P<sym>[()\[\],.*+/-]))")


def _tokenize(text: str):
    toks, pos = [], 0
    while True:
        m = _TOKEN.match(text, pos)
        if not m:
            rest = text[pos:]
            if rest.strip():
                off = pos + len(rest) - len(rest.lstrip())
                raise ExprSyntaxError(f"unexpected character {text[off]!r}", *_line_col(text, off))
            toks.append(("end", None, len(text)))
            return toks
        kind = m.lastgroup
        toks.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()


def _line_col(text, off):
    line = text.count("\n", 0, off) + 1
    col = off - (text.rfind("\n", 0, off) + 1) + 1
    return line, col


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.k = 0

    def peek(self, value=None):
        kind, v, _ = self.toks[self.k]
        if value is None:
            return kind, v
        return v == value

    def where(self):
        return _line_col(self.text, self.toks[self.k][2])

    def fail(self, msg):
        raise ExprSyntaxError(msg, *self.where())

    def take(self, value=None, kind=None):
        k, v, _ = self.toks[self.k]
        if (value is not None and v != value) or (kind is not None and k != kind):
            want = repr(value) if value is not None else kind
            got = "end of input" if k == "end" else repr(v)
            self.fail(f"expected {want}, found {got}")
        self.k += 1
        return v

    def integer(self):
        return int(self.take(kind="int"))

    def expr(self):
        start = self.where()
        terms = []
        negate = False
        if self.peek("-"):
            self.take("-")
            negate = True
        while True:
            terms.append(self.chain(negate))
            if self.peek("+"):
                self.take("+")
                negate = False
            elif self.peek("-"):
                self.take("-")
                negate = True
            else:
                break
        if len(terms) == 1:
            return terms[0]
        return Sum(tuple(terms), pos=start)

    def chain(self, negate=False):
        start = self.where()
        node = self.term(negate)
        while self.peek("."):
            self.take(".")
            node = Compose(node, self.term(), pos=start)
        return node

    def term(self, negate=False):
        start = self.where()
        coeff = None
        if self.peek()[0] == "int":
            num = self.integer()
            den = 1
            if self.peek("/"):
                self.take("/")
                den = self.integer()
                if den == 0:
                    self.fail("zero denominator")
            coeff = Fraction(num, den)
        node = self.factor()
        while self.peek("*"):
            self.take("*")
            node = Tensor(node, self.factor(), pos=start)
        if coeff is not None:
            return Scale(-coeff if negate else coeff, node, pos=start)
        if negate:
            return Scale(Fraction(-1), node, pos=start)
        return node

    def perm(self):
        cycles = []
        self.take("[")
        while self.peek("("):
            self.take("(")
            cyc = []
            while self.peek()[0] == "int":
                cyc.append(self.integer())
            self.take(")")
            if cyc:
                cycles.append(cyc)
        self.take("]")
        return cycles

    def factor(self):
        start = self.where()
        kind, v = self.peek()
        if kind == "name":
            self.take()
            if v in ("mu", "id", "w"):
                self.take("(")
                n = self.integer()
                self.take(")")
                return {"mu": Generator, "id": Id, "w": Wheel}[v](n, pos=start)
            if v == "xi":
                self.take("(")
                i = self.integer()
                self.take(",")
                j = self.integer()
                self.take(",")
                e = self.expr()
                self.take(")")
                return Contract(i, j, e, pos=start)
            cycles = self.perm()
            e = self.factor()
            n = e.q if v == "sin" else e.l
            try:
                p = Permutation.from_cycles(n, cycles)
            except ValueError:
                shown = "".join("(" + " ".join(map(str, c)) + ")" for c in cycles) or "()"
                side = "inputs" if v == "sin" else "outputs"
                raise ArityInferenceError(f"permutation {shown} does not act on {n} {side}",
                                          to_text(e), *start) from None
            return (ActIn if v == "sin" else ActOut)(p, e, pos=start)
        if v == "(":
            self.take("(")
            node = self.expr()
            self.take(")")
            return node
        if kind == "end":
            self.fail("unexpected end of input")
        self.fail(f"unexpected {v!r}")


def parse(text: str) -> Node:
    p = _Parser(text)
    node = p.expr()
    if p.peek()[0] != "end":
        p.fail(f"unexpected {p.peek()[1]!r} after expression")
    return node


# -- printing ----------------------------------------------------------------

_FACTORS = (Generator, Id, Wheel, Contract, ActIn, ActOut, Compose)


def _factor_text(n: Node) -> str:
    s = to_text(n)
    return s if isinstance(n, _FACTORS) else f"({s})"


def _term_text(n: Node) -> str:
    """Text valid as a term (no leading sign)."""
    if isinstance(n, Tensor):
        left = _term_text(n.left) if isinstance(n.left, Tensor) else _factor_text(n.left)
        return f"{left} * {_factor_text(n.right)}"
    return _factor_text(n)


def _operand_text(n: Node) -> str:
    """Text for an operand of '.', which must be a term without sign or scalar."""
    return _term_text(n) if isinstance(n, Tensor) else _factor_text(n)


def _signed_term(n: Node) -> tuple[bool, str]:
    """(negative, text) for a summand."""
    if isinstance(n, Scale):
        c = n.coeff
        body = _term_text(n.expr)
        if c < 0:
            return True, body if c == -1 else f"{-c} {body}"
        return False, f"{c} {body}"
    return False, _term_text(n)


def to_text(n: Node) -> str:
    if isinstance(n, Generator):
        return f"mu({n.n})"
    if isinstance(n, Id):
        return f"id({n.n})"
    if isinstance(n, Wheel):
        return f"w({n.n})"
    if isinstance(n, Contract):
        return f"xi({n.i},{n.j}, {to_text(n.expr)})"
    if isinstance(n, ActIn):
        return f"sin[{n.perm.cycle_str()}] {_factor_text(n.expr)}"
    if isinstance(n, ActOut):
        return f"sout[{n.perm.cycle_str()}] {_factor_text(n.expr)}"
    if isinstance(n, Compose):
        return f"({_operand_text(n.upper)} . {_operand_text(n.lower)})"
    if isinstance(n, Tensor):
        return _term_text(n)
    if isinstance(n, Scale):
        neg, body = _signed_term(n)
        return f"-{body}" if neg else body
    if isinstance(n, Sum):
        out = []
        for k, t in enumerate(n.exprs):
            if isinstance(t, Sum):
                neg, body = False, f"({to_text(t)})"
            else:
                neg, body = _signed_term(t)
            if k == 0:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f" - {body}" if neg else f" + {body}")
        return "".join(out)
    raise TypeError(f"not an expression node: {n!r}")


# -- evaluation --------------------------------------------------------------

def evaluate(n: Node) -> Element:
    if isinstance(n, Generator):
        return wp.mu(n.n)
    if isinstance(n, Id):
        return wp.identity(n.n)
    if isinstance(n, Wheel):
        return wp.wheel(n.n)
    if isinstance(n, Tensor):
        return wp.horizontal(evaluate(n.left), evaluate(n.right))
    if isinstance(n, Compose):
        return wp.vertical(evaluate(n.upper), evaluate(n.lower))
    if isinstance(n, Contract):
        return wp.contract(n.i, n.j, evaluate(n.expr))
    if isinstance(n, ActIn):
        return wp.act_inputs(n.perm, evaluate(n.expr))
    if isinstance(n, ActOut):
        return wp.act_outputs(n.perm, evaluate(n.expr))
    if isinstance(n, Scale):
        return evaluate(n.expr) * n.coeff
    if isinstance(n, Sum):
        out = evaluate(n.exprs[0])
        for t in n.exprs[1:]:
            out = out + evaluate(t)
        return out
    raise TypeError(f"not an expression node: {n!r}")


def eval_text(text: str) -> Element:
    return evaluate(parse(text))


# -- elements as expressions -------------------------------------------------

def diagram_expr(d: WheeledDiagram) -> tuple[Node, Fraction]:
    """An expression for the diagram and the coefficient of ``d`` in its value."""
    blocks = [Generator(len(f)) for f in d.fibers] + [Wheel(len(w)) for w in d.wheels]
    if blocks:
        node = blocks[0]
        for b in blocks[1:]:
            node = Tensor(node, b)
    else:
        node = Id(0)
    order = [a for b in list(d.fibers) + list(d.wheels) for a in b]
    if order != sorted(order):
        node = ActIn(Permutation(order).inverse(), node)
    value = evaluate(node)
    coeff = dict(value.items()).get(d)
    if coeff is None or len(value.terms) != 1:
        raise AssertionError(f"expression for {d} does not evaluate to a single diagram")
    return node, coeff


def element_expr(e: Element) -> Node:
    """An expression that evaluates to ``e``."""
    terms = []
    for d, c in e.items():
        node, c0 = diagram_expr(d)
        k = c / c0
        terms.append(node if k == 1 else Scale(k, node))
    if not terms:
        if e.q < e.l:
            raise ValueError(f"no expression has arity ({e.q},{e.l})")
        node = Id(e.l)
        for _ in range(e.q - e.l):
            node = Tensor(node, Wheel(1))
        return Scale(Fraction(0), node)
    return terms[0] if len(terms) == 1 else Sum(tuple(terms))


def element_text(e: Element) -> str:
    return to_text(element_expr(e))


# -- random expressions ------------------------------------------------------

def random_expr(rng, depth: int = 3, max_q: int = 5) -> Node:
    """A random well-formed expression with at most ``max_q`` inputs."""
    if depth <= 0 or rng.random() < 0.25:
        kind = rng.choice(["mu", "id", "w"])
        if kind == "mu":
            return Generator(rng.randint(1, min(3, max_q)))
        if kind == "id":
            return Id(rng.randint(0, min(2, max_q)))
        return Wheel(rng.randint(1, min(2, max_q)))
    op = rng.choice(["tensor", "compose", "contract", "sin", "sout", "scale", "sum"])
    if op == "tensor" and max_q >= 2:
        a = random_expr(rng, depth - 1, max_q - 1)
        b = random_expr(rng, depth - 1, max(max_q - a.q, 0))
        return Tensor(a, b)
    if op == "compose":
        lower = random_expr(rng, depth - 1, max_q)
        return Compose(_random_upper(rng, lower.l), lower)
    if op == "contract":
        e = random_expr(rng, depth - 1, max_q)
        if e.q and e.l:
            return Contract(rng.randint(1, e.q), rng.randint(1, e.l), e)
        return e
    if op in ("sin", "sout"):
        e = random_expr(rng, depth - 1, max_q)
        n = e.q if op == "sin" else e.l
        images = list(range(1, n + 1))
        rng.shuffle(images)
        return (ActIn if op == "sin" else ActOut)(Permutation(images), e)
    if op == "scale":
        c = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        return Scale(c, random_expr(rng, depth - 1, max_q))
    e = random_expr(rng, depth - 1, max_q)
    images = list(range(1, e.q + 1))
    rng.shuffle(images)
    other = ActIn(Permutation(images), e)
    if rng.random() < 0.5:
        other = Scale(Fraction(rng.randint(-3, 3)), other)
    return Sum((e, other))


def _random_upper(rng, n: int) -> Node:
    """A tensor of corollas and identities with n inputs."""
    if n == 0:
        return Id(0)
    parts = []
    left = n
    while left:
        k = rng.randint(1, min(left, 3))
        parts.append(Generator(k) if rng.random() < 0.6 else Id(k))
        left -= k
    node = parts[0]
    for p in parts[1:]:
        node = Tensor(node, p)
    return node
