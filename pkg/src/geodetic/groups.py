"""Concrete group oracles and Cayley-ball construction.

A GroupSpec supplies identity/multiply/inverse over hashable canonical
element forms: residues for cyclic groups, indices for multiplication
tables, component tuples for direct products, and reduced alternating
syllable tuples for plain groups (free products of Z copies and finite
cyclic factors).  Balls are built by breadth-first closure of the identity
under an inverse-closed generating set.
"""

from __future__ import annotations

import math
import os
import random
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .graphs import Graph, build_graph
from .words import Alphabet, Word

Element = Union[int, tuple]

DEFAULT_BALL_BUDGET = 1_000_000
BALL_BUDGET_ENV = "GEODETIC_BALL_BUDGET"


class GroupSpecError(ValueError):
    """The group description is inconsistent or an element does not fit it."""


class GenSetError(ValueError):
    """The generating set violates a required property."""


class BallBudgetError(RuntimeError):
    """Ball construction would exceed the vertex budget."""


class GroupSpec:
    """Base interface; subclasses implement the variant-specific pieces."""

    def identity(self) -> Element:
        raise NotImplementedError

    def multiply(self, a: Element, b: Element) -> Element:
        raise NotImplementedError

    def inverse(self, a: Element) -> Element:
        raise NotImplementedError

    def check_element(self, a: Element) -> None:
        """Raise GroupSpecError unless a is a canonical element of this group."""
        raise NotImplementedError

    def order(self) -> Optional[int]:
        """Group order; None when infinite."""
        raise NotImplementedError

    def element_order(self, a: Element) -> Optional[int]:
        """Order of a; None when infinite."""
        raise NotImplementedError

    def format_element(self, a: Element) -> str:
        raise NotImplementedError

    def parse_element(self, text: str) -> Element:
        """Parse the variant's element expression (see the file format)."""
        raise NotImplementedError

    def power(self, a: Element, n: int) -> Element:
        if n < 0:
            return self.power(self.inverse(a), -n)
        out = self.identity()
        for _ in range(n):
            out = self.multiply(out, a)
        return out


class CyclicSpec(GroupSpec):
    """Cyclic group of order n; n = 0 denotes the infinite cyclic group Z."""

    def __init__(self, n: int):
        if n < 0:
            raise GroupSpecError("cyclic order must be nonnegative (0 means Z)")
        self.n = n

    def __repr__(self):
        return f"CyclicSpec({self.n})"

    def identity(self):
        return 0

    def multiply(self, a, b):
        return (a + b) % self.n if self.n else a + b

    def inverse(self, a):
        return (-a) % self.n if self.n else -a

    def check_element(self, a):
        if not isinstance(a, int) or isinstance(a, bool):
            raise GroupSpecError(f"cyclic element must be an integer, got {a!r}")
        if self.n and not 0 <= a < self.n:
            raise GroupSpecError(f"residue {a} out of range for order {self.n}")

    def order(self):
        return self.n if self.n else None

    def element_order(self, a):
        self.check_element(a)
        if self.n == 0:
            return 1 if a == 0 else None
        return self.n // math.gcd(self.n, a)

    def format_element(self, a):
        if a == 0:
            return "1"
        return "a" if a == 1 else f"a^{a}"

    def parse_element(self, text):
        parts = text.split()
        if len(parts) != 2 or parts[0] != "pow":
            raise GroupSpecError(f"cyclic element expression must be 'pow <k>', got {text!r}")
        k = int(parts[1])
        return k % self.n if self.n else k


class TableSpec(GroupSpec):
    """Finite group given by its multiplication table.

    Identity and inverses are verified exhaustively.  Associativity is
    verified exhaustively up to size 64 and spot-checked on 1000 seeded
    random triples beyond that.
    """

    def __init__(self, table: Sequence[Sequence[int]], rng_seed: int = 0):
        n = len(table)
        if n == 0:
            raise GroupSpecError("empty multiplication table")
        rows = []
        for i, row in enumerate(table):
            row = tuple(row)
            if len(row) != n:
                raise GroupSpecError(f"table row {i} has length {len(row)}, expected {n}")
            for x in row:
                if not 0 <= x < n:
                    raise GroupSpecError(f"table entry {x} out of range")
            rows.append(row)
        self.size = n
        self.table = tuple(rows)
        self.identity_idx = self._find_identity()
        self.inv = self._find_inverses()
        self._check_associativity(rng_seed)

    def _find_identity(self):
        for e in range(self.size):
            if all(self.table[e][j] == j and self.table[j][e] == j for j in range(self.size)):
                return e
        raise GroupSpecError("table has no identity element")

    def _find_inverses(self):
        e = self.identity_idx
        inv = []
        for i in range(self.size):
            for j in range(self.size):
                if self.table[i][j] == e and self.table[j][i] == e:
                    inv.append(j)
                    break
            else:
                raise GroupSpecError(f"element {i} has no inverse")
        return tuple(inv)

    def _check_associativity(self, rng_seed):
        n = self.size
        t = self.table
        if n <= 64:
            for a in range(n):
                for b in range(n):
                    tab = t[a][b]
                    for c in range(n):
                        if t[tab][c] != t[a][t[b][c]]:
                            raise GroupSpecError(f"associativity fails at ({a}, {b}, {c})")
        else:
            rng = random.Random(rng_seed)
            for _ in range(1000):
                a, b, c = (rng.randrange(n) for _ in range(3))
                if t[t[a][b]][c] != t[a][t[b][c]]:
                    raise GroupSpecError(f"associativity fails at ({a}, {b}, {c})")

    def __repr__(self):
        return f"TableSpec(size={self.size})"

    def identity(self):
        return self.identity_idx

    def multiply(self, a, b):
        return self.table[a][b]

    def inverse(self, a):
        return self.inv[a]

    def check_element(self, a):
        if not isinstance(a, int) or isinstance(a, bool) or not 0 <= a < self.size:
            raise GroupSpecError(f"table element must be an index in [0, {self.size}), got {a!r}")

    def order(self):
        return self.size

    def element_order(self, a):
        self.check_element(a)
        x = a
        k = 1
        while x != self.identity_idx:
            x = self.table[x][a]
            k += 1
        return k

    def format_element(self, a):
        return f"g{a}"

    def parse_element(self, text):
        parts = text.split()
        if len(parts) != 2 or parts[0] != "idx":
            raise GroupSpecError(f"table element expression must be 'idx <k>', got {text!r}")
        k = int(parts[1])
        self.check_element(k)
        return k


class ProductSpec(GroupSpec):
    """Direct product; elements are tuples with one component per factor."""

    def __init__(self, factors: Sequence[GroupSpec]):
        if not factors:
            raise GroupSpecError("direct product needs at least one factor")
        self.factors = tuple(factors)

    def __repr__(self):
        return f"ProductSpec({list(self.factors)!r})"

    def identity(self):
        return tuple(f.identity() for f in self.factors)

    def multiply(self, a, b):
        return tuple(f.multiply(x, y) for f, x, y in zip(self.factors, a, b))

    def inverse(self, a):
        return tuple(f.inverse(x) for f, x in zip(self.factors, a))

    def check_element(self, a):
        if not isinstance(a, tuple) or len(a) != len(self.factors):
            raise GroupSpecError(f"product element must be a {len(self.factors)}-tuple, got {a!r}")
        for f, x in zip(self.factors, a):
            f.check_element(x)

    def order(self):
        total = 1
        for f in self.factors:
            o = f.order()
            if o is None:
                return None
            total *= o
        return total

    def element_order(self, a):
        self.check_element(a)
        total = 1
        for f, x in zip(self.factors, a):
            o = f.element_order(x)
            if o is None:
                return None
            total = math.lcm(total, o)
        return total

    def format_element(self, a):
        return "(" + ", ".join(f.format_element(x) for f, x in zip(self.factors, a)) + ")"

    def parse_element(self, text):
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != len(self.factors):
            raise GroupSpecError(
                f"product element expression needs {len(self.factors)} comma-separated parts"
            )
        return tuple(f.parse_element(p) for f, p in zip(self.factors, parts))


_FACTOR_NAMES = "abcdefghijklmnopqrstuvwxyz"


class PlainSpec(GroupSpec):
    """Free product of free_rank copies of Z and finite cyclic factors.

    Elements are reduced alternating syllable tuples ((factor, exponent), ...)
    where consecutive syllables come from different factors, free exponents
    are nonzero integers, and an exponent for a finite factor of order o
    lies in [1, o - 1].
    """

    def __init__(self, free_rank: int, factor_orders: Sequence[int] = ()):
        if free_rank < 0:
            raise GroupSpecError("free rank must be nonnegative")
        orders = tuple(factor_orders)
        for o in orders:
            if o < 2:
                raise GroupSpecError("finite cyclic factors need order at least 2")
        self.free_rank = free_rank
        self.factor_orders = orders
        self.factor_count = free_rank + len(orders)
        if self.factor_count == 0:
            raise GroupSpecError("plain group needs at least one factor")

    def __repr__(self):
        return f"PlainSpec(free_rank={self.free_rank}, factor_orders={list(self.factor_orders)})"

    def factor_order(self, i: int) -> Optional[int]:
        """Order of the i-th free-product factor; None for a Z factor."""
        if not 0 <= i < self.factor_count:
            raise GroupSpecError(f"no factor {i}")
        if i < self.free_rank:
            return None
        return self.factor_orders[i - self.free_rank]

    def factor_name(self, i: int) -> str:
        if i < len(_FACTOR_NAMES):
            return _FACTOR_NAMES[i]
        return f"x{i}"

    def _canonical_exp(self, factor: int, e: int) -> int:
        o = self.factor_order(factor)
        return e % o if o else e

    def identity(self):
        return ()

    def _push(self, out: list, factor: int, e: int) -> None:
        if out and out[-1][0] == factor:
            merged = self._canonical_exp(factor, out[-1][1] + e)
            out.pop()
            if merged:
                out.append((factor, merged))
        else:
            e = self._canonical_exp(factor, e)
            if e:
                out.append((factor, e))

    def multiply(self, a, b):
        out = list(a)
        for factor, e in b:
            self._push(out, factor, e)
        return tuple(out)

    def inverse(self, a):
        return tuple((f, self._canonical_exp(f, -e)) for f, e in reversed(a))

    def check_element(self, a):
        if not isinstance(a, tuple):
            raise GroupSpecError(f"plain element must be a syllable tuple, got {a!r}")
        prev = None
        for syl in a:
            if not (isinstance(syl, tuple) and len(syl) == 2):
                raise GroupSpecError(f"bad syllable {syl!r}")
            f, e = syl
            if not 0 <= f < self.factor_count:
                raise GroupSpecError(f"syllable names unknown factor {f}")
            if f == prev:
                raise GroupSpecError("adjacent syllables from the same factor")
            o = self.factor_order(f)
            if o is None:
                if e == 0:
                    raise GroupSpecError("zero exponent in a free syllable")
            elif not 1 <= e < o:
                raise GroupSpecError(f"exponent {e} out of range for factor of order {o}")
            prev = f

    def order(self):
        if self.free_rank == 0 and len(self.factor_orders) == 0:
            return 1
        if self.free_rank == 0 and len(self.factor_orders) == 1:
            return self.factor_orders[0]
        return None

    def element_order(self, a):
        self.check_element(a)
        # Cyclically reduce; an element is conjugate into a single factor
        # exactly when the reduction ends with at most one syllable.
        syls = list(a)
        while len(syls) >= 2 and syls[0][0] == syls[-1][0]:
            f = syls[0][0]
            merged = self._canonical_exp(f, syls[-1][1] + syls[0][1])
            syls = syls[1:-1]
            if merged:
                syls.insert(0, (f, merged))
        if not syls:
            return 1
        if len(syls) > 1:
            return None
        f, e = syls[0]
        o = self.factor_order(f)
        if o is None:
            return None
        return o // math.gcd(o, e)

    def format_element(self, a):
        if not a:
            return "1"
        parts = []
        for f, e in a:
            name = self.factor_name(f)
            parts.append(name if e == 1 else f"{name}^{e}")
        return " ".join(parts)

    def parse_element(self, text):
        parts = text.split()
        if not parts or parts[0] != "word":
            raise GroupSpecError(
                f"plain element expression must be 'word <syllable>...', got {text!r}"
            )
        name_to_factor = {self.factor_name(i): i for i in range(self.factor_count)}
        out: list = []
        for token in parts[1:]:
            name, _, exp = token.partition("^")
            if name not in name_to_factor:
                raise GroupSpecError(f"unknown factor letter {name!r}")
            e = int(exp) if exp else 1
            self._push(out, name_to_factor[name], e)
        return tuple(out)


@dataclass(frozen=True)
class GenSet:
    """Labelled inverse-closed generating set without the identity.

    inverse_label pairs each label with the label of its inverse element
    (a label maps to itself for an involution).
    """

    labels: tuple[str, ...]
    elements: tuple[Element, ...]
    inverse_label: dict[str, str]

    def __len__(self):
        return len(self.labels)

    def items(self):
        return zip(self.labels, self.elements)

    def element(self, label: str) -> Element:
        try:
            return self.elements[self.labels.index(label)]
        except ValueError:
            raise GenSetError(f"unknown generator label {label!r}")

    def alphabet(self) -> Alphabet:
        return Alphabet(frozenset(self.labels), dict(self.inverse_label))


def validate_genset(spec: GroupSpec, pairs: Sequence[tuple[str, Element]]) -> GenSet:
    """Check labels unique, elements distinct and non-identity, set inverse-closed."""
    if not pairs:
        raise GenSetError("generating set is empty")
    labels = [label for label, _ in pairs]
    if len(set(labels)) != len(labels):
        raise GenSetError("duplicate generator labels")
    elements = []
    for label, elem in pairs:
        spec.check_element(elem)
        if elem == spec.identity():
            raise GenSetError(f"generator {label!r} is the identity")
        elements.append(elem)
    if len(set(elements)) != len(elements):
        raise GenSetError("two labels name the same element")
    by_element = {elem: label for label, elem in pairs}
    inverse_label = {}
    for label, elem in pairs:
        inv = spec.inverse(elem)
        partner = by_element.get(inv)
        if partner is None:
            raise GenSetError(f"generating set is not inverse-closed at {label!r}")
        inverse_label[label] = partner
    return GenSet(tuple(labels), tuple(elements), inverse_label)


@dataclass
class CayleyBall:
    """The radius-R ball around the identity in a Cayley graph.

    Vertex 0 is the identity; elements[v] is the group element at vertex v
    and norms[v] its distance from the identity.  The graph is the subgraph
    induced on the ball, so distances between two vertices u, v are exact
    whenever norms[u] + norms[v] <= radius (every group geodesic between
    such a pair stays inside the ball); complete balls, where the whole
    group was reached, are exact everywhere.
    """

    spec: GroupSpec
    genset: GenSet
    radius: int
    graph: Graph
    elements: list[Element]
    index: dict[Element, int]
    norms: list[int]
    complete: bool

    @property
    def vertex_count(self) -> int:
        return len(self.elements)

    def vertex_of(self, g: Element) -> int:
        v = self.index.get(g)
        if v is None:
            raise ValueError(f"element {self.spec.format_element(g)} is outside the ball")
        return v

    def element_of(self, v: int) -> Element:
        return self.elements[v]

    def is_trusted_pair(self, u: int, v: int) -> bool:
        """Whether ball distances and geodesics between u and v match the group's."""
        return self.complete or self.norms[u] + self.norms[v] <= self.radius

    def reached_fraction(self) -> Optional[float]:
        order = self.spec.order()
        if order is None:
            return None
        return len(self.elements) / order

    def word_of_path(self, vertices: Sequence[int]) -> Word:
        """Generator labels read along a path of ball vertices."""
        labels = self.graph.edge_labels or {}
        out = []
        for u, v in zip(vertices, vertices[1:]):
            label = labels.get((u, v))
            if label is None:
                raise ValueError(f"no edge between ball vertices {u} and {v}")
            out.append(label)
        return tuple(out)


def cayley_ball(
    spec: GroupSpec, genset: GenSet, radius: int, budget: Optional[int] = None
) -> CayleyBall:
    """Breadth-first closure of the identity under the generating set.

    budget caps the number of vertices (default 10^6, overridable via the
    GEODETIC_BALL_BUDGET environment variable); exceeding it raises
    BallBudgetError before memory runs away.
    """
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    if budget is None:
        budget = int(os.environ.get(BALL_BUDGET_ENV, DEFAULT_BALL_BUDGET))
    identity = spec.identity()
    elements: list[Element] = [identity]
    index: dict[Element, int] = {identity: 0}
    norms = [0]
    complete = False
    frontier = [0]
    for layer in range(1, radius + 1):
        new: list[int] = []
        for u in frontier:
            gu = elements[u]
            for label, s in genset.items():
                h = spec.multiply(gu, s)
                if h not in index:
                    if len(elements) >= budget:
                        raise BallBudgetError(
                            f"ball exceeds the {budget}-vertex budget at radius {layer}"
                        )
                    index[h] = len(elements)
                    elements.append(h)
                    norms.append(layer)
                    new.append(index[h])
        if not new:
            complete = True
            break
        frontier = new
    if not complete and spec.order() == len(elements):
        complete = True
    edges = []
    edge_labels: dict[tuple[int, int], str] = {}
    for u, gu in enumerate(elements):
        for label, s in genset.items():
            v = index.get(spec.multiply(gu, s))
            if v is None:
                continue
            edge_labels[(u, v)] = label
            if u < v:
                edges.append((u, v))
    graph = build_graph(
        edges,
        len(elements),
        vertex_labels=[spec.format_element(e) for e in elements],
        edge_labels=edge_labels,
    )
    return CayleyBall(spec, genset, radius, graph, elements, index, norms, complete)


def element_norm(ball: CayleyBall, g: Element) -> int:
    """Distance from the identity to g; g must lie inside the ball."""
    return ball.norms[ball.vertex_of(g)]


def word_to_element(spec: GroupSpec, genset: GenSet, w: Word) -> Element:
    """Left-to-right product of the generators named by the word."""
    lookup = dict(genset.items())
    out = spec.identity()
    for letter in w:
        s = lookup.get(letter)
        if s is None:
            raise GenSetError(f"letter {letter!r} is not a generator label")
        out = spec.multiply(out, s)
    return out


@dataclass
class GroupFile:
    """Parsed group description file."""

    spec: GroupSpec
    genset: GenSet
    default_radius: Optional[int]


def parse_group_file(text: str) -> GroupFile:
    """Parse the line-oriented group format.

    ``group cyclic <n>`` (0 means Z), ``group table <n>`` followed by n rows,
    ``group product cyclic <n> cyclic <m> ...``, or
    ``group plain Z=<rank> factors=<o1>,<o2>``.  Generators come one per
    ``gen <label> <element expression>`` line, and an optional
    ``ball R=<r>`` line records a default radius.
    """
    spec: Optional[GroupSpec] = None
    gen_pairs: list[tuple[str, Element]] = []
    default_radius: Optional[int] = None
    lines = text.splitlines()
    i = 0
    while i < len(lines):
        lineno = i + 1
        line = lines[i].split("#", 1)[0].strip()
        i += 1
        if not line:
            continue
        parts = line.split()
        if parts[0] == "group":
            if spec is not None:
                raise GroupSpecError(f"line {lineno}: duplicate group line")
            if len(parts) < 2:
                raise GroupSpecError(f"line {lineno}: missing group kind")
            kind = parts[1]
            if kind == "cyclic":
                if len(parts) != 3:
                    raise GroupSpecError(f"line {lineno}: expected 'group cyclic <n>'")
                spec = CyclicSpec(int(parts[2]))
            elif kind == "table":
                if len(parts) != 3:
                    raise GroupSpecError(f"line {lineno}: expected 'group table <n>'")
                n = int(parts[2])
                rows = []
                while len(rows) < n and i < len(lines):
                    row_line = lines[i].split("#", 1)[0].strip()
                    i += 1
                    if not row_line:
                        continue
                    rows.append([int(x) for x in row_line.split()])
                if len(rows) != n:
                    raise GroupSpecError(f"line {lineno}: table needs {n} rows")
                spec = TableSpec(rows)
            elif kind == "product":
                rest = parts[2:]
                if len(rest) % 2 != 0 or not rest:
                    raise GroupSpecError(
                        f"line {lineno}: product factors come as 'cyclic <n>' pairs"
                    )
                factors = []
                for j in range(0, len(rest), 2):
                    if rest[j] != "cyclic":
                        raise GroupSpecError(
                            f"line {lineno}: only cyclic factors are supported in files"
                        )
                    factors.append(CyclicSpec(int(rest[j + 1])))
                spec = ProductSpec(factors)
            elif kind == "plain":
                rank = 0
                orders: list[int] = []
                for token in parts[2:]:
                    if token.startswith("Z="):
                        rank = int(token[2:])
                    elif token.startswith("factors="):
                        body = token[len("factors=") :]
                        orders = [int(x) for x in body.split(",") if x]
                    else:
                        raise GroupSpecError(f"line {lineno}: unknown plain option {token!r}")
                spec = PlainSpec(rank, orders)
            else:
                raise GroupSpecError(f"line {lineno}: unknown group kind {kind!r}")
        elif parts[0] == "gen":
            if spec is None:
                raise GroupSpecError(f"line {lineno}: gen before group line")
            if len(parts) < 3:
                raise GroupSpecError(f"line {lineno}: expected 'gen <label> <expression>'")
            label = parts[1]
            expr = line.split(None, 2)[2]
            gen_pairs.append((label, spec.parse_element(expr)))
        elif parts[0] == "ball":
            if len(parts) != 2 or not parts[1].startswith("R="):
                raise GroupSpecError(f"line {lineno}: expected 'ball R=<r>'")
            default_radius = int(parts[1][2:])
        else:
            raise GroupSpecError(f"line {lineno}: unknown directive {parts[0]!r}")
    if spec is None:
        raise GroupSpecError("missing 'group' line")
    genset = validate_genset(spec, gen_pairs)
    return GroupFile(spec, genset, default_radius)
