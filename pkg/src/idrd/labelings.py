"""Vertex labelings and validity checks for the Roman-domination variants.

Three labeling shapes are supported:

* `DRLabeling` — values in {0,1,2,3} (double Roman).  Valid when every
  0-vertex has two neighbors labeled 2 or one labeled 3, and every 1-vertex
  has a neighbor labeled at least 2.
* `R2Labeling` — values in {0,1,2} (Roman {2}).  Valid when the labels on the
  neighborhood of every 0-vertex sum to at least 2.
* `RainbowLabeling` — values are subsets of {1,2} (2-rainbow).  Valid when
  the union of the neighbor sets of every ∅-vertex is exactly {1,2}.

The independent variants additionally require the positively labeled
(non-empty) vertices to form an independent set.  Validators return a
`ValidationResult`: truthy on success, and on failure carrying the first
violating vertex (smallest index) and a short clause tag.
"""

from dataclasses import dataclass

from .graph import Graph


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    vertex: int | None = None
    clause: str | None = None

    def __bool__(self) -> bool:
        return self.ok


_OK = ValidationResult(True)


def _fail(vertex: int | None, clause: str) -> ValidationResult:
    return ValidationResult(False, vertex, clause)


class DRLabeling:
    """Assignment of {0,1,2,3} to vertices 0..n-1; weight is the value sum."""

    __slots__ = ("values",)
    allowed = (0, 1, 2, 3)

    def __init__(self, values):
        vals = tuple(int(x) for x in values)
        for v, x in enumerate(vals):
            if x not in self.allowed:
                raise ValueError(f"value {x} at vertex {v} not in {self.allowed}")
        self.values = vals

    @property
    def order(self) -> int:
        return len(self.values)

    def weight(self) -> int:
        return sum(self.values)

    def positive_vertices(self) -> frozenset:
        return frozenset(v for v, x in enumerate(self.values) if x > 0)

    def witness_text(self) -> str:
        """One 'v value' line per vertex."""
        return "\n".join(f"{v} {x}" for v, x in enumerate(self.values)) + "\n"

    def __eq__(self, other):
        return type(self) is type(other) and self.values == other.values

    def __hash__(self):
        return hash((type(self).__name__, self.values))

    def __repr__(self):
        return f"{type(self).__name__}({list(self.values)})"


class R2Labeling(DRLabeling):
    """Assignment of {0,1,2} to vertices 0..n-1."""

    __slots__ = ()
    allowed = (0, 1, 2)


class RainbowLabeling:
    """Assignment of subsets of {1,2} to vertices 0..n-1; weight sums set sizes."""

    __slots__ = ("values",)

    def __init__(self, values):
        vals = []
        for v, s in enumerate(values):
            fs = frozenset(int(c) for c in s)
            if not fs <= frozenset((1, 2)):
                raise ValueError(f"label {set(s)} at vertex {v} not a subset of {{1, 2}}")
            vals.append(fs)
        self.values = tuple(vals)

    @property
    def order(self) -> int:
        return len(self.values)

    def weight(self) -> int:
        return sum(len(s) for s in self.values)

    def positive_vertices(self) -> frozenset:
        return frozenset(v for v, s in enumerate(self.values) if s)

    def witness_text(self) -> str:
        """One 'v {..}' line per vertex, set literals with sorted elements."""
        lines = []
        for v, s in enumerate(self.values):
            lines.append(f"{v} {{{','.join(str(c) for c in sorted(s))}}}")
        return "\n".join(lines) + "\n"

    def __eq__(self, other):
        return type(self) is type(other) and self.values == other.values

    def __hash__(self):
        return hash(("RainbowLabeling", self.values))

    def __repr__(self):
        return f"RainbowLabeling({[set(s) for s in self.values]})"


def _sized(g: Graph, f) -> ValidationResult | None:
    if f.order != g.n:
        return _fail(None, "size-mismatch")
    return None


def _independence_failure(g: Graph, positive) -> ValidationResult | None:
    for u, v in g.edges:
        if u in positive and v in positive:
            return _fail(min(u, v), "positive-set-not-independent")
    return None


def is_drdf(g: Graph, f: DRLabeling) -> ValidationResult:
    """Double Roman validity: 0 needs two 2s or a 3; 1 needs a neighbor >= 2."""
    bad = _sized(g, f)
    if bad is not None:
        return bad
    vals = f.values
    for v in range(g.n):
        x = vals[v]
        if x == 0:
            twos = 0
            has3 = False
            for u in g.adjacency(v):
                if vals[u] == 2:
                    twos += 1
                elif vals[u] == 3:
                    has3 = True
            if not (has3 or twos >= 2):
                return _fail(v, "undefended-zero")
        elif x == 1:
            if all(vals[u] < 2 for u in g.adjacency(v)):
                return _fail(v, "undefended-one")
    return _OK


def is_idrdf(g: Graph, f: DRLabeling) -> ValidationResult:
    """is_drdf plus independence of the positive vertices."""
    bad = _sized(g, f)
    if bad is not None:
        return bad
    bad = _independence_failure(g, f.positive_vertices())
    if bad is not None:
        return bad
    return is_drdf(g, f)


def is_r2df(g: Graph, f: R2Labeling) -> ValidationResult:
    """Roman {2} validity: labels on N(v) of every 0-vertex sum to >= 2."""
    bad = _sized(g, f)
    if bad is not None:
        return bad
    vals = f.values
    for v in range(g.n):
        if vals[v] == 0:
            if sum(vals[u] for u in g.adjacency(v)) < 2:
                return _fail(v, "zero-sum-below-two")
    return _OK


def is_ir2df(g: Graph, f: R2Labeling) -> ValidationResult:
    """is_r2df plus independence of the positive vertices."""
    bad = _sized(g, f)
    if bad is not None:
        return bad
    bad = _independence_failure(g, f.positive_vertices())
    if bad is not None:
        return bad
    return is_r2df(g, f)


def is_2rdf(g: Graph, f: RainbowLabeling) -> ValidationResult:
    """2-rainbow validity: neighbor sets of every ∅-vertex union to {1,2}."""
    bad = _sized(g, f)
    if bad is not None:
        return bad
    vals = f.values
    for v in range(g.n):
        if not vals[v]:
            seen = set()
            for u in g.adjacency(v):
                seen |= vals[u]
            if seen != {1, 2}:
                return _fail(v, "rainbow-union-incomplete")
    return _OK


def is_i2rdf(g: Graph, f: RainbowLabeling) -> ValidationResult:
    """is_2rdf plus independence of the non-empty vertices."""
    bad = _sized(g, f)
    if bad is not None:
        return bad
    bad = _independence_failure(g, f.positive_vertices())
    if bad is not None:
        return bad
    return is_2rdf(g, f)
