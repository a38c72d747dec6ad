"""Simple-graph core: immutable graphs, edge-list I/O, seeded generators.

Vertices are always 0..n-1.  The on-disk edge-list format is line oriented:
lines starting with '#' and blank lines are ignored, the first data line is
"n m", and exactly m data lines "u v" follow.  `serialize_edge_list` emits a
canonical form (edges sorted, u < v, trailing newline) so that
parse(serialize(g)) == g and byte-identical output is reproducible.
"""

from collections import deque

from .rng import SplitMix64


class EdgeListParseError(ValueError):
    """Raised when edge-list text does not conform to the format."""


class Graph:
    """Immutable undirected simple graph on vertices 0..n-1.

    Construct through :func:`build_graph` (or the parser / generators); the
    constructor validates endpoints, rejects self-loops, and deduplicates.
    """

    __slots__ = ("n", "edges", "_adj", "_masks")

    def __init__(self, n: int, edges):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        canon = set()
        for e in edges:
            try:
                u, v = e
            except (TypeError, ValueError):
                raise ValueError(f"edge {e!r} is not a pair")
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            canon.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges = tuple(sorted(canon))
        adj = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self._adj = tuple(tuple(sorted(nb)) for nb in adj)
        masks = [0] * n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self._masks = tuple(masks)

    # -- basic queries ----------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset:
        self._check_vertex(v)
        return frozenset(self._adj[v])

    def adjacency(self, v: int) -> tuple:
        """Neighbors of v as a sorted tuple (deterministic iteration order)."""
        self._check_vertex(v)
        return self._adj[v]

    def neighbor_mask(self, v: int) -> int:
        self._check_vertex(v)
        return self._masks[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def max_degree(self) -> int:
        if self.n == 0:
            raise ValueError("degree of an empty graph is undefined")
        return max(len(nb) for nb in self._adj)

    def min_degree(self) -> int:
        if self.n == 0:
            raise ValueError("degree of an empty graph is undefined")
        return min(len(nb) for nb in self._adj)

    def has_isolated_vertex(self) -> bool:
        return self.n > 0 and self.min_degree() == 0

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    def _check_subset(self, s) -> frozenset:
        s = frozenset(s)
        for v in s:
            self._check_vertex(v)
        return s

    # -- set predicates ---------------------------------------------------

    def is_independent(self, s) -> bool:
        """True iff no edge joins two members of s."""
        s = self._check_subset(s)
        mask = 0
        for v in s:
            mask |= 1 << v
        return all(not (self._masks[v] & mask) for v in s)

    def is_dominating(self, s) -> bool:
        """True iff every vertex outside s has a neighbor in s."""
        s = self._check_subset(s)
        mask = 0
        for v in s:
            mask |= 1 << v
        return all(v in s or (self._masks[v] & mask) for v in range(self.n))

    # -- global predicates ------------------------------------------------

    def is_connected(self) -> bool:
        if self.n == 0:
            raise ValueError("connectivity of an empty graph is undefined")
        seen = [False] * self.n
        seen[0] = True
        queue = deque([0])
        count = 1
        while queue:
            v = queue.popleft()
            for u in self._adj[v]:
                if not seen[u]:
                    seen[u] = True
                    count += 1
                    queue.append(u)
        return count == self.n

    def is_tree(self) -> bool:
        if self.n == 0:
            raise ValueError("tree test of an empty graph is undefined")
        return self.m == self.n - 1 and self.is_connected()

    # -- value semantics ----------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges) -> Graph:
    """Validate and canonicalize an order/edge-list pair into a Graph."""
    return Graph(n, edges)


def parse_edge_list(text: str) -> Graph:
    """Parse the "n m" + m x "u v" edge-list format (see module docstring)."""
    data_lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        data_lines.append(line)
    if not data_lines:
        raise EdgeListParseError("missing header line 'n m'")
    header = data_lines[0].split()
    if len(header) != 2:
        raise EdgeListParseError(f"malformed header {data_lines[0]!r}, expected 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise EdgeListParseError(f"non-integer header {data_lines[0]!r}")
    if n < 0 or m < 0:
        raise EdgeListParseError("header counts must be non-negative")
    body = data_lines[1:]
    if len(body) != m:
        raise EdgeListParseError(f"expected {m} edge lines, found {len(body)}")
    edges = []
    for line in body:
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListParseError(f"malformed edge line {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(f"non-integer edge line {line!r}")
        if u == v:
            raise EdgeListParseError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListParseError(f"edge ({u}, {v}) out of range for n={n}")
        edges.append((u, v))
    return Graph(n, edges)


def serialize_edge_list(g: Graph) -> str:
    """Canonical edge-list text for g (sorted edges, u < v, trailing newline)."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdős–Rényi G(n, p), deterministic for a given seed.

    A SplitMix64 stream seeded with `seed` is consumed pair by pair in
    ascending (i, j) order, i < j; the pair becomes an edge iff unit() < p.
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    if not (0.0 <= p <= 1.0):
        raise ValueError(f"edge probability {p} outside [0, 1]")
    rng = SplitMix64(seed)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.unit() < p:
                edges.append((i, j))
    return Graph(n, edges)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree on n vertices via a Prüfer sequence.

    The sequence of length n-2 is drawn from SplitMix64(seed) with
    `below(n)`; decoding attaches each sequence element to the smallest
    remaining leaf, then joins the last two leaves.
    """
    if n < 1:
        raise ValueError("a tree needs at least one vertex")
    if n == 1:
        return Graph(1, [])
    if n == 2:
        return Graph(2, [(0, 1)])
    rng = SplitMix64(seed)
    prufer = [rng.below(n) for _ in range(n - 2)]
    return prufer_decode(n, prufer)


def prufer_decode(n: int, prufer) -> Graph:
    """Tree on n vertices encoded by a Prüfer sequence of length n-2."""
    prufer = list(prufer)
    if n < 2 or len(prufer) != n - 2:
        raise ValueError("sequence length must be n-2 with n >= 2")
    if any(not (0 <= x < n) for x in prufer):
        raise ValueError("sequence entries out of range")
    degree = [1] * n
    for x in prufer:
        degree[x] += 1
    edges = []
    # `ptr` sweeps for the smallest leaf; `leaf` may drop below ptr when a
    # removal re-exposes an earlier vertex.
    ptr = 0
    while degree[ptr] != 1:
        ptr += 1
    leaf = ptr
    for x in prufer:
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1 and x < ptr:
            leaf = x
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    # vertex n-1 is never consumed inside the loop, so it is the final partner
    edges.append((leaf, n - 1))
    return Graph(n, edges)
