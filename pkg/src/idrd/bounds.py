"""Inequality and identity records over the computed invariants, plus a
deterministic fuzzer that samples random graphs and checks every record.

Each record is named (B1-lower .. B12) and carries its inequality as an
anchor string written in invariant names.  Records inapplicable to the
input (disconnected for the connected-only ones, isolated vertices for the
matching-based ones, non-trees for the tree-only ones) are emitted with a
skip marker instead of being dropped, so reports always have one row per
known bound.  `tight` is reported only for "<=" rows, as lhs == rhs.
"""

from dataclasses import dataclass, field

from .graph import Graph, random_graph, random_tree, serialize_edge_list
from .rng import SplitMix64
from .solvers import (
    _resolve_limit,
    i2rdn,
    idn,
    idrdn,
    ir2dn,
    max_matching,
    min_edge_cover,
    packing_number,
)

BOUND_NAMES = (
    "B1-lower",
    "B1-upper",
    "B2",
    "B3",
    "B4",
    "B5",
    "B6-lower",
    "B6-upper",
    "B7",
    "B8",
    "B9",
    "B10-lower",
    "B10-upper",
    "B11",
    "B12",
)

GRAPH_CLASSES = ("general", "connected", "tree")

# Inequality records that small random graphs attain with equality often
# enough that a reasonable fuzzing run is expected to report a positive
# tight count for every name listed here.
TIGHTNESS_WITNESSED = (
    "B1-lower",
    "B1-upper",
    "B3",
    "B4",
    "B5",
    "B6-lower",
    "B6-upper",
    "B7",
    "B8",
    "B10-lower",
    "B10-upper",
)


@dataclass(frozen=True)
class BoundCheck:
    """One evaluated (or skipped) inequality record."""

    name: str
    anchor: str
    applicability: str
    relation: str  # "<=", "<", or "="
    lhs: int | None
    rhs: int | None
    holds: bool
    tight: bool
    skipped: bool = False
    skip_reason: str | None = None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "anchor": self.anchor,
            "applicability": self.applicability,
            "relation": self.relation,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "holds": self.holds,
            "tight": self.tight,
            "skipped": self.skipped,
            "skip_reason": self.skip_reason,
        }


def _evaluated(name, anchor, applicability, relation, lhs, rhs) -> BoundCheck:
    if relation == "<=":
        holds = lhs <= rhs
    elif relation == "<":
        holds = lhs < rhs
    else:
        holds = lhs == rhs
    tight = relation == "<=" and lhs == rhs
    return BoundCheck(name, anchor, applicability, relation, lhs, rhs, holds, tight)


def _skipped(name, anchor, applicability, relation, reason) -> BoundCheck:
    return BoundCheck(
        name, anchor, applicability, relation, None, None, True, False, True, reason
    )


def check_bounds(g: Graph, size_limit: int | None = None) -> list:
    """Evaluate every known bound record on g (order >= 1)."""
    if g.n == 0:
        raise ValueError("bound checks need at least one vertex")
    n = g.n
    delta = g.min_degree()
    big_delta = g.max_degree()
    i_val = idn(g, size_limit)[0]
    ir2 = ir2dn(g, size_limit)[0]
    i2r = i2rdn(g, size_limit)[0]
    idr = idrdn(g, size_limit)[0]
    rho = packing_number(g, size_limit)[0]
    alpha_p = max_matching(g)
    isolated = g.has_isolated_vertex()
    beta_p = None if isolated else min_edge_cover(g)
    connected = g.is_connected()
    tree = g.is_tree()

    out = [
        _evaluated("B1-lower", "3*ir2dn <= 2*idrdn", "any", "<=", 3 * ir2, 2 * idr),
        _evaluated("B1-upper", "idrdn <= 2*ir2dn", "any", "<=", idr, 2 * ir2),
        _evaluated("B2", "ir2dn < idrdn", "any", "<", ir2, idr),
        _evaluated("B3", "idrdn <= 2*i2rdn", "any", "<=", idr, 2 * i2r),
    ]
    if connected:
        out.append(
            _evaluated("B4", "ir2dn + idn <= idrdn", "connected", "<=", ir2 + i_val, idr)
        )
    else:
        out.append(
            _skipped("B4", "ir2dn + idn <= idrdn", "connected", "<=", "graph is disconnected")
        )
    if isolated:
        out.append(
            _skipped(
                "B5",
                "idrdn <= ir2dn + min_edge_cover",
                "no isolated vertices",
                "<=",
                "graph has an isolated vertex",
            )
        )
    else:
        out.append(
            _evaluated(
                "B5",
                "idrdn <= ir2dn + min_edge_cover",
                "no isolated vertices",
                "<=",
                idr,
                ir2 + beta_p,
            )
        )
    out.append(_evaluated("B6-lower", "2*idn <= idrdn", "any", "<=", 2 * i_val, idr))
    out.append(_evaluated("B6-upper", "idrdn <= 3*idn", "any", "<=", idr, 3 * i_val))
    b7_anchor = "idrdn + (2*min_degree - 1)*packing <= 2*order"
    if connected:
        out.append(
            _evaluated("B7", b7_anchor, "connected", "<=", idr + (2 * delta - 1) * rho, 2 * n)
        )
    else:
        out.append(_skipped("B7", b7_anchor, "connected", "<=", "graph is disconnected"))
    b8_anchor = "2*order + (max_degree - 2)*idn <= max_degree*idrdn"
    if big_delta >= 1:
        out.append(
            _evaluated(
                "B8",
                b8_anchor,
                "max degree >= 1",
                "<=",
                2 * n + (big_delta - 2) * i_val,
                big_delta * idr,
            )
        )
    else:
        out.append(_skipped("B8", b8_anchor, "max degree >= 1", "<=", "graph has no edges"))
    tree_reason = None
    if not tree:
        tree_reason = "not a tree"
    elif n < 2:
        tree_reason = "single-vertex tree"
    if tree_reason is None:
        out.append(
            _evaluated("B9", "idn + 1 <= ir2dn", "tree of order >= 2", "<=", i_val + 1, ir2)
        )
        out.append(
            _evaluated(
                "B10-lower", "2*idn + 1 <= idrdn", "tree of order >= 2", "<=", 2 * i_val + 1, idr
            )
        )
        out.append(
            _evaluated("B10-upper", "idrdn <= 3*idn", "tree of order >= 2", "<=", idr, 3 * i_val)
        )
    else:
        out.append(_skipped("B9", "idn + 1 <= ir2dn", "tree of order >= 2", "<=", tree_reason))
        out.append(
            _skipped("B10-lower", "2*idn + 1 <= idrdn", "tree of order >= 2", "<=", tree_reason)
        )
        out.append(
            _skipped("B10-upper", "idrdn <= 3*idn", "tree of order >= 2", "<=", tree_reason)
        )
    b11_anchor = "max_matching + min_edge_cover = order"
    if isolated:
        out.append(
            _skipped(
                "B11", b11_anchor, "no isolated vertices", "=", "graph has an isolated vertex"
            )
        )
    else:
        out.append(
            _evaluated(
                "B11", b11_anchor, "no isolated vertices", "=", alpha_p + beta_p, n
            )
        )
    b12_anchor = "(idrdn == 3) = (max_degree == order - 1)"
    if n >= 2:
        out.append(
            _evaluated(
                "B12",
                b12_anchor,
                "order >= 2",
                "=",
                int(idr == 3),
                int(big_delta == n - 1),
            )
        )
    else:
        out.append(_skipped("B12", b12_anchor, "order >= 2", "=", "single-vertex graph"))
    return out


@dataclass
class FuzzReport:
    """Outcome of a deterministic fuzzing run over one graph class."""

    graph_class: str
    seed: int
    trials: int
    violations: list = field(default_factory=list)  # (edge_list text, bound name)
    tight_counts: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "class": self.graph_class,
            "seed": self.seed,
            "trials": self.trials,
            "violations": [
                {"edge_list": edge_list, "bound": bound}
                for edge_list, bound in self.violations
            ],
            "tight_counts": dict(self.tight_counts),
        }


_CONNECT_ATTEMPTS = 1000


def fuzz(
    graph_class: str,
    max_n: int,
    trials: int,
    p_range: tuple = (0.2, 0.8),
    seed: int = 0,
    size_limit: int | None = None,
) -> FuzzReport:
    """Sample `trials` graphs of the given class and check every bound.

    Deterministic for a fixed (class, max_n, trials, p_range, seed): vertex
    counts are uniform on [1, max_n], edge probabilities uniform on p_range,
    and each instance is built from a seed derived from the master stream.
    The connected class redraws (up to a large cap) until a connected
    sample appears; the tree class ignores p_range.
    """
    if graph_class not in GRAPH_CLASSES:
        raise ValueError(f"unknown graph class {graph_class!r}")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    limit = _resolve_limit(size_limit)
    if not 1 <= max_n <= limit:
        raise ValueError(f"max_n must be in [1, {limit}] (exact-solver guard)")
    p_lo, p_hi = float(p_range[0]), float(p_range[1])
    if not (0.0 <= p_lo <= p_hi <= 1.0):
        raise ValueError("p_range must satisfy 0 <= p_lo <= p_hi <= 1")
    master = SplitMix64(seed)
    report = FuzzReport(graph_class, seed, trials)
    report.tight_counts = {name: 0 for name in BOUND_NAMES}
    for _ in range(trials):
        n = master.below(max_n) + 1
        if graph_class == "tree":
            g = random_tree(n, master.next_u64())
        elif graph_class == "general":
            p = p_lo + master.unit() * (p_hi - p_lo)
            g = random_graph(n, p, master.next_u64())
        else:
            p = p_lo + master.unit() * (p_hi - p_lo)
            g = None
            for _attempt in range(_CONNECT_ATTEMPTS):
                cand = random_graph(n, p, master.next_u64())
                if cand.is_connected():
                    g = cand
                    break
            if g is None:
                raise RuntimeError(
                    f"no connected sample on {n} vertices at p={p:.3f} "
                    f"after {_CONNECT_ATTEMPTS} attempts"
                )
        for rec in check_bounds(g, size_limit):
            if rec.skipped:
                continue
            if not rec.holds:
                report.violations.append((serialize_edge_list(g), rec.name))
            if rec.tight:
                report.tight_counts[rec.name] += 1
    return report
