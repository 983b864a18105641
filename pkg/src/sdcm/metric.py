"""The comparability graph of a model, routes, and the taxi-cab metric.

Every comparable pair of distinct classes gives one undirected edge whose
weight is the growth rate of the hom series between them.  The distance
between two classes is the shortest-path length in this graph, which equals
the infimum over alternating up-down routes: any path becomes a route of the
same length by inserting trivial edges, and a finite graph attains the
infimum.  Edge weights of distinct classes are never below 1, so distances
lie in {0} union [1, infinity); the checkers verify this and the rest of the
metric axioms on concrete models.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key

from .errors import AmbiguousComparison, InvalidRoute
from .model import hom_series
from .report import CheckReport
from .series import (Curvature, compare, curvature, curv_max,
                     format_curvature, possibly_equal)


def sigma(model, small, large):
    """Weight of the direct edge from [small] up to [large]: the growth
    rate of the hom series.  Zero exactly when the classes coincide."""
    return curvature(hom_series(model, large, small))


# ---------------------------------------------------------------------------
# Graph and shortest paths
# ---------------------------------------------------------------------------


class ComparabilityGraph:
    """Undirected weighted view of the order, keeping the orientation
    (small, large) of each edge for display."""

    def __init__(self, model):
        self.model = model
        self.vertices = model.class_ids()
        self.oriented = []
        self.adjacency = {v: [] for v in self.vertices}
        for (small, large) in sorted(model.order):
            if small == large:
                continue
            w = sigma(model, small, large)
            self.oriented.append((small, large, w))
            self.adjacency[small].append((large, w))
            self.adjacency[large].append((small, w))
        for v in self.vertices:
            self.adjacency[v].sort(key=lambda e: e[0])


def _cmp_tied(a, b):
    """compare(), with unresolvable overlaps treated as ties; Dijkstra then
    stays deterministic and the interval widths keep the result honest."""
    try:
        return compare(a, b)
    except AmbiguousComparison:
        return 0


def _dijkstra(graph, source):
    """Single-source distances with exact or interval weights.  Vertices are
    scanned in lexicographic order, so equal-length alternatives resolve
    reproducibly."""
    dist = {source: Curvature.exact(0)}
    done = set()
    while True:
        u = None
        for v in graph.vertices:
            if v in done or v not in dist:
                continue
            if u is None or _cmp_tied(dist[v], dist[u]) < 0:
                u = v
        if u is None:
            return dist
        done.add(u)
        for (w, weight) in graph.adjacency[u]:
            cand = dist[u] + weight
            if w not in dist or _cmp_tied(cand, dist[w]) < 0:
                dist[w] = cand


def distance(model, a, b, graph=None):
    """Shortest-path distance between two classes."""
    if a not in model.classes or b not in model.classes:
        raise ValueError(f"unknown class id {a!r} or {b!r}")
    graph = graph or ComparabilityGraph(model)
    d = _dijkstra(graph, a).get(b)
    if d is None:
        raise ValueError(f"no route joins {a!r} and {b!r}; the model is not connected")
    return d


def distance_table(model):
    """All pairwise distances, keyed by ordered id pairs."""
    graph = ComparabilityGraph(model)
    table = {}
    for a in graph.vertices:
        row = _dijkstra(graph, a)
        for b in graph.vertices:
            d = row.get(b)
            if d is None:
                raise ValueError(f"no route joins {a!r} and {b!r}; the model is not connected")
            table[(a, b)] = d
    return table


def ball(model, center, delta, table=None):
    """Open ball: ids strictly closer to the center than delta.  Raises
    AmbiguousComparison when delta cannot be separated from an interval
    distance even after refinement."""
    delta = Fraction(delta)
    if delta <= 0:
        raise ValueError("delta must be positive")
    if center not in model.classes:
        raise ValueError(f"unknown class id {center!r}")
    bound = Curvature.exact(delta)
    if table is None:
        row = _dijkstra(ComparabilityGraph(model), center)
    else:
        row = {b: table[(center, b)] for b in model.class_ids()}
    return {b for b in model.class_ids() if compare(row[b], bound) < 0}


def diameter(model, table=None):
    """Largest pairwise distance; 0 for a single class."""
    table = table or distance_table(model)
    return curv_max(table.values()) if table else Curvature.exact(0)


# ---------------------------------------------------------------------------
# Routes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Route:
    """Alternating walk K0 -> L0 <- K1 -> L1 <- ... -> L_{n-1} <- Kn, stored
    flat; each K is below its neighbouring L in the order."""

    steps: tuple

    @classmethod
    def of(cls, *ids):
        return cls(tuple(ids))

    @property
    def endpoints(self):
        return self.steps[0], self.steps[-1]


def route_length(model, route):
    """Sum of the edge weights along a route."""
    steps = route.steps if isinstance(route, Route) else tuple(route)
    if len(steps) % 2 == 0 or not steps:
        raise InvalidRoute(f"a route alternates low, high, low, ...; "
                           f"got {len(steps)} entries")
    for s in steps:
        if s not in model.classes:
            raise InvalidRoute(f"unknown class id {s!r}")
    total = Curvature.exact(0)
    for j in range(0, len(steps) - 1, 2):
        low, high, nxt = steps[j], steps[j + 1], steps[j + 2]
        if not model.leq(low, high):
            raise InvalidRoute(f"({low!r}, {high!r}) is not an order pair", pair=(low, high))
        if not model.leq(nxt, high):
            raise InvalidRoute(f"({nxt!r}, {high!r}) is not an order pair", pair=(nxt, high))
        total = total + sigma(model, low, high) + sigma(model, nxt, high)
    return total


# ---------------------------------------------------------------------------
# Theorem checkers
# ---------------------------------------------------------------------------


def check_metric_axioms(model, table=None):
    """Nonnegativity, identity of indiscernibles, symmetry, the triangle
    inequality, and the gap (every distance is 0 or at least 1)."""
    table = table or distance_table(model)
    ids = model.class_ids()
    zero = Curvature.exact(0)
    witnesses = []
    for (a, b), d in sorted(table.items()):
        if d.lo < 0:
            witnesses.append(f"dist({a}, {b}) = {d} is negative")
        if a == b and d != zero:
            witnesses.append(f"dist({a}, {a}) = {d} is not 0")
        if a != b and d == zero:
            witnesses.append(f"dist({a}, {b}) = 0 for distinct classes "
                             f"(identity of indiscernibles fails)")
        if d.hi < 1 and d.lo > 0:
            witnesses.append(f"dist({a}, {b}) = {d} falls in the gap (0, 1)")
    for a in ids:
        for b in ids:
            if not possibly_equal(table[(a, b)], table[(b, a)]):
                witnesses.append(f"dist({a}, {b}) = {table[(a, b)]} but "
                                 f"dist({b}, {a}) = {table[(b, a)]}")
    for a in ids:
        for b in ids:
            for c in ids:
                lhs = table[(a, c)]
                rhs = table[(a, b)] + table[(b, c)]
                if lhs.lo > rhs.hi:
                    witnesses.append(
                        f"triangle fails: dist({a}, {c}) = {lhs} exceeds "
                        f"dist({a}, {b}) + dist({b}, {c}) = {rhs}")
    return CheckReport("metric-axioms", not witnesses, witnesses)


def check_direct_edge(model, table=None):
    """On every comparable pair the one-edge route is already shortest."""
    table = table or distance_table(model)
    witnesses = []
    for (small, large) in sorted(model.order):
        s = sigma(model, small, large)
        d = table[(small, large)]
        if not possibly_equal(s, d):
            witnesses.append(f"dist({small}, {large}) = {d} but the direct "
                             f"edge weighs {s}")
    return CheckReport("direct-edge", not witnesses, witnesses)


def check_bounds(model, table=None):
    """dist <= curv + curv, and both are bounded by twice the ring's
    injective curvature; with a dualizing class the injective curvatures
    bound the distance the same way."""
    table = table or distance_table(model)
    ids = model.class_ids()
    curv = {a: curvature(model.poincare(a)) for a in ids}
    witnesses = []
    rb = curvature(model.ring_bass) if model.ring_bass is not None else None
    injcurv = None
    if model.dualizing is not None:
        bass = {a: model.implied_bass(a) for a in ids}
        if all(b is not None for b in bass.values()):
            injcurv = {a: curvature(b) for a, b in bass.items()}
    for a in ids:
        for b in ids:
            d = table[(a, b)]
            route_via_top = curv[a] + curv[b]
            if d.lo > route_via_top.hi:
                witnesses.append(f"dist({a}, {b}) = {d} exceeds curvature sum "
                                 f"{route_via_top}")
            if rb is not None:
                cap = rb + rb
                if d.lo > cap.hi:
                    witnesses.append(f"dist({a}, {b}) = {d} exceeds twice the "
                                     f"ring injective curvature {cap}")
                if route_via_top.lo > cap.hi:
                    witnesses.append(f"curvature sum for ({a}, {b}) = "
                                     f"{route_via_top} exceeds {cap}")
            if injcurv is not None:
                via_dual = injcurv[a] + injcurv[b]
                if d.lo > via_dual.hi:
                    witnesses.append(f"dist({a}, {b}) = {d} exceeds injective "
                                     f"curvature sum {via_dual}")
    return CheckReport("bounds", not witnesses, witnesses)


def _distinct_sorted(values):
    values = sorted(values, key=cmp_to_key(compare))
    out = []
    for v in values:
        if not out or compare(out[-1], v) != 0:
            out.append(v)
    return out


def check_trichotomy(model, table=None):
    """The three equivalent faces of nontriviality: a noncomparable pair
    exists, there are at least three classes, and some open ball is neither
    a singleton nor everything.  The check passes when the three booleans
    agree."""
    table = table or distance_table(model)
    ids = model.class_ids()
    noncomparable = [(a, b) for i, a in enumerate(ids) for b in ids[i + 1:]
                     if not model.comparable(a, b)]
    has_noncomparable = bool(noncomparable)
    at_least_three = len(ids) >= 3
    ball_witness = None
    for k in ids:
        values = _distinct_sorted(table[(k, b)] for b in ids)
        for lo, hi in zip(values, values[1:]):
            delta = (lo.midpoint() + hi.midpoint()) / 2
            members = ball(model, k, delta, table=table)
            if 1 < len(members) < len(ids):
                ball_witness = (k, delta, tuple(sorted(members)))
                break
        if ball_witness:
            break
    has_ball = ball_witness is not None
    agree = has_noncomparable == at_least_three == has_ball
    witnesses = [f"noncomparable pair exists: {has_noncomparable}"
                 + (f" (e.g. {noncomparable[0]})" if noncomparable else ""),
                 f"at least three classes: {at_least_three} ({len(ids)} classes)",
                 f"nontrivial open ball exists: {has_ball}"
                 + (f" (B({ball_witness[0]}, {ball_witness[1]}) = {ball_witness[2]})"
                    if ball_witness else "")]
    if not agree:
        witnesses.insert(0, "the three conditions disagree")
    return CheckReport("trichotomy", agree, witnesses)


def check_hom_order_consistency(model, table=None):
    """Order patterns around hom classes that force collapses: whenever the
    model contains a class with the series of hom(L, K) for a comparable
    pair K below L, some such class must avoid sitting above L (unless
    L = K) and below L (unless L is the top).  A violation means no actual
    ring realizes the model."""
    witnesses = []
    ids = model.class_ids()
    for (small, large) in sorted(model.order):
        q = model.poincare(small) / model.poincare(large)
        candidates = [h for h in ids if model.poincare(h).eq_up_to_shift(q)]
        if not candidates:
            continue
        ok = False
        for h in candidates:
            above_ok = (large, h) not in model.order or large == small
            below_ok = (h, large) not in model.order or large == model.top
            if above_ok and below_ok:
                ok = True
                break
        if not ok:
            witnesses.append(
                f"every candidate hom class for ({small}, {large}) "
                f"(candidates: {', '.join(candidates)}) is comparable to "
                f"{large} in a direction that forces a collapse")
    return CheckReport("hom-order-consistency", not witnesses, witnesses)


# ---------------------------------------------------------------------------
# DOT rendering
# ---------------------------------------------------------------------------


def emit_dot(model):
    """Graphviz text for the comparability graph: one directed edge small
    to large per comparable distinct pair, labeled with its weight, smaller
    classes drawn below larger ones."""
    graph = ComparabilityGraph(model)
    lines = [f'digraph "{model.name}" {{', "  rankdir=BT;"]
    for v in graph.vertices:
        lines.append(f'  "{v}";')
    for (small, large, w) in graph.oriented:
        lines.append(f'  "{small}" -> "{large}" [label="{format_curvature(w)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
