"""Point-line geometries stabilized by a transitive permutation group.

Unordered point pairs are partitioned by the fingerprint of their
two-point stabilizer; each class is an edge set on the points and yields
a line system.  On a complete class graph the lines are the fixed-point
sets of the two-point stabilizers (falling back to the edges themselves
when those stabilizers are trivial); otherwise they are the maximum-size
maximal cliques of the class graph (Bron-Kerbosch with pivoting).  Both
branches are checked against the named line systems they must reproduce.

Incidence statistics (diameter, girth, valency multisets) feed the
generalized-polygon test and a parameter table naming the geometries
that occur in the census.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from itertools import combinations

from .perms import PermGroup, Fingerprint


@dataclass(frozen=True)
class IncidenceGeometry:
    """Points 0..n-1 and lines as sorted point tuples."""

    n: int
    lines: tuple

    def __post_init__(self):
        seen = set()
        for line in self.lines:
            if len(line) < 2:
                raise ValueError("line with fewer than 2 points")
            if list(line) != sorted(set(line)):
                raise ValueError("line must be sorted and duplicate-free")
            if not all(0 <= p < self.n for p in line):
                raise ValueError("point out of range")
            if line in seen:
                raise ValueError("duplicate line")
            seen.add(line)
        for a, b in combinations(self.lines, 2):
            if set(a) <= set(b) or set(b) <= set(a):
                raise ValueError("one line contains another")

    def to_json_dict(self) -> dict:
        return {
            "points": self.n,
            "lines": [[p + 1 for p in line] for line in sorted(self.lines)],
        }


@dataclass(frozen=True)
class PairClass:
    """All unordered pairs sharing a two-point-stabilizer fingerprint."""

    pairs: tuple
    stab_order: int
    stab_fingerprint: Fingerprint


@dataclass(frozen=True)
class GraphStats:
    connected: bool
    diameter: int
    girth: int | None            # None means acyclic
    points_per_line: tuple       # sorted ((size, count), ...)
    lines_per_point: tuple


@dataclass(frozen=True)
class PolygonCheck:
    is_gp: bool
    n: int | None                # gonality = incidence diameter
    s: int | None
    t: int | None
    diameter: int
    girth: int | None


def pair_classes(g: PermGroup):
    """Pair classes sorted by (stabilizer order desc, class size asc)."""
    if not g.is_transitive():
        raise ValueError("group must be transitive")
    n = g.degree
    # orbits of the group on unordered pairs, then merge by fingerprint
    remaining = set(combinations(range(n), 2))
    by_fp = {}
    while remaining:
        seed = min(remaining)
        orbit = {seed}
        frontier = [seed]
        while frontier:
            p, q = frontier.pop()
            for gen in g.generators:
                img = tuple(sorted((gen(p), gen(q))))
                if img not in orbit:
                    orbit.add(img)
                    frontier.append(img)
        remaining -= orbit
        fp = g.two_point_stabilizer(*seed).fingerprint()
        by_fp.setdefault(fp, set()).update(orbit)
    classes = [
        PairClass(pairs=tuple(sorted(pairs)), stab_order=fp.order,
                  stab_fingerprint=fp)
        for fp, pairs in by_fp.items()
    ]
    classes.sort(key=lambda c: (-c.stab_order, len(c.pairs), c.pairs))
    return classes


def _bron_kerbosch(adj, r, p, x, out):
    if not p and not x:
        out.append(tuple(sorted(r)))
        return
    pivot = max(sorted(p | x), key=lambda u: len(adj[u] & p))
    for v in sorted(p - adj[pivot]):
        _bron_kerbosch(adj, r | {v}, p & adj[v], x & adj[v], out)
        p = p - {v}
        x = x | {v}


def maximal_cliques(n, edges):
    """All maximal cliques, deterministic order (Bron-Kerbosch, pivoting)."""
    adj = {v: set() for v in range(n)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    out = []
    _bron_kerbosch(adj, set(), set(range(n)), set(), out)
    return sorted(out)


def geometry_from_class(g: PermGroup, pairs) -> IncidenceGeometry:
    """Line system of one pair class.

    Complete class graph: lines are the fixed-point sets of the two-point
    stabilizers (the pairs themselves when the stabilizers are trivial).
    Otherwise: the maximum-size maximal cliques of the class graph.
    """
    pairs = tuple(sorted(tuple(sorted(p)) for p in pairs))
    if not pairs:
        raise ValueError("empty pair class")
    n = g.degree
    if len(pairs) == n * (n - 1) // 2:
        stab = g.two_point_stabilizer(*pairs[0])
        if stab.order() == 1:
            lines = pairs
        else:
            lines = set()
            for p, q in pairs:
                fix = tuple(sorted(
                    set.intersection(*(set(e.fixed_points())
                                       for e in stab_of(g, p, q)))))
                lines.add(fix)
            lines = tuple(sorted(lines))
    else:
        cliques = maximal_cliques(n, pairs)
        top = max(len(c) for c in cliques)
        lines = tuple(c for c in cliques if len(c) == top)
    return IncidenceGeometry(n=n, lines=lines)


def stab_of(g, p, q):
    """Generators of the two-point stabilizer, identity if trivial."""
    stab = g.two_point_stabilizer(p, q)
    if stab.generators:
        return stab.generators
    from .perms import Permutation
    return (Permutation.identity(g.degree),)


def all_geometries(g: PermGroup):
    """(PairClass, IncidenceGeometry) for every pair class of the group."""
    return [(c, geometry_from_class(g, c.pairs)) for c in pair_classes(g)]


def incidence_graph_stats(geom: IncidenceGeometry) -> GraphStats:
    n = geom.n
    adj = {i: set() for i in range(n + len(geom.lines))}
    for li, line in enumerate(geom.lines):
        for p in line:
            adj[p].add(n + li)
            adj[n + li].add(p)

    def bfs(start):
        dist = {start: 0}
        q = deque([start])
        while q:
            u = q.popleft()
            for v in adj[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    q.append(v)
        return dist

    connected = True
    diameter = 0
    for s in adj:
        dist = bfs(s)
        if len(dist) < len(adj):
            connected = False
        diameter = max(diameter, max(dist.values(), default=0))

    girth = None
    for s in adj:
        dist = {s: 0}
        parent = {s: None}
        q = deque([s])
        while q:
            u = q.popleft()
            for v in adj[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    q.append(v)
                elif parent[u] != v and dist[v] >= dist[u]:
                    cyc = dist[u] + dist[v] + 1
                    if girth is None or cyc < girth:
                        girth = cyc

    ppl = Counter(len(line) for line in geom.lines)
    lpp = Counter()
    for p in range(n):
        lpp[sum(1 for line in geom.lines if p in line)] += 1
    return GraphStats(
        connected=connected,
        diameter=diameter,
        girth=girth,
        points_per_line=tuple(sorted(ppl.items())),
        lines_per_point=tuple(sorted(lpp.items())),
    )


FEIT_HIGMAN = frozenset({2, 3, 4, 6, 8})


def polygon_check(geom: IncidenceGeometry) -> PolygonCheck:
    stats = incidence_graph_stats(geom)
    regular = (len(stats.points_per_line) == 1
               and len(stats.lines_per_point) == 1)
    if not regular or not stats.connected:
        return PolygonCheck(is_gp=False, n=None, s=None, t=None,
                            diameter=stats.diameter, girth=stats.girth)
    s = stats.points_per_line[0][0] - 1
    t = stats.lines_per_point[0][0] - 1
    n = stats.diameter
    is_gp = stats.girth is not None and stats.girth == 2 * n
    if is_gp and s > 1 and t > 1 and n not in FEIT_HIGMAN:
        is_gp = False
    if is_gp:
        # double count flags a malformed regular structure
        npts = geom.n
        nlines = len(geom.lines)
        if npts * (t + 1) != nlines * (s + 1):
            is_gp = False
    return PolygonCheck(is_gp=is_gp, n=n if is_gp else stats.diameter,
                        s=s, t=t, diameter=stats.diameter, girth=stats.girth)


# (points, lines, pts/line multiset, lines/pt multiset, diameter, girth)
RECOGNITION_TABLE = (
    ("K6", 6, 15, ((2, 15),), ((5, 6),), 4, 6),
    ("Fano plane", 7, 7, ((3, 7),), ((3, 7),), 3, 6),
    ("Hesse configuration", 9, 12, ((3, 12),), ((4, 9),), 4, 6),
    ("GQ(2,1)", 9, 6, ((3, 6),), ((2, 9),), 4, 8),
    ("Mermin pentagram", 10, 5, ((4, 5),), ((2, 10),), 4, 6),
    ("Desargues configuration", 10, 10, ((3, 10),), ((3, 10),), 5, 6),
    ("Petersen graph", 10, 15, ((2, 15),), ((3, 10),), 6, 10),
    ("Petersen line graph", 15, 10, ((3, 10),), ((2, 15),), 6, 10),
    ("GH(2,1)", 21, 14, ((3, 14),), ((2, 21),), 6, 12),
    ("GO(2,1)", 45, 30, ((3, 30),), ((2, 45),), 8, 16),
)


def recognize(geom: IncidenceGeometry):
    """Name from the parameter table, or None."""
    stats = incidence_graph_stats(geom)
    key = (geom.n, len(geom.lines), stats.points_per_line,
           stats.lines_per_point, stats.diameter, stats.girth)
    for name, *params in RECOGNITION_TABLE:
        if key == tuple(params):
            return name
    return None


def collinearity_dot(geom: IncidenceGeometry) -> str:
    lines = ["graph collinearity {"]
    for p in range(geom.n):
        lines.append("  p%d;" % (p + 1))
    edges = set()
    for line in geom.lines:
        for a, b in combinations(line, 2):
            edges.add((a, b))
    for a, b in sorted(edges):
        lines.append("  p%d -- p%d;" % (a + 1, b + 1))
    lines.append("}")
    return "\n".join(lines) + "\n"


def incidence_dot(geom: IncidenceGeometry) -> str:
    out = ["graph incidence {"]
    for p in range(geom.n):
        out.append('  p%d [shape=circle];' % (p + 1))
    for li in range(len(geom.lines)):
        out.append('  L%d [shape=box];' % (li + 1))
    for li, line in enumerate(sorted(geom.lines)):
        for p in line:
            out.append("  p%d -- L%d;" % (p + 1, li + 1))
    out.append("}")
    return "\n".join(out) + "\n"
