"""Permutations, permutation groups and isomorphism-class fingerprints.

Permutations act on 0..n-1 internally; cycle notation is printed and
parsed 1-based ("(2,3,5,4)(6,7,8,9)", identity "()").  Group order,
stabilizers and transitivity are delegated to sympy's stabilizer-chain
machinery; exact element-order histograms use a breadth-first closure
over bytes-encoded permutations, which is fast enough for every group
of order <= 10^6 met here.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from functools import reduce
from math import gcd, lcm

from sympy.combinatorics import Permutation as _SymPerm
from sympy.combinatorics.perm_groups import PermutationGroup as _SymGroup

EXACT_ORDER_BOUND = 10 ** 6
SAMPLE_SIZE = 10 ** 4
SAMPLE_SEED = 20260823


class Permutation:
    """A bijection of {0..n-1}, stored as the tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError("not a permutation of 0..n-1")
        object.__setattr__(self, "images", images)

    def __setattr__(self, *a):
        raise AttributeError("Permutation is immutable")

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """self then other: (p*q)(i) = q(p(i))."""
        q = other.images
        return Permutation(tuple(q[i] for i in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self):
        """Nontrivial cycles, each starting at its least point."""
        seen = [False] * self.degree
        out = []
        for i in range(self.degree):
            if seen[i] or self.images[i] == i:
                seen[i] = True
                continue
            cyc = [i]
            seen[i] = True
            j = self.images[i]
            while j != i:
                seen[j] = True
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def cycle_type(self):
        """Multiset of cycle lengths (fixed points included), sorted desc."""
        lens = [len(c) for c in self.cycles()]
        lens += [1] * (self.degree - sum(lens))
        return tuple(sorted(lens, reverse=True))

    def order(self) -> int:
        return reduce(lcm, (len(c) for c in self.cycles()), 1)

    def fixed_points(self):
        return tuple(i for i in range(self.degree) if self.images[i] == i)

    def relabel(self, sigma: "Permutation") -> "Permutation":
        """Conjugate: the same permutation after renaming i -> sigma(i)."""
        img = [0] * self.degree
        for i in range(self.degree):
            img[sigma.images[i]] = sigma.images[self.images[i]]
        return Permutation(tuple(img))

    def __str__(self):
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join(
            "(%s)" % ",".join(str(p + 1) for p in c) for c in cycs
        )

    def __repr__(self):
        return "Permutation(%s)" % str(self)

    @staticmethod
    def identity(degree: int) -> "Permutation":
        return Permutation(range(degree))

    @staticmethod
    def from_cycles(cycles, degree: int) -> "Permutation":
        img = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a] = b
        return Permutation(tuple(img))


_CYCLE_RE = re.compile(r"\(\s*([0-9,\s]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse 1-based cycle notation like "(2,3,5,4)(6,7,8,9)"."""
    stripped = re.sub(r"\s", "", text)
    if not re.fullmatch(r"(\([0-9,]*\))+", stripped):
        raise ValueError("bad cycle notation: %r" % text)
    cycles = []
    for m in _CYCLE_RE.finditer(stripped):
        body = m.group(1)
        if body:
            pts = [int(t) - 1 for t in body.split(",")]
            if any(p < 0 or p >= degree for p in pts):
                raise ValueError("point out of range in %r" % text)
            cycles.append(pts)
    return Permutation.from_cycles(cycles, degree)


def cycle_type_str(ct) -> str:
    """Compact exponent form, e.g. (3,3,3,1) -> "3^3 1^1"."""
    parts = []
    i = 0
    while i < len(ct):
        j = i
        while j < len(ct) and ct[j] == ct[i]:
            j += 1
        parts.append("%d^%d" % (ct[i], j - i))
        i = j
    return " ".join(parts)


def cycle_type(p: Permutation):
    return p.cycle_type()


def _closure_bytes(gens):
    """All elements of <gens> as bytes images; degree must be <= 256."""
    n = gens[0].degree
    assert n <= 256
    gb = [bytes(g.images) + bytes(range(n, 256)) for g in gens]
    ident = bytes(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for e in frontier:
            for g in gb:
                h = e.translate(g)  # h(i) = g(e(i))
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return seen

def brute_force_order(gens) -> int:
    """Group order by explicit closure enumeration (independent of chains)."""
    gens = [g for g in gens if not g.is_identity()]
    if not gens:
        return 1
    return len(_closure_bytes(gens))


def _order_of_bytes(e) -> int:
    n = len(e)
    seen = [False] * n
    out = 1
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = e[j]
            length += 1
        out = lcm(out, length)
    return out


class PermGroup:
    """A permutation group with stabilizer-chain order and stabilizers."""

    def __init__(self, generators, degree=None, _sym=None):
        generators = [g for g in generators if not g.is_identity()]
        if degree is None:
            if not generators:
                raise ValueError("degree required for the trivial group")
            degree = generators[0].degree
        if any(g.degree != degree for g in generators):
            raise ValueError("mixed degrees")
        self.degree = degree
        self.generators = tuple(generators)
        if _sym is not None:
            self._sym = _sym
        elif generators:
            self._sym = _SymGroup([_SymPerm(g.images) for g in generators])
        else:
            self._sym = _SymGroup([_SymPerm(list(range(degree)))])
        self._order = None
        self._fingerprint = None

    def order(self) -> int:
        if self._order is None:
            self._order = int(self._sym.order())
        return self._order

    def is_transitive(self) -> bool:
        if not self.generators:
            return self.degree == 1
        return bool(self._sym.is_transitive())

    def orbit(self, point: int):
        orb = {point}
        frontier = [point]
        while frontier:
            nxt = []
            for p in frontier:
                for g in self.generators:
                    q = g(p)
                    if q not in orb:
                        orb.add(q)
                        nxt.append(q)
            frontier = nxt
        return frozenset(orb)

    def contains(self, p: Permutation) -> bool:
        return bool(self._sym.contains(_SymPerm(p.images)))

    def point_stabilizer(self, point: int) -> "PermGroup":
        stab = self._sym.stabilizer(point)
        gens = [Permutation(_pad(g.array_form, self.degree))
                for g in stab.generators]
        return PermGroup(gens, degree=self.degree)

    def two_point_stabilizer(self, p: int, q: int) -> "PermGroup":
        if p == q:
            raise ValueError("points must differ")
        return self.point_stabilizer(p).point_stabilizer(q)

    def elements(self):
        """All elements; only for groups of order <= EXACT_ORDER_BOUND."""
        if not self.generators:
            return [Permutation.identity(self.degree)]
        if self.degree > 256:
            return [Permutation(_pad(e.array_form, self.degree))
                    for e in self._sym.elements]
        return [Permutation(tuple(e)) for e in _closure_bytes(self.generators)]

    def random_elements(self, count, seed=SAMPLE_SEED):
        """Uniform random elements via the stabilizer-chain transversals."""
        self._sym.schreier_sims()
        transversals = self._sym.basic_transversals
        rng = random.Random(seed)
        ident = _SymPerm(list(range(self.degree)))
        out = []
        for _ in range(count):
            e = ident
            for tr in transversals:
                key = rng.choice(sorted(tr))
                e = tr[key] * e
            out.append(Permutation(_pad(e.array_form, self.degree)))
        return out

    def derived_index(self) -> int:
        derived = self._sym.derived_subgroup()
        return self.order() // int(derived.order())

    def fingerprint(self) -> "Fingerprint":
        if self._fingerprint is None:
            self._fingerprint = fingerprint(self)
        return self._fingerprint

    def __repr__(self):
        return "PermGroup(degree=%d, gens=[%s])" % (
            self.degree, ", ".join(str(g) for g in self.generators))


def _pad(array_form, degree):
    return tuple(array_form) + tuple(range(len(array_form), degree))


def group_order(gens, degree=None) -> int:
    return PermGroup(gens, degree=degree).order()


@dataclass(frozen=True)
class Fingerprint:
    """Conjugation-invariant stand-in for an isomorphism class."""

    order: int
    element_order_histogram: tuple   # sorted ((order, count), ...)
    exact: bool
    sample_size: int                 # 0 when exact
    derived_index: int | None        # None when order > exact bound
    transitive: bool

    def element_orders(self):
        return frozenset(o for o, _ in self.element_order_histogram)


def fingerprint(g: PermGroup) -> Fingerprint:
    order = g.order()
    if order <= EXACT_ORDER_BOUND:
        hist = {}
        for e in g.elements():
            o = e.order()
            hist[o] = hist.get(o, 0) + 1
        exact, sample = True, 0
        derived_index = g.derived_index()
    else:
        hist = {}
        for e in g.random_elements(SAMPLE_SIZE):
            o = e.order()
            hist[o] = hist.get(o, 0) + 1
        exact, sample = False, SAMPLE_SIZE
        derived_index = None
    return Fingerprint(
        order=order,
        element_order_histogram=tuple(sorted(hist.items())),
        exact=exact,
        sample_size=sample,
        derived_index=derived_index,
        transitive=g.is_transitive(),
    )


# Known groups, identified by order plus the set of element orders.
NAMED_GROUPS = (
    ("Z3^2:Z2^2", 36, frozenset({1, 2, 3, 6})),
    ("A5", 60, frozenset({1, 2, 3, 5})),
    ("S5", 120, frozenset({1, 2, 3, 4, 5, 6})),
    ("PSL(2,7)", 168, frozenset({1, 2, 3, 4, 7})),
    ("PGL(2,7)", 336, frozenset({1, 2, 3, 4, 6, 7, 8})),
    ("A6", 360, frozenset({1, 2, 3, 4, 5})),
    ("J2", 604800, frozenset({1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 15})),
    ("Tits T", 17971200, frozenset({1, 2, 3, 4, 5, 6, 8, 10, 12, 13, 16})),
)


def identify(fp: Fingerprint):
    """Name from the built-in table, or None.

    Sampled histograms match when the observed orders are a subset of the
    expected order set; exact ones require equality.
    """
    for name, order, orders in NAMED_GROUPS:
        if fp.order != order:
            continue
        if fp.exact:
            if fp.element_orders() == orders:
                return name
        else:
            if fp.element_orders() <= orders:
                return name
    return None


def simultaneously_conjugate(pair_a, pair_b):
    """A relabeling taking generator pair a to pair b, or None.

    Both pairs must generate transitive groups of equal degree; the image
    of point 0 then determines the whole relabeling, which is checked.
    """
    n = pair_a[0].degree
    if any(p.degree != n for p in (*pair_a, *pair_b)):
        return None
    for base in range(n):
        sigma = [None] * n
        sigma[0] = base
        stack = [0]
        ok = True
        while stack and ok:
            p = stack.pop()
            for ga, gb in zip(pair_a, pair_b):
                q, r = ga(p), gb(sigma[p])
                if sigma[q] is None:
                    sigma[q] = r
                    stack.append(q)
                elif sigma[q] != r:
                    ok = False
                    break
        if ok and all(s is not None for s in sigma) \
                and sorted(sigma) == list(range(n)):
            return Permutation(tuple(sigma))
    return None
