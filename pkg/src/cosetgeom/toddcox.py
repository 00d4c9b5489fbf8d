"""Todd-Coxeter coset enumeration and coset-table derived data.

The enumerator is the HLT strategy (relator scanning with filling) with
a standard union-find coincidence queue.  Completed tables are compacted
and renumbered in BFS order from coset 0 using the canonical letter
order x, x^-1, y, y^-1, so equal subgroups always yield byte-identical
tables.

Cosets are 0-based internally and in the Python API; JSON output is
1-based to match the human-facing reports.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import Word, Presentation, SubgroupSpec, inv_letter

NLETTERS = 4
LETTER_ORDER = (0, 1, 2, 3)  # x, x^-1, y, y^-1


class CosetLimitExceeded(RuntimeError):
    """Enumeration did not complete within the coset cap."""


@dataclass(frozen=True)
class CosetTable:
    """Complete action of x, x^-1, y, y^-1 on the cosets of a subgroup."""

    n: int
    action: tuple            # n rows of 4 cosets each
    subgroup: SubgroupSpec

    @property
    def presentation(self) -> Presentation:
        return self.subgroup.parent

    def apply(self, coset: int, letter: int) -> int:
        return self.action[coset][letter]

    def word_action(self, w: Word, coset: int) -> int:
        c = coset
        for l in w.letters:
            c = self.action[c][l]
        return c

    def perm_rep(self):
        """Permutations (pi_x, pi_y) of the coset set."""
        from .perms import Permutation
        px = Permutation(tuple(row[0] for row in self.action))
        py = Permutation(tuple(row[2] for row in self.action))
        return px, py

    def check_invariants(self):
        """Raise AssertionError unless the table is a valid coset table."""
        n = self.n
        assert len(self.action) == n
        for c, row in enumerate(self.action):
            assert len(row) == NLETTERS
            for l, d in enumerate(row):
                assert 0 <= d < n, "entry out of range"
                assert self.action[d][inv_letter(l)] == c, "inverse mismatch"
        for r in self.presentation.relators:
            for c in range(n):
                assert self.word_action(r, c) == c, "relator not closed"
        for g in self.subgroup.generators:
            assert self.word_action(g, 0) == 0, "subgroup generator leaves coset 0"

    def to_json_dict(self) -> dict:
        return {
            "index": self.n,
            "action": [[d + 1 for d in row] for row in self.action],
            "subgroup_words": [str(g) for g in self.subgroup.generators],
        }


def word_action(table: CosetTable, w: Word, coset: int) -> int:
    return table.word_action(w, coset)


class _Enumerator:
    def __init__(self, relators, max_cosets):
        self.max_cosets = max_cosets
        self.relators = [r.cyclically_reduced().letters for r in relators]
        constrained = {l for r in self.relators for l in r}
        constrained |= {inv_letter(l) for l in constrained}
        # letters no relator scan can ever define need eager filling
        self.free_letters = [l for l in range(NLETTERS)
                             if l not in constrained]
        self.table = [[None] * NLETTERS]
        self.p = [0]                      # union-find over cosets
        self.nalive = 1
        self.queue = []

    def rep(self, k):
        # find with path compression
        p = self.p
        r = k
        while p[r] != r:
            r = p[r]
        while p[k] != r:
            p[k], k = r, p[k]
        return r

    def new_coset(self):
        if self.nalive >= self.max_cosets:
            raise CosetLimitExceeded(
                "coset cap %d reached; index may be infinite or the cap too small"
                % self.max_cosets)
        self.table.append([None] * NLETTERS)
        self.p.append(len(self.p))
        self.nalive += 1
        return len(self.table) - 1

    def merge(self, a, b):
        a, b = self.rep(a), self.rep(b)
        if a != b:
            if a > b:
                a, b = b, a
            self.p[b] = a
            self.nalive -= 1
            self.queue.append(b)

    def coincidence(self, a, b):
        self.merge(a, b)
        table = self.table
        while self.queue:
            g = self.queue.pop()
            row = table[g]
            for l in range(NLETTERS):
                d = row[l]
                if d is None:
                    continue
                table[d][inv_letter(l)] = None
                mu, nu = self.rep(g), self.rep(d)
                ent = table[mu][l]
                if ent is not None:
                    self.merge(nu, ent)
                else:
                    ent2 = table[nu][inv_letter(l)]
                    if ent2 is not None:
                        self.merge(mu, ent2)
                    else:
                        table[mu][l] = nu
                        table[nu][inv_letter(l)] = mu

    def scan_and_fill(self, a, word):
        table = self.table
        f, i = a, 0
        b, j = a, len(word) - 1
        while True:
            while i <= j and table[f][word[i]] is not None:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and table[b][inv_letter(word[j])] is not None:
                b = table[b][inv_letter(word[j])]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if j == i:
                table[f][word[i]] = b
                table[b][inv_letter(word[i])] = f
                return
            d = self.new_coset()
            table[f][word[i]] = d
            table[d][inv_letter(word[i])] = f
            f = d
            i += 1

    def run(self, subgroup_words):
        for w in subgroup_words:
            self.scan_and_fill(0, w.letters)
        a = 0
        while a < len(self.table):
            if self.rep(a) == a:
                for r in self.relators:
                    self.scan_and_fill(a, r)
                    if self.rep(a) != a:
                        break
                else:
                    for l in self.free_letters:
                        if self.rep(a) == a and self.table[a][l] is None:
                            d = self.new_coset()
                            self.table[a][l] = d
                            self.table[d][inv_letter(l)] = a
            a += 1


def _standardize(rows):
    """Renumber a complete action by BFS from coset 0 in letter order."""
    n = len(rows)
    order = [0]
    new_of = {0: 0}
    qi = 0
    while qi < len(order):
        c = order[qi]
        qi += 1
        for l in LETTER_ORDER:
            d = rows[c][l]
            if d not in new_of:
                new_of[d] = len(order)
                order.append(d)
    assert len(order) == n, "coset graph is not connected"
    out = tuple(
        tuple(new_of[rows[c][l]] for l in range(NLETTERS)) for c in order
    )
    return out


def todd_coxeter(spec: SubgroupSpec, max_cosets: int = 10 ** 6) -> CosetTable:
    """Enumerate the cosets of the subgroup; raises CosetLimitExceeded."""
    enum = _Enumerator(spec.parent.relators, max_cosets)
    enum.run(spec.generators)
    # collapse to live cosets
    live = [c for c in range(len(enum.table)) if enum.rep(c) == c]
    index_of = {c: i for i, c in enumerate(live)}
    rows = []
    for c in live:
        row = enum.table[c]
        assert all(d is not None for d in row), "HLT left an undefined entry"
        rows.append([index_of[enum.rep(d)] for d in row])
    action = _standardize(rows)
    return CosetTable(n=len(rows), action=action, subgroup=spec)


def transversal(table: CosetTable):
    """Shortest coset representative words, BFS in canonical letter order.

    reps[0] = e and applying reps[i] from coset 0 lands on coset i.
    """
    n = table.n
    reps = [None] * n
    reps[0] = Word()
    order = [0]
    qi = 0
    while qi < len(order):
        c = order[qi]
        qi += 1
        for l in LETTER_ORDER:
            d = table.action[c][l]
            if reps[d] is None:
                reps[d] = Word(reps[c].letters + (l,))
                order.append(d)
    return reps


def schreier_generators(table: CosetTable) -> SubgroupSpec:
    """Subgroup generators read off the BFS transversal (a replay certificate).

    Guarantees todd_coxeter on the result rebuilds a table of equal index.
    """
    reps = transversal(table)
    gens = []
    seen = set()
    for c in range(table.n):
        for l in LETTER_ORDER:
            d = table.action[c][l]
            w = Word(reps[c].letters + (l,)) * reps[d].inverse()
            if w.is_identity():
                continue
            if w.letters in seen or w.inverse().letters in seen:
                continue
            seen.add(w.letters)
            gens.append(w)
    return SubgroupSpec(parent=table.presentation, generators=tuple(gens))
