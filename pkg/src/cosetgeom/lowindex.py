"""Backtracking low-index subgroup search.

Enumerates one coset table per conjugacy class of subgroups of index
<= max_index.  Partial tables are extended at the first undefined entry
in row-major order (letter order x, x^-1, y, y^-1), relator scans
propagate deductions, and a first-in-class test prunes tables that are
not lexicographically minimal over the choice of base coset, so each
conjugacy class is produced exactly once.  Completed tables are already
in BFS-standard numbering by construction.
"""

from __future__ import annotations

from .toddcox import CosetTable, NLETTERS, LETTER_ORDER, schreier_generators
from .words import Presentation, SubgroupSpec, inv_letter


class SearchBudgetExceeded(RuntimeError):
    """The node budget was hit before the search finished."""


def _rotations_by_letter(relators):
    """For each letter, the cyclic rotations of each relator starting with it."""
    by_letter = [[] for _ in range(NLETTERS)]
    seen = [set() for _ in range(NLETTERS)]
    for rel in relators:
        w = rel.cyclically_reduced().letters
        for i, l in enumerate(w):
            rot = w[i:] + w[:i]
            if rot not in seen[l]:
                seen[l].add(rot)
                by_letter[l].append(rot)
    return by_letter


class _Search:
    def __init__(self, pres, max_index, node_budget):
        self.pres = pres
        self.max_index = max_index
        self.node_budget = node_budget
        self.nodes = 0
        self.rot = _rotations_by_letter(pres.relators)
        self.table = [[None] * NLETTERS for _ in range(max_index)]
        self.ncosets = 1
        self.trail = []
        self.results = []

    # -- table edits with undo ------------------------------------------

    def _set(self, a, l, b):
        self.table[a][l] = b
        self.table[b][inv_letter(l)] = a
        self.trail.append((a, l, b))

    def _undo_to(self, mark, ncosets):
        while len(self.trail) > mark:
            a, l, b = self.trail.pop()
            self.table[a][l] = None
            self.table[b][inv_letter(l)] = None
        self.ncosets = ncosets

    # -- deduction propagation ------------------------------------------

    def _scan(self, a, word):
        """Scan a relator rotation from coset a; False on forced coincidence."""
        table = self.table
        f, i = a, 0
        j = len(word) - 1
        b = a
        while True:
            while i <= j and table[f][word[i]] is not None:
                f = table[f][word[i]]
                i += 1
            if i > j:
                return f == b
            while j >= i and table[b][inv_letter(word[j])] is not None:
                b = table[b][inv_letter(word[j])]
                j -= 1
            if j < i:
                return f == b
            if j == i:
                ded = self.pending
                ded.append((f, word[i], b))
                return True
            return True  # more than one gap: nothing to conclude yet

    def _propagate(self, a, l, b):
        """Set entry (a, l) = b and process all consequences."""
        self.pending = [(a, l, b)]
        while self.pending:
            f, l, b = self.pending.pop()
            cur = self.table[f][l]
            if cur is None:
                back = self.table[b][inv_letter(l)]
                if back is not None and back != f:
                    return False
                self._set(f, l, b)
            elif cur != b:
                return False
            else:
                continue
            for rot in self.rot[l]:
                if not self._scan(f, rot):
                    return False
            for rot in self.rot[inv_letter(l)]:
                if not self._scan(b, rot):
                    return False
        return True

    # -- first-in-class pruning -----------------------------------------

    def _first_in_class(self):
        """False if a base-coset change gives a lex-smaller table."""
        table = self.table
        n = self.ncosets
        for beta in range(1, n):
            mu = [beta] + [-1] * (n - 1)   # new -> old
            nu = [-1] * n                  # old -> new
            nu[beta] = 0
            count = 1
            decided = False
            for alpha in range(n):
                if alpha >= count:
                    break  # candidate numbering ran out of reached cosets
                row_old = table[alpha]
                row_new_src = table[mu[alpha]]
                for l in range(NLETTERS):
                    gamma = row_new_src[l]
                    orig = row_old[l]
                    if gamma is None or orig is None:
                        decided = True  # inconclusive on a partial table
                        break
                    g = nu[gamma]
                    if g == -1:
                        nu[gamma] = g = count
                        mu[count] = gamma
                        count += 1
                    if g < orig:
                        return False
                    if g > orig:
                        decided = True
                        break
                if decided:
                    break
        return True

    # -- main backtracking ----------------------------------------------

    def _frontier(self):
        for a in range(self.ncosets):
            row = self.table[a]
            for l in LETTER_ORDER:
                if row[l] is None:
                    return a, l
        return None

    def run(self):
        self._extend()
        return self.results

    def _extend(self):
        spot = self._frontier()
        if spot is None:
            self._emit()
            return
        a, l = spot
        candidates = [b for b in range(self.ncosets)
                      if self.table[b][inv_letter(l)] is None]
        if self.ncosets < self.max_index:
            candidates.append(self.ncosets)
        for b in candidates:
            self.nodes += 1
            if self.node_budget is not None and self.nodes > self.node_budget:
                raise SearchBudgetExceeded(
                    "node budget %d exceeded" % self.node_budget)
            mark = len(self.trail)
            saved_n = self.ncosets
            if b == self.ncosets:
                self.ncosets += 1
            ok = self._propagate(a, l, b) and self._first_in_class()
            if ok:
                self._extend()
            self._undo_to(mark, saved_n)

    def _emit(self):
        n = self.ncosets
        action = tuple(tuple(self.table[a][l] for l in range(NLETTERS))
                       for a in range(n))
        table = CosetTable(n=n, action=action,
                           subgroup=SubgroupSpec(self.pres, ()))
        spec = schreier_generators(table)
        self.results.append(CosetTable(n=n, action=action, subgroup=spec))


def low_index_subgroups(pres: Presentation, max_index: int,
                        node_budget: int | None = None):
    """One standardized CosetTable per conjugacy class of index <= max_index.

    Deterministic output, sorted by (index, table bytes).  Raises
    SearchBudgetExceeded when node_budget definitions have been tried.
    """
    if max_index < 1:
        raise ValueError("max_index must be >= 1")
    search = _Search(pres, max_index, node_budget)
    results = search.run()
    results.sort(key=lambda t: (t.n, t.action))
    return results
