"""Todd-Coxeter coset enumeration, HLT strategy.

Cosets are scanned in ascending order; at each live coset every relator is
scanned and gaps are filled by new definitions, then the coset's row is
completed.  Coincidences are processed immediately with a union-find on coset
numbers (the smaller number survives), following the queue-based procedure
in Holt, Eick and O'Brien, *Handbook of Computational Group Theory*, 5.1.

Columns: generator ``g`` uses column ``2(g-1)`` and its inverse ``2(g-1)+1``.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from typing import Sequence

from .fpres import Presentation
from .word import Word

DEFAULT_MAX_COSETS = 2_000_000
UNDEF = -1


def default_budget() -> int:
    env = os.environ.get("BQL_MAX_COSETS")
    if env is None:
        return DEFAULT_MAX_COSETS
    try:
        value = int(env)
    except ValueError:
        raise ValueError(f"BQL_MAX_COSETS must be an integer, got {env!r}") from None
    if value <= 0:
        raise ValueError(f"BQL_MAX_COSETS must be positive, got {value}")
    return value


@dataclass
class EnumerationStats:
    definitions: int = 0
    coincidences: int = 0
    max_live: int = 0
    elapsed: float = 0.0

    def as_dict(self) -> dict:
        return {"definitions": self.definitions, "coincidences": self.coincidences,
                "max_live": self.max_live, "elapsed_s": round(self.elapsed, 3)}


@dataclass
class EnumerationResult:
    completed: bool
    index: int | None
    cosets_defined: int
    stats: EnumerationStats = field(default_factory=EnumerationStats)
    table: list[list[int]] | None = field(default=None, repr=False)

    @property
    def outcome(self) -> str:
        return "completed" if self.completed else "budget_exceeded"

    def as_dict(self) -> dict:
        return {"outcome": self.outcome, "index": self.index,
                "cosets_defined": self.cosets_defined, **self.stats.as_dict()}


class _BudgetHit(Exception):
    pass


def _columns(word: Word) -> list[int]:
    return [2 * (x - 1) if x > 0 else 2 * (-x - 1) + 1 for x in word]


class CosetTable:
    """Coset table with union-find coincidence handling.

    ``rows[c][col]`` is the coset reached from ``c`` along column ``col`` or
    ``UNDEF``.  ``parent[c] == c`` iff ``c`` is live.
    """

    def __init__(self, ncols: int, max_cosets: int, max_definitions: int | None = None):
        self.ncols = ncols
        self.max_cosets = max_cosets
        self.max_definitions = max_definitions
        self.rows: list[list[int]] = [[UNDEF] * ncols]
        self.parent: list[int] = [0]
        self.live = 1
        self.stats = EnumerationStats(definitions=1, max_live=1)

    def find(self, c: int) -> int:
        parent = self.parent
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def define(self, c: int, col: int) -> int:
        if self.live >= self.max_cosets:
            raise _BudgetHit
        stats = self.stats
        if self.max_definitions is not None and stats.definitions >= self.max_definitions:
            raise _BudgetHit
        d = len(self.rows)
        row = [UNDEF] * self.ncols
        self.rows.append(row)
        self.parent.append(d)
        self.live += 1
        stats.definitions += 1
        if self.live > stats.max_live:
            stats.max_live = self.live
        self.rows[c][col] = d
        row[col ^ 1] = c
        return d

    def coincidence(self, a: int, b: int) -> None:
        rows = self.rows
        find = self.find
        queue: list[int] = []

        def merge(k: int, l: int) -> None:
            k, l = find(k), find(l)
            if k == l:
                return
            if k > l:
                k, l = l, k
            self.parent[l] = k
            self.live -= 1
            self.stats.coincidences += 1
            queue.append(l)

        merge(a, b)
        qi = 0
        while qi < len(queue):
            e = queue[qi]
            qi += 1
            row_e = rows[e]
            for col in range(self.ncols):
                f = row_e[col]
                if f == UNDEF:
                    continue
                inv = col ^ 1
                rows[f][inv] = UNDEF
                e1, f1 = find(e), find(f)
                t = rows[e1][col]
                if t != UNDEF:
                    merge(f1, t)
                else:
                    t = rows[f1][inv]
                    if t != UNDEF:
                        merge(e1, t)
                    else:
                        rows[e1][col] = f1
                        rows[f1][inv] = e1

    def scan_and_fill(self, c: int, word: Sequence[int]) -> None:
        """Scan ``word`` (column indices) from coset ``c``, defining cosets to close gaps."""
        rows = self.rows
        n = len(word)
        if n == 0:
            return
        f, i = c, 0
        b, j = c, n - 1
        while True:
            # forward
            while i <= j:
                t = rows[f][word[i]]
                if t == UNDEF:
                    break
                f = t
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            # backward
            while j >= i:
                t = rows[b][word[j] ^ 1]
                if t == UNDEF:
                    break
                b = t
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                # deduction closes the scan
                rows[f][word[i]] = b
                rows[b][word[i] ^ 1] = f
                return
            self.define(f, word[i])

    def compact(self) -> list[list[int]]:
        """Renumber live cosets 0..k-1 in ascending order."""
        live = [c for c in range(len(self.rows)) if self.parent[c] == c]
        new = {c: k for k, c in enumerate(live)}
        return [[new[self.find(x)] if x != UNDEF else UNDEF for x in self.rows[c]] for c in live]


def enumerate_cosets(p: Presentation, subgroup: Sequence[Word] | None = None,
                     max_cosets: int | None = None,
                     max_definitions: int | None = None,
                     keep_table: bool = False) -> EnumerationResult:
    """Index of the subgroup generated by ``subgroup`` in the group presented by ``p``.

    Running out of budget yields ``completed=False``; that means "unknown",
    not "infinite index".
    """
    if max_cosets is None:
        max_cosets = default_budget()
    if max_cosets <= 0 or (max_definitions is not None and max_definitions <= 0):
        raise ValueError("coset budget must be positive")
    if subgroup is None:
        subgroup = p.subgroup
    for w in subgroup:
        if Word(w).max_generator > p.generator_count:
            raise ValueError(f"subgroup word {w} uses a generator outside 1..{p.generator_count}")
    ncols = 2 * p.generator_count
    relators = [_columns(r) for r in p.relators]
    subgens = [_columns(Word(w)) for w in subgroup]
    table = CosetTable(max(ncols, 0), max_cosets, max_definitions)
    started = time.perf_counter()
    try:
        for w in subgens:
            if table.parent[0] == 0:
                table.scan_and_fill(0, w)
        c = 0
        rows, parent = table.rows, table.parent
        while c < len(rows):
            if parent[c] == c:
                for r in relators:
                    table.scan_and_fill(c, r)
                    if parent[c] != c:
                        break
                else:
                    row = rows[c]
                    for col in range(ncols):
                        if parent[c] != c:
                            break
                        if row[col] == UNDEF:
                            table.define(c, col)
            c += 1
    except _BudgetHit:
        table.stats.elapsed = time.perf_counter() - started
        return EnumerationResult(False, None, table.stats.definitions, table.stats)
    table.stats.elapsed = time.perf_counter() - started
    compacted = table.compact()
    return EnumerationResult(True, len(compacted), table.stats.definitions, table.stats,
                             compacted if keep_table else None)


def check_table(p: Presentation, subgroup: Sequence[Word], table: list[list[int]]) -> bool:
    """Verify a completed table: inverse consistency, relators closed everywhere, subgroup at 0."""
    ncols = 2 * p.generator_count
    for c, row in enumerate(table):
        for col in range(ncols):
            t = row[col]
            if t == UNDEF or table[t][col ^ 1] != c:
                return False

    def trace(c, cols):
        for col in cols:
            c = table[c][col]
        return c

    if not table:
        return False
    for r in p.relators:
        cols = _columns(r)
        if any(trace(c, cols) != c for c in range(len(table))):
            return False
    return all(trace(0, _columns(Word(w))) == 0 for w in subgroup)
