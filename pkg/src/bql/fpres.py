"""Finitely presented groups and their abelian invariants.

Text format (one relator per line, signed-integer word syntax)::

    gens 4
    1 3 -1 -3
    1 2 1 -2 -1 -2
    subgroup
    1

The optional ``subgroup`` section lists subgroup generators for coset
enumeration.  Blank lines and ``#`` comments are ignored; an empty relator is
written as ``1 -1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .word import Word, WordSyntaxError, cyclically_reduce, exponent_sum


class PresentationError(ValueError):
    pass


@dataclass(frozen=True)
class Presentation:
    generator_count: int
    relators: tuple[Word, ...] = ()
    subgroup: tuple[Word, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.generator_count < 0:
            raise PresentationError("generator count must be non-negative")
        rels = tuple(cyclically_reduce(Word(r)) for r in self.relators)
        for r in rels:
            self._check_range(r)
        rels = tuple(r for r in rels if r)
        object.__setattr__(self, "relators", rels)
        sub = tuple(Word(w) for w in self.subgroup)
        for w in sub:
            self._check_range(w)
        object.__setattr__(self, "subgroup", sub)

    def _check_range(self, w: Word) -> None:
        if w.max_generator > self.generator_count:
            raise PresentationError(
                f"word {w} uses generator {w.max_generator} but only {self.generator_count} exist")

    def add_relators(self, extra: Iterable[Word]) -> "Presentation":
        return Presentation(self.generator_count, self.relators + tuple(Word(w) for w in extra),
                            self.subgroup)

    def with_subgroup(self, words: Iterable[Word]) -> "Presentation":
        return Presentation(self.generator_count, self.relators, tuple(Word(w) for w in words))

    def to_text(self) -> str:
        lines = [f"gens {self.generator_count}"]
        lines += [str(r) for r in self.relators]
        if self.subgroup:
            lines.append("subgroup")
            lines += [str(w) if w else "1 -1" for w in self.subgroup]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Presentation":
        gens = None
        relators: list[Word] = []
        subgroup: list[Word] = []
        target = relators
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if gens is None:
                parts = line.split()
                if len(parts) != 2 or parts[0] != "gens" or not parts[1].isdigit():
                    raise PresentationError(f"line {lineno}: expected 'gens <count>', got {raw!r}")
                gens = int(parts[1])
                continue
            if line == "subgroup":
                if target is subgroup:
                    raise PresentationError(f"line {lineno}: duplicate subgroup section")
                target = subgroup
                continue
            try:
                target.append(Word.parse(line))
            except WordSyntaxError as exc:
                raise PresentationError(f"line {lineno}: {exc}") from None
        if gens is None:
            raise PresentationError("missing 'gens <count>' header")
        return cls(gens, tuple(relators), tuple(subgroup))

    @classmethod
    def load(cls, path: str | Path) -> "Presentation":
        return cls.from_text(Path(path).read_text())

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.to_text())


def artin_presentation(n: int) -> Presentation:
    """Artin presentation of B_n: far commutation and braid relators."""
    if n < 2:
        raise PresentationError(f"B_n needs n >= 2, got {n}")
    relators = []
    for i in range(1, n - 1):
        relators.append(Word([i, i + 1, i, -(i + 1), -i, -(i + 1)]))
    for i in range(1, n):
        for j in range(i + 2, n):
            relators.append(Word([i, j, -i, -j]))
    return Presentation(n - 1, tuple(relators))


def add_relators(p: Presentation, extra: Iterable[Word]) -> Presentation:
    return p.add_relators(extra)


# -- abelianization ---------------------------------------------------------


@dataclass(frozen=True)
class AbelianInvariants:
    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion {self.torsion} is not a divisibility chain")
        if any(d < 2 for d in self.torsion):
            raise ValueError("torsion coefficients must be >= 2")

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " x ".join(parts) if parts else "0"


def relation_matrix(p: Presentation) -> list[list[int]]:
    """Rows are relators, columns generators; entries are exponent sums."""
    rows = []
    for r in p.relators:
        row = [0] * p.generator_count
        for x in r:
            row[abs(x) - 1] += 1 if x > 0 else -1
        rows.append(row)
    return rows


def smith_diagonal(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero diagonal entries of the Smith normal form, each dividing the next."""
    a = [list(row) for row in matrix]
    rows = len(a)
    cols = len(a[0]) if a else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        nonzero = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not nonzero:
            break
        _, pi, pj = min(nonzero)
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            p = a[t][t]
            done = True
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    done = False
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    done = False
            if done:
                # the pivot must also divide the rest of the block
                bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                            if a[i][j] % p), None)
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                continue
            # move the smallest remaining entry of row/column t into the pivot
            cands = [(abs(a[i][t]), i, t) for i in range(t, rows) if a[i][t]]
            cands += [(abs(a[t][j]), t, j) for j in range(t, cols) if a[t][j]]
            _, pi, pj = min(cands)
            a[t], a[pi] = a[pi], a[t]
            for row in a:
                row[t], row[pj] = row[pj], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def abelianization(p: Presentation) -> AbelianInvariants:
    diag = smith_diagonal(relation_matrix(p))
    free_rank = p.generator_count - len(diag)
    return AbelianInvariants(free_rank, tuple(d for d in diag if d != 1))


def relator_exponent_sums(p: Presentation) -> list[int]:
    return [exponent_sum(r) for r in p.relators]
