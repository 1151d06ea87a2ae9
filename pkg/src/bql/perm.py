"""Permutations of {1..n} and small permutation-group algorithms.

Composition is left to right: ``p * q`` applies ``p`` first, then ``q``, so
``(p * q)(x) == q(p(x))``.  This matches the reading order of braid words:
the image of s2 s1^-1 is (2 3) * (1 2) = (1 2 3).
"""

from __future__ import annotations

import itertools
import math
import re
from collections import Counter
from typing import Iterable, Sequence


class PermutationError(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


class Permutation:
    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise PermutationError(f"not a bijection of 1..{len(images)}: {images}")
        self.images = images

    @classmethod
    def _unchecked(cls, images: tuple[int, ...]) -> "Permutation":
        p = cls.__new__(cls)
        p.images = images
        return p

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Permutation":
        img = list(range(n + 1))
        seen = set()
        for cyc in cycles:
            for x in cyc:
                if not 1 <= x <= n or x in seen:
                    raise PermutationError(f"bad cycle {tuple(cyc)} for degree {n}")
                seen.add(x)
            for a, b in zip(cyc, tuple(cyc[1:]) + tuple(cyc[:1])):
                img[a] = b
        return cls(img[1:])

    @classmethod
    def transposition(cls, i: int, j: int, n: int) -> "Permutation":
        return cls.from_cycles([(i, j)], n)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "Permutation":
        """Parse ``"(1 2 3)(4 5)"`` (needs ``n`` or uses the largest point) or ``"[2 3 1 5 4]"``."""
        text = text.strip()
        if text.startswith("["):
            if not text.endswith("]"):
                raise PermutationError(f"unterminated one-line notation: {text!r}")
            return cls(int(t) for t in text[1:-1].replace(",", " ").split())
        if text in ("", "()"):
            return cls.identity(n or 0)
        if not re.fullmatch(r"(\(\s*\d+(?:[\s,]+\d+)*\s*\))+", text):
            raise PermutationError(f"bad cycle notation: {text!r}")
        cycles = [tuple(int(t) for t in body.replace(",", " ").split())
                  for body in re.findall(r"\(([^)]*)\)", text)]
        if n is None:
            n = max(max(c) for c in cycles)
        return cls.from_cycles(cycles, n)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __invert__(self) -> "Permutation":
        return inverse(self)

    def __pow__(self, k: int) -> "Permutation":
        result = Permutation.identity(self.degree)
        base = self if k >= 0 else inverse(self)
        for _ in range(abs(k)):
            result = compose(result, base)
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()})"

    def __str__(self) -> str:
        return self.cycle_string()

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, 1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def one_line(self) -> str:
        return "[" + " ".join(map(str, self.images)) + "]"

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1


def _check_degree(p: Permutation, q: Permutation) -> None:
    if p.degree != q.degree:
        raise PermutationError(f"degree mismatch: {p.degree} vs {q.degree}")


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply ``p`` first, then ``q``."""
    _check_degree(p, q)
    qi = q.images
    return Permutation._unchecked(tuple(qi[x - 1] for x in p.images))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for i, x in enumerate(p.images, 1):
        inv[x - 1] = i
    return Permutation._unchecked(tuple(inv))


def cycle_type(p: Permutation) -> tuple[int, ...]:
    """Cycle lengths including fixed points, sorted descending."""
    lengths = [len(c) for c in p.cycles()]
    lengths += [1] * (p.degree - sum(lengths))
    return tuple(sorted(lengths, reverse=True))


def parity(p: Permutation) -> str:
    transpositions = sum(len(c) - 1 for c in p.cycles())
    return "even" if transpositions % 2 == 0 else "odd"


def is_three_cycle(p: Permutation) -> bool:
    cycles = p.cycles()
    return len(cycles) == 1 and len(cycles[0]) == 3


# -- groups ----------------------------------------------------------------


class PermGroup:
    """Group generated by permutations of a fixed degree.

    A base and strong generating set are built eagerly by deterministic
    Schreier-Sims with base points tried in the order 1, 2, ..., n.
    """

    def __init__(self, degree: int, generators: Iterable[Permutation] = ()):
        self.degree = degree
        gens = []
        for g in generators:
            if g.degree != degree:
                raise PermutationError(f"generator {g} has degree {g.degree}, expected {degree}")
            if not g.is_identity() and g not in gens:
                gens.append(g)
        self.generators = tuple(gens)
        self._base: list[int] = []
        self._strong: list[list[Permutation]] = []
        self._orbits: list[dict[int, Permutation]] = []
        self._schreier_sims()

    @classmethod
    def symmetric(cls, n: int) -> "PermGroup":
        if n < 2:
            return cls(n, [])
        gens = [Permutation.transposition(1, 2, n)]
        if n > 2:
            gens.append(Permutation.from_cycles([tuple(range(1, n + 1))], n))
        return cls(n, gens)

    @classmethod
    def alternating(cls, n: int) -> "PermGroup":
        return cls(n, [Permutation.from_cycles([(i, i + 1, i + 2)], n) for i in range(1, n - 1)])

    # Schreier-Sims -------------------------------------------------------

    def _orbit_transversal(self, point: int, gens: Sequence[Permutation]) -> dict[int, Permutation]:
        # transversal[x] maps point -> x under the left-to-right convention
        transversal = {point: Permutation.identity(self.degree)}
        queue = [point]
        for x in queue:
            for g in gens:
                y = g(x)
                if y not in transversal:
                    transversal[y] = transversal[x] * g
                    queue.append(y)
        return transversal

    def _strip(self, g: Permutation, start: int = 0) -> tuple[Permutation, int]:
        for level in range(start, len(self._base)):
            b = g(self._base[level])
            u = self._orbits[level].get(b)
            if u is None:
                return g, level
            g = g * inverse(u)
        return g, len(self._base)

    def _schreier_sims(self) -> None:
        n = self.degree
        if not self.generators:
            return
        for g in self.generators:
            self._extend_base(g)
        self._strong = [[g for g in self.generators if all(g(b) == b for b in self._base[:i])]
                        for i in range(len(self._base))]
        self._orbits = [self._orbit_transversal(self._base[i], self._strong[i])
                        for i in range(len(self._base))]
        i = len(self._base) - 1
        while i >= 0:
            restart = False
            trans = self._orbits[i]
            for x in sorted(trans):
                ux = trans[x]
                for s in self._strong[i]:
                    uxs = ux * s
                    schreier = uxs * inverse(trans[uxs(self._base[i])])
                    if schreier.is_identity():
                        continue
                    h, j = self._strip(schreier, i + 1)
                    if j < len(self._base) or not h.is_identity():
                        if j == len(self._base):
                            self._extend_base(h)
                            self._strong.append([])
                            self._orbits.append({})
                        for level in range(i + 1, j + 1):
                            self._strong[level].append(h)
                            self._orbits[level] = self._orbit_transversal(
                                self._base[level], self._strong[level])
                        i = j
                        restart = True
                        break
                if restart:
                    break
            if not restart:
                i -= 1
        assert len(self._base) <= n

    def _extend_base(self, g: Permutation) -> None:
        if all(g(b) == b for b in self._base):
            for x in range(1, self.degree + 1):
                if x not in self._base and g(x) != x:
                    self._base.append(x)
                    return

    # queries -------------------------------------------------------------

    @property
    def base(self) -> tuple[int, ...]:
        return tuple(self._base)

    def order(self) -> int:
        return math.prod(len(o) for o in self._orbits)

    def __len__(self) -> int:
        return self.order()

    def __contains__(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            return False
        h, level = self._strip(g)
        return level == len(self._base) and h.is_identity()

    def elements(self) -> list[Permutation]:
        """All elements, by brute-force closure (intended for small groups)."""
        return sorted(closure(self.degree, self.generators), key=lambda p: p.images)


def closure(degree: int, generators: Iterable[Permutation], limit: int | None = None) -> set[Permutation]:
    """Brute-force closure under multiplication; independent of Schreier-Sims."""
    gens = list(generators)
    identity = Permutation.identity(degree)
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if limit is not None and len(seen) > limit:
                        raise BudgetExceeded(f"closure exceeded {limit} elements")
        frontier = nxt
    return seen


def group_order(g: PermGroup) -> int:
    return g.order()


def three_cycles(n: int) -> list[Permutation]:
    """Every 3-cycle of S_n, by enumeration of ordered triples."""
    found = set()
    for a, b, c in itertools.permutations(range(1, n + 1), 3):
        found.add(Permutation.from_cycles([(a, b, c)], n))
    return sorted(found, key=lambda p: p.images)


def three_cycle_class_size(n: int) -> int:
    if n < 3:
        raise PermutationError("3-cycles need n >= 3")
    return 2 * math.comb(n, 3)


BRUTE_FORCE_CENTRALIZER_MAX_N = 8


def centralizer_order_in_An(c: Permutation, n: int, brute_force: bool | None = None) -> int:
    """Order of the centralizer of the 3-cycle ``c`` inside A_n.

    Up to n = 8 this counts even permutations commuting with ``c`` directly;
    beyond that it returns the closed form 3 (n-3)! / 2.
    """
    if c.degree != n or not is_three_cycle(c):
        raise PermutationError(f"{c} is not a 3-cycle of degree {n}")
    if brute_force is None:
        brute_force = n <= BRUTE_FORCE_CENTRALIZER_MAX_N
    if not brute_force:
        return 3 * math.factorial(n - 3) // 2
    count = 0
    for images in itertools.permutations(range(1, n + 1)):
        g = Permutation._unchecked(images)
        if parity(g) == "even" and g * c == c * g:
            count += 1
    return count


def normal_closure(group: PermGroup, elements: Iterable[Permutation]) -> PermGroup:
    """Normal closure of ``elements`` in ``group``."""
    gens: list[Permutation] = []
    sub = PermGroup(group.degree, gens)
    queue = [e for e in elements if not e.is_identity()]
    while queue:
        x = queue.pop()
        if x in sub:
            continue
        gens.append(x)
        sub = PermGroup(group.degree, gens)
        for g in group.generators:
            queue.append(inverse(g) * x * g)
    return sub


def derived_subgroup(group: PermGroup) -> PermGroup:
    comms = [inverse(a) * inverse(b) * a * b
             for a in group.generators for b in group.generators]
    return normal_closure(group, comms)


def is_perfect(group: PermGroup, max_order: int = 10**6) -> bool:
    order = group.order()
    if order > max_order:
        raise BudgetExceeded(f"group order {order} exceeds {max_order}")
    return derived_subgroup(group).order() == order


def evaluate(word: Iterable[int], images: Sequence[Permutation]) -> Permutation:
    """Evaluate a signed-letter word at the given generator images."""
    degree = images[0].degree
    inverses = [inverse(p) for p in images]
    result = Permutation.identity(degree)
    for x in word:
        result = result * (images[x - 1] if x > 0 else inverses[-x - 1])
    return result


def automorphism_count(group: PermGroup, relators: Sequence[Iterable[int]], generator_count: int,
                       max_order: int = 400) -> int:
    """Count generating tuples of ``group`` that satisfy every relator.

    When the relators present ``group`` this is |Aut(group)|: an automorphism
    is determined by where it sends a fixed generating tuple.
    """
    order = group.order()
    if order > max_order:
        raise BudgetExceeded(f"group order {order} exceeds {max_order}")
    if generator_count == 0:
        return 1
    elements = group.elements()
    relators = [tuple(r) for r in relators]
    count = 0
    for tup in itertools.product(elements, repeat=generator_count):
        if all(evaluate(r, tup).is_identity() for r in relators if r):
            if PermGroup(group.degree, tup).order() == order:
                count += 1
    return count


def cycle_type_counts(perms: Iterable[Permutation]) -> Counter:
    return Counter(cycle_type(p) for p in perms)
