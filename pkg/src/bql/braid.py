"""Braid words, band generators, and the left Garside normal form.

A braid on ``n`` strands is a :class:`~bql.word.Word` over the Artin
generators 1..n-1.  Equality in B_n is decided by the left normal form
Delta^k A_1 ... A_m, where each A_i is a permutation braid stored as its
permutation and every adjacent pair is left-weighted.

Descent sets are read off the one-line images under the left-to-right
convention of :mod:`bql.perm`:

* finishing set F(A) = {i : A s_i is shorter}  = {i : value i+1 sits left of value i}
* starting set  S(A) = {i : s_i A is shorter}  = {i : A(i) > A(i+1)}

and a pair (A, B) is left-weighted when S(B) is contained in F(A).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .perm import Permutation
from .word import Word, exponent_sum


class BraidError(ValueError):
    pass


@dataclass(frozen=True)
class BraidWord:
    strands: int
    word: Word

    def __post_init__(self):
        if self.strands < 2:
            raise BraidError(f"a braid needs at least 2 strands, got {self.strands}")
        if not isinstance(self.word, Word):
            object.__setattr__(self, "word", Word(self.word))
        if self.word.max_generator > self.strands - 1:
            raise BraidError(
                f"generator {self.word.max_generator} out of range for {self.strands} strands")

    @classmethod
    def parse(cls, text: str) -> "BraidWord":
        """Parse ``"n: w"``, e.g. ``"5: 2 -1"``."""
        m = re.fullmatch(r"\s*(\d+)\s*:(.*)", text)
        if not m:
            raise BraidError(f"expected 'n: word', got {text!r}")
        return cls(int(m.group(1)), Word.parse(m.group(2)))

    @classmethod
    def of(cls, n: int, *letters: int) -> "BraidWord":
        return cls(n, Word(letters))

    def __str__(self) -> str:
        return f"{self.strands}: {self.word}".rstrip()

    def _check(self, other: "BraidWord") -> None:
        if self.strands != other.strands:
            raise BraidError(f"strand mismatch: {self.strands} vs {other.strands}")

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        self._check(other)
        return BraidWord(self.strands, self.word * other.word)

    def __invert__(self) -> "BraidWord":
        return BraidWord(self.strands, ~self.word)

    def __pow__(self, k: int) -> "BraidWord":
        return BraidWord(self.strands, self.word ** k)

    def __len__(self) -> int:
        return len(self.word)

    def conjugate(self, g: "BraidWord") -> "BraidWord":
        """g self g^-1"""
        return g * self * ~g

    def exponent_sum(self) -> int:
        return exponent_sum(self.word)


def artin(i: int, n: int) -> BraidWord:
    if not 1 <= i <= n - 1:
        raise BraidError(f"sigma_{i} does not exist on {n} strands")
    return BraidWord(n, Word([i]))


def identity(n: int) -> BraidWord:
    return BraidWord(n, Word())


def band_generator(i: int, j: int, n: int, side: str = "above") -> BraidWord:
    """Half twist exchanging strands i < j along an arc above or below the strands between.

    above: (s_{j-1} ... s_{i+1}) s_i (s_{i+1}^-1 ... s_{j-1}^-1)
    below: (s_{j-1}^-1 ... s_{i+1}^-1) s_i (s_{i+1} ... s_{j-1})
    """
    if not 1 <= i < j <= n:
        raise BraidError(f"invalid band generator indices ({i}, {j}) on {n} strands")
    if side not in ("above", "below"):
        raise BraidError(f"side must be 'above' or 'below', not {side!r}")
    sign = 1 if side == "above" else -1
    conj = [sign * m for m in range(j - 1, i, -1)]
    return BraidWord(n, Word(conj + [i] + [-x for x in reversed(conj)]))


def rho(i: int, j: int, n: int) -> BraidWord:
    return band_generator(i, j, n, "above")


def rho_below(i: int, j: int, n: int) -> BraidWord:
    return band_generator(i, j, n, "below")


PAPER_ELEMENTS = ("u", "v", "w", "c1", "alpha", "beta", "f")


def paper_element(name: str, n: int, params: Sequence[int] | None = None) -> BraidWord:
    """The named elements u, v, w, c1, alpha_ijk, beta_ijk and f."""
    if name not in PAPER_ELEMENTS:
        raise BraidError(f"unknown element {name!r}; expected one of {PAPER_ELEMENTS}")
    if name in ("alpha", "beta"):
        if params is None or len(params) != 3:
            raise BraidError(f"{name} needs a triple i < j < k")
        i, j, k = params
        if not 1 <= i < j < k <= n:
            raise BraidError(f"{name} needs 1 <= i < j < k <= {n}, got {tuple(params)}")
        if name == "alpha":
            return rho(j, k, n) * ~rho(i, j, n)
        return ~rho(i, j, n) * rho(j, k, n)
    if n < 5:
        raise BraidError(f"{name} is defined here for n >= 5, got {n}")
    if name == "u":
        return BraidWord.of(n, 2, -1)
    if name == "v":
        return BraidWord.of(n, 1, 2, -1, -1)
    if name == "w":
        return BraidWord.of(n, 2, 3, -1, -2)
    if name == "c1":
        return BraidWord.of(n, 3, -1)
    # f = (s2 s1^-1)^2 rho_24 (s2 s1^-1)^-2 rho_24^-1
    u2 = BraidWord.of(n, 2, -1) ** 2
    r24 = rho(2, 4, n)
    return u2 * r24 * ~u2 * ~r24


# -- projection to S_n -------------------------------------------------------


def permutation_image(b: BraidWord) -> Permutation:
    """Image under s_i -> (i i+1), composed left to right along the word."""
    img = list(range(1, b.strands + 1))
    # right-multiplying by (i i+1) swaps the values i and i+1 in one-line form
    pos = [v - 1 for v in range(b.strands + 1)]  # pos[v] = index of value v in img
    for x in b.word:
        i = abs(x)
        pi, pj = pos[i], pos[i + 1]
        img[pi], img[pj] = i + 1, i
        pos[i], pos[i + 1] = pj, pi
    return Permutation(img)


# -- Garside normal form -----------------------------------------------------


def _delta_images(n: int) -> tuple[int, ...]:
    return tuple(range(n, 0, -1))


def _simple(i: int, n: int) -> tuple[int, ...]:
    img = list(range(1, n + 1))
    img[i - 1], img[i] = i + 1, i
    return tuple(img)


def _mul(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(q[x - 1] for x in p)


def _tau(p: tuple[int, ...]) -> tuple[int, ...]:
    """Conjugation by Delta: s_i -> s_{n-i}."""
    n = len(p)
    return tuple(n + 1 - p[n - x] for x in range(1, n + 1))


def finishing_set(p: tuple[int, ...]) -> frozenset[int]:
    pos = {v: k for k, v in enumerate(p)}
    return frozenset(i for i in range(1, len(p)) if pos[i + 1] < pos[i])


def starting_set(p: tuple[int, ...]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(p)) if p[i - 1] > p[i])


def inversions(p: Sequence[int]) -> int:
    return sum(1 for a in range(len(p)) for b in range(a + 1, len(p)) if p[a] > p[b])


def _left_weight(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...], bool]:
    """Slide letters from the front of b onto the end of a until S(b) is within F(a)."""
    changed = False
    while True:
        fa = finishing_set(a)
        moved = False
        for i in sorted(starting_set(b)):
            if i not in fa:
                s = _simple(i, len(a))
                a = _mul(a, s)
                b = _mul(s, b)
                changed = moved = True
                break
        if not moved:
            return a, b, changed


@dataclass(frozen=True)
class GarsideNormalForm:
    strands: int
    delta_power: int
    factors: tuple[Permutation, ...]

    def __str__(self) -> str:
        parts = [f"D^{self.delta_power}"] + [p.one_line() for p in self.factors]
        return " . ".join(parts)

    def canonical_length(self) -> int:
        return len(self.factors)

    def exponent_sum(self) -> int:
        n = self.strands
        return (self.delta_power * n * (n - 1) // 2
                + sum(inversions(p.images) for p in self.factors))

    def to_word(self) -> BraidWord:
        """A braid word representing this normal form."""
        n = self.strands
        letters: list[int] = []
        delta = permutation_braid_word(_delta_images(n))
        sign = 1 if self.delta_power >= 0 else -1
        for _ in range(abs(self.delta_power)):
            letters.extend(sign * x for x in (delta if sign > 0 else reversed(delta)))
        for p in self.factors:
            letters.extend(permutation_braid_word(p.images))
        return BraidWord(n, Word(letters))


def permutation_braid_word(p: Sequence[int]) -> list[int]:
    """A positive reduced word for the permutation braid of ``p``."""
    p = tuple(p)
    n = len(p)
    letters = []
    identity = tuple(range(1, n + 1))
    while p != identity:
        i = min(starting_set(p))
        letters.append(i)
        p = _mul(_simple(i, n), p)
    return letters


def normal_form(b: BraidWord) -> GarsideNormalForm:
    n = b.strands
    delta = _delta_images(n)
    letters = b.word.letters
    # A negative letter s_i^-1 is written Delta^-1 (Delta s_i^-1); pushing every
    # Delta^-1 to the front twists each earlier factor by tau once per push.
    negatives_after = [0] * len(letters)
    count = 0
    for idx in range(len(letters) - 1, -1, -1):
        negatives_after[idx] = count
        if letters[idx] < 0:
            count += 1
    delta_power = -count
    factors: list[tuple[int, ...]] = []
    for idx, x in enumerate(letters):
        if x > 0:
            f = _simple(x, n)
        else:
            f = _mul(delta, _simple(-x, n))
        if negatives_after[idx] % 2:
            f = _tau(f)
        factors.append(f)
        # restore left-weightedness with one sweep from the right
        k = len(factors) - 1
        while k > 0:
            a, c, changed = _left_weight(factors[k - 1], factors[k])
            if not changed:
                break
            factors[k - 1], factors[k] = a, c
            k -= 1
        identity = tuple(range(1, n + 1))
        while factors and factors[-1] == identity:
            factors.pop()
        while factors and factors[0] == delta:
            factors.pop(0)
            delta_power += 1
    return GarsideNormalForm(n, delta_power, tuple(Permutation(f) for f in factors))


def words_equal(a: BraidWord, b: BraidWord) -> bool:
    if a.strands != b.strands:
        raise BraidError(f"strand mismatch: {a.strands} vs {b.strands}")
    if a.word == b.word:
        return True
    return normal_form(a * ~b) == normal_form(identity(a.strands))


def commutes(a: BraidWord, b: BraidWord) -> bool:
    return words_equal(a * b, b * a)


def is_left_weighted(factors: Sequence[Permutation]) -> bool:
    return all(starting_set(y.images) <= finishing_set(x.images)
               for x, y in zip(factors, factors[1:]))


# -- change of coordinates -----------------------------------------------------


def _carry(p: int, q: int) -> list[int]:
    """Letters of s_{q-1} s_{q-2} ... s_p (empty when p == q)."""
    return list(range(q - 1, p - 1, -1))


def change_of_coordinates_conjugator(i: int, j: int, k: int, n: int, target: str = "alpha") -> BraidWord:
    """Exponent-sum-zero g with g (s2 s1^-1) g^-1 equal to alpha_ijk or beta_ijk in B_n."""
    if n < 5:
        raise BraidError("the exponent-sum correction needs n >= 5")
    if not 1 <= i < j < k <= n:
        raise BraidError(f"need 1 <= i < j < k <= {n}, got ({i}, {j}, {k})")
    if target not in ("alpha", "beta"):
        raise BraidError(f"target must be 'alpha' or 'beta', not {target!r}")
    # Positive braid sending punctures 1, 2, 3 to i, j, k with the arcs kept above.
    g = BraidWord(n, Word(_carry(1, i) + _carry(2, j) + _carry(3, k)))
    if target == "beta":
        g = ~rho(i, j, n) * g
    # Right-multiplying by a power of s4 (commutes with s2 s1^-1) fixes the exponent sum.
    e = g.exponent_sum()
    return g * artin(4, n) ** (-e)
