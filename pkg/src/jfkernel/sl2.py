"""Integer SL2 matrices, generator words, and word decomposition.

Words are sequences of named generators with integer powers.  The alphabet
in use depends on context: {S, T} for the full modular group, {-I, T, ST2S}
for the index-2 congruence subgroup, and {T, S T^{ma} S} blocks for sampling
the level-m subgroup.  Every letter evaluates to an integer matrix with
determinant one, so a word can always be collapsed with
:meth:`GroupWord.to_matrix`.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class SL2Mat:
    """A 2x2 integer matrix with determinant 1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"determinant is not 1: {self}")

    def __matmul__(self, other: "SL2Mat") -> "SL2Mat":
        return SL2Mat(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> "SL2Mat":
        return SL2Mat(-self.a, -self.b, -self.c, -self.d)

    def inv(self) -> "SL2Mat":
        return SL2Mat(self.d, -self.b, -self.c, self.a)

    def __pow__(self, n: int) -> "SL2Mat":
        if n < 0:
            return self.inv() ** (-n)
        out = I2
        base = self
        while n:
            if n & 1:
                out = out @ base
            base = base @ base
            n >>= 1
        return out

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def max_entry(self) -> int:
        return max(abs(x) for x in self.entries())

    def act(self, tau: complex) -> complex:
        return (self.a * tau + self.b) / (self.c * tau + self.d)

    def act_jacobi(self, tau: complex, z: complex):
        den = self.c * tau + self.d
        return (self.a * tau + self.b) / den, z / den

    def __str__(self):
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


I2 = SL2Mat(1, 0, 0, 1)
S = SL2Mat(0, -1, 1, 0)
T = SL2Mat(1, 1, 0, 1)
MINUS_I2 = SL2Mat(-1, 0, 0, -1)
ST2S = S @ (T ** 2) @ S  # [[-1,0],[2,-1]], generator of the level-2 subgroup

GENERATOR_MATRICES = {"S": S, "T": T, "-I": MINUS_I2, "ST2S": ST2S}

GAMMA0_2_ALPHABET = ("-I", "T", "ST2S")
SL2_ALPHABET = ("S", "T")


class WordAlphabetError(ValueError):
    """A word uses a letter outside the supported alphabet."""


@dataclass(frozen=True)
class GroupWord:
    """A product of named generators with integer powers."""

    letters: tuple[tuple[str, int], ...]

    @staticmethod
    def of(*letters) -> "GroupWord":
        return GroupWord(tuple((name, int(p)) for name, p in letters if p))

    @staticmethod
    def parse(text: str) -> "GroupWord":
        """Parse "S T^2 -I ST2S^-1" style words (plain letter means power 1)."""
        letters = []
        for token in text.split():
            if "^" in token:
                name, p = token.split("^", 1)
                power = int(p)
            else:
                name, power = token, 1
            if name not in GENERATOR_MATRICES:
                raise WordAlphabetError(f"unknown generator {name!r}")
            if power:
                letters.append((name, power))
        return GroupWord(tuple(letters))

    def __str__(self):
        return " ".join(n if p == 1 else f"{n}^{p}" for n, p in self.letters) or "<empty>"

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(self.letters + other.letters)

    def to_matrix(self) -> SL2Mat:
        out = I2
        for name, power in self.letters:
            try:
                g = GENERATOR_MATRICES[name]
            except KeyError:
                raise WordAlphabetError(f"unknown generator {name!r}") from None
            out = out @ (g ** power)
        return out

    def in_alphabet(self, alphabet) -> bool:
        return all(name in alphabet for name, _ in self.letters)


def sl2_word(gamma: SL2Mat) -> GroupWord:
    """Express gamma as a word in S and T (continued-fraction reduction).

    The returned word evaluates back to gamma exactly.
    """
    letters: list[tuple[str, int]] = []
    g = gamma
    # Reduce the first column by nearest-integer division; each step records
    # g = T^q S g', shrinking |c| at least by half.
    while g.c != 0:
        q = math.floor(Fraction(g.a, g.c) + Fraction(1, 2))
        if q:
            letters.append(("T", q))
        letters.append(("S", 1))
        # g' = S^{-1} T^{-q} g
        g = (S.inv()) @ (T ** (-q)) @ g
    if g.a == 1:
        if g.b:
            letters.append(("T", g.b))
    else:
        # g = -T^{-b}: use S^2 = -I
        letters.append(("S", 2))
        if g.b:
            letters.append(("T", -g.b))
    word = GroupWord(tuple(letters))
    if word.to_matrix() != gamma:
        raise AssertionError(f"word reduction failed for {gamma}")
    return word


def gamma_dilate(gamma: SL2Mat, m: int) -> SL2Mat:
    """The level-m conjugate [[a, bm], [c/m, d]]; requires m | c."""
    if gamma.c % m:
        raise ValueError(f"lower-left entry {gamma.c} is not divisible by {m}")
    return SL2Mat(gamma.a, gamma.b * m, gamma.c // m, gamma.d)


# ---------------------------------------------------------------------------
# Random word samplers (used by the property suites)


def random_gamma0_2_word(rng: random.Random, max_len: int = 12,
                         entry_cap: int | None = 300) -> GroupWord:
    """A random word over {-I, T, ST2S} of length <= max_len.

    With an entry cap, resamples until the evaluated matrix has all entries
    bounded; this keeps downstream numeric evaluation well-conditioned.
    """
    while True:
        length = rng.randint(1, max_len)
        letters = []
        for _ in range(length):
            name = rng.choice(GAMMA0_2_ALPHABET)
            power = rng.choice([-2, -1, 1, 2])
            letters.append((name, power))
        word = GroupWord(tuple(letters))
        if entry_cap is None or word.to_matrix().max_entry() <= entry_cap:
            return word


def random_sl2_word(rng: random.Random, max_len: int = 10,
                    entry_cap: int | None = 300) -> GroupWord:
    while True:
        length = rng.randint(1, max_len)
        letters = []
        for _ in range(length):
            name = rng.choice(SL2_ALPHABET)
            power = rng.choice([-2, -1, 1, 2]) if name == "T" else 1
            letters.append((name, power))
        word = GroupWord(tuple(letters))
        if entry_cap is None or word.to_matrix().max_entry() <= entry_cap:
            return word


def random_gamma0_m_word(rng: random.Random, m: int, max_blocks: int = 4,
                         entry_cap: int | None = 4000):
    """A random element of the level-m subgroup as (word, dilated word).

    Blocks are T^b and S T^{m a} S; the dilated word replaces them with
    T^{b m} and S T^{a} S, realising the gamma -> gamma_m map letter by
    letter.
    """
    while True:
        blocks = rng.randint(1, max_blocks)
        letters: list[tuple[str, int]] = []
        dilated: list[tuple[str, int]] = []
        for k in range(blocks):
            if k % 2 == 0:
                b = rng.randint(-3, 3)
                if b:
                    letters.append(("T", b))
                    dilated.append(("T", b * m))
            else:
                a = rng.randint(-2, 2)
                if a:
                    letters.extend([("S", 1), ("T", m * a), ("S", 1)])
                    dilated.extend([("S", 1), ("T", a), ("S", 1)])
        word = GroupWord(tuple(letters))
        word_m = GroupWord(tuple(dilated))
        g = word.to_matrix()
        if g.c % m:
            continue
        if entry_cap is not None and g.max_entry() > entry_cap:
            continue
        if gamma_dilate(g, m) != word_m.to_matrix():
            raise AssertionError("dilated word mismatch")
        return word, word_m
