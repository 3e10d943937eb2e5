"""Weyl group bookkeeping for Lie types A, B and C.

Conventions.  Type ``A`` of rank ``r`` acts on ``{1, ..., r+1}`` by
permutations; types ``B`` and ``C`` of rank ``n`` act by signed permutations
of ``{1, ..., n}``.  The simple reflection ``s_i`` with ``i < n`` swaps
positions ``i`` and ``i+1`` of the one-line notation; in types B/C the last
generator ``s_n`` flips the sign of the last entry.  The longest element is
the order-reversing permutation in type A and minus the identity in types
B/C.  B_n and C_n share one Weyl group, so their reduced words coincide as
letter sequences; the types differ only through `cartan_pairing`.

Letters are 1-based generator indices.  Words serialize as comma-separated
integers, Lie types as strings like ``"A3"`` or ``"C2"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

__all__ = [
    "LieType",
    "ReducedWord",
    "Weight",
    "longest_length",
    "is_reduced",
    "enumerate_reduced_words",
    "count_reduced_words",
    "lift",
    "contract",
    "cartan_pairing",
    "cartan_matrix",
    "gt_adapted_word",
    "braid_variant_word",
    "EnumerationCapExceeded",
]

_FAMILIES = ("A", "B", "C")

DEFAULT_WORD_CAP = 10_000_000


class EnumerationCapExceeded(RuntimeError):
    """Raised when a reduced-word enumeration would exceed its cap."""


@dataclass(frozen=True, order=True)
class LieType:
    """A simple Lie type restricted to the families A, B, C."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in _FAMILIES:
            raise ValueError(f"unsupported family {self.family!r}; expected one of {_FAMILIES}")
        min_rank = 1 if self.family == "A" else 2
        if self.rank < min_rank:
            raise ValueError(f"rank {self.rank} too small for type {self.family}")

    @classmethod
    def parse(cls, text: str) -> "LieType":
        """Parse strings like ``"A3"``, ``"B2"``, ``"C3"``."""
        text = text.strip()
        if len(text) < 2 or text[0].upper() not in _FAMILIES:
            raise ValueError(f"cannot parse Lie type from {text!r}")
        return cls(text[0].upper(), int(text[1:]))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def is_doubled(self) -> bool:
        """Whether the type folds from a doubled type-A diagram (B or C)."""
        return self.family in ("B", "C")


def longest_length(t: LieType) -> int:
    """Length of the longest Weyl element: m(m-1)/2 in A_{m-1}, n^2 in B_n/C_n."""
    if t.family == "A":
        m = t.rank + 1
        return m * (m - 1) // 2
    return t.rank * t.rank


# One-line notation.  Type A: a tuple with entries 1..m.  Types B/C: a tuple
# with entries +-1..+-n.  Multiplication on the right by s_i permutes
# positions, so w*s_i differs from w in positions i, i+1 (or flips the last
# sign for s_n).


def _identity(t: LieType) -> tuple[int, ...]:
    size = t.rank + 1 if t.family == "A" else t.rank
    return tuple(range(1, size + 1))


def _w0(t: LieType) -> tuple[int, ...]:
    if t.family == "A":
        return tuple(range(t.rank + 1, 0, -1))
    return tuple(-i for i in range(1, t.rank + 1))


def _apply(t: LieType, w: tuple[int, ...], letter: int) -> tuple[int, ...]:
    """Right-multiply the one-line notation ``w`` by the generator ``letter``."""
    if t.family == "A" or letter < t.rank:
        i = letter - 1
        return w[:i] + (w[i + 1], w[i]) + w[i + 2 :]
    return w[:-1] + (-w[-1],)


def _is_ascent(t: LieType, w: tuple[int, ...], letter: int) -> bool:
    """Whether right multiplication by ``letter`` increases the length."""
    if t.family == "A":
        return w[letter - 1] < w[letter]
    if letter == t.rank:
        return w[-1] > 0
    # Signed entries compare in the mirror order 1 < ... < n < -n < ... < -1,
    # the left-to-right order of wire positions on a symplectic diagram.
    n = t.rank
    key = lambda x: x if x > 0 else 2 * n + 1 + x
    return key(w[letter - 1]) < key(w[letter])


def _check_letters(t: LieType, letters: Sequence[int]) -> None:
    for x in letters:
        if not 1 <= x <= t.rank:
            raise ValueError(f"letter {x} out of range 1..{t.rank} for type {t}")


def is_reduced(t: LieType, letters: Sequence[int]) -> bool:
    """Whether ``letters`` is a reduced word for the longest element of ``t``.

    The product of the simple reflections must equal the longest element and
    the word must have the longest length; together these force reducedness.
    """
    _check_letters(t, letters)
    if len(letters) != longest_length(t):
        return False
    w = _identity(t)
    for x in letters:
        w = _apply(t, w, x)
    return w == _w0(t)


@dataclass(frozen=True)
class ReducedWord:
    """A reduced word for the longest Weyl element of a fixed Lie type."""

    lie_type: LieType
    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(self.letters))
        if not is_reduced(self.lie_type, self.letters):
            raise ValueError(
                f"{','.join(map(str, self.letters))} is not a reduced word "
                f"for the longest element of {self.lie_type}"
            )

    @classmethod
    def parse(cls, type_text: str, word_text: str) -> "ReducedWord":
        t = LieType.parse(type_text)
        letters = tuple(int(x) for x in word_text.replace(" ", "").split(",") if x)
        return cls(t, letters)

    def __str__(self) -> str:
        return ",".join(map(str, self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def rank(self) -> int:
        return self.lie_type.rank


def enumerate_reduced_words(t: LieType, cap: int = DEFAULT_WORD_CAP) -> Iterator[ReducedWord]:
    """Yield every reduced word for the longest element, lexicographically.

    Depth-first search over prefixes, extending only by letters that
    lengthen the product.  Any reduced prefix extends to a reduced word of
    the longest element, so the search has no dead ends.  Raises
    `EnumerationCapExceeded` once more than ``cap`` words would be emitted.
    """
    target = longest_length(t)
    emitted = 0
    stack_word: list[int] = []

    def walk(w: tuple[int, ...]) -> Iterator[ReducedWord]:
        nonlocal emitted
        if len(stack_word) == target:
            emitted += 1
            if emitted > cap:
                raise EnumerationCapExceeded(
                    f"more than {cap} reduced words for {t}; raise the cap to enumerate"
                )
            yield ReducedWord(t, tuple(stack_word))
            return
        for letter in range(1, t.rank + 1):
            if _is_ascent(t, w, letter):
                stack_word.append(letter)
                yield from walk(_apply(t, w, letter))
                stack_word.pop()

    return walk(_identity(t))


def count_reduced_words(t: LieType, cap: int = DEFAULT_WORD_CAP) -> int:
    """Number of reduced words of the longest element (subject to ``cap``)."""
    return sum(1 for _ in enumerate_reduced_words(t, cap=cap))


def lift(w: ReducedWord) -> ReducedWord:
    """Unfold a type-B/C word of rank n into a type-A word of rank 2n-1.

    Each letter ``i < n`` expands to the pair ``(i, 2n-i)``; the letter
    ``n`` stays a single letter.  The result is reduced of length n(2n-1).
    """
    if not w.lie_type.is_doubled:
        raise ValueError("lift applies to words of type B or C")
    n = w.rank
    out: list[int] = []
    for x in w.letters:
        if x == n:
            out.append(n)
        else:
            out.extend((x, 2 * n - x))
    return ReducedWord(LieType("A", 2 * n - 1), tuple(out))


def _unlift(letters: Sequence[int], n: int) -> tuple[int, ...]:
    """Inverse of `lift`: collapse pairs (i, 2n-i) back to single letters."""
    out: list[int] = []
    i = 0
    while i < len(letters):
        x = letters[i]
        if x == n:
            out.append(n)
            i += 1
        else:
            if x >= n or i + 1 >= len(letters) or letters[i + 1] != 2 * n - x:
                raise ValueError("letter sequence is not a lifted word")
            out.append(x)
            i += 2
    return tuple(out)


def contract(w: ReducedWord) -> ReducedWord:
    """Drop the outermost wire pair of a type-C word, lowering the rank by one.

    Implemented on the lifted type-A word: delete the first and last wires
    of its wiring diagram, reread the surviving crossings as a type-A word
    of rank 2n-3, and collapse it back to a type-C word of rank n-1.
    """
    if not w.lie_type.is_doubled:
        raise ValueError("contract applies to words of type B or C")
    n = w.rank
    if n < 3:
        raise ValueError("contract needs rank at least 3")
    m = 2 * n
    lifted = lift(w)
    arr = list(range(1, m + 1))  # wires left to right, top arrangement first
    out: list[int] = []
    for c in lifted.letters:
        a, b = arr[c - 1], arr[c]
        if a not in (1, m) and b not in (1, m):
            col = sum(1 for x in arr[: c - 1] if x not in (1, m)) + 1
            out.append(col)
        arr[c - 1], arr[c] = b, a
    return ReducedWord(LieType(w.lie_type.family, n - 1), _unlift(out, n - 1))


def cartan_pairing(t: LieType, i: int, j: int) -> int:
    """The integer pairing of the ``i``-th simple root with the ``j``-th coroot.

    Diagonal entries are 2, neighbours on the Dynkin diagram give -1, except
    for the doubled bond: in type C_n the pairing of the last root with the
    next-to-last coroot is -2, and type B_n is the transpose of type C_n.
    """
    n = t.rank
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"indices ({i}, {j}) out of range 1..{n}")
    if i == j:
        return 2
    if abs(i - j) != 1:
        return 0
    if t.family == "C" and i == n:
        return -2
    if t.family == "B" and j == n:
        return -2
    return -1


def cartan_matrix(t: LieType) -> tuple[tuple[int, ...], ...]:
    n = t.rank
    return tuple(tuple(cartan_pairing(t, i, j) for j in range(1, n + 1)) for i in range(1, n + 1))


@dataclass(frozen=True)
class Weight:
    """An integral weight written in fundamental-weight coordinates."""

    lie_type: LieType
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if len(self.coeffs) != self.lie_type.rank:
            raise ValueError("weight needs one coefficient per fundamental weight")

    @classmethod
    def rho(cls, t: LieType) -> "Weight":
        """The sum of the fundamental weights."""
        return cls(t, (1,) * t.rank)

    @classmethod
    def zero(cls, t: LieType) -> "Weight":
        return cls(t, (0,) * t.rank)

    @classmethod
    def parse(cls, t: LieType, text: str) -> "Weight":
        text = text.strip().lower()
        if text == "rho":
            return cls.rho(t)
        if text == "0":
            return cls.zero(t)
        return cls(t, tuple(int(x) for x in text.split(",")))

    @property
    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    @property
    def is_regular(self) -> bool:
        return all(c > 0 for c in self.coeffs)

    def __str__(self) -> str:
        return ",".join(map(str, self.coeffs))


def gt_adapted_word(n: int) -> ReducedWord:
    """The nested type-C word (n, n-1 n n-1, ..., 1 2 ... n ... 2 1).

    Block k (from the inside out) runs k, k+1, ..., n, ..., k+1, k; its
    string polytope realizes the symplectic Gelfand-Tsetlin polytope.
    """
    letters: list[int] = []
    for k in range(n, 0, -1):
        letters.extend(range(k, n + 1))
        letters.extend(range(n - 1, k - 1, -1))
    return ReducedWord(LieType("C", n), tuple(letters))


def braid_variant_word(n: int) -> ReducedWord:
    """`gt_adapted_word` with a braid move applied to its first four letters."""
    w = gt_adapted_word(n).letters
    return ReducedWord(LieType("C", n), (n - 1, n, n - 1, n) + w[4:])
