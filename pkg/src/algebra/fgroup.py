"""
Free group word algebra.

Words are tuples of nonzero integers: ``k`` stands for the generator a_k and
``-k`` for its inverse. Group operations run on sympy ``FreeGroup`` elements
and come back as freely reduced tuples, so tuple equality is equality in the
free group.
"""
import itertools
import operator
import random
import re
from functools import lru_cache, reduce
from typing import Dict, Iterable, List, NamedTuple, Optional, Tuple

from sympy.combinatorics.free_groups import FreeGroup, FreeGroupElement, free_group

from ..utils.errors import ParseError, TrivialInput
from ..utils.logging import get_logger


logger = get_logger(__name__)

Word = Tuple[int, ...]
CyclicWord = Tuple[int, ...]

IDENTITY: Word = ()

_TOKEN = re.compile(r"^a(\d+)(?:\^(-?\d+))?$")
_LETTERS = re.compile(r"^[a-zA-Z]+$")


class ConjugacyWitness(NamedTuple):
    """One conjugator ``base`` with base·u·base⁻¹ = v, and the primitive root of u.

    The full conjugator set is { base·rootᵏ : k ∈ ℤ }.
    """
    base: Word
    root: Word


@lru_cache(maxsize=None)
def _group(rank: int) -> FreeGroup:
    group, *_ = free_group(", ".join(f"a{index}" for index in range(1, rank + 1)))
    return group


@lru_cache(maxsize=None)
def _symbol_index(rank: int) -> Dict[object, int]:
    return {symbol: index + 1 for index, symbol in enumerate(_group(rank).symbols)}


def _rank(*words: Iterable[int]) -> int:
    return max((abs(letter) for word in words for letter in word), default=1)


def _product(elements: Iterable[FreeGroupElement], rank: int) -> FreeGroupElement:
    """Multiply pairwise so long products stay near-linear."""
    layer = list(elements)
    if not layer:
        return _group(rank).identity
    while len(layer) > 1:
        layer = [reduce(operator.mul, layer[i:i + 2]) for i in range(0, len(layer), 2)]
    return layer[0]


def to_element(word: Iterable[int], rank: int) -> FreeGroupElement:
    """The sympy element of F_rank spelled by ``word``."""
    generators = _group(rank).generators
    syllables = []
    for letter, run in itertools.groupby(word):
        count = sum(1 for _ in run)
        syllables.append(generators[abs(letter) - 1] ** (count if letter > 0 else -count))
    return _product(syllables, rank)


def from_element(element: FreeGroupElement) -> Word:
    """Tuple form of a sympy free group element."""
    index = _symbol_index(element.group.rank)
    letters: List[int] = []
    for symbol, exponent in element.array_form:
        letter = index[symbol] if exponent > 0 else -index[symbol]
        letters.extend([letter] * abs(exponent))
    return tuple(letters)


def letter_key(letter: int) -> Tuple[int, int]:
    """Total order a1 < a1⁻¹ < a2 < a2⁻¹ < ..."""
    return (abs(letter), 0 if letter > 0 else 1)


def word_key(word: Word) -> Tuple[Tuple[int, int], ...]:
    return tuple(letter_key(letter) for letter in word)


def normalize(raw: Iterable[int]) -> Word:
    """Freely reduce a sequence of signed generator indices."""
    letters = tuple(raw)
    if 0 in letters:
        raise ParseError("generator indices start at 1")
    if not letters:
        return IDENTITY
    return from_element(to_element(letters, _rank(letters)))


def concat(*words: Word) -> Word:
    """Product of words in the free group."""
    rank = _rank(*words)
    return from_element(_product((to_element(word, rank) for word in words), rank))


def invert(word: Word) -> Word:
    return from_element(to_element(word, _rank(word)).inverse())


def power(word: Word, exponent: int) -> Word:
    """word raised to an integer exponent."""
    return from_element(to_element(word, _rank(word)) ** exponent)


def conjugate(g: Word, word: Word) -> Word:
    """g·word·g⁻¹"""
    rank = _rank(g, word)
    element = to_element(g, rank)
    return from_element(element * to_element(word, rank) * element.inverse())


def is_cyclically_reduced(word: Word) -> bool:
    return to_element(word, _rank(word)).is_cyclically_reduced()


@lru_cache(maxsize=4096)
def canonical_rotation(word: Word) -> Tuple[Word, int]:
    """Lexicographically least rotation of a cyclically reduced word and its offset."""
    if not word:
        return word, 0
    doubled = word + word
    n = len(word)
    best = min(range(n), key=lambda r: word_key(doubled[r:r + n]))
    return doubled[best:best + n], best


@lru_cache(maxsize=4096)
def _cyclic_reduce(word: Word) -> Tuple[CyclicWord, Word]:
    rank = _rank(word)
    middle, removed = to_element(word, rank).cyclic_reduction(removed=True)
    core, offset = canonical_rotation(from_element(middle))
    # middle = P·core·P⁻¹ for the rotation prefix P
    rotated = from_element(middle)[:offset]
    shell = from_element(removed * to_element(rotated, rank))
    return core, shell


def cyclic_reduce(word: Word) -> Tuple[CyclicWord, Word]:
    """Split ``word`` as shell·core·shell⁻¹ with ``core`` canonical and cyclically reduced."""
    return _cyclic_reduce(normalize(word))


def conjugacy_class(word: Word) -> CyclicWord:
    """Canonical representative of the conjugacy class of ``word``."""
    return cyclic_reduce(word)[0]


def smallest_period(core: CyclicWord) -> int:
    n = len(core)
    for d in range(1, n + 1):
        if n % d == 0 and core[d:] + core[:d] == core:
            return d
    return n


@lru_cache(maxsize=4096)
def _primitive_root(word: Word) -> Tuple[Word, int]:
    core, shell = _cyclic_reduce(word)
    d = smallest_period(core)
    return conjugate(shell, core[:d]), len(core) // d


def primitive_root(word: Word) -> Tuple[Word, int]:
    """Return (root, e) with word = root^e, e ≥ 1 and root not a proper power."""
    word = normalize(word)
    if not word:
        raise TrivialInput("primitive_root needs a nontrivial word")
    return _primitive_root(word)


def conjugator(u: Word, v: Word) -> Optional[ConjugacyWitness]:
    """A witness c with c·u·c⁻¹ = v, or None when u and v are not conjugate."""
    u, v = normalize(u), normalize(v)
    if not u or not v:
        raise TrivialInput("conjugator needs nontrivial words")
    core_u, shell_u = _cyclic_reduce(u)
    core_v, shell_v = _cyclic_reduce(v)
    if core_u != core_v:
        return None
    base = concat(shell_v, invert(shell_u))
    root, _ = _primitive_root(u)
    return ConjugacyWitness(base=base, root=root)


def power_exponent(z: Word, root: Word) -> Optional[int]:
    """n with z = rootⁿ, for a primitive ``root``; None if z is not a power of it.

    Conjugating by the shell of ``root`` turns the question into whether z is
    a plain repetition of the cyclic core, which is a linear comparison.
    """
    z = normalize(z)
    if not z:
        return 0
    core, shell = cyclic_reduce(root)
    if not core:
        return None
    inner = concat(invert(shell), z, shell)
    count, rest = divmod(len(inner), len(core))
    if rest:
        return None
    if inner == core * count:
        return count
    if inner == invert(core) * count:
        return -count
    return None


def shares_root(u: Word, v: Word) -> bool:
    """True when the primitive roots of u and v are conjugate or inverse-conjugate."""
    root_u = conjugacy_class(primitive_root(u)[0])
    root_v, _ = primitive_root(v)
    return root_u in (conjugacy_class(root_v), conjugacy_class(invert(root_v)))


def power_conjugation_solve(w: Word, u: Word, v: Word) -> Optional[int]:
    """Some i with wⁱ·u·w⁻ⁱ = v, or None.

    The conjugators of u onto v form the coset c₀·⟨r⟩ with r the primitive
    root of u, so the question is whether a power of w lands in that coset.
    """
    w, u, v = normalize(w), normalize(u), normalize(v)
    if not w or not u or not v:
        raise TrivialInput("power_conjugation_solve needs nontrivial words")
    if u == v:
        return 0
    witness = conjugator(u, v)
    if witness is None:
        return None
    base, root_u = witness
    root_w, exponent_w = primitive_root(w)
    if root_w in (root_u, invert(root_u)):
        # powers of w centralize u, and u != v
        return None

    core_w, shell_w = cyclic_reduce(root_w)
    core_u, shell_u = cyclic_reduce(root_u)
    bound = (
        len(base) + len(root_u) + len(w) + 4
        + 2 * (len(core_w) + len(core_u))
        + 2 * (len(shell_w) + len(shell_u))
    )
    logger.debug(
        "Searching conjugator coset",
        extra={"extra_data": {"bound": bound, "base_length": len(base)}}
    )
    rank = _rank(base, root_u, root_w)
    step = to_element(root_u, rank)
    # base·root_uʲ for j = 0, 1, 2, ... and j = -1, -2, ...
    up = to_element(base, rank)
    down = up * step.inverse()
    for _ in range(bound + 1):
        for candidate in (up, down):
            n = power_exponent(from_element(candidate), root_w)
            if n is not None and n % exponent_w == 0:
                return n // exponent_w
        up, down = up * step, down * step.inverse()
    return None


def abelianization(word: Word, rank: int) -> List[int]:
    """Exponent sum of each generator."""
    counts = [0] * rank
    for letter in word:
        counts[abs(letter) - 1] += 1 if letter > 0 else -1
    return counts


def rotation(cyclic: CyclicWord, position: int) -> Word:
    """The cyclic word read starting at ``position``."""
    position %= len(cyclic)
    return cyclic[position:] + cyclic[:position]


def parse_word(text: str) -> Word:
    """Parse ``aBB`` style letters or ``a1 a2^-1`` tokens into a reduced word."""
    stripped = text.strip()
    if stripped in ("", "1"):
        return IDENTITY
    tokens = stripped.split()
    if all(_LETTERS.match(token) for token in tokens):
        letters = []
        for char in "".join(tokens):
            index = ord(char.lower()) - ord("a") + 1
            letters.append(index if char.islower() else -index)
        return normalize(letters)

    letters = []
    for token in tokens:
        match = _TOKEN.match(token)
        if not match:
            raise ParseError(f"cannot parse word token {token!r}", details={"word": text})
        index = int(match.group(1))
        exponent = int(match.group(2)) if match.group(2) is not None else 1
        if index < 1:
            raise ParseError(f"generator index must be at least 1 in {token!r}", details={"word": text})
        sign = 1 if exponent > 0 else -1
        letters.extend([sign * index] * abs(exponent))
    return normalize(letters)


def format_letter(letter: int) -> str:
    index = abs(letter)
    if index <= 26:
        char = chr(ord("a") + index - 1)
        return char if letter > 0 else char.upper()
    return f"a{index}" if letter > 0 else f"a{index}^-1"


def format_word(word: Word) -> str:
    """Compact letter form; ``1`` for the identity."""
    if not word:
        return "1"
    if all(abs(letter) <= 26 for letter in word):
        return "".join(format_letter(letter) for letter in word)
    return " ".join(format_letter(letter) for letter in word)


def random_word(rng: random.Random, rank: int, max_length: int, min_length: int = 1) -> Word:
    """A uniformly grown freely reduced word with length in [min_length, max_length]."""
    length = rng.randint(min_length, max_length)
    letters: List[int] = []
    while len(letters) < length:
        letter = rng.choice([i for i in range(1, rank + 1)] + [-i for i in range(1, rank + 1)])
        if letters and letters[-1] == -letter:
            continue
        letters.append(letter)
    return tuple(letters)


def random_cyclic_word(rng: random.Random, rank: int, max_length: int) -> CyclicWord:
    """A random nontrivial canonical cyclic word of length at most ``max_length``."""
    while True:
        core = conjugacy_class(random_word(rng, rank, max_length))
        if core:
            return core
