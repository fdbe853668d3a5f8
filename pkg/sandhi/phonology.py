"""
Romanized Tamil alphabet and the phoneme-level view of words.

Uppercase marks a long vowel or a retroflex consonant; the multigraphs
ng, nj, ai, au, zh and n2 are resolved by longest match, so every token
corresponds to exactly one Tamil sound unit.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence

from .exceptions import NotAConsonant, NotAVowel, UnknownSymbol


class Kind(str, Enum):
    VOWEL = 'vowel'
    CONSONANT = 'consonant'


class Frontness(str, Enum):
    FRONT = 'front'
    BACK = 'back'


class Length(str, Enum):
    SHORT = 'short'
    LONG = 'long'
    DIPHTHONG = 'diphthong'


class Manner(str, Enum):
    PLOSIVE = 'plosive'
    NASAL = 'nasal'
    MEDIAL = 'medial'


@dataclass(frozen=True)
class VowelClass:
    frontness: Frontness
    length: Length


@dataclass(frozen=True)
class Phoneme:
    symbol: str
    kind: Kind

    @property
    def is_vowel(self):
        return self.kind is Kind.VOWEL

    @property
    def is_consonant(self):
        return self.kind is Kind.CONSONANT

    def __str__(self):
        return self.symbol


# `au` is filed with the back vowels: it never conditions the y-glide.
VOWELS = {
    'a': VowelClass(Frontness.BACK, Length.SHORT),
    'A': VowelClass(Frontness.BACK, Length.LONG),
    'i': VowelClass(Frontness.FRONT, Length.SHORT),
    'I': VowelClass(Frontness.FRONT, Length.LONG),
    'u': VowelClass(Frontness.BACK, Length.SHORT),
    'U': VowelClass(Frontness.BACK, Length.LONG),
    'e': VowelClass(Frontness.FRONT, Length.SHORT),
    'E': VowelClass(Frontness.FRONT, Length.LONG),
    'ai': VowelClass(Frontness.FRONT, Length.DIPHTHONG),
    'o': VowelClass(Frontness.BACK, Length.SHORT),
    'O': VowelClass(Frontness.BACK, Length.LONG),
    'au': VowelClass(Frontness.BACK, Length.DIPHTHONG),
}

CONSONANTS = {
    'k': Manner.PLOSIVE,
    'ng': Manner.NASAL,
    'c': Manner.PLOSIVE,
    'nj': Manner.NASAL,
    'T': Manner.PLOSIVE,
    'N': Manner.NASAL,
    't': Manner.PLOSIVE,
    'n': Manner.NASAL,
    'p': Manner.PLOSIVE,
    'm': Manner.NASAL,
    'y': Manner.MEDIAL,
    'r': Manner.MEDIAL,
    'l': Manner.MEDIAL,
    'v': Manner.MEDIAL,
    'zh': Manner.MEDIAL,
    'L': Manner.MEDIAL,
    'R': Manner.PLOSIVE,
    'n2': Manner.NASAL,
}

PHONEMES = {
    **{symbol: Phoneme(symbol, Kind.VOWEL) for symbol in VOWELS},
    **{symbol: Phoneme(symbol, Kind.CONSONANT) for symbol in CONSONANTS},
}

# Longest tokens first so that multigraphs win over their prefixes.
_TOKENS = sorted(PHONEMES, key=lambda s: (-len(s), s))
_MAX_TOKEN = max(len(s) for s in PHONEMES)


@dataclass(frozen=True)
class Word:
    """A non-empty sequence of phonemes."""

    phonemes: tuple[Phoneme, ...]

    def __post_init__(self):
        if not self.phonemes:
            raise ValueError('a word needs at least one phoneme')

    @classmethod
    def from_symbols(cls, symbols: Iterable[str]) -> 'Word':
        try:
            return cls(tuple(PHONEMES[s] for s in symbols))
        except KeyError as exc:
            raise UnknownSymbol(str(exc.args[0]), 0) from None

    @property
    def symbols(self) -> tuple[str, ...]:
        return tuple(p.symbol for p in self.phonemes)

    @property
    def last(self) -> Phoneme:
        return self.phonemes[-1]

    @property
    def first(self) -> Phoneme:
        return self.phonemes[0]

    def __len__(self):
        return len(self.phonemes)

    def __iter__(self) -> Iterator[Phoneme]:
        return iter(self.phonemes)

    def __getitem__(self, index):
        return self.phonemes[index]

    def __add__(self, other: 'Word') -> 'Word':
        return Word(self.phonemes + other.phonemes)

    def __str__(self):
        return render(self)


def tokenize(text: str, source=None, line=None) -> Word:
    """Split romanized text into phonemes by longest match.

    Raises UnknownSymbol at the first position no inventory token matches.
    """
    if not text:
        raise UnknownSymbol(text, 0, source, line)
    phonemes = []
    position = 0
    while position < len(text):
        window = text[position:position + _MAX_TOKEN]
        for token in _TOKENS:
            if window.startswith(token):
                phonemes.append(PHONEMES[token])
                position += len(token)
                break
        else:
            raise UnknownSymbol(text, position, source, line)
    return Word(tuple(phonemes))


def render(word: Word | Sequence[Phoneme]) -> str:
    return ''.join(p.symbol for p in word)


def phoneme(symbol: str) -> Phoneme:
    try:
        return PHONEMES[symbol]
    except KeyError:
        raise UnknownSymbol(symbol, 0) from None


def vowel_class(p: Phoneme) -> VowelClass:
    if not p.is_vowel:
        raise NotAVowel(p.symbol)
    return VOWELS[p.symbol]


def manner(p: Phoneme) -> Manner:
    if not p.is_consonant:
        raise NotAConsonant(p.symbol)
    return CONSONANTS[p.symbol]


def is_plosive(p: Phoneme) -> bool:
    return manner(p) is Manner.PLOSIVE


def is_front(p: Phoneme) -> bool:
    return vowel_class(p).frontness is Frontness.FRONT


def is_short(p: Phoneme) -> bool:
    return vowel_class(p).length is Length.SHORT


def syllable_count(word: Word) -> int:
    return sum(1 for p in word if p.is_vowel)


def syllable_shape(word: Word) -> str:
    """C/V skeleton of a word; long vowels and diphthongs are written `V:`.

    >>> syllable_shape(tokenize('kal')), syllable_shape(tokenize('kAl'))
    ('CVC', 'CV:C')
    """
    parts = []
    for p in word:
        if p.is_consonant:
            parts.append('C')
        elif is_short(p):
            parts.append('V')
        else:
            parts.append('V:')
    return ''.join(parts)


def describe(p: Phoneme) -> str:
    """Feature summary used by `dump-alphabet`."""
    if p.is_vowel:
        cls = VOWELS[p.symbol]
        return f'{cls.frontness.value} {cls.length.value}'
    return CONSONANTS[p.symbol].value


def alphabet() -> list[Phoneme]:
    """The inventory in its conventional order: vowels, then consonants."""
    return [PHONEMES[s] for s in (*VOWELS, *CONSONANTS)]
