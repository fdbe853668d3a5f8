"""
Synthetic noun-stem lexicon.

Stems are assembled from syllable templates that respect Tamil
phonotactics (no initial clusters, only geminate or homorganic medial
clusters, the usual word-final consonants). Each template targets one
kind of stem ending so that every junction class is represented.
"""
from __future__ import annotations

import logging

import numpy as np

from .exceptions import LexiconExhausted
from .phonology import Word

logger = logging.getLogger(__name__)

ONSETS = ('k', 'c', 't', 'n', 'p', 'm', 'v', 'y', 'nj')
SHORT_VOWELS = ('a', 'i', 'u', 'e', 'o')
LONG_VOWELS = ('A', 'I', 'U', 'E', 'O', 'ai')
FRONT_FINALS = ('i', 'I', 'e', 'E', 'ai')
BACK_FINALS = ('a', 'A', 'U', 'o', 'O')
MEDIALS = ('k', 'c', 'T', 't', 'p', 'R', 'm', 'n', 'N', 'n2', 'l', 'L', 'r', 'zh', 'y', 'v')
CLUSTERS = (
    ('k', 'k'), ('c', 'c'), ('T', 'T'), ('t', 't'), ('p', 'p'), ('R', 'R'),
    ('ng', 'k'), ('nj', 'c'), ('N', 'T'), ('n', 't'), ('m', 'p'), ('n2', 'R'),
    ('l', 'l'), ('L', 'L'), ('m', 'm'), ('n', 'n'),
)
PLOSIVES = ('k', 'c', 'T', 't', 'p', 'R')
SHORT_CODAS = ('n', 'N', 'n2', 'l', 'L', 'r', 'y', 'zh')
OTHER_CODAS = ('n', 'N', 'n2', 'r', 'y', 'zh')


class _Builder:
    def __init__(self, rng):
        self.rng = rng

    def pick(self, options):
        return options[self.rng.integers(len(options))]

    def chance(self, p):
        return self.rng.random() < p

    def vowel(self):
        return self.pick(SHORT_VOWELS) if self.chance(0.7) else self.pick(LONG_VOWELS)

    def medial(self):
        if self.chance(0.3):
            return list(self.pick(CLUSTERS))
        return [self.pick(MEDIALS)]

    def head(self, syllables):
        """Optional onset then `syllables` vowels joined by medials; ends in a vowel."""
        out = [self.pick(ONSETS)] if self.chance(0.85) else []
        out.append(self.vowel())
        for _ in range(syllables - 1):
            out.extend(self.medial())
            out.append(self.vowel())
        return out

    def syllables(self, low=1, high=3):
        return int(self.rng.integers(low, high + 1))

    # one method per ending template

    def front_vowel(self):
        return self.head(self.syllables()) + self.medial() + [self.pick(FRONT_FINALS)]

    def back_vowel(self):
        return self.head(self.syllables()) + self.medial() + [self.pick(BACK_FINALS)]

    def full_u(self):
        onset = [self.pick(ONSETS)] if self.chance(0.85) else []
        return onset + [self.pick(SHORT_VOWELS), self.pick(MEDIALS), 'u']

    def overshort_u(self):
        roll = self.rng.random()
        if roll < 0.3:
            onset = [self.pick(ONSETS)] if self.chance(0.85) else []
            return onset + [self.pick(LONG_VOWELS), self.pick(PLOSIVES), 'u']
        if roll < 0.45:
            return self.head(self.syllables()) + self.medial() + [
                self.pick(LONG_VOWELS), self.pick(PLOSIVES), 'u',
            ]
        if roll < 0.7:
            return self.head(self.syllables()) + list(self.pick(CLUSTERS)) + ['u']
        return self.head(self.syllables(2, 3)) + self.medial() + ['u']

    def am_final(self):
        if self.chance(0.1):
            return [self.pick(ONSETS), 'a', 'm']
        return self.head(self.syllables()) + self.medial() + ['a', 'm']

    def cvc_short(self):
        onset = [self.pick(ONSETS)] if self.chance(0.9) else []
        return onset + [self.pick(SHORT_VOWELS), self.pick(SHORT_CODAS)]

    def lateral_final(self):
        coda = self.pick(('l', 'L'))
        if self.chance(0.4):
            return [self.pick(ONSETS), self.pick(LONG_VOWELS), coda]
        return self.head(self.syllables()) + self.medial() + [self.vowel(), coda]

    def other_consonant(self):
        coda = self.pick(OTHER_CODAS)
        if self.chance(0.3):
            return [self.pick(ONSETS), self.pick(LONG_VOWELS), coda]
        return self.head(self.syllables()) + self.medial() + [self.vowel(), coda]


TEMPLATES = (
    ('front_vowel', 0.14),
    ('back_vowel', 0.08),
    ('full_u', 0.06),
    ('overshort_u', 0.20),
    ('am_final', 0.16),
    ('cvc_short', 0.08),
    ('lateral_final', 0.10),
    ('other_consonant', 0.18),
)


def generate_stems(count: int, seed: int = 7, max_attempts_per_stem: int = 50) -> list[Word]:
    """`count` distinct stems, deterministic for a given seed."""
    rng = np.random.default_rng(seed)
    builder = _Builder(rng)
    names = [name for name, _ in TEMPLATES]
    weights = np.array([weight for _, weight in TEMPLATES])
    weights = weights / weights.sum()

    seen = set()
    stems = []
    attempts = 0
    budget = count * max_attempts_per_stem
    while len(stems) < count and attempts < budget:
        attempts += 1
        template = names[rng.choice(len(names), p=weights)]
        symbols = getattr(builder, template)()
        stem = Word.from_symbols(symbols)
        key = str(stem)
        if key in seen:
            continue
        seen.add(key)
        stems.append(stem)
    if len(stems) < count:
        raise LexiconExhausted(count, len(stems))
    logger.info('Generated %d stems in %d attempts (seed %d)', count, attempts, seed)
    return stems


def write_stems(stems, sink, header=None):
    if header:
        sink.write(f'# {header}\n')
    for stem in stems:
        sink.write(f'{stem}\n')
