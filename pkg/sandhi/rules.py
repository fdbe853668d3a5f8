"""
Rule oracle for Tamil noun-suffix junctions.

`classify` maps a (stem, suffix) junction onto one of the eleven sandhi
classes and `apply` performs the matching surface change. The engine is
deterministic and doubles as the labeller for synthesized training data.
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum, IntEnum
from pathlib import Path

from .exceptions import (
    ClassMismatch, FormatError, InvalidTransformation, UnclassifiableStem,
)
from .phonology import (
    PHONEMES, Length, Phoneme, Word, is_front, is_plosive, is_short,
    syllable_count, tokenize, vowel_class,
)

logger = logging.getLogger(__name__)


class SandhiClass(IntEnum):
    Y_INSERTION = 1
    V_INSERTION = 2
    CONSONANT_DOUBLING = 3
    M_TO_TT = 4
    U_DELETION = 5
    U_DELETION_DOUBLING = 6
    # Shared by the case "no change" row and the first plural form.
    NO_CHANGE = 7
    PLURAL_M_TO_NG = 8
    PLURAL_K_DOUBLING = 9
    PLURAL_L_TO_R = 10
    PLURAL_LL_TO_T = 11

    @property
    def label(self):
        return self.name.lower().replace('_', '-')


CLASS_IDS = tuple(int(c) for c in SandhiClass)
NUM_CLASSES = len(CLASS_IDS)


class SuffixCategory(str, Enum):
    NOMINATIVE = 'nominative'
    ACCUSATIVE = 'accusative'
    INSTRUMENTAL = 'instrumental'
    DATIVE = 'dative'
    LOCATIVE = 'locative'
    ABLATIVE = 'ablative'
    SOCIATIVE = 'sociative'
    GENITIVE = 'genitive'
    PLURAL = 'plural'
    EUPHONIC = 'euphonic'


CASES = (
    SuffixCategory.NOMINATIVE,
    SuffixCategory.ACCUSATIVE,
    SuffixCategory.INSTRUMENTAL,
    SuffixCategory.DATIVE,
    SuffixCategory.LOCATIVE,
    SuffixCategory.ABLATIVE,
    SuffixCategory.SOCIATIVE,
    SuffixCategory.GENITIVE,
)


@dataclass(frozen=True)
class SuffixEntry:
    category: SuffixCategory
    form: Word | None
    variant_index: int = 0

    @property
    def is_plural(self):
        return self.category is SuffixCategory.PLURAL

    def __str__(self):
        return '-' + str(self.form) if self.form is not None else '(null)'


@dataclass(frozen=True)
class Junction:
    stem: Word
    suffix: SuffixEntry
    sandhi_class: SandhiClass
    surface: Word


_INVENTORY = (
    (SuffixCategory.NOMINATIVE, (None,)),
    (SuffixCategory.ACCUSATIVE, ('ai',)),
    (SuffixCategory.INSTRUMENTAL, ('Al',)),
    (SuffixCategory.DATIVE, ('ukku',)),
    (SuffixCategory.LOCATIVE, ('il',)),
    (SuffixCategory.ABLATIVE, ('iliruntu',)),
    (SuffixCategory.SOCIATIVE, ('uTan', 'oTu')),
    (SuffixCategory.GENITIVE, ('in', 'uTaiya')),
    (SuffixCategory.PLURAL, ('kaL',)),
    (SuffixCategory.EUPHONIC, ('in', 'an')),
)


def standard_suffixes() -> list[SuffixEntry]:
    """The inflectional suffix inventory, nominative first."""
    return [
        SuffixEntry(category, tokenize(form) if form else None, index)
        for category, forms in _INVENTORY
        for index, form in enumerate(forms)
    ]


def suffix(category: SuffixCategory | str, variant_index: int = 0) -> SuffixEntry:
    category = SuffixCategory(category)
    for entry in standard_suffixes():
        if entry.category is category and entry.variant_index == variant_index:
            return entry
    raise KeyError(f'{category.value} has no variant {variant_index}')


def synthesis_suffixes() -> list[SuffixEntry]:
    """First variant of every non-nominative category: the `std` synthesis set."""
    return [
        entry for entry in standard_suffixes()
        if entry.form is not None and entry.variant_index == 0
    ]


_U = PHONEMES['u']
_M = PHONEMES['m']
_L_DENTAL = PHONEMES['l']
_L_RETROFLEX = PHONEMES['L']
_LIGHT_BEFORE_PLOSIVE = {'r', 'zh', 'y'}
_KAL = tokenize('kaL')


# Both shape tests read only the syllable count and the last three
# phonemes, whatever precedes the first vowel.

def _is_light_u_stem(stem: Word) -> bool:
    # (C)V̆Cu: one short vowel and one consonant ahead of the final u
    return (
        len(stem) >= 3
        and syllable_count(stem) == 2
        and stem[-3].is_vowel and is_short(stem[-3])
        and stem[-2].is_consonant
        and stem[-1] == _U
    )


def _is_cvc_short(stem: Word) -> bool:
    return (
        len(stem) >= 2
        and syllable_count(stem) == 1
        and stem[-2].is_vowel and is_short(stem[-2])
        and stem[-1].is_consonant
    )


def _heavy_before(p: Phoneme) -> bool:
    if p.is_vowel:
        return vowel_class(p).length is not Length.SHORT
    return p.symbol in _LIGHT_BEFORE_PLOSIVE


class SandhiEngine:
    """Junction classifier with an optional lexicon of u-stem exceptions.

    `exceptions` maps a rendered stem to 'full-u' or 'overshort-u' and
    overrides the shape test for that stem only.
    """

    def __init__(self, exceptions=None):
        self.exceptions = dict(exceptions or {})

    def is_overshort_u(self, stem: Word) -> bool:
        if stem.last != _U or len(stem) < 2 or not stem[-2].is_consonant:
            return False
        override = self.exceptions.get(str(stem))
        if override is not None:
            return override == 'overshort-u'
        if syllable_count(stem) == 1:
            return False
        return not _is_light_u_stem(stem)

    def classify(self, stem: Word, suffix: SuffixEntry) -> SandhiClass:
        if suffix.form is None:
            raise ValueError('the nominative takes no junction')
        final = stem.last
        if suffix.form == _KAL:
            return self._classify_plural(stem, final)
        if suffix.form.first.is_vowel:
            return self._classify_vowel_initial(stem, final)
        raise UnclassifiableStem(stem, suffix)

    def _classify_plural(self, stem, final):
        if final == _M:
            return SandhiClass.PLURAL_M_TO_NG
        if final == _L_DENTAL:
            return SandhiClass.PLURAL_L_TO_R
        if final == _L_RETROFLEX:
            return SandhiClass.PLURAL_LL_TO_T
        if final.is_vowel and not is_front(final) and not self.is_overshort_u(stem):
            return SandhiClass.PLURAL_K_DOUBLING
        return SandhiClass.NO_CHANGE

    def _classify_vowel_initial(self, stem, final):
        if final == _M:
            return SandhiClass.M_TO_TT
        if self.is_overshort_u(stem):
            before = stem[-2]
            if (
                len(stem) >= 3
                and is_plosive(before)
                and stem[-3] != before
                and _heavy_before(stem[-3])
            ):
                return SandhiClass.U_DELETION_DOUBLING
            return SandhiClass.U_DELETION
        if final.is_vowel:
            return SandhiClass.Y_INSERTION if is_front(final) else SandhiClass.V_INSERTION
        if _is_cvc_short(stem):
            return SandhiClass.CONSONANT_DOUBLING
        return SandhiClass.NO_CHANGE

    def apply(self, stem: Word, suffix: SuffixEntry, sandhi_class) -> Word:
        sandhi_class = SandhiClass(sandhi_class)
        expected = self.classify(stem, suffix)
        if sandhi_class is not expected:
            raise ClassMismatch(stem, suffix, sandhi_class, expected)
        return transform(stem, suffix, sandhi_class)

    def join(self, stem: Word, suffix: SuffixEntry) -> Junction:
        sandhi_class = self.classify(stem, suffix)
        return Junction(stem, suffix, sandhi_class, transform(stem, suffix, sandhi_class))

    def synthesize_dataset(self, stems, suffixes) -> list[Junction]:
        """Label every (stem, suffix) pair; the nominative is skipped."""
        junctions = []
        skipped = 0
        for stem in stems:
            for entry in suffixes:
                if entry.form is None:
                    continue
                try:
                    junctions.append(self.join(stem, entry))
                except UnclassifiableStem as exc:
                    skipped += 1
                    logger.warning('Skipping %s: %s', stem, exc)
        distribution = Counter(j.sandhi_class for j in junctions)
        logger.info(
            'Synthesized %d junctions (%d skipped); class distribution: %s',
            len(junctions), skipped,
            ', '.join(f'{int(c)}={distribution[c]}' for c in SandhiClass),
        )
        return junctions


def _phonemes(*symbols):
    return tuple(PHONEMES[s] for s in symbols)


def transform(stem: Word, suffix: SuffixEntry, sandhi_class) -> Word:
    """Apply a class's surface change without consulting the oracle.

    Raises InvalidTransformation when the stem or suffix lacks what the
    class operates on.
    """
    sandhi_class = SandhiClass(sandhi_class)
    if suffix.form is None:
        raise InvalidTransformation(stem, suffix, sandhi_class, 'null suffix')
    s = stem.phonemes
    x = suffix.form.phonemes
    final = stem.last

    def fail(reason):
        raise InvalidTransformation(stem, suffix, sandhi_class, reason)

    if sandhi_class in (SandhiClass.Y_INSERTION, SandhiClass.V_INSERTION):
        if not final.is_vowel:
            fail('stem does not end in a vowel')
        glide = 'y' if sandhi_class is SandhiClass.Y_INSERTION else 'v'
        return Word(s + _phonemes(glide) + x)
    if sandhi_class is SandhiClass.CONSONANT_DOUBLING:
        if not final.is_consonant:
            fail('stem does not end in a consonant')
        return Word(s + (final,) + x)
    if sandhi_class in (SandhiClass.M_TO_TT, SandhiClass.PLURAL_M_TO_NG):
        if final != _M:
            fail('stem does not end in m')
        infix = _phonemes('t', 't') if sandhi_class is SandhiClass.M_TO_TT else _phonemes('ng')
        return Word(s[:-1] + infix + x)
    if sandhi_class in (SandhiClass.U_DELETION, SandhiClass.U_DELETION_DOUBLING):
        if final != _U or len(s) < 2 or not s[-2].is_consonant:
            fail('stem does not end in consonant + u')
        if sandhi_class is SandhiClass.U_DELETION:
            return Word(s[:-1] + x)
        return Word(s[:-1] + (s[-2],) + x)
    if sandhi_class is SandhiClass.NO_CHANGE:
        if final.is_vowel and x[0].is_vowel:
            fail('plain concatenation would join two vowels')
        return Word(s + x)
    if sandhi_class is SandhiClass.PLURAL_K_DOUBLING:
        if x[0].symbol != 'k':
            fail('suffix does not begin with k')
        return Word(s + (x[0],) + x)
    if sandhi_class is SandhiClass.PLURAL_L_TO_R:
        if final != _L_DENTAL:
            fail('stem does not end in l')
        return Word(s[:-1] + _phonemes('R') + x)
    if sandhi_class is SandhiClass.PLURAL_LL_TO_T:
        if final != _L_RETROFLEX:
            fail('stem does not end in L')
        return Word(s[:-1] + _phonemes('T') + x)
    fail('unknown class')


EXCEPTION_TAGS = ('full-u', 'overshort-u')


def load_exception_lexicon(path) -> dict[str, str]:
    """Read `stem full-u|overshort-u` lines; `#` starts a comment."""
    path = Path(path)
    lexicon = {}
    with path.open(encoding='utf-8') as handle:
        for number, raw in enumerate(handle, start=1):
            line = raw.split('#', 1)[0].strip()
            if not line:
                continue
            fields = line.split()
            if len(fields) != 2 or fields[1] not in EXCEPTION_TAGS:
                raise FormatError(
                    f'expected "<stem> full-u|overshort-u", got {line!r}',
                    line=number, source=path,
                )
            stem = tokenize(fields[0], source=path, line=number)
            lexicon[str(stem)] = fields[1]
    logger.info('Loaded %d u-stem exceptions from %s', len(lexicon), path)
    return lexicon


ORACLE = SandhiEngine()


def classify(stem: Word, suffix: SuffixEntry) -> SandhiClass:
    return ORACLE.classify(stem, suffix)


def apply(stem: Word, suffix: SuffixEntry, sandhi_class) -> Word:
    return ORACLE.apply(stem, suffix, sandhi_class)


def join(stem: Word, suffix: SuffixEntry) -> Junction:
    return ORACLE.join(stem, suffix)


def synthesize_dataset(stems, suffixes) -> list[Junction]:
    return ORACLE.synthesize_dataset(stems, suffixes)
