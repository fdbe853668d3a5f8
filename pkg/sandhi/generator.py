"""
Noun-form generation: stem + [plural] + [euphonic increment] + [case].

Each suffix is attached to the current intermediate form, so the plural
stem `marangkaL` is the stem of the following case junction. Junction
classes come from an engine: the rule oracle, or a trained model whose
predicted class is applied with `transform`.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

from django.conf import settings

from .exceptions import EmptyCorpus, FormatError, ModelLoadError, VersionMismatch
from .features import extract, model_for_arity
from .learners import TrainedModel, load_model_file
from .phonology import Word, tokenize
from .rules import (
    CASES, Junction, SandhiClass, SandhiEngine, SuffixCategory, SuffixEntry,
    load_exception_lexicon, suffix, transform,
)

logger = logging.getLogger(__name__)

EUPHONIC_FORMS = ('in', 'an')


class OracleEngine:
    name = 'oracle'

    def __init__(self, engine: SandhiEngine | None = None):
        self.engine = engine or SandhiEngine()

    def classify(self, stem: Word, entry: SuffixEntry) -> SandhiClass:
        return self.engine.classify(stem, entry)

    def join(self, stem: Word, entry: SuffixEntry) -> Junction:
        return self.engine.join(stem, entry)


class ModelEngine:
    """Predicts the junction class from the context window of a trained model."""

    def __init__(self, model: TrainedModel, path=None):
        self.model = model
        self.context = model_for_arity(model.schema.arity)
        self.name = f'model:{path}' if path else f'model:{model.algorithm}'

    def classify(self, stem: Word, entry: SuffixEntry) -> SandhiClass:
        vector = extract(stem, entry.form, 0, self.context)
        return SandhiClass(self.model.predict(vector))

    def join(self, stem: Word, entry: SuffixEntry) -> Junction:
        sandhi_class = self.classify(stem, entry)
        return Junction(stem, entry, sandhi_class, transform(stem, entry, sandhi_class))


def default_oracle() -> OracleEngine:
    """Oracle carrying the configured u-stem exception lexicon, if any."""
    path = settings.SANDHI_EXCEPTION_LEXICON
    return OracleEngine(SandhiEngine(load_exception_lexicon(path) if path else None))


@lru_cache(maxsize=8)
def _cached_model(path: str) -> TrainedModel:
    return load_model_file(path)


def engine_for(spec: str | None):
    """Resolve `oracle` or `model:PATH` into an engine."""
    if spec is None or spec == 'oracle':
        return default_oracle()
    if spec.startswith('model:'):
        path = spec[len('model:'):]
        if not path:
            raise ModelLoadError('model engine needs a path: model:PATH')
        if not Path(path).is_file():
            raise ModelLoadError(f'model file {path} does not exist')
        try:
            model = _cached_model(str(Path(path).resolve()))
        except (FormatError, VersionMismatch) as exc:
            raise ModelLoadError(f'cannot load model {path}: {exc}') from exc
        return ModelEngine(model, path)
    raise ValueError(f'unknown engine {spec!r}; use oracle or model:PATH')


@dataclass(frozen=True)
class InflectionRequest:
    stem: Word
    case: SuffixCategory = SuffixCategory.NOMINATIVE
    plural: bool = False
    euphonic: str | None = None
    variant_index: int = 0
    engine: str = 'oracle'

    def __post_init__(self):
        object.__setattr__(self, 'case', SuffixCategory(self.case))
        if self.case not in CASES:
            raise ValueError(f'{self.case.value} is not a case')
        if self.euphonic not in (None, *EUPHONIC_FORMS):
            raise ValueError(f'euphonic increment must be in or an, not {self.euphonic!r}')

    def suffixes(self) -> list[SuffixEntry]:
        chain = []
        if self.plural:
            chain.append(suffix(SuffixCategory.PLURAL))
        if self.euphonic:
            chain.append(suffix(SuffixCategory.EUPHONIC, EUPHONIC_FORMS.index(self.euphonic)))
        if self.case is not SuffixCategory.NOMINATIVE:
            chain.append(suffix(self.case, self.variant_index))
        return chain


def inflect(request: InflectionRequest, engine=None) -> tuple[Word, list[Junction]]:
    """Attach the requested suffixes left to right; returns the surface form
    and one junction per attachment."""
    engine = engine or engine_for(request.engine)
    current = request.stem
    trace = []
    for entry in request.suffixes():
        junction = engine.join(current, entry)
        trace.append(junction)
        current = junction.surface
    return current, trace


def render_trace(trace: list[Junction]) -> str:
    return ' '.join(
        f'{j.stem} + {j.suffix} -[{int(j.sandhi_class)}]-> {j.surface}' for j in trace
    )


@dataclass(frozen=True)
class ParadigmCell:
    surface: Word
    trace: tuple[Junction, ...]

    @property
    def classes(self):
        return [int(j.sandhi_class) for j in self.trace]


@dataclass
class ParadigmTable:
    stem: Word
    rows: dict = field(default_factory=dict)

    def cell(self, case, plural=False) -> ParadigmCell:
        return self.rows[SuffixCategory(case)][1 if plural else 0]

    def render(self) -> str:
        width = max(len(c.value) for c in CASES)
        cells = [
            (case, *(f'{c.surface} {c.classes}' for c in pair))
            for case, pair in self.rows.items()
        ]
        column = max(len('singular'), *(len(s) for _, s, _ in cells))
        lines = [f'Paradigm of {self.stem}', f'{"":<{width}}  {"singular":<{column}}  plural']
        for case, singular, plural in cells:
            lines.append(f'{case.value:<{width}}  {singular:<{column}}  {plural}')
        return '\n'.join(lines) + '\n'


def paradigm(stem: Word, engine=None) -> ParadigmTable:
    """All cases in singular and plural; multi-form cases use their first variant."""
    engine = engine or default_oracle()
    table = ParadigmTable(stem)
    for case in CASES:
        pair = []
        for plural in (False, True):
            surface, trace = inflect(InflectionRequest(stem, case, plural=plural), engine)
            pair.append(ParadigmCell(surface, tuple(trace)))
        table.rows[case] = tuple(pair)
    return table


def ingest_stems(path) -> list[Word]:
    """Read one romanized stem per line; `#` starts a comment. Repeated stems
    are kept once."""
    path = Path(path)
    stems = []
    seen = set()
    with path.open(encoding='utf-8') as handle:
        for number, raw in enumerate(handle, start=1):
            text = raw.split('#', 1)[0].strip()
            if not text:
                continue
            stem = tokenize(text, source=path, line=number)
            if str(stem) in seen:
                logger.warning('%s:%d: duplicate stem %s ignored', path, number, stem)
                continue
            seen.add(str(stem))
            stems.append(stem)
    if not stems:
        raise EmptyCorpus(path)
    logger.info('Read %d stems from %s', len(stems), path)
    return stems
