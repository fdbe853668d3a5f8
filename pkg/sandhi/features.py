"""
Fixed-window nominal feature vectors for sandhi junctions.

A vector holds the last `stem_window` phonemes of the stem (left-padded
with the blank symbol X) followed by the first `suffix_window` phonemes of
the suffix (right-padded with X). Stems longer than the window keep their
boundary-adjacent phonemes.
"""
from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

from .exceptions import EmptyDataset, FormatError
from .phonology import PHONEMES, Word
from .rules import CLASS_IDS, Junction

PAD = 'X'


@dataclass(frozen=True)
class ContextModel:
    name: str
    stem_window: int
    suffix_window: int = 5

    @property
    def arity(self):
        return self.stem_window + self.suffix_window

    @property
    def attribute_names(self):
        return tuple(
            [f's{i}' for i in range(1, self.stem_window + 1)]
            + [f'x{i}' for i in range(1, self.suffix_window + 1)]
        )

    def __str__(self):
        return f'Model {self.name}'


MODEL_I = ContextModel('I', 10)
MODEL_II = ContextModel('II', 5)
CONTEXT_MODELS = {'I': MODEL_I, 'II': MODEL_II}


def context_model(name: str) -> ContextModel:
    try:
        return CONTEXT_MODELS[name]
    except KeyError:
        raise ValueError(f'unknown context model {name!r}; choose I or II') from None


def model_for_arity(arity: int, suffix_window: int = 5) -> ContextModel:
    for model in CONTEXT_MODELS.values():
        if model.arity == arity and model.suffix_window == suffix_window:
            return model
    return ContextModel(str(arity - suffix_window), arity - suffix_window, suffix_window)


@dataclass(frozen=True)
class FeatureVector:
    values: tuple[str, ...]
    class_id: int

    def __len__(self):
        return len(self.values)


def extract(stem: Word, suffix: Word, class_id, model: ContextModel) -> FeatureVector:
    left = list(stem.symbols[-model.stem_window:])
    right = list(suffix.symbols[:model.suffix_window])
    left = [PAD] * (model.stem_window - len(left)) + left
    right = right + [PAD] * (model.suffix_window - len(right))
    return FeatureVector(tuple(left + right), int(class_id))


def featurize(junctions: list[Junction], model: ContextModel) -> list[FeatureVector]:
    return [
        extract(j.stem, j.suffix.form, j.sandhi_class, model)
        for j in junctions
    ]


def project(vector: FeatureVector, source: ContextModel, target: ContextModel) -> FeatureVector:
    """Narrow a vector to a model with an equal or smaller stem window."""
    if target.stem_window > source.stem_window or target.suffix_window != source.suffix_window:
        raise ValueError(f'cannot project {source} onto {target}')
    stem_slots = vector.values[source.stem_window - target.stem_window:source.stem_window]
    return FeatureVector(stem_slots + vector.values[source.stem_window:], vector.class_id)


def attribute_domains(rows) -> list[frozenset[str]]:
    """Observed symbols per attribute; X is always part of every domain."""
    rows = list(rows)
    if not rows:
        raise ValueError('attribute domains need at least one instance')
    arity = len(rows[0].values)
    domains = [{PAD} for _ in range(arity)]
    for row in rows:
        for index, value in enumerate(row.values):
            domains[index].add(value)
    return [frozenset(d) for d in domains]


def write_dataset(rows, sink, model: ContextModel):
    writer = csv.writer(sink, lineterminator='\n')
    writer.writerow([*model.attribute_names, 'class'])
    for row in rows:
        writer.writerow([*row.values, row.class_id])


def read_dataset(source, name=None) -> tuple[ContextModel, list[FeatureVector]]:
    """Parse the header + comma-separated rows format written by `write_dataset`."""
    name = name or getattr(source, 'name', '<dataset>')
    reader = csv.reader(source)
    try:
        header = next(reader)
    except StopIteration:
        raise FormatError('missing header line', line=1, source=name) from None
    stem_window = sum(1 for h in header if h.startswith('s'))
    suffix_window = sum(1 for h in header if h.startswith('x'))
    model = model_for_arity(stem_window + suffix_window, suffix_window)
    if tuple(header) != (*model.attribute_names, 'class'):
        raise FormatError(f'unexpected header {",".join(header)!r}', line=1, source=name)

    valid = set(PHONEMES) | {PAD}
    rows = []
    for number, fields in enumerate(reader, start=2):
        if not fields:
            continue
        if len(fields) != model.arity + 1:
            raise FormatError(
                f'expected {model.arity + 1} fields, found {len(fields)}',
                line=number, source=name,
            )
        *values, label = fields
        unknown = [v for v in values if v not in valid]
        if unknown:
            raise FormatError(f'unknown symbol {unknown[0]!r}', line=number, source=name)
        try:
            class_id = int(label)
        except ValueError:
            raise FormatError(f'class {label!r} is not an integer', line=number, source=name) from None
        if class_id not in CLASS_IDS:
            raise FormatError(f'class {class_id} outside 1..11', line=number, source=name)
        rows.append(FeatureVector(tuple(values), class_id))
    if not rows:
        raise EmptyDataset(name)
    return model, rows


def load_dataset(path) -> tuple[ContextModel, list[FeatureVector]]:
    path = Path(path)
    with path.open(encoding='utf-8', newline='') as handle:
        return read_dataset(handle, name=str(path))
