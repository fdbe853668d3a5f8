"""
Common prediction interface shared by every learner.
"""
from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field

import numpy as np

from ..exceptions import SchemaMismatch
from ..features import FeatureVector
from ..rules import NUM_CLASSES
from .dataset import Dataset, Schema


class Estimator(ABC):
    """A fitted classifier over coded instances."""

    @abstractmethod
    def predict_proba_codes(self, X: np.ndarray) -> np.ndarray:
        """Class distributions (n x 11) for coded instances (n x arity)."""

    def describe(self) -> list[str]:
        return []


def class_distribution(counts) -> np.ndarray:
    counts = np.asarray(counts, dtype=np.float64)
    return counts / counts.sum()


@dataclass(frozen=True)
class TrainedModel:
    algorithm: str
    schema: Schema
    estimator: Estimator
    seed: int = 0
    params: dict = field(default_factory=dict)

    @property
    def schema_hash(self):
        return self.schema.digest()

    def _codes(self, fv) -> np.ndarray:
        values = fv.values if isinstance(fv, FeatureVector) else tuple(fv)
        if len(values) != self.schema.arity:
            raise SchemaMismatch(
                f'{self.algorithm} model expects {self.schema.arity} attributes, got {len(values)}'
            )
        return self.schema.encode(values)

    def predict_proba(self, fv) -> np.ndarray:
        return self.estimator.predict_proba_codes(self._codes(fv)[np.newaxis, :])[0]

    def predict(self, fv) -> int:
        return int(np.argmax(self.predict_proba(fv))) + 1

    def predict_proba_dataset(self, dataset: Dataset) -> np.ndarray:
        if len(dataset) == 0:
            return np.empty((0, NUM_CLASSES))
        if dataset.schema.domains != self.schema.domains:
            return np.stack([self.predict_proba(row) for row in dataset.instances])
        return self.estimator.predict_proba_codes(dataset.X)


def predict_proba(model: TrainedModel, fv) -> np.ndarray:
    return model.predict_proba(fv)


def predict(model: TrainedModel, fv) -> int:
    """Most probable class id; ties go to the lowest id."""
    return model.predict(fv)
