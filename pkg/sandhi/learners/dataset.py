"""
Nominal datasets: a schema of attribute domains plus integer-coded instances.

Symbols are coded per attribute by their position in the sorted domain;
symbols outside the domain code as -1 and only occur at prediction time.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ..exceptions import SchemaMismatch
from ..features import FeatureVector, attribute_domains
from ..rules import CLASS_IDS, NUM_CLASSES

UNKNOWN = -1


@dataclass(frozen=True)
class Schema:
    names: tuple[str, ...]
    domains: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        if len(self.names) != len(self.domains):
            raise SchemaMismatch(f'{len(self.names)} names for {len(self.domains)} domains')

    @classmethod
    def from_vectors(cls, rows, names=None) -> 'Schema':
        domains = tuple(tuple(sorted(d)) for d in attribute_domains(rows))
        if names is None:
            names = tuple(f'a{i}' for i in range(1, len(domains) + 1))
        return cls(tuple(names), domains)

    @property
    def arity(self):
        return len(self.names)

    @property
    def domain_sizes(self):
        return tuple(len(d) for d in self.domains)

    @cached_property
    def _codes(self):
        return [{symbol: code for code, symbol in enumerate(d)} for d in self.domains]

    def encode(self, values) -> np.ndarray:
        if len(values) != self.arity:
            raise SchemaMismatch(f'expected {self.arity} attribute values, got {len(values)}')
        return np.array(
            [codes.get(value, UNKNOWN) for codes, value in zip(self._codes, values)],
            dtype=np.int64,
        )

    def digest(self) -> str:
        sha = hashlib.sha1()
        for name, domain in zip(self.names, self.domains):
            sha.update(name.encode('utf-8'))
            sha.update(b'\0')
            sha.update(' '.join(domain).encode('utf-8'))
            sha.update(b'\n')
        return sha.hexdigest()[:12]


class Dataset:
    """Instances under a fixed schema, with numpy views for the learners."""

    def __init__(self, schema: Schema, instances: list[FeatureVector]):
        self.schema = schema
        self.instances = list(instances)
        for row in self.instances:
            if len(row.values) != schema.arity:
                raise SchemaMismatch(
                    f'instance has {len(row.values)} values, schema has {schema.arity}'
                )
            if row.class_id not in CLASS_IDS:
                raise SchemaMismatch(f'class {row.class_id} outside 1..{NUM_CLASSES}')

    @classmethod
    def from_vectors(cls, rows, names=None, schema=None) -> 'Dataset':
        rows = list(rows)
        if schema is None:
            schema = Schema.from_vectors(rows, names)
        return cls(schema, rows)

    def __len__(self):
        return len(self.instances)

    @cached_property
    def X(self) -> np.ndarray:
        if not self.instances:
            return np.empty((0, self.schema.arity), dtype=np.int64)
        return np.stack([self.schema.encode(row.values) for row in self.instances])

    @cached_property
    def y(self) -> np.ndarray:
        """Zero-based class indices (class id - 1)."""
        return np.array([row.class_id - 1 for row in self.instances], dtype=np.int64)

    def subset(self, indices) -> 'Dataset':
        indices = np.asarray(indices, dtype=np.int64)
        part = Dataset.__new__(Dataset)
        part.schema = self.schema
        part.instances = [self.instances[i] for i in indices]
        part.__dict__['X'] = self.X[indices]
        part.__dict__['y'] = self.y[indices]
        return part

    def class_counts(self) -> np.ndarray:
        return np.bincount(self.y, minlength=NUM_CLASSES)

    def is_consistent(self) -> bool:
        """No two identical vectors carry different classes."""
        seen = {}
        for row in self.instances:
            if seen.setdefault(row.values, row.class_id) != row.class_id:
                return False
        return True
