"""
Naive Bayes and averaged one-dependence estimators over nominal attributes.

Both models keep integer counts only; probabilities are derived from the
counts and the Laplace pseudo-count whenever a model is built, so a model
rebuilt from saved counts computes the same posteriors bit for bit.
"""
from __future__ import annotations

import logging

import numpy as np

from ..rules import NUM_CLASSES
from .base import Estimator, TrainedModel
from .dataset import Dataset, Schema
from .trees import contingency

logger = logging.getLogger(__name__)


def _check_laplace(laplace):
    if not laplace > 0:
        raise ValueError(f'laplace must be positive, got {laplace}')
    return float(laplace)


class NaiveBayesModel(Estimator):
    """Class priors and per-attribute symbol x class count tables."""

    def __init__(self, schema: Schema, class_counts, conditionals, laplace=1.0):
        self.schema = schema
        self.class_counts = np.asarray(class_counts, dtype=np.int64)
        self.conditionals = [np.asarray(t, dtype=np.int64) for t in conditionals]
        self.laplace = _check_laplace(laplace)

        n_c = self.class_counts.astype(np.float64)
        total = n_c.sum()
        self.priors = (n_c + self.laplace) / (total + self.laplace * NUM_CLASSES)
        self.tables = []
        self.unseen = []
        for table, size in zip(self.conditionals, schema.domain_sizes):
            denominator = n_c + self.laplace * size
            self.tables.append((table + self.laplace) / denominator)
            self.unseen.append(self.laplace / denominator)

    def conditional(self, attribute, code) -> np.ndarray:
        """P(symbol | class) for every class; unseen symbols get the smoothing mass."""
        if code < 0:
            return self.unseen[attribute]
        return self.tables[attribute][code]

    def joint(self, codes) -> np.ndarray:
        scores = self.priors.copy()
        for attribute, code in enumerate(codes):
            scores = scores * self.conditional(attribute, code)
        return scores

    def predict_proba_codes(self, X):
        out = np.empty((len(X), NUM_CLASSES))
        for i, codes in enumerate(X):
            scores = self.joint(codes)
            out[i] = scores / scores.sum()
        return out

    def describe(self):
        lines = ['class priors:']
        lines.append('  ' + ' '.join(f'{p:.4f}' for p in self.priors))
        for attribute, name in enumerate(self.schema.names):
            lines.append(f'P({name} | class):')
            for code, symbol in enumerate(self.schema.domains[attribute]):
                row = ' '.join(f'{p:.4f}' for p in self.tables[attribute][code])
                lines.append(f'  {symbol:>3} {row}')
        return lines


def nb_train(dataset: Dataset, laplace: float = 1.0) -> TrainedModel:
    """Laplace-smoothed Naive Bayes."""
    laplace = _check_laplace(laplace)
    schema = dataset.schema
    tables = [
        contingency(dataset.X[:, a], dataset.y, size)
        for a, size in enumerate(schema.domain_sizes)
    ]
    estimator = NaiveBayesModel(schema, dataset.class_counts(), tables, laplace)
    logger.debug('Naive Bayes counted %d instances over %d attributes', len(dataset), schema.arity)
    return TrainedModel('nb', schema, estimator, params={'laplace': laplace})


class AODEModel(Estimator):
    """Averaged one-dependence estimators.

    `joint` holds n(class, g, h) over global symbol positions, where the
    position of symbol v of attribute a is offset[a] + code(v). The last
    position stands for any unseen symbol and never receives counts. The
    diagonal n(class, g, g) is the single-attribute count table, which is
    also what the Naive Bayes fallback is built from.
    """

    def __init__(self, schema: Schema, class_counts, joint, laplace=1.0, freq_limit=1):
        if freq_limit < 1:
            raise ValueError(f'freq_limit must be at least 1, got {freq_limit}')
        self.schema = schema
        self.joint = np.asarray(joint, dtype=np.int64)
        self.laplace = _check_laplace(laplace)
        self.freq_limit = int(freq_limit)
        sizes = np.array(schema.domain_sizes, dtype=np.int64)
        self.offsets = np.concatenate([[0], np.cumsum(sizes)[:-1]])
        self.unknown = int(sizes.sum())
        self.domain_sizes = sizes.astype(np.float64)
        if self.joint.shape != (NUM_CLASSES, self.unknown + 1, self.unknown + 1):
            raise ValueError(f'joint count tensor has shape {self.joint.shape}')

        diagonal = np.diagonal(self.joint, axis1=1, axis2=2)
        conditionals = [
            diagonal[:, start:start + size].T
            for start, size in zip(self.offsets, sizes)
        ]
        self.nb = NaiveBayesModel(schema, class_counts, conditionals, laplace)
        self.symbol_counts = diagonal.sum(axis=0)

    def positions(self, codes) -> np.ndarray:
        codes = np.asarray(codes)
        return np.where(codes >= 0, self.offsets + codes, self.unknown)

    def scores(self, codes) -> np.ndarray:
        g = self.positions(codes)
        parents = self.symbol_counts[g] >= self.freq_limit
        if not parents.any():
            return self.nb.joint(codes)

        L = self.laplace
        sub = self.joint[:, g][:, :, g].astype(np.float64)
        diag = np.diagonal(sub, axis1=1, axis2=2)
        sizes = self.domain_sizes
        n_c = self.nb.class_counts.astype(np.float64)[:, np.newaxis]

        # P(c, x_a) as the Naive Bayes prior times P(x_a | c)
        parent = self.nb.priors[:, np.newaxis] * ((diag + L) / (n_c + L * sizes))
        children = (sub + L) / (diag[:, :, np.newaxis] + L * sizes[np.newaxis, np.newaxis, :])
        arity = len(g)
        children[:, np.arange(arity), np.arange(arity)] = 1.0
        per_parent = parent * children.prod(axis=2)
        return per_parent[:, parents].sum(axis=1)

    def predict_proba_codes(self, X):
        out = np.empty((len(X), NUM_CLASSES))
        for i, codes in enumerate(X):
            scores = self.scores(codes)
            out[i] = scores / scores.sum()
        return out

    def describe(self):
        pairs = int(np.count_nonzero(self.joint))
        lines = [
            f'AODE over {self.schema.arity} attributes, frequency limit {self.freq_limit}, '
            f'laplace {self.laplace}',
            f'{pairs} non-zero (class, parent, child) counts',
        ]
        return lines + self.nb.describe()


def joint_counts(dataset: Dataset) -> np.ndarray:
    sizes = np.array(dataset.schema.domain_sizes, dtype=np.int64)
    offsets = np.concatenate([[0], np.cumsum(sizes)[:-1]])
    width = int(sizes.sum()) + 1
    joint = np.zeros((NUM_CLASSES, width, width), dtype=np.int64)
    if len(dataset):
        g = dataset.X + offsets
        arity = g.shape[1]
        rows = np.repeat(g, arity, axis=1).ravel()
        cols = np.tile(g, (1, arity)).ravel()
        classes = np.repeat(dataset.y, arity * arity)
        flat = (classes * width + rows) * width + cols
        joint += np.bincount(flat, minlength=joint.size).reshape(joint.shape)
    return joint


def aode_train(dataset: Dataset, freq_limit: int = 1, laplace: float = 1.0) -> TrainedModel:
    """AODE over every attribute as a super-parent; parents whose value was
    seen fewer than `freq_limit` times are left out of the average."""
    estimator = AODEModel(
        dataset.schema, dataset.class_counts(), joint_counts(dataset),
        laplace=laplace, freq_limit=freq_limit,
    )
    logger.debug('AODE counted %d instances over %d attributes', len(dataset), dataset.schema.arity)
    return TrainedModel(
        'aode', dataset.schema, estimator,
        params={'freq_limit': int(freq_limit), 'laplace': float(laplace)},
    )
