"""
Stratified k-fold cross-validation and the classifier-comparison report.

Measures are pooled: every held-out prediction of every fold goes into one
confusion matrix and one set of error sums. The relative errors compare
against a predictor that always outputs the class distribution of the
fold's training part.
"""
from __future__ import annotations

import hashlib
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from django.conf import settings
from sklearn.metrics import confusion_matrix

from .exceptions import (
    DegeneratePrior, EmptyMatrix, JunctionSetMismatch, LengthMismatch, TooFewInstances,
)
from .learners import ALGORITHMS, Dataset, train
from .rules import CLASS_IDS, NUM_CLASSES

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FoldPlan:
    k: int
    seed: int
    assignment: np.ndarray = field(repr=False)

    def test_indices(self, fold: int) -> np.ndarray:
        return np.flatnonzero(self.assignment == fold)

    def train_indices(self, fold: int) -> np.ndarray:
        return np.flatnonzero(self.assignment != fold)

    def splits(self):
        for fold in range(self.k):
            yield fold, self.train_indices(fold), self.test_indices(fold)

    def fold_sizes(self) -> np.ndarray:
        return np.bincount(self.assignment, minlength=self.k)


def _instance_key(seed, row, ordinal) -> bytes:
    text = f'{seed}|{" ".join(row.values)}|{row.class_id}|{ordinal}'
    return hashlib.sha1(text.encode('utf-8')).digest()


def stratified_kfold(dataset: Dataset, k: int, seed: int) -> FoldPlan:
    """Assign every instance to one of `k` folds, class by class.

    Within a class, instances are ordered by a seeded hash of their content
    and dealt round-robin; the dealing position carries over from one class
    to the next so fold sizes also differ by at most one.
    """
    if k < 2:
        raise ValueError(f'cross-validation needs at least 2 folds, got {k}')
    if len(dataset) < k:
        raise TooFewInstances(len(dataset), k)

    by_class: dict[int, list[tuple[bytes, int]]] = {}
    ordinals: dict[tuple, int] = {}
    for index, row in enumerate(dataset.instances):
        key = (row.values, row.class_id)
        ordinal = ordinals.get(key, 0)
        ordinals[key] = ordinal + 1
        by_class.setdefault(row.class_id, []).append((_instance_key(seed, row, ordinal), index))

    assignment = np.empty(len(dataset), dtype=np.int64)
    position = 0
    for class_id in sorted(by_class):
        for _, index in sorted(by_class[class_id]):
            assignment[index] = position % k
            position += 1
    return FoldPlan(k, seed, assignment)


class ConfusionMatrix:
    """counts[actual - 1][predicted - 1] over the eleven classes."""

    def __init__(self, counts):
        self.counts = np.asarray(counts, dtype=np.int64)
        if (self.counts < 0).any():
            raise ValueError('confusion counts must be non-negative')

    @classmethod
    def from_predictions(cls, actual, predicted) -> 'ConfusionMatrix':
        if len(actual) != len(predicted):
            raise LengthMismatch(len(actual), len(predicted))
        return cls(confusion_matrix(actual, predicted, labels=list(CLASS_IDS)))

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    @property
    def correct(self) -> int:
        return int(np.trace(self.counts))

    @property
    def incorrect(self) -> int:
        return self.total - self.correct

    def __add__(self, other):
        return ConfusionMatrix(self.counts + other.counts)

    def render(self) -> list[str]:
        width = max(4, len(str(self.counts.max())) + 1)
        header = ''.join(f'{c:>{width}}' for c in range(1, len(self.counts) + 1))
        lines = [f'{"":>6}{header}   <- predicted']
        for actual, row in enumerate(self.counts, start=1):
            lines.append(f'{actual:>6}' + ''.join(f'{v:>{width}}' for v in row))
        return lines


def kappa(cm) -> float:
    """Cohen's kappa; agreement is 1.0 when chance agreement is already certain
    and every prediction is right, 0.0 when it is certain and some are wrong."""
    counts = cm.counts if isinstance(cm, ConfusionMatrix) else np.asarray(cm, dtype=np.int64)
    total = int(counts.sum())
    if total <= 0:
        raise EmptyMatrix()
    # integer form of (P_o - P_e) / (1 - P_e), scaled by N squared
    agreed = int(np.trace(counts)) * total
    chance = int((counts.sum(axis=1) * counts.sum(axis=0)).sum())
    if chance == total * total:
        return 1.0 if agreed == chance else 0.0
    return (agreed - chance) / (total * total - chance)


def _one_hot(actuals) -> np.ndarray:
    actuals = np.asarray(actuals, dtype=np.int64)
    return np.eye(NUM_CLASSES)[actuals - 1]


def probabilistic_errors(actuals, dists) -> tuple[float, float]:
    """(MAE, RMSE) of predicted class distributions against one-hot actuals."""
    dists = np.asarray(dists, dtype=np.float64).reshape(-1, NUM_CLASSES)
    if len(actuals) != len(dists):
        raise LengthMismatch(len(actuals), len(dists))
    if len(dists) == 0:
        raise EmptyMatrix()
    diff = dists - _one_hot(actuals)
    mae = float(np.abs(diff).mean())
    rmse = float(np.sqrt((diff ** 2).mean()))
    return mae, rmse


def relative_errors(actuals, dists, prior) -> tuple[float, float]:
    """(RAE %, RRSE %) against a predictor that always outputs `prior`.

    `prior` is one distribution or one row per instance when each instance
    was held out from a different training part.
    """
    dists = np.asarray(dists, dtype=np.float64).reshape(-1, NUM_CLASSES)
    prior = np.broadcast_to(np.asarray(prior, dtype=np.float64), dists.shape)
    mae, rmse = probabilistic_errors(actuals, dists)
    prior_mae, prior_rmse = probabilistic_errors(actuals, prior)
    if prior_mae == 0:
        raise DegeneratePrior()
    return 100.0 * mae / prior_mae, 100.0 * rmse / prior_rmse


@dataclass
class AlgorithmResult:
    """Pooled held-out scores of one algorithm; one column of a report."""
    algorithm: str
    matrix: ConfusionMatrix
    kappa: float
    mae: float
    rmse: float
    rae: float | None
    rrse: float | None

    @property
    def label(self):
        return ALGORITHMS.get(self.algorithm, self.algorithm)

    @property
    def instances(self):
        return self.matrix.total

    @property
    def correct(self):
        return self.matrix.correct

    @property
    def incorrect(self):
        return self.matrix.incorrect

    @property
    def correct_pct(self):
        return 100.0 * self.correct / self.instances

    @property
    def incorrect_pct(self):
        return 100.0 * self.incorrect / self.instances

    def measures(self) -> list[float | None]:
        return [
            self.correct_pct, self.incorrect_pct, self.kappa,
            self.mae, self.rmse, self.rae, self.rrse,
        ]


def _fold_predictions(algorithm, dataset, train_idx, test_idx, seed, params):
    model = train(algorithm, dataset.subset(train_idx), seed=seed, **params)
    held_out = dataset.subset(test_idx)
    dists = model.predict_proba_dataset(held_out)
    counts = np.bincount(dataset.y[train_idx], minlength=NUM_CLASSES)
    prior = counts / counts.sum()
    logger.debug(
        '%s: trained on %d, predicted %d held-out instances', algorithm, len(train_idx), len(test_idx),
    )
    return test_idx, dists, prior


def cross_validate(
    algorithm: str, dataset: Dataset, k: int = 10, seed: int = 1,
    plan: FoldPlan | None = None, workers: int | None = None, params: dict | None = None,
) -> AlgorithmResult:
    """Train on k-1 folds, predict the held-out fold, pool all predictions."""
    if plan is None:
        plan = stratified_kfold(dataset, k, seed)
    workers = workers or settings.SANDHI_CV_WORKERS
    params = params or {}

    jobs = [
        (algorithm, dataset, train_idx, test_idx, seed, params)
        for _, train_idx, test_idx in plan.splits()
    ]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            folds = list(pool.map(lambda job: _fold_predictions(*job), jobs))
    else:
        folds = [_fold_predictions(*job) for job in jobs]

    dists = np.empty((len(dataset), NUM_CLASSES))
    priors = np.empty((len(dataset), NUM_CLASSES))
    for test_idx, fold_dists, prior in folds:
        dists[test_idx] = fold_dists
        priors[test_idx] = prior

    actual = np.array([row.class_id for row in dataset.instances], dtype=np.int64)
    predicted = np.argmax(dists, axis=1) + 1
    matrix = ConfusionMatrix.from_predictions(actual, predicted)
    mae, rmse = probabilistic_errors(actual, dists)
    try:
        rae, rrse = relative_errors(actual, dists, priors)
    except DegeneratePrior:
        logger.warning('%s: training priors predict every fold perfectly; relative errors undefined', algorithm)
        rae = rrse = None

    result = AlgorithmResult(algorithm, matrix, kappa(matrix), mae, rmse, rae, rrse)
    logger.info(
        '%s %d-fold CV: %d/%d correct (%.4f%%), kappa %.4f',
        algorithm, plan.k, result.correct, result.instances, result.correct_pct, result.kappa,
    )
    return result


MEASURES = (
    'Correctly Classified Instances',
    'Incorrectly Classified Instances',
    'Kappa statistic',
    'Mean absolute error',
    'Root mean squared error',
    'Relative absolute error (%)',
    'Root relative squared error (%)',
)


def _fmt(value) -> str:
    return 'n/a' if value is None else f'{value:.4f}'


@dataclass
class EvalReport:
    title: str
    folds: int
    seed: int
    results: list[AlgorithmResult] = field(default_factory=list)

    @property
    def instances(self):
        return self.results[0].instances if self.results else 0

    def result(self, algorithm) -> AlgorithmResult:
        for result in self.results:
            if result.algorithm == algorithm:
                return result
        raise KeyError(algorithm)

    def render_table(self) -> str:
        """Measures as rows, one column per algorithm."""
        cells = []
        for result in self.results:
            cells.append([
                f'{result.correct} ({result.correct_pct:.4f})',
                f'{result.incorrect} ({result.incorrect_pct:.4f})',
                *(_fmt(v) for v in result.measures()[2:]),
            ])
        widths = [
            max(len(result.label), *(len(c) for c in column))
            for result, column in zip(self.results, cells)
        ]
        label_width = max(len(m) for m in MEASURES)
        lines = [
            f'{self.title}: {self.instances} instances, {self.folds}-fold cross-validation, seed {self.seed}',
            ' ' * label_width + ''.join(f'  {r.label:>{w}}' for r, w in zip(self.results, widths)),
        ]
        for row, measure in enumerate(MEASURES):
            lines.append(
                f'{measure:<{label_width}}'
                + ''.join(f'  {column[row]:>{w}}' for column, w in zip(cells, widths))
            )
        return '\n'.join(lines) + '\n'

    def render_csv(self) -> str:
        """One line per algorithm: name then the seven measures."""
        lines = [
            ','.join([result.algorithm, *(_fmt(v) for v in result.measures())])
            for result in self.results
        ]
        return '\n'.join(lines) + '\n'

    def render_matrices(self) -> str:
        lines = []
        for result in self.results:
            lines.append(f'{self.title} / {result.label} confusion matrix (rows actual):')
            lines.extend(result.matrix.render())
        return '\n'.join(lines) + '\n'


def evaluate(
    algorithms, dataset: Dataset, k: int = 10, seed: int = 1, title='Evaluation',
    plan: FoldPlan | None = None, params=None,
) -> EvalReport:
    """Cross-validate several algorithms on one shared fold plan."""
    plan = plan or stratified_kfold(dataset, k, seed)
    params = params or {}
    report = EvalReport(title, plan.k, plan.seed)
    for algorithm in algorithms:
        report.results.append(cross_validate(algorithm, dataset, plan=plan, seed=seed, params=params))
    return report


def compare_models(
    dataset_i: Dataset, dataset_ii: Dataset, algorithms, k: int = 10, seed: int = 1,
    titles=('Model I', 'Model II'), params=None,
) -> tuple[EvalReport, EvalReport]:
    """Evaluate two featurizations of one junction set on identical folds."""
    if len(dataset_i) != len(dataset_ii):
        raise JunctionSetMismatch(len(dataset_i), len(dataset_ii))
    if not np.array_equal(dataset_i.y, dataset_ii.y):
        raise JunctionSetMismatch(len(dataset_i), len(dataset_ii))
    plan = stratified_kfold(dataset_i, k, seed)
    return (
        evaluate(algorithms, dataset_i, seed=seed, title=titles[0], plan=plan, params=params),
        evaluate(algorithms, dataset_ii, seed=seed, title=titles[1], plan=plan, params=params),
    )
