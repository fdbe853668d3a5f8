"""
Decision-tree learners over nominal attributes: ID3, C4.5 (gain ratio with
pessimistic pruning), random trees and random forests.

Every split is multiway with one child per domain symbol. A symbol that no
training instance reaches gets a leaf carrying the parent's distribution;
symbols outside the domain follow the split's default child, the branch
that received the most training instances.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Union

import numpy as np
from scipy.stats import norm

from ..exceptions import EmptyDistribution
from ..rules import NUM_CLASSES
from .base import Estimator, TrainedModel, class_distribution
from .dataset import Dataset, Schema

logger = logging.getLogger(__name__)


def entropy(counts) -> float:
    """Shannon entropy in bits of a count vector; 0·log 0 is taken as 0."""
    counts = np.asarray(counts, dtype=np.float64)
    total = counts.sum()
    if total <= 0 or (counts < 0).any():
        raise EmptyDistribution()
    p = counts[counts > 0] / total
    return float(-(p * np.log2(p)).sum())


def _row_entropies(table: np.ndarray) -> np.ndarray:
    totals = table.sum(axis=1, keepdims=True)
    with np.errstate(divide='ignore', invalid='ignore'):
        p = np.where(totals > 0, table / np.where(totals > 0, totals, 1), 0.0)
        logs = np.where(p > 0, np.log2(np.where(p > 0, p, 1)), 0.0)
    return -(p * logs).sum(axis=1)


def contingency(codes: np.ndarray, y: np.ndarray, size: int) -> np.ndarray:
    """Counts of (symbol, class) pairs: a size x 11 table."""
    flat = np.bincount(codes * NUM_CLASSES + y, minlength=size * NUM_CLASSES)
    return flat.reshape(size, NUM_CLASSES)


def _gain_from_table(table: np.ndarray) -> tuple[float, float]:
    """(information gain, split info) of a symbol x class table."""
    sizes = table.sum(axis=1)
    total = sizes.sum()
    weights = sizes / total
    base = entropy(table.sum(axis=0))
    gain = base - float((weights * _row_entropies(table)).sum())
    split_info = entropy(sizes)
    return max(gain, 0.0), split_info


def info_gain(dataset: Dataset, attribute: int) -> float:
    table = contingency(dataset.X[:, attribute], dataset.y, dataset.schema.domain_sizes[attribute])
    return _gain_from_table(table)[0]


def gain_ratio(dataset: Dataset, attribute: int) -> float:
    table = contingency(dataset.X[:, attribute], dataset.y, dataset.schema.domain_sizes[attribute])
    gain, split_info = _gain_from_table(table)
    return gain / split_info if split_info > 0 else 0.0


@dataclass(frozen=True)
class Leaf:
    counts: tuple[int, ...]
    size: int

    def distribution(self):
        return class_distribution(self.counts)


@dataclass(frozen=True)
class Split:
    attribute: int
    children: dict
    default: str
    counts: tuple[int, ...]

    @property
    def size(self):
        return sum(self.counts)


Node = Union[Leaf, Split]


def node_count(node: Node) -> int:
    if isinstance(node, Leaf):
        return 1
    return 1 + sum(node_count(child) for child in node.children.values())


def leaves(node: Node):
    if isinstance(node, Leaf):
        yield node
    else:
        for child in node.children.values():
            yield from leaves(child)


def path_attributes(node: Node, path=()):
    """Yield the attribute sequence of every root-to-leaf path."""
    if isinstance(node, Leaf):
        yield path
    else:
        for child in node.children.values():
            yield from path_attributes(child, path + (node.attribute,))


class TreeModel(Estimator):
    def __init__(self, root: Node, schema: Schema):
        self.root = root
        self.schema = schema

    def leaf_for(self, codes) -> Leaf:
        node = self.root
        while isinstance(node, Split):
            code = codes[node.attribute]
            domain = self.schema.domains[node.attribute]
            symbol = domain[code] if code >= 0 else node.default
            node = node.children.get(symbol, node.children[node.default])
        return node

    def predict_proba_codes(self, X):
        return np.stack([self.leaf_for(row).distribution() for row in X])

    def describe(self):
        return render_tree(self.root, self.schema)


class ForestModel(Estimator):
    def __init__(self, trees: list[TreeModel], k: int):
        if not trees:
            raise ValueError('a forest needs at least one tree')
        self.trees = list(trees)
        self.k = k

    def predict_proba_codes(self, X):
        total = self.trees[0].predict_proba_codes(X)
        for tree in self.trees[1:]:
            total = total + tree.predict_proba_codes(X)
        return total / len(self.trees)

    def describe(self):
        lines = [f'random forest: {len(self.trees)} trees, {self.k} candidate attributes per split']
        for number, tree in enumerate(self.trees, start=1):
            lines.append(f'--- tree {number} ({node_count(tree.root)} nodes)')
            lines.extend(tree.describe())
        return lines


def render_tree(node: Node, schema: Schema, depth=0) -> list[str]:
    """Weka-style indented listing, one line per branch."""
    if isinstance(node, Leaf):
        return [f'class {int(np.argmax(node.counts)) + 1} ({node.size})']
    lines = []
    name = schema.names[node.attribute]
    for symbol in schema.domains[node.attribute]:
        child = node.children[symbol]
        head = f'{"|   " * depth}{name} = {symbol}'
        if isinstance(child, Leaf):
            lines.append(f'{head}: {render_tree(child, schema)[0]}')
        else:
            lines.append(head)
            lines.extend(render_tree(child, schema, depth + 1))
    return lines


# growth


class _Grower:
    def __init__(self, dataset: Dataset, choose, min_split=1):
        self.X = dataset.X
        self.y = dataset.y
        self.schema = dataset.schema
        self.choose = choose
        self.min_split = min_split

    def counts(self, idx):
        return tuple(int(c) for c in np.bincount(self.y[idx], minlength=NUM_CLASSES))

    def grow(self, idx, available):
        counts = self.counts(idx)
        if sum(1 for c in counts if c) <= 1 or not available or idx.size < self.min_split:
            return Leaf(counts, int(idx.size))
        candidates = [a for a in available if np.unique(self.X[idx, a]).size > 1]
        if not candidates:
            return Leaf(counts, int(idx.size))
        attribute = self.choose(idx, candidates)
        if attribute is None:
            return Leaf(counts, int(idx.size))

        column = self.X[idx, attribute]
        remaining = [a for a in available if a != attribute]
        children = {}
        largest, default = -1, None
        for code, symbol in enumerate(self.schema.domains[attribute]):
            sub = idx[column == code]
            if sub.size > largest:
                largest, default = sub.size, symbol
            if sub.size == 0:
                children[symbol] = Leaf(counts, 0)
            else:
                children[symbol] = self.grow(sub, remaining)
        return Split(attribute, children, default, counts)

    def tables(self, idx, candidates):
        y = self.y[idx]
        sizes = self.schema.domain_sizes
        return {a: contingency(self.X[idx, a], y, sizes[a]) for a in candidates}


def _best_gain(grower: _Grower, idx, candidates):
    best, best_gain = None, -1.0
    for attribute, table in sorted(grower.tables(idx, candidates).items()):
        gain = _gain_from_table(table)[0]
        if gain > best_gain:
            best, best_gain = attribute, gain
    return best


def _grow_tree(dataset: Dataset, choose_factory, min_split=1) -> Node:
    grower = _Grower(dataset, None, min_split)
    grower.choose = choose_factory(grower)
    return grower.grow(np.arange(len(dataset)), list(range(dataset.schema.arity)))


def id3_train(dataset: Dataset) -> TrainedModel:
    """Unpruned information-gain tree; gain ties go to the lowest attribute index."""
    root = _grow_tree(dataset, lambda g: lambda idx, cands: _best_gain(g, idx, cands))
    logger.debug('ID3 grew %d nodes from %d instances', node_count(root), len(dataset))
    return TrainedModel('id3', dataset.schema, TreeModel(root, dataset.schema))


# C4.5

def added_errors(n: float, e: float, confidence: float) -> float:
    """Extra errors predicted at the upper confidence limit of the binomial error rate."""
    if n <= 0:
        return 0.0
    if e < 1:
        base = n * (1 - confidence ** (1 / n))
        if e == 0:
            return base
        return base + e * (added_errors(n, 1, confidence) - base)
    if e + 0.5 >= n:
        return max(n - e, 0.0)
    z = norm.ppf(1 - confidence)
    f = (e + 0.5) / n
    r = (
        f + z * z / (2 * n)
        + z * math.sqrt(f / n - f * f / n + z * z / (4 * n * n))
    ) / (1 + z * z / n)
    return r * n - e


def _leaf_errors(counts) -> int:
    return sum(counts) - max(counts)


def _estimated_errors(counts, confidence) -> float:
    n = sum(counts)
    e = _leaf_errors(counts)
    return e + added_errors(n, e, confidence)


def _training_errors(node: Node) -> int:
    if isinstance(node, Leaf):
        return _leaf_errors(node.counts) if node.size else 0
    return sum(_training_errors(child) for child in node.children.values())


def prune(node: Node, confidence: float) -> tuple[Node, float]:
    """Bottom-up pessimistic pruning; returns the new node and its estimated errors."""
    if isinstance(node, Leaf):
        return node, (_estimated_errors(node.counts, confidence) if node.size else 0.0)
    as_leaf = Leaf(node.counts, node.size)
    # collapse splits that do not reduce training error
    if _training_errors(node) >= _leaf_errors(node.counts) - 1e-3:
        return as_leaf, _estimated_errors(node.counts, confidence)
    children = {}
    subtree_errors = 0.0
    for symbol, child in node.children.items():
        children[symbol], errors = prune(child, confidence)
        subtree_errors += errors
    leaf_errors = _estimated_errors(node.counts, confidence)
    if leaf_errors <= subtree_errors + 0.1:
        return as_leaf, leaf_errors
    return Split(node.attribute, children, node.default, node.counts), subtree_errors


def _gain_ratio_chooser(grower: _Grower, min_leaf: int):
    def choose(idx, candidates):
        scored = []
        for attribute, table in sorted(grower.tables(idx, candidates).items()):
            sizes = table.sum(axis=1)
            if (sizes >= min_leaf).sum() < 2:
                continue
            gain, split_info = _gain_from_table(table)
            if gain <= 0 or split_info <= 0:
                continue
            scored.append((attribute, gain, gain / split_info))
        if not scored:
            return None
        average = sum(gain for _, gain, _ in scored) / len(scored)
        best, best_ratio = None, -1.0
        for attribute, gain, ratio in scored:
            if gain >= average - 1e-3 and ratio > best_ratio:
                best, best_ratio = attribute, ratio
        return best
    return choose


def c45_train(dataset: Dataset, confidence: float = 0.25, min_leaf: int = 2) -> TrainedModel:
    """Gain-ratio tree with at least `min_leaf` instances in two branches of every
    split, pruned at the given confidence."""
    if not 0 < confidence < 0.5:
        raise ValueError(f'confidence must lie in (0, 0.5), got {confidence}')
    grown = _grow_tree(
        dataset, lambda g: _gain_ratio_chooser(g, min_leaf), min_split=2 * min_leaf,
    )
    root, _ = prune(grown, confidence)
    logger.debug(
        'C4.5 grew %d nodes, %d after pruning at %.3f',
        node_count(grown), node_count(root), confidence,
    )
    return TrainedModel(
        'c45', dataset.schema, TreeModel(root, dataset.schema),
        params={'confidence': confidence, 'min_leaf': min_leaf},
    )


# randomized trees

def default_k(arity: int) -> int:
    return int(math.floor(math.log2(arity))) + 1


def _random_chooser(grower: _Grower, k: int, rng: np.random.Generator):
    def choose(idx, candidates):
        if len(candidates) > k:
            drawn = rng.choice(len(candidates), size=k, replace=False)
            candidates = [candidates[i] for i in drawn]
        return _best_gain(grower, idx, candidates)
    return choose


def _random_tree(dataset: Dataset, k: int, rng: np.random.Generator) -> TreeModel:
    root = _grow_tree(dataset, lambda g: _random_chooser(g, k, rng))
    return TreeModel(root, dataset.schema)


def _check_k(k, arity):
    k = default_k(arity) if k is None else k
    if not 1 <= k <= arity:
        raise ValueError(f'k must lie in 1..{arity}, got {k}')
    return k


def random_tree_train(dataset: Dataset, k: int | None = None, seed: int = 1) -> TrainedModel:
    """Unpruned tree choosing the best of `k` random candidate attributes per split."""
    k = _check_k(k, dataset.schema.arity)
    tree = _random_tree(dataset, k, np.random.default_rng(seed))
    return TrainedModel('rtree', dataset.schema, tree, seed=seed, params={'k': k})


def random_forest_train(
    dataset: Dataset, n_trees: int = 10, k: int | None = None, seed: int = 1,
    bootstrap: bool = True,
) -> TrainedModel:
    """Random trees grown on bootstrap samples; predictions average the trees."""
    if n_trees < 1:
        raise ValueError('a forest needs at least one tree')
    k = _check_k(k, dataset.schema.arity)
    trees = []
    for child in np.random.SeedSequence(seed).spawn(n_trees):
        rng = np.random.default_rng(child)
        sample = dataset
        if bootstrap:
            sample = dataset.subset(rng.integers(0, len(dataset), size=len(dataset)))
        trees.append(_random_tree(sample, k, rng))
    logger.debug('Random forest grew %d trees with k=%d', n_trees, k)
    return TrainedModel(
        'rforest', dataset.schema, ForestModel(trees, k), seed=seed,
        params={'n_trees': n_trees, 'k': k, 'bootstrap': bootstrap},
    )
