"""
Line-oriented text format for trained models.

    sandhi-forge-model v1 <algorithm> <schema-hash> <seed>
    schema <arity>
    attr <name> <symbol> ...
    params <key>=<python literal> ...
    <algorithm body>
    end

Bodies store integer counts only. Tree nodes are written in pre-order, one
per line, indented two spaces per level and prefixed with the branch
symbol that leads to them (`*` for the root).
"""
from __future__ import annotations

import ast
import logging
from pathlib import Path

import numpy as np

from ..exceptions import FormatError, ModelLoadError, VersionMismatch
from ..rules import NUM_CLASSES
from .base import TrainedModel
from .bayes import AODEModel, NaiveBayesModel
from .dataset import Schema
from .trees import ForestModel, Leaf, Split, TreeModel, node_count

logger = logging.getLogger(__name__)

MAGIC = 'sandhi-forge-model'
VERSION = 'v1'
TREE_ALGORITHMS = ('id3', 'c45', 'rtree')


def _counts(values) -> str:
    return ' '.join(str(int(v)) for v in values)


def _write_tree(sink, node, branch='*', depth=0):
    indent = '  ' * depth
    if isinstance(node, Leaf):
        sink.write(f'{indent}{branch} leaf {node.size} {_counts(node.counts)}\n')
        return
    sink.write(f'{indent}{branch} split {node.attribute} {node.default} {_counts(node.counts)}\n')
    for symbol, child in node.children.items():
        _write_tree(sink, child, symbol, depth + 1)


def _write_tree_block(sink, tree: TreeModel):
    sink.write(f'tree {node_count(tree.root)}\n')
    _write_tree(sink, tree.root)


def save_model(model: TrainedModel, sink):
    schema = model.schema
    sink.write(f'{MAGIC} {VERSION} {model.algorithm} {model.schema_hash} {model.seed}\n')
    sink.write(f'schema {schema.arity}\n')
    for name, domain in zip(schema.names, schema.domains):
        sink.write(f'attr {name} {" ".join(domain)}\n')
    params = ' '.join(f'{key}={value!r}' for key, value in sorted(model.params.items()))
    sink.write(f'params {params}'.rstrip() + '\n')

    estimator = model.estimator
    if isinstance(estimator, TreeModel):
        _write_tree_block(sink, estimator)
    elif isinstance(estimator, ForestModel):
        sink.write(f'forest {len(estimator.trees)} {estimator.k}\n')
        for tree in estimator.trees:
            _write_tree_block(sink, tree)
    elif isinstance(estimator, AODEModel):
        sink.write(f'classes {_counts(estimator.nb.class_counts)}\n')
        nonzero = np.argwhere(estimator.joint)
        sink.write(f'joint {len(nonzero)}\n')
        for c, g, h in nonzero:
            sink.write(f'{c} {g} {h} {estimator.joint[c, g, h]}\n')
    elif isinstance(estimator, NaiveBayesModel):
        sink.write(f'classes {_counts(estimator.class_counts)}\n')
        for attribute, table in enumerate(estimator.conditionals):
            for code, symbol in enumerate(schema.domains[attribute]):
                sink.write(f'cond {attribute} {symbol} {_counts(table[code])}\n')
    else:
        raise TypeError(f'cannot serialize {type(estimator).__name__}')
    sink.write('end\n')


def save_model_file(model: TrainedModel, path):
    path = Path(path)
    with path.open('w', encoding='utf-8', newline='\n') as handle:
        save_model(model, handle)
    logger.info('Saved %s model to %s', model.algorithm, path)


class _Reader:
    def __init__(self, source, name):
        self.lines = iter(source)
        self.name = name
        self.number = 0

    def error(self, message):
        return FormatError(message, line=self.number, source=self.name)

    def next(self, keyword=None) -> list[str]:
        """The next line split on spaces, leading indentation kept as a count."""
        try:
            raw = next(self.lines)
        except StopIteration:
            self.number += 1
            raise self.error('unexpected end of model file') from None
        self.number += 1
        fields = raw.rstrip('\r\n').split()
        if not fields:
            raise self.error('blank line')
        if keyword is not None and fields[0] != keyword:
            raise self.error(f'expected {keyword!r}, found {fields[0]!r}')
        self.indent = len(raw) - len(raw.lstrip(' '))
        return fields

    def ints(self, fields, count=None):
        try:
            values = [int(v) for v in fields]
        except ValueError:
            raise self.error(f'expected integers, found {" ".join(fields)!r}') from None
        if count is not None and len(values) != count:
            raise self.error(f'expected {count} integers, found {len(values)}')
        if any(v < 0 for v in values):
            raise self.error('counts must be non-negative')
        return values


def _read_node(reader: _Reader, schema: Schema, branch, depth):
    fields = reader.next()
    if reader.indent != 2 * depth or fields[0] != branch:
        raise reader.error(f'expected branch {branch!r} at depth {depth}')
    if len(fields) < 2 or fields[1] not in ('leaf', 'split'):
        raise reader.error('node line must say leaf or split')
    if fields[1] == 'leaf':
        size, *counts = reader.ints(fields[2:], NUM_CLASSES + 1)
        return Leaf(tuple(counts), size)
    if len(fields) != 4 + NUM_CLASSES:
        raise reader.error('malformed split line')
    attribute = reader.ints(fields[2:3])[0]
    if attribute >= schema.arity:
        raise reader.error(f'attribute {attribute} outside the schema')
    default = fields[3]
    domain = schema.domains[attribute]
    if default not in domain:
        raise reader.error(f'default branch {default!r} is not in the domain')
    counts = tuple(reader.ints(fields[4:], NUM_CLASSES))
    children = {symbol: _read_node(reader, schema, symbol, depth + 1) for symbol in domain}
    return Split(attribute, children, default, counts)


def _read_tree_block(reader: _Reader, schema: Schema) -> TreeModel:
    fields = reader.next('tree')
    expected = reader.ints(fields[1:], 1)[0]
    root = _read_node(reader, schema, '*', 0)
    if node_count(root) != expected:
        raise reader.error(f'tree declares {expected} nodes, found {node_count(root)}')
    return TreeModel(root, schema)


def _read_params(reader: _Reader) -> dict:
    params = {}
    for item in reader.next('params')[1:]:
        key, sep, literal = item.partition('=')
        if not sep:
            raise reader.error(f'malformed parameter {item!r}')
        try:
            params[key] = ast.literal_eval(literal)
        except (ValueError, SyntaxError):
            raise reader.error(f'malformed parameter value {literal!r}') from None
    return params


def load_model(source, name='<model>') -> TrainedModel:
    reader = _Reader(source, name)
    header = reader.next()
    if header[0] != MAGIC or len(header) != 5:
        raise reader.error('not a sandhi-forge model file')
    _, version, algorithm, digest, seed = header
    if version != VERSION:
        raise VersionMismatch(version, VERSION)
    seed = reader.ints([seed])[0]

    arity = reader.ints(reader.next('schema')[1:], 1)[0]
    names, domains = [], []
    for _ in range(arity):
        fields = reader.next('attr')
        if len(fields) < 3:
            raise reader.error('attribute without symbols')
        names.append(fields[1])
        domains.append(tuple(fields[2:]))
    schema = Schema(tuple(names), tuple(domains))
    if schema.digest() != digest:
        raise reader.error(f'schema hash {schema.digest()} does not match header {digest}')
    params = _read_params(reader)

    if algorithm in TREE_ALGORITHMS:
        estimator = _read_tree_block(reader, schema)
    elif algorithm == 'rforest':
        n_trees, k = reader.ints(reader.next('forest')[1:], 2)
        if n_trees < 1:
            raise reader.error('a forest needs at least one tree')
        estimator = ForestModel([_read_tree_block(reader, schema) for _ in range(n_trees)], k)
    elif algorithm in ('nb', 'aode'):
        class_counts = reader.ints(reader.next('classes')[1:], NUM_CLASSES)
        laplace = params.get('laplace', 1.0)
        if algorithm == 'nb':
            tables = []
            for attribute, domain in enumerate(domains):
                table = []
                for symbol in domain:
                    fields = reader.next('cond')
                    if fields[1:3] != [str(attribute), symbol]:
                        raise reader.error(f'expected counts for attribute {attribute} symbol {symbol}')
                    table.append(reader.ints(fields[3:], NUM_CLASSES))
                tables.append(table)
            estimator = NaiveBayesModel(schema, class_counts, tables, laplace)
        else:
            width = sum(len(d) for d in domains) + 1
            joint = np.zeros((NUM_CLASSES, width, width), dtype=np.int64)
            entries = reader.ints(reader.next('joint')[1:], 1)[0]
            for _ in range(entries):
                c, g, h, count = reader.ints(reader.next(), 4)
                if c >= NUM_CLASSES or g >= width or h >= width:
                    raise reader.error('joint count index out of range')
                joint[c, g, h] = count
            estimator = AODEModel(
                schema, class_counts, joint, laplace, params.get('freq_limit', 1),
            )
    else:
        raise reader.error(f'unknown algorithm {algorithm!r}')

    reader.next('end')
    return TrainedModel(algorithm, schema, estimator, seed=seed, params=params)


def load_model_file(path) -> TrainedModel:
    path = Path(path)
    try:
        with path.open(encoding='utf-8') as handle:
            model = load_model(handle, name=str(path))
    except OSError as exc:
        raise ModelLoadError(f'cannot read model {path}: {exc.strerror or exc}') from exc
    logger.debug('Loaded %s model from %s', model.algorithm, path)
    return model
