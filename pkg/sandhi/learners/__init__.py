"""
Classifier suite behind a single train/predict interface.
"""
from django.conf import settings

from ..exceptions import UnknownAlgorithm
from .base import TrainedModel, predict, predict_proba
from .bayes import aode_train, nb_train
from .dataset import Dataset, Schema
from .serialization import load_model, load_model_file, save_model, save_model_file
from .trees import c45_train, id3_train, random_forest_train, random_tree_train

ALGORITHMS = {
    'id3': 'ID3',
    'c45': 'C4.5',
    'nb': 'NaiveBayes',
    'aode': 'AODE',
    'rtree': 'RandomTree',
    'rforest': 'RandomForest',
}

HYPERPARAMETERS = {
    'id3': (),
    'c45': ('confidence', 'min_leaf'),
    'nb': ('laplace',),
    'aode': ('laplace', 'freq_limit'),
    'rtree': ('k',),
    'rforest': ('n_trees', 'k', 'bootstrap'),
}


def default_params(name: str) -> dict:
    """Hyperparameters configured in settings for an algorithm."""
    if name == 'c45':
        return {'confidence': settings.SANDHI_C45_CONFIDENCE, 'min_leaf': settings.SANDHI_C45_MIN_LEAF}
    if name == 'nb':
        return {'laplace': settings.SANDHI_LAPLACE}
    if name == 'aode':
        return {'laplace': settings.SANDHI_LAPLACE, 'freq_limit': settings.SANDHI_AODE_FREQ_LIMIT}
    if name == 'rforest':
        return {'n_trees': settings.SANDHI_FOREST_TREES}
    return {}


def train(name: str, dataset: Dataset, seed: int = 1, **params) -> TrainedModel:
    """Train algorithm `name`. Hyperparameters the algorithm does not take are
    ignored; unset ones come from settings."""
    if name not in ALGORITHMS:
        raise UnknownAlgorithm(name, list(ALGORITHMS))
    given = {
        key: value for key, value in params.items()
        if value is not None and key in HYPERPARAMETERS[name]
    }
    options = {**default_params(name), **given}
    if name == 'id3':
        return id3_train(dataset)
    if name == 'c45':
        return c45_train(dataset, **options)
    if name == 'nb':
        return nb_train(dataset, **options)
    if name == 'aode':
        return aode_train(dataset, **options)
    if name == 'rtree':
        return random_tree_train(dataset, seed=seed, **options)
    return random_forest_train(dataset, seed=seed, **options)


__all__ = [
    'ALGORITHMS', 'Dataset', 'Schema', 'TrainedModel', 'aode_train', 'c45_train',
    'default_params', 'id3_train', 'load_model', 'load_model_file', 'nb_train', 'predict',
    'predict_proba', 'random_forest_train', 'random_tree_train', 'save_model',
    'save_model_file', 'train',
]
