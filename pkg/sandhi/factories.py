"""
factory-boy factories for tests.
"""
import factory
from factory.django import DjangoModelFactory

from sandhi.features import FeatureVector
from sandhi.learners import Dataset
from sandhi.models import AlgorithmScore, EvaluationRun
from sandhi.phonology import Word, tokenize


class StemFactory(factory.Factory):
    class Meta:
        model = Word

    class Params:
        text = factory.Iterator(['maram', 'paTi', 'pU', 'kal', 'katavu', 'kATu', 'kAl', 'tAL'])

    phonemes = factory.LazyAttribute(lambda o: tokenize(o.text).phonemes)


class FeatureVectorFactory(factory.Factory):
    class Meta:
        model = FeatureVector

    values = ('X', 'X', 'm', 'a', 'r', 'a', 'm', 'ai', 'X', 'X', 'X', 'X')
    class_id = 4


def toy_dataset(*rows, names=None) -> Dataset:
    """Dataset from (values..., class_id) tuples; values may be given as a string of single symbols."""
    vectors = []
    for *values, class_id in rows:
        if len(values) == 1 and isinstance(values[0], str):
            values = list(values[0])
        vectors.append(FeatureVectorFactory(values=tuple(values), class_id=class_id))
    return Dataset.from_vectors(vectors, names)


class EvaluationRunFactory(DjangoModelFactory):
    class Meta:
        model = EvaluationRun

    dataset_path = factory.Sequence(lambda n: f'data/model-i-{n}.csv')
    context_model = 'I'
    instances = 90
    folds = 10
    seed = 1


class AlgorithmScoreFactory(DjangoModelFactory):
    class Meta:
        model = AlgorithmScore

    run = factory.SubFactory(EvaluationRunFactory)
    algorithm = 'id3'
    context_model = 'I'
    correct = 89
    incorrect = 1
    kappa = 0.9875
    mean_absolute_error = 0.0018
    root_mean_squared_error = 0.0301
    relative_absolute_error = 1.12
    root_relative_squared_error = 10.5
    confusion_matrix = factory.LazyFunction(lambda: [[0] * 11 for _ in range(11)])
