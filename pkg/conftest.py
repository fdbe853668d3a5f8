"""
Pytest configuration and shared fixtures for the sandhi tests.
"""
import pytest

from sandhi.features import MODEL_I, MODEL_II, featurize
from sandhi.learners import Dataset
from sandhi.lexicon import generate_stems
from sandhi.rules import synthesis_suffixes, synthesize_dataset


@pytest.fixture(scope='session')
def stems():
    """A small deterministic synthetic lexicon."""
    return generate_stems(120, seed=7)


@pytest.fixture(scope='session')
def junctions(stems):
    """Every stem joined with the nine synthesis suffixes by the oracle."""
    return synthesize_dataset(stems, synthesis_suffixes())


@pytest.fixture(scope='session')
def model_i_dataset(junctions):
    return Dataset.from_vectors(featurize(junctions, MODEL_I), MODEL_I.attribute_names)


@pytest.fixture(scope='session')
def model_ii_dataset(junctions):
    return Dataset.from_vectors(featurize(junctions, MODEL_II), MODEL_II.attribute_names)


@pytest.fixture
def stem_file(tmp_path):
    """A stem file covering every junction class."""
    path = tmp_path / 'stems.txt'
    path.write_text(
        '# exemplar stems\n'
        'paTi\npU\nkal\nmaram\nkatavu\nkATu\nkAl\ntAL\n'
        'vITu\npaNam\nmalai\nnATu\n',
        encoding='utf-8',
    )
    return path


@pytest.fixture
def write_lines(tmp_path):
    """Write lines to a file under tmp_path and return its path."""
    def write(name, *lines):
        path = tmp_path / name
        path.write_text(''.join(f'{line}\n' for line in lines), encoding='utf-8')
        return path
    return write
