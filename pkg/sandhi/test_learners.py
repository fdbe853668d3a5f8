"""
Tests for the classifier suite.
"""
import numpy as np
import pytest

from sandhi.exceptions import EmptyDistribution, SchemaMismatch, UnknownAlgorithm
from sandhi.factories import toy_dataset
from sandhi.learners import (
    Dataset, TrainedModel, aode_train, c45_train, id3_train, nb_train, predict,
    predict_proba, random_forest_train, random_tree_train, train,
)
from sandhi.learners.trees import (
    Leaf, TreeModel, added_errors, default_k, entropy, gain_ratio, info_gain, leaves,
    node_count, path_attributes,
)
from sandhi.rules import NUM_CLASSES

TOY = (('a', 1), ('a', 1), ('b', 2), ('b', 2))


def accuracy(model, dataset):
    predicted = np.argmax(model.predict_proba_dataset(dataset), axis=1)
    return float((predicted == dataset.y).mean())


def repeated(*rows_with_counts):
    rows = []
    for count, row in rows_with_counts:
        rows.extend([row] * count)
    return toy_dataset(*rows)


class TestEntropyAndGain:
    """Tests for the split criteria."""

    @pytest.mark.parametrize('counts, expected', [([8, 8], 1.0), ([5, 0], 0.0), ([9, 5], 0.9403)])
    def test_entropy(self, counts, expected):
        """Test entropy in bits."""
        assert entropy(counts) == pytest.approx(expected, abs=1e-3)

    def test_entropy_of_nothing(self):
        """Test that an all-zero distribution raises."""
        with pytest.raises(EmptyDistribution):
            entropy([0, 0])

    def test_gain_on_toy_set(self):
        """Test that a perfectly informative attribute gains one bit."""
        dataset = toy_dataset(*TOY)
        assert info_gain(dataset, 0) == pytest.approx(1.0)
        assert gain_ratio(dataset, 0) == pytest.approx(1.0)

    def test_constant_attribute_has_no_gain(self):
        """Test gain and ratio of a constant attribute."""
        dataset = toy_dataset(('c', 'a', 1), ('c', 'a', 1), ('c', 'b', 2), ('c', 'b', 2))
        assert info_gain(dataset, 0) == 0.0
        assert gain_ratio(dataset, 0) == 0.0

    def test_gain_is_never_negative(self, model_ii_dataset):
        """Test gain over every attribute of the synthetic set."""
        for attribute in range(model_ii_dataset.schema.arity):
            assert info_gain(model_ii_dataset, attribute) >= 0.0


class TestId3:
    """Tests for id3_train."""

    def test_consistent_data_is_fitted_exactly(self, model_i_dataset):
        """Test 100% training accuracy on the oracle-labelled corpus."""
        assert model_i_dataset.is_consistent()
        assert accuracy(id3_train(model_i_dataset), model_i_dataset) == 1.0

    def test_random_consistent_subsets(self, model_ii_dataset):
        """Test exact fit on many random subsets."""
        rng = np.random.default_rng(5)
        for _ in range(100):
            size = int(rng.integers(20, 200))
            subset = model_ii_dataset.subset(rng.choice(len(model_ii_dataset), size, replace=False))
            assert accuracy(id3_train(subset), subset) == 1.0

    def test_single_instance_is_one_leaf(self):
        """Test that one instance gives a leaf with its class."""
        model = id3_train(toy_dataset(('a', 5)))
        assert isinstance(model.estimator.root, Leaf)
        assert predict(model, ('a',)) == 5

    def test_root_splits_on_informative_attribute(self):
        """Test the gain comparison on a two-attribute toy set."""
        dataset = toy_dataset(('p', 'a', 1), ('q', 'a', 1), ('p', 'b', 2), ('q', 'b', 2))
        assert id3_train(dataset).estimator.root.attribute == 1

    def test_unseen_symbol_follows_default_branch(self):
        """Test routing of an out-of-domain symbol to the largest branch."""
        dataset = toy_dataset(('a', 1), ('a', 1), ('a', 1), ('b', 2))
        model = id3_train(dataset)
        assert model.estimator.root.default == 'a'
        assert predict(model, ('z',)) == 1

    def test_tree_structure_invariants(self, model_ii_dataset):
        """Test that no path repeats an attribute and leaves are distributions."""
        root = id3_train(model_ii_dataset).estimator.root
        for path in path_attributes(root):
            assert len(path) == len(set(path))
        for leaf in leaves(root):
            assert leaf.distribution().sum() == pytest.approx(1.0, abs=1e-9)


class TestC45:
    """Tests for c45_train."""

    def test_matches_id3_on_consistent_toy_set(self):
        """Test identical training predictions on the 4-instance set."""
        dataset = toy_dataset(*TOY)
        c45 = c45_train(dataset)
        id3 = id3_train(dataset)
        assert np.array_equal(c45.predict_proba_dataset(dataset), id3.predict_proba_dataset(dataset))

    def test_split_without_error_reduction_collapses(self):
        """Test that a subtree whose branches predict the parent majority becomes a leaf."""
        dataset = toy_dataset(
            ('a', 1), ('a', 1), ('a', 1), ('b', 1), ('b', 1), ('b', 2),
        )
        assert node_count(c45_train(dataset).estimator.root) == 1

    def test_lower_confidence_prunes_more(self):
        """Test that pruning is monotone in the confidence factor."""
        dataset = toy_dataset(*TOY)
        loose = node_count(c45_train(dataset, confidence=0.25).estimator.root)
        strict = node_count(c45_train(dataset, confidence=0.001).estimator.root)
        assert loose == 4
        assert strict == 1

    def test_confidence_range(self):
        """Test that confidence outside (0, 0.5) is refused."""
        with pytest.raises(ValueError):
            c45_train(toy_dataset(*TOY), confidence=0.5)

    def test_added_errors(self):
        """Test the pessimistic error estimate on hand-computed points."""
        assert added_errors(0, 0, 0.25) == 0.0
        assert added_errors(2, 0, 0.25) == pytest.approx(1.0)
        assert added_errors(4, 2, 0.25) == pytest.approx(1.07, abs=0.01)
        assert added_errors(3, 3, 0.25) == 0.0


class TestNaiveBayes:
    """Tests for nb_train."""

    def test_hand_computed_posterior(self):
        """Test a 6-instance set against exact Bayes arithmetic."""
        dataset = toy_dataset(
            ('a', 'p', 1), ('a', 'q', 1), ('b', 'p', 1),
            ('b', 'q', 2), ('b', 'p', 2), ('a', 'q', 2),
        )
        proba = predict_proba(nb_train(dataset), ('a', 'p'))
        expected = np.full(NUM_CLASSES, 1 / 22)
        expected[0] = 9 / 22
        expected[1] = 4 / 22
        assert proba == pytest.approx(expected, abs=1e-9)

    def test_single_class_dominates(self):
        """Test that one observed class gets almost all the mass."""
        dataset = repeated((200, ('a', 'k', 3)))
        assert predict_proba(nb_train(dataset), ('a', 'k'))[2] > 0.98

    def test_symmetric_data_is_ambiguous(self):
        """Test an even split between two mirror-image classes."""
        dataset = toy_dataset(('a', 1), ('b', 1), ('a', 2), ('b', 2))
        proba = predict_proba(nb_train(dataset, laplace=1e-9), ('a',))
        assert proba[0] == pytest.approx(0.5, abs=1e-6)
        assert proba[1] == pytest.approx(0.5, abs=1e-6)

    def test_conditionals_are_distributions(self, model_ii_dataset):
        """Test that every smoothed conditional sums to one and is positive."""
        estimator = nb_train(model_ii_dataset).estimator
        for table in estimator.tables:
            assert np.allclose(table.sum(axis=0), 1.0, atol=1e-9)
            assert (table > 0).all()

    def test_duplicated_data_keeps_posteriors(self):
        """Test that doubling every instance moves no posterior by more than 10 * laplace / N."""
        dataset = repeated(
            (30, ('a', 'p', 1)), (10, ('a', 'q', 1)), (5, ('b', 'p', 1)),
            (30, ('b', 'q', 2)), (10, ('b', 'p', 2)), (5, ('a', 'q', 2)),
        )
        doubled = Dataset.from_vectors(dataset.instances * 2, schema=dataset.schema)
        single, double = nb_train(dataset), nb_train(doubled)
        tolerance = 10 * 1.0 / len(dataset)
        for row in (('a', 'p'), ('a', 'q'), ('b', 'p'), ('b', 'q')):
            assert predict_proba(double, row) == pytest.approx(predict_proba(single, row), abs=tolerance)
            assert predict(double, row) == predict(single, row)

    def test_unseen_symbol_uses_smoothing(self):
        """Test that an out-of-domain symbol still yields a distribution."""
        proba = predict_proba(nb_train(toy_dataset(*TOY)), ('z',))
        assert proba.sum() == pytest.approx(1.0, abs=1e-9)

    def test_laplace_must_be_positive(self):
        """Test the pseudo-count precondition."""
        with pytest.raises(ValueError):
            nb_train(toy_dataset(*TOY), laplace=0)


class TestAODE:
    """Tests for aode_train."""

    def test_single_attribute_equals_naive_bayes(self):
        """Test that one attribute leaves only the self-parent."""
        dataset = toy_dataset(('a', 1), ('a', 2), ('b', 2), ('b', 3), ('b', 3))
        for value in ('a', 'b'):
            assert predict_proba(aode_train(dataset), (value,)) == pytest.approx(
                predict_proba(nb_train(dataset), (value,)), abs=1e-12,
            )

    def test_independent_attributes_agree_with_naive_bayes(self):
        """Test a product-distribution set where the one-dependence terms factorize."""
        dataset = repeated(
            (3, ('p', 'r', 1)), (3, ('p', 's', 1)), (1, ('q', 'r', 1)), (1, ('q', 's', 1)),
            (3, ('p', 'r', 2)), (3, ('q', 'r', 2)), (1, ('p', 's', 2)), (1, ('q', 's', 2)),
        )
        aode = aode_train(dataset, laplace=1e-9)
        nb = nb_train(dataset, laplace=1e-9)
        for values in (('p', 'r'), ('p', 's'), ('q', 'r'), ('q', 's')):
            assert predict_proba(aode, values) == pytest.approx(predict_proba(nb, values), abs=1e-6)

    def test_unseen_parents_fall_back_to_naive_bayes(self):
        """Test that no qualifying parent means the Naive Bayes posterior."""
        dataset = toy_dataset(('p', 'r', 1), ('q', 's', 2))
        assert np.array_equal(
            predict_proba(aode_train(dataset), ('z', 'z')),
            predict_proba(nb_train(dataset), ('z', 'z')),
        )

    def test_frequency_limit_excludes_rare_parents(self):
        """Test that a limit above every count forces the fallback."""
        dataset = toy_dataset(('p', 'r', 1), ('q', 's', 2), ('p', 's', 2))
        assert np.array_equal(
            predict_proba(aode_train(dataset, freq_limit=5), ('p', 'r')),
            predict_proba(nb_train(dataset), ('p', 'r')),
        )

    def test_joint_counts_match_dataset(self, model_ii_dataset):
        """Test that the diagonal of the count tensor totals arity x N."""
        joint = aode_train(model_ii_dataset).estimator.joint
        diagonal = np.diagonal(joint, axis1=1, axis2=2)
        assert diagonal.sum() == model_ii_dataset.schema.arity * len(model_ii_dataset)


class TestRandomTrees:
    """Tests for random_tree_train and random_forest_train."""

    def test_degenerate_forest_is_id3(self, model_ii_dataset):
        """Test k = arity, one tree and no bootstrap against ID3."""
        forest = random_forest_train(
            model_ii_dataset, n_trees=1, k=model_ii_dataset.schema.arity, bootstrap=False,
        )
        id3 = id3_train(model_ii_dataset)
        assert np.array_equal(
            forest.predict_proba_dataset(model_ii_dataset),
            id3.predict_proba_dataset(model_ii_dataset),
        )

    def test_same_seed_same_forest(self, model_ii_dataset):
        """Test reproducibility from the seed."""
        first = random_forest_train(model_ii_dataset, n_trees=3, seed=11)
        second = random_forest_train(model_ii_dataset, n_trees=3, seed=11)
        assert np.array_equal(
            first.predict_proba_dataset(model_ii_dataset),
            second.predict_proba_dataset(model_ii_dataset),
        )

    def test_training_accuracy(self, model_ii_dataset):
        """Test that both randomized learners fit the synthetic corpus."""
        tree = random_tree_train(model_ii_dataset, seed=3)
        forest = random_forest_train(model_ii_dataset, seed=3)
        assert accuracy(tree, model_ii_dataset) == 1.0
        assert accuracy(forest, model_ii_dataset) >= 0.99

    def test_default_k(self):
        """Test floor(log2(arity)) + 1."""
        assert default_k(10) == 4
        assert default_k(15) == 4
        assert default_k(16) == 5

    def test_k_out_of_range(self, model_ii_dataset):
        """Test the candidate-count precondition."""
        with pytest.raises(ValueError):
            random_tree_train(model_ii_dataset, k=0)
        with pytest.raises(ValueError):
            random_forest_train(model_ii_dataset, n_trees=0)


class TestPredict:
    """Tests for the shared prediction interface."""

    def test_argmax_ties_go_to_lowest_class(self):
        """Test tie breaking on a leaf with equal counts."""
        dataset = toy_dataset(('a', 1))
        counts = (3, 3) + (0,) * (NUM_CLASSES - 2)
        model = TrainedModel('id3', dataset.schema, TreeModel(Leaf(counts, 6), dataset.schema))
        assert predict(model, ('a',)) == 1

    def test_majority_leaf(self):
        """Test a 0.6/0.4 leaf."""
        dataset = toy_dataset(('a', 1))
        counts = (6, 4) + (0,) * (NUM_CLASSES - 2)
        model = TrainedModel('id3', dataset.schema, TreeModel(Leaf(counts, 10), dataset.schema))
        assert predict(model, ('a',)) == 1

    def test_wrong_arity_raises(self):
        """Test the schema check."""
        model = nb_train(toy_dataset(*TOY))
        with pytest.raises(SchemaMismatch):
            predict(model, ('a', 'b'))

    @pytest.mark.parametrize('algorithm', ['id3', 'c45', 'nb', 'aode', 'rtree', 'rforest'])
    def test_distributions_and_argmax(self, algorithm, model_ii_dataset):
        """Test that every model returns 11-class distributions consistent with predict."""
        model = train(algorithm, model_ii_dataset, seed=2)
        for row in model_ii_dataset.instances[:50]:
            proba = predict_proba(model, row)
            assert proba.shape == (NUM_CLASSES,)
            assert proba.sum() == pytest.approx(1.0, abs=1e-9)
            assert predict(model, row) == int(np.argmax(proba)) + 1

    def test_unknown_algorithm(self, model_ii_dataset):
        """Test the registry lookup."""
        with pytest.raises(UnknownAlgorithm):
            train('bayesnet', model_ii_dataset)

    def test_irrelevant_parameters_are_ignored(self):
        """Test that train only forwards an algorithm's own hyperparameters."""
        model = train('nb', toy_dataset(*TOY), confidence=0.1, k=3)
        assert model.params == {'laplace': 1.0}

    def test_dataset_rejects_bad_class(self):
        """Test the class id invariant."""
        with pytest.raises(SchemaMismatch):
            toy_dataset(('a', 12))

    def test_subset_shares_schema(self, model_ii_dataset):
        """Test that subsets keep the parent's domains."""
        part = model_ii_dataset.subset([0, 1, 2])
        assert part.schema is model_ii_dataset.schema
        assert isinstance(part, Dataset)
        assert len(part) == 3
