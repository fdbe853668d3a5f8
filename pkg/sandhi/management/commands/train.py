from pathlib import Path

from sandhi.features import load_dataset
from sandhi.learners import ALGORITHMS, Dataset, save_model_file, train
from sandhi.learners.trees import node_count

from ._base import SandhiCommand


class Command(SandhiCommand):
    help = 'Train a classifier on a synthesized dataset and save the model'

    def add_arguments(self, parser):
        parser.add_argument('--algo', required=True, choices=list(ALGORITHMS))
        parser.add_argument('--data', required=True, help='Dataset written by synth')
        parser.add_argument('--out', required=True, help='Model file to write')
        parser.add_argument('--seed', type=int, default=1)
        parser.add_argument('--confidence', type=float, help='C4.5 pruning confidence (default 0.25)')
        parser.add_argument('--min-leaf', type=int, help='C4.5 minimum instances per branch')
        parser.add_argument('--trees', type=int, help='Random forest size (default 10)')
        parser.add_argument('--k', type=int, help='Candidate attributes per random split')
        parser.add_argument('--laplace', type=float, help='Bayes pseudo-count (default 1)')
        parser.add_argument('--freq-limit', type=int, help='AODE parent frequency limit (default 1)')

    def run(self, **options):
        context, rows = load_dataset(options['data'])
        dataset = Dataset.from_vectors(rows, context.attribute_names)
        model = train(
            options['algo'], dataset, seed=options['seed'],
            confidence=options['confidence'], min_leaf=options['min_leaf'],
            n_trees=options['trees'], k=options['k'],
            laplace=options['laplace'], freq_limit=options['freq_limit'],
        )
        out = Path(options['out'])
        save_model_file(model, out)

        detail = ''
        root = getattr(model.estimator, 'root', None)
        if root is not None:
            detail = f', {node_count(root)} nodes'
        self.stdout.write(self.style.SUCCESS(
            f'Trained {ALGORITHMS[model.algorithm]} on {len(dataset)} instances '
            f'({context}{detail}); saved to {out}'
        ))
