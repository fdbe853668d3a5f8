from django.conf import settings

from sandhi.evaluation import compare_models, evaluate
from sandhi.features import load_dataset
from sandhi.learners import ALGORITHMS, Dataset
from sandhi.models import EvaluationRun

from ._base import SandhiCommand, usage_error


class Command(SandhiCommand):
    help = 'Cross-validate classifiers and print the comparison report'

    def add_arguments(self, parser):
        parser.add_argument('--algo', required=True, help='Comma-separated algorithms: ' + ','.join(ALGORITHMS))
        parser.add_argument('--data', required=True, help='Dataset written by synth')
        parser.add_argument('--folds', type=int, default=settings.SANDHI_CV_FOLDS)
        parser.add_argument('--seed', type=int, default=settings.SANDHI_CV_SEED)
        parser.add_argument('--compare', help='Second featurization of the same junctions')
        parser.add_argument('--format', default='table', choices=['table', 'csv'])
        parser.add_argument('--matrix', action='store_true', help='Also print confusion matrices')
        parser.add_argument('--record', action='store_true', help='Save the scores to the evaluation history')
        parser.add_argument('--confidence', type=float, help='C4.5 pruning confidence')
        parser.add_argument('--trees', type=int, help='Random forest size')
        parser.add_argument('--k', type=int, help='Candidate attributes per random split')

    def run(self, **options):
        algorithms = [a.strip() for a in options['algo'].split(',') if a.strip()]
        unknown = [a for a in algorithms if a not in ALGORITHMS]
        if not algorithms or unknown:
            raise usage_error(f'unknown algorithm {",".join(unknown) or "(none)"}; choose from {", ".join(ALGORITHMS)}')
        if options['folds'] < 2:
            raise usage_error(f'--folds must be at least 2, got {options["folds"]}')
        params = {
            'confidence': options['confidence'],
            'n_trees': options['trees'],
            'k': options['k'],
        }

        context, rows = load_dataset(options['data'])
        dataset = Dataset.from_vectors(rows, context.attribute_names)
        if options['compare']:
            other_context, other_rows = load_dataset(options['compare'])
            other = Dataset.from_vectors(other_rows, other_context.attribute_names)
            reports = list(zip(
                (context.name, other_context.name),
                compare_models(
                    dataset, other, algorithms, options['folds'], options['seed'],
                    titles=(str(context), str(other_context)), params=params,
                ),
            ))
        else:
            report = evaluate(
                algorithms, dataset, options['folds'], options['seed'],
                title=str(context), params=params,
            )
            reports = [(context.name, report)]

        for _, report in reports:
            if options['format'] == 'csv':
                self.stdout.write(report.render_csv(), ending='')
            else:
                self.stdout.write(report.render_table(), ending='')
            if options['matrix']:
                self.stdout.write(report.render_matrices(), ending='')

        if options['record']:
            run = EvaluationRun.record(options['data'], reports, options['compare'])
            self.stderr.write(f'Recorded evaluation run {run.pk}')
