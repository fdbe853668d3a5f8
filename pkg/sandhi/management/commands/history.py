from sandhi.learners import ALGORITHMS
from sandhi.models import EvaluationRun

from ._base import SandhiCommand


class Command(SandhiCommand):
    help = 'List recorded evaluation runs, newest first'

    def add_arguments(self, parser):
        parser.add_argument('--limit', type=int, default=10)
        parser.add_argument('--algo', choices=list(ALGORITHMS), help='Only show scores of one algorithm')

    def run(self, **options):
        runs = EvaluationRun.objects.prefetch_related('scores')[:options['limit']]
        if not runs:
            self.stdout.write('No evaluation runs recorded')
            return
        for run in runs:
            stamp = run.created_at.strftime('%Y-%m-%d %H:%M')
            self.stdout.write(f'#{run.pk} {stamp} {run}')
            scores = run.scores.all()
            if options['algo']:
                scores = [s for s in scores if s.algorithm == options['algo']]
            for score in scores:
                self.stdout.write(
                    f'  {score.context_model:<3} {score.algorithm:<8} '
                    f'CCI {score.correct_pct:8.4f}%  kappa {score.kappa:.4f}  MAE {score.mean_absolute_error:.4f}'
                )
