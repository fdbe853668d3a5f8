from sandhi.learners import ALGORITHMS, load_model_file

from ._base import SandhiCommand


class Command(SandhiCommand):
    help = 'Pretty-print a saved model: tree structure or probability tables'

    def add_arguments(self, parser):
        parser.add_argument('--model', required=True, help='Model file written by train')

    def run(self, **options):
        model = load_model_file(options['model'])
        schema = model.schema
        self.stdout.write(f'{ALGORITHMS[model.algorithm]} model, seed {model.seed}, schema {model.schema_hash}')
        self.stdout.write(f'attributes ({schema.arity}): {" ".join(schema.names)}')
        if model.params:
            self.stdout.write('parameters: ' + ', '.join(f'{k}={v}' for k, v in sorted(model.params.items())))
        for line in model.estimator.describe():
            self.stdout.write(line)
