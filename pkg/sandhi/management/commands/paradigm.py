from sandhi.generator import engine_for, paradigm

from ._base import SandhiCommand


class Command(SandhiCommand):
    help = 'Print every case of a noun stem in singular and plural, with junction classes'

    def add_arguments(self, parser):
        parser.add_argument('--stem', required=True)
        parser.add_argument('--engine', default='oracle', help='oracle or model:PATH')

    def run(self, **options):
        table = paradigm(self.stem(options['stem']), engine_for(options['engine']))
        self.stdout.write(table.render(), ending='')
