from sandhi.generator import EUPHONIC_FORMS, InflectionRequest, inflect, render_trace
from sandhi.rules import CASES

from ._base import SandhiCommand


class Command(SandhiCommand):
    help = 'Inflect a noun stem: stem + [plural] + [euphonic increment] + case'

    def add_arguments(self, parser):
        parser.add_argument('--stem', required=True)
        parser.add_argument('--case', required=True, choices=[c.value for c in CASES])
        parser.add_argument('--plural', action='store_true')
        parser.add_argument('--euphonic', choices=EUPHONIC_FORMS)
        parser.add_argument('--variant', type=int, default=0, help='Form index for cases with two forms')
        parser.add_argument('--engine', default='oracle', help='oracle or model:PATH')
        parser.add_argument('--trace', action='store_true', help='Print every junction step')

    def run(self, **options):
        request = InflectionRequest(
            self.stem(options['stem']),
            options['case'],
            plural=options['plural'],
            euphonic=options['euphonic'],
            variant_index=options['variant'],
            engine=options['engine'],
        )
        surface, trace = inflect(request)
        self.stdout.write(str(surface))
        if options['trace']:
            for junction in trace:
                self.stdout.write(f'  {render_trace([junction])}')
