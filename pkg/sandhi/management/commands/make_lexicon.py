from pathlib import Path

from django.conf import settings

from sandhi.lexicon import generate_stems, write_stems

from ._base import SandhiCommand, usage_error


class Command(SandhiCommand):
    help = 'Generate a synthetic lexicon of distinct noun stems'

    def add_arguments(self, parser):
        parser.add_argument('--count', type=int, required=True)
        parser.add_argument('--seed', type=int, default=settings.SANDHI_SYNTH_SEED)
        parser.add_argument('--out', required=True)

    def run(self, **options):
        if options['count'] < 1:
            raise usage_error('--count must be positive')
        stems = generate_stems(options['count'], options['seed'])
        out = Path(options['out'])
        with out.open('w', encoding='utf-8') as handle:
            write_stems(stems, handle, header=f'{len(stems)} synthetic stems, seed {options["seed"]}')
        self.stdout.write(self.style.SUCCESS(f'Wrote {len(stems)} stems to {out}'))
