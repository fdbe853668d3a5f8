from pathlib import Path

from sandhi.features import context_model, featurize, write_dataset
from sandhi.generator import default_oracle, ingest_stems
from sandhi.rules import SandhiEngine, load_exception_lexicon, standard_suffixes, synthesis_suffixes

from ._base import SandhiCommand

SUFFIX_SETS = {
    'std': synthesis_suffixes,
    'all': lambda: [entry for entry in standard_suffixes() if entry.form is not None],
}


class Command(SandhiCommand):
    help = 'Label every stem x suffix junction with the rule oracle and write the feature vectors'

    def add_arguments(self, parser):
        parser.add_argument('--stems', required=True, help='Stem file, one romanized stem per line')
        parser.add_argument('--model', required=True, choices=['I', 'II'], help='Context window model')
        parser.add_argument(
            '--suffixes', default='std', choices=sorted(SUFFIX_SETS),
            help='std: first form of each suffix category; all: every form',
        )
        parser.add_argument('--exceptions', help='u-stem exception lexicon (defaults to settings)')
        parser.add_argument('--out', required=True, help='Dataset file to write')

    def run(self, **options):
        stems = ingest_stems(options['stems'])
        if options['exceptions']:
            oracle = SandhiEngine(load_exception_lexicon(options['exceptions']))
        else:
            oracle = default_oracle().engine
        model = context_model(options['model'])

        junctions = oracle.synthesize_dataset(stems, SUFFIX_SETS[options['suffixes']]())
        rows = featurize(junctions, model)
        out = Path(options['out'])
        with out.open('w', encoding='utf-8', newline='') as handle:
            write_dataset(rows, handle, model)

        self.stdout.write(self.style.SUCCESS(
            f'Wrote {len(rows)} instances ({model}, {len(stems)} stems) to {out}'
        ))
