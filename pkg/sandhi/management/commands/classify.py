from sandhi.exceptions import InvalidTransformation
from sandhi.generator import default_oracle, engine_for
from sandhi.phonology import tokenize
from sandhi.rules import SandhiClass, SuffixCategory, standard_suffixes, transform

from ._base import SandhiCommand, usage_error


def find_suffix(text):
    """A suffix given by category name (`dative`) or by form (`ukku`)."""
    categories = {c.value for c in SuffixCategory}
    for entry in standard_suffixes():
        if entry.form is None:
            continue
        if text in categories and entry.category.value == text and entry.variant_index == 0:
            return entry
        if text not in categories and str(entry.form) == text:
            return entry
    return None


class Command(SandhiCommand):
    help = 'Show the predicted and the oracle sandhi class of one stem + suffix junction'

    def add_arguments(self, parser):
        parser.add_argument('--stem', required=True)
        parser.add_argument(
            '--suffix', required=True,
            help='Suffix form (ai, kaL) or category (accusative); write a hyphenated form as --suffix=-ai',
        )
        parser.add_argument('--engine', default='oracle', help='oracle or model:PATH')

    def run(self, **options):
        stem = self.stem(options['stem'])
        text = options['suffix'].lstrip('-')
        entry = find_suffix(text)
        if entry is None:
            # unknown symbols report as data errors, known ones as usage errors
            tokenize(text)
            raise usage_error(f'{options["suffix"]} is not a known non-nominative suffix')

        engine = engine_for(options['engine'])
        oracle = default_oracle()
        predicted = engine.classify(stem, entry)
        expected = oracle.classify(stem, entry)
        verdict = 'agree' if predicted is expected else 'DISAGREE'
        self.stdout.write(f'{stem} + {entry} ({entry.category.value})')
        try:
            surface = transform(stem, entry, predicted)
        except InvalidTransformation as exc:
            self.stdout.write(f'  {engine.name}: class {int(predicted)} {predicted.label} -> (not applicable)')
            self.stderr.write(str(exc))
        else:
            self.stdout.write(f'  {engine.name}: class {int(predicted)} {predicted.label} -> {surface}')
        self.stdout.write(f'  oracle: class {int(expected)} {SandhiClass(expected).label} ({verdict})')
