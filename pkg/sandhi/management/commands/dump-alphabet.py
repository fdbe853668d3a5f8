from sandhi.phonology import alphabet, describe

from ._base import SandhiCommand


class Command(SandhiCommand):
    help = 'List the romanized phoneme inventory with its phonological features'

    def run(self, **options):
        for p in alphabet():
            self.stdout.write(f'{p.symbol:<3} {p.kind.value:<9} {describe(p)}')
