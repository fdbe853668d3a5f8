"""
Shared behaviour of the sandhi commands: exit codes and argument helpers.

    0  success
    1  usage error (bad or missing flags)
    2  data error (unreadable or malformed input)
    3  internal invariant violation
"""
import logging
import sys

from django.core.management.base import BaseCommand, CommandError

from sandhi.exceptions import DataError, InvariantViolation
from sandhi.phonology import tokenize

logger = logging.getLogger('sandhi.commands')

USAGE = 1
DATA = 2
INVARIANT = 3


def usage_error(message):
    return CommandError(message, returncode=USAGE)


class SandhiCommand(BaseCommand):
    requires_migrations_checks = False

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)

        def error(message):
            if parser.called_from_command_line:
                parser.print_usage(sys.stderr)
                parser.exit(USAGE, f'{parser.prog}: error: {message}\n')
            raise usage_error(f'Error: {message}')

        parser.error = error
        return parser

    def handle(self, *args, **options):
        try:
            return self.run(**options)
        except CommandError:
            raise
        except InvariantViolation as exc:
            logger.error('Invariant violated in %s: %s', self.__module__, exc)
            raise CommandError(str(exc), returncode=INVARIANT) from exc
        except DataError as exc:
            raise CommandError(str(exc), returncode=DATA) from exc
        except OSError as exc:
            raise CommandError(f'{exc.filename}: {exc.strerror}', returncode=DATA) from exc
        except ValueError as exc:
            raise usage_error(str(exc)) from exc

    def run(self, **options):
        raise NotImplementedError

    def stem(self, text):
        """Tokenize a --stem argument; unknown symbols are data errors."""
        return tokenize(text.strip())
