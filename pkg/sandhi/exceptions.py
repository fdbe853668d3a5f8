"""
Exception hierarchy for the sandhi toolkit.

Every error raised by the library derives from SandhiError. Management
commands map the two families below onto process exit codes: DataError
means bad input (exit 2), InvariantViolation means a bug signal (exit 3).
"""


class SandhiError(Exception):
    """Base class for all toolkit errors."""


class DataError(SandhiError):
    """Input that cannot be processed: bad symbols, files or parameters."""


class InvariantViolation(SandhiError):
    """An internal guarantee did not hold."""


# Phonology

class UnknownSymbol(DataError):
    def __init__(self, text, position, source=None, line=None):
        self.text = text
        self.position = position
        self.source = source
        self.line = line
        where = f'{source}:{line}: ' if source is not None else ''
        super().__init__(
            f'{where}no romanized symbol matches {text[position:]!r} '
            f'at position {position} of {text!r}'
        )


class NotAVowel(DataError):
    def __init__(self, symbol):
        self.symbol = symbol
        super().__init__(f'{symbol!r} is not a vowel')


class NotAConsonant(DataError):
    def __init__(self, symbol):
        self.symbol = symbol
        super().__init__(f'{symbol!r} is not a consonant')


# Rule engine

class UnclassifiableStem(InvariantViolation):
    def __init__(self, stem, suffix):
        self.stem = stem
        self.suffix = suffix
        super().__init__(f'no sandhi rule fires for {stem} + {suffix}')


class ClassMismatch(InvariantViolation):
    def __init__(self, stem, suffix, given, expected):
        self.given = given
        self.expected = expected
        super().__init__(
            f'{stem} + {suffix}: class {int(given)} given, '
            f'oracle says {int(expected)}'
        )


class InvalidTransformation(DataError):
    def __init__(self, stem, suffix, sandhi_class, reason):
        self.sandhi_class = sandhi_class
        super().__init__(
            f'class {int(sandhi_class)} cannot apply to {stem} + {suffix}: {reason}'
        )


# Files

class FormatError(DataError):
    def __init__(self, message, line=None, source=None):
        self.line = line
        self.source = source
        where = ''
        if source is not None:
            where = f'{source}:'
        if line is not None:
            where = f'{where}{line}:'
        super().__init__(f'{where} {message}' if where else message)


class VersionMismatch(DataError):
    def __init__(self, found, expected):
        self.found = found
        self.expected = expected
        super().__init__(f'model file version {found!r}, expected {expected!r}')


class EmptyCorpus(DataError):
    def __init__(self, source):
        self.source = source
        super().__init__(f'{source}: no stems found')


class EmptyDataset(DataError):
    def __init__(self, source):
        self.source = source
        super().__init__(f'{source}: no instances after the header')


class ModelLoadError(DataError):
    pass


class LexiconExhausted(DataError):
    def __init__(self, requested, produced):
        self.requested = requested
        self.produced = produced
        super().__init__(
            f'only {produced} distinct stems could be generated, {requested} requested'
        )


# Learners

class EmptyDistribution(DataError):
    def __init__(self):
        super().__init__('class distribution has no mass')


class SchemaMismatch(DataError):
    pass


class UnknownAlgorithm(DataError):
    def __init__(self, name, known):
        self.name = name
        super().__init__(f'unknown algorithm {name!r}; choose from {", ".join(known)}')


# Evaluation

class TooFewInstances(DataError):
    def __init__(self, instances, folds):
        super().__init__(f'{instances} instances cannot fill {folds} folds')


class EmptyMatrix(DataError):
    def __init__(self):
        super().__init__('confusion matrix is empty')


class LengthMismatch(DataError):
    def __init__(self, left, right):
        super().__init__(f'{left} actual classes but {right} predicted distributions')


class DegeneratePrior(DataError):
    def __init__(self):
        super().__init__('prior predictor has zero error; relative errors are undefined')


class JunctionSetMismatch(DataError):
    def __init__(self, left, right):
        super().__init__(f'datasets disagree on instance count ({left} vs {right})')
