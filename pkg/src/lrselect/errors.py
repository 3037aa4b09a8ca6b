"""Typed errors shared across the toolkit.

Every failure surfaced to callers is a subclass of :class:`LrselectError`.
``exit_code`` is the CLI mapping: 2 validation/usage, 3 I/O, 4 numerical.
"""


class LrselectError(Exception):
    exit_code = 2


class MissingFile(LrselectError):
    """A manifest, feature file, model file or other input is absent."""


class ParseError(LrselectError):
    """Malformed manifest line, CSV row or JSON document."""


class DimMismatch(LrselectError):
    """Declared dimensions disagree (record vs file header, model vs frames)."""


class DuplicateId(LrselectError):
    """The same utterance id occurs more than once in a manifest."""


class UnknownId(LrselectError):
    """An utterance id is not present in the manifest."""


class CorruptFile(LrselectError):
    """Bad magic, short read or non-finite payload in a feature file."""


class InvalidSpec(LrselectError):
    """A synthetic domain specification violates its invariants."""


class EmptyInput(LrselectError):
    """An operation requiring a non-empty list received an empty one."""


class TooLarge(LrselectError):
    """Instance exceeds the size limit of an exhaustive oracle."""


class MissingDomainLabels(LrselectError):
    """Evaluation requires domain labels but the manifest lacks them."""


class IoError(LrselectError):
    """Failure while writing an output file."""

    exit_code = 3


class TooFewFrames(LrselectError):
    """Fewer data points than mixture components."""

    exit_code = 4


class DegenerateData(LrselectError):
    """Data unusable for estimation (e.g. a dimension with zero variance)."""

    exit_code = 4
