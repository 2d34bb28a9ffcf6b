"""Exceptions raised by hessgk.

All of them subclass ValueError so callers that only guard against bad
input keep working.
"""

from typing import Any


class HessgkError(ValueError):
    pass


class InvalidHessenberg(HessgkError):
    pass


class InvalidGraph(HessgkError):
    pass


class KOutOfRange(HessgkError):
    pass


class MalformedTree(HessgkError):
    pass


class EdgeNotIncident(HessgkError):
    pass


class IntegralityError(HessgkError):
    """A public basis view produced a non-integer coefficient."""


class InvertibilityError(HessgkError):
    pass


class ResourceGuardError(HessgkError):
    def __init__(self, guard: str, limit: int, requested: int):
        self.guard = guard
        self.limit = limit
        self.requested = requested
        super().__init__(
            f"{guard}={requested} exceeds the configured limit {limit}"
        )


class DeltaNotWellDefined(HessgkError):
    def __init__(self, word: tuple[int, ...], produced: Any, reason: str):
        self.word = word
        self.produced = produced
        self.reason = reason
        super().__init__(
            f"Delta({list(word)}) -> {produced} is not in S_2: {reason}"
        )
