"""Resource caps.  Hitting one raises ``CapExceeded``; nothing is approximated."""

import os

DEFAULT_MAX_CLASS = 1_000_000
DEFAULT_MAX_WORD_LEN = 10
DEFAULT_MAX_LEVEL = 64
DEFAULT_MAX_SUBSTITUTIONS = 5_000_000


class CapExceeded(RuntimeError):
    """A configured search limit was reached before the answer was known."""


class StrategyError(ValueError):
    """The requested operation is not supported by the monoid's strategy."""


def max_class_size() -> int:
    return int(os.environ.get("PLACTIC_MAX_CLASS", DEFAULT_MAX_CLASS))


def max_word_len() -> int:
    return int(os.environ.get("PLACTIC_MAX_WORD_LEN", DEFAULT_MAX_WORD_LEN))
