"""The rank-3 plactic monoid, its quotients N1, N2 and their z = 1 quotients, and
their central localizations, with bounded identity checking."""

__version__ = "0.1.0"
