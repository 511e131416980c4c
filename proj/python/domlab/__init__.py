"""Exact 2-rainbow and weak Roman domination on small graphs.

Rainbow assignments are lists of colour lists (``[[], [1], [1, 2]]``), weak
Roman assignments are lists of values in {0, 1, 2}, and vertex sets are
sorted lists of 0-based indices.
"""

from ._domlab import *  # noqa: F401,F403
from ._domlab import (  # noqa: F401
    CapExceeded,
    DomlabError,
    Graph,
    ParseError,
    Pattern,
    PreconditionError,
    RangeError,
    TheoremViolation,
)

__version__ = "0.1.0"
