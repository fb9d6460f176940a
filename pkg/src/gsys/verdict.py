from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Verdict:
    """A boolean answer with an optional certificate.

    Truthiness follows ``holds`` so checks read naturally in ``if``/``assert``.
    """

    holds: bool
    witness: Any = None

    def __bool__(self):
        return self.holds
