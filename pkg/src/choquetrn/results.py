"""Small result carriers: witnesses and verdicts."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional


@dataclass(frozen=True)
class Witness:
    """Concrete evidence that a property fails.

    ``kind`` names the violated property; ``sets`` and ``values`` are the
    offending sets and the values that exhibit the violation.  Re-evaluating
    the property on the witness data must reproduce the failure; the test
    suite asserts this for every witness the library emits.
    """

    kind: str
    sets: tuple = ()
    values: tuple = ()
    detail: str = ""


@dataclass(frozen=True)
class Verdict:
    """A boolean verdict with optional supporting material."""

    holds: bool
    witness: Optional[Witness] = None
    note: str = ""
    table: tuple = field(default=())

    def __bool__(self):
        return self.holds
