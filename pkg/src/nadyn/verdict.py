"""Three-valued verdicts with re-checkable evidence."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field


class Outcome(enum.Enum):
    CERTIFIED = "Certified"
    REFUTED = "Refuted"
    INCONCLUSIVE = "Inconclusive"


# weakest first; used when a conjunction reports its weakest component
_RANK = {Outcome.REFUTED: 0, Outcome.INCONCLUSIVE: 1, Outcome.CERTIFIED: 2}


@dataclass(frozen=True)
class Verdict:
    """Outcome of a certifier.

    ``witness`` is a dict with a ``kind`` key naming how to replay it.
    ``scale`` is set when the claim is about a horizon-bounded predicate
    (or, for Inconclusive, records what was exhausted).  ``components``
    holds sub-verdicts of conjunctions.
    """

    outcome: Outcome
    witness: dict | None = None
    scale: dict | None = None
    components: dict = field(default_factory=dict)

    @classmethod
    def certified(cls, witness, scale=None, components=None):
        return cls(Outcome.CERTIFIED, witness, scale, components or {})

    @classmethod
    def refuted(cls, witness, scale=None, components=None):
        return cls(Outcome.REFUTED, witness, scale, components or {})

    @classmethod
    def inconclusive(cls, scale, components=None, witness=None):
        return cls(Outcome.INCONCLUSIVE, witness, scale, components or {})

    @property
    def is_certified(self):
        return self.outcome is Outcome.CERTIFIED

    @property
    def is_refuted(self):
        return self.outcome is Outcome.REFUTED

    @property
    def at_scale(self) -> bool:
        return self.scale is not None

    def __str__(self):
        tag = self.outcome.value
        if self.scale is not None and self.outcome is not Outcome.INCONCLUSIVE:
            tag += " (at scale)"
        return tag


def weakest(verdicts) -> Verdict:
    return min(verdicts, key=lambda v: _RANK[v.outcome])
