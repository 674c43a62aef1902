"""
Certificates: an orientation proving acceptance or a pattern model proving rejection
"""
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from graphs.graph import Graph
from oracles.orientation import Orientation, is_one_perfect, sinks
from oracles.twosat import is_1po_2sat
from patterns.catalog import pattern
from patterns.containment import ContainmentMode, MinorModel, verify_model


class Verdict(str, Enum):
    ACCEPT = "accept"
    REJECT = "reject"


class BlockLabel(str, Enum):
    TWO_TREE_LIKE = "TwoTreeLike"
    HOLLOWED = "Hollowed"
    OTHER = "Other"


@dataclass(frozen=True)
class Witness:
    pattern: str
    model: MinorModel


@dataclass(frozen=True)
class Certificate:
    """Verdict plus the evidence for it.

    ``sink`` is set for rooted questions: an accepting orientation then has
    exactly that sink.
    """
    verdict: Verdict
    orientation: Optional[Orientation] = None
    witness: Optional[Witness] = None
    reason: str = ""
    sink: Optional[int] = None

    @classmethod
    def accept(cls, orientation: Orientation, reason: str, sink: int = None) -> "Certificate":
        return cls(Verdict.ACCEPT, orientation=orientation, reason=reason, sink=sink)

    @classmethod
    def reject(cls, witness: Optional[Witness], reason: str, sink: int = None) -> "Certificate":
        return cls(Verdict.REJECT, witness=witness, reason=reason, sink=sink)

    @property
    def accepted(self) -> bool:
        return self.verdict is Verdict.ACCEPT

    def verify(self, host: Graph) -> bool:
        """Re-check the evidence against ``host``"""
        if self.accepted:
            if self.orientation is None or self.orientation.host != host:
                return False
            if not is_one_perfect(self.orientation):
                return False
            if self.sink is not None and self.orientation.host.is_connected():
                return sinks(self.orientation) == [self.sink]
            return True
        if self.witness is None:
            return not is_1po_2sat(host, self.sink)
        target = pattern(self.witness.pattern).graph
        return verify_model(host, target, self.witness.model, ContainmentMode.INDUCED)
