from dataclasses import dataclass, field
from typing import Optional

from .witness import Witness


@dataclass(frozen=True)
class Verdict:
    algorithm: str
    opaque: bool
    witness: Optional[Witness] = None
    stats: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.opaque == (self.witness is not None):
            raise ValueError("a verdict carries a witness exactly when it is not opaque")

    @property
    def label(self) -> str:
        return "OPAQUE" if self.opaque else "NOT OPAQUE"

    def to_dict(self) -> dict:
        return {
            "algorithm": self.algorithm,
            "opaque": self.opaque,
            "verdict": self.label,
            "witness": self.witness.to_dict() if self.witness else None,
            "stats": dict(self.stats),
        }
