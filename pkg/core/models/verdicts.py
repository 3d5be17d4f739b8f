"""
Veredictos tri-valorados e o relatório de análise
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from core.config import get_settings


class Tri(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Reason:
    tag: str
    text: str = ""


@dataclass(frozen=True)
class Verdict:
    value: Tri
    reasons: Tuple[Reason, ...] = ()

    @classmethod
    def of(cls, value: Tri, *reasons: Tuple[str, str]) -> "Verdict":
        return cls(value, tuple(Reason(tag, text) for tag, text in reasons))

    @property
    def tags(self) -> List[str]:
        return [r.tag for r in self.reasons]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "value": self.value.value,
            "reasons": [{"tag": r.tag, "text": r.text} for r in self.reasons],
        }


@dataclass(frozen=True)
class AnalysisCaps:
    """Limites das buscas; valores padrão vêm das configurações"""
    depth_cap: int = 64
    probe_l: int = 4
    germ_depth_cap: int = 32
    cycle_length_cap: Optional[int] = None

    @classmethod
    def from_settings(cls, **overrides: Any) -> "AnalysisCaps":
        settings = get_settings()
        values = {
            "depth_cap": settings.FIXED_CYLINDER_STATE_CAP,
            "probe_l": settings.PROBE_L,
            "germ_depth_cap": settings.GERM_DEPTH_CAP,
            "cycle_length_cap": settings.CYCLE_LENGTH_CAP or None,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


# Campos que entram em serialização e no modo --strict, em ordem
VERDICT_FIELDS = (
    "condition0",
    "conditionE",
    "irreducible",
    "conditionL",
    "conditionK",
    "minimal",
    "topologically_free",
    "essentially_principal",
    "hausdorff",
    "simple",
    "locally_contracting",
    "purely_infinite_simple",
    "katsura_classic",
    "nuclear",
    "etale",
    "amenable",
)


@dataclass(frozen=True)
class AnalysisReport:
    condition0: Verdict
    conditionE: Verdict
    irreducible: Verdict
    conditionL: Verdict
    conditionK: Verdict
    minimal: Verdict
    topologically_free: Verdict
    essentially_principal: Verdict
    hausdorff: Verdict
    simple: Verdict
    locally_contracting: Verdict
    purely_infinite_simple: Verdict
    katsura_classic: Verdict
    nuclear: Verdict
    etale: Verdict
    amenable: Verdict
    kgroups: Any = None
    notes: Tuple[str, ...] = field(default_factory=tuple)

    def verdicts(self) -> Dict[str, Verdict]:
        return {name: getattr(self, name) for name in VERDICT_FIELDS}

    def has_unknown(self) -> bool:
        return any(v.value == Tri.UNKNOWN for v in self.verdicts().values())

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {name: v.to_dict() for name, v in self.verdicts().items()}
        payload["kgroups"] = self.kgroups.to_dict() if self.kgroups is not None else None
        payload["notes"] = list(self.notes)
        return payload
