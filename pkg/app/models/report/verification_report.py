from dataclasses import asdict, dataclass
from enum import Enum


class ReportStatus(Enum):
    PASS = "pass"
    FAIL = "fail"
    ERROR = "error"


@dataclass(frozen=True)
class VerificationReport:
    """Resultado de comparar lhs y rhs de una identidad. Los valores van como texto decimal."""

    id: str
    status: ReportStatus
    lhs_value: str
    rhs_value: str
    abs_diff: str
    digits_agreed: float
    precision_used: int
    elapsed_ms: int
    anchor: str
    weight: int
    level: object
    min_digits: int
    message: str = ""

    @property
    def passed(self):
        return self.status == ReportStatus.PASS

    def to_dict(self):
        data = asdict(self)
        data["status"] = self.status.value
        return data

    def stable_dict(self):
        """Campos del reporte JSON; el tiempo va aparte."""
        data = self.to_dict()
        data.pop("elapsed_ms")
        return data
