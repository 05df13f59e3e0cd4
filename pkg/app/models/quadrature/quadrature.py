from dataclasses import dataclass


@dataclass(frozen=True)
class Segment:
    z0: object
    z1: object

    def __post_init__(self):
        if self.z0 == self.z1:
            raise ValueError("Los extremos del segmento deben ser distintos.")


@dataclass(frozen=True)
class QuadResult:
    value: object
    error_estimate: object
    levels_used: int

    def to_dict(self):
        return {
            "value": self.value.to_dict(),
            "error_estimate": str(self.error_estimate),
            "levels_used": self.levels_used,
        }
