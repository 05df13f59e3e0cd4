import os
from dataclasses import dataclass, field

from ..precision.precision import MIN_DIGITS


def _default_jobs():
    return os.cpu_count() or 1


@dataclass(frozen=True)
class CliConfig:
    digits: int = 40
    jobs: int = field(default_factory=_default_jobs)
    json: bool = False
    output_path: object = None
    guard: int = 10

    def __post_init__(self):
        if self.digits < MIN_DIGITS:
            raise ValueError(f"La precisión debe ser de al menos {MIN_DIGITS} dígitos.")
        if self.jobs < 1:
            raise ValueError("El número de procesos debe ser al menos 1.")

    @classmethod
    def from_app(cls, app, digits=None, jobs=None, output_path=None):
        return cls(
            digits=app.config["INVBINOM_DIGITS"] if digits is None else digits,
            jobs=app.config["INVBINOM_JOBS"] if jobs is None else jobs,
            json=output_path is not None,
            output_path=output_path,
            guard=app.config["INVBINOM_GUARD"],
        )
