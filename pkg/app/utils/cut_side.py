from enum import Enum


class CutSide(Enum):
    AUTO = "auto"
    UPPER = "upper"
    LOWER = "lower"
