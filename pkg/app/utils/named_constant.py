from enum import Enum


class NamedConstant(Enum):
    PI = "pi"
    CATALAN_G = "catalan_G"
    ZETA3 = "zeta3"
    BETA4 = "beta4"
    L_8_2_3 = "L_8_2_3"
    L_8_4_4 = "L_8_4_4"
    L_3_2_4 = "L_3_2_4"
    L_12_4_3 = "L_12_4_3"
    MATHCAL_G = "mathcal_G"
    LAM = "lam"
    BIG_LAM = "Lam"
    POUND = "pound"
    SCRIPT_L = "scriptL"
    LAM_TILDE = "lam_tilde"
    BIG_LAM_TILDE = "Lam_tilde"
    PHI = "phi"

    @classmethod
    def from_name(cls, name):
        for constant in cls:
            if constant.value == name:
                return constant
        raise ValueError(f"La constante '{name}' no existe.")
