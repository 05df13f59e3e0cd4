"""
Catálogo de identidades verificables.

Cada entrada liga un lado izquierdo evaluable (serie, contorno o expresión)
con un lado derecho ConstantExpr transcrito término a término. El peso y el
nivel son metadatos de pertenencia a 𝔷_k(N); no se verifican.
"""

import hashlib
from fractions import Fraction

from ...models.expression.constant_expr import I, Im, Li, Mpl, const, exp_i_pi, rational, sqrt
from ...models.identity.identity import (
    ChudnovskyTerm,
    ExprTerm,
    F32Term,
    Identity,
    SeriesTerm,
    Theorem3Family,
)
from ...utils.named_constant import NamedConstant

THEOREM3_MIN_DIGITS = 30

pi = const(NamedConstant.PI)
G = const(NamedConstant.CATALAN_G)
zeta3 = const(NamedConstant.ZETA3)
beta4 = const(NamedConstant.BETA4)
L823 = const(NamedConstant.L_8_2_3)
L844 = const(NamedConstant.L_8_4_4)
L324 = const(NamedConstant.L_3_2_4)
L1243 = const(NamedConstant.L_12_4_3)
calG = const(NamedConstant.MATHCAL_G)
lam = const(NamedConstant.LAM)
Lam = const(NamedConstant.BIG_LAM)
pound = const(NamedConstant.POUND)
scriptL = const(NamedConstant.SCRIPT_L)
lamt = const(NamedConstant.LAM_TILDE)
Lamt = const(NamedConstant.BIG_LAM_TILDE)

r2 = sqrt(2)
r3 = sqrt(3)
r5 = sqrt(5)
e4 = exp_i_pi(Fraction(1, 4))


def R(numerator, denominator=1):
    return rational(numerator, denominator)


def li(s, point):
    return Li(s, point)


def im_li(s, point):
    return Im(Li(s, point))


def _chen_pos():
    return (
        R(32, 3) * calG
        - R(4, 3) * pi * li(2, 2 - r3)
        - R(1, 9) * pi**3
        - R(1, 3) * pi * (lam - Lamt) ** 2
    )


def _chen_neg():
    inv_phi = (r5 - 1) / 2
    inv_phi3 = r5 - 2
    return (
        -R(4, 3) * li(3, inv_phi3)
        - 4 * li(2, inv_phi3) * pound
        + li(3, inv_phi)
        - R(25, 3) * pound**3
        + 6 * lam * pound**2
        + R(1, 10) * pi**2 * pound
        + R(12, 5) * zeta3
        - R(1, 3) * pi**2 * lam
    )


def _chudnovsky():
    return pi * G - R(33, 16) * zeta3 + R(1, 6) * lam**3 - R(1, 24) * pi**2 * lam


def _catalanlike():
    return (
        -Im(Mpl((2, 1), (I, 1)))
        - R(1, 2) * G * lam
        + R(1, 32) * pi * lam**2
        + R(3, 128) * pi**3
    )


def _s3_2():
    return (
        -8 * im_li(3, (1 - e4) / 2)
        - 4 * im_li(3, I * (r2 - 1))
        - R(1, 32) * pi * (48 * li(2, r2 - 1) - 12 * lam * lamt + 20 * lamt**2 + 9 * lam**2)
        + R(15, 128) * pi**3
    )


def _s4_2():
    return (
        -36 * im_li(4, 1 - e4)
        - 12 * im_li(4, (1 - e4) / 2)
        - 12 * im_li(4, I * (1 - e4))
        - 12 * im_li(4, I * (r2 - 1))
        - R(9, 2) * beta4
        - 14 * r2 * L844
        + R(10, 3) * pi * r2 * L823
        - R(9, 2) * pi * li(3, 1 / r2)
        + R(63, 128) * pi * zeta3
        + R(1, 256) * pi * (78 * lam**2 * lamt - 12 * lam * lamt**2 - 24 * lamt**3 + 47 * lam**3)
        - R(3, 1024) * pi**3 * (141 * lam - 98 * lamt)
    )


def _s3_3():
    return (
        -8 * im_li(3, (1 - I * r3) / 4)
        - 5 * im_li(3, (1 + I / r3) / 2)
        + R(1, 3) * pi * li(2, R(1, 4))
        + R(1, 48) * pi * Lam**2
        - R(7, 432) * pi**3
    )


def _s4_3():
    return (
        8 * im_li(4, (3 + I * r3) / 4)
        - 8 * im_li(4, (1 - I * r3) / 4)
        - 5 * im_li(4, (1 + I / r3) / 2)
        - R(45, 16) * r3 * L324
        + R(1, 3) * pi * (li(3, R(1, 3)) + li(3, R(1, 4)))
        - R(19, 36) * pi * zeta3
        + R(1, 288) * pi * (64 * lam**3 - 192 * lam**2 * Lam + 144 * lam * Lam**2 - 41 * Lam**3)
        + R(1, 864) * pi**3 * (144 * lam - 41 * Lam)
    )


def _s3_4():
    return 4 * calG - R(1, 8) * pi * lam**2 - R(1, 32) * pi**3


def _s4_4():
    return 8 * im_li(4, (1 + I) / 2) - 4 * beta4 + R(1, 24) * pi * lam**3 + R(1, 32) * pi**3 * lam


def _s3_m94():
    return (
        R(4, 3) * li(3, R(1, 3))
        + 2 * li(3, R(1, 4))
        - R(5, 9) * zeta3
        + 2 * li(2, R(1, 4)) * lam
        + R(2, 9) * (6 * lam**3 - Lam**3)
        - R(1, 9) * pi**2 * (3 * lam - 2 * Lam)
    )


def _s4_m94():
    return (
        R(80, 9) * li(4, R(1, 2))
        - R(40, 3) * li(4, R(1, 3))
        + 8 * li(4, R(2, 3))
        + R(7, 2) * li(4, R(1, 4))
        + R(5, 6) * li(4, R(1, 9))
        + 4 * li(3, R(1, 3)) * lam
        + 3 * li(3, R(1, 4)) * lam
        - R(50, 9) * zeta3 * lam
        - R(1, 27) * (35 * lam**4 - 54 * lam**2 * Lam**2 + 54 * lam * Lam**3 - 9 * Lam**4)
        - R(1, 54) * pi**2 * lam * (11 * lam - 36 * Lam)
        - R(101, 1620) * pi**4
    )


def _s3_m4():
    return (
        -2 * li(3, r2 - 1)
        + R(4, 3) * r2 * L823
        + R(25, 16) * zeta3
        - 2 * li(2, r2 - 1) * lamt
        - R(2, 3) * lamt**3
        + R(1, 2) * lam * lamt**2
        - R(1, 8) * pi**2 * lam
    )


def _s4_m4():
    return (
        R(40, 7) * li(4, 1 - 1 / r2)
        + R(4, 21) * li(4, r2 - 1)
        + R(4, 7) * li(4, 1 / r2)
        - R(27, 28) * li(4, R(1, 2))
        - R(59, 14) * li(4, (r2 - 1) ** 2)
        + R(19, 84) * li(4, (r2 - 1) ** 4)
        - R(2, 21) * li(4, (1 - 1 / r2) / 2)
        + R(8, 3) * r2 * L823 * lamt
        - 4 * li(3, 1 / r2) * lamt
        + R(7, 16) * zeta3 * lamt
        + R(1, 4032)
        * (600 * lam**3 * lamt + 1224 * lam**2 * lamt**2 + 96 * lam * lamt**3 - 752 * lamt**4 - 177 * lam**4)
        - R(1, 504) * pi**2 * (189 * lam * lamt - 61 * lamt**2 - 30 * lam**2)
        + R(11, 7560) * pi**4
    )


def _s3_m12():
    return (
        -80 * li(3, 1 / r2)
        + 64 * r2 * L823
        + R(35, 4) * zeta3
        - 20 * li(2, r2 - 1) * lam
        + 10 * lam**2 * lamt
        - 10 * lam * lamt**2
        + R(5, 3) * lam**3
        - R(15, 4) * pi**2 * lam
    )


def _s4_m12():
    return (
        R(1669, 14) * li(4, R(1, 2))
        - R(2112, 7) * li(4, 1 - 1 / r2)
        - R(704, 21) * li(4, r2 - 1)
        + R(24, 7) * li(4, 1 / r2)
        + R(1510, 7) * li(4, (r2 - 1) ** 2)
        - R(475, 42) * li(4, (r2 - 1) ** 4)
        + R(352, 21) * li(4, (1 - 1 / r2) / 2)
        - 100 * li(3, 1 / r2) * lam
        + R(224, 3) * r2 * L823 * lam
        + R(175, 16) * zeta3 * lam
        + R(2, 63)
        * (99 * lam**3 * lamt - 297 * lam**2 * lamt**2 - 132 * lam * lamt**3 + 299 * lamt**4 + 309 * lam**4)
        + R(1, 252) * pi**2 * (1848 * lam * lamt - 1336 * lamt**2 - 2115 * lam**2)
        + R(397, 3780) * pi**4
    )


def _s3_m165():
    inv_phi = (r5 - 1) / 2
    return (
        R(5, 4) * li(3, R(1, 5))
        + R(27, 2) * li(3, inv_phi)
        - 10 * li(3, 1 / r5)
        - R(27, 20) * zeta3
        + R(5, 8) * (li(2, R(1, 5)) - 4 * li(2, 1 / r5)) * scriptL
        - R(9, 2) * pound**3
        + R(27, 20) * pi**2 * pound
        - R(5, 16) * pi**2 * scriptL
    )


def _s3_m43():
    return (
        -R(21, 10) * li(3, R(1, 3))
        - R(7, 40) * li(3, R(1, 4))
        - li(3, (r3 - 1) / 2)
        + R(11, 20) * li(3, 1 - r3 / 2)
        + R(9, 5) * li(3, (2 - r3) / 3)
        - 7 * li(3, 2 - r3)
        + R(24, 5) * li(3, 2 * r3 - 3)
        + R(11, 5) * li(3, 3 * r3 - 5)
        + R(3, 5) * r3 * L1243
        + R(39, 10) * zeta3
        + R(3, 8) * li(2, R(1, 4)) * Lam
        - 3 * li(2, (r3 - 1) / 2) * Lam
        - 3 * li(2, 2 - r3) * Lam
        - R(17, 80) * lam**2 * Lamt
        + R(71, 80) * lam * Lamt**2
        - R(3, 4) * lam * Lam * Lamt
        - R(3, 20) * Lam**2 * Lamt
        + R(21, 40) * Lam * Lamt**2
        - R(209, 240) * Lamt**3
        + R(13, 80) * lam**3
        + R(3, 8) * lam**2 * Lam
        + R(1, 20) * Lam**3
        + R(7, 40) * pi**2 * Lamt
        - R(7, 20) * pi**2 * lam
        - R(7, 80) * pi**2 * Lam
    )


def _f32_k2():
    return -2 * li(2, R(1, 2)) + 2 * li(2, R(-1, 2)) - 2 * lam * Lam + R(1, 2) * pi**2


def _s1_classical():
    return R(2, 9) * pi * r3


def builtin_catalog():
    return [
        Identity(
            "chudnovsky",
            "Chudnovsky: Σ 1/(n³ C(3n,n) 2ⁿ)",
            ChudnovskyTerm(),
            _chudnovsky(),
            weight=3,
            level=4,
            anchor="Chudnovsky formula",
            membership="Z3(4)",
        ),
        Identity(
            "chen_pos", "S_3(1)", SeriesTerm(3, 1), _chen_pos(),
            weight=3, level=12, anchor="Theorem 1", membership="iZ3(12)",
        ),
        Identity(
            "chen_neg", "S_3(-1)", SeriesTerm(3, -1), _chen_neg(),
            weight=3, level=10, anchor="Theorem 2", membership="Z3(10)",
        ),
        Identity(
            "catalanlike",
            "Im Li_3((1+i)/2) vía Li_{2,1}(i,1)",
            ExprTerm(im_li(3, (1 + I) / 2)),
            _catalanlike(),
            weight=3,
            level=4,
            anchor="Catalan-like constant",
            membership="iZ3(4)",
        ),
        Identity(
            "s3_2", "√2·S_3(2)", SeriesTerm(3, 2, r2), _s3_2(),
            weight=3, level=8, anchor="S3(2)", membership="iZ3(8)",
        ),
        Identity(
            "s4_2", "√2·S_4(2)", SeriesTerm(4, 2, r2), _s4_2(),
            weight=4, level=8, anchor="S4(2)", membership="iZ4(8)",
        ),
        Identity(
            "s3_3", "√3·S_3(3)", SeriesTerm(3, 3, r3), _s3_3(),
            weight=3, level=6, anchor="S3(3)", membership="iZ3(6)",
        ),
        Identity(
            "s4_3", "√3·S_4(3)", SeriesTerm(4, 3, r3), _s4_3(),
            weight=4, level=6, anchor="S4(3)", membership="iZ4(6)",
        ),
        Identity(
            "s3_4", "S_3(4)", SeriesTerm(3, 4), _s3_4(),
            weight=3, level=4, anchor="S3(4)", membership="iZ3(4)",
        ),
        Identity(
            "s4_4", "S_4(4)", SeriesTerm(4, 4), _s4_4(),
            weight=4, level=4, anchor="S4(4)", membership="iZ4(4)",
        ),
        Identity(
            "s3_m94", "S_3(-9/4)", SeriesTerm(3, Fraction(-9, 4)), _s3_m94(),
            weight=3, level=6, anchor="S3(-9/4)", membership="Z3(6)",
        ),
        Identity(
            "s4_m94", "S_4(-9/4)", SeriesTerm(4, Fraction(-9, 4)), _s4_m94(),
            weight=4, level=6, anchor="S4(-9/4)", membership="Z4(6)",
        ),
        Identity(
            "s3_m4", "S_3(-4)", SeriesTerm(3, -4), _s3_m4(),
            weight=3, level=8, anchor="S3(-4)", membership="Z3(8)",
        ),
        Identity(
            "s4_m4", "S_4(-4)", SeriesTerm(4, -4), _s4_m4(),
            weight=4, level=8, anchor="S4(-4)", membership="Z4(8)",
        ),
        Identity(
            "s3_m12", "√2·S_3(-1/2)", SeriesTerm(3, Fraction(-1, 2), r2), _s3_m12(),
            weight=3, level=8, anchor="S3(-1/2)", membership="Z3(8)",
        ),
        Identity(
            "s4_m12", "√2·S_4(-1/2)", SeriesTerm(4, Fraction(-1, 2), r2), _s4_m12(),
            weight=4, level=8, anchor="S4(-1/2)", membership="Z4(8)",
        ),
        Identity(
            "s3_m165", "√5·S_3(-16/5)", SeriesTerm(3, Fraction(-16, 5), r5), _s3_m165(),
            weight=3, level=10, anchor="S3(-16/5)", membership="Z3(10)",
        ),
        Identity(
            "s3_m43", "√3·S_3(-4/3)", SeriesTerm(3, Fraction(-4, 3), r3), _s3_m43(),
            weight=3, level=12, anchor="S3(-4/3)", membership="Z3(12)",
        ),
        Identity(
            "f32_k2",
            "x·3F2(1/2,1,1;3/2,3/2;-x²/4) en w = 1/2",
            F32Term(Fraction(1, 2)),
            _f32_k2(),
            weight=2,
            level=6,
            anchor="3F2 reduction for k = 2",
            membership="Z2(6)",
        ),
        Identity(
            "s1_classical", "S_1(1)", SeriesTerm(1, 1), _s1_classical(),
            weight=1, level=12, anchor="classical S1 closed form", membership="iZ1(12)",
        ),
        Identity(
            "thm3_family",
            "Identidad Li2/Li3 en 20 parámetros w sembrados",
            Theorem3Family(),
            None,
            weight=3,
            level=None,
            anchor="Theorem 3",
            min_digits=THEOREM3_MIN_DIGITS,
        ),
    ]


def catalog_hash(catalog=None):
    catalog = builtin_catalog() if catalog is None else catalog
    digest = hashlib.sha256()
    for identity in catalog:
        digest.update(identity.to_text().encode("utf-8"))
        digest.update(b"\n")
    return digest.hexdigest()
