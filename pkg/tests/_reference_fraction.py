# Frozen reference data: closed-form numerator/denominator (in c, p1, p2) of the
# cleared vertex condition value at the vertex (-1, 2) for the two-parameter
# projective-bundle family with fiber the standard triangle (t = 1), one base
# factor (n = 3, s = 24), degree form p = p1*x1 + p2*x2.  Exponent keys are
# (deg_c, deg_p1, deg_p2); values are integer coefficients.

from fractions import Fraction

REF_NUM = {
    (10, 0, 0): 12250,
    (9, 1, 0): 24500,
    (9, 0, 1): -49000,
    (8, 2, 0): -39690,
    (8, 1, 1): 127890,
    (8, 0, 2): -127890,
    (7, 3, 0): 18060,
    (7, 2, 1): 34650,
    (7, 2, 0): 132300,
    (7, 1, 2): -212310,
    (7, 1, 1): -396900,
    (7, 0, 3): 141540,
    (7, 0, 2): 396900,
    (6, 4, 0): -22470,
    (6, 3, 1): 286860,
    (6, 3, 0): 105840,
    (6, 2, 2): -615510,
    (6, 2, 1): -449820,
    (6, 1, 3): 657300,
    (6, 1, 2): 714420,
    (6, 0, 4): -328650,
    (6, 0, 3): -476280,
    (5, 5, 0): -31752,
    (5, 4, 1): 152460,
    (5, 4, 0): -11340,
    (5, 3, 2): -373212,
    (5, 3, 1): -260820,
    (5, 2, 3): 603288,
    (5, 2, 2): 601020,
    (5, 1, 4): -531720,
    (5, 1, 3): -680400,
    (5, 0, 5): 212688,
    (5, 0, 4): 340200,
    (4, 6, 0): -53376,
    (4, 5, 1): 360972,
    (4, 5, 0): 125496,
    (4, 4, 2): -921924,
    (4, 4, 1): -374220,
    (4, 3, 3): 1408632,
    (4, 3, 2): 378756,
    (4, 2, 4): -1421136,
    (4, 2, 3): -282744,
    (4, 1, 5): 860184,
    (4, 1, 4): 45360,
    (4, 0, 6): -286728,
    (4, 0, 5): -18144,
    (3, 7, 0): 22740,
    (3, 6, 1): -59520,
    (3, 6, 0): 151200,
    (3, 5, 2): -43812,
    (3, 5, 1): -420336,
    (3, 4, 3): 390936,
    (3, 4, 2): 743904,
    (3, 3, 4): -806100,
    (3, 3, 3): -728784,
    (3, 2, 5): 849456,
    (3, 2, 4): 568512,
    (3, 1, 6): -527016,
    (3, 1, 5): -244944,
    (3, 0, 7): 150576,
    (3, 0, 6): 81648,
    (2, 8, 0): -57024,
    (2, 7, 1): 230112,
    (2, 7, 0): -79056,
    (2, 6, 2): -425376,
    (2, 6, 1): 358992,
    (2, 5, 3): 571536,
    (2, 5, 2): -557280,
    (2, 4, 4): -829080,
    (2, 4, 3): 99792,
    (2, 3, 5): 906192,
    (2, 3, 4): 829440,
    (2, 2, 6): -725760,
    (2, 2, 5): -1175472,
    (2, 1, 7): 363168,
    (2, 1, 6): 843696,
    (2, 0, 8): -90792,
    (2, 0, 7): -241056,
    (1, 9, 0): 7352,
    (1, 8, 1): 18288,
    (1, 8, 0): 60048,
    (1, 7, 2): -160632,
    (1, 7, 1): -364176,
    (1, 6, 3): 349440,
    (1, 6, 2): 734832,
    (1, 5, 4): -497592,
    (1, 5, 3): -1073520,
    (1, 4, 5): 485712,
    (1, 4, 4): 1551312,
    (1, 3, 6): -329952,
    (1, 3, 5): -1732752,
    (1, 2, 7): 156096,
    (1, 2, 6): 1436400,
    (1, 1, 8): -46368,
    (1, 1, 7): -736128,
    (1, 0, 9): 10304,
    (1, 0, 8): 184032,
    (0, 10, 0): 1312,
    (0, 9, 1): -464,
    (0, 9, 0): -12096,
    (0, 8, 2): -19296,
    (0, 8, 1): 17712,
    (0, 7, 3): 41376,
    (0, 7, 2): 84240,
    (0, 6, 4): -22416,
    (0, 6, 3): -287280,
    (0, 5, 5): -7488,
    (0, 5, 4): 415152,
    (0, 4, 6): 22656,
    (0, 4, 5): -358992,
    (0, 3, 7): -25728,
    (0, 3, 6): 323568,
    (0, 2, 8): 16992,
    (0, 2, 7): -279072,
    (0, 1, 9): -7040,
    (0, 1, 8): 139968,
    (0, 0, 10): 1408,
    (0, 0, 9): -31104,
}

REF_DEN = {
    (9, 0, 0): 6125,
    (7, 2, 0): 2205,
    (7, 1, 1): -2205,
    (7, 0, 2): 2205,
    (6, 3, 0): 210,
    (6, 2, 1): -315,
    (6, 1, 2): -315,
    (6, 0, 3): 210,
    (5, 4, 0): 14175,
    (5, 3, 1): -28350,
    (5, 2, 2): 42525,
    (5, 1, 3): -28350,
    (5, 0, 4): 14175,
    (4, 5, 0): -7812,
    (4, 4, 1): 19530,
    (4, 3, 2): -7812,
    (4, 2, 3): -7812,
    (4, 1, 4): 19530,
    (4, 0, 5): -7812,
    (3, 6, 0): 24,
    (3, 5, 1): -72,
    (3, 4, 2): 4356,
    (3, 3, 3): -8592,
    (3, 2, 4): 4356,
    (3, 1, 5): -72,
    (3, 0, 6): 24,
    (2, 7, 0): 9072,
    (2, 6, 1): -31752,
    (2, 5, 2): 40824,
    (2, 4, 3): -22680,
    (2, 3, 4): -22680,
    (2, 2, 5): 40824,
    (2, 1, 6): -31752,
    (2, 0, 7): 9072,
    (1, 8, 0): -5004,
    (1, 7, 1): 20016,
    (1, 6, 2): -40320,
    (1, 5, 3): 50904,
    (1, 4, 4): -56196,
    (1, 3, 5): 50904,
    (1, 2, 6): -40320,
    (1, 1, 7): 20016,
    (1, 0, 8): -5004,
    (0, 9, 0): 688,
    (0, 8, 1): -3096,
    (0, 7, 2): 4464,
    (0, 6, 3): -1176,
    (0, 5, 4): -1224,
    (0, 4, 5): -1224,
    (0, 3, 6): -1176,
    (0, 2, 7): 4464,
    (0, 1, 8): -3096,
    (0, 0, 9): 688,
}


def eval_ref(coeffs: dict, c, p1, p2) -> Fraction:
    return sum(
        Fraction(co) * c**i * p1**j * p2**k for (i, j, k), co in coeffs.items()
    )


def ref_value(c, p1, p2) -> Fraction:
    """The reference rational function P/Q at a sample point."""
    return eval_ref(REF_NUM, c, p1, p2) / eval_ref(REF_DEN, c, p1, p2)
