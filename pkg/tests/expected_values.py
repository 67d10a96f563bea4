"""Frozen expected values.

Every number here was computed ahead of time with independent throwaway
implementations (straightforward dense linear algebra and exhaustive
enumeration, no code shared with the package) and cross-checked where a
second route existed.  Tests compare package output against these literals;
none of them is derived from package code.
"""

# smallest-integer primitive modulus per degree
MODULI = {
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0b100011101,
    9: 0b1000010001,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000001010011,
    13: 0b10000000011011,
    14: 0b100000000101011,
}

# minimal polynomials over GF(2) of alpha^s in GF(16), modulus x^4+x+1
MINPOLY_M4 = {
    0: 0b11,          # x + 1
    1: 0b10011,       # x^4 + x + 1
    3: 0b11111,       # x^4 + x^3 + x^2 + x + 1
    5: 0b111,         # x^2 + x + 1
    7: 0b11001,       # x^4 + x^3 + 1
}

# generator polynomials (bitmask coefficients, bit i = x^i)
GEN_POLY = {
    (4, (1,)): 465,        # deg 10 -> [15, 5]
    (4, (2,)): 121,        # deg  6 -> [15, 9]
    (6, (2,)): 0x1969,     # deg 12 -> [63, 51]
    (6, (3,)): 0x357,      # deg  9 -> [63, 54]
    (5, (1, 2)): 0x8FAF,   # deg 15 -> [31, 16]
}

# dual weight distributions at m = 4 (nonzero counts only)
DUAL_WD_M4_E1 = {0: 1, 4: 15, 6: 100, 8: 75, 10: 60, 12: 5}
DUAL_WD_M4_E2 = {0: 1, 6: 30, 8: 15, 10: 18}
DUAL_EXT_WD_M4_E1 = {0: 1, 4: 20, 6: 160, 8: 150, 10: 160, 12: 20, 16: 1}
DUAL_EXT_WD_M4_E2 = {0: 1, 6: 48, 8: 30, 10: 48, 16: 1}

# [64, 13] = dual of the extended two-coset code at m = 6, e = 2
DUAL_EXT_WD_M6_E2 = {0: 1, 24: 1008, 32: 6174, 40: 1008, 64: 1}

# [256, 17] = dual of the extended two-coset code at m = 8, e = 2
DUAL_EXT_WD_M8_E2 = {
    0: 1, 96: 816, 120: 52224, 128: 24990, 136: 52224, 160: 816, 256: 1,
}

# [32, 16] extension of the m = 5, E = {1, 2} code; self-dual, d = 8
WD_M5_E12_EXT = {0: 1, 8: 620, 12: 13888, 16: 36518, 20: 13888, 24: 620, 32: 1}

# extended primal code, low-weight counts
EXT_PRIMAL_A4_M6 = 336        # [64, 51]
EXT_PRIMAL_A6_M6 = 13440
EXT_PRIMAL_A8_M6 = 1130040
EXT_PRIMAL_A4_M10 = 87296     # [1024, 1003]

# designs carried by the m = 6 codes (t = 2)
DESIGNS_M6 = {
    # weight: (lambda, block count)
    (51, 4): (1, 336),        # the Steiner system on 64 points
    (51, 6): (100, 13440),
    (51, 8): (15695, 1130040),
    (13, 24): (138, 1008),
    (13, 32): (1519, 6174),
    (13, 40): (390, 1008),
}

# designs carried by the [256, 17] code at m = 8 (t = 2)
DESIGNS_M8 = {
    96: (114, 816),
    120: (11424, 52224),
}

# Steiner system on 1024 points from the m = 10 extension
STEINER_M10_BLOCKS = 87296

# Assmus-Mattson instances
AM_NEGATIVE_M6 = {"t": 2, "s": 3, "d": 4}          # s > d - t: criterion fails
AM_POSITIVE_M5 = {"t": 3, "s": 5, "d": 8, "lambda_at_8": 7, "b_at_8": 620}

# downward-closure counterexample: {0} union the coset of 3 mod 15
KLP_NEGATIVE_WITNESS = (3, 1)

# largest_w fixed points for non-binary alphabets
LARGEST_W_CASES = {(13, 3, 4): 7, (32, 2, 8): 32, (10, 4, 3): 4}
