"""Frozen reference data for the acceptance suite.

The folded sesquilinear forms of the alpha = 2 sector partition functions
for the six smallest (p, p') pairs, and sampled reference cells of the
Bezout-conjugate Kac tables.  Labels are exact; half-integers appear with
denominator 2.  The test-suite carries an independently transcribed copy of
the same data so a typo in either transcription surfaces as a mismatch.
"""

from fractions import Fraction as F

from .conformal import SesquiTerm


def _terms(level, z, spec):
    out = []
    for item in spec.split():
        coeff, lft, rgt = item.split(":")
        out.append(SesquiTerm(int(coeff), F(lft), F(rgt), z, level))
    return out


GOLDEN_APPENDIX_FORMS = {
    (1, 2, 0, 0): _terms(2, 1, "1:0:0 2:1:1 1:2:2"),
    (1, 2, 0, 1): _terms(2, -1, "1:0:0 2:1:1 1:2:2"),
    (1, 2, 1, 0): _terms(2, 1, "2:1/2:1/2 2:3/2:3/2"),
    (1, 2, 1, 1): _terms(2, -1, "2:1/2:1/2 2:3/2:3/2"),
    (1, 3, 0, 0): _terms(3, 1, "1:0:0 2:1:1 2:2:2 1:3:3"),
    (1, 3, 0, 1): _terms(3, -1, "1:0:0 2:1:1 2:2:2 1:3:3"),
    (1, 3, 1, 0): _terms(3, 1, "2:1/2:1/2 2:3/2:3/2 2:5/2:5/2"),
    (1, 3, 1, 1): _terms(3, -1, "2:1/2:1/2 2:3/2:3/2 2:5/2:5/2"),
    (2, 3, 0, 0): _terms(6, 1, "1:0:0 2:1:5 2:2:2 2:3:3 2:4:4 2:5:1 1:6:6"),
    (2, 3, 0, 1): _terms(6, 1, "1:0:0 -2:1:5 2:2:2 -2:3:3 2:4:4 -2:5:1 1:6:6"),
    (2, 3, 1, 0): _terms(6, 1, "1:0:6 2:1:1 2:2:4 2:3:3 2:4:2 2:5:5 1:6:0"),
    (2, 3, 1, 1): _terms(6, 1, "-1:0:6 2:1:1 -2:2:4 2:3:3 -2:4:2 2:5:5 -1:6:0"),
    (3, 4, 0, 0): _terms(12, 1,
                         "1:0:0 2:1:7 2:2:10 2:3:3 2:4:4 2:5:11 2:6:6 "
                         "2:7:1 2:8:8 2:9:9 2:10:2 2:11:5 1:12:12"),
    (3, 4, 0, 1): _terms(12, -1,
                         "1:0:0 -2:1:7 -2:2:10 2:3:3 -2:4:4 2:5:11 2:6:6 "
                         "-2:7:1 2:8:8 2:9:9 -2:10:2 2:11:5 1:12:12"),
    (3, 4, 1, 0): _terms(12, 1,
                         "2:1/2:17/2 2:3/2:3/2 2:5/2:11/2 2:7/2:23/2 "
                         "2:9/2:9/2 2:11/2:5/2 2:13/2:19/2 2:15/2:15/2 "
                         "2:17/2:1/2 2:19/2:13/2 2:21/2:21/2 2:23/2:7/2"),
    (3, 4, 1, 1): _terms(12, -1,
                         "-2:1/2:17/2 2:3/2:3/2 -2:5/2:11/2 -2:7/2:23/2 "
                         "2:9/2:9/2 -2:11/2:5/2 2:13/2:19/2 2:15/2:15/2 "
                         "-2:17/2:1/2 2:19/2:13/2 2:21/2:21/2 -2:23/2:7/2"),
    (3, 5, 0, 0): _terms(15, 1,
                         "1:0:0 2:1:11 2:2:8 2:3:3 2:4:14 2:5:5 2:6:6 "
                         "2:7:13 2:8:2 2:9:9 2:10:10 2:11:1 2:12:12 "
                         "2:13:7 2:14:4 1:15:15"),
    (3, 5, 0, 1): _terms(15, -1,
                         "1:0:0 -2:1:11 -2:2:8 2:3:3 -2:4:14 -2:5:5 2:6:6 "
                         "2:7:13 -2:8:2 2:9:9 2:10:10 -2:11:1 2:12:12 "
                         "2:13:7 -2:14:4 1:15:15"),
    (3, 5, 1, 0): _terms(15, 1,
                         "2:1/2:19/2 2:3/2:3/2 2:5/2:25/2 2:7/2:13/2 "
                         "2:9/2:9/2 2:11/2:29/2 2:13/2:7/2 2:15/2:15/2 "
                         "2:17/2:23/2 2:19/2:1/2 2:21/2:21/2 2:23/2:17/2 "
                         "2:25/2:5/2 2:27/2:27/2 2:29/2:11/2"),
    (3, 5, 1, 1): _terms(15, -1,
                         "-2:1/2:19/2 2:3/2:3/2 -2:5/2:25/2 -2:7/2:13/2 "
                         "2:9/2:9/2 2:11/2:29/2 -2:13/2:7/2 2:15/2:15/2 "
                         "2:17/2:23/2 -2:19/2:1/2 2:21/2:21/2 2:23/2:17/2 "
                         "-2:25/2:5/2 2:27/2:27/2 2:29/2:11/2"),
    (4, 5, 0, 0): _terms(20, 1,
                         "1:0:0 2:1:9 2:2:18 2:3:13 2:4:4 2:5:5 2:6:14 "
                         "2:7:17 2:8:8 2:9:1 2:10:10 2:11:19 2:12:12 "
                         "2:13:3 2:14:6 2:15:15 2:16:16 2:17:7 2:18:2 "
                         "2:19:11 1:20:20"),
    (4, 5, 0, 1): _terms(20, 1,
                         "1:0:0 -2:1:9 2:2:18 -2:3:13 2:4:4 -2:5:5 2:6:14 "
                         "-2:7:17 2:8:8 -2:9:1 2:10:10 -2:11:19 2:12:12 "
                         "-2:13:3 2:14:6 -2:15:15 2:16:16 -2:17:7 2:18:2 "
                         "-2:19:11 1:20:20"),
    (4, 5, 1, 0): _terms(20, 1,
                         "1:0:20 2:1:11 2:2:2 2:3:7 2:4:16 2:5:15 2:6:6 "
                         "2:7:3 2:8:12 2:9:19 2:10:10 2:11:1 2:12:8 "
                         "2:13:17 2:14:14 2:15:5 2:16:4 2:17:13 2:18:18 "
                         "2:19:9 1:20:0"),
    (4, 5, 1, 1): _terms(20, 1,
                         "1:0:20 -2:1:11 2:2:2 -2:3:7 2:4:16 -2:5:15 2:6:6 "
                         "-2:7:3 2:8:12 -2:9:19 2:10:10 -2:11:1 2:12:8 "
                         "-2:13:17 2:14:14 -2:15:5 2:16:4 -2:17:13 2:18:18 "
                         "-2:19:9 1:20:0"),
}


# sampled reference cells of the Bezout-conjugate Kac tables: (r, s) ->
# pair of doubled labels (2 (j + h'/2), 2 conj)
GOLDEN_TABLE_CELLS = {
    (3, 4, 0, 0): {
        (0, 0): (0, 0), (1, 0): (8, 8), (2, 0): (16, 16),
        (0, 1): (42, 6), (1, 1): (2, 14), (2, 1): (10, 22),
        (0, 4): (24, 24), (1, 5): (26, 38), (2, 7): (22, 10),
    },
    (3, 4, 1, 1): {
        (0, 0): (93, 3), (1, 0): (5, 11), (2, 0): (13, 19),
        (0, 1): (87, 9), (1, 1): (95, 17), (2, 1): (7, 25),
        (0, 7): (51, 45), (1, 4): (77, 35), (2, 3): (91, 37),
    },
    (3, 5, 0, 0): {
        (0, 0): (0, 0), (1, 0): (10, 10), (2, 0): (20, 20),
        (0, 1): (54, 6), (1, 1): (4, 16), (2, 1): (14, 26),
        (1, 7): (28, 52), (2, 2): (8, 32), (0, 3): (42, 18),
    },
    (3, 5, 1, 1): {
        (0, 0): (117, 3), (1, 0): (7, 13), (2, 0): (17, 23),
        (0, 1): (111, 9), (1, 1): (1, 19), (2, 1): (11, 29),
        (0, 4): (93, 27), (1, 5): (97, 43), (2, 8): (89, 71),
    },
    (4, 5, 0, 0): {
        (0, 0): (0, 0), (1, 0): (10, 10), (2, 0): (20, 20), (3, 0): (30, 30),
        (0, 1): (72, 8), (1, 1): (2, 18), (2, 1): (12, 28), (3, 1): (22, 38),
        (2, 4): (68, 52),
    },
    (4, 5, 1, 0): {
        (0, 0): (76, 4), (1, 0): (6, 14), (2, 0): (16, 24), (3, 0): (26, 34),
        (1, 1): (78, 22), (2, 1): (8, 32), (3, 5): (66, 74), (0, 9): (4, 76),
    },
}
