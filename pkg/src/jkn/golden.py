"""Frozen reference data for the self test and the test suite.

These constants were transcribed by hand and are deliberately independent
of the enumeration code: the self test compares computed counts against
them, so a regression in the search or classification logic cannot
silently refresh its own expectations.

REAL_COUNTS and ALMOST_COUNTS hold positive-root counts per degree 1..7
for concrete (k, n).  ORBIT_COUNTS holds orbit-class counts per degree
1..11; its keys are (k, n), (k, None) for "any sufficiently large n", and
(None, None) for "k and n both sufficiently large".  GENERIC_REAL_CORES
and GENERIC_ALMOST_CORES list every generic orbit of degrees 1..5 as
(minimal-support core, k_min) pairs.
"""

from __future__ import annotations

GridKey = tuple[int, int]

# Positive real roots per degree 1..7.
REAL_COUNTS: dict[GridKey, tuple[int, ...]] = {
    (3, 6): (20, 1, 0, 0, 0, 0, 0),
    (3, 7): (35, 7, 0, 0, 0, 0, 0),
    (3, 8): (56, 28, 8, 0, 0, 0, 0),
    (3, 9): (84, 84, 72, 84, 84, 72, 84),
    (3, 10): (120, 210, 360, 850, 1680, 3870, 7560),
    (3, 11): (165, 462, 1320, 4730, 13860, 42240, 106260),
    (3, 12): (220, 924, 3960, 19140, 73932, 267300, 802164),
    (3, 13): (286, 1716, 10296, 62920, 300456, 1235520, 4241952),
    (3, 14): (364, 3003, 24024, 178178, 1010100, 4618628, 17669652),
    (3, 15): (455, 5005, 51480, 450450, 2948400, 14774970, 61861800),
    (4, 8): (70, 56, 70, 56, 70, 56, 70),
    (4, 9): (126, 252, 702, 1764, 4914, 9828, 24390),
    (4, 10): (210, 840, 3870, 15960, 55020, 159480, 419460),
    (4, 11): (330, 2310, 15510, 87890, 355740, 1276110, 3626040),
    (4, 12): (495, 5544, 50490, 361680, 1683990, 6965640, 21521610),
    (4, 13): (715, 12012, 141570, 1221792, 6456606, 29673072, 99664422),
    (4, 14): (1001, 24024, 354354, 3571568, 21191352, 105921816, 385453068),
    (4, 15): (1365, 45045, 810810, 9339330, 61637940, 330720600, 1297836540),
    (5, 10): (252, 1260, 7020, 30492, 117180, 330120, 950220),
    (5, 11): (462, 4620, 39930, 243012, 1113420, 3903240, 12134760),
    (5, 12): (792, 13860, 166320, 1292412, 6763680, 27642780, 92038320),
    (5, 13): (1287, 36036, 563706, 5305872, 31081050, 142573860, 506859210),
    (5, 14): (2002, 84084, 1645644, 18138120, 117466440, 590545956, 2235937704),
    (5, 15): (3003, 180180, 4285710, 54029976, 383439420, 2079637560, 8363775420),
    (6, 12): (924, 18480, 239580, 1899744, 10308144, 41888880, 143037840),
    (6, 13): (1716, 60060, 1055340, 10249096, 63075012, 288004860, 1057150380),
    (6, 14): (3003, 168168, 3777774, 43259216, 295387092, 1482785304, 5793796008),
    (6, 15): (5005, 420420, 11621610, 152912760, 1143127440, 6211345140, 25687061400),
    (7, 14): (3432, 210210, 4924920, 57028972, 396203808, 1987088532, 7851283440),
    (7, 15): (6435, 630630, 18648630, 249909660, 1917115200, 10417968990, 43770406680),
}

# Positive almost-real roots per degree 1..7 (degrees 1..3 are always 0).
ALMOST_COUNTS: dict[GridKey, tuple[int, ...]] = {
    (3, 10): (0, 0, 0, 0, 0, 0, 0),
    (3, 11): (0, 0, 0, 0, 55, 0, 462),
    (3, 12): (0, 0, 0, 0, 660, 1320, 13464),
    (3, 13): (0, 0, 0, 0, 4290, 17160, 148434),
    (3, 14): (0, 0, 0, 0, 20020, 120120, 1021020),
    (3, 15): (0, 0, 0, 0, 75075, 600600, 5225220),
    (4, 9): (0, 0, 0, 0, 0, 0, 0),
    (4, 10): (0, 0, 0, 120, 0, 1260, 840),
    (4, 11): (0, 0, 0, 1320, 3960, 41580, 138600),
    (4, 12): (0, 0, 0, 7920, 48180, 445500, 1953864),
    (4, 13): (0, 0, 0, 34320, 317460, 2925780, 15038452),
    (4, 14): (0, 0, 0, 120120, 1501500, 14294280, 82496414),
    (4, 15): (0, 0, 0, 360360, 5705700, 56936880, 360751755),
    (5, 10): (0, 0, 0, 0, 0, 0, 0),
    (5, 11): (0, 0, 0, 1320, 6930, 62832, 274890),
    (5, 12): (0, 0, 0, 15840, 130680, 1197504, 5959800),
    (5, 13): (0, 0, 0, 102960, 1162590, 11052756, 60911136),
    (5, 14): (0, 0, 0, 480480, 6906900, 68757689, 412876464),
    (5, 15): (0, 0, 0, 1801800, 31531500, 329924595, 2135223090),
    (6, 12): (0, 0, 0, 15840, 166320, 1507968, 8149680),
    (6, 13): (0, 0, 0, 137280, 1930500, 18666648, 110630520),
    (6, 14): (0, 0, 0, 840840, 14434420, 148420272, 943518576),
    (6, 15): (0, 0, 0, 3963960, 80029950, 871065195, 5889723840),
    (7, 14): (0, 0, 0, 960960, 18018000, 187675488, 1224431208),
    (7, 15): (0, 0, 0, 5405400, 121696575, 1356755400, 9474134670),
}

# Orbit-class counts (real, almost) per degree 1..11.  None entries in the
# key mean "all sufficiently large values at once" (the generic counts).
OrbitKey = tuple[int | None, int | None]

ORBIT_COUNTS: dict[OrbitKey, tuple[tuple[int, ...], tuple[int, ...]]] = {
    (None, None): (
        (1, 1, 3, 8, 17, 37, 72, 139, 253, 439, 722),
        (0, 0, 0, 2, 6, 20, 65, 153, 390, 878, 1888),
    ),
    (3, None): (
        (1, 1, 1, 2, 3, 5, 7, 13, 17, 28, 37),
        (0, 0, 0, 0, 1, 1, 4, 7, 16, 27, 52),
    ),
    (4, None): (
        (1, 1, 2, 4, 8, 15, 26, 44, 76, 115, 183),
        (0, 0, 0, 1, 2, 5, 15, 31, 64, 131, 250),
    ),
    (5, None): (
        (1, 1, 3, 6, 11, 24, 45, 81, 143, 236, 372),
        (0, 0, 0, 1, 3, 9, 26, 53, 133, 266, 529),
    ),
    (3, 10): (
        (1, 1, 1, 2, 2, 2, 3, 5, 5, 7, 9),
        (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    ),
    (3, 11): (
        (1, 1, 1, 2, 2, 4, 4, 8, 10, 14, 18),
        (0, 0, 0, 0, 1, 0, 1, 0, 2, 1, 3),
    ),
    (3, 12): (
        (1, 1, 1, 2, 3, 4, 6, 10, 13, 20, 27),
        (0, 0, 0, 0, 1, 1, 2, 2, 5, 5, 9),
    ),
    (4, 9): (
        (1, 1, 2, 2, 3, 5, 7, 9, 14, 17, 22),
        (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    ),
    (4, 10): (
        (1, 1, 2, 3, 6, 8, 15, 20, 34, 44, 70),
        (0, 0, 0, 1, 0, 1, 1, 3, 1, 8, 4),
    ),
    (4, 11): (
        (1, 1, 2, 4, 7, 12, 20, 31, 52, 74, 117),
        (0, 0, 0, 1, 1, 2, 4, 8, 10, 24, 32),
    ),
    (5, 10): (
        (1, 1, 3, 4, 6, 12, 21, 31, 52, 76, 110),
        (0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 2),
    ),
}

# Generic orbits of degrees 1..5: (minimal-support core, k_min) per degree.
Core = tuple[tuple[int, ...], int]

GENERIC_REAL_CORES: dict[int, tuple[Core, ...]] = {
    1: (((1,), 1),),
    2: (((1, 1, 1, 1, 1, 1), 3),),
    3: (
        ((2, 1, 1, 1, 1, 1, 1, 1), 3),
        ((2, 2, 2, 2, 1, 1, 1, 1), 4),
        ((2, 2, 2, 2, 2, 2, 2, 1), 5),
    ),
    4: (
        ((3, 1, 1, 1, 1, 1, 1, 1, 1, 1), 3),
        ((2, 2, 2, 1, 1, 1, 1, 1, 1), 3),
        ((3, 3, 2, 2, 2, 1, 1, 1, 1), 4),
        ((3, 2, 2, 2, 2, 2, 2, 1), 4),
        ((3, 3, 3, 3, 3, 1, 1, 1, 1, 1), 5),
        ((3, 3, 3, 3, 2, 2, 2, 1, 1), 5),
        ((3, 3, 3, 3, 3, 3, 2, 2, 2), 6),
        ((3, 3, 3, 3, 3, 3, 3, 3, 3, 1), 7),
    ),
    5: (
        ((4, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1), 3),
        ((3, 2, 2, 2, 1, 1, 1, 1, 1, 1), 3),
        ((2, 2, 2, 2, 2, 2, 1, 1, 1), 3),
        ((4, 4, 2, 2, 2, 2, 1, 1, 1, 1), 4),
        ((4, 3, 3, 3, 2, 1, 1, 1, 1, 1), 4),
        ((4, 3, 3, 2, 2, 2, 2, 1, 1), 4),
        ((3, 3, 3, 3, 3, 2, 1, 1, 1), 4),
        ((3, 3, 3, 3, 2, 2, 2, 2), 4),
        ((4, 4, 4, 3, 3, 2, 2, 1, 1, 1), 5),
        ((4, 4, 4, 3, 2, 2, 2, 2, 2), 5),
        ((4, 4, 3, 3, 3, 3, 2, 2, 1), 5),
        ((4, 4, 4, 4, 4, 4, 1, 1, 1, 1, 1, 1), 6),
        ((4, 4, 4, 4, 4, 3, 2, 2, 2, 1), 6),
        ((4, 4, 4, 4, 3, 3, 3, 3, 1, 1), 6),
        ((4, 4, 4, 3, 3, 3, 3, 3, 3), 6),
        ((4, 4, 4, 4, 4, 4, 3, 3, 3, 2), 7),
        ((4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 1), 9),
    ),
}

GENERIC_ALMOST_CORES: dict[int, tuple[Core, ...]] = {
    1: (),
    2: (),
    3: (),
    4: (
        ((3, 3, 3, 1, 1, 1, 1, 1, 1, 1), 4),
        ((3, 3, 3, 3, 3, 3, 3, 1, 1, 1), 6),
    ),
    5: (
        ((3, 3, 1, 1, 1, 1, 1, 1, 1, 1, 1), 3),
        ((4, 4, 3, 2, 1, 1, 1, 1, 1, 1, 1), 4),
        ((4, 4, 4, 4, 2, 2, 1, 1, 1, 1, 1), 5),
        ((4, 4, 4, 4, 4, 3, 3, 1, 1, 1, 1), 6),
        ((4, 4, 4, 4, 4, 4, 4, 3, 2, 1, 1), 7),
        ((4, 4, 4, 4, 4, 4, 4, 4, 4, 2, 2), 8),
    ),
}
