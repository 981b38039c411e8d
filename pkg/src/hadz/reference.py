"""Known orbit representatives and census counts used for reproduction.

Representatives are class-grouped lists in diagram order (classes 2, 3, 4, 1),
each paired with the total-orbit size it generates.  Every entry is
checked by the test suite to be Hadamard with the stated orbit size.
"""

from __future__ import annotations

from .cocycle import CoboundarySet

ORBIT_REPRESENTATIVES: dict[int, list[tuple[tuple[tuple[int, ...], ...], int]]] = {
    3: [(((), (7,), (8,), (5,)), 24)],
    5: [(((10,), (11,), (8, 16), (1, 17)), 120)],
    7: [
        (((14,), (11, 15, 19), (8, 16, 24), (1, 13, 25)), 336),
        (((10, 18), (11, 19), (4, 28), (1, 13, 25)), 504),
    ],
    9: [
        (((14, 22), (15, 19, 23), (4, 16, 24, 36), (1, 13, 21, 33)), 648),
        (((14, 22), (3, 19, 35), (12, 16, 24, 28), (1, 9, 25, 33)), 1296),
        (((14, 18, 22), (11, 19, 27), (8, 20, 32), (1, 17, 33)), 432),
    ],
    11: [
        (((18, 22, 26), (7, 15, 31, 39), (4, 16, 32, 44), (9, 13, 21, 29, 33)), 2640),
    ],
    13: [
        (((22, 26, 30), (3, 15, 23, 31, 39, 51), (8, 16, 20, 36, 40, 48), (1, 5, 17, 33, 45, 49)), 3744),
        (((18, 22, 30, 34), (7, 15, 39, 47), (8, 12, 24, 32, 44, 48), (1, 5, 21, 29, 45, 49)), 1872),
        (((14, 18, 34, 38), (15, 23, 27, 31, 39), (8, 24, 28, 32, 48), (5, 17, 25, 33, 45)), 1872),
        (((14, 18, 34, 38), (15, 19, 27, 35, 39), (4, 12, 28, 44, 52), (1, 9, 25, 41, 49)), 936),
    ],
    15: [
        (((18, 22, 38, 42), (7, 19, 27, 35, 43, 55), (16, 20, 28, 32, 36, 44, 48), (1, 9, 25, 29, 33, 49, 57)), 2880),
        (((10, 14, 46, 50), (7, 19, 27, 35, 43, 55), (8, 12, 24, 32, 40, 52, 56), (1, 5, 9, 29, 49, 53, 57)), 2880),
        (((14, 26, 34, 46), (11, 15, 27, 35, 47, 51), (16, 20, 28, 32, 36, 44, 48), (1, 5, 21, 29, 37, 53, 57)), 1440),
        (((14, 26, 30, 34, 46), (15, 27, 31, 35, 47), (12, 16, 24, 40, 48, 52), (9, 13, 21, 29, 37, 45, 49)), 1440),
    ],
    17: [
        (((18, 30, 34, 38, 50), (3, 23, 31, 35, 39, 47, 67), (16, 20, 28, 36, 44, 52, 56), (1, 13, 21, 25, 41, 45, 53, 65)), 3264),
        (((18, 30, 34, 38, 50), (3, 23, 27, 35, 43, 47, 67), (4, 16, 28, 36, 44, 56, 68), (13, 17, 21, 29, 37, 45, 49, 53)), 3264),
        (((18, 30, 34, 38, 50), (7, 15, 31, 35, 39, 55, 63), (12, 20, 24, 36, 48, 52, 60), (5, 9, 13, 21, 45, 53, 57, 61)), 3264),
        (((18, 26, 30, 38, 42, 50), (3, 19, 31, 39, 51, 67), (8, 24, 32, 36, 40, 48, 64), (9, 13, 17, 33, 49, 53, 57)), 3264),
    ],
    19: [
        (((18, 30, 34, 42, 46, 58), (15, 19, 23, 39, 55, 59, 63), (8, 16, 28, 36, 40, 44, 52, 64, 72), (5, 21, 25, 29, 37, 45, 49, 53, 69)), 8208),
        (((10, 30, 34, 42, 46, 66), (11, 31, 35, 39, 43, 47, 67), (4, 12, 16, 32, 40, 48, 64, 68, 76), (1, 9, 13, 29, 37, 45, 61, 65, 73)), 4104),
        (((10, 30, 34, 42, 46, 66), (15, 27, 35, 39, 43, 51, 63), (8, 16, 32, 36, 40, 44, 48, 64, 72), (5, 9, 25, 33, 37, 41, 49, 65, 69)), 8208),
        (((6, 10, 34, 42, 66, 70), (11, 23, 27, 35, 43, 51, 55, 67), (8, 16, 20, 36, 44, 60, 64, 72), (1, 5, 9, 29, 45, 65, 69, 73)), 2736),
        (((6, 10, 34, 42, 66, 70), (7, 15, 31, 35, 43, 47, 63, 71), (12, 20, 24, 36, 44, 56, 60, 68), (1, 5, 9, 25, 49, 65, 69, 73)), 2736),
        (((22, 30, 34, 42, 46, 54), (7, 15, 19, 35, 43, 59, 63, 71), (4, 16, 20, 36, 44, 60, 64, 76), (9, 13, 17, 25, 49, 57, 61, 65)), 8208),
    ],
    # t = 21 is incomplete: a representative for one orbit of size 3024 is
    # missing, so these six orbits cover 28224 of the 31248 matrices.
    21: [
        (((22, 26, 38, 46, 58, 62), (3, 15, 19, 27, 39, 47, 59, 67, 71, 83), (8, 12, 16, 24, 40, 48, 64, 72, 76, 80), (13, 21, 25, 29, 33, 49, 53, 57, 61, 69)), 2016),
        (((10, 34, 38, 42, 46, 50, 74), (3, 19, 23, 31, 55, 63, 67, 83), (12, 24, 28, 36, 44, 52, 60, 64, 76), (5, 9, 13, 21, 33, 49, 61, 69, 73, 77)), 6048),
        (((18, 26, 38, 42, 46, 58, 66), (19, 23, 31, 35, 51, 55, 63, 67), (12, 16, 32, 40, 44, 48, 56, 72, 76), (1, 5, 17, 29, 37, 45, 53, 65, 77, 81)), 6048),
        (((18, 26, 38, 42, 46, 58, 66), (11, 23, 27, 35, 51, 59, 63, 75), (12, 16, 32, 40, 44, 48, 56, 72, 76), (1, 5, 9, 25, 37, 45, 57, 73, 77, 81)), 6048),
        (((18, 30, 34, 38, 46, 50, 54, 66), (3, 7, 31, 39, 47, 55, 79, 83), (8, 24, 32, 36, 52, 56, 64, 80), (1, 17, 21, 29, 41, 53, 61, 65, 81)), 6048),
        (((14, 18, 30, 38, 46, 54, 66, 70), (7, 15, 27, 31, 55, 59, 71, 79), (8, 16, 20, 24, 64, 68, 72, 80), (13, 21, 25, 37, 41, 45, 57, 61, 69)), 2016),
    ],
    23: [
        (((22, 30, 38, 42, 50, 54, 62, 70), (15, 19, 23, 35, 47, 59, 71, 75, 79), (12, 20, 28, 40, 44, 52, 56, 68, 76, 84), (9, 13, 25, 29, 33, 57, 61, 65, 77, 81)), 12144),
    ],
}

# Total number of cocyclic Hadamard matrices over Z_t x Z_2^2.
CENSUS = {
    3: 24, 5: 120, 7: 840, 9: 2376, 11: 2640, 13: 8424,
    15: 8640, 17: 13056, 19: 34200, 21: 31248, 23: 12144,
}

# Williamson-positioned matrices; t >= 17 follow from CENSUS[t] / t.
WILLIAMSON = {
    3: 8, 5: 24, 7: 120, 9: 264, 11: 240, 13: 648,
    15: 576, 17: 768, 19: 1800, 21: 1488, 23: 528,
}

# Running example at t=7, listed class by class; its axis is column 5.
WORKED_SET_T7 = (14, 10, 6, 11, 20, 12, 4, 25, 21, 9)


def representatives(t: int) -> list[CoboundarySet]:
    return [CoboundarySet.from_classes(t, groups) for groups, _ in ORBIT_REPRESENTATIVES.get(t, [])]


def orbit_sizes(t: int) -> list[int]:
    return [size for _, size in ORBIT_REPRESENTATIVES.get(t, [])]
