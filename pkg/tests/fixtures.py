"""Golden fixtures: worked examples transcribed as written, coordinate order
preserved.  Comparisons elsewhere are set-based, so transcription order never
matters for equality."""

from kirkman.core import make_design

KTS9_CLASSES = [
    [(0, 1, 8), (3, 4, 2), (6, 7, 5)],
    [(0, 2, 7), (3, 5, 1), (6, 8, 4)],
    [(1, 2, 6), (4, 5, 0), (7, 8, 3)],
    [(0, 3, 6), (1, 4, 7), (2, 5, 8)],
]

KTS27_CLASSES = [
    # diagonal class
    [(0, 9, 18), (1, 10, 19), (2, 11, 20), (3, 12, 21), (4, 13, 22),
     (5, 14, 23), (6, 15, 24), (7, 16, 25), (8, 17, 26)],
    # from source class 1
    [(0, 1, 26), (9, 10, 8), (18, 19, 17), (3, 4, 20), (12, 13, 2),
     (21, 22, 11), (6, 7, 23), (15, 16, 5), (24, 25, 14)],
    [(0, 8, 19), (9, 17, 1), (18, 26, 10), (3, 2, 22), (12, 11, 4),
     (21, 20, 13), (6, 5, 25), (15, 14, 7), (24, 23, 16)],
    [(1, 8, 18), (10, 17, 0), (19, 26, 9), (4, 2, 21), (13, 11, 3),
     (22, 20, 12), (7, 5, 24), (16, 14, 6), (25, 23, 15)],
    # from source class 2
    [(0, 2, 25), (9, 11, 7), (18, 20, 16), (3, 5, 19), (12, 14, 1),
     (21, 23, 10), (6, 8, 22), (15, 17, 4), (24, 26, 13)],
    [(0, 7, 20), (9, 16, 2), (18, 25, 11), (3, 1, 23), (12, 10, 5),
     (21, 19, 14), (6, 4, 26), (15, 13, 8), (24, 22, 17)],
    [(2, 7, 18), (11, 16, 0), (20, 25, 9), (5, 1, 21), (14, 10, 3),
     (23, 19, 12), (8, 4, 24), (17, 13, 6), (26, 22, 15)],
    # from source class 3
    [(1, 2, 24), (10, 11, 6), (19, 20, 15), (4, 5, 18), (13, 14, 0),
     (22, 23, 9), (7, 8, 21), (16, 17, 3), (25, 26, 12)],
    [(1, 6, 20), (10, 15, 2), (19, 24, 11), (4, 0, 23), (13, 9, 5),
     (22, 18, 14), (7, 3, 26), (16, 12, 8), (25, 21, 17)],
    [(2, 6, 19), (11, 15, 1), (20, 24, 10), (5, 0, 22), (14, 9, 4),
     (23, 18, 13), (8, 3, 25), (17, 12, 7), (26, 21, 16)],
    # from source class 4
    [(0, 3, 24), (9, 12, 6), (18, 21, 15), (1, 4, 25), (10, 13, 7),
     (19, 22, 16), (2, 5, 26), (11, 14, 8), (20, 23, 17)],
    [(0, 6, 21), (9, 15, 3), (18, 24, 12), (1, 7, 22), (10, 16, 4),
     (19, 25, 13), (2, 8, 23), (11, 17, 5), (20, 26, 14)],
    [(3, 6, 18), (12, 15, 0), (21, 24, 9), (4, 7, 19), (13, 16, 1),
     (22, 25, 10), (5, 8, 20), (14, 17, 2), (23, 26, 11)],
]

# Worked 1-factorization of order 6 (even-difference factors first).
FACTORS_6 = [
    [(0, 3), (1, 5), (2, 4)],
    [(1, 4), (2, 0), (3, 5)],
    [(2, 5), (3, 1), (4, 0)],
    [(2, 3), (4, 5), (0, 1)],
    [(3, 4), (5, 0), (1, 2)],
]

# Doubling the order-6 factorization to order 12.
FACTORS_12 = [
    [(0, 3), (1, 5), (2, 4), (6, 9), (7, 11), (8, 10)],
    [(1, 4), (2, 0), (3, 5), (7, 10), (8, 6), (9, 11)],
    [(2, 5), (3, 1), (4, 0), (8, 11), (9, 7), (10, 6)],
    [(2, 3), (4, 5), (0, 1), (8, 9), (10, 11), (6, 7)],
    [(3, 4), (5, 0), (1, 2), (9, 10), (11, 6), (7, 8)],
    [(0, 6), (1, 7), (2, 8), (3, 9), (4, 10), (5, 11)],
    [(0, 7), (1, 8), (2, 9), (3, 10), (4, 11), (5, 6)],
    [(0, 8), (1, 9), (2, 10), (3, 11), (4, 6), (5, 7)],
    [(0, 9), (1, 10), (2, 11), (3, 6), (4, 7), (5, 8)],
    [(0, 10), (1, 11), (2, 6), (3, 7), (4, 8), (5, 9)],
    [(0, 11), (1, 6), (2, 7), (3, 8), (4, 9), (5, 10)],
]

KQS8_CLASSES = [
    [(4, 1, 2, 3), (0, 5, 6, 7)],
    [(0, 5, 2, 3), (4, 1, 6, 7)],
    [(0, 1, 6, 3), (4, 5, 2, 7)],
    [(0, 1, 2, 7), (4, 5, 6, 3)],
    [(0, 1, 4, 5), (2, 3, 6, 7)],
    [(0, 2, 4, 6), (1, 3, 5, 7)],
    [(0, 3, 4, 7), (1, 2, 5, 6)],
]

# 1-factorization of order 8 used by the order-16 doubling.
FACTORS_8 = [
    [(0, 1), (2, 3), (4, 5), (6, 7)],
    [(0, 2), (1, 3), (4, 6), (5, 7)],
    [(0, 3), (1, 2), (4, 7), (5, 6)],
    [(0, 4), (1, 5), (2, 6), (3, 7)],
    [(0, 5), (1, 6), (2, 7), (3, 4)],
    [(0, 6), (1, 7), (2, 4), (3, 5)],
    [(0, 7), (1, 4), (2, 5), (3, 6)],
]

KQS16_CLASSES = [
    # four coordinate-shift classes per order-8 source class
    [(12, 1, 2, 3), (4, 9, 10, 11), (8, 5, 6, 7), (0, 13, 14, 15)],
    [(4, 9, 2, 3), (12, 1, 10, 11), (0, 13, 6, 7), (8, 5, 14, 15)],
    [(4, 1, 10, 3), (12, 9, 2, 11), (0, 5, 14, 7), (8, 13, 6, 15)],
    [(4, 1, 2, 11), (12, 9, 10, 3), (0, 5, 6, 15), (8, 13, 14, 7)],

    [(8, 5, 2, 3), (0, 13, 10, 11), (12, 1, 6, 7), (4, 9, 14, 15)],
    [(0, 13, 2, 3), (8, 5, 10, 11), (4, 9, 6, 7), (12, 1, 14, 15)],
    [(0, 5, 10, 3), (8, 13, 2, 11), (4, 1, 14, 7), (12, 9, 6, 15)],
    [(0, 5, 2, 11), (8, 13, 10, 3), (4, 1, 6, 15), (12, 9, 14, 7)],

    [(8, 1, 6, 3), (0, 9, 14, 11), (12, 5, 2, 7), (4, 13, 10, 15)],
    [(0, 9, 6, 3), (8, 1, 14, 11), (4, 13, 2, 7), (12, 5, 10, 15)],
    [(0, 1, 14, 3), (8, 9, 6, 11), (4, 5, 10, 7), (12, 13, 2, 15)],
    [(0, 1, 6, 11), (8, 9, 14, 3), (4, 5, 2, 15), (12, 13, 10, 7)],

    [(8, 1, 2, 7), (0, 9, 10, 15), (12, 5, 6, 3), (4, 13, 14, 11)],
    [(0, 9, 2, 7), (8, 1, 10, 15), (4, 13, 6, 3), (12, 5, 14, 11)],
    [(0, 1, 10, 7), (8, 9, 2, 15), (4, 5, 14, 3), (12, 13, 6, 11)],
    [(0, 1, 2, 15), (8, 9, 10, 7), (4, 5, 6, 11), (12, 13, 14, 3)],

    [(8, 1, 4, 5), (0, 9, 12, 13), (10, 3, 6, 7), (2, 11, 14, 15)],
    [(0, 9, 4, 5), (8, 1, 12, 13), (2, 11, 6, 7), (10, 3, 14, 15)],
    [(0, 1, 12, 5), (8, 9, 4, 13), (2, 3, 14, 7), (10, 11, 6, 15)],
    [(0, 1, 4, 13), (8, 9, 12, 5), (2, 3, 6, 15), (10, 11, 14, 7)],

    [(8, 2, 4, 6), (0, 10, 12, 14), (9, 3, 5, 7), (1, 11, 13, 15)],
    [(0, 10, 4, 6), (8, 2, 12, 14), (1, 11, 5, 7), (9, 3, 13, 15)],
    [(0, 2, 12, 6), (8, 10, 4, 14), (1, 3, 13, 7), (9, 11, 5, 15)],
    [(0, 2, 4, 14), (8, 10, 12, 6), (1, 3, 5, 15), (9, 11, 13, 7)],

    [(8, 3, 4, 7), (0, 11, 12, 15), (9, 2, 5, 6), (1, 10, 13, 14)],
    [(0, 11, 4, 7), (8, 3, 12, 15), (1, 10, 5, 6), (9, 2, 13, 14)],
    [(0, 3, 12, 7), (8, 11, 4, 15), (1, 2, 13, 6), (9, 10, 5, 14)],
    [(0, 3, 4, 15), (8, 11, 12, 7), (1, 2, 5, 14), (9, 10, 13, 6)],

    # matching-derived classes
    [(0, 1, 8, 9), (2, 3, 10, 11), (4, 5, 12, 13), (6, 7, 14, 15)],
    [(0, 2, 8, 10), (1, 3, 9, 11), (4, 6, 12, 14), (5, 7, 13, 15)],
    [(0, 3, 8, 11), (1, 2, 9, 10), (4, 7, 12, 15), (5, 6, 13, 14)],
    [(0, 4, 8, 12), (1, 5, 9, 13), (2, 6, 10, 14), (3, 7, 11, 15)],
    [(0, 5, 8, 13), (1, 6, 9, 14), (2, 7, 10, 15), (3, 4, 11, 12)],
    [(0, 6, 8, 14), (1, 7, 9, 15), (2, 4, 10, 12), (3, 5, 11, 13)],
    [(0, 7, 8, 15), (1, 4, 9, 12), (2, 5, 10, 13), (3, 6, 11, 14)],
]

# Intro example: 9 chunks on 12 servers in 4 locations.
INTRO_SERVER_TABLE = {
    "A": ((0, 1, 8), 9),
    "B": ((0, 2, 7), 9),
    "C": ((0, 3, 6), 9),
    "D": ((0, 4, 5), 9),
    "E": ((1, 2, 6), 9),
    "F": ((1, 3, 5), 9),
    "G": ((1, 4, 7), 12),
    "H": ((2, 3, 4), 9),
    "I": ((2, 5, 8), 15),
    "J": ((3, 7, 8), 18),
    "K": ((4, 6, 8), 18),
    "L": ((5, 6, 7), 18),
}

INTRO_LOCATION_GROUPS = [
    {"A", "H", "L"},
    {"B", "F", "K"},
    {"C", "G", "I"},
    {"D", "E", "J"},
]


def class_sets(classes):
    """List of classes as frozensets of canonical (sorted-tuple) blocks."""
    return [frozenset(tuple(sorted(b)) for b in cls) for cls in classes]


def design_class_sets(design):
    return class_sets(design.classes)


def kts9_design():
    return make_design(9, 3, 2, KTS9_CLASSES)


def kts27_design():
    return make_design(27, 3, 2, KTS27_CLASSES)


def kqs8_design():
    return make_design(8, 4, 3, KQS8_CLASSES)


def kqs16_design():
    return make_design(16, 4, 3, KQS16_CLASSES)
