"""Printed code tables for the landmark triple (p1:1, r1:1, r2:2b-1).

Here r2:2b-1 is the r2 end adjacent to p2:1.

Every expression is kept character-for-character as printed (``d`` is the
family index, ``a``, ``b``, ``c`` the arm parameters).  Nothing here is
corrected; :mod:`fcsdim.closedform` evaluates these strings and lets the
distance oracle decide which entries hold.

A piece is ``(lo, hi, (x, y, z))``: it applies to ``lo <= d <= hi``.
"""

VERTEX_TABLE = {
    "P1": [
        ("1", "1", ("d-1", "2a+2c-d-1", "2b+2c-2")),
        ("2", "2a-3", ("d-1", "2a+2c-d-1", "2b+2c+d-5")),
        ("2a-2", "2a-2", ("d-1", "2a+2c-d-1", "2a+2b+2c-9")),
        ("2a-1", "2a-1", ("d-1", "2a+2c-d-1", "2a+2b+2c-8")),
    ],
    "Q1": [
        ("1", "1", ("2a+d-2", "2c-d", "2a+2b+2c-7")),
        ("2", "2", ("2a+d-2", "2c-d", "2a+2b+2c-8")),
        ("3", "2c-2", ("2a+d-2", "2c-d", "2a+2b+2c-d-4")),
        ("2c-1", "2c-1", ("2a+d-2", "2c-d", "2a+2b-1")),
    ],
    "R1": [
        ("1", "1", ("2a+2c-2", "d-1", "2a+2b-d-1")),
        ("2", "2c-3", ("2a+2c+d-5", "d-1", "2a+2b-d-1")),
        ("2b-2", "2b-2", ("2a+2b+2c-9", "d-1", "2a+2b-d-1")),
        ("2b-1", "2b-1", ("2a+2b+2c-8", "d-1", "2a+2b-d-1")),
    ],
    "P2": [
        ("1", "1", ("d", "2a+2b-d-2", "2b+2c-1")),
        ("2", "2a-3", ("d", "2a+2b-d-2", "2b+2c+d-4")),
        ("2a-2", "2a-2", ("d", "2a+2b-d-2", "2a+2b+2c-8")),
        ("2a-1", "2a-1", ("d", "2a+2b-d-2", "2a+2b+2c-7")),
    ],
    "Q2": [
        ("1", "1", ("d", "2a+2c-1", "2b+2c-d-2")),
        ("2", "2c-3", ("d", "2a+2c+d-4", "2b+2c-d-2")),
        ("2c-2", "2c-2", ("d", "2a+2b+2c-8", "2b+2c-d-2")),
        ("2c-1", "2c-1", ("d", "2a+2b+2c-7", "2b+2c-d-2")),
    ],
    "R2": [
        ("1", "1", ("2c+d-1", "2a+2b+2c-8", "2b-d-1")),
        ("2", "2", ("2c+d-1", "2a+2b+2c-9", "2b-d-1")),
        ("3", "2b-2", ("2c+d-1", "2a+2b+2c-d-5", "2b-d-1")),
        ("2b-1", "2b-1", ("2c+d-1", "2a+2b-2", "2b-d-1")),
    ],
    "S1": [
        ("1", "2a-5", ("d+1", "2a+2c-d-3", "2b+2c+d-5")),
        ("2a-4", "2a-4", ("d+1", "2a+2c-d-3", "2a+2b+2c-11")),
        ("2a-3", "2a-3", ("d+1", "2a+2c-d-3", "2a+2b+2c-10")),
    ],
    "T1": [
        ("1", "1", ("2a+d-2", "2c-d", "2a+2b+2c-9")),
        ("2", "2", ("2a+d-2", "2c-d", "2a+2b+2c-10")),
        ("3", "2c-3", ("2a+d-2", "2c-d", "2a+2b+2c-d-6")),
    ],
    "U1": [
        ("1", "2b-5", ("2a+2c+d-5", "d+1", "2a+2b-d-3")),
        ("2b-4", "2b-4", ("2a+2b+2c-11", "d+1", "2a+2b-d-3")),
        ("2b-3", "2b-3", ("2a+2b+2c-10", "d+1", "2a+2b-d-3")),
    ],
    "S2": [
        ("1", "2a-5", ("2b+2c+d-4", "2a+2b-d-4", "d+2")),
        ("2a-4", "2a-4", ("2a+2b+2c-10", "2a+2b-d-4", "d+2")),
        ("2a-3", "2a-3", ("2a+2b+2c-9", "2a+2b-d-4", "d+2")),
    ],
    "T2": [
        ("1", "2c-5", ("d+2", "2a+2c+d-4", "2b+2c-d-4")),
        ("2c-4", "2c-4", ("d+2", "2a+2b+2c-10", "2b+2c-d-4")),
        ("2c-3", "2c-3", ("d+2", "2a+2b+2c-9", "2b+2c-d-4")),
    ],
    "U2": [
        ("1", "1", ("2c+d-1", "2a+2b+2c-10", "2b-d-1")),
        ("2", "2", ("2c+d-1", "2a+2b+2c-11", "2b-d-1")),
        ("3", "2b-3", ("2c+d-1", "2a+2b+2c-d-7", "2b-d-1")),
    ],
    "P3": [("1", "2a-5", ("2a+2c-d-6", "2a+2c+d-6", "2a+2b-d-4"))],
    "Q3": [("1", "2c-5", ("2a+2b+d-7", "2b+2c-d-7", "2a+2c-d-5"))],
    "R3": [("1", "2b-5", ("2a+2b-d-7", "2b+2c-d-5", "2a+2b+d-7"))],
    "S3": [("1", "2a-5", ("2a+2c-d-5", "2a+2c+d-7", "2a+2b-d-5"))],
    "T3": [("1", "2c-5", ("2a+2c+d-6", "2b+2c-d-6", "2a+2c-d-6"))],
    "U3": [("1", "2b-5", ("2a+2b-d-6", "2b+2c-d-6", "2a+2b+d-6"))],
}

# Path-edge families index the edge x_d x_{d+1}.
EDGE_TABLE = {
    "P1": [
        ("1", "1", ("d-1", "2a+2c-d-2", "2b+2-3")),
        ("2", "2a-4", ("d-1", "2a+2c-d-2", "2b+2c+d-5")),
        ("2a-3", "2a-2", ("d-1", "2a+2c-d-2", "2a+4b-8")),
    ],
    "Q1": [
        ("1", "2", ("2a+d-2", "2c-d-1", "2a+2b+2c-8")),
        ("3", "2c-3", ("2a+d-2", "2c-d-1", "2a+2b+2c-d-5")),
        ("2c-2", "2c-2", ("2a+d-2", "2c-d-1", "2a+2b-2")),
    ],
    "R1": [
        ("1", "1", ("2a+2c-3", "d-1", "2a+2b-d-1")),
        ("2", "2b-4", ("2a+2c+d-5", "d-1", "2a+2b-d-1")),
        ("2b-3", "2b-2", ("2a+2b+2c-9", "d-1", "2a+2b-d-1")),
    ],
    "P2": [
        ("1", "1", ("2b+2c-2", "2a+2b-d-1", "d")),
        ("2", "2a-4", ("2b+2c+d-4", "2a+2b-d-1", "d")),
        ("2a-3", "2a-2", ("2a+2b+2c-8", "2a+2b-d-1", "d")),
    ],
    "Q2": [
        ("1", "1", ("d", "2a+2c-2", "2b+2c-d-3")),
        ("2", "2c-4", ("d", "2a+2c+d-4", "2b+2c-d-3")),
        ("2c-3", "2c-2", ("d", "2a+2b+2c-8", "2b+2c-d-3")),
    ],
    "R2": [
        ("1", "2", ("2c+d-1", "2a+2b+2c-9", "2b-d-2")),
        ("3", "2b-3", ("2c+d-1", "2a+4b-d-6", "2b-d-2")),
        ("2b-2", "2b-2", ("2c+d-1", "2a+2b-3", "2b-d-2")),
    ],
    "S1": [
        ("1", "2a-6", ("d+1", "2a+2c-d-4", "2b+2c+d-5")),
        ("2a-5", "2a-4", ("d+1", "2a+2c-d-4", "2a+4b-11")),
    ],
    "T1": [
        ("1", "2", ("2a+d", "2c-d-1", "2a+2b+2c-10")),
        ("3", "2c-4", ("2a+d", "2c-d-1", "2a+2b+2c-d-7")),
    ],
    "U1": [
        ("1", "2b-6", ("2a+2c+d-5", "d+1", "2a+2b-d-4")),
        ("2b-3", "2b-4", ("2a+2b+2c-11", "d+1", "2a+2b-d-4")),
    ],
    "S2": [
        ("1", "2a-6", ("2b+2c+d-4", "2a+2b-d-5", "d+2")),
        ("2a-5", "2a-4", ("2a+2b+2c-10", "2a+2b-d-5", "d+2")),
    ],
    "T2": [
        ("1", "2b-6", ("d+2", "2a+2c+d-4", "2b+2c-d-7")),
        ("2b-5", "2c-4", ("d+2", "2a+2b+2c-10", "2b+2c-d-7")),
    ],
    "U2": [
        ("1", "2", ("2c+d-1", "2a+2b+2c-11", "2b-d-2")),
        ("3", "2b-4", ("2c+d-1", "2a+4b-d-8", "2b-d-2")),
    ],
    "P3": [("1", "2a-6", ("2a+2c-d-7", "2b+2c+d-6", "2a+2b-d-7"))],
    "Q3": [("1", "2c-6", ("2a+2b+d-7", "2b+2c-d-8", "2a+2c-d-6"))],
    "R3": [("1", "2b-6", ("2a+2b-d-8", "2b+2c-d-6", "2a+2b+d-7"))],
    "S3": [("1", "2a-6", ("2a+2c-d-6", "2b+2c+d-7", "2a+2b-d-8"))],
    "T3": [("1", "2c-6", ("2a+2b+d-6", "2b+2c-d-7", "2a+2c-d-7"))],
    "U3": [("1", "2b-6", ("2a+2b-d-7", "2b+2c-d-7", "2a+2b+d-6"))],
    # rung families; the indexed edge is given by RUNG_PATTERNS
    "PS1": [
        ("1", "a-2", ("2d-1", "4a+2c-2d-12", "4a+2c+2d-18")),
        ("a-1", "a-1", ("2d-1", "4a+2c-2d-12", "2a+4b-10")),
    ],
    "QT1": [
        ("1", "1", ("4a+2d-13", "4c-2d-8", "2a+2b+2c-9")),
        ("1", "c-1", ("4a+2d-13", "4c-2d-8", "4a+2b+2c-2d-15")),
    ],
    "RU1": [
        ("1", "b-2", ("4a+2c+2d-16", "2d-1", "4a+2b-2d-12")),
        ("b-1", "b-1", ("4a+2c+2d-16", "2d-1", "2a+2b+2c-10")),
    ],
    "PS2": [
        ("1", "a-2", ("4b+2c+2d-13", "4a+2b-2d-13", "2d-1")),
        ("a-1", "a-1", ("2a+2b+2c-9", "4a+2b-2d-13", "2d-1")),
    ],
    "RU2": [
        ("1", "1", ("4c+2d-10", "2a+2b+2c-10", "4b-2d-8")),
        ("2", "b-1", ("4c+2d-10", "4a+2b-2d-16", "4b-2d-8")),
    ],
    "QT2": [
        ("1", "c-2", ("2d", "4a+2c+2d-15", "4c+2b-2d-11")),
        ("c-1", "c-1", ("2d", "2a+2b+2c-8", "4c+2b-2d-11")),
    ],
    "PS3": [("1", "a-2", ("4a+2c-2d-15", "4b+2c+2d-16", "4a+2b-2d-16"))],
    "QT3": [("1", "c-2", ("4a+2b+2d-18", "4b+2c-2d-14", "4a+2c-2d-15"))],
    "RU3": [("1", "b-2", ("4a+2b-2d-16", "2b+4c-2d-13", "4a+2b+2d-18"))],
}

# (outer family, outer index pattern, inner family, inner index pattern, count)
# ``count`` is the printed number of rungs; the constructed count follows the
# outer family's length.
RUNG_PATTERNS = {
    "PS1": ("p1", "2d", "s1", "2d-1", "a-1"),
    "QT1": ("q1", "2d", "t1", "2d-1", "c-1"),
    "RU1": ("r1", "2d", "u1", "2d-1", "b-1"),
    "PS2": ("p2", "2d", "s2", "2d-1", "a-1"),
    "RU2": ("r2", "2d", "u2", "2d-1", "b-1"),
    "QT2": ("q2", "2d", "t2", "2d-1", "c-1"),
    "PS3": ("p3", "2d-1", "s3", "2d-1", "a-2"),
    "QT3": ("q3", "2d-1", "t3", "2d-1", "c-2"),
    "RU3": ("r3", "2d-1", "u3", "2d-1", "b-2"),
}

# Named corner/connector edges.  ``printed`` is the endpoint pair as it
# appears in the table heading, with i = 2a-1, j = 2c-1, k = 2b-1.  ``built``
# is the constructed edge occupying the same slot, written with n = length of
# that label's family; the two differ where the heading has a typo or where
# the constructed family length differs from the printed one.
ETA_EDGES = {
    "V1": [
        ("p1:i", "q1:1", "p1:n", "q1:1", ("2a-2", "2c-1", "2a+4b-8")),
        ("s1:i-2", "t1:1", "s1:n", "t1:1", ("2a-2", "2c-1", "2a+4b-10")),
        ("r1:1", "q1:j", "r1:1", "q1:n", ("2a+2c-3", "0", "2a+2b-2")),
        ("t1:j", "u1:1", "t1:n", "u1:1", ("2a+2c-5", "2", "2a+2b-4")),
        ("r1:k", "p2:i", "r1:n", "p2:n", ("2a+2b+2c-10", "2b-2", "2a-1")),
        ("u1:k-2", "s2:i-2", "u1:n", "s2:n", ("2a+2b+2c-8", "2b-2", "2a-1")),
        ("p2:1", "r2:k", "p2:1", "r2:n", ("2b+2c-2", "2a+2b-3", "0")),
        ("s2:1", "u2:k-2", "s2:1", "u2:n", ("2b+2c-4", "2a+2b-5", "2")),
        ("r2:1", "q2:j", "r2:1", "q2:n", ("2c-1", "2a+2b+2c-10", "2b-2")),
        ("u2:1", "t2:j-2", "u2:1", "t2:n", ("2c-1", "2a+2b+2c-8", "2b-4")),
        ("p1:1", "q2:1", "p1:1", "q2:1", ("0", "2a+2c-2", "2a+2c-3")),
        ("u1:1", "t2:1", "s1:1", "t2:1", ("2", "2a+2c-4", "2b+2c-5")),
    ],
    "V2": [
        ("t2:j-3", "p3:i-5", "t2:n-1", "p3:n", ("2c-2", "2a+2b+2c-11", "2b-1")),
        ("u2:2", "s3:i-5", "u2:2", "s3:n", ("2c", "2a+2b+2c-12", "2b-3")),
        ("s2:i-3", "t3:j-5", "s2:n-1", "t3:n", ("2a+2b+2c-11", "2b-1", "2a-2")),
        ("u1:k-3", "q3:j-5", "u1:n-1", "q3:n", ("2a+2b+2c-12", "2b-3", "2a")),
        ("t1:2", "u3:k-5", "t1:2", "u3:n", ("2a-1", "2c-2", "2a+2b+2c-11")),
        ("s1:i-3", "r3:k-5", "s1:n-1", "r3:n", ("2a-3", "2c", "2a+2b+2c-12")),
        ("p3:1", "r3:1", "p3:1", "r3:1", ("2b+2b-8", "2b+2c-8", "2a+2b-7")),
        ("u3:1", "q3:1", "u3:1", "q3:1", ("2a+2b-7", "2b+2c-8", "2a+2b-6")),
        ("s3:1", "t3:1", "s3:1", "t3:1", ("2a+2c-6", "2b+2c-7", "2a+2b-8")),
    ],
}

VERTEX_FAMILY_ORDER = tuple(VERTEX_TABLE)
EDGE_FAMILY_ORDER = tuple(EDGE_TABLE) + tuple(ETA_EDGES)
