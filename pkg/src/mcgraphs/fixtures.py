"""Hard-coded named graphs.

Vertex labels follow the standard drawings of these graphs, so edge ``ab``
below is the edge joining the vertices labelled a and b there. Edge ids are
list positions.
"""

from itertools import combinations

from .graph_core import MultiGraph


def _g(n, pairs):
    return MultiGraph.from_edges(n, pairs)


THETA = _g(2, [(0, 1)] * 3)
K2 = _g(2, [(0, 1)])
C4 = _g(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
P4 = _g(4, [(0, 1), (1, 2), (2, 3)])
K4 = _g(4, list(combinations(range(4), 2)))
# triangular prism: triangles 012 and 345, rungs 03 14 25
C6BAR = _g(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
PETERSEN = _g(10, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                   (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                   (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)])

# bicorn: triangles 012 and 345 joined by the bone 03 and the ladder 12/67/45
R8 = _g(8, [(1, 6), (6, 4), (2, 7), (7, 5), (6, 7), (4, 5), (1, 2), (0, 3),
            (3, 5), (0, 2), (3, 4), (0, 1)])

# order-ten staircase; classes {12,09} and {13,08} are its solitary doubletons
R10 = _g(10, [(1, 2), (2, 5), (5, 6), (6, 9), (9, 0), (0, 8), (8, 7), (7, 4),
              (4, 3), (3, 1), (3, 2), (5, 4), (6, 7), (9, 8), (1, 0)])

# the order-ten 3-staircase, pattern (2,1,1)
N10 = _g(10, [(0, 1), (1, 2), (0, 2), (0, 8), (8, 9), (6, 9), (1, 6), (6, 7),
              (2, 7), (4, 9), (3, 4), (3, 5), (5, 7), (4, 5), (3, 8)])

# a 3-graph with three even 2-cuts; its pieces are theta, K4 and two C6bar
THREE_PIECE_3GRAPH = _g(18, [
    (2, 3), (3, 5), (5, 4), (4, 2), (3, 4), (2, 0), (6, 7), (7, 8), (8, 6),
    (8, 9), (10, 9), (9, 11), (11, 10), (7, 11), (17, 15), (15, 16), (16, 17),
    (15, 13), (13, 14), (14, 16), (13, 12), (12, 14), (10, 12), (5, 6),
    (0, 1), (0, 1), (1, 17)])

# family S: the tricorn, the tricorn with one, two or three spoke ends blown
# up into triangles, and a twelve-vertex Möbius-like graph
_TRICORN_CORE = [(0, 1), (0, 2), (0, 3)]
_HEXAGON = [(4, 5), (5, 6), (6, 7), (7, 8), (8, 9), (9, 4)]
S1 = _g(10, _TRICORN_CORE + [(1, 4), (1, 5), (2, 6), (2, 7), (3, 8), (3, 9)] + _HEXAGON)
S2 = _g(12, _TRICORN_CORE + [(1, 10), (10, 4), (1, 11), (11, 5), (10, 11),
                             (2, 6), (2, 7), (3, 8), (3, 9)] + _HEXAGON)
S3 = _g(14, _TRICORN_CORE + [(1, 4), (1, 5),
                             (2, 12), (12, 6), (2, 13), (13, 7), (12, 13),
                             (3, 10), (10, 8), (3, 11), (11, 9), (10, 11)] + _HEXAGON)
S4 = _g(16, _TRICORN_CORE + [(1, 14), (14, 4), (1, 15), (15, 5), (14, 15),
                             (2, 12), (12, 6), (2, 13), (13, 7), (12, 13),
                             (3, 10), (10, 8), (3, 11), (11, 9), (10, 11)] + _HEXAGON)
S5 = _g(12, [(0, 1), (1, 3), (3, 11), (11, 9), (9, 7), (7, 6), (6, 2), (2, 4),
             (4, 8), (8, 10), (10, 5), (5, 0),
             (8, 6), (4, 10), (0, 2), (5, 11), (1, 7), (3, 9)])
FAMILY_S = (S1, S2, S3, S4, S5)

# a 3-staircase of order 14 (ladders of orders 4 and 6)
STAIRCASE3_14 = _g(14, [(0, 2), (2, 3), (3, 1), (1, 0), (2, 4), (4, 3), (4, 5),
                        (5, 6), (6, 7), (7, 8), (7, 9), (9, 8), (8, 10), (10, 11),
                        (11, 9), (12, 0), (12, 13), (13, 1), (12, 6), (5, 10),
                        (13, 11)])

# the two 3-staircases of order 12; their triangles sit at different distances
STAIRCASE3_12A = _g(12, [(4, 11), (11, 0), (0, 5), (10, 11), (4, 10), (10, 5),
                         (4, 9), (9, 8), (8, 6), (0, 6), (6, 7), (7, 5), (8, 1),
                         (1, 2), (2, 3), (3, 7), (1, 3), (9, 2)])
STAIRCASE3_12B = _g(12, [(4, 11), (11, 0), (0, 10), (10, 5), (11, 10), (5, 4),
                         (4, 9), (9, 8), (8, 6), (0, 6), (6, 7), (7, 5), (8, 1),
                         (1, 2), (2, 3), (3, 7), (1, 3), (9, 2)])

# STAIRCASE3_14 spliced with K4 at vertex 3: pattern (2), and its two
# solitary edges 78 and 14-3 lie at distance four
FAMILY_D_16 = _g(16, [(0, 2), (3, 1), (1, 0), (2, 4), (4, 5), (5, 6), (6, 7),
                      (7, 8), (7, 9), (9, 8), (8, 10), (10, 11), (11, 9),
                      (12, 0), (12, 13), (13, 1), (12, 6), (5, 10), (13, 11),
                      (14, 15), (2, 14), (14, 3), (3, 15), (15, 4)])

# a nonplanar 3-edge-connected 4-graph with pattern (2); solitary 57 and 20
NONPLANAR_4GRAPH = _g(8, [(0, 1), (1, 3), (3, 5), (5, 7), (7, 6), (6, 4),
                          (4, 2), (2, 0), (1, 2), (3, 4), (5, 6), (0, 7),
                          (0, 1), (2, 5), (3, 4), (6, 7)])

# smallest 3-connected cubics with patterns (1,1) and (1)
CUBIC_PATTERN_11 = _g(12, [(0, 3), (3, 4), (4, 10), (11, 10), (10, 9), (9, 11),
                           (11, 8), (8, 7), (7, 9), (6, 7), (6, 5), (5, 4),
                           (5, 3), (0, 2), (2, 1), (1, 0), (2, 6), (1, 8)])
CUBIC_PATTERN_1A = _g(14, [(0, 2), (2, 1), (1, 0), (2, 3), (3, 4), (3, 5), (5, 8),
                           (8, 6), (8, 7), (0, 6), (6, 7), (7, 12), (12, 11),
                           (11, 13), (13, 12), (5, 9), (9, 11), (1, 4), (4, 10),
                           (10, 13), (9, 10)])
CUBIC_PATTERN_1B = _g(14, [(0, 1), (1, 2), (2, 0), (4, 1), (4, 3), (3, 5), (3, 2),
                           (6, 5), (5, 9), (9, 11), (12, 11), (11, 13), (7, 8),
                           (8, 10), (10, 12), (12, 13), (10, 9), (6, 8), (6, 7),
                           (0, 7), (4, 13)])
CUBIC_PATTERN_1C = _g(14, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (4, 6),
                           (6, 5), (5, 0), (6, 9), (1, 8), (3, 7), (7, 11),
                           (11, 12), (12, 13), (13, 11), (8, 10), (10, 13),
                           (7, 8), (9, 12), (9, 10)])

# small 3-edge-connected 4-graphs with patterns (1,1), (1,1), (2) and (1)
QUARTIC_PATTERN_11A = _g(10, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (3, 5),
                              (5, 6), (5, 7), (7, 8), (7, 9), (9, 8), (1, 4),
                              (4, 9), (6, 8), (0, 6), (0, 2), (1, 4), (3, 5),
                              (6, 8), (7, 9)])
QUARTIC_PATTERN_11B = _g(10, [(0, 1), (0, 2), (0, 3), (4, 1), (5, 1), (6, 2),
                              (7, 2), (8, 3), (9, 3), (4, 5), (5, 6), (6, 7),
                              (7, 8), (8, 9), (9, 4), (6, 2), (3, 9), (7, 8),
                              (1, 0), (4, 5)])
QUARTIC_PATTERN_2 = _g(6, [(1, 0), (0, 2), (2, 1), (1, 3), (3, 4), (4, 5), (5, 3),
                           (2, 4), (1, 4), (0, 5), (0, 2), (3, 5)])
QUARTIC_PATTERN_1 = _g(8, [(0, 1), (1, 3), (3, 5), (5, 7), (7, 6), (6, 4), (4, 2),
                           (2, 0), (1, 2), (3, 4), (5, 6), (0, 7), (0, 2), (5, 7),
                           (1, 4), (3, 6)])

NAMED = {
    "theta": THETA,
    "K2": K2,
    "C4": C4,
    "P4": P4,
    "K4": K4,
    "C6bar": C6BAR,
    "petersen": PETERSEN,
    "R8": R8,
    "R10": R10,
    "N10": N10,
    "three_piece_3graph": THREE_PIECE_3GRAPH,
    "S1": S1,
    "S2": S2,
    "S3": S3,
    "S4": S4,
    "S5": S5,
    "staircase3_14": STAIRCASE3_14,
    "staircase3_12a": STAIRCASE3_12A,
    "staircase3_12b": STAIRCASE3_12B,
    "family_D_16": FAMILY_D_16,
    "nonplanar_4graph": NONPLANAR_4GRAPH,
    "cubic_pattern_11": CUBIC_PATTERN_11,
    "cubic_pattern_1a": CUBIC_PATTERN_1A,
    "cubic_pattern_1b": CUBIC_PATTERN_1B,
    "cubic_pattern_1c": CUBIC_PATTERN_1C,
    "quartic_pattern_11a": QUARTIC_PATTERN_11A,
    "quartic_pattern_11b": QUARTIC_PATTERN_11B,
    "quartic_pattern_2": QUARTIC_PATTERN_2,
    "quartic_pattern_1": QUARTIC_PATTERN_1,
}


def edge_id(g: MultiGraph, a: int, b: int, nth: int = 0) -> int:
    """Id of the nth edge joining a and b."""
    hits = [i for i, (u, v) in enumerate(g.edges) if {u, v} == {a, b}]
    return hits[nth]


def _constructed_gluings():
    from .cut_structure import glue

    k4k4 = glue(K4, 0, K4, 0)
    thk4 = glue(THETA, 0, K4, 2)
    return {
        "glue_theta_theta": glue(THETA, 0, THETA, 1),
        "glue_theta_K4": thk4,
        "glue_K4_K4": k4k4,
        "glue_K4_C6bar": glue(K4, 4, C6BAR, 6),
        "glue_C6bar_C6bar": glue(C6BAR, 0, C6BAR, 8),
        "glue_R8_K4": glue(R8, 7, K4, 1),
        "glue_R8_R8": glue(R8, 0, R8, 4),
        "glue_N10_theta": glue(N10, 3, THETA, 2),
        "glue_S1_K4": glue(S1, 0, K4, 0),
        "glue_R10_K4": glue(R10, 14, K4, 3),
        "glue_petersen_K4": glue(PETERSEN, 5, K4, 5),
        "glue_K4K4_K4": glue(k4k4, 3, K4, 0),
        "glue_thetaK4_C6bar": glue(thk4, 1, C6BAR, 2),
        "glue_quartic_pair": glue(QUARTIC_PATTERN_2, 0, QUARTIC_PATTERN_2, 7),
        "glue_nonplanar_quartic": glue(NONPLANAR_4GRAPH, 12, QUARTIC_PATTERN_2, 3),
    }


GLUINGS = _constructed_gluings()
NAMED.update(GLUINGS)
