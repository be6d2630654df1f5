"""The decorated polytope drawn with bullet coordinates, and one path for it."""

from functools import lru_cache

from affmv.mvpoly import LusztigDatum, MVPolytope, Partition, crystal_e
from affmv.paths import f, straight_path

RIGHT = LusztigDatum((2, 1, 1), Partition((9, 2, 1, 1)), (1, 0, 1))
LEFT = LusztigDatum((1, 2, 1, 1), Partition((2, 1, 1)), (5, 1, 0, 1))
OUTLINE = [
    (0, 0), (2, 2), (3, 5), (4, 10), (4, 36), (3, 41), (2, 42),
    (-3, 37), (-4, 34), (-5, 27), (-5, 19), (-4, 12), (-3, 7), (-1, 1),
]
BIG = (0, 20, 80)  # alpha_0 = alpha_1 = 40, enough room for height 42


def polytope():
    return MVPolytope(LEFT, RIGHT)


def lowering_word(P):
    """Indices in application order with polytope_of_word(word) == P."""
    seq = []
    while True:
        for i in (0, 1):
            Q = crystal_e(P, i)
            if Q is not None:
                seq.append(i)
                P = Q
                break
        else:
            return tuple(reversed(seq))


@lru_cache(maxsize=None)
def path():
    p = straight_path(BIG)
    for i in lowering_word(polytope()):
        p = f(p, i)
    return p
