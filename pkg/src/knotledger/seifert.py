"""
Seifert matrices, the constructions used for twisted doubles and
connected sums, and the band-move relation between two matrices.
"""

from dataclasses import dataclass

from .algebra import IntMatrix, bareiss_det


class SeifertError(ValueError):
    pass


class OddDimension(SeifertError):
    pass


class NotUnimodularIntersection(SeifertError):
    pass


class IndexOutOfRange(SeifertError):
    pass


class DimensionMismatch(SeifertError):
    pass


@dataclass(frozen=True)
class SeifertMatrix:
    """
    A Seifert matrix V of a genus g surface: even dimension 2g and
    det(V - V^t) = 1.  Construct through validate() to get the checks.
    """

    V: IntMatrix

    def __post_init__(self):
        if not isinstance(self.V, IntMatrix):
            object.__setattr__(self, "V", IntMatrix(self.V))
        n = self.V.n
        if n % 2:
            raise OddDimension("Seifert matrix must have even dimension, got %d" % n)
        d = bareiss_det((self.V - self.V.T).rows)
        if d != 1:
            raise NotUnimodularIntersection("det(V - V^t) = %d, expected 1" % d)

    @property
    def dim(self):
        return self.V.n

    @property
    def genus(self):
        return self.V.n // 2

    def intersection_form(self):
        return self.V - self.V.T

    def symmetrized(self):
        return self.V + self.V.T

    def tolist(self):
        return self.V.tolist()


def validate(M):
    """Check both Seifert invariants; raises OddDimension or NotUnimodularIntersection."""
    return SeifertMatrix(M if isinstance(M, IntMatrix) else IntMatrix(M))


EMPTY = SeifertMatrix(IntMatrix([]))


def double_seifert(framing):
    """Seifert matrix of the framing-twisted positive double of any knot."""
    return SeifertMatrix(IntMatrix([[-1, 1], [0, framing]]))


def direct_sum(*matrices):
    """Block sum; the Seifert matrix of a connected sum.  No arguments gives the unknot."""
    V = EMPTY.V
    for m in matrices:
        V = V.block_sum(m.V)
    return SeifertMatrix(V)


def _as_matrix(m):
    if isinstance(m, SeifertMatrix):
        return m.V
    if isinstance(m, IntMatrix):
        return m
    return IntMatrix(m)


def is_band_move(before, after, band_index):
    """
    Can `after` arise from `before` by cutting band `band_index` (1-based)
    and reattaching it?

    Only row and column band_index may differ, and the intersection
    form V - V^t must be the same on both sides.  The amount of change
    in that row/column, including the diagonal framing entry, is not
    restricted.
    """
    A, B = _as_matrix(before), _as_matrix(after)
    if A.n != B.n:
        raise DimensionMismatch("band move needs equal dimensions, got %d and %d" % (A.n, B.n))
    if not 1 <= band_index <= A.n:
        raise IndexOutOfRange("band index %d outside 1..%d" % (band_index, A.n))
    k = band_index - 1
    for i in range(A.n):
        if i == k:
            continue
        for j in range(A.n):
            if j != k and A[i, j] != B[i, j]:
                return False
    return A - A.T == B - B.T


@dataclass(frozen=True)
class BandMoveClaim:
    before: SeifertMatrix
    after: SeifertMatrix
    band_index: int

    def holds(self):
        return is_band_move(self.before, self.after, self.band_index)


# The two 6x6 matrices of the construction, written out literally.
V1 = SeifertMatrix(IntMatrix([
    [-1, 1, 0, 0, 0, 0],
    [0, 2, 0, 0, 0, 0],
    [0, 0, -1, 1, 0, 0],
    [0, 0, 0, 2, 0, 0],
    [0, 0, 0, 0, -1, 1],
    [0, 0, 0, 0, 0, 4],
]))

V2 = SeifertMatrix(IntMatrix([
    [3, 0, 1, 0, 0, 4],
    [-1, 2, 0, 0, 0, 0],
    [1, 0, -1, 1, 0, 0],
    [0, 0, 0, 2, 0, 0],
    [0, 0, 0, 0, -1, 1],
    [4, 0, 0, 0, 0, 4],
]))
