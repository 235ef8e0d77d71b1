"""
Classical invariants read off a Seifert matrix.

Sign convention: the signature is that of V + V^t, so the matrix
[[-1, 1], [0, -1]] has signature -2.
"""

from dataclasses import dataclass

from .algebra import (LaurentPoly, is_perfect_square, normalize_alexander,
                      poly_matrix_det, symmetric_signature)
from .seifert import SeifertMatrix, validate


def _seifert(V):
    return V if isinstance(V, SeifertMatrix) else validate(V)


def alexander_det(V):
    """Raw det(V - t V^t), before any normalization."""
    V = _seifert(V).V
    t = LaurentPoly.t()
    n = V.n
    return poly_matrix_det([[V[i, j] - t * V[j, i] for j in range(n)] for i in range(n)])


def alexander(V):
    return normalize_alexander(alexander_det(V))


def knot_determinant(V):
    return abs(alexander(V).evaluate(-1))


def signature(V):
    return symmetric_signature(_seifert(V).symmetrized())[0]


def arf(V):
    # Levine: Arf = 0 iff Delta(-1) = +-1 mod 8
    return 0 if alexander(V).evaluate(-1) % 8 in (1, 7) else 1


def genus(V):
    return _seifert(V).genus


def is_alexander_one(V):
    return alexander(V) == LaurentPoly.constant(1)


@dataclass(frozen=True)
class SliceObstructions:
    """Two necessary conditions for algebraic sliceness; never a proof of it."""

    signature_zero: bool
    determinant_square: bool


def slice_obstructions(V):
    return SliceObstructions(
        signature_zero=signature(V) == 0,
        determinant_square=is_perfect_square(knot_determinant(V)),
    )


@dataclass(frozen=True)
class InvariantReport:
    alexander: LaurentPoly
    determinant: int
    signature: int
    arf: int
    genus: int
    alexander_one: bool
    slice_obstructions: SliceObstructions

    def as_dict(self):
        return {
            "alexander": str(self.alexander),
            "alexander_coefficients": self.alexander.coefficient_list(),
            "determinant": self.determinant,
            "signature": self.signature,
            "arf": self.arf,
            "genus": self.genus,
            "alexander_one": self.alexander_one,
            "slice_obstructions": {
                "signature_zero": self.slice_obstructions.signature_zero,
                "determinant_square": self.slice_obstructions.determinant_square,
            },
        }


def report(V):
    V = _seifert(V)
    delta = alexander(V)
    det = abs(delta.evaluate(-1))
    sig = signature(V)
    return InvariantReport(
        alexander=delta,
        determinant=det,
        signature=sig,
        arf=0 if delta.evaluate(-1) % 8 in (1, 7) else 1,
        genus=V.genus,
        alexander_one=delta == LaurentPoly.constant(1),
        slice_obstructions=SliceObstructions(sig == 0, is_perfect_square(det)),
    )
