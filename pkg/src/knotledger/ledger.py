"""
Bookkeeping for the concordance invariants tau, s and delta.

Values that cannot be computed here (tau needs Heegaard Floer homology,
s needs Khovanov-Lee homology) enter through an axiom table with a
citation attached.  From there they are pushed through connected sums
and band moves as integer intervals, and the two certificates at the
bottom of this module decide what the intervals actually prove.
"""

import json
from dataclasses import dataclass, field, replace
from enum import Enum
from importlib import resources

from .invariants import is_alexander_one
from .seifert import EMPTY, SeifertMatrix, direct_sum, double_seifert, is_band_move


class LedgerError(Exception):
    pass


class UnknownAxiom(LedgerError, LookupError):
    pass


class NotABandMove(LedgerError):
    pass


class MissingMatrix(LedgerError):
    pass


class EmptyInterval(LedgerError):
    pass


# per band move, citing [ln]
TAU_BAND_STEP = 1
S_BAND_STEP = 2


@dataclass(frozen=True)
class BoundedValue:
    """Closed integer interval [lo, hi], optionally restricted to even integers."""

    lo: int
    hi: int
    even_only: bool = False

    def __post_init__(self):
        if self.lo > self.hi:
            raise EmptyInterval("empty interval [%d, %d]" % (self.lo, self.hi))
        if self.even_only and (self.lo % 2 or self.hi % 2):
            raise ValueError("even-only interval needs even endpoints, got [%d, %d]"
                             % (self.lo, self.hi))

    @classmethod
    def exact(cls, value, even_only=False):
        return cls(value, value, even_only)

    @property
    def is_exact(self):
        return self.lo == self.hi

    @property
    def value(self):
        if not self.is_exact:
            raise ValueError("interval [%d, %d] is not exact" % (self.lo, self.hi))
        return self.lo

    def values(self):
        return list(range(self.lo, self.hi + 1, 2 if self.even_only else 1))

    def __contains__(self, x):
        return self.lo <= x <= self.hi and not (self.even_only and x % 2)

    def __add__(self, other):
        return BoundedValue(self.lo + other.lo, self.hi + other.hi,
                            self.even_only and other.even_only)

    def widen(self, k):
        return BoundedValue(self.lo - k, self.hi + k, self.even_only and k % 2 == 0)

    def intersect(self, lo, hi):
        """Clip to [lo, hi], rounding inward to even endpoints when even_only."""
        lo, hi = max(self.lo, lo), min(self.hi, hi)
        if self.even_only:
            lo += lo % 2
            hi -= hi % 2
        if lo > hi:
            raise EmptyInterval("clipping [%d, %d] to [%d, %d] leaves nothing"
                                % (self.lo, self.hi, lo, hi))
        return BoundedValue(lo, hi, self.even_only)

    def as_dict(self):
        return {"lo": self.lo, "hi": self.hi, "even_only": self.even_only}

    def __str__(self):
        return "[%d, %d]%s" % (self.lo, self.hi, " even" if self.even_only else "")


@dataclass(frozen=True)
class KnotRecord:
    name: str
    tau: BoundedValue
    s: BoundedValue
    matrix: SeifertMatrix = None
    delta_tag: str = None
    provenance: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if not self.s.even_only:
            raise ValueError("s is always even; build it with even_only=True")
        object.__setattr__(self, "provenance", tuple(self.provenance))


def unknot():
    return KnotRecord("unknot", BoundedValue.exact(0), BoundedValue.exact(0, even_only=True),
                      matrix=EMPTY)


def canonical_name(name):
    return "".join(name.split()).replace("₊", "+")


@dataclass(frozen=True)
class Axiom:
    name: str
    framing: int
    tau: int
    s: int
    delta_tag: str
    citation: str


class AxiomStore:
    """Read-only table of doubled knots with known (tau, s) values."""

    def __init__(self, axioms=()):
        table = {}
        for ax in axioms:
            if not ax.citation:
                raise ValueError("axiom %r has no citation" % ax.name)
            table[canonical_name(ax.name)] = ax
        self._table = table

    @classmethod
    def from_dict(cls, data):
        return cls(Axiom(name=name, framing=int(entry["framing"]), tau=int(entry["tau"]),
                         s=int(entry["s"]), delta_tag=entry.get("delta_tag"),
                         citation=entry["citation"])
                   for name, entry in data.items())

    @classmethod
    def from_json(cls, path):
        with open(path, encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))

    @classmethod
    def default(cls):
        text = resources.files("knotledger").joinpath("fixtures/axioms.json").read_text("utf-8")
        return cls.from_dict(json.loads(text))

    def __getitem__(self, name):
        try:
            return self._table[canonical_name(name)]
        except KeyError:
            raise UnknownAxiom("no axiom for %r" % name) from None

    def __contains__(self, name):
        return canonical_name(name) in self._table

    def __iter__(self):
        return iter(self._table)

    def __len__(self):
        return len(self._table)


_default_store = None


def default_store():
    global _default_store
    if _default_store is None:
        _default_store = AxiomStore.default()
    return _default_store


def known_double(name, store=None):
    ax = (store if store is not None else default_store())[name]
    return KnotRecord(
        name=ax.name,
        tau=BoundedValue.exact(ax.tau),
        s=BoundedValue.exact(ax.s, even_only=True),
        matrix=double_seifert(ax.framing),
        delta_tag=ax.delta_tag,
        provenance=(ax.citation,),
    )


def connect_sum(a, b, name=None):
    """tau and s add under connected sum; so do their intervals."""
    if a.matrix is not None and b.matrix is not None:
        matrix = direct_sum(a.matrix, b.matrix)
    else:
        matrix = None
    return KnotRecord(
        name=name or "%s # %s" % (a.name, b.name),
        tau=a.tau + b.tau,
        s=a.s + b.s,
        matrix=matrix,
        provenance=a.provenance + b.provenance,
    )


def band_move_update(r, after, band_index, name=None):
    """
    Record for the knot obtained by cutting and reattaching one band.

    tau moves by at most 1 and s by at most 2; s is then clipped to
    [-2g, 2g] for the genus g of the new surface.  tau is not clipped.
    """
    if r.matrix is None:
        raise MissingMatrix("record %r has no Seifert matrix" % r.name)
    if not isinstance(after, SeifertMatrix):
        after = SeifertMatrix(after)
    if r.matrix.dim != after.dim or not is_band_move(r.matrix, after, band_index):
        raise NotABandMove("matrix is not a band move of %r at band %d" % (r.name, band_index))
    g = after.genus
    return replace(
        r,
        name=name or "%s after band move %d" % (r.name, band_index),
        tau=r.tau.widen(TAU_BAND_STEP),
        s=r.s.widen(S_BAND_STEP).intersect(-2 * g, 2 * g),
        matrix=after,
        delta_tag=None,
        provenance=r.provenance + ("[ln]",),
    )


class Verdict(Enum):
    CERTIFIED = "certified"
    UNCERTIFIED = "uncertified"

    def __bool__(self):
        return self is Verdict.CERTIFIED


def tau_neq_s_half(r):
    """CERTIFIED when no value of tau can equal any value of s/2."""
    disjoint = 2 * r.tau.hi < r.s.lo or 2 * r.tau.lo > r.s.hi
    return Verdict.CERTIFIED if disjoint else Verdict.UNCERTIFIED


def summand_rank3_certificate(a, b, c):
    """
    Do tau, s/2 and delta, evaluated on a, b, c, give a rank 3 matrix?

    With tau = s/2 = x on both a and b, the matrix

        [ x     x      delta_a ]
        [ x     x      delta_b ]
        [ tau_c s_c/2  delta_c ]

    has determinant x (delta_b - delta_a)(tau_c - s_c/2), which is
    nonzero when x != 0, the delta tags differ and tau_c != s_c/2 is
    certified.
    """
    for r in (a, b):
        if not (r.tau.is_exact and r.s.is_exact and 2 * r.tau.value == r.s.value):
            return Verdict.UNCERTIFIED
    if a.tau.value != b.tau.value or a.tau.value == 0:
        return Verdict.UNCERTIFIED
    if a.delta_tag is None or b.delta_tag is None or a.delta_tag == b.delta_tag:
        return Verdict.UNCERTIFIED
    return tau_neq_s_half(c)


def topologically_slice(r):
    """True when the Seifert matrix has Alexander polynomial 1 (Freedman); otherwise None, meaning unknown."""
    if r.matrix is not None and is_alexander_one(r.matrix):
        return True
    return None
