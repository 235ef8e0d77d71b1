"""
Exact integer arithmetic: Laurent polynomials in one variable t, small
square integer matrices, determinants of polynomial matrices and
signatures of symmetric integer matrices.

Nothing in here touches floating point.
"""

from fractions import Fraction
from math import gcd, isqrt


class LaurentPoly:
    """
    An integer polynomial in t and 1/t.

    Stored as a mapping exponent -> nonzero coefficient; the zero
    polynomial is the empty mapping.  Instances are immutable and
    hashable.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        items = {}
        if coeffs:
            for e, c in dict(coeffs).items():
                if int(e) != e or int(c) != c:
                    raise TypeError("exponents and coefficients must be integers")
                if c:
                    items[int(e)] = int(c)
        object.__setattr__(self, "_coeffs", items)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def constant(cls, c):
        return cls({0: c})

    @classmethod
    def monomial(cls, c, e):
        return cls({e: c})

    @classmethod
    def t(cls):
        return cls({1: 1})

    @classmethod
    def from_list(cls, coeffs, start=0):
        """Coefficients listed from exponent `start` upwards."""
        return cls({start + i: c for i, c in enumerate(coeffs)})

    @property
    def coeffs(self):
        return dict(self._coeffs)

    def is_zero(self):
        return not self._coeffs

    def min_exponent(self):
        if not self._coeffs:
            raise ValueError("zero polynomial has no exponents")
        return min(self._coeffs)

    def max_exponent(self):
        if not self._coeffs:
            raise ValueError("zero polynomial has no exponents")
        return max(self._coeffs)

    def coefficient_list(self):
        """Dense coefficients from min_exponent() to max_exponent()."""
        if not self._coeffs:
            return []
        lo, hi = self.min_exponent(), self.max_exponent()
        return [self._coeffs.get(e, 0) for e in range(lo, hi + 1)]

    def __getitem__(self, e):
        return self._coeffs.get(e, 0)

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are only defined for units; use shift()")
        result = LaurentPoly.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def shift(self, k):
        """Multiply by t**k."""
        return LaurentPoly({e + k: c for e, c in self._coeffs.items()})

    def reverse(self):
        """Substitute t -> 1/t."""
        return LaurentPoly({-e: c for e, c in self._coeffs.items()})

    def evaluate(self, a):
        """
        Exact value at an integer (or Fraction) point.  Returns an int
        whenever the value is integral.
        """
        if not self._coeffs:
            return 0
        lo = min(self._coeffs)
        if a == 0 and lo < 0:
            raise ZeroDivisionError("negative exponent evaluated at 0")
        if isinstance(a, int) and (lo >= 0 or a in (1, -1)):
            # Horner over the shifted polynomial; a**lo is exact for these cases
            acc = 0
            for e in range(max(self._coeffs), lo - 1, -1):
                acc = acc * a + self._coeffs.get(e, 0)
            return acc * a ** lo if lo >= 0 else acc * a ** (-lo)
        total = Fraction(0)
        for e, c in self._coeffs.items():
            total += c * Fraction(a) ** e
        return int(total) if total.denominator == 1 else total

    __call__ = evaluate

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __bool__(self):
        return bool(self._coeffs)

    def __repr__(self):
        return "LaurentPoly(%r)" % dict(sorted(self._coeffs.items()))

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for e in sorted(self._coeffs, reverse=True):
            c = self._coeffs[e]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else "t^%d" % e
                body = var if mag == 1 else "%d%s" % (mag, var)
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += " %s %s" % (sign, body)
        return text


class IntMatrix:
    """Immutable square matrix of Python ints.  Dimension 0 is allowed."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise ValueError("matrix must be square, got a row of length %d in a %d-row matrix"
                                 % (len(row), n))
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def zeros(cls, n):
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def n(self):
        return len(self.rows)

    def __len__(self):
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def transpose(self):
        return IntMatrix(zip(*self.rows)) if self.rows else self

    @property
    def T(self):
        return self.transpose()

    def _check(self, other):
        if not isinstance(other, IntMatrix):
            return False
        if other.n != self.n:
            raise ValueError("dimension mismatch: %d vs %d" % (self.n, other.n))
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        return IntMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return IntMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return IntMatrix([[-a for a in r] for r in self.rows])

    def replace(self, i, j, value):
        rows = [list(r) for r in self.rows]
        rows[i][j] = value
        return IntMatrix(rows)

    def is_symmetric(self):
        return self == self.transpose()

    def block_sum(self, other):
        n, m = self.n, other.n
        rows = [list(r) + [0] * m for r in self.rows]
        rows += [[0] * n + list(r) for r in other.rows]
        return IntMatrix(rows)

    def tolist(self):
        return [list(r) for r in self.rows]

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "IntMatrix(%r)" % (self.tolist(),)

    def __str__(self):
        if not self.rows:
            return "[]"
        width = max(len(str(x)) for r in self.rows for x in r)
        return "\n".join(" ".join(str(x).rjust(width) for x in r) for r in self.rows)


def bareiss_det(rows):
    """
    Determinant of a square integer matrix by fraction-free Gaussian
    elimination.  Every intermediate value is an integer.
    """
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact: Sylvester's identity guarantees divisibility
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def _interpolation_nodes(count):
    nodes = [0]
    k = 1
    while len(nodes) < count:
        nodes.append(k)
        if len(nodes) < count:
            nodes.append(-k)
        k += 1
    return nodes


def _interpolate(nodes, values):
    """
    Integer coefficients (low -> high) of the polynomial through the
    points, by Lagrange interpolation over one common denominator.
    """
    n = len(nodes)
    # full = prod (x - x_j), coefficients low -> high
    full = [1]
    for x in nodes:
        full = [0] + full
        for k in range(len(full) - 1):
            full[k] -= x * full[k + 1]
    weights = []
    for i, xi in enumerate(nodes):
        w = 1
        for j, xj in enumerate(nodes):
            if j != i:
                w *= xi - xj
        weights.append(w)
    common = 1
    for w in weights:
        common = common * abs(w) // gcd(common, w)
    total = [0] * n
    for xi, yi, w in zip(nodes, values, weights):
        if not yi:
            continue
        # full / (x - xi) by synthetic division, high -> low
        scale = yi * (common // w)
        carry = 0
        for k in range(n, 0, -1):
            carry = full[k] + carry * xi
            total[k - 1] += scale * carry
    out = []
    for c in total:
        q, r = divmod(c, common)
        if r:
            raise ArithmeticError("interpolated determinant has a non-integer coefficient")
        out.append(q)
    return out


def poly_matrix_det(M):
    """
    Exact determinant of a square matrix of LaurentPoly (ints are
    accepted as constants).

    Each row is first multiplied by a power of t so its entries become
    honest polynomials; the determinant is then sampled at enough
    integer nodes, each sample taken with bareiss_det, and recovered by
    exact interpolation.
    """
    rows = [[e if isinstance(e, LaurentPoly) else LaurentPoly.constant(e) for e in row]
            for row in M]
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise ValueError("polynomial matrix must be square")
    if n == 0:
        return LaurentPoly.constant(1)

    total_shift = 0
    degree_bound = 0
    shifted_rows = []
    for row in rows:
        nonzero = [p for p in row if p]
        if not nonzero:
            return LaurentPoly()
        lo = min(p.min_exponent() for p in nonzero)
        hi = max(p.max_exponent() for p in nonzero)
        total_shift += lo
        degree_bound += hi - lo
        shifted_rows.append([p.shift(-lo) for p in row])

    nodes = _interpolation_nodes(degree_bound + 1)
    values = [bareiss_det([[p.evaluate(x) for p in row] for row in shifted_rows])
              for x in nodes]
    return LaurentPoly.from_list(_interpolate(nodes, values), start=total_shift)


def normalize_alexander(p):
    """
    Canonical representative of p up to units +-t^k: lowest exponent 0
    and value +1 at t = 1.
    """
    if not isinstance(p, LaurentPoly):
        p = LaurentPoly.constant(p)
    value = p.evaluate(1) if p else 0
    if value not in (1, -1):
        raise ValueError("not an Alexander polynomial: value %s at t = 1 (expected +-1)" % value)
    q = p.shift(-p.min_exponent())
    return -q if value == -1 else q


def symmetric_signature(S):
    """
    (signature, nullity) of a symmetric integer matrix, by congruence
    diagonalization over the rationals.

    A nonzero diagonal entry is used as a 1x1 pivot.  When the whole
    remaining diagonal vanishes but some off-diagonal entry b does not,
    the 2x2 block [[0, b], [b, 0]] is split off as one positive and one
    negative square.
    """
    if not isinstance(S, IntMatrix):
        S = IntMatrix(S)
    if not S.is_symmetric():
        raise ValueError("symmetric_signature needs a symmetric matrix")
    a = [[Fraction(x) for x in row] for row in S.rows]
    pos = neg = 0
    while a:
        m = len(a)
        piv = next((i for i in range(m) if a[i][i] != 0), None)
        if piv is not None:
            d = a[piv][piv]
            if d > 0:
                pos += 1
            else:
                neg += 1
            rest = [i for i in range(m) if i != piv]
            a = [[a[i][j] - a[i][piv] * a[piv][j] / d for j in rest] for i in rest]
            continue
        pair = next(((i, j) for i in range(m) for j in range(i + 1, m) if a[i][j] != 0), None)
        if pair is None:
            break
        i0, j0 = pair
        b = a[i0][j0]
        pos += 1
        neg += 1
        rest = [k for k in range(m) if k not in pair]
        # Schur complement against P = [[0, b], [b, 0]], P^-1 = [[0, 1/b], [1/b, 0]]
        a = [[a[k][l] - (a[k][i0] * a[j0][l] + a[k][j0] * a[i0][l]) / b for l in rest]
             for k in rest]
    nullity = len(a)
    return pos - neg, nullity


def is_perfect_square(n):
    if n < 0:
        raise ValueError("is_perfect_square expects a non-negative integer")
    r = isqrt(n)
    return r * r == n
