"""Finitely supported doubly infinite matrices with a central term.

Elements of the centrally extended matrix algebra are stored as sparse
integer-indexed matrices plus a rational central coefficient.  The
two-cocycle is the trace of [J, A]B where J projects onto indices <= 0;
the commutator with J has finite support whenever A does, so every value
is an exact finite sum.  The d-type subalgebra consists of matrices
antisymmetric about the cross-diagonal, a[i,j] == -a[1-j,1-i], and is
spanned by the embedded generators built below.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class AlgebraElement:
    """Sparse matrix over the integers-by-integers grid plus a central slot."""

    __slots__ = ("entries", "central")

    def __init__(self, entries=None, central=0):
        accum: dict = {}
        if entries:
            items = entries.items() if isinstance(entries, dict) else entries
            for key, coeff in items:
                i, j = key
                c = Fraction(coeff)
                if c:
                    k = (int(i), int(j))
                    accum[k] = accum.get(k, ZERO) + c
        self.entries = {k: c for k, c in accum.items() if c}
        self.central = Fraction(central)

    @property
    def is_zero(self) -> bool:
        return not self.entries and not self.central

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries.get((i, j), ZERO)

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        out = dict(self.entries)
        for k, c in other.entries.items():
            out[k] = out.get(k, ZERO) + c
        return AlgebraElement(out, self.central + other.central)

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return AlgebraElement({k: -c for k, c in self.entries.items()}, -self.central)

    def __mul__(self, scalar):
        c = Fraction(scalar)
        return AlgebraElement({k: c * v for k, v in self.entries.items()}, c * self.central)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.entries == other.entries and self.central == other.central

    __hash__ = None

    def __repr__(self):
        bits = [f"({c})E[{i},{j}]" for (i, j), c in sorted(self.entries.items())]
        if self.central:
            bits.append(f"({self.central})c")
        return " + ".join(bits) if bits else "0"


def elementary(i: int, j: int, coeff=1) -> AlgebraElement:
    return AlgebraElement({(i, j): coeff})


def central_term(coeff=1) -> AlgebraElement:
    return AlgebraElement(central=coeff)


def cocycle(A: AlgebraElement, B: AlgebraElement) -> Fraction:
    """Two-cocycle Trace([J, A] B), J the projection onto indices <= 0.

    On elementary matrices it is +1 on E[i,j], E[j,i] with i <= 0 < j,
    -1 on the transposed order, and 0 otherwise.
    """
    total = ZERO
    for (i, j), a in A.entries.items():
        w = (1 if i <= 0 else 0) - (1 if j <= 0 else 0)
        if w:
            b = B.entries.get((j, i))
            if b:
                total += w * a * b
    return total


def bracket(A: AlgebraElement, B: AlgebraElement) -> AlgebraElement:
    """Matrix commutator with the cocycle in the central slot.

    Central coefficients of the inputs contribute nothing.
    """
    prod: dict = {}
    for (i, j), a in A.entries.items():
        for (k, l), b in B.entries.items():
            if j == k:
                key = (i, l)
                prod[key] = prod.get(key, ZERO) + a * b
            if l == i:
                key = (k, j)
                prod[key] = prod.get(key, ZERO) - a * b
    return AlgebraElement(prod, cocycle(A, B))


def transpose(A: AlgebraElement) -> AlgebraElement:
    """The compact anti-involution on the matrix part (rational scalars)."""
    return AlgebraElement({(j, i): c for (i, j), c in A.entries.items()}, A.central)


def d_embed(m: int, n: int) -> AlgebraElement:
    """Generator E[m,n] - E[1-n,1-m] of the d-type subalgebra.

    Vanishes exactly when m + n == 1.
    """
    return AlgebraElement({(m, n): 1, (1 - n, 1 - m): -1})


def in_d_subalgebra(A: AlgebraElement) -> bool:
    """Entry condition a[i,j] == -a[1-j,1-i] for the d-type subalgebra."""
    for (i, j), c in A.entries.items():
        if A.entries.get((1 - j, 1 - i), ZERO) != -c:
            return False
    return True


def coroot(i: int) -> AlgebraElement:
    """E[i,i] - E[i+1,i+1], plus the central term exactly at i == 0."""
    return AlgebraElement({(i, i): 1, (i + 1, i + 1): -1}, central=1 if i == 0 else 0)


def triangular_part(i: int, j: int) -> str:
    if j > i:
        return "upper"
    if j == i:
        return "diagonal"
    return "lower"


@dataclass(frozen=True)
class WeightLabel:
    """Label of a diagonal weight functional.

    Kinds: aHat(n) on the full algebra; dHat0, dHat1 (central value 1/2)
    and ddHat(n), ddHatDet (central value 1) on the d-type subalgebra.
    """

    kind: str
    sector: int | None = None


def a_hat(n: int) -> WeightLabel:
    return WeightLabel("aHat", n)


def d_hat0() -> WeightLabel:
    return WeightLabel("dHat0")


def d_hat1() -> WeightLabel:
    return WeightLabel("dHat1")


def dd_hat(n: int) -> WeightLabel:
    return WeightLabel("ddHat", n)


def dd_hat_det() -> WeightLabel:
    return WeightLabel("ddHatDet")


_CENTRAL_VALUE = {
    "aHat": ONE,
    "dHat0": Fraction(1, 2),
    "dHat1": Fraction(1, 2),
    "ddHat": ONE,
    "ddHatDet": ONE,
}


def _a_lambda(n: int, i: int) -> Fraction:
    if 0 < i <= n:
        return ONE
    if n < i <= 0:
        return -ONE
    return ZERO


def _d_diag_value(label: WeightLabel, i: int) -> Fraction:
    # Value on E[i,i] - E[1-i,1-i]; antisymmetric under i -> 1-i.
    if label.kind == "dHat0":
        return ZERO
    if label.kind == "dHat1":
        return {1: ONE, 0: -ONE}.get(i, ZERO)
    if label.kind == "ddHatDet":
        return {1: Fraction(2), 0: Fraction(-2)}.get(i, ZERO)
    # ddHat(n) and aHat(n) restrict the same way to the d-type diagonal.
    return _a_lambda(label.sector, i) - _a_lambda(label.sector, 1 - i)


def weight_value(label: WeightLabel, x: AlgebraElement) -> Fraction:
    """Exact table lookup of a weight functional.

    Accepts the central element, a diagonal elementary matrix E[i,i]
    (a-type labels only), or an embedded d-type diagonal
    E[i,i] - E[1-i,1-i]; anything else is rejected.
    """
    if label.kind not in _CENTRAL_VALUE:
        raise ValueError(f"unknown weight label kind {label.kind!r}")
    if not x.entries:
        return x.central * _CENTRAL_VALUE[label.kind]
    if x.central:
        raise ValueError("weight argument must be purely diagonal or purely central")
    if len(x.entries) == 1:
        ((i, j), c), = x.entries.items()
        if i != j:
            raise ValueError(f"E[{i},{j}] is not diagonal")
        if label.kind != "aHat":
            raise ValueError("d-type labels evaluate on embedded d-type diagonals only")
        return c * _a_lambda(label.sector, i)
    if len(x.entries) == 2:
        items = sorted(x.entries.items())
        ((i1, j1), c1), ((i2, j2), c2) = items
        if i1 == j1 and i2 == j2 and i2 == 1 - i1 and c2 == -c1:
            i, c = (i1, c1)
            if label.kind == "aHat":
                return c * (_a_lambda(label.sector, i) - _a_lambda(label.sector, 1 - i))
            return c * _d_diag_value(label, i)
    raise ValueError("weight argument must be E[i,i], E[i,i]-E[1-i,1-i], or central")
