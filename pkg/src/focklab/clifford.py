"""Exact Clifford-algebra kernel for free-fermion Fock modules.

Two families of odd generators are supported: a single neutral fermion
whose modes are half-integers (stored as doubled integers so that every
index stays integral), and one pair of charged fermions with integer
modes.  A family is determined by its pairing rule: the scalar value of
the anticommutator of two modes.  The Fock module of a family is spanned
by canonically ordered products of creation modes applied to the vacuum,
with exact rational coefficients throughout.

All values are immutable after construction and every operation is a
pure function, so everything here is safe to share across threads.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .reports import CheckReport

NEUTRAL = "D"
PLUS = "+"
MINUS = "-"

NEUTRAL_FAMILY = "neutral"
CHARGED_FAMILY = "charged"
FAMILIES = (NEUTRAL_FAMILY, CHARGED_FAMILY)

ZERO = Fraction(0)
ONE = Fraction(1)


class SpeciesMismatchError(ValueError):
    """Modes or vectors from different species families were mixed."""


@dataclass(frozen=True)
class Mode:
    """A single fermion mode.

    ``index`` is the doubled half-integer mode index (always odd) for the
    neutral species, and the plain integer mode index for the charged
    species.  A mode is a creation operator exactly when it does not kill
    the vacuum; in both families that means a negative index.
    """

    species: str
    index: int

    def __post_init__(self) -> None:
        if self.species == NEUTRAL:
            if self.index % 2 == 0:
                raise ValueError(f"neutral doubled index must be odd, got {self.index}")
        elif self.species not in (PLUS, MINUS):
            raise ValueError(f"unknown species {self.species!r}")

    @property
    def family(self) -> str:
        return NEUTRAL_FAMILY if self.species == NEUTRAL else CHARGED_FAMILY

    @property
    def is_creation(self) -> bool:
        return self.index < 0

    @property
    def key(self) -> tuple[int, int]:
        """Fixed total order on modes.

        Used both for the canonical factor order inside monomials and for
        the canonical key order of quadratic operators.
        """
        if self.species == NEUTRAL:
            return (0, self.index)
        if self.species == PLUS:
            return (0, -self.index)
        return (1, -self.index)

    def __repr__(self) -> str:
        if self.species == NEUTRAL:
            return f"phi({self.index}/2)"
        return f"psi{self.species}({self.index})"


def neutral_mode(doubled: int) -> Mode:
    return Mode(NEUTRAL, doubled)


def plus_mode(n: int) -> Mode:
    return Mode(PLUS, n)


def minus_mode(n: int) -> Mode:
    return Mode(MINUS, n)


def pairing(a: Mode, b: Mode) -> Fraction:
    """Value of the anticommutator of two modes.

    Neutral modes pair when their doubled indices are opposite; charged
    modes pair across species when the mode indices sum to -1.  Every
    mode pairs with exactly one partner, so a monomial (whose factors are
    distinct) contains at most one factor pairing with a given mode.
    """
    if a.family != b.family:
        raise SpeciesMismatchError(f"cannot pair {a!r} with {b!r}")
    if a.species == NEUTRAL:
        return ONE if a.index == -b.index else ZERO
    if a.species != b.species and a.index + b.index == -1:
        return ONE
    return ZERO


def adjoint_mode(a: Mode) -> Mode:
    """The adjoint of a mode under the orthonormal-basis form.

    This is the unique mode pairing with ``a``: negation of the index for
    the neutral fermion, the opposite-species partner for charged ones.
    """
    if a.species == NEUTRAL:
        return Mode(NEUTRAL, -a.index)
    if a.species == PLUS:
        return Mode(MINUS, -a.index - 1)
    return Mode(PLUS, -a.index - 1)


def creation_label(a: Mode) -> int:
    """Nonnegative label n of a creation mode.

    Neutral creation modes are indexed -(2n+1) for n >= 0; charged
    creation modes of either species are indexed -(n+1).
    """
    if not a.is_creation:
        raise ValueError(f"{a!r} is not a creation mode")
    if a.species == NEUTRAL:
        return (-a.index - 1) // 2
    return -a.index - 1


# A monomial is a tuple of creation modes sorted by Mode.key; the empty
# tuple is the vacuum.
Monomial = tuple


def canonicalize_monomial(factors: Iterable[Mode]) -> Optional[tuple[Monomial, int]]:
    """Sort creation factors into canonical order.

    Returns (monomial, sign), the sign being the parity of the sorting
    permutation, or None when a factor repeats (odd generators square to
    zero).  Non-creation factors are rejected.
    """
    seq = list(factors)
    fam = None
    for f in seq:
        if not f.is_creation:
            raise ValueError(f"non-creation factor {f!r} in monomial")
        if fam is None:
            fam = f.family
        elif f.family != fam:
            raise SpeciesMismatchError("monomial factors must share one species family")
    keys = [f.key for f in seq]
    if len(set(keys)) != len(keys):
        return None
    inversions = 0
    for i in range(len(keys)):
        for j in range(i + 1, len(keys)):
            if keys[i] > keys[j]:
                inversions += 1
    mono = tuple(sorted(seq, key=lambda f: f.key))
    return mono, (-1) ** inversions


class FockVector:
    """Finite rational linear combination of canonical monomials.

    Zero coefficients are never stored and equality is coefficient-wise.
    Instances are treated as immutable: all operations build new vectors.
    """

    __slots__ = ("family", "terms")

    def __init__(self, family: str, terms=None):
        if family not in FAMILIES:
            raise ValueError(f"unknown family {family!r}")
        accum: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for mono, coeff in items:
                mono = tuple(mono)
                for f in mono:
                    if f.family != family:
                        raise SpeciesMismatchError(
                            f"{f!r} does not belong to the {family} family")
                c = Fraction(coeff)
                if c:
                    accum[mono] = accum.get(mono, ZERO) + c
        self.family = family
        self.terms = {m: c for m, c in accum.items() if c}

    @classmethod
    def zero(cls, family: str) -> "FockVector":
        return cls(family)

    @classmethod
    def vacuum(cls, family: str, coeff=1) -> "FockVector":
        return cls(family, {(): coeff})

    @classmethod
    def monomial(cls, mono, coeff=1, family: str | None = None) -> "FockVector":
        mono = tuple(mono)
        if family is None:
            if not mono:
                raise ValueError("family is required for the bare vacuum")
            family = mono[0].family
        return cls(family, {mono: coeff})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mono) -> Fraction:
        return self.terms.get(tuple(mono), ZERO)

    def support(self) -> set:
        return set(self.terms)

    def items(self):
        return self.terms.items()

    def _require_same_family(self, other: "FockVector") -> None:
        if self.family != other.family:
            raise SpeciesMismatchError(
                f"cannot combine {self.family} and {other.family} vectors")

    def __add__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        self._require_same_family(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, ZERO) + c
        return FockVector(self.family, out)

    def __sub__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return FockVector(self.family, {m: -c for m, c in self.terms.items()})

    def __mul__(self, scalar):
        c = Fraction(scalar)
        return FockVector(self.family, {m: c * v for m, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return self.family == other.family and self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        if not self.terms:
            return f"0[{self.family}]"
        bits = []
        for mono, c in sorted(self.terms.items(), key=lambda kv: (len(kv[0]), [f.key for f in kv[0]])):
            word = "".join(repr(f) for f in mono)
            bits.append(f"({c})*{word}|0>")
        return " + ".join(bits)


def _apply_mode_to_monomial(a: Mode, mono: Monomial):
    """Act with one mode on one monomial; returns (coefficient, monomial) or None."""
    if a.is_creation:
        key = a.key
        keys = [f.key for f in mono]
        pos = bisect_left(keys, key)
        if pos < len(mono) and keys[pos] == key:
            return None
        return (ONE if pos % 2 == 0 else -ONE, mono[:pos] + (a,) + mono[pos:])
    for i, f in enumerate(mono):
        p = pairing(a, f)
        if p:
            sign = ONE if i % 2 == 0 else -ONE
            return (sign * p, mono[:i] + mono[i + 1:])
    return None


def apply_mode(a: Mode, v: FockVector) -> FockVector:
    """Clifford action of a single mode, extended linearly.

    A creation mode inserts its factor with the permutation sign (zero if
    already present); an annihilation mode removes the paired factor with
    sign (-1)**(number of factors passed), or gives zero if absent.
    """
    if a.family != v.family:
        raise SpeciesMismatchError(f"mode {a!r} cannot act on a {v.family} vector")
    out: dict = {}
    for mono, coeff in v.terms.items():
        hit = _apply_mode_to_monomial(a, mono)
        if hit is None:
            continue
        c, new = hit
        out[new] = out.get(new, ZERO) + coeff * c
    return FockVector(v.family, out)


def contraction(a: Mode, b: Mode) -> Fraction:
    """Scalar part of the product of two modes relative to normal order."""
    if a.is_creation:
        return ZERO
    return pairing(a, b)


def apply_normal_ordered_pair(a: Mode, b: Mode, v: FockVector) -> FockVector:
    """Apply the normal-ordered quadratic built from modes a, b.

    Equals the plain product unless the left mode is an annihilator
    paired with the right one, in which case the pair is rewritten as
    minus the reversed product (subtracting the scalar contraction).
    """
    if a.family != v.family or b.family != v.family:
        raise SpeciesMismatchError("normal-ordered pair and vector families differ")
    if not a.is_creation and pairing(a, b):
        return -apply_mode(b, apply_mode(a, v))
    return apply_mode(a, apply_mode(b, v))


def inner_product(v: FockVector, w: FockVector) -> Fraction:
    """Bilinear form with the canonical monomial basis orthonormal."""
    if v.family != w.family:
        raise SpeciesMismatchError("inner product requires one species family")
    if len(v.terms) > len(w.terms):
        v, w = w, v
    total = ZERO
    for mono, c in v.terms.items():
        d = w.terms.get(mono)
        if d:
            total += c * d
    return total


def anticommutator_check(a: Mode, b: Mode, probes) -> CheckReport:
    """Verify the pairing rule against explicit probe vectors.

    For every probe v this asserts (ab + ba)v == pairing(a, b) * v and
    reports any discrepancies.
    """
    probes = list(probes)
    if not probes:
        raise ValueError("probes must be nonempty")
    expected = pairing(a, b)
    failures = []
    for idx, v in enumerate(probes):
        lhs = apply_mode(a, apply_mode(b, v)) + apply_mode(b, apply_mode(a, v))
        rhs = expected * v
        if lhs != rhs:
            failures.append({
                "modes": [repr(a), repr(b)],
                "probe": idx,
                "discrepancy": repr(lhs - rhs),
            })
    return CheckReport(
        name="anticommutator",
        params={"a": repr(a), "b": repr(b), "probes": len(probes)},
        checks=len(probes),
        failures=failures,
    )
