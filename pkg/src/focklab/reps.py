"""Quadratic-operator representations on the fermionic Fock modules.

An operator here is a finite rational combination of normal-ordered
quadratic mode monomials plus a scalar multiple of the identity.  Three
actions are provided: the central-charge-1 action of the full matrix
algebra on the neutral module (label-doubling modes), its d-type
restriction's companion central-charge-1/2 action, and the standard
charge-1 action on the charged module.

Brackets and adjoints are computed symbolically: products of modes are
rewritten into key-ordered monomials of the abstract Clifford algebra,
where the commutator of two quadratics collapses to quadratic-plus-scalar
exactly.  The result is therefore an operator identity on the whole
module, not a truncated check.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import AlgebraElement, bracket, d_embed, elementary, in_d_subalgebra
from .clifford import (
    CHARGED_FAMILY,
    NEUTRAL_FAMILY,
    FockVector,
    SpeciesMismatchError,
    adjoint_mode,
    apply_normal_ordered_pair,
    contraction,
    minus_mode,
    neutral_mode,
    pairing,
    plus_mode,
)
from .reports import CheckReport

ZERO = Fraction(0)
ONE = Fraction(1)

R_ONE = "r1"
R_HALF = "rhalf"
R_A = "ra"
REP_NAMES = (R_ONE, R_HALF, R_A)

_CENTRAL_CHARGE = {R_ONE: ONE, R_HALF: Fraction(1, 2), R_A: ONE}
_FAMILY = {R_ONE: NEUTRAL_FAMILY, R_HALF: NEUTRAL_FAMILY, R_A: CHARGED_FAMILY}


class NotAWeightVectorError(ValueError):
    """A probe vector failed to be an eigenvector of a diagonal operator."""

    def __init__(self, index: int, message: str):
        super().__init__(message)
        self.index = index


def central_charge(rep: str) -> Fraction:
    _check_rep(rep)
    return _CENTRAL_CHARGE[rep]


def rep_family(rep: str) -> str:
    _check_rep(rep)
    return _FAMILY[rep]


def _check_rep(rep: str) -> None:
    if rep not in REP_NAMES:
        raise ValueError(f"unknown representation {rep!r}")


class QuadOp:
    """Normal-ordered quadratic operator plus a scalar.

    Keys are stored with the smaller mode (in the fixed total order)
    first; the sign flip of a reversed normal-ordered pair is folded into
    the coefficient, and a pair of equal modes is the zero operator, so
    no two stored keys denote the same monomial.
    """

    __slots__ = ("family", "quadratic", "scalar")

    def __init__(self, family: str, quadratic: dict, scalar: Fraction):
        self.family = family
        self.quadratic = quadratic
        self.scalar = scalar

    @classmethod
    def build(cls, family: str, terms=(), scalar=0) -> "QuadOp":
        quad: dict = {}
        for a, b, coeff in terms:
            c = Fraction(coeff)
            if not c:
                continue
            if a.family != family or b.family != family:
                raise SpeciesMismatchError("quadratic term does not match operator family")
            ka, kb = a.key, b.key
            if ka == kb:
                continue
            if ka > kb:
                a, b, c = b, a, -c
            key = (a, b)
            quad[key] = quad.get(key, ZERO) + c
        quad = {k: v for k, v in quad.items() if v}
        return cls(family, quad, Fraction(scalar))

    @classmethod
    def zero(cls, family: str) -> "QuadOp":
        return cls(family, {}, ZERO)

    @property
    def is_zero(self) -> bool:
        return not self.quadratic and not self.scalar

    def terms(self):
        for (a, b), c in self.quadratic.items():
            yield a, b, c

    def __add__(self, other):
        if not isinstance(other, QuadOp):
            return NotImplemented
        if self.family != other.family:
            raise SpeciesMismatchError("cannot combine operators of different families")
        quad = dict(self.quadratic)
        for k, c in other.quadratic.items():
            s = quad.get(k, ZERO) + c
            if s:
                quad[k] = s
            elif k in quad:
                del quad[k]
        return QuadOp(self.family, quad, self.scalar + other.scalar)

    def __sub__(self, other):
        if not isinstance(other, QuadOp):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return QuadOp(self.family, {k: -c for k, c in self.quadratic.items()}, -self.scalar)

    def __mul__(self, scalar):
        c = Fraction(scalar)
        if not c:
            return QuadOp.zero(self.family)
        return QuadOp(self.family, {k: c * v for k, v in self.quadratic.items()}, c * self.scalar)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, QuadOp):
            return NotImplemented
        return (self.family == other.family
                and self.quadratic == other.quadratic
                and self.scalar == other.scalar)

    __hash__ = None

    def __repr__(self):
        bits = [f"({c})*:{a!r}{b!r}:"
                for (a, b), c in sorted(self.quadratic.items(),
                                        key=lambda kv: (kv[0][0].key, kv[0][1].key))]
        if self.scalar:
            bits.append(f"({self.scalar})*Id")
        return " + ".join(bits) if bits else "0"


def rep_elementary(rep: str, m: int, n: int) -> QuadOp:
    """Image of one generator as a normal-ordered quadratic.

    For the central-charge-1 neutral action the matrix unit E[m,n] maps
    to the pair with doubled indices (-4m+1, 4n-1); the charge-1/2 action
    sends the embedded d-type generator labelled (m,n) to (-2m+1, 2n-1);
    the charged action sends E[m,n] to the plus mode -m and minus mode
    n-1.  The charged index convention is pinned by the bracket identity
    and by the sector vacua carrying the fundamental weights, both of
    which are machine-verified.
    """
    _check_rep(rep)
    if rep == R_ONE:
        a, b = neutral_mode(-4 * m + 1), neutral_mode(4 * n - 1)
    elif rep == R_HALF:
        a, b = neutral_mode(-2 * m + 1), neutral_mode(2 * n - 1)
    else:
        a, b = plus_mode(-m), minus_mode(n - 1)
    return QuadOp.build(_FAMILY[rep], [(a, b, 1)])


def rep_element(rep: str, A: AlgebraElement) -> QuadOp:
    """Linear extension of the generator map, central slot included.

    The charge-1/2 action only accepts matrices in the d-type subalgebra;
    such a matrix decomposes as half the sum of its entries times the
    embedded generators.
    """
    _check_rep(rep)
    fam = _FAMILY[rep]
    terms = []
    if rep == R_HALF:
        if not in_d_subalgebra(A):
            raise ValueError(
                "matrix is not in the d-type subalgebra: a[i,j] == -a[1-j,1-i] fails")
        half = Fraction(1, 2)
        for (i, j), c in A.entries.items():
            q = rep_elementary(rep, i, j)
            for a, b, v in q.terms():
                terms.append((a, b, half * c * v))
    else:
        for (i, j), c in A.entries.items():
            q = rep_elementary(rep, i, j)
            for a, b, v in q.terms():
                terms.append((a, b, c * v))
    return QuadOp.build(fam, terms, A.central * _CENTRAL_CHARGE[rep])


def apply_quadop(Q: QuadOp, v: FockVector) -> FockVector:
    if Q.family != v.family:
        raise SpeciesMismatchError("operator and vector families differ")
    out = Q.scalar * v
    for a, b, c in Q.terms():
        out = out + c * apply_normal_ordered_pair(a, b, v)
    return out


def _reduce_word(word: tuple, coeff: Fraction, out: dict) -> None:
    """Rewrite a product of modes into key-ordered monomials.

    Uses the anticommutation rule ab = pairing(a,b) - ba; equal odd
    generators square to zero.
    """
    for i in range(len(word) - 1):
        a, b = word[i], word[i + 1]
        ka, kb = a.key, b.key
        if ka < kb:
            continue
        if ka == kb:
            return
        p = pairing(a, b)
        if p:
            _reduce_word(word[:i] + word[i + 2:], coeff * p, out)
        _reduce_word(word[:i] + (b, a) + word[i + 2:], -coeff, out)
        return
    out[word] = out.get(word, ZERO) + coeff


def _quadop_to_element(Q: QuadOp) -> dict:
    """Expand a quadratic operator in the ordered-monomial basis."""
    out: dict = {}
    for (a, b), c in Q.quadratic.items():
        _reduce_word((a, b), c, out)
        corr = contraction(a, b)
        if corr:
            out[()] = out.get((), ZERO) - c * corr
    if Q.scalar:
        out[()] = out.get((), ZERO) + Q.scalar
    return {w: c for w, c in out.items() if c}


def _element_to_quadop(elem: dict, family: str) -> QuadOp:
    terms = []
    scalar = ZERO
    for word, c in elem.items():
        if len(word) == 0:
            scalar += c
        elif len(word) == 2:
            a, b = word
            terms.append((a, b, c))
            corr = contraction(a, b)
            if corr:
                scalar += c * corr
        else:
            raise ValueError("operator is not quadratic-plus-scalar")
    return QuadOp.build(family, terms, scalar)


def _element_mul(e1: dict, e2: dict) -> dict:
    out: dict = {}
    for w1, c1 in e1.items():
        for w2, c2 in e2.items():
            _reduce_word(w1 + w2, c1 * c2, out)
    return {w: c for w, c in out.items() if c}


def quad_bracket(Q1: QuadOp, Q2: QuadOp) -> QuadOp:
    """Symbolic commutator of two quadratic operators.

    All contractions of quadratics are scalars, so the commutator is
    again quadratic-plus-scalar; the quartic monomials of the two
    products cancel identically.
    """
    if Q1.family != Q2.family:
        raise SpeciesMismatchError("bracket requires one species family")
    e1 = _quadop_to_element(Q1)
    e2 = _quadop_to_element(Q2)
    comm = _element_mul(e1, e2)
    for w, c in _element_mul(e2, e1).items():
        s = comm.get(w, ZERO) - c
        if s:
            comm[w] = s
        elif w in comm:
            del comm[w]
    return _element_to_quadop(comm, Q1.family)


def adjoint_quadop(Q: QuadOp) -> QuadOp:
    """Adjoint under the orthonormal-basis form.

    Each mode is conjugated, the factor order reversed, and the result
    re-normal-ordered; the scalar corrections are the contraction
    differences.
    """
    terms = []
    scalar = Q.scalar
    for (a, b), c in Q.quadratic.items():
        a2, b2 = adjoint_mode(b), adjoint_mode(a)
        terms.append((a2, b2, c))
        scalar += c * (contraction(a2, b2) - contraction(a, b))
    return QuadOp.build(Q.family, terms, scalar)


def _generator(rep: str, i: int, j: int, d_restricted: bool):
    """Generator element and its operator image for verification sweeps."""
    if d_restricted:
        X = d_embed(i, j)
        return X, rep_element(rep, X), f"d({i},{j})"
    X = elementary(i, j)
    return X, rep_element(rep, X), f"E({i},{j})"


def verify_bracket_identity(rep: str, window: int) -> CheckReport:
    """Check that the operator bracket matches the matrix bracket.

    Sweeps all ordered pairs of generators with labels in the window; the
    central part of the matrix bracket must land in the scalar slot
    scaled by the central charge.  Exact equality of operators.
    """
    _check_rep(rep)
    if window < 1:
        raise ValueError("window must be at least 1")
    d_restricted = rep == R_HALF
    labels = [(i, j) for i in range(-window, window + 1)
              for j in range(-window, window + 1)]
    gens = {lab: _generator(rep, lab[0], lab[1], d_restricted) for lab in labels}
    failures = []
    checks = 0
    for lab1 in labels:
        X1, Q1, _ = gens[lab1]
        for lab2 in labels:
            X2, Q2, _ = gens[lab2]
            lhs = quad_bracket(Q1, Q2)
            rhs = rep_element(rep, bracket(X1, X2))
            checks += 1
            if lhs != rhs:
                failures.append({
                    "labels": [lab1[0], lab1[1], lab2[0], lab2[1]],
                    "lhs": repr(lhs),
                    "rhs": repr(rhs),
                })
    return CheckReport(
        name=f"bracket-{rep}",
        params={"rep": rep, "window": window},
        checks=checks,
        failures=failures,
    )


def verify_singular_vector(rep: str, v: FockVector, window: int,
                           d_restricted: bool | None = None) -> CheckReport:
    """Check that every strictly upper-triangular generator kills v.

    For the charge-1/2 action (and on request for the d-type restriction
    of the neutral charge-1 action) the embedded d-type generators are
    used instead of matrix units.
    """
    _check_rep(rep)
    if v.is_zero:
        raise ValueError("singular-vector probe must be nonzero")
    if rep == R_HALF:
        d_restricted = True
    elif d_restricted is None:
        d_restricted = False
    failures = []
    checks = 0
    for i in range(-window, window + 1):
        for k in range(1, window + 1):
            _, Q, label = _generator(rep, i, i + k, d_restricted)
            image = apply_quadop(Q, v)
            checks += 1
            if not image.is_zero:
                failures.append({
                    "generator": label,
                    "input": repr(v),
                    "image": repr(image),
                })
    return CheckReport(
        name="singular-vector",
        params={"rep": rep, "window": window, "d_restricted": d_restricted,
                "vector": repr(v)},
        checks=checks,
        failures=failures,
    )


def weight_of_vector(rep: str, v: FockVector, window: int,
                     d_restricted: bool | None = None) -> dict[int, Fraction]:
    """Eigenvalues of the diagonal operators on a weight vector.

    Raises NotAWeightVectorError naming the first index whose diagonal
    operator does not have v as an eigenvector.
    """
    _check_rep(rep)
    if v.is_zero:
        raise ValueError("weight probe must be nonzero")
    if rep == R_HALF:
        d_restricted = True
    elif d_restricted is None:
        d_restricted = False
    out: dict[int, Fraction] = {}
    for i in range(-window, window + 1):
        _, Q, label = _generator(rep, i, i, d_restricted)
        image = apply_quadop(Q, v)
        if image.is_zero:
            lam = ZERO
        else:
            mono, c = next(iter(image.terms.items()))
            base = v.terms.get(mono)
            if not base:
                raise NotAWeightVectorError(
                    i, f"not an eigenvector of the diagonal operator {label}")
            lam = c / base
        if image != lam * v:
            raise NotAWeightVectorError(
                i, f"not an eigenvector of the diagonal operator {label}")
        out[i] = lam
    return out
