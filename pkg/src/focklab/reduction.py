"""Reduction of sector vectors to the sector's highest weight vector.

Every generator of the central-charge-1 neutral action acts on a
monomial in one of four combinatorial ways: adding an odd/even label
pair, removing such a pair, replacing an odd label by an odd one, or
replacing an even label by an even one.  The engine exploits this to
carry an arbitrary homogeneous-sector vector onto a nonzero rational
multiple of the sector's highest weight vector, emitting the word of
generator labels it used so the run can be replayed and certified.

Strategy, made deterministic: while several monomials survive, kill the
lexicographically largest monomial of maximal length with an add/remove
pair chosen inside it (the paired removal restores every untouched term
with coefficient exactly one); when no such pair keeps the image
nonzero, fall back to simulated label replacements that merge monomials,
and finally to an add/remove filter built from a fresh label outside a
kept term, which always makes strict progress.  A single surviving
monomial is stripped to minimal length by removing its largest label
pairs and then walked onto the target labels, largest first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .clifford import NEUTRAL_FAMILY, FockVector
from .neutral import (
    enumerate_basis,
    energy2,
    gradings,
    highest_weight_monomial,
    highest_weight_vector,
    monomial_labels,
)
from .reports import CheckReport
from .reps import R_ONE, apply_quadop, rep_elementary

ZERO = Fraction(0)


class NotHomogeneousError(ValueError):
    """Input vector mixes several charge-grading sectors."""


@dataclass(frozen=True)
class GeneratorAction:
    """Combinatorial classification of one generator label (p, q)."""

    kind: str  # addPair | removePair | replaceOdd | replaceEven
    p: int
    q: int
    odd: int | None = None
    even: int | None = None
    from_label: int | None = None
    to_label: int | None = None


def classify_generator(p: int, q: int) -> GeneratorAction:
    """Classify the action of the generator labelled (p, q).

    Boundary rows: p >= 1, q >= 1 replaces odd labels; p <= 0, q <= 0
    replaces even labels.
    """
    if p >= 1 and q <= 0:
        return GeneratorAction("addPair", p, q, odd=2 * p - 1, even=-2 * q)
    if p <= 0 and q >= 1:
        return GeneratorAction("removePair", p, q, odd=2 * q - 1, even=-2 * p)
    if p >= 1 and q >= 1:
        return GeneratorAction("replaceOdd", p, q, from_label=2 * q - 1, to_label=2 * p - 1)
    return GeneratorAction("replaceEven", p, q, from_label=-2 * p, to_label=-2 * q)


def _add_pair(odd: int, even: int) -> tuple[int, int]:
    return ((odd + 1) // 2, -(even // 2))


def _remove_pair(odd: int, even: int) -> tuple[int, int]:
    return (-(even // 2), (odd + 1) // 2)


def _replace(from_label: int, to_label: int) -> tuple[int, int]:
    if from_label % 2 != to_label % 2:
        raise ValueError("replacement labels must share parity")
    if from_label % 2:
        return ((to_label + 1) // 2, (from_label + 1) // 2)
    return (-(from_label // 2), -(to_label // 2))


def _apply_step(p: int, q: int, v: FockVector) -> FockVector:
    return apply_quadop(rep_elementary(R_ONE, p, q), v)


def replay_trace(steps, v: FockVector) -> FockVector:
    """Apply generator labels left to right (first listed acts first)."""
    out = v
    for p, q in steps:
        out = _apply_step(p, q, out)
    return out


@dataclass
class ReductionTrace:
    """Replayable witness: the steps carry the input to final_scalar times
    the highest weight vector of the sector."""

    sector: int
    steps: list
    final_scalar: Fraction


def _victim_key(mono):
    return (len(mono), monomial_labels(mono))


def _merge_steps(cur: FockVector, support: list) -> list[tuple[int, int]]:
    """Steps that strictly reduce the number of distinct monomials."""
    victim = support[-1]
    others = support[:-1]
    vlabels = monomial_labels(victim)
    vodds = [l for l in vlabels if l % 2]
    vevens = [l for l in vlabels if l % 2 == 0]

    def survives(o, e):
        return any(o not in monomial_labels(m) and e not in monomial_labels(m)
                   for m in others)

    # Preferred: an add/remove pair inside the victim, largest first.
    for o in vodds:
        for e in vevens:
            if survives(o, e):
                return [_add_pair(o, e), _remove_pair(o, e)]

    # Simulated replacements merging the victim into another monomial.
    occurring = sorted({l for m in support for l in monomial_labels(m)}, reverse=True)
    for f in vlabels:
        for t in occurring:
            if t == f or t % 2 != f % 2:
                continue
            p, q = _replace(f, t)
            image = _apply_step(p, q, cur)
            if not image.is_zero and len(image.terms) < len(support):
                return [(p, q)]

    # Guaranteed fallback: filter with a fresh partner label outside a
    # kept monomial.
    keeper = support[0]
    klabels = set(monomial_labels(keeper))
    diff = [l for l in vlabels if l not in klabels]
    x = max(diff)
    if x % 2:
        e = 0
        while e in klabels:
            e += 2
        o = x
    else:
        o = 1
        while o in klabels:
            o += 2
        e = x
    return [_add_pair(o, e), _remove_pair(o, e)]


def reduce_to_highest_weight(v: FockVector) -> ReductionTrace:
    """Reduce a homogeneous-sector vector to the sector's extremal vector.

    Requires a nonzero neutral vector whose monomials share one charge
    grading; returns a trace whose replay equals final_scalar times the
    highest weight vector, final_scalar nonzero.
    """
    if v.family != NEUTRAL_FAMILY:
        raise ValueError("reduction acts on the neutral module")
    if v.is_zero:
        raise ValueError("cannot reduce the zero vector")
    sectors = {gradings(m).dg for m in v.terms}
    if len(sectors) != 1:
        raise NotHomogeneousError(f"vector mixes charge sectors {sorted(sectors)}")
    sector = sectors.pop()
    target = highest_weight_monomial(sector)
    tlabels = set(monomial_labels(target))

    steps: list[tuple[int, int]] = []
    cur = v
    while True:
        support = sorted(cur.terms, key=_victim_key)
        if len(support) > 1:
            for p, q in _merge_steps(cur, support):
                cur = _apply_step(p, q, cur)
                steps.append((p, q))
            if cur.is_zero:
                raise RuntimeError("reduction step annihilated the vector")
            continue
        mono = support[0]
        if mono == target:
            break
        labels = monomial_labels(mono)
        if len(mono) > len(target):
            o = max(l for l in labels if l % 2)
            e = max(l for l in labels if l % 2 == 0)
            p, q = _remove_pair(o, e)
        else:
            mset = set(labels)
            f = max(mset - tlabels)
            t = max(tlabels - mset)
            p, q = _replace(f, t)
        cur = _apply_step(p, q, cur)
        steps.append((p, q))
        if cur.is_zero:
            raise RuntimeError("reduction step annihilated the vector")

    final = cur.terms[target]
    return ReductionTrace(sector=sector, steps=steps, final_scalar=final)


def _rational_rank(rows: list) -> int:
    """Rank of a list of rational coordinate rows by Gaussian elimination."""
    mat = [list(r) for r in rows if any(r)]
    rank = 0
    col = 0
    ncols = len(mat[0]) if mat else 0
    while rank < len(mat) and col < ncols:
        pivot = None
        for r in range(rank, len(mat)):
            if mat[r][col]:
                pivot = r
                break
        if pivot is None:
            col += 1
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        pr = mat[rank]
        inv = 1 / pr[col]
        for r in range(rank + 1, len(mat)):
            f = mat[r][col]
            if f:
                scale = f * inv
                row = mat[r]
                for cidx in range(col, ncols):
                    row[cidx] -= scale * pr[cidx]
        rank += 1
        col += 1
    return rank


def spanning_check(sector: int, energy2_max: int, max_word: int = 1) -> CheckReport:
    """Check that lower-triangular words on the extremal vector span the window.

    Applies all words of bounded length in lower-triangular generators to
    the sector's highest weight vector, keeping words whose uniform energy
    shift stays inside the window, and compares the exact rational rank of
    the resulting vectors with the enumerated basis size.
    """
    if max_word < 1:
        raise ValueError("max_word must be at least 1")
    basis = enumerate_basis(sector, energy2_max)
    index = {m: i for i, m in enumerate(basis)}
    hw = highest_weight_monomial(sector)
    budget = energy2_max - energy2(hw)

    vectors: list[FockVector] = []
    if budget >= 0:
        start = highest_weight_vector(sector)
        vectors.append(start)
        # Every lower-triangular generator shifts the doubled energy by
        # exactly 4(p - q) on every monomial, so a word stays inside the
        # window iff its total shift fits the budget.
        label_cap = (energy2_max - 1) // 2 + 1
        gens = [(p, q)
                for p in range(-label_cap, label_cap + 1)
                for q in range(-label_cap, label_cap + 1)
                if p > q and 4 * (p - q) <= budget]
        frontier = [(start, 0)]
        for _ in range(max_word):
            nxt = []
            for vec, used in frontier:
                for p, q in gens:
                    shift = 4 * (p - q)
                    if used + shift > budget:
                        continue
                    image = _apply_step(p, q, vec)
                    if not image.is_zero:
                        nxt.append((image, used + shift))
            vectors.extend(vec for vec, _ in nxt)
            frontier = nxt

    rows = []
    for vec in vectors:
        row = [ZERO] * len(basis)
        for mono, c in vec.terms.items():
            row[index[mono]] = c
        rows.append(row)
    rank = _rational_rank(rows) if basis else 0

    failures = []
    if rank != len(basis):
        failures.append({"rank": rank, "expected": len(basis)})
    return CheckReport(
        name="spanning",
        params={"sector": sector, "energy2_max": energy2_max,
                "max_word": max_word, "rank": rank, "basis_size": len(basis)},
        checks=1,
        failures=failures,
    )
