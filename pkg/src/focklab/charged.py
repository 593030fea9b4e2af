"""Charge grading, sector vacua, and the label-doubling sector bijection.

A charged monomial is described by two disjoint strictly increasing label
lists: plus labels m >= 0 (creation modes -(m+1) of the plus species) and
minus labels k >= 0 (creation modes -(k+1) of the minus species).  The
canonical factor order puts all plus factors (decreasing mode) before all
minus factors (decreasing mode).  The level sum of (label+1) over both
lists is the truncation device for enumeration.
"""

from __future__ import annotations

from .clifford import (
    CHARGED_FAMILY,
    MINUS,
    PLUS,
    FockVector,
    Monomial,
    creation_label,
    minus_mode,
    plus_mode,
)
from .neutral import monomial_labels


def _require_charged(mono) -> None:
    for f in mono:
        if f.species not in (PLUS, MINUS):
            raise ValueError(f"expected a charged monomial, found factor {f!r}")


def charged_monomial(plus_labels=(), minus_labels=()) -> Monomial:
    """Canonical charged monomial with the given distinct labels."""
    plus = sorted(plus_labels)
    minus = sorted(minus_labels)
    for labs in (plus, minus):
        if any(l < 0 for l in labs):
            raise ValueError("charged labels must be nonnegative")
        if len(set(labs)) != len(labs):
            raise ValueError("charged labels must be distinct within a species")
    return tuple([plus_mode(-m - 1) for m in plus] + [minus_mode(-k - 1) for k in minus])


def plus_labels(mono) -> tuple[int, ...]:
    _require_charged(mono)
    return tuple(creation_label(f) for f in mono if f.species == PLUS)


def minus_labels(mono) -> tuple[int, ...]:
    _require_charged(mono)
    return tuple(creation_label(f) for f in mono if f.species == MINUS)


def charge(mono) -> int:
    """Number of plus factors minus number of minus factors."""
    _require_charged(mono)
    plus = sum(1 for f in mono if f.species == PLUS)
    return plus - (len(mono) - plus)


def level(mono) -> int:
    """Truncation level: the sum of (label + 1) over all factors."""
    _require_charged(mono)
    return sum(-f.index for f in mono)


def charged_vacuum(n: int) -> FockVector:
    """The extremal vector of the charge-n sector.

    Positive charge stacks the lowest plus creation modes, negative
    charge the lowest minus creation modes; charge zero is the vacuum.
    """
    if n > 0:
        mono = charged_monomial(plus_labels=range(n))
    elif n < 0:
        mono = charged_monomial(minus_labels=range(-n))
    else:
        mono = ()
    return FockVector.monomial(mono, family=CHARGED_FAMILY)


def sector_bijection(mono) -> Monomial:
    """Map a neutral monomial to a charged one by splitting label parity.

    Odd neutral labels 2p-1 become plus labels p-1; even neutral labels
    2q become minus labels q.  This is a bijection onto all charged
    monomials and sends the neutral charge grading to the charge.
    """
    plus = []
    minus = []
    for lab in monomial_labels(mono):
        if lab % 2:
            plus.append((lab + 1) // 2 - 1)
        else:
            minus.append(lab // 2)
    return charged_monomial(plus, minus)


def _distinct_label_sets(budget: int) -> list[tuple[int, ...]]:
    """Distinct labels with sum of (label+1) at most budget, ascending."""
    out: list[tuple[int, ...]] = []

    def rec(start: int, budget: int, acc: list) -> None:
        out.append(tuple(acc))
        for lab in range(start, budget):
            cost = lab + 1
            if cost <= budget:
                acc.append(lab)
                rec(lab + 1, budget - cost, acc)
                acc.pop()

    rec(0, budget, [])
    return out


def enumerate_charged_basis(charge_value: int, level_max: int) -> list[Monomial]:
    """All charged monomials of one charge up to the level cutoff.

    Deterministic order: graded by level, then lexicographically by the
    ascending plus and minus label tuples.
    """
    if level_max < 0:
        raise ValueError("level_max must be nonnegative")
    sets = _distinct_label_sets(level_max)
    rows = []
    for p in sets:
        lp = sum(m + 1 for m in p)
        for q in sets:
            if len(p) - len(q) != charge_value:
                continue
            lq = sum(k + 1 for k in q)
            if lp + lq <= level_max:
                rows.append((lp + lq, p, q))
    rows.sort()
    return [charged_monomial(p, q) for _, p, q in rows]
