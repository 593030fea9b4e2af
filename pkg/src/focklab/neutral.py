"""Gradings, distinguished vectors, and truncated bases of the neutral module.

A canonical neutral monomial is described by its creation labels: the
factor with doubled mode index -(2n+1) carries label n >= 0, and the
canonical factor order lists labels strictly decreasing.  The charge
grading counts odd labels minus even labels.  The doubled energy of a
monomial, the sum of 2n+1 over its labels, is integral and strictly
monotone under adding factors, so every (sector, energy) window is
finite; it exists purely to make enumeration and truncation exact.
"""

from __future__ import annotations

from dataclasses import dataclass

from .clifford import (
    NEUTRAL,
    NEUTRAL_FAMILY,
    FockVector,
    Mode,
    Monomial,
    creation_label,
    neutral_mode,
)


def _require_neutral(mono) -> None:
    for f in mono:
        if f.species != NEUTRAL:
            raise ValueError(f"expected a neutral monomial, found factor {f!r}")


def monomial_labels(mono) -> tuple[int, ...]:
    """Creation labels of a neutral monomial, largest first."""
    _require_neutral(mono)
    return tuple(creation_label(f) for f in mono)


def monomial_from_labels(labels) -> Monomial:
    """Canonical neutral monomial with the given distinct labels."""
    labs = sorted(labels, reverse=True)
    if any(l < 0 for l in labs):
        raise ValueError("creation labels must be nonnegative")
    if len(set(labs)) != len(labs):
        raise ValueError("creation labels must be distinct")
    return tuple(neutral_mode(-2 * l - 1) for l in labs)


def energy2(mono) -> int:
    """Doubled energy: the sum of 2n+1 over the creation labels."""
    _require_neutral(mono)
    return sum(-f.index for f in mono)


@dataclass(frozen=True)
class GradingReport:
    dg: int
    length: int
    energy2: int
    parity: str


def gradings(mono) -> GradingReport:
    """All gradings of a neutral monomial.

    dg counts odd labels minus even labels; length is the number of
    factors; parity is the length mod 2.
    """
    labs = monomial_labels(mono)
    dg = sum(1 if l % 2 else -1 for l in labs)
    k = len(labs)
    return GradingReport(
        dg=dg,
        length=k,
        energy2=sum(2 * l + 1 for l in labs),
        parity="odd" if k % 2 else "even",
    )


def sector_of(mono) -> int:
    return gradings(mono).dg


def highest_weight_monomial(sector: int) -> Monomial:
    """The minimal-length monomial of the sector with minimal top label.

    Positive sectors use the smallest odd labels 1, 3, ..., 2n-1;
    negative sectors the smallest even labels 0, 2, ..., 2|n|-2; sector
    zero is the vacuum.
    """
    if sector > 0:
        labels = range(2 * sector - 1, 0, -2)
    elif sector < 0:
        labels = range(-2 * sector - 2, -1, -2)
    else:
        labels = ()
    return monomial_from_labels(labels)


def highest_weight_vector(sector: int) -> FockVector:
    return FockVector.monomial(highest_weight_monomial(sector), family=NEUTRAL_FAMILY)


def tilde_v0() -> FockVector:
    """The second extremal vector of sector zero: labels {1, 0}."""
    return FockVector.monomial(monomial_from_labels((1, 0)), family=NEUTRAL_FAMILY)


def min_energy2(sector: int) -> int:
    return energy2(highest_weight_monomial(sector))


def enumerate_basis(sector: int, energy2_max: int) -> list[Monomial]:
    """All monomials of the sector with doubled energy at most the cutoff.

    Deterministic order: graded by doubled energy, then lexicographically
    by the descending label tuple.
    """
    if energy2_max < 0:
        raise ValueError("energy2_max must be nonnegative")
    sets: list[tuple[int, ...]] = []
    max_label = (energy2_max - 1) // 2

    def rec(label: int, budget: int, acc: list) -> None:
        sets.append(tuple(acc))
        for lab in range(label, -1, -1):
            cost = 2 * lab + 1
            if cost <= budget:
                acc.append(lab)
                rec(lab - 1, budget - cost, acc)
                acc.pop()

    rec(max_label, energy2_max, [])
    monos = []
    for labs in sets:
        dg = sum(1 if l % 2 else -1 for l in labs)
        if dg == sector:
            monos.append(monomial_from_labels(labs))
    monos.sort(key=lambda m: (energy2(m), monomial_labels(m)))
    return monos
