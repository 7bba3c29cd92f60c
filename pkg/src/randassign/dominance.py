"""Stochastic dominance over allocation rows, plus consistent utilities.

An allocation row weakly dominates another for a weak order when its
cumulative probability on every upper contour set is at least as large.
Cumulatives are constant within an indifference class, so comparisons are
evaluated only at class cut-points.
"""
from __future__ import annotations

import enum
import random
from fractions import Fraction
from typing import Sequence

from .core import Rational, WeakOrder

UtilityVector = tuple[Fraction, ...]


class SdComparison(enum.Enum):
    EQUAL = "equal"
    STRICTLY_DOMINATES = "strictly-dominates"
    STRICTLY_DOMINATED = "strictly-dominated"
    INCOMPARABLE = "incomparable"

    def mirror(self) -> "SdComparison":
        """The verdict with the two rows swapped."""
        if self is SdComparison.STRICTLY_DOMINATES:
            return SdComparison.STRICTLY_DOMINATED
        if self is SdComparison.STRICTLY_DOMINATED:
            return SdComparison.STRICTLY_DOMINATES
        return self

    @property
    def weakly_dominates(self) -> bool:
        return self in (SdComparison.EQUAL, SdComparison.STRICTLY_DOMINATES)


def cut_sets(pref: WeakOrder) -> tuple[frozenset[int], ...]:
    """Cumulative upper-contour index sets, one per indifference class."""
    sets = []
    acc: frozenset[int] = frozenset()
    for cls in pref.index_classes():
        acc |= cls
        sets.append(acc)
    return tuple(sets)


def cut_values(pref: WeakOrder, row: Sequence[Rational]) -> tuple[Fraction, ...]:
    """Cumulative mass of ``row`` at each class cut-point of ``pref``."""
    values = []
    acc = Fraction(0)
    for cls in pref.index_classes():
        acc += sum((row[j] for j in sorted(cls)), Fraction(0))
        values.append(acc)
    return tuple(values)


def sd_compare(
    pref: WeakOrder, p: Sequence[Rational], q: Sequence[Rational]
) -> SdComparison:
    """Compare two allocation rows under ``pref`` via stochastic dominance.

    Both rows must range over ``pref``'s objects and carry equal total mass
    (rows of an assignment sum to 1); total-mass equality is checked rather
    than assumed, since strict dominance relies on the final cut-point tying.
    """
    size = len(pref.objects)
    if len(p) != size or len(q) != size:
        raise ValueError(
            f"rows of length {len(p)} and {len(q)} for {size} objects"
        )
    total_p = sum(p, Fraction(0))
    total_q = sum(q, Fraction(0))
    if total_p != total_q:
        raise ValueError(f"total masses differ: {total_p} vs {total_q}")
    ge = le = True
    for cp, cq in zip(cut_values(pref, p), cut_values(pref, q)):
        if cp < cq:
            ge = False
        elif cp > cq:
            le = False
    if ge and le:
        return SdComparison.EQUAL
    if ge:
        return SdComparison.STRICTLY_DOMINATES
    if le:
        return SdComparison.STRICTLY_DOMINATED
    return SdComparison.INCOMPARABLE


def is_consistent_utility(pref: WeakOrder, utility: Sequence[Rational]) -> bool:
    """True iff u(o) > u(o') exactly when o is strictly preferred to o'."""
    classes = pref.index_classes()
    values = []
    for cls in classes:
        members = sorted(cls)
        if any(utility[j] != utility[members[0]] for j in members):
            return False
        values.append(utility[members[0]])
    return all(a > b for a, b in zip(values, values[1:]))


def sample_consistent_utility(pref: WeakOrder, seed: int) -> UtilityVector:
    """A rational utility vector consistent with ``pref``, deterministic in seed."""
    rng = random.Random(seed)
    classes = pref.index_classes()
    values = []
    level = Fraction(rng.randint(0, 8))
    for _ in classes:
        values.append(level)
        level += Fraction(rng.randint(1, 9), rng.randint(1, 9))
    values.reverse()  # built worst-first; classes list is best-first
    utility = [Fraction(0)] * len(pref.objects)
    for cls, value in zip(classes, values):
        for j in cls:
            utility[j] = value
    return tuple(utility)


def expected_utility(utility: Sequence[Rational], row: Sequence[Rational]) -> Fraction:
    return sum((u * x for u, x in zip(utility, row)), Fraction(0))


def cut_indicator_utility(
    pref: WeakOrder, cut_index: int, epsilon: Fraction
) -> UtilityVector:
    """A consistent utility concentrated on the first ``cut_index + 1`` classes.

    Classes up to the cut get value near 1, later classes value near 0, with
    an ``epsilon`` stagger keeping all class values strictly descending. For
    small epsilon the expected utility of a row approaches its cumulative
    mass at the cut, so these vectors separate rows whose cumulatives differ
    at a given cut-point.
    """
    classes = pref.index_classes()
    m = len(classes)
    if not 0 <= cut_index < m:
        raise ValueError(f"cut {cut_index} out of range for {m} classes")
    if not 0 < epsilon < Fraction(1, max(m, 2)):
        raise ValueError("epsilon must be in (0, 1/m)")
    utility = [Fraction(0)] * len(pref.objects)
    for k, cls in enumerate(classes):
        base = Fraction(1) if k <= cut_index else Fraction(0)
        value = base + epsilon * (m - 1 - k)
        for j in cls:
            utility[j] = value
    return tuple(utility)
