"""Core domain types for the square random assignment problem.

Agents rank objects through weak orders (ordered indifference classes) and
outcomes are doubly stochastic matrices. Every probability is an exact
``fractions.Fraction``; floats are rejected at the boundary so rounding can
never leak into a result. All types are immutable values and all operations
are pure functions.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

Rational = Fraction

RationalLike = Union[Fraction, int, str]

# Ordered set partitions of more than 5 objects (541 orders at 5) are refused.
WEAK_ORDER_CAP = 5
# Permutation sweeps over more than 8 agents are refused.
FACTORIAL_CAP = 8

_LETTERS = "abcdefghijklmnopqrstuvwxyz"


class RandAssignError(Exception):
    """Base class for all library errors."""


class ProfileError(RandAssignError):
    """Malformed or inconsistent preference profile input.

    ``kind`` is one of ``"malformed"``, ``"missing-object"``,
    ``"duplicate-object"``, ``"shape"``; ``line`` is the 1-based input line
    when the problem is attributable to one.
    """

    def __init__(self, message: str, kind: str = "malformed", line: int | None = None):
        super().__init__(message)
        self.kind = kind
        self.line = line


class AssignmentError(RandAssignError):
    """Matrix violates the doubly stochastic contract.

    ``kind`` is one of ``"shape"``, ``"negative-entry"``, ``"entry-above-one"``,
    ``"row-sum"``, ``"column-sum"``; ``index`` names the offending row/column
    or cell.
    """

    def __init__(self, message: str, kind: str, index):
        super().__init__(message)
        self.kind = kind
        self.index = index


class DomainError(RandAssignError):
    """Operation invoked outside its declared preference domain."""


class SizeError(RandAssignError):
    """An enumeration cap was exceeded."""


class ContractError(RandAssignError):
    """A structured argument (e.g. a trading cycle) violates its invariants."""


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and strings like ``"2/3"`` or ``"0.99"``.

    Decimal strings parse exactly (``"0.99"`` becomes 99/100). Floats are
    refused: callers must supply exact inputs.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"exact rational required, got {value!r}")
    if isinstance(value, (Fraction, int)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse rational from {value!r}") from exc
    raise TypeError(f"exact rational required, got {type(value).__name__}")


@dataclass(frozen=True, order=True)
class ObjectId:
    """An object, identified by a dense 0-based index plus a display label."""

    index: int
    label: str


@dataclass(frozen=True, order=True)
class AgentId:
    """An agent, identified by a dense 0-based index plus a display label."""

    index: int
    label: str


@dataclass(frozen=True)
class WeakOrder:
    """Ordered indifference classes over objects, best class first.

    Classes are nonempty, pairwise disjoint frozensets of :class:`ObjectId`.
    A strict order is the special case of all-singleton classes.
    """

    classes: tuple[frozenset[ObjectId], ...]

    def __post_init__(self):
        seen: set[ObjectId] = set()
        if not self.classes:
            raise ProfileError("weak order needs at least one class")
        for cls in self.classes:
            if not cls:
                raise ProfileError("empty indifference class")
            if cls & seen:
                dup = sorted(cls & seen)[0]
                raise ProfileError(
                    f"object {dup.label!r} appears in two classes",
                    kind="duplicate-object",
                )
            seen |= cls

    @property
    def objects(self) -> frozenset[ObjectId]:
        return frozenset().union(*self.classes)

    @property
    def is_strict(self) -> bool:
        return all(len(cls) == 1 for cls in self.classes)

    def rank(self, obj: ObjectId) -> int:
        """0-based class index of ``obj`` (lower is better)."""
        for k, cls in enumerate(self.classes):
            if obj in cls:
                return k
        raise DomainError(f"object {obj.label!r} not ranked by this order")

    def prefers(self, a: ObjectId, b: ObjectId) -> bool:
        """True iff ``a`` is strictly preferred to ``b``."""
        return self.rank(a) < self.rank(b)

    def weakly_prefers(self, a: ObjectId, b: ObjectId) -> bool:
        return self.rank(a) <= self.rank(b)

    def upper_contour(self, obj: ObjectId) -> frozenset[ObjectId]:
        """All objects weakly preferred to ``obj``, including ``obj`` itself."""
        r = self.rank(obj)
        return frozenset().union(*self.classes[: r + 1])

    def index_classes(self) -> tuple[frozenset[int], ...]:
        """The classes as frozensets of object indices."""
        return tuple(frozenset(o.index for o in cls) for cls in self.classes)


@dataclass(frozen=True)
class Profile:
    """A square instance: n agents, n objects, one weak order per agent."""

    agents: tuple[AgentId, ...]
    objects: tuple[ObjectId, ...]
    prefs: tuple[WeakOrder, ...]

    def __post_init__(self):
        if len(self.objects) != len(self.agents):
            raise ProfileError(
                f"{len(self.agents)} agents but {len(self.objects)} objects",
                kind="shape",
            )
        if len(self.prefs) != len(self.agents):
            raise ProfileError(
                f"{len(self.agents)} agents but {len(self.prefs)} preference orders",
                kind="shape",
            )
        for j, obj in enumerate(self.objects):
            if obj.index != j:
                raise ProfileError(f"object index {obj.index} at position {j}")
        for i, agent in enumerate(self.agents):
            if agent.index != i:
                raise ProfileError(f"agent index {agent.index} at position {i}")
        universe = frozenset(self.objects)
        for agent, pref in zip(self.agents, self.prefs):
            if pref.objects != universe:
                missing = sorted(universe - pref.objects)
                extra = sorted(pref.objects - universe)
                what = []
                if missing:
                    what.append("missing " + ", ".join(o.label for o in missing))
                if extra:
                    what.append("unknown " + ", ".join(o.label for o in extra))
                raise ProfileError(
                    f"agent {agent.label!r}: {'; '.join(what)}",
                    kind="missing-object",
                )

    @property
    def n(self) -> int:
        return len(self.agents)

    @property
    def is_strict(self) -> bool:
        return all(pref.is_strict for pref in self.prefs)

    def replace_pref(self, agent_index: int, pref: WeakOrder) -> "Profile":
        """A copy of this profile with one agent's order swapped out."""
        prefs = list(self.prefs)
        prefs[agent_index] = pref
        return Profile(self.agents, self.objects, tuple(prefs))

    def object_by_label(self, label: str) -> ObjectId:
        for obj in self.objects:
            if obj.label == label:
                return obj
        raise DomainError(f"no object labelled {label!r}")


@dataclass(frozen=True)
class Assignment:
    """An n-by-n doubly stochastic matrix of exact rationals.

    ``entries[i][j]`` is the probability that agent i receives object j.
    Construction validates the full contract; building an Assignment that
    exists is proof that it is doubly stochastic.
    """

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise AssignmentError(
                    f"row {i} has {len(row)} entries, expected {n}", "shape", i
                )
            for j, v in enumerate(row):
                if v < 0:
                    raise AssignmentError(
                        f"entry ({i},{j}) = {v} is negative", "negative-entry", (i, j)
                    )
                if v > 1:
                    raise AssignmentError(
                        f"entry ({i},{j}) = {v} exceeds 1", "entry-above-one", (i, j)
                    )
        for i, row in enumerate(self.entries):
            total = sum(row, Fraction(0))
            if total != 1:
                raise AssignmentError(f"row {i} sums to {total}", "row-sum", i)
        for j in range(n):
            total = sum((row[j] for row in self.entries), Fraction(0))
            if total != 1:
                raise AssignmentError(f"column {j} sums to {total}", "column-sum", j)

    @property
    def n(self) -> int:
        return len(self.entries)

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.entries)

    def is_discrete(self) -> bool:
        return all(v in (0, 1) for row in self.entries for v in row)


@dataclass(frozen=True)
class DiscreteAssignment:
    """A permutation mapping agents to objects: agent i gets object perm[i]."""

    perm: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise AssignmentError(
                f"{self.perm} is not a permutation", "shape", self.perm
            )

    @property
    def n(self) -> int:
        return len(self.perm)

    def object_of(self, agent_index: int) -> int:
        return self.perm[agent_index]

    def to_assignment(self) -> Assignment:
        n = self.n
        one, zero = Fraction(1), Fraction(0)
        return Assignment(
            tuple(
                tuple(one if self.perm[i] == j else zero for j in range(n))
                for i in range(n)
            )
        )


def validate_assignment(matrix: Sequence[Sequence[RationalLike]]) -> Assignment:
    """Build an :class:`Assignment` from raw rows, coercing entries exactly.

    Raises :class:`AssignmentError` naming the first offending entry, row or
    column when the matrix is not doubly stochastic.
    """
    if not matrix:
        raise AssignmentError("empty matrix", "shape", None)
    rows = tuple(tuple(as_rational(v) for v in row) for row in matrix)
    if any(len(row) != len(rows) for row in rows):
        bad = next(i for i, row in enumerate(rows) if len(row) != len(rows))
        raise AssignmentError(
            f"row {bad} has {len(rows[bad])} entries in a {len(rows)}-row matrix",
            "shape",
            bad,
        )
    return Assignment(rows)


# ---------------------------------------------------------------------------
# profile text format
#
#   one line per agent:   agent_label: c1 > c2 > ...
#   each class ci is one or more object labels joined by ~
#   '#' starts a comment; blank lines are ignored
# ---------------------------------------------------------------------------

def parse_profile(text: str) -> Profile:
    """Parse the line-oriented profile format into a validated Profile."""
    lines: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((lineno, body))
    if not lines:
        raise ProfileError("no agent lines found", kind="shape")

    agent_labels: list[str] = []
    raw_classes: list[tuple[int, list[list[str]]]] = []
    order_of_label: dict[str, int] = {}

    for lineno, body in lines:
        if ":" not in body:
            raise ProfileError(
                f"line {lineno}: expected 'agent: classes'", kind="malformed", line=lineno
            )
        head, rest = body.split(":", 1)
        agent_label = head.strip()
        if not agent_label:
            raise ProfileError(f"line {lineno}: empty agent label", line=lineno)
        if agent_label in agent_labels:
            raise ProfileError(
                f"line {lineno}: duplicate agent {agent_label!r}", line=lineno
            )
        classes: list[list[str]] = []
        seen: set[str] = set()
        for chunk in rest.split(">"):
            labels = [tok.strip() for tok in chunk.split("~")]
            if any(not tok for tok in labels):
                raise ProfileError(
                    f"line {lineno}: empty object label", kind="malformed", line=lineno
                )
            for tok in labels:
                if tok in seen:
                    raise ProfileError(
                        f"line {lineno}: object {tok!r} listed twice",
                        kind="duplicate-object",
                        line=lineno,
                    )
                seen.add(tok)
                if tok not in order_of_label:
                    order_of_label[tok] = len(order_of_label)
            classes.append(labels)
        agent_labels.append(agent_label)
        raw_classes.append((lineno, classes))

    if len(order_of_label) != len(agent_labels):
        raise ProfileError(
            f"{len(agent_labels)} agents but {len(order_of_label)} distinct objects",
            kind="shape",
        )

    objects = tuple(
        ObjectId(index, label)
        for index, label in enumerate(sorted(order_of_label, key=order_of_label.get))
    )
    by_label = {o.label: o for o in objects}
    universe = set(order_of_label)

    prefs = []
    for lineno, classes in raw_classes:
        mentioned = {tok for cls in classes for tok in cls}
        missing = universe - mentioned
        if missing:
            raise ProfileError(
                f"line {lineno}: missing object(s) {', '.join(sorted(missing))}",
                kind="missing-object",
                line=lineno,
            )
        prefs.append(
            WeakOrder(tuple(frozenset(by_label[tok] for tok in cls) for cls in classes))
        )

    agents = tuple(AgentId(i, label) for i, label in enumerate(agent_labels))
    return Profile(agents, objects, tuple(prefs))


def format_profile(profile: Profile) -> str:
    """Inverse of :func:`parse_profile` (objects within a class sorted by index)."""
    lines = []
    for agent, pref in zip(profile.agents, profile.prefs):
        chunks = [
            " ~ ".join(o.label for o in sorted(cls)) for cls in pref.classes
        ]
        lines.append(f"{agent.label}: " + " > ".join(chunks))
    return "\n".join(lines) + "\n"


def profile_to_json_dict(profile: Profile) -> dict:
    return {
        "agents": [
            {
                "name": agent.label,
                "classes": [
                    [o.label for o in sorted(cls)] for cls in pref.classes
                ],
            }
            for agent, pref in zip(profile.agents, profile.prefs)
        ]
    }


def profile_from_json_dict(data: dict) -> Profile:
    try:
        agents = data["agents"]
        lines = []
        for entry in agents:
            chunks = [" ~ ".join(cls) for cls in entry["classes"]]
            lines.append(f"{entry['name']}: " + " > ".join(chunks))
    except (KeyError, TypeError) as exc:
        raise ProfileError(f"bad profile JSON: {exc}") from exc
    return parse_profile("\n".join(lines))


def load_profile(text: str) -> Profile:
    """Parse either the text format or the JSON mirror, sniffing the format."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return profile_from_json_dict(json.loads(text))
    return parse_profile(text)


# ---------------------------------------------------------------------------
# assignment text / JSON formats
# ---------------------------------------------------------------------------

def format_assignment(assignment: Assignment) -> str:
    """Rows of num/den tokens, columns aligned."""
    cells = [[str(v) for v in row] for row in assignment.entries]
    widths = [max(len(cells[i][j]) for i in range(len(cells))) for j in range(len(cells))]
    return "\n".join(
        "  ".join(cell.rjust(width) for cell, width in zip(row, widths))
        for row in cells
    ) + "\n"


def parse_assignment_text(text: str) -> Assignment:
    rows = []
    for raw in text.splitlines():
        body = raw.split("#", 1)[0].strip()
        if body:
            rows.append([as_rational(tok) for tok in body.split()])
    return validate_assignment(rows)


def rational_to_json(value: Fraction) -> dict:
    return {"num": value.numerator, "den": value.denominator}


def rational_from_json(data) -> Fraction:
    if isinstance(data, dict):
        return Fraction(data["num"], data["den"])
    if isinstance(data, (str, int)):
        return as_rational(data)
    raise ValueError(f"cannot read rational from {data!r}")


def assignment_to_json_rows(assignment: Assignment) -> list:
    return [[rational_to_json(v) for v in row] for row in assignment.entries]


def assignment_from_json(data) -> Assignment:
    if isinstance(data, dict) and "rows" in data:
        data = data["rows"]
    return validate_assignment(
        [[rational_from_json(v) for v in row] for row in data]
    )


def load_assignment(text: str) -> Assignment:
    """Parse either the token format or the JSON form, sniffing the format."""
    stripped = text.lstrip()
    if stripped.startswith("{") or stripped.startswith("["):
        return assignment_from_json(json.loads(text))
    return parse_assignment_text(text)


def format_rational_decimal(value: Fraction, digits: int) -> str:
    """Decimal approximation with ``digits`` places, computed by long division."""
    if digits < 0:
        raise ValueError("digits must be >= 0")
    sign = "-" if value < 0 else ""
    v = -value if value < 0 else value
    scaled = v.numerator * 10**digits
    q, r = divmod(scaled, v.denominator)
    if 2 * r >= v.denominator:
        q += 1
    text = str(q).rjust(digits + 1, "0")
    if digits == 0:
        return sign + text
    return f"{sign}{text[:-digits]}.{text[-digits:]}"


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def standard_objects(n: int) -> tuple[ObjectId, ...]:
    """Objects labelled a, b, c, ... (o10, o11, ... past z)."""
    labels = [
        _LETTERS[i] if i < len(_LETTERS) else f"o{i + 1}" for i in range(n)
    ]
    return tuple(ObjectId(i, lab) for i, lab in enumerate(labels))


def standard_agents(n: int) -> tuple[AgentId, ...]:
    return tuple(AgentId(i, str(i + 1)) for i in range(n))


def make_profile(prefs: Sequence[WeakOrder]) -> Profile:
    """Profile over standard agents/objects from per-agent weak orders."""
    n = len(prefs)
    objects = frozenset().union(*(p.objects for p in prefs))
    canonical = tuple(sorted(objects))
    for j, obj in enumerate(canonical):
        if obj.index != j:
            raise ProfileError("preference orders use non-dense object indices")
    return Profile(standard_agents(n), canonical, tuple(prefs))


def enumerate_weak_orders(
    objects: Iterable[ObjectId], cap: int = WEAK_ORDER_CAP
) -> list[WeakOrder]:
    """Every ordered set partition of ``objects`` exactly once, in a fixed order.

    The order is deterministic: first classes are enumerated as bitmask
    subsets of the index-sorted objects, ascending, then recursively on the
    remainder.
    """
    items = tuple(sorted(objects))
    if not items:
        raise SizeError("need at least one object")
    if len(items) > cap:
        raise SizeError(f"{len(items)} objects exceeds enumeration cap {cap}")
    return [WeakOrder(classes) for classes in _ordered_partitions(items)]


def _ordered_partitions(items: tuple) -> Iterator[tuple[frozenset, ...]]:
    if not items:
        yield ()
        return
    k = len(items)
    for mask in range(1, 1 << k):
        first = frozenset(items[i] for i in range(k) if mask >> i & 1)
        rest = tuple(items[i] for i in range(k) if not mask >> i & 1)
        for tail in _ordered_partitions(rest):
            yield (first,) + tail


def enumerate_strict_orders(objects: Iterable[ObjectId]) -> list[WeakOrder]:
    """All strict orders (singleton-class weak orders), permutation order."""
    items = tuple(sorted(objects))
    if len(items) > FACTORIAL_CAP:
        raise SizeError(f"{len(items)} objects exceeds factorial cap {FACTORIAL_CAP}")
    return [
        WeakOrder(tuple(frozenset({o}) for o in perm))
        for perm in itertools.permutations(items)
    ]


def enumerate_strict_profiles(n: int) -> Iterator[Profile]:
    """All profiles of strict preferences over standard agents/objects."""
    agents, objects = standard_agents(n), standard_objects(n)
    orders = enumerate_strict_orders(objects)
    for combo in itertools.product(orders, repeat=n):
        yield Profile(agents, objects, combo)


def enumerate_weak_profiles(n: int) -> Iterator[Profile]:
    """All profiles of weak preferences over standard agents/objects."""
    agents, objects = standard_agents(n), standard_objects(n)
    orders = enumerate_weak_orders(objects)
    for combo in itertools.product(orders, repeat=n):
        yield Profile(agents, objects, combo)


# ---------------------------------------------------------------------------
# padding
# ---------------------------------------------------------------------------

def pad_profile(base: Profile, n: int) -> Profile:
    """Grow ``base`` to ``n`` agents/objects with private-object newcomers.

    Each new agent ranks its own new object first, then the remaining new
    objects in index order, then the base objects in index order, all
    strictly. Base agents keep their orders and append the new objects
    strictly last, in index order.
    """
    if n < base.n:
        raise SizeError(f"cannot pad a {base.n}-agent profile down to {n}")
    if n == base.n:
        return base
    used_obj = {o.label for o in base.objects}
    used_ag = {a.label for a in base.agents}
    new_objects = []
    for idx in range(base.n, n):
        label = next(
            (c for c in _LETTERS if c not in used_obj), None
        ) or f"o{idx + 1}"
        used_obj.add(label)
        new_objects.append(ObjectId(idx, label))
    new_agents = []
    for idx in range(base.n, n):
        label = str(idx + 1) if str(idx + 1) not in used_ag else f"agent{idx + 1}"
        used_ag.add(label)
        new_agents.append(AgentId(idx, label))

    objects = base.objects + tuple(new_objects)
    agents = base.agents + tuple(new_agents)

    tail = tuple(frozenset({o}) for o in new_objects)
    prefs = [WeakOrder(pref.classes + tail) for pref in base.prefs]
    for k, owner in enumerate(new_objects):
        rest_new = tuple(
            frozenset({o}) for o in new_objects if o.index != owner.index
        )
        base_tail = tuple(frozenset({o}) for o in base.objects)
        prefs.append(WeakOrder((frozenset({owner}),) + rest_new + base_tail))
    return Profile(agents, objects, tuple(prefs))
