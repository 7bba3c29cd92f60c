"""Exact rational linear feasibility and optimization.

Two backends decide feasibility: a two-phase simplex with Bland's rule
(primary) and Fourier-Motzkin elimination (cross-check, capped at 12
variables). All arithmetic is Fraction arithmetic; there is no tolerance
parameter anywhere.

Strict inequalities are decided by optimization, not epsilon perturbation:
the strict constraints e_k > b_k hold simultaneously iff the auxiliary
program max t s.t. e_k - t >= b_k over the weak relaxation has a positive
supremum (attained, or unbounded).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .core import Rational, RationalLike, SizeError, as_rational

FOURIER_MOTZKIN_CAP = 12

_WEAK = {"==", "<=", ">="}
_STRICT = {"<", ">"}
_RELATIONS = _WEAK | _STRICT


@dataclass(frozen=True)
class Constraint:
    """coeffs . x  REL  rhs, with REL one of ==, <=, >=, <, >."""

    coeffs: tuple[Fraction, ...]
    relation: str
    rhs: Fraction
    label: str = ""

    def __post_init__(self):
        if self.relation not in _RELATIONS:
            raise ValueError(f"unknown relation {self.relation!r}")

    @property
    def is_strict(self) -> bool:
        return self.relation in _STRICT

    def evaluate(self, point: Sequence[Fraction]) -> bool:
        lhs = sum((c * x for c, x in zip(self.coeffs, point)), Fraction(0))
        if self.relation == "==":
            return lhs == self.rhs
        if self.relation == "<=":
            return lhs <= self.rhs
        if self.relation == ">=":
            return lhs >= self.rhs
        if self.relation == "<":
            return lhs < self.rhs
        return lhs > self.rhs

    def render(self, variables: Sequence[str]) -> str:
        terms = []
        for c, name in zip(self.coeffs, variables):
            if c == 0:
                continue
            if c == 1:
                terms.append(f"+ {name}")
            elif c == -1:
                terms.append(f"- {name}")
            elif c > 0:
                terms.append(f"+ {c}*{name}")
            else:
                terms.append(f"- {-c}*{name}")
        lhs = " ".join(terms).lstrip("+ ").strip() or "0"
        return f"{lhs} {self.relation} {self.rhs}"


@dataclass(frozen=True)
class LinearSystem:
    """Named variables plus equality/weak/strict rational constraints."""

    variables: tuple[str, ...]
    constraints: tuple[Constraint, ...]

    def __post_init__(self):
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        for con in self.constraints:
            if len(con.coeffs) != len(self.variables):
                raise ValueError(
                    f"constraint arity {len(con.coeffs)} != {len(self.variables)} variables"
                )

    @property
    def strict_constraints(self) -> tuple[Constraint, ...]:
        return tuple(c for c in self.constraints if c.is_strict)

    @property
    def weak_constraints(self) -> tuple[Constraint, ...]:
        return tuple(c for c in self.constraints if not c.is_strict)

    def check_point(self, point: Mapping[str, Fraction]) -> bool:
        vector = [point[name] for name in self.variables]
        return all(con.evaluate(vector) for con in self.constraints)

    def to_json_dict(self) -> dict:
        return {
            "variables": list(self.variables),
            "constraints": [
                {
                    "coeffs": [
                        {"num": c.numerator, "den": c.denominator} for c in con.coeffs
                    ],
                    "relation": con.relation,
                    "rhs": {"num": con.rhs.numerator, "den": con.rhs.denominator},
                    "label": con.label,
                }
                for con in self.constraints
            ],
        }

    def render(self) -> str:
        return "\n".join(con.render(self.variables) for con in self.constraints)


class SystemBuilder:
    """Incrementally build a LinearSystem with dict-keyed coefficient rows."""

    def __init__(self, variables: Sequence[str]):
        self._variables = tuple(variables)
        self._index = {name: k for k, name in enumerate(self._variables)}
        self._constraints: list[Constraint] = []

    def add(self, terms: Mapping[str, RationalLike], relation: str, rhs: RationalLike,
            label: str = "") -> "SystemBuilder":
        coeffs = [Fraction(0)] * len(self._variables)
        for name, value in terms.items():
            coeffs[self._index[name]] += as_rational(value)
        self._constraints.append(
            Constraint(tuple(coeffs), relation, as_rational(rhs), label)
        )
        return self

    def eq(self, terms, rhs, label=""):
        return self.add(terms, "==", rhs, label)

    def le(self, terms, rhs, label=""):
        return self.add(terms, "<=", rhs, label)

    def ge(self, terms, rhs, label=""):
        return self.add(terms, ">=", rhs, label)

    def lt(self, terms, rhs, label=""):
        return self.add(terms, "<", rhs, label)

    def gt(self, terms, rhs, label=""):
        return self.add(terms, ">", rhs, label)

    def build(self) -> LinearSystem:
        return LinearSystem(self._variables, tuple(self._constraints))


@dataclass(frozen=True)
class FeasibilityResult:
    """Either a rational witness point or an infeasibility verdict.

    On infeasibility ``contradiction`` carries the derived absurdity (e.g.
    "0 >= 1/12") and, when the simplex backend produced one, ``multipliers``
    holds the verified combination of constraints that yields it.
    """

    feasible: bool
    witness: dict[str, Fraction] | None = None
    contradiction: str | None = None
    multipliers: tuple[Fraction, ...] | None = None


@dataclass(frozen=True)
class OptimizeResult:
    """Outcome of exact maximization: optimal, unbounded, or infeasible."""

    status: str  # "optimal" | "unbounded" | "infeasible"
    value: Fraction | None = None
    witness: dict[str, Fraction] | None = None
    multipliers: tuple[Fraction, ...] | None = None


# ---------------------------------------------------------------------------
# simplex backend
# ---------------------------------------------------------------------------

class _Standard:
    """min c.x' over A x' = b, x' >= 0, translated from a LinearSystem.

    Variables with an explicit "x >= 0" row are used directly (the row is
    dropped); all others are split into positive and negative parts.
    Inequalities gain slack columns. Original constraint order is preserved
    so duals map back 1:1.
    """

    def __init__(self, system: LinearSystem, extra_obj: Mapping[str, Fraction] | None = None):
        if system.strict_constraints:
            raise ValueError("standard form requires weak constraints only")
        self.system = system
        names = system.variables
        nonneg = set()
        kept_rows: list[Constraint] = []
        self.kept_row_index: list[int] = []
        for idx, con in enumerate(system.constraints):
            nz = [(k, c) for k, c in enumerate(con.coeffs) if c != 0]
            if (
                con.relation == ">="
                and con.rhs == 0
                and len(nz) == 1
                and nz[0][1] > 0
                and names[nz[0][0]] not in nonneg
            ):
                nonneg.add(names[nz[0][0]])
                continue
            kept_rows.append(con)
            self.kept_row_index.append(idx)

        # column layout: one column per nonneg variable, two per free variable
        self.columns: list[tuple[str, int]] = []  # (variable, sign)
        for name in names:
            if name in nonneg:
                self.columns.append((name, 1))
            else:
                self.columns.append((name, 1))
                self.columns.append((name, -1))
        self.num_structural = len(self.columns)

        rows: list[list[Fraction]] = []
        rhs: list[Fraction] = []
        self.row_sign: list[Fraction] = []  # multiplier applied to the original row
        slack_cols: list[int] = []
        for con in kept_rows:
            row = []
            for name, sign in self.columns:
                row.append(con.coeffs[system.variables.index(name)] * sign)
            b = con.rhs
            sign = Fraction(1)
            slack = Fraction(0)
            if con.relation == "<=":
                slack = Fraction(1)
            elif con.relation == ">=":
                slack = Fraction(-1)
            rows.append(row)
            rhs.append(b)
            self.row_sign.append(sign)
            slack_cols.append(0 if slack == 0 else (1 if slack > 0 else -1))

        # append slack columns
        for r, s in enumerate(slack_cols):
            if s == 0:
                continue
            for rr, row in enumerate(rows):
                row.append(Fraction(s) if rr == r else Fraction(0))
            self.columns.append((f"_slack{r}", 0))

        # normalize rhs >= 0
        for r in range(len(rows)):
            if rhs[r] < 0:
                rows[r] = [-v for v in rows[r]]
                rhs[r] = -rhs[r]
                self.row_sign[r] = -self.row_sign[r]

        self.A = rows
        self.b = rhs
        self.var_names = names
        self.nonneg = nonneg

    def objective(self, terms: Mapping[str, Fraction]) -> list[Fraction]:
        c = []
        for name, sign in self.columns:
            c.append(terms.get(name, Fraction(0)) * sign if sign != 0 else Fraction(0))
        return c

    def point_from_columns(self, x: Sequence[Fraction]) -> dict[str, Fraction]:
        values = {name: Fraction(0) for name in self.var_names}
        for (name, sign), v in zip(self.columns, x):
            if sign != 0:
                values[name] += sign * v
        return values

    def duals_from_rows(self, y: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Per-original-constraint multipliers (0 for dropped nonneg rows)."""
        full = [Fraction(0)] * len(self.system.constraints)
        for (idx, sign, value) in zip(self.kept_row_index, self.row_sign, y):
            full[idx] = sign * value
        return tuple(full)


def _pivot(T: list[list[Fraction]], basis: list[int], r: int, c: int):
    piv = T[r][c]
    T[r] = [v / piv for v in T[r]]
    for i, row in enumerate(T):
        if i != r and row[c] != 0:
            f = row[c]
            T[i] = [a - f * b for a, b in zip(row, T[r])]
    basis[r] = c


def _bland_min(T: list[list[Fraction]], basis: list[int], allowed: int) -> str:
    """Run simplex minimization on a tableau whose last row is the objective.

    Bland's rule throughout: entering column is the smallest eligible index
    with negative reduced cost, leaving row breaks ratio ties by smallest
    basis variable. ``allowed`` caps the columns eligible to enter (bars
    artificials from re-entering). Returns "optimal" or "unbounded".
    """
    m = len(T) - 1
    while True:
        obj = T[-1]
        enter = -1
        for j in range(allowed):
            if obj[j] < 0:
                enter = j
                break
        if enter == -1:
            return "optimal"
        leave = -1
        best = None
        for i in range(m):
            if T[i][enter] > 0:
                ratio = T[i][-1] / T[i][enter]
                key = (ratio, basis[i])
                if best is None or key < best:
                    best = key
                    leave = i
        if leave == -1:
            return "unbounded"
        _pivot(T, basis, leave, enter)


def _solve_standard(std: _Standard, c: list[Fraction], maximize: bool):
    """Two-phase simplex. Returns (status, x_cols, value, y_rows).

    ``y_rows`` are the simplex multipliers on the standard-form rows for the
    reported optimum (None unless status == "optimal").
    """
    A, b = std.A, std.b
    m = len(A)
    n = len(A[0]) if m else 0
    sign = Fraction(-1) if maximize else Fraction(1)
    cost = [sign * v for v in c]

    # phase 1 tableau: columns = structural+slack | artificial | rhs
    T = []
    for i in range(m):
        row = list(A[i]) + [Fraction(0)] * m + [b[i]]
        row[n + i] = Fraction(1)
        T.append(row)
    basis = [n + i for i in range(m)]
    # phase-1 objective: minimize sum of artificials
    obj = [Fraction(0)] * (n + m + 1)
    for i in range(m):
        obj = [a - t for a, t in zip(obj, T[i])]
    for i in range(m):
        obj[n + i] = Fraction(0)
    T.append(obj)
    status, obj = _bland_min(T, basis, None, n)
    w = -T[-1][-1]
    if w != 0:
        # infeasible: y from artificial columns of the phase-1 objective row
        y = [T[-1][n + i] for i in range(m)]
        return "infeasible", None, None, y

    # drive remaining artificials out of the basis
    T.pop()
    for i in range(m):
        if basis[i] >= n:
            piv_col = next((j for j in range(n) if T[i][j] != 0), None)
            if piv_col is None:
                continue  # redundant row; harmless to keep
            _pivot(T, basis, i, piv_col)

    # phase 2 objective row
    obj = [Fraction(0)] * (n + m) + [Fraction(0)]
    for j in range(n):
        obj[j] = cost[j]
    T.append(obj)
    for i in range(m):
        if basis[i] < n and T[-1][basis[i]] != 0:
            f = T[-1][basis[i]]
            T[-1] = [a - f * t for a, t in zip(T[-1], T[i])]
    status, _ = _bland_min(T, basis, None, n)
    if status == "unbounded":
        return "unbounded", None, None, None
    x = [Fraction(0)] * n
    for i in range(m):
        if basis[i] < n:
            x[basis[i]] = T[i][-1]
    z = sum((cost[j] * x[j] for j in range(n)), Fraction(0))
    value = -z if maximize else z
    # duals: reduced costs of artificial columns equal y = c_B B^-1
    y = [T[-1][n + i] for i in range(m)]
    if maximize:
        y = [-v for v in y]
    return "optimal", x, value, y


def _verify_farkas(system: LinearSystem, multipliers: Sequence[Fraction]) -> str | None:
    """Check an infeasibility combination exactly; return the derived absurdity.

    The multipliers must be sign-compatible (>= 0 on "<=" rows, <= 0 on ">="
    rows, free on equalities), combine to the zero linear form, and give a
    violated constant relation. Returns the rendered contradiction, or None
    if the certificate does not check out.
    """
    combo = [Fraction(0)] * len(system.variables)
    rhs = Fraction(0)
    has_ineq = False
    for mult, con in zip(multipliers, system.constraints):
        if mult == 0:
            continue
        if con.relation == "<=" and mult < 0:
            return None
        if con.relation == ">=" and mult > 0:
            return None
        if con.is_strict:
            return None
        if con.relation != "==":
            has_ineq = True
        combo = [a + mult * c for a, c in zip(combo, con.coeffs)]
        rhs += mult * con.rhs
    if any(v != 0 for v in combo):
        return None
    # combination reads 0 <= rhs (or 0 == rhs without inequalities)
    if has_ineq:
        if rhs < 0:
            return f"0 <= {rhs}"
        return None
    if rhs != 0:
        return f"0 == {rhs}"
    return None


def _simplex_feasible_weak(system: LinearSystem) -> FeasibilityResult:
    std = _Standard(system)
    zero = {name: Fraction(0) for name in system.variables}
    status, x, _, y = _solve_standard(std, std.objective(zero), maximize=False)
    if status == "infeasible":
        mults = std.duals_from_rows(y)
        contradiction = _verify_farkas(system, mults)
        if contradiction is None:
            # fall back to an unverified verdict message; the verdict itself
            # is still exact (phase-1 optimum was positive)
            return FeasibilityResult(False, contradiction="phase-1 optimum positive")
        return FeasibilityResult(False, contradiction=contradiction, multipliers=mults)
    point = std.point_from_columns(x)
    assert system.check_point(point)
    return FeasibilityResult(True, witness=point)


def lp_maximize(system: LinearSystem, objective: Mapping[str, RationalLike]) -> OptimizeResult:
    """Exact maximum of a linear form over a weak-inequality system.

    Returns an optimal value with attaining witness and a verified bound
    certificate (multipliers over the system's constraints), or an unbounded
    / infeasible verdict. Strict constraints are rejected.
    """
    if system.strict_constraints:
        raise ValueError("lp_maximize requires a weak system; decide stricts via lp_feasible")
    obj = {name: as_rational(v) for name, v in objective.items()}
    for name in obj:
        if name not in system.variables:
            raise ValueError(f"objective names unknown variable {name!r}")
    std = _Standard(system)
    status, x, value, y = _solve_standard(std, std.objective(obj), maximize=True)
    if status == "infeasible":
        return OptimizeResult("infeasible")
    if status == "unbounded":
        return OptimizeResult("unbounded")
    point = std.point_from_columns(x)
    assert system.check_point(point)
    mults = std.duals_from_rows(y)
    if not verify_bound_certificate(system, obj, value, mults):
        mults = None
    return OptimizeResult("optimal", value=value, witness=point, multipliers=mults)


def lp_minimize(system: LinearSystem, objective: Mapping[str, RationalLike]) -> OptimizeResult:
    neg = {name: -as_rational(v) for name, v in objective.items()}
    res = lp_maximize(system, neg)
    if res.status != "optimal":
        return res
    return OptimizeResult(
        "optimal",
        value=-res.value,
        witness=res.witness,
        multipliers=tuple(-m for m in res.multipliers) if res.multipliers else None,
    )


def verify_bound_certificate(
    system: LinearSystem,
    objective: Mapping[str, RationalLike],
    value: Fraction,
    multipliers: Sequence[Fraction],
) -> bool:
    """Exactly check multipliers proving objective <= value over the system.

    Sign conditions: multipliers on "<=" rows must be >= 0, on ">=" rows
    <= 0, free on equalities. The weighted rows must combine to the
    objective's coefficient vector with combined rhs equal to ``value``.
    """
    obj = {name: as_rational(v) for name, v in objective.items()}
    target = [obj.get(name, Fraction(0)) for name in system.variables]
    combo = [Fraction(0)] * len(system.variables)
    rhs = Fraction(0)
    for mult, con in zip(multipliers, system.constraints):
        if mult == 0:
            continue
        if con.relation == "<=" and mult < 0:
            return False
        if con.relation == ">=" and mult > 0:
            return False
        if con.is_strict:
            return False
        combo = [a + mult * c for a, c in zip(combo, con.coeffs)]
        rhs += mult * con.rhs
    return combo == target and rhs == value


def _aggregate_strict(system: LinearSystem) -> tuple[LinearSystem, str]:
    """Replace strict constraints by a shared min-slack variable t.

    e > b becomes e - t >= b and e < b becomes e + t <= b; the original
    system is strict-feasible iff some point of the relaxation has t > 0.
    """
    slack = "_t"
    while slack in system.variables:
        slack += "_"
    variables = system.variables + (slack,)
    constraints = []
    for con in system.constraints:
        coeffs = con.coeffs + (Fraction(0),)
        if con.relation == ">":
            coeffs = con.coeffs + (Fraction(-1),)
            constraints.append(Constraint(coeffs, ">=", con.rhs, con.label))
        elif con.relation == "<":
            coeffs = con.coeffs + (Fraction(1),)
            constraints.append(Constraint(coeffs, "<=", con.rhs, con.label))
        else:
            constraints.append(Constraint(coeffs, con.relation, con.rhs, con.label))
    return LinearSystem(variables, tuple(constraints)), slack


def lp_feasible(system: LinearSystem, backend: str = "simplex") -> FeasibilityResult:
    """Exact feasibility decision, strict inequalities included.

    ``backend`` selects "simplex" or "fourier_motzkin" (the latter capped at
    12 variables). Witness points satisfy every constraint exactly,
    including stricts.
    """
    if backend == "fourier_motzkin":
        return _fourier_motzkin(system)
    if backend != "simplex":
        raise ValueError(f"unknown backend {backend!r}")
    if not system.strict_constraints:
        return _simplex_feasible_weak(system)

    relaxed, slack = _aggregate_strict(system)
    base = _simplex_feasible_weak(
        LinearSystem(
            relaxed.variables,
            tuple(
                Constraint(c.coeffs, c.relation, c.rhs, c.label)
                for c in relaxed.constraints
            )
            + (Constraint._zero_slack(relaxed.variables, slack),),
        )
    ) if False else None
    # maximize the shared slack over the relaxation
    res = lp_maximize(relaxed, {slack: 1})
    if res.status == "infeasible":
        weak_only = LinearSystem(system.variables, system.weak_constraints)
        inner = _simplex_feasible_weak(weak_only)
        return FeasibilityResult(
            False,
            contradiction=inner.contradiction or "weak relaxation infeasible",
            multipliers=inner.multipliers,
        )
    if res.status == "unbounded":
        pinned = LinearSystem(
            relaxed.variables,
            relaxed.constraints
            + (
                Constraint(
                    tuple(
                        Fraction(1) if name == slack else Fraction(0)
                        for name in relaxed.variables
                    ),
                    ">=",
                    Fraction(1),
                ),
            ),
        )
        inner = _simplex_feasible_weak(pinned)
        assert inner.feasible
        witness = {k: v for k, v in inner.witness.items() if k != slack}
        assert system.check_point(witness)
        return FeasibilityResult(True, witness=witness)
    if res.value > 0:
        witness = {k: v for k, v in res.witness.items() if k != slack}
        assert system.check_point(witness)
        return FeasibilityResult(True, witness=witness)
    # sup of the min slack is 0: strict part unachievable
    return FeasibilityResult(
        False,
        contradiction=(
            "strict slack has maximum 0"
            + (f" (certified: {res.multipliers is not None})")
        ),
        multipliers=res.multipliers,
    )


# ---------------------------------------------------------------------------
# Fourier-Motzkin backend
# ---------------------------------------------------------------------------

def _fourier_motzkin(system: LinearSystem) -> FeasibilityResult:
    if len(system.variables) > FOURIER_MOTZKIN_CAP:
        raise SizeError(
            f"{len(system.variables)} variables exceeds Fourier-Motzkin cap "
            f"{FOURIER_MOTZKIN_CAP}"
        )
    n = len(system.variables)
    # rows as (coeffs, relation, rhs) with relation in {"==", "<=", "<"}
    rows: list[tuple[list[Fraction], str, Fraction]] = []
    for con in system.constraints:
        coeffs = list(con.coeffs)
        if con.relation in ("<=", "<", "=="):
            rows.append((coeffs, con.relation, con.rhs))
        elif con.relation == ">=":
            rows.append(([-c for c in coeffs], "<=", -con.rhs))
        else:  # ">"
            rows.append(([-c for c in coeffs], "<", -con.rhs))

    eliminated: list[tuple[int, list[tuple[list[Fraction], str, Fraction]]]] = []

    def const_check(rs) -> str | None:
        for coeffs, rel, rhs in rs:
            if all(c == 0 for c in coeffs):
                if rel == "==" and rhs != 0:
                    return f"0 == {rhs}"
                if rel == "<=" and rhs < 0:
                    return f"0 <= {rhs}"
                if rel == "<" and rhs <= 0:
                    return f"0 < {rhs}"
        return None

    for var in range(n):
        bad = const_check(rows)
        if bad:
            return FeasibilityResult(False, contradiction=bad)
        eliminated.append((var, [(list(c), r, b) for c, r, b in rows]))
        # prefer an equality pivot: substitute the variable away
        pivot = next(
            (row for row in rows if row[1] == "==" and row[0][var] != 0), None
        )
        if pivot is not None:
            pc, _, pb = pivot
            new_rows = []
            for coeffs, rel, rhs in rows:
                if coeffs is pc:
                    continue
                f = coeffs[var] / pc[var]
                if f == 0:
                    new_rows.append((coeffs, rel, rhs))
                    continue
                new_rows.append(
                    (
                        [a - f * p for a, p in zip(coeffs, pc)],
                        rel,
                        rhs - f * pb,
                    )
                )
            rows = new_rows
            continue
        uppers = [row for row in rows if row[0][var] > 0]
        lowers = [row for row in rows if row[0][var] < 0]
        others = [row for row in rows if row[0][var] == 0]
        combined = []
        for uc, ur, ub in uppers:
            for lc, lr, lb in lowers:
                # x <= ub/uc[var] and x >= lb/lc[var] (lc negative)
                f = -lc[var] / uc[var]
                coeffs = [lv + f * uv for lv, uv in zip(lc, uc)]
                rhs = lb + f * ub
                rel = "<" if ("<" in (ur, lr)) else "<="
                combined.append((coeffs, rel, rhs))
        rows = others + combined

    bad = const_check(rows)
    if bad:
        return FeasibilityResult(False, contradiction=bad)

    # back-substitute a witness in reverse elimination order
    values: list[Fraction | None] = [None] * n
    for var, snapshot in reversed(eliminated):
        lo: tuple[Fraction, bool] | None = None  # (bound, strict)
        hi: tuple[Fraction, bool] | None = None
        forced: Fraction | None = None
        for coeffs, rel, rhs in snapshot:
            if coeffs[var] == 0:
                continue
            rest = rhs
            for k, c in enumerate(coeffs):
                if k != var and c != 0:
                    assert values[k] is not None
                    rest -= c * values[k]
            bound = rest / coeffs[var]
            if rel == "==":
                forced = bound
            elif (coeffs[var] > 0) == (rel in ("<=", "<")):
                strict = rel == "<"
                if hi is None or bound < hi[0] or (bound == hi[0] and strict):
                    hi = (bound, strict)
            else:
                strict = rel == "<"
                if lo is None or bound > lo[0] or (bound == lo[0] and strict):
                    lo = (bound, strict)
        if forced is not None:
            values[var] = forced
        elif lo is None and hi is None:
            values[var] = Fraction(0)
        elif lo is None:
            values[var] = hi[0] - 1 if hi[1] else hi[0]
        elif hi is None:
            values[var] = lo[0] + 1 if lo[1] else lo[0]
        elif lo[0] == hi[0]:
            values[var] = lo[0]
        else:
            values[var] = (lo[0] + hi[0]) / 2

    witness = dict(zip(system.variables, values))
    assert system.check_point(witness)
    return FeasibilityResult(True, witness=witness)
