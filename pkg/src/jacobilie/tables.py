"""Loading and instantiating the bundled classification tables.

The tables ship as JSON (``data/tables.json``), one object per row with the
dual structure constants, the cocycle component vectors, parameter kinds and
admissibility constraints as exact expressions.  Rows instantiate to
:class:`~jacobilie.bialgebra.JacobiLieBialgebra` values at concrete rational
parameter assignments.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Iterator, Mapping

from .bialgebra import JacobiLieBialgebra
from .catalog import LieAlgebra, lookup
from .exprs import ExprError, eval_expr, eval_predicate
from .linalg import Vector, as_fraction
from .structure import StructureTensor

# default sample values per parameter kind
FAMILY_SAMPLES = (Fraction(1, 2), Fraction(2), Fraction(3))
SCALAR_SAMPLES = (Fraction(1), Fraction(-1), Fraction(2))


@dataclass(frozen=True)
class TableRow:
    """One classification-table row with symbolic parameter dependencies."""

    table: int
    index: int  # 1-based position within its table
    g_name: str
    g_param: str | None  # row parameter bound to the catalog family parameter
    gstar_label: str
    gstar_entries: tuple[tuple[int, int, int, str], ...]  # 0-based (i, j, k, expr)
    alpha_exprs: tuple[str, ...]
    beta_exprs: tuple[str, ...]
    family_params: tuple[str, ...]
    scalar_params: tuple[str, ...]
    epsilon_params: tuple[tuple[str, tuple[Fraction, ...]], ...]
    constraints: tuple[str, ...]

    @property
    def dim(self) -> int:
        return 2 if self.table in (4, 5) else 3

    @property
    def label(self) -> str:
        return f"table {self.table} row {self.index}: {self.g_name} / {self.gstar_label}"

    def param_names(self) -> tuple[str, ...]:
        return (
            self.family_params
            + self.scalar_params
            + tuple(name for name, _ in self.epsilon_params)
        )

    def admissible(self, assignment: Mapping[str, Fraction]) -> bool:
        env = {k: as_fraction(v) for k, v in dict(assignment).items()}
        try:
            return all(eval_predicate(c, env) for c in self.constraints)
        except ExprError:
            return False

    def algebra(self, assignment: Mapping[str, Fraction] | None = None) -> LieAlgebra:
        env = dict(assignment or {})
        if self.g_param is not None:
            return lookup(self.g_name, env[self.g_param])
        return lookup(self.g_name)

    def instantiate(
        self, assignment: Mapping[str, Fraction] | None = None
    ) -> JacobiLieBialgebra:
        """Build the candidate at a concrete parameter assignment.

        Raises ValueError when the assignment violates the row constraints
        (callers that sweep parameters should skip those, not fail).
        """
        env = {k: as_fraction(v) for k, v in dict(assignment or {}).items()}
        missing = set(self.param_names()) - set(env)
        if missing:
            raise ValueError(f"{self.label}: missing parameters {sorted(missing)}")
        if not self.admissible(env):
            raise ValueError(f"{self.label}: inadmissible assignment {env}")
        d = self.dim
        brackets = {
            (i, j, k): eval_expr(expr, env) for i, j, k, expr in self.gstar_entries
        }
        gstar = StructureTensor.from_brackets(d, brackets)
        alpha = Vector(eval_expr(e, env) for e in self.alpha_exprs)
        beta = Vector(eval_expr(e, env) for e in self.beta_exprs)
        return JacobiLieBialgebra(self.algebra(env).tensor, gstar, alpha, beta)

    def sample_assignments(
        self,
        family_values: tuple[Fraction, ...] = FAMILY_SAMPLES,
        scalar_values: tuple[Fraction, ...] = SCALAR_SAMPLES,
    ) -> Iterator[tuple[dict[str, Fraction], bool]]:
        """All sample assignments with an admissibility flag.

        Family parameters sweep ``family_values``, free scalars
        ``scalar_values``, epsilon parameters their listed values; assignments
        violating the row constraints are yielded with flag False so callers
        can log the skip.
        """
        axes: list[tuple[str, tuple[Fraction, ...]]] = []
        for p in self.family_params:
            axes.append((p, family_values))
        for p in self.scalar_params:
            axes.append((p, scalar_values))
        for name, values in self.epsilon_params:
            axes.append((name, values))
        if not axes:
            yield {}, True
            return
        names = [a[0] for a in axes]
        for combo in itertools.product(*(a[1] for a in axes)):
            assignment = dict(zip(names, combo))
            yield assignment, self.admissible(assignment)


def _parse_row(obj: dict, index_in_table: int) -> TableRow:
    family, scalar, epsilon = [], [], []
    for name, info in obj.get("params", {}).items():
        kind = info["kind"]
        if kind == "family":
            family.append(name)
        elif kind == "scalar":
            scalar.append(name)
        elif kind == "epsilon":
            epsilon.append((name, tuple(as_fraction(v) for v in info["values"])))
        else:
            raise ValueError(f"unknown parameter kind {kind!r}")
    return TableRow(
        table=obj["table"],
        index=index_in_table,
        g_name=obj["g"]["name"],
        g_param=obj["g"].get("param"),
        gstar_label=obj["gstar_label"],
        gstar_entries=tuple(
            (e["i"] - 1, e["j"] - 1, e["k"] - 1, e["value"]) for e in obj["gstar"]
        ),
        alpha_exprs=tuple(obj["alpha"]),
        beta_exprs=tuple(obj["beta"]),
        family_params=tuple(sorted(family)),
        scalar_params=tuple(sorted(scalar)),
        epsilon_params=tuple(sorted(epsilon)),
        constraints=tuple(obj["constraints"]),
    )


def load_table_rows(table: int | None = None) -> tuple[TableRow, ...]:
    """All bundled rows, or those of one table (4, 5, 6 or 7)."""
    text = resources.files("jacobilie").joinpath("data/tables.json").read_text("utf-8")
    raw = json.loads(text)
    counters: dict[int, int] = {}
    rows = []
    for obj in raw["rows"]:
        t = obj["table"]
        counters[t] = counters.get(t, 0) + 1
        rows.append(_parse_row(obj, counters[t]))
    if table is not None:
        if table not in (4, 5, 6, 7):
            raise ValueError("tables are numbered 4, 5, 6, 7")
        rows = [r for r in rows if r.table == table]
    return tuple(rows)
