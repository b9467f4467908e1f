"""Jacobi-Lie bialgebra candidates and their exact verification.

A candidate is a pair of antisymmetric tensors (the algebra ``g`` and its
dual ``g*``) together with two cocycle component vectors: ``alpha`` holds the
components of the distinguished element of ``g`` and ``beta`` those of the
distinguished 1-form.  ``verify`` evaluates the seven defining condition
groups exactly, each in both its index-loop and adjoint-matrix form, and
asserts that the two forms agree entrywise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import Matrix, Vector, format_fraction
from .structure import (
    Grid4,
    StructureTensor,
    adjoint_x,
    adjoint_y,
    format_linear_combination,
    grid_max_abs,
    jacobi_residual,
    jacobi_residual_adjoint,
)


class DimensionMismatchError(ValueError):
    """Tensor/vector dimensions of a candidate do not agree."""


@dataclass(frozen=True)
class JacobiLieBialgebra:
    """Candidate pair: tensors of g and g* plus cocycle component vectors."""

    g: StructureTensor
    gstar: StructureTensor
    alpha: Vector
    beta: Vector

    def __post_init__(self):
        d = self.g.dim
        if not (self.gstar.dim == d and self.alpha.dim == d and self.beta.dim == d):
            raise DimensionMismatchError(
                "g, gstar, alpha, beta must share one dimension"
            )

    @property
    def dim(self) -> int:
        return self.g.dim

    @classmethod
    def zero(cls, dim: int) -> "JacobiLieBialgebra":
        z = StructureTensor.zero(dim)
        return cls(z, z, Vector.zero(dim), Vector.zero(dim))

    def swap(self) -> "JacobiLieBialgebra":
        """Exchange the roles of the two algebras (and of alpha/beta).

        The defining conditions are symmetric under this exchange: the swap
        of a verified candidate verifies as well.
        """
        return JacobiLieBialgebra(self.gstar, self.g, self.beta, self.alpha)


CONDITION_NAMES = (
    "jacobi_g",
    "jacobi_gstar",
    "mixed",
    "orthogonality",
    "compatibility",
    "cocycle_x0",
    "cocycle_phi0",
)


@dataclass(frozen=True)
class ConditionResult:
    name: str
    residual: Fraction  # max |entry|, exact

    @property
    def ok(self) -> bool:
        return self.residual == 0


@dataclass(frozen=True)
class VerificationReport:
    """Per-condition exact residual record; passes iff every residual is 0."""

    conditions: tuple[ConditionResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.conditions)

    def condition(self, name: str) -> ConditionResult:
        for c in self.conditions:
            if c.name == name:
                return c
        raise KeyError(name)

    def failing(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.conditions if not c.ok)

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "conditions": {
                c.name: {"residual_max": format_fraction(c.residual), "ok": c.ok}
                for c in self.conditions
            },
        }


def _cocycle_matrix(b: JacobiLieBialgebra) -> list[list[Fraction]]:
    # C[i][m] = alpha^k f_ik^m - alpha^m beta_i
    d = b.dim
    f = b.g.entries
    al, be = b.alpha, b.beta
    return [
        [
            sum((al[k] * f[i][k][m] for k in range(d)), Fraction(0)) - al[m] * be[i]
            for m in range(d)
        ]
        for i in range(d)
    ]


def mixed_residual(b: JacobiLieBialgebra) -> Grid4:
    """Generalized mixed-compatibility residual by index loops, [i][j][m][n]."""
    d = b.dim
    f = b.g.entries
    ft = b.gstar.entries
    al, be = b.alpha, b.beta
    C = _cocycle_matrix(b)
    out = []
    for i in range(d):
        plane = []
        for j in range(d):
            row = []
            for m in range(d):
                col = []
                for n in range(d):
                    s = Fraction(0)
                    for k in range(d):
                        s += f[i][j][k] * ft[m][n][k]
                        s -= f[i][k][m] * ft[k][n][j]
                        s -= f[i][k][n] * ft[m][k][j]
                        s -= f[k][j][m] * ft[k][n][i]
                        s -= f[k][j][n] * ft[m][k][i]
                    s += be[i] * ft[m][n][j] - be[j] * ft[m][n][i]
                    s += al[m] * f[i][j][n] - al[n] * f[i][j][m]
                    if j == n:
                        s += C[i][m]
                    if i == n:
                        s -= C[j][m]
                    if j == m:
                        s -= C[i][n]
                    if i == m:
                        s += C[j][n]
                    col.append(s)
                row.append(tuple(col))
            plane.append(tuple(row))
        out.append(tuple(plane))
    return tuple(out)


def mixed_residual_adjoint(b: JacobiLieBialgebra) -> Grid4:
    """Mixed-compatibility residual assembled from adjoint matrices.

    For each (m, n) the auxiliary matrix combines the adjoint matrices of g
    and g*, the outer products of the cocycle columns, and the column of
    dual constants; adding the four Kronecker terms built from
    ``C = alpha^k X_k - B A^t`` gives a matrix whose (i, j) entry equals
    ``mixed_residual(b)[i][j][m][n]``.  The diagonal m == n is included.
    """
    d = b.dim
    X = adjoint_x(b.g)
    Y = adjoint_y(b.g)
    Xt = adjoint_x(b.gstar)
    al, be = b.alpha, b.beta
    C = Matrix.zero(d)
    for k in range(d):
        if al[k] != 0:
            C = C + X[k].scale(al[k])
    C = C - Matrix([[be[i] * al[m] for m in range(d)] for i in range(d)])
    out = [[None] * d for _ in range(d)]
    grid = [
        [[[None] * d for _ in range(d)] for _ in range(d)] for _ in range(d)
    ]
    for m in range(d):
        for n in range(d):
            D = Matrix.zero(d)
            for k in range(d):
                coeff = Xt[m][n, k]
                if coeff != 0:
                    D = D + Y[k].scale(coeff)
            D = D + Y[m] * Xt[n] - Y[n] * Xt[m]
            D = D + Xt[n].transpose() * Y[m] - Xt[m].transpose() * Y[n]
            fmn = [b.gstar.entries[m][n][k] for k in range(d)]
            D = D + Matrix(
                [[be[i] * fmn[j] - fmn[i] * be[j] for j in range(d)] for i in range(d)]
            )
            D = D + Y[m].scale(al[n]) - Y[n].scale(al[m])
            for i in range(d):
                for j in range(d):
                    v = D[i, j]
                    if j == n:
                        v += C[i, m]
                    if i == n:
                        v -= C[j, m]
                    if j == m:
                        v -= C[i, n]
                    if i == m:
                        v += C[j, n]
                    grid[i][j][m][n] = v
    return tuple(
        tuple(tuple(tuple(grid[i][j][m][n] for n in range(d)) for m in range(d)) for j in range(d))
        for i in range(d)
    )


def classical_mixed_residual(g: StructureTensor, gstar: StructureTensor) -> Grid4:
    """Mixed-Jacobi residual of an ordinary dual pair (no cocycle terms).

    Coded independently of :func:`mixed_residual` as left side minus right
    side of the classical compatibility identity.
    """
    d = g.dim
    f = g.entries
    ft = gstar.entries
    out = []
    for i in range(d):
        plane = []
        for j in range(d):
            row = []
            for m in range(d):
                col = []
                for n in range(d):
                    lhs = sum((f[i][j][k] * ft[m][n][k] for k in range(d)), Fraction(0))
                    rhs = sum(
                        (
                            f[i][k][m] * ft[k][n][j]
                            + f[i][k][n] * ft[m][k][j]
                            + f[k][j][m] * ft[k][n][i]
                            + f[k][j][n] * ft[m][k][i]
                            for k in range(d)
                        ),
                        Fraction(0),
                    )
                    col.append(lhs - rhs)
                row.append(tuple(col))
            plane.append(tuple(row))
        out.append(tuple(plane))
    return tuple(out)


def orthogonality_residual(b: JacobiLieBialgebra) -> Fraction:
    """Pairing of the two cocycles: sum_i alpha^i beta_i."""
    return b.alpha.dot(b.beta)


def orthogonality_residual_adjoint(b: JacobiLieBialgebra) -> Fraction:
    """Same pairing computed as the trace of the outer product."""
    d = b.dim
    outer = Matrix([[b.alpha[i] * b.beta[j] for j in range(d)] for i in range(d)])
    return outer.trace()


def compatibility_residual(b: JacobiLieBialgebra) -> tuple[tuple[Fraction, ...], ...]:
    """Index form, entry (i, m): alpha^n f_ni^m - beta_n f~^nm_i."""
    d = b.dim
    f = b.g.entries
    ft = b.gstar.entries
    al, be = b.alpha, b.beta
    return tuple(
        tuple(
            sum((al[n] * f[n][i][m] for n in range(d)), Fraction(0))
            - sum((be[n] * ft[n][m][i] for n in range(d)), Fraction(0))
            for m in range(d)
        )
        for i in range(d)
    )


def compatibility_residual_adjoint(b: JacobiLieBialgebra) -> Matrix:
    """Matrix form: sum_i alpha^i X_i^t - sum_i beta_i Xt^i.

    Entry (r, c) equals minus the index form at (i, m) = (c, r).
    """
    d = b.dim
    X = adjoint_x(b.g)
    Xt = adjoint_x(b.gstar)
    acc = Matrix.zero(d)
    for i in range(d):
        if b.alpha[i] != 0:
            acc = acc + X[i].transpose().scale(b.alpha[i])
        if b.beta[i] != 0:
            acc = acc - Xt[i].scale(b.beta[i])
    return acc


def cocycle_x0_residual(b: JacobiLieBialgebra) -> tuple[tuple[Fraction, ...], ...]:
    """Index form, entry (m, n): alpha^i f~^mn_i."""
    d = b.dim
    ft = b.gstar.entries
    return tuple(
        tuple(
            sum((b.alpha[i] * ft[m][n][i] for i in range(d)), Fraction(0))
            for n in range(d)
        )
        for m in range(d)
    )


def cocycle_x0_residual_adjoint(b: JacobiLieBialgebra) -> Matrix:
    """Matrix form sum_i alpha^i Yt_i; equals minus the index form."""
    d = b.dim
    Yt = adjoint_y(b.gstar)
    acc = Matrix.zero(d)
    for i in range(d):
        if b.alpha[i] != 0:
            acc = acc + Yt[i].scale(b.alpha[i])
    return acc


def cocycle_phi0_residual(b: JacobiLieBialgebra) -> tuple[tuple[Fraction, ...], ...]:
    """Index form, entry (m, n): beta_i f_mn^i."""
    d = b.dim
    f = b.g.entries
    return tuple(
        tuple(
            sum((b.beta[i] * f[m][n][i] for i in range(d)), Fraction(0))
            for n in range(d)
        )
        for m in range(d)
    )


def cocycle_phi0_residual_adjoint(b: JacobiLieBialgebra) -> Matrix:
    """Matrix form sum_i beta_i Y^i; equals minus the index form."""
    d = b.dim
    Y = adjoint_y(b.g)
    acc = Matrix.zero(d)
    for i in range(d):
        if b.beta[i] != 0:
            acc = acc + Y[i].scale(b.beta[i])
    return acc


def verify(b: JacobiLieBialgebra) -> VerificationReport:
    """Evaluate the seven defining condition groups exactly.

    Every condition is computed in both the index-loop form and the
    adjoint-matrix form; the two must agree entrywise (internal assertion).
    The report records the max |entry| per condition as an exact rational;
    the candidate passes iff every residual is exactly zero.
    """
    d = b.dim
    results = []

    jg = jacobi_residual(b.g)
    assert jg == jacobi_residual_adjoint(b.g), "jacobi_g forms disagree"
    results.append(ConditionResult("jacobi_g", grid_max_abs(jg)))

    jgs = jacobi_residual(b.gstar)
    assert jgs == jacobi_residual_adjoint(b.gstar), "jacobi_gstar forms disagree"
    results.append(ConditionResult("jacobi_gstar", grid_max_abs(jgs)))

    mixed = mixed_residual(b)
    assert mixed == mixed_residual_adjoint(b), "mixed forms disagree"
    results.append(ConditionResult("mixed", grid_max_abs(mixed)))

    orth = orthogonality_residual(b)
    assert orth == orthogonality_residual_adjoint(b), "orthogonality forms disagree"
    results.append(ConditionResult("orthogonality", abs(orth)))

    comp = compatibility_residual(b)
    comp_m = compatibility_residual_adjoint(b)
    assert all(
        comp_m[r, c] == -comp[c][r] for r in range(d) for c in range(d)
    ), "compatibility forms disagree"
    results.append(ConditionResult("compatibility", grid_max_abs(comp)))

    cx = cocycle_x0_residual(b)
    cx_m = cocycle_x0_residual_adjoint(b)
    assert all(
        cx_m[m, n] == -cx[m][n] for m in range(d) for n in range(d)
    ), "cocycle_x0 forms disagree"
    results.append(ConditionResult("cocycle_x0", grid_max_abs(cx)))

    cp = cocycle_phi0_residual(b)
    cp_m = cocycle_phi0_residual_adjoint(b)
    assert all(
        cp_m[m, n] == -cp[m][n] for m in range(d) for n in range(d)
    ), "cocycle_phi0 forms disagree"
    results.append(ConditionResult("cocycle_phi0", grid_max_abs(cp)))

    return VerificationReport(tuple(results))


class BracketTable:
    """Full bracket table on the 2d-dimensional double space.

    Basis order is (x1..xd, y1..yd) with x from g and y from the dual; entry
    [a][b] is the coefficient vector (length 2d) of the bracket of basis
    elements a and b.  The table is antisymmetric by construction but is not
    asserted to satisfy the Jacobi identity: with nonzero cocycles the double
    space need not be a Lie algebra.
    """

    __slots__ = ("dim", "entries")

    def __init__(self, dim: int, entries) -> None:
        table = tuple(tuple(Vector(v) for v in row) for row in entries)
        if len(table) != 2 * dim or any(len(row) != 2 * dim for row in table):
            raise ValueError("bracket table must be (2d) x (2d)")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "entries", table)

    def __setattr__(self, name, value):
        raise AttributeError("BracketTable is immutable")

    def __getitem__(self, key) -> Vector:
        a, b = key
        return self.entries[a][b]

    def is_antisymmetric(self) -> bool:
        n = 2 * self.dim
        return all(
            self.entries[a][b] == -self.entries[b][a]
            for a in range(n)
            for b in range(n)
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BracketTable)
            and self.dim == other.dim
            and self.entries == other.entries
        )

    def basis_symbol(self, a: int) -> str:
        return f"x{a + 1}" if a < self.dim else f"y{a - self.dim + 1}"

    def pretty(self) -> list[str]:
        d = self.dim
        lines = []
        for a in range(2 * d):
            for bb in range(a + 1, 2 * d):
                coeffs = self.entries[a][bb]
                if coeffs.is_zero():
                    continue
                xpart = format_linear_combination(coeffs.entries[:d], "x")
                ypart = format_linear_combination(coeffs.entries[d:], "y")
                if xpart == "0":
                    rhs = ypart
                elif ypart == "0":
                    rhs = xpart
                else:
                    rhs = f"{xpart} + {ypart}" if not ypart.startswith("-") else f"{xpart} - {ypart[1:]}"
                lines.append(f"[{self.basis_symbol(a)},{self.basis_symbol(bb)}] = {rhs}")
        return lines


def _assemble_table(b: JacobiLieBialgebra, mixed_coeffs) -> BracketTable:
    d = b.dim
    n = 2 * d
    table = [[Vector.zero(n) for _ in range(n)] for _ in range(n)]
    f = b.g.entries
    ft = b.gstar.entries
    for i in range(d):
        for j in range(d):
            table[i][j] = Vector(list(f[i][j]) + [0] * d)
            table[d + i][d + j] = Vector([0] * d + list(ft[i][j]))
    for i in range(d):
        for j in range(d):
            xc, yc = mixed_coeffs(i, j)
            v = Vector(xc + yc)
            table[i][d + j] = v
            table[d + j][i] = -v
    return BracketTable(d, table)


def double_brackets(b: JacobiLieBialgebra) -> BracketTable:
    """Bracket table on the double space with the cocycle correction terms.

    The mixed bracket of x_i with y^j has x_k coefficient
    ``f~^jk_i + alpha^k delta_i^j / 2 - alpha^j delta_i^k`` and y^k
    coefficient ``f_ki^j - beta_k delta_i^j / 2 + beta_i delta_k^j``.
    """
    d = b.dim
    f = b.g.entries
    ft = b.gstar.entries
    al, be = b.alpha, b.beta

    def coeffs(i, j):
        half = Fraction(1, 2)
        xc = [
            ft[j][k][i]
            + (al[k] * half if i == j else 0)
            - (al[j] if i == k else 0)
            for k in range(d)
        ]
        yc = [
            f[k][i][j]
            - (be[k] * half if i == j else 0)
            + (be[i] if k == j else 0)
            for k in range(d)
        ]
        return xc, yc

    return _assemble_table(b, coeffs)


def classical_double_brackets(g: StructureTensor, gstar: StructureTensor) -> BracketTable:
    """Bracket table of an ordinary dual pair: mixed bracket without cocycles."""
    d = g.dim
    b = JacobiLieBialgebra(g, gstar, Vector.zero(d), Vector.zero(d))
    f = g.entries
    ft = gstar.entries

    def coeffs(i, j):
        xc = [ft[j][k][i] for k in range(d)]
        yc = [f[k][i][j] for k in range(d)]
        return xc, yc

    return _assemble_table(b, coeffs)
