"""Benchmark matrix families, metric sweeps, and table emission.

Two integer-valued 2n-by-2n families exercise the reduction drivers; both
put a zero in the step-1 pivot position (the first column of the lower
left block), which defeats plain symplectic-Householder elimination and
forces the orthogonal fallback.  Family 2 is Hamiltonian: J A is
symmetric.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .reduction import BreakdownError, ReductionOptions, reduce

__all__ = [
    "FamilySpec",
    "SweepRow",
    "gen_family1",
    "gen_family2",
    "run_sweep",
    "emit_table",
]


@dataclass(frozen=True)
class FamilySpec:
    family: int
    n: int

    def __post_init__(self):
        if self.family not in (1, 2):
            raise ValueError("family must be 1 or 2")
        if self.n < 2:
            raise ValueError("n must be >= 2")

    def generate(self) -> np.ndarray:
        return gen_family1(self.n) if self.family == 1 else gen_family2(self.n)


def _m11(n: int) -> np.ndarray:
    return np.eye(n) + 2.0 * np.eye(n, k=-1)


def _m12(n: int) -> np.ndarray:
    return np.eye(n) + 2.0 * np.eye(n, k=1) + 2.0 * np.eye(n, k=-1)


def gen_family1(n: int) -> np.ndarray:
    """First test family.

    Blocks: M11 lower bidiagonal (diag 1, subdiag 2); M12 symmetric
    tridiagonal (diag 1, off-diag 2); M21 upper bidiagonal with diagonal
    (0, 1, ..., 1) and superdiagonal 2, so its first column is zero;
    M22 lower bidiagonal (diag 1, subdiag 3).
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    m21 = np.diag([0.0] + [1.0] * (n - 1)) + 2.0 * np.eye(n, k=1)
    m22 = np.eye(n) + 3.0 * np.eye(n, k=-1)
    return np.block([[_m11(n), _m12(n)], [m21, m22]])


def gen_family2(n: int) -> np.ndarray:
    """Second (Hamiltonian) test family.

    M11 and M12 as in family 1; M21 is symmetric with zero first row and
    column and tridiagonal (diag 1, off-diag 3) on indices 2..n;
    M22 = -M11^T.  J A is symmetric exactly.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    m21 = np.zeros((n, n))
    m21[1:, 1:] = np.eye(n - 1) + 3.0 * np.eye(n - 1, k=1) + 3.0 * np.eye(n - 1, k=-1)
    m22 = -_m11(n).T
    return np.block([[_m11(n), _m12(n)], [m21, m22]])


@dataclass(frozen=True)
class SweepRow:
    n: int
    variant: str
    orth_loss: float | None
    red_err: float | None
    fallback_count: int
    status: str  # "ok" | "breakdown"


def run_sweep(family: int, n_min: int, n_max: int, variants: list[str],
              opts: ReductionOptions | None = None) -> list[SweepRow]:
    """Run every variant on every size of a family and collect both metrics.

    Breakdowns are recorded per row rather than raised.
    """
    if not 2 <= n_min <= n_max:
        raise ValueError("need 2 <= n_min <= n_max")
    gen = {1: gen_family1, 2: gen_family2}.get(family)
    if gen is None:
        raise ValueError("family must be 1 or 2")
    if opts is None:
        opts = ReductionOptions()
    rows: list[SweepRow] = []
    for n in range(n_min, n_max + 1):
        a = gen(n)
        for variant in variants:
            try:
                res = reduce(a, variant, opts)
            except BreakdownError:
                rows.append(SweepRow(n, variant, None, None, 0, "breakdown"))
            else:
                rows.append(SweepRow(n, variant, res.orth_loss, res.red_err,
                                     len(res.fallbacks_used), "ok"))
    return rows


def _fmt(value: float | None) -> str:
    return "fail" if value is None else f"{value:.4e}"


_COLUMNS = ("n", "variant", "orth_loss", "red_err", "fallbacks", "status")


def emit_table(rows: list[SweepRow], format: str = "csv") -> str:
    """Render sweep rows as CSV or a markdown table (LF line endings)."""
    cells = [
        (str(r.n), r.variant, _fmt(r.orth_loss), _fmt(r.red_err),
         str(r.fallback_count), r.status)
        for r in rows
    ]
    if format == "csv":
        lines = [",".join(_COLUMNS)]
        lines += [",".join(c) for c in cells]
    elif format == "markdown":
        lines = ["| " + " | ".join(_COLUMNS) + " |",
                 "|" + "|".join(" --- " for _ in _COLUMNS) + "|"]
        lines += ["| " + " | ".join(c) + " |" for c in cells]
    else:
        raise ValueError(f"unknown format {format!r}; expected 'csv' or 'markdown'")
    return "\n".join(lines) + "\n"
