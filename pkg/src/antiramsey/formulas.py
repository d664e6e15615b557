"""Closed-form anti-Ramsey and Turan values for loose/linear paths and cycles.

All values are exact integers (``math.comb``).  Two conventions for ``t`` are
in use and each evaluator owns its own:

* anti-Ramsey formulas: ``t = k // 2`` (``k = 2t`` or ``k = 2t + 1``);
* Turan formulas: ``t = (k - 1) // 2``.

Values valid only for sufficiently large ``n`` are tagged ``ASYMPTOTIC``;
they are still evaluated for any ``n``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Optional

EXACT = "exact"
ASYMPTOTIC = "asymptotic"
# formula evaluated outside the parameter range of its source statement
EXTRAPOLATED = "extrapolated"


class FormulaRangeError(ValueError):
    """Parameters outside the range where the formula is stated."""


class UnresolvedSymbolError(ValueError):
    """A formula term depends on a symbol with no stated value."""


@dataclass(frozen=True)
class FormulaValue:
    value: int | Fraction
    applicability: str = ASYMPTOTIC

    def __int__(self):
        return int(self.value)


def ar_t(k: int) -> int:
    return k // 2


def turan_t(k: int) -> int:
    return (k - 1) // 2


def _check(n, r, k, kmin=4):
    if r < 3:
        raise FormulaRangeError(f"r >= 3 required, got r={r}")
    if k < kmin:
        raise FormulaRangeError(f"k >= {kmin} required, got k={k}")
    if n < 0:
        raise FormulaRangeError(f"n must be nonnegative, got {n}")


def ar_loose(n: int, r: int, k: int) -> FormulaValue:
    """ar(n, r, loose P_k) = ar(n, r, loose C_k) for k >= 4."""
    _check(n, r, k)
    t = ar_t(k)
    base = comb(n, r) - comb(n - t + 1, r)
    return FormulaValue(base + (2 if k % 2 == 0 else 3))


def ar_linear(n: int, r: int, k: int) -> FormulaValue:
    """ar(n, r, linear P_k) = ar(n, r, linear C_k) for k >= 4."""
    _check(n, r, k)
    t = ar_t(k)
    base = comb(n, r) - comb(n - t + 1, r) + 2
    if k % 2:
        base += comb(n - t - 1, r - 2)
    return FormulaValue(base)


def ar_short_path(n: int, r: int, k: int) -> FormulaValue:
    """ar for loose paths of length 2 (n >= 3r-4) and 3 (n >= 4r-3)."""
    if k == 2:
        if n < 3 * r - 4:
            raise FormulaRangeError(f"ar(n,{r},P_2) known only for n >= {3 * r - 4}")
        return FormulaValue(2, EXACT)
    if k == 3:
        if n < 4 * r - 3:
            raise FormulaRangeError(f"ar(n,{r},P_3) known only for n >= {4 * r - 3}")
        return FormulaValue(3, EXACT)
    raise FormulaRangeError(f"short-path formula covers k in {{2, 3}}, got {k}")


def ex_linear(n: int, r: int, k: int, shape: str = "path") -> FormulaValue:
    """ex(n, r, linear P_k) or ex(n, r, linear C_k).

    Stated for k >= 4; ``k = 3`` is evaluated from the same expression and
    tagged ``EXTRAPOLATED`` (the anti-Ramsey audit needs the k-1 value at k=4).
    """
    _check(n, r, k, kmin=3)
    if shape not in ("path", "cycle"):
        raise ValueError(f"unknown shape {shape!r}")
    tag = ASYMPTOTIC if k >= 4 else EXTRAPOLATED
    if shape == "cycle" and (k, r) == (4, 3):
        return FormulaValue(comb(n, 3) - comb(n - 1, 3) + max(n - 3, 4 * ((n - 1) // 4)), tag)
    t = turan_t(k)
    value = comb(n, r) - comb(n - t, r)
    if k % 2 == 0:
        value += comb(n - t - 2, r - 2)
    return FormulaValue(value, tag)


def ex_loose(n: int, r: int, k: int, shape: str = "path", s_param: Optional[int] = None) -> FormulaValue:
    """ex(n, r, loose P_k) or ex(n, r, loose C_k) for k >= 3.

    The loose C_4 value carries a ``floor((n-1)/s)`` term whose ``s`` is not
    pinned down; it must be passed explicitly as ``s_param``.
    """
    _check(n, r, k, kmin=3)
    if shape not in ("path", "cycle"):
        raise ValueError(f"unknown shape {shape!r}")
    if shape == "cycle" and k == 4:
        if s_param is None:
            raise UnresolvedSymbolError("loose C_4 Turan term floor((n-1)/s) needs an explicit s_param")
        if s_param < 1:
            raise FormulaRangeError("s_param must be a positive integer")
        return FormulaValue(comb(n, r) - comb(n - 1, r) + (n - 1) // s_param)
    t = turan_t(k)
    return FormulaValue(comb(n, r) - comb(n - t, r) + (k % 2 == 0))


def eg_bound(n: int, k: int) -> FormulaValue:
    """Upper bound (k-1)n/2 on edges of a graph with no path of k edges, as a Fraction."""
    if k < 2 or n < 1:
        raise FormulaRangeError("needs k >= 2 and n >= 1")
    return FormulaValue(Fraction((k - 1) * n, 2), EXACT)


def obs_lower_bound(ex_value: int | FormulaValue) -> FormulaValue:
    """ar(F) >= ex({F - e}) + 2."""
    tag = ex_value.applicability if isinstance(ex_value, FormulaValue) else EXACT
    value = int(ex_value)
    if value < 0:
        raise FormulaRangeError("Turan value must be nonnegative")
    return FormulaValue(value + 2, tag)


@dataclass
class AuditViolation:
    n: int
    r: int
    k: int
    check: str
    detail: str


@dataclass
class AuditReport:
    points: int
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations


def audit_point(n: int, r: int, k: int) -> list[AuditViolation]:
    out = []

    def fail(check, detail):
        out.append(AuditViolation(n, r, k, check, detail))

    if ar_t(k) != turan_t(k - 1) + 1:
        fail("t-bridge", f"t={ar_t(k)} vs turan t(k-1)={turan_t(k - 1)}")
    al, an = ar_loose(n, r, k).value, ar_linear(n, r, k).value
    exl = ex_loose(n, r, k - 1, "path").value
    exn = ex_linear(n, r, k - 1, "path").value
    if al != obs_lower_bound(exl).value:
        fail("a", f"ar_loose={al} != ex_loose(k-1)+2={exl + 2}")
    if an != obs_lower_bound(exn).value:
        fail("b", f"ar_linear={an} != ex_linear(k-1)+2={exn + 2}")
    if al > an:
        fail("c", f"ar_loose={al} > ar_linear={an}")
    values = [al, an, exl, exn]
    if min(values) < 0:
        fail("d", f"negative value in {values}")
    if n > 0:
        prev = [ar_loose(n - 1, r, k).value, ar_linear(n - 1, r, k).value,
                ex_loose(n - 1, r, k - 1).value, ex_linear(n - 1, r, k - 1).value]
        for name, a, b in zip(("ar_loose", "ar_linear", "ex_loose", "ex_linear"), prev, values):
            if b < a:
                fail("d", f"{name} decreases from n-1 to n: {a} -> {b}")
    return out


def consistency_audit(grid: Iterable[tuple[int, int, int]]) -> AuditReport:
    """Check the cross-formula identities on every ``(n, r, k)`` of ``grid``.

    (a) ar_loose(k) = ex_loose(k-1, path) + 2; (b) ar_linear(k) =
    ex_linear(k-1, path) + 2; (c) ar_loose <= ar_linear; (d) values are
    nonnegative and nondecreasing in n; plus the t-convention bridge.
    """
    violations, count = [], 0
    for n, r, k in grid:
        count += 1
        violations.extend(audit_point(n, r, k))
    return AuditReport(count, violations)


def standard_grid(n_max: int = 60, rs=(3, 4, 5), ks=range(4, 10)):
    return [(n, r, k) for r in rs for k in ks for n in range(k * r, n_max + 1)]


def formula_rows(ns, rs, ks):
    """Rows for the CSV table: n,r,k,ar_loose,ar_linear,ex_loose_path,ex_linear_path,applicability."""
    rows = []
    for n in ns:
        for r in rs:
            for k in ks:
                rows.append((
                    n, r, k,
                    ar_loose(n, r, k).value,
                    ar_linear(n, r, k).value,
                    ex_loose(n, r, k).value,
                    ex_linear(n, r, k).value,
                    ASYMPTOTIC,
                ))
    return rows
