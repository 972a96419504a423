"""Brute-force property checks.

Every claim a construction makes is checkable here by direct counting:
no linear algebra, no knowledge of how the design was built.  Checks
return a VerificationReport rather than raising, so a tampered file can
be loaded and diagnosed.  Counterexamples are deterministic: subsets are
scanned in lexicographic order and the first violation is reported.
All counting is integer-exact; nothing here produces a float.

``check_mcd`` tests the marginal-coupling property through the collapsed
pair condition: every (D1 column, collapsed D2 column) pair must be a
strength-2 mixed orthogonal array.  ``check_mcd_by_slices`` is the
independent definitional oracle: within each level-slice of each D1
column, every D2 column must put exactly one point into each of the n/s
consecutive length-s value windows.  The two must agree on any input;
the acceptance suite holds them to that on random and constructed designs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import prod

import numpy as np

from .designs import CollapsedDesign, LatinHypercube, OrthogonalArray
from .errors import (
    BadGridError,
    NotDivisibleError,
    RunCountMismatchError,
    StrengthExceedsColumnsError,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    subject: tuple
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "pass" if self.passed else "FAIL"
        subj = f" {self.subject}" if self.subject else ""
        det = f" -- {self.detail}" if self.detail else ""
        return f"[{status}] {self.name}{subj}{det}"


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> tuple[CheckResult, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks]

    def merged_with(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(self.checks + other.checks)


def _combo_counts(data: np.ndarray, cols: tuple[int, ...],
                  levels: tuple[int, ...]) -> np.ndarray:
    """Occurrence count of every level combination on the given columns.

    Combinations are encoded big-endian (first column most significant),
    so index order == lexicographic order.  Values outside 0..level-1
    land past the declared range and show up as nonzero tail counts.
    """
    radix = np.ones(len(cols), dtype=np.int64)
    for i in range(len(cols) - 2, -1, -1):
        radix[i] = radix[i + 1] * levels[i + 1]
    sub = data[:, list(cols)]
    if sub.min() < 0:
        # negative entries cannot be bincounted; remap them to a sentinel row
        sub = sub.copy()
        sub[sub < 0] = levels[0]  # guaranteed out of range
    codes = sub @ radix
    return np.bincount(codes, minlength=int(prod(levels)))


def _decode(code: int, levels: tuple[int, ...]) -> tuple[int, ...]:
    out = []
    for lev in reversed(levels):
        out.append(code % lev)
        code //= lev
    return tuple(reversed(out))


def check_oa_strength(a: OrthogonalArray, t: int) -> VerificationReport:
    """Strength-t check by exhaustive counting: every t-subset of columns
    must contain each level combination exactly n / (product of levels)
    times.  Reports the lexicographically first violating subset and
    combination."""
    if t < 1:
        raise ValueError("strength must be at least 1")
    if t > a.m:
        raise StrengthExceedsColumnsError(
            f"strength {t} exceeds column count {a.m}")
    for cols in combinations(range(a.m), t):
        levels = tuple(a.levels[c] for c in cols)
        full = int(prod(levels))
        if a.n % full != 0:
            result = CheckResult(
                f"oa-strength({t})", cols, False,
                f"run count {a.n} not divisible by {full} level combinations")
            return VerificationReport((result,))
        expected = a.n // full
        counts = _combo_counts(a.data, cols, levels)
        bad = np.flatnonzero(counts != expected)
        over = counts[full:]
        if over.any():
            result = CheckResult(
                f"oa-strength({t})", cols, False,
                "entries outside the declared level range")
            return VerificationReport((result,))
        if bad.size:
            code = int(bad[0])
            combo = _decode(code, levels)
            result = CheckResult(
                f"oa-strength({t})", cols, False,
                f"combination {combo} appears {int(counts[code])} times, "
                f"expected {expected}")
            return VerificationReport((result,))
    return VerificationReport((CheckResult(f"oa-strength({t})", (), True),))


def _latin_check(d2: LatinHypercube) -> CheckResult:
    n = d2.n
    for j in range(d2.k):
        col = np.sort(d2.data[:, j])
        if not (col == np.arange(n)).all():
            missing = sorted(set(range(n)) - set(d2.data[:, j].tolist()))
            what = (f"value {missing[0]} missing" if missing
                    else "duplicate values")
            return CheckResult("latin-hypercube", (j,), False,
                               f"column {j} is not a permutation of 0..{n - 1}"
                               f" ({what})")
    return CheckResult("latin-hypercube", (), True)


def _pair_balance(d1: OrthogonalArray, tilde: np.ndarray, s: int) -> CheckResult:
    """Every (D1 column, collapsed column) pair must hit each (level, level)
    combination exactly once -- the collapsed form of marginal coupling."""
    n = d1.n
    nlev = n // s
    for i in range(d1.m):
        for j in range(tilde.shape[1]):
            codes = d1.data[:, i] * nlev + tilde[:, j]
            if codes.min() < 0 or codes.max() >= s * nlev:
                return CheckResult(
                    "pair-balance", (i, j), False,
                    f"levels out of range for D1 column {i} / "
                    f"collapsed D2 column {j}")
            counts = np.bincount(codes, minlength=s * nlev)
            bad = np.flatnonzero(counts != 1)
            if bad.size:
                code = int(bad[0])
                return CheckResult(
                    "pair-balance", (i, j), False,
                    f"(D1 column {i} = {code // nlev}, collapsed D2 column "
                    f"{j} = {code % nlev}) occurs {int(counts[code])} times, "
                    f"expected 1")
    return CheckResult("pair-balance", (), True)


def _structural_checks(d1: OrthogonalArray, d2: LatinHypercube,
                       s: int) -> list[CheckResult]:
    if d1.n != d2.n:
        raise RunCountMismatchError(
            f"D1 has {d1.n} runs but D2 has {d2.n}")
    if d1.n % s != 0:
        raise NotDivisibleError(f"run count {d1.n} not divisible by s={s}")
    checks = [check_oa_strength(d1, min(2, d1.m)).checks[0]]
    checks.append(_latin_check(d2))
    return checks


def check_mcd(d1: OrthogonalArray, d2: LatinHypercube, s: int) -> VerificationReport:
    """Marginal-coupling check via the collapsed pair condition, plus the
    prerequisites: D1 a strength-2 orthogonal array (strength 1 when it has
    a single column) and D2 a Latin hypercube."""
    checks = _structural_checks(d1, d2, s)
    checks.append(_pair_balance(d1, d2.data // s, s))
    return VerificationReport(tuple(checks))


def check_mcd_by_slices(d1: OrthogonalArray, d2: LatinHypercube,
                        s: int) -> VerificationReport:
    """Definitional marginal-coupling oracle, independent of the collapse
    machinery: for each level of each D1 column, the rows at that level
    must place every D2 column's values one-per-window into the n/s
    consecutive windows [vs, vs+s).  Agrees with check_mcd on any input."""
    checks = _structural_checks(d1, d2, s)
    n = d1.n
    nlev = n // s
    verdict: CheckResult | None = None
    for i in range(d1.m):
        if verdict:
            break
        col = d1.data[:, i]
        for level in sorted(set(col.tolist())):
            rows = np.flatnonzero(col == level)
            stop = False
            for j in range(d2.k):
                values = d2.data[rows, j]
                for v in range(nlev):
                    window = [x for x in values.tolist()
                              if v * s <= x < (v + 1) * s]
                    if len(window) != 1:
                        verdict = CheckResult(
                            "slice-coverage", (i, j), False,
                            f"D1 column {i} level {level}: D2 column {j} has "
                            f"{len(window)} points in window "
                            f"[{v * s}, {(v + 1) * s - 1}], expected 1")
                        stop = True
                        break
                if stop:
                    break
            if stop:
                break
    checks.append(verdict or CheckResult("slice-coverage", (), True))
    return VerificationReport(tuple(checks))


def check_noncascading(collapsed: CollapsedDesign) -> VerificationReport:
    """No two collapsed columns may be equal up to level relabeling."""
    from .designs import _relabel_by_first_occurrence

    canon = [_relabel_by_first_occurrence(collapsed.data[:, j])
             for j in range(collapsed.k)]
    for i, j in combinations(range(collapsed.k), 2):
        if canon[i] == canon[j]:
            result = CheckResult(
                "non-cascading", (i, j), False,
                f"columns {i} and {j} are level-relabelings of each other")
            return VerificationReport((result,))
    return VerificationReport((CheckResult("non-cascading", (), True),))


def check_grid_stratification(d2: LatinHypercube, dims: tuple[int, ...],
                              cells: tuple[int, ...]) -> VerificationReport:
    """Do the selected columns spread evenly over a cells[0] x cells[1] x ...
    grid?  Column c maps to cell floor(value * cells / n); every cell must
    hold exactly n / prod(cells) points."""
    n = d2.n
    if len(dims) != len(cells) or not dims:
        raise BadGridError("need one cell count per selected column")
    if any(not 0 <= d < d2.k for d in dims):
        raise BadGridError(f"column selection {dims} outside 0..{d2.k - 1}")
    if any(c < 1 or n % c != 0 for c in cells):
        raise BadGridError(f"cell counts {cells} must divide n={n}")
    full = int(prod(cells))
    if n % full != 0:
        raise BadGridError(
            f"grid of {full} cells does not divide n={n}")
    expected = n // full
    cell_cols = np.stack(
        [d2.data[:, d] * c // n for d, c in zip(dims, cells)], axis=1)
    radix = np.ones(len(cells), dtype=np.int64)
    for i in range(len(cells) - 2, -1, -1):
        radix[i] = radix[i + 1] * cells[i + 1]
    codes = cell_cols @ radix
    counts = np.bincount(codes, minlength=full)
    name = "grid-stratification(" + "x".join(str(c) for c in cells) + ")"
    bad = np.flatnonzero(counts != expected)
    if bad.size:
        cell = _decode(int(bad[0]), tuple(cells))
        result = CheckResult(
            name, tuple(dims), False,
            f"cell {cell} holds {int(counts[bad[0]])} points, "
            f"expected {expected}")
        return VerificationReport((result,))
    return VerificationReport((CheckResult(name, tuple(dims), True),))
