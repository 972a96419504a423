"""Design containers and level operations.

Three thin containers: OrthogonalArray (mixed levels allowed),
LatinHypercube (each column a permutation of 0..n-1), and CollapsedDesign
(columns with n/s levels, each taken exactly s times).  Containers validate
structure only -- shape and dtype -- never the combinatorial properties,
so that files read back from disk can always be *loaded* and then checked;
the verify module reports property violations instead of raising.

Level operations:

* ``collapse_levels`` maps a Latin hypercube to floor(D/s), the s-to-1
  level collapse.
* ``expand_levels`` inverts it: level v of a collapsed column becomes the
  s values vs..vs+s-1, assigned to the s rows holding v.  With the
  "identity" pseudo-seed the values are assigned in row order; with an
  integer seed each column gets an independent PCG64 stream
  (SeedSequence([seed, column_index])) and the values are permuted.
  Identical seeds give identical designs; per-column streams mean a
  parallel implementation could not change the output.
* ``method_of_replacement`` encodes the rows of an n x (u-1) s-level array
  as single base-s integers (ordinary positional notation, no field
  arithmetic): column j carries weight s^(u-2-j).
* ``is_cascading_pair`` detects columns equal up to a relabeling of levels
  -- the redundancy the constructions must avoid.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    LengthMismatchError,
    LevelOutOfRangeError,
    MalformedCollapsedDesignError,
    NotDivisibleError,
)

#: pseudo-seed selecting in-order (deterministic, permutation-free) expansion
IDENTITY_SEED = "identity"

Seed = int | str


def _as_matrix(data) -> np.ndarray:
    arr = np.asarray(data, dtype=np.int64)
    if arr.ndim != 2:
        raise ValueError(f"design data must be 2-D, got shape {arr.shape}")
    return arr


@dataclass(eq=False)
class OrthogonalArray:
    """n x m integer array with declared per-column level counts.

    ``certified_strength`` is set by constructions that can prove a strength
    from their generators; it is advisory and independently checkable with
    verify.check_oa_strength.
    """

    data: np.ndarray
    levels: tuple[int, ...]
    certified_strength: int | None = None

    def __post_init__(self):
        self.data = _as_matrix(self.data)
        self.levels = tuple(int(v) for v in self.levels)
        if len(self.levels) != self.data.shape[1]:
            raise ValueError("one level count per column required")

    @property
    def n(self) -> int:
        return self.data.shape[0]

    @property
    def m(self) -> int:
        return self.data.shape[1]


@dataclass(eq=False)
class LatinHypercube:
    """n x k integer array; a valid instance has each column a permutation
    of 0..n-1 (checked by verify, not here)."""

    data: np.ndarray

    def __post_init__(self):
        self.data = _as_matrix(self.data)

    @property
    def n(self) -> int:
        return self.data.shape[0]

    @property
    def k(self) -> int:
        return self.data.shape[1]


@dataclass(eq=False)
class CollapsedDesign:
    """n x k integer array over levels 0..n/s-1, each level s times per
    column in a valid instance."""

    s: int
    data: np.ndarray

    def __post_init__(self):
        self.data = _as_matrix(self.data)

    @property
    def n(self) -> int:
        return self.data.shape[0]

    @property
    def k(self) -> int:
        return self.data.shape[1]

    @property
    def level_count(self) -> int:
        return self.n // self.s


def method_of_replacement(a0, s: int) -> np.ndarray:
    """Encode each row of the n x c s-level array ``a0`` as one integer in
    0..s^c-1 via ordinary positional notation: column j has weight
    s^(c-1-j).  Rows are equal iff their encodings are equal."""
    arr = _as_matrix(a0)
    if arr.size and (arr.min() < 0 or arr.max() >= s):
        bad = np.argwhere((arr < 0) | (arr >= s))[0]
        raise LevelOutOfRangeError(
            f"entry at row {bad[0]}, column {bad[1]} outside 0..{s - 1}")
    c = arr.shape[1]
    weights = s ** np.arange(c - 1, -1, -1, dtype=np.int64)
    return arr @ weights


def collapse_levels(d2: LatinHypercube, s: int) -> CollapsedDesign:
    """floor(D2 / s): n levels -> n/s levels, each appearing s times."""
    if d2.n % s != 0:
        raise NotDivisibleError(f"run count {d2.n} not divisible by s={s}")
    return CollapsedDesign(s, d2.data // s)


def _column_rng(seed: int, column: int) -> np.random.Generator:
    """Independent, platform-stable stream for one column."""
    return np.random.Generator(np.random.PCG64(
        np.random.SeedSequence([int(seed), int(column)])))


def expand_levels(collapsed: CollapsedDesign, s: int,
                  seed: Seed = IDENTITY_SEED) -> LatinHypercube:
    """Replace level v of each column with a permutation of vs..vs+s-1
    across the s rows holding v.  Inverse of collapse_levels for any seed.

    seed="identity": values assigned in row order (pure function of input).
    integer seed: values permuted per (column, level) by the column's
    PCG64 stream.
    """
    n, k = collapsed.n, collapsed.k
    if n % s != 0:
        raise NotDivisibleError(f"run count {n} not divisible by s={s}")
    nlev = n // s
    out = np.empty((n, k), dtype=np.int64)
    for j in range(k):
        col = collapsed.data[:, j]
        bad = col.min(initial=0) < 0
        if not bad:
            counts = np.bincount(col, minlength=nlev)
            bad = len(counts) != nlev or (counts != s).any()
        if bad:
            raise MalformedCollapsedDesignError(
                f"column {j} does not take each level 0..{nlev - 1} "
                f"exactly {s} times")
        rng = None if seed == IDENTITY_SEED else _column_rng(seed, j)
        for v in range(nlev):
            rows = np.flatnonzero(col == v)
            values = v * s + (np.arange(s) if rng is None
                              else rng.permutation(s))
            out[rows, j] = values
    return LatinHypercube(out)


def _relabel_by_first_occurrence(col: np.ndarray) -> tuple[int, ...]:
    """Canonical form of a column under level bijections."""
    mapping: dict[int, int] = {}
    return tuple(mapping.setdefault(int(v), len(mapping)) for v in col)


def is_cascading_pair(c1, c2) -> bool:
    """True iff the two columns are equal up to a bijective relabeling of
    levels, i.e. they induce the same partition of rows.  Cascading columns
    carry duplicated information and disqualify a quantitative design."""
    a = np.asarray(c1).ravel()
    b = np.asarray(c2).ravel()
    if len(a) != len(b):
        raise LengthMismatchError(
            f"columns have different lengths {len(a)} and {len(b)}")
    return (_relabel_by_first_occurrence(a)
            == _relabel_by_first_occurrence(b))
