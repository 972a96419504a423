"""Constructions of marginally coupled designs with s^u runs.

All constructions share one mechanism.  Pick vectors z_1..z_m (qualitative
side) and x_1..x_k (quantitative side) in GF(s)^u such that z_i^T x_j != 0
for every pair.  The z's, as generator columns, produce the s-level array
D1 = (lambda^T z_1, ..., lambda^T z_m) over all s^u coefficient vectors
lambda.  Each x_j contributes one quantitative column: the u-1 canonical
basis vectors of the null space O(x_j) = {y : y^T x_j = 0} generate an
s^(u-1)-level full factorial, whose rows are base-s encoded into a single
column d_j with s^(u-1) levels; level replacement then expands the d's
into a Latin hypercube D2.  The pairing condition makes every
(D1 column, d_j) pair a strength-2 mixed orthogonal array -- which is
exactly the marginal-coupling property -- and distinct null spaces keep
the d's non-cascading.

The named constructions differ only in which vectors they pick:

* ``direct_construction``: unit vectors e_1..e_u1 against the whole
  admissible set A (all vectors with first entry 1 and entries 2..u1
  nonzero); item "i" puts the units on the qualitative side, item "ii"
  swaps the roles.
* ``subspace_construction``: scales the qualitative side up or down by
  trading columns between E = span(e_1..e_u1) and A.  A is partitioned
  into groups A_i by first-u1 prefix b_i; choosing v prefixes whose
  vectors are u1-wise independent leaves the common non-orthogonal set
  (the E members orthogonal to none of the chosen prefixes) as the other
  side's generators.
* ``anti_mirror_construction`` (s=2 only): like the subspace construction
  at v=1, but the generator matrix of each O(x_i) is forced to lead with
  eta_i = (1, 1, 0...0, complement of the tail of x_i), which buys a
  2x2x2 grid guarantee on every triple of quantitative columns.
* ``stratified_generator_choice``: picks pairwise non-proportional leading
  generator columns across the x's, buying an s x s grid guarantee on
  every pair of quantitative columns.

``general_construction`` is the open variant: any vectors, any explicit
generator overrides, every precondition checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import comb

import numpy as np

from .designs import (
    IDENTITY_SEED,
    CollapsedDesign,
    OrthogonalArray,
    Seed,
    expand_levels,
    method_of_replacement,
)
from .errors import (
    BadParamsError,
    NotApplicableError,
    OrthogonalityViolationError,
    ProportionalVectorsError,
    TooManyColumnsError,
    UnsupportedFieldError,
    VOutOfRangeError,
    ZeroVectorError,
)
from .gf import GaloisField, galois_field
from .linalg import (
    Vector,
    dot,
    enumerate_span,
    enumerate_tuples,
    extend_to_basis,
    generate_linear_array,
    is_proportional,
    is_zero,
    linear_strength,
    normalize_direction,
    orthogonal_complement_basis,
    rank,
    unit_vector,
)

# ---------------------------------------------------------------------------
# vector families
# ---------------------------------------------------------------------------


def unit_combinations(field: GaloisField, u: int, u1: int) -> list[Vector]:
    """E: all s^u1 linear combinations of e_1..e_u1, as length-u vectors,
    coefficients in base-s order."""
    _check_u_u1(field, u, u1)
    return [lam + (0,) * (u - u1) for lam in enumerate_tuples(field, u1)]


@dataclass(frozen=True)
class AdmissibleSet:
    """All vectors of GF(s)^u with first entry 1 and entries 2..u1 nonzero,
    in base-s order.  Size (s-1)^(u1-1) * s^(u-u1)."""

    field: GaloisField
    u: int
    u1: int
    vectors: tuple[Vector, ...]

    @property
    def size(self) -> int:
        return len(self.vectors)


def admissible_set(field: GaloisField, u: int, u1: int) -> AdmissibleSet:
    _check_u_u1(field, u, u1)
    vecs = tuple(
        v for v in enumerate_tuples(field, u)
        if v[0] == 1 and all(v[i] != 0 for i in range(1, u1)))
    return AdmissibleSet(field, u, u1, vecs)


@dataclass(frozen=True)
class AdmissiblePartition:
    """The admissible set split into groups sharing a first-u1 prefix.

    Prefixes (the b_i, length u1) appear in base-s order; each group holds
    the s^(u-u1) members with that prefix, still in base-s order.
    """

    field: GaloisField
    u: int
    u1: int
    prefixes: tuple[Vector, ...]
    groups: tuple[tuple[Vector, ...], ...]

    @property
    def group_count(self) -> int:
        return len(self.prefixes)


def partition_admissible(aset: AdmissibleSet) -> AdmissiblePartition:
    """Group A by prefix.  Because the free coordinates are least
    significant in base-s order, groups are consecutive equal-size blocks."""
    block = aset.field.s ** (aset.u - aset.u1)
    groups = tuple(aset.vectors[i:i + block]
                   for i in range(0, len(aset.vectors), block))
    prefixes = tuple(g[0][:aset.u1] for g in groups)
    for pref, grp in zip(prefixes, groups):
        assert all(v[:aset.u1] == pref for v in grp)
    return AdmissiblePartition(aset.field, aset.u, aset.u1, prefixes, groups)


@dataclass(frozen=True)
class NonorthogonalSet:
    """The E members not orthogonal to one partition prefix."""

    prefix_index: int
    vectors: tuple[Vector, ...]

    @property
    def size(self) -> int:
        return len(self.vectors)


def _extended_prefix(part: AdmissiblePartition, index: int) -> Vector:
    return part.prefixes[index] + (0,) * (part.u - part.u1)


def nonorthogonal_combos(part: AdmissiblePartition, index: int) -> NonorthogonalSet:
    """Ebar_i: the members of E with nonzero dot product against prefix i.
    Always (s-1) * s^(u1-1) of them."""
    if not 0 <= index < part.group_count:
        raise BadParamsError(
            f"prefix index {index} outside 0..{part.group_count - 1}")
    b = _extended_prefix(part, index)
    f = part.field
    vecs = tuple(z for z in unit_combinations(f, part.u, part.u1)
                 if dot(f, z, b) != 0)
    return NonorthogonalSet(index, vecs)


@dataclass(frozen=True)
class NonorthogonalIntersection:
    """Common non-orthogonal set over several prefixes.

    ``vectors`` is the full intersection of the Ebar_i (size f),
    ``normalized`` keeps only members whose first nonzero entry is 1 --
    one per direction (size g = f / (s-1)).  ``expected_size`` carries the
    closed-form prediction when the chosen prefixes satisfy its
    independence hypothesis, else None.
    """

    prefix_indices: tuple[int, ...]
    vectors: tuple[Vector, ...]
    normalized: tuple[Vector, ...]
    expected_size: int | None
    prefixes_independent: bool

    @property
    def size(self) -> int:
        return len(self.vectors)

    @property
    def normalized_size(self) -> int:
        return len(self.normalized)


def expected_intersection_size(s: int, u1: int, v: int) -> int:
    """Closed-form size of the common non-orthogonal set over v prefixes
    that are min(v, u1)-wise independent: (s-1)^v s^(u1-v) for v <= u1,
    and the alternating binomial sum (rank saturates at u1) beyond."""
    if v < 1:
        raise VOutOfRangeError(f"v must be at least 1, got {v}")
    if v <= u1:
        return (s - 1) ** v * s ** (u1 - v)
    head = sum((-1) ** i * comb(v, i) * s ** (u1 - i) for i in range(u1 + 1))
    tail = sum((-1) ** i * comb(v, i) for i in range(u1 + 1, v + 1))
    return head + tail


def _prefixes_u1_wise_independent(field: GaloisField,
                                  prefixes: list[Vector], u1: int) -> bool:
    v = len(prefixes)
    if v <= u1:
        return rank(field, prefixes) == v
    # early-exits on the first dependent u1-subset (lex order)
    return all(rank(field, [prefixes[i] for i in sub]) == u1
               for sub in combinations(range(v), u1))


def common_nonorthogonal(part: AdmissiblePartition,
                         prefix_indices) -> NonorthogonalIntersection:
    """Intersection of Ebar_i over the chosen prefixes, with its
    leading-1 (normalized) members and the closed-form prediction."""
    indices = tuple(int(i) for i in prefix_indices)
    if not indices:
        raise BadParamsError("need at least one prefix index")
    if len(set(indices)) != len(indices):
        raise BadParamsError(f"duplicate prefix indices in {indices}")
    for i in indices:
        if not 0 <= i < part.group_count:
            raise BadParamsError(
                f"prefix index {i} outside 0..{part.group_count - 1}")
    f = part.field
    extended = [_extended_prefix(part, i) for i in indices]
    members = tuple(
        z for z in unit_combinations(f, part.u, part.u1)
        if all(dot(f, z, b) != 0 for b in extended))
    normalized = tuple(z for z in members
                       if normalize_direction(f, z) == z)
    independent = _prefixes_u1_wise_independent(
        f, [part.prefixes[i] for i in indices], part.u1)
    expected = (expected_intersection_size(f.s, part.u1, len(indices))
                if independent else None)
    return NonorthogonalIntersection(indices, members, normalized,
                                     expected, independent)


# ---------------------------------------------------------------------------
# prefix capacity: how many groups can be traded at once
# ---------------------------------------------------------------------------


def prefix_matrix(field: GaloisField, u1: int) -> np.ndarray:
    """The u1 x 2^(u1-1) matrix whose columns are the candidate prefixes
    over {1, 2}: column j is (1, binary digits of j, most significant
    first, each digit + 1).  Defined for order-3 fields only."""
    if field.s != 3:
        raise UnsupportedFieldError(
            f"prefix matrix is defined for GF(3), got GF({field.s})")
    if u1 < 1:
        raise BadParamsError(f"u1 must be at least 1, got {u1}")
    cols = []
    for j in range(2 ** (u1 - 1)):
        bits = [(j >> (u1 - 2 - i)) & 1 for i in range(u1 - 1)]
        cols.append([1] + [b + 1 for b in bits])
    return np.array(cols, dtype=np.int64).T


def independent_prefix_bound(s: int, u1: int) -> int:
    """Upper bound on the number of prefixes with every u1 of them
    linearly independent.  Exact for u1 = 1, s = 2, and u1 = 2."""
    if u1 < 1:
        raise BadParamsError(f"u1 must be at least 1, got {u1}")
    if u1 == 1 or s == 2:
        return 1
    if u1 == 2:
        return s - 1
    if s <= u1:
        return u1 + 1
    if s % 2 == 1:
        return s + u1 - 2
    return s + u1 - 1


@dataclass(frozen=True)
class PrefixSearch:
    """Result of the maximum independent-prefix search.

    ``labels`` index the partition prefixes (base-s order over the
    nonzero tail digits); ``certified`` is "provably-maximal" when the
    search either reached the closed-form bound or exhausted the whole
    candidate space, else "maximal-within-search".
    """

    s: int
    u1: int
    labels: tuple[int, ...]
    prefixes: tuple[Vector, ...]
    bound: int
    certified: str

    @property
    def size(self) -> int:
        return len(self.labels)


_SEARCH_NODE_BUDGET = 1 << 20


def max_independent_prefixes(field: GaloisField, u1: int) -> PrefixSearch:
    """Deterministic branch-and-bound for a maximum set of prefixes with
    every min(size, u1)-subset linearly independent.

    Candidates are scanned in label order, so the returned label set is
    the first maximum found and is stable across runs.  The search prunes
    with the closed-form bound and stops as soon as the bound is attained.
    """
    s = field.s
    if u1 < 1:
        raise BadParamsError(f"u1 must be at least 1, got {u1}")
    cands: list[Vector] = [(1,) + tail for tail in
                           product(range(1, s), repeat=u1 - 1)]
    bound = independent_prefix_bound(s, u1)
    best: list[int] = []
    nodes = 0
    exhausted = True

    def can_add(sel: list[int], c: int) -> bool:
        new = cands[c]
        if len(sel) + 1 <= u1:
            return rank(field, [cands[i] for i in sel] + [new]) == len(sel) + 1
        return all(
            rank(field, [cands[i] for i in sub] + [new]) == u1
            for sub in combinations(sel, u1 - 1))

    def dfs(start: int, sel: list[int]) -> bool:
        nonlocal best, nodes, exhausted
        if len(sel) > len(best):
            best = list(sel)
            if len(best) >= bound:
                return True
        for c in range(start, len(cands)):
            nodes += 1
            if nodes > _SEARCH_NODE_BUDGET:
                exhausted = False
                return True
            if len(sel) + (len(cands) - c) <= len(best):
                break
            if can_add(sel, c):
                sel.append(c)
                done = dfs(c + 1, sel)
                sel.pop()
                if done:
                    return True
        return False

    dfs(0, [])
    certified = ("provably-maximal" if len(best) == bound or exhausted
                 else "maximal-within-search")
    labels = tuple(best)
    return PrefixSearch(s, u1, labels,
                        tuple(cands[i] for i in labels), bound, certified)


@lru_cache(maxsize=None)
def _cached_prefix_search(s: int, u1: int) -> PrefixSearch:
    return max_independent_prefixes(galois_field(s), u1)


# ---------------------------------------------------------------------------
# pairing witness
# ---------------------------------------------------------------------------


def orthogonal_witness(field: GaloisField, u: int, u1: int, z) -> Vector:
    """For z in E with at least two nonzero coefficients, produce an
    admissible x with z^T x = 0 -- the witness that such z cannot join the
    qualitative side when the whole admissible set is in play.

    With nz the nonzero coordinate positions of z and lam* the sum of all
    but the last nonzero coefficient: if lam* != 0, set x[last] =
    -z[last]^(-1) lam* and everything else 1.  Otherwise (needs >= 3
    nonzero entries) set x[second-last] to the element of index 2 and
    x[last] = -z[last]^(-1) z[second-last] (alpha2 - 1).
    """
    _check_u_u1(field, u, u1)
    if field.s < 3:
        raise NotApplicableError("witness construction needs s >= 3")
    z = tuple(int(c) for c in z)
    if len(z) != u:
        raise BadParamsError(f"z must have length {u}")
    if any(z[i] != 0 for i in range(u1, u)):
        raise NotApplicableError(
            "z lies outside the span of the first u1 unit vectors")
    nz = [i for i in range(u1) if z[i] != 0]
    if len(nz) < 2:
        raise NotApplicableError(
            "z needs at least two nonzero coefficients")
    last = nz[-1]
    lam_star = 0
    for i in nz[:-1]:
        lam_star = field.add(lam_star, z[i])
    x = [1] * u
    if lam_star != 0:
        x[last] = field.neg(field.mul(field.inv(z[last]), lam_star))
    else:
        second = nz[-2]
        alpha2 = 2
        x[second] = alpha2
        x[last] = field.neg(field.mul(
            field.inv(z[last]),
            field.mul(z[second], field.sub(alpha2, 1))))
    witness = tuple(x)
    assert dot(field, z, witness) == 0
    return witness


# ---------------------------------------------------------------------------
# the constructions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConstructionParams:
    s: int
    u: int
    u1: int | None = None
    v: int | None = None
    item: str | None = None
    seed: Seed = IDENTITY_SEED


@dataclass(frozen=True)
class Provenance:
    """What produced the design: method tag plus the chosen vectors."""

    method: str
    z_vectors: tuple[Vector, ...]
    x_vectors: tuple[Vector, ...]
    generator_columns: tuple[tuple[Vector, ...], ...]


@dataclass(eq=False)
class MarginallyCoupledDesign:
    """A verified-or-verifiable bundle: s-level D1, Latin hypercube D2,
    and the collapsed form of D2 the construction actually built."""

    d1: OrthogonalArray
    d2: LatinHypercube
    collapsed: CollapsedDesign
    params: ConstructionParams
    provenance: Provenance

    def full_verification(self):
        from .verify import check_mcd, check_noncascading

        report = check_mcd(self.d1, self.d2, self.params.s)
        return report.merged_with(check_noncascading(self.collapsed))


def _check_u_u1(field: GaloisField, u: int, u1: int) -> None:
    if u < 1:
        raise BadParamsError(f"u must be at least 1, got {u}")
    if not 1 <= u1 <= u:
        raise BadParamsError(f"u1 must lie in 1..{u}, got {u1}")


def _as_vectors(field: GaloisField, vecs, label: str) -> list[Vector]:
    out = []
    for i, v in enumerate(vecs):
        vec = tuple(int(c) for c in v)
        if any(not 0 <= c < field.s for c in vec):
            raise BadParamsError(
                f"{label} vector {i} has entries outside GF({field.s})")
        out.append(vec)
    return out


def general_construction(field: GaloisField, z_list, x_list,
                         seed: Seed = IDENTITY_SEED,
                         generator_overrides: dict[int, tuple] | None = None,
                         method: str = "general",
                         params: ConstructionParams | None = None,
                         ) -> MarginallyCoupledDesign:
    """Build an MCD from explicit vectors.  Checks every precondition:
    equal dimensions, no zero or pairwise-proportional vectors on either
    side, and z_i^T x_j != 0 for every pair (all offending pairs listed).

    ``generator_overrides`` maps an x index to an explicit tuple of u-1
    generator columns for its null space (each must be orthogonal to that
    x and the tuple linearly independent); unlisted x's use the canonical
    null-space basis.
    """
    zs = _as_vectors(field, z_list, "z")
    xs = _as_vectors(field, x_list, "x")
    if not zs or not xs:
        raise BadParamsError("need at least one z and one x vector")
    u = len(zs[0])
    if any(len(v) != u for v in zs + xs):
        raise BadParamsError("all z and x vectors must share one dimension")
    if u < 2:
        raise BadParamsError("construction needs u >= 2")
    for label, vecs in (("z", zs), ("x", xs)):
        for i, v in enumerate(vecs):
            if is_zero(v):
                raise ZeroVectorError(f"{label} vector {i} is zero")
        for i, j in combinations(range(len(vecs)), 2):
            if is_proportional(field, vecs[i], vecs[j]):
                raise ProportionalVectorsError(
                    f"{label} vectors {i} and {j} are proportional")
    clashes = [(i, j) for i, z in enumerate(zs) for j, x in enumerate(xs)
               if dot(field, z, x) == 0]
    if clashes:
        raise OrthogonalityViolationError(
            "z^T x = 0 for (z index, x index) pairs: "
            + ", ".join(map(str, clashes)))

    s = field.s
    d1 = OrthogonalArray(
        generate_linear_array(field, zs), (s,) * len(zs),
        certified_strength=linear_strength(field, zs))

    overrides = generator_overrides or {}
    for j in overrides:
        if not 0 <= j < len(xs):
            raise BadParamsError(f"generator override for unknown x index {j}")
    gens: list[tuple[Vector, ...]] = []
    for j, x in enumerate(xs):
        if j in overrides:
            cols = _as_vectors(field, overrides[j], f"generator[{j}]")
            if len(cols) != u - 1 or any(len(c) != u for c in cols):
                raise BadParamsError(
                    f"override for x {j} must be {u - 1} columns of length {u}")
            bad = [c for c in cols if dot(field, c, x) != 0]
            if bad:
                raise BadParamsError(
                    f"override column {bad[0]} is not orthogonal to x {j}")
            if rank(field, cols) != u - 1:
                raise BadParamsError(
                    f"override columns for x {j} are linearly dependent")
            gens.append(tuple(cols))
        else:
            gens.append(orthogonal_complement_basis(field, x).vectors)

    tilde = np.stack(
        [method_of_replacement(generate_linear_array(field, cols), s)
         for cols in gens], axis=1)
    collapsed = CollapsedDesign(s, tilde)
    d2 = expand_levels(collapsed, s, seed)
    return MarginallyCoupledDesign(
        d1, d2, collapsed,
        params or ConstructionParams(s=s, u=u, seed=seed),
        Provenance(method, tuple(zs), tuple(xs), tuple(gens)))


def _item_sides(item: str, primary: list[Vector],
                secondary: list[Vector]) -> tuple[list[Vector], list[Vector]]:
    if item == "i":
        return primary, secondary
    if item == "ii":
        return secondary, primary
    raise BadParamsError(f"item must be 'i' or 'ii', got {item!r}")


def direct_construction(field: GaloisField, u: int, u1: int, item: str = "i",
                        seed: Seed = IDENTITY_SEED) -> MarginallyCoupledDesign:
    """Unit vectors against the whole admissible set.

    item "i":  D1 from e_1..e_u1 (strength u1), D2 with |A| columns.
    item "ii": D1 from A (strength 2), D2 with u1 columns.
    """
    _check_u_u1(field, u, u1)
    if u < 2:
        raise BadParamsError("construction needs u >= 2")
    units = [unit_vector(u, i) for i in range(u1)]
    avecs = list(admissible_set(field, u, u1).vectors)
    zs, xs = _item_sides(item, units, avecs)
    params = ConstructionParams(field.s, u, u1, None, item, seed)
    return general_construction(field, zs, xs, seed,
                                method="theorem1", params=params)


def subspace_construction(field: GaloisField, u: int, u1: int, v: int,
                          item: str = "i",
                          seed: Seed = IDENTITY_SEED) -> MarginallyCoupledDesign:
    """Trade v admissible groups against the common non-orthogonal subset
    of E.  Uses the first v labels of the deterministic maximum prefix
    search; v must lie in 1..n* (the search size).

    item "i":  D1 from the g(v) normalized common members, D2 with
               v * s^(u-u1) columns.
    item "ii": the swap.
    """
    _check_u_u1(field, u, u1)
    if u < 2:
        raise BadParamsError("construction needs u >= 2")
    search = _cached_prefix_search(field.s, u1)
    if not 1 <= v <= search.size:
        raise VOutOfRangeError(
            f"v={v} outside 1..{search.size} for s={field.s}, u1={u1}")
    part = partition_admissible(admissible_set(field, u, u1))
    chosen = search.labels[:v]
    inter = common_nonorthogonal(part, chosen)
    estar = list(inter.normalized)
    astar = [x for i in chosen for x in part.groups[i]]
    zs, xs = _item_sides(item, estar, astar)
    params = ConstructionParams(field.s, u, u1, v, item, seed)
    return general_construction(field, zs, xs, seed,
                                method="theorem2", params=params)


def anti_mirror_construction(u: int, u1: int,
                             seed: Seed = IDENTITY_SEED) -> MarginallyCoupledDesign:
    """Two-level subspace construction (v=1) with anti-mirrored generator
    leads: x_i = (1..1, y_i) over all tails y_i, and the generator matrix
    of O(x_i) is forced to open with eta_i = (1, 1, 0..0, complement of
    y_i).  Every triple of quantitative columns then spreads one point
    per octant of the 2x2x2 grid.  Requires 2 <= u1 < u-1.
    """
    field = galois_field(2)
    if not 2 <= u1 < u - 1:
        raise BadParamsError(
            f"anti-mirror arrangement needs 2 <= u1 < u-1, "
            f"got u1={u1}, u={u}")
    tails = list(product(range(2), repeat=u - u1))
    xs = [(1,) * u1 + tail for tail in tails]
    overrides: dict[int, tuple] = {}
    for j, tail in enumerate(tails):
        eta = (1, 1) + (0,) * (u1 - 2) + tuple(1 - b for b in tail)
        assert dot(field, eta, xs[j]) == 0
        overrides[j] = extend_to_basis(field, xs[j], [eta])
    part = partition_admissible(admissible_set(field, u, u1))
    zs = list(common_nonorthogonal(part, (0,)).normalized)
    params = ConstructionParams(2, u, u1, 1, None, seed)
    return general_construction(field, zs, xs, seed,
                                generator_overrides=overrides,
                                method="anti-mirror", params=params)


def stratified_generator_choice(field: GaloisField,
                                x_list) -> list[tuple[Vector, ...]]:
    """Choose generator matrices whose leading columns are pairwise
    non-proportional across the x's: the leading base-s digits of the
    quantitative columns then form a strength-2 s-level array, i.e. every
    pair of quantitative columns spreads evenly over the s x s grid.

    At most (s^(u-1) - 1) / (s - 1) columns can be served (one direction
    each); beyond that TooManyColumnsError is raised.  Greedy over each
    null space's normalized members in base-s order, so deterministic.
    """
    xs = _as_vectors(field, x_list, "x")
    if not xs:
        raise BadParamsError("need at least one x vector")
    u = len(xs[0])
    if any(len(x) != u for x in xs):
        raise BadParamsError("all x vectors must share one dimension")
    if u < 2:
        raise BadParamsError("needs u >= 2")
    for i, x in enumerate(xs):
        if is_zero(x):
            raise ZeroVectorError(f"x vector {i} is zero")
    for i, j in combinations(range(len(xs)), 2):
        if is_proportional(field, xs[i], xs[j]):
            raise ProportionalVectorsError(
                f"x vectors {i} and {j} are proportional")
    s = field.s
    capacity = (s ** (u - 1) - 1) // (s - 1)
    if len(xs) > capacity:
        raise TooManyColumnsError(
            f"{len(xs)} columns requested but only {capacity} pairwise "
            f"non-proportional directions exist in a {u - 1}-dimensional "
            f"null space")
    used: set[Vector] = set()
    result: list[tuple[Vector, ...]] = []
    for x in xs:
        members = enumerate_span(orthogonal_complement_basis(field, x))
        lead = next(w for w in members
                    if not is_zero(w)
                    and normalize_direction(field, w) == w
                    and w not in used)
        used.add(lead)
        result.append(extend_to_basis(field, x, [lead]))
    return result
