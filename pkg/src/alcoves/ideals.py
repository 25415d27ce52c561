"""Abelian ideals of the Borel subalgebra, as subsets of positive roots.

An abelian ideal is an upper set of the positive-root poset (closed under
adding any simple root that yields a root) in which no two members sum to
a root.  Enumeration is a depth-first search over roots in decreasing
height with closure and commutativity pruning; the power-of-two count is
asserted by callers, never assumed by the generator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, gcd

from .alcove import AffineElement, enumerate_dominant, in_wf2
from .rootsystem import KILLING_SCALE, RootSystem, weyl_dimension


@dataclass(frozen=True)
class AbelianIdeal:
    """A set of positive-root indices with its weight sum."""

    roots: frozenset
    lam: tuple

    @property
    def k(self) -> int:
        return len(self.roots)


def _root_sum_weight(rs: RootSystem, indices) -> tuple:
    coords = [0] * rs.rank
    for idx in indices:
        for i, c in enumerate(rs.positive_roots[idx]):
            coords[i] += c
    return tuple(rs.root_coords_to_weight(coords))


@lru_cache(maxsize=None)
def _poset_tables(rs: RootSystem):
    """Cover relations (adding one simple root) and root-sum table."""
    index = {c: i for i, c in enumerate(rs.positive_roots)}
    covers = []
    for c in rs.positive_roots:
        ups = []
        for i in range(rs.rank):
            up = list(c)
            up[i] += 1
            j = index.get(tuple(up))
            if j is not None:
                ups.append(j)
        covers.append(tuple(ups))
    m = rs.num_positive
    sum_is_root = [[False] * m for _ in range(m)]
    for a in range(m):
        for b in range(m):
            s = tuple(x + y for x, y in
                      zip(rs.positive_roots[a], rs.positive_roots[b]))
            sum_is_root[a][b] = s in index
    return covers, sum_is_root


def is_ideal(rs: RootSystem, indices) -> bool:
    covers, _ = _poset_tables(rs)
    s = set(indices)
    return all(up in s for idx in s for up in covers[idx])


def is_abelian(rs: RootSystem, indices) -> bool:
    _, sum_is_root = _poset_tables(rs)
    idxs = list(indices)
    return not any(sum_is_root[a][b] for a, b in combinations(idxs, 2))


@lru_cache(maxsize=None)
def enumerate_abelian_ideals(rs: RootSystem) -> tuple:
    """All abelian ideals, sorted by size then by weight.

    The DFS decides membership root by root in decreasing height, so the
    covers of a root are always settled before the root itself: inclusion
    is allowed only when every cover is already in and no commutativity
    conflict arises with the members so far.
    """
    covers, sum_is_root = _poset_tables(rs)
    order = sorted(range(rs.num_positive),
                   key=lambda i: (-rs.root_height(i), rs.positive_roots[i]))
    found = []
    chosen = []
    chosen_set = set()

    def dfs(t: int):
        if t == len(order):
            found.append(frozenset(chosen))
            return
        dfs(t + 1)
        idx = order[t]
        if all(up in chosen_set for up in covers[idx]) and \
                not any(sum_is_root[idx][b] for b in chosen):
            chosen.append(idx)
            chosen_set.add(idx)
            dfs(t + 1)
            chosen.pop()
            chosen_set.remove(idx)

    dfs(0)
    ideals = [AbelianIdeal(roots=s, lam=_root_sum_weight(rs, s)) for s in found]
    ideals.sort(key=lambda xi: (xi.k, xi.lam))
    return tuple(ideals)


def max_abelian_dimension(rs: RootSystem) -> int:
    return max(xi.k for xi in enumerate_abelian_ideals(rs))


@lru_cache(maxsize=None)
def _wf2_by_nvec(rs: RootSystem):
    """Indicator-vector lookup table for the alcoves inside 2*A1.

    Wall counts in {0, 1} force the length to equal the number of ones,
    so enumerating up to the maximal abelian-ideal size is exhaustive for
    the indicator vectors we ever look up.
    """
    bound = max_abelian_dimension(rs)
    return {e.n_vec: e for e in enumerate_dominant(rs, bound) if in_wf2(rs, e)}


def ideal_to_sigma(rs: RootSystem, xi: AbelianIdeal) -> AffineElement:
    """The unique dominant alcove whose wall counts are the indicator of
    the ideal's root set."""
    indicator = tuple(int(i in xi.roots) for i in range(rs.num_positive))
    table = _wf2_by_nvec(rs)
    e = table.get(indicator)
    if e is None:
        raise LookupError(f"no alcove matches the ideal with weight {xi.lam}")
    return e


def sigma_to_ideal(rs: RootSystem, e: AffineElement) -> AbelianIdeal:
    """Inverse direction; rejects alcoves outside 2*A1."""
    if not in_wf2(rs, e):
        raise ValueError("alcove does not lie in twice the fundamental alcove")
    roots = frozenset(i for i, n in enumerate(e.n_vec) if n == 1)
    if not is_ideal(rs, roots) or not is_abelian(rs, roots):
        raise AssertionError("wall-count support is not an abelian ideal")
    return AbelianIdeal(roots=roots, lam=_root_sum_weight(rs, roots))


def dim_Ck(rs: RootSystem, k: int) -> int:
    """Dimension of the span of all k-fold wedges of k-dimensional abelian
    subalgebras: the sum of Weyl dimensions over size-k abelian ideals."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return sum(weyl_dimension(rs, xi.lam)
               for xi in enumerate_abelian_ideals(rs) if xi.k == k)


@lru_cache(maxsize=None)
def _pairing_tables(rs: RootSystem):
    """Integer tables for the shifted norm excess.

    Returns (P, R, unit) with P[a][b] and R[a] the root pairings and
    two-rho pairings scaled to integers; the Killing excess of a multiset
    Phi is (sum_{a,b} P + sum_a R) / unit, so `excess <= k` is the integer
    comparison against k * unit.
    """
    m = rs.num_positive
    pairs = [[rs.pair_roots_std(rs.positive_roots[a], rs.positive_roots[b])
              for b in range(m)] for a in range(m)]
    rho_pairs = [rs.pair_roots_std(rs.two_rho, rs.positive_roots[a])
                 for a in range(m)]
    denom = 1
    for row in pairs:
        for v in row:
            d = Fraction(v).denominator
            denom = denom * d // gcd(denom, d)
    P = tuple(tuple(int(v * denom) for v in row) for row in pairs)
    R = tuple(int(Fraction(v) * denom) for v in rho_pairs)
    return P, R, denom * KILLING_SCALE(rs)


def _shifted_norm_excess(rs: RootSystem, indices) -> Fraction:
    """|rho + sum(Phi)|^2 - |rho|^2 in the Killing normalization, for a
    multiset of positive-root indices."""
    P, R, unit = _pairing_tables(rs)
    idx = list(indices)
    total = sum(R[a] for a in idx)
    total += sum(P[a][b] for a in idx for b in idx)
    return Fraction(total, unit)


def verify_subset_bound(rs: RootSystem, k: int, max_candidates: int = 2_000_000) -> dict:
    """Sweep all k-subsets of positive roots: the shifted norm excess never
    exceeds k, with equality exactly on the abelian-ideal root sets."""
    total = comb(rs.num_positive, k)
    if total > max_candidates:
        raise ValueError(f"{total} subsets exceed the ceiling {max_candidates}")
    P, R, unit = _pairing_tables(rs)
    bound = k * unit
    violations = []
    equality = set()
    for subset in combinations(range(rs.num_positive), k):
        acc = 0
        for i, a in enumerate(subset):
            acc += R[a] + P[a][a]
            row = P[a]
            for b in subset[i + 1:]:
                acc += 2 * row[b]
        if acc > bound:
            violations.append(subset)
        elif acc == bound:
            equality.add(frozenset(subset))
    expected = {xi.roots for xi in enumerate_abelian_ideals(rs) if xi.k == k}
    return {
        "subsets": total,
        "violations": violations,
        "equality_sets": equality,
        "expected_equality_sets": expected,
        "ok": not violations and equality == expected,
    }


def _partitions_with_budget(m: int, budget: int):
    """All vectors q in Z_+^m with sum q_i (q_i + 1) / 2 <= budget."""
    q = [0] * m

    def rec(pos: int, remaining: int):
        if pos == m:
            yield tuple(q)
            return
        v = 0
        while True:
            cost = v * (v + 1) // 2
            if cost > remaining:
                break
            q[pos] = v
            yield from rec(pos + 1, remaining - cost)
            v += 1
        q[pos] = 0

    yield from rec(0, budget)


def verify_root_partition_bound(rs: RootSystem, cas_ceiling: int,
                                max_candidates: int = 2_000_000) -> dict:
    """Sweep positive-root partitions q with triangular cost <= ceiling:
    the cost dominates the shifted norm excess of the assembled vector,
    with equality exactly on the wall-count vectors of dominant alcoves."""
    P, R, unit = _pairing_tables(rs)
    count = 0
    violations = []
    equality = set()
    for q in _partitions_with_budget(rs.num_positive, cas_ceiling):
        count += 1
        if count > max_candidates:
            raise ValueError(f"partition sweep exceeded ceiling {max_candidates}")
        cost = sum(v * (v + 1) // 2 for v in q)
        excess = sum(R[a] * v for a, v in enumerate(q) if v)
        excess += sum(q[a] * q[b] * P[a][b]
                      for a in range(len(q)) if q[a]
                      for b in range(len(q)) if q[b])
        if cost * unit < excess:
            violations.append(q)
        elif cost * unit == excess:
            equality.add(q)
    expected = {e.n_vec for e in enumerate_dominant(rs, cas_ceiling)
                if e.cas <= cas_ceiling}
    return {
        "partitions": count,
        "violations": violations,
        "equality_sets": equality,
        "expected_equality_sets": expected,
        "ok": not violations and equality == expected,
    }
