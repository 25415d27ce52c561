"""Dominant alcoves of the affine Weyl group, enumerated by length.

A point x of the Cartan subalgebra is carried as the vector of exact
rational values (alpha_1(x), ..., alpha_l(x)); a root phi = sum c_i alpha_i
then evaluates as sum c_i alpha_i(x), and the affine walls are the integer
level sets of these evaluations.  The base point x0 is the image of 2*rho
under the Killing identification, so alpha_i(x0) = (alpha_i, alpha_i)_std
divided by 2*h_dual.  Tracking sigma(x0) across the group action yields,
for each dominant alcove:

* the wall-crossing counts n_phi (floors of the root evaluations),
* the length (their sum),
* the distinguished dominant weight with 2*(lambda + rho) = sigma(2*rho),
* its Casimir eigenvalue, the triangular-number sum of the n_phi.

Breadth-first search over right multiplication by the l + 1 affine simple
reflections visits every dominant alcove exactly once: the open dominant
chamber is convex, so a dominant alcove of length n + 1 always has a
dominant facet neighbor of length n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .rootsystem import RootSystem


@dataclass(frozen=True)
class AffineElement:
    """One dominant alcove, with its affine transformation x -> w(x) + z.

    `w` is the linear part as an integer matrix acting on evaluation
    vectors; `z` has integer coordinates in the coroot basis.  `x` is the
    tracked point sigma(x0), `n_vec` the wall counts in the fixed
    positive-root order, `lam` the alcove weight in fundamental
    coordinates and `cas` its (integer) Casimir eigenvalue.
    """

    x: tuple
    w: tuple
    z: tuple
    n_vec: tuple
    length: int
    lam: tuple
    cas: int


def evaluate_root(coords, point) -> Fraction:
    return sum(c * point[i] for i, c in enumerate(coords) if c)


def weight_point(rs: RootSystem, weight) -> tuple:
    """Point of the Cartan whose Killing pairing with roots matches `weight`."""
    d = rs.simple_norm_halves
    scale = 2 * rs.h_dual
    return tuple(Fraction(d[i] * weight[i], scale) for i in range(rs.rank))


def point_weight(rs: RootSystem, point) -> tuple:
    """Inverse of weight_point; exact rational fundamental coordinates."""
    d = rs.simple_norm_halves
    scale = 2 * rs.h_dual
    return tuple(point[i] * scale / d[i] for i in range(rs.rank))


def _generators(rs: RootSystem):
    """The l + 1 affine simple reflections as (matrix, translation) pairs
    acting on evaluation vectors."""
    l = rs.rank
    gens = []
    for i in range(l):
        mat = tuple(tuple((1 if j == k else 0) - (rs.cartan[i][j] if k == i else 0)
                          for k in range(l)) for j in range(l))
        gens.append((mat, (0,) * l))
    psi = rs.positive_roots[rs.highest_root]
    pv = rs.psi_coroot_values
    mat = tuple(tuple((1 if j == k else 0) - pv[j] * psi[k] for k in range(l))
                for j in range(l))
    gens.append((mat, pv))
    return tuple(gens)


def _mat_mul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
                 for i in range(n))


def _mat_vec(a, v):
    return tuple(sum(row[k] * v[k] for k in range(len(v))) for row in a)


def _vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _element_from_map(rs: RootSystem, w, tvec) -> AffineElement:
    x = _vec_add(_mat_vec(w, rs.x0), tvec)
    n_vec = tuple(math.floor(evaluate_root(c, x)) for c in rs.positive_roots)
    length = sum(n_vec)
    lam = []
    for i in range(rs.rank):
        m = rs.h_dual * x[i] / rs.simple_norm_halves[i] - 1
        if m.denominator != 1:
            raise AssertionError("alcove weight is not integral")
        lam.append(int(m))
    cas = sum(n * (n + 1) // 2 for n in n_vec)
    # Coroot coordinates of the translation part: solve t = cartan^T * z.
    inv = rs.cartan_inv
    z = []
    for i in range(rs.rank):
        zi = sum(inv[j][i] * tvec[j] for j in range(rs.rank))
        if zi.denominator != 1:
            raise AssertionError("translation part is not in the coroot lattice")
        z.append(int(zi))
    return AffineElement(x=x, w=w, z=tuple(z), n_vec=n_vec, length=length,
                         lam=tuple(lam), cas=cas)


def _is_dominant(point) -> bool:
    return all(v > 0 for v in point)


@lru_cache(maxsize=None)
def enumerate_dominant(rs: RootSystem, max_length: int) -> tuple:
    """All dominant alcoves of length at most `max_length`, ordered by
    ascending length and then lexicographically by wall-count vector."""
    if max_length < 0:
        raise ValueError("max_length must be nonnegative")
    l = rs.rank
    identity = _element_from_map(
        rs, tuple(tuple(int(i == j) for j in range(l)) for i in range(l)),
        (0,) * l)
    gens = _generators(rs)
    seen = {identity.x}
    out = [identity]
    frontier = [identity]
    for target in range(1, max_length + 1):
        new = []
        for e in frontier:
            for gmat, gt in gens:
                w = _mat_mul(e.w, gmat)
                tvec = _vec_add(_mat_vec(e.w, gt), _coroot_to_eval(rs, e.z))
                x = _vec_add(_mat_vec(w, rs.x0), tvec)
                if not _is_dominant(x) or x in seen:
                    continue
                cand = _element_from_map(rs, w, tvec)
                if cand.length != target:
                    continue
                seen.add(x)
                new.append(cand)
        new.sort(key=lambda e: e.n_vec)
        out.extend(new)
        frontier = new
    return tuple(out)


def _coroot_to_eval(rs: RootSystem, z) -> tuple:
    """Evaluation vector of a coroot-lattice element: alpha_j(z)."""
    return tuple(sum(z[i] * rs.cartan[i][j] for i in range(rs.rank))
                 for j in range(rs.rank))


def apply_element(rs: RootSystem, e: AffineElement, point) -> tuple:
    """Apply the affine transformation of `e` to an arbitrary point."""
    return _vec_add(_mat_vec(e.w, point), _coroot_to_eval(rs, e.z))


def finite_part_length(rs: RootSystem, e: AffineElement) -> int:
    """Length of the finite Weyl part: positive roots sent negative by its
    inverse, read off from the transpose action on root coordinates."""
    count = 0
    for c in rs.positive_roots:
        img = tuple(sum(e.w[i][j] * c[i] for i in range(rs.rank))
                    for j in range(rs.rank))
        if all(v <= 0 for v in img) and any(img):
            count += 1
    return count


def two_rho_pairing_killing(rs: RootSystem, e: AffineElement) -> int:
    """(2*rho, z)_K for the translation part, an integer."""
    t = _coroot_to_eval(rs, e.z)
    val = sum(rs.two_rho[j] * t[j] for j in range(rs.rank))
    return int(val)


def in_wf2(rs: RootSystem, e: AffineElement) -> bool:
    """True when the alcove lies in twice the fundamental alcove, i.e. all
    wall counts are 0 or 1."""
    return e.n_vec[rs.highest_root] <= 1


def enumerate_wf2(rs: RootSystem, max_length: int) -> tuple:
    """Dominant alcoves inside 2*A1 with length at most `max_length`."""
    return tuple(e for e in enumerate_dominant(rs, max_length)
                 if in_wf2(rs, e))


def reduce_to_fundamental(rs: RootSystem, point):
    """Fold a point into the fundamental alcove by wall reflections.

    Returns (folded, parity, regular).  Each step reflects in a violated
    constraint: a negative simple-root value, or a highest-root value
    above 1 (the affine reflection, with its coroot translation).  Every
    step removes at least one separating wall, so the loop terminates.
    For a regular point the folding element is unique, which makes the
    parity well-defined; on a wall the parity is reported but meaningless.
    """
    l = rs.rank
    psi = rs.positive_roots[rs.highest_root]
    pv = rs.psi_coroot_values
    p = tuple(Fraction(v) for v in point)
    parity = 1
    while True:
        i = next((i for i in range(l) if p[i] < 0), None)
        if i is not None:
            pi = p[i]
            p = tuple(p[j] - rs.cartan[i][j] * pi for j in range(l))
            parity = -parity
            continue
        psival = evaluate_root(psi, p)
        if psival > 1:
            p = tuple(p[j] - (psival - 1) * pv[j] for j in range(l))
            parity = -parity
            continue
        break
    regular = all(v > 0 for v in p) and evaluate_root(psi, p) < 1
    return p, parity, regular


def chi_at_type_rho(rs: RootSystem, weight) -> int:
    """Character value of the irreducible with the given highest weight at
    a group element of type rho: +1 or -1 when the weight is an alcove
    weight (the sign being the alcove-length parity), 0 otherwise.

    The point representing 2*(lambda + rho) folds back to the base point
    exactly when lambda is an alcove weight.
    """
    if not rs.is_dominant_integral(weight):
        raise ValueError(f"weight {weight} is not dominant integral")
    shifted = tuple(int(m) + 1 for m in weight)
    p = tuple(2 * v for v in weight_point(rs, shifted))
    folded, parity, regular = reduce_to_fundamental(rs, p)
    if regular and folded == rs.x0:
        return parity
    return 0


def ideal_chain(rs: RootSystem, e: AffineElement) -> tuple:
    """The chain of root sets {phi : n_phi >= i} for i = 0 .. n_psi.

    Entry 0 is the full positive system; whenever the chain has a nonzero
    level, the top entry is an abelian ideal.  Entries are frozensets of
    positive-root indices.
    """
    top = e.n_vec[rs.highest_root]
    return tuple(
        frozenset(j for j, n in enumerate(e.n_vec) if n >= i)
        for i in range(top + 1))


def counts_by_length(rs: RootSystem, max_length: int) -> list:
    counts = [0] * (max_length + 1)
    for e in enumerate_dominant(rs, max_length):
        counts[e.length] += 1
    return counts
