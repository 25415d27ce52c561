"""Brute-force exterior-algebra oracles for small simple Lie algebras.

A Chevalley basis (root vectors plus simple coroots) is built from the
abstract root system with integer structure constants.  Signs come from
the classical extraspecial-pair procedure: for each non-simple positive
root, the decomposition with the smallest first summand gets a positive
constant, and every other constant follows from the two standard
identities relating constants around a zero-sum triple or quadruple of
roots.  Any consistent choice gives an isomorphic algebra; correctness
is enforced by an exhaustive Jacobi sweep at build time, not by the
convention.

On top of the table sit exact-rational computations on wedge powers:
the Casimir action (through the split invariant tensor, one pair of
slots at a time), eigenspace dimensions as nullities, and the ideal
generated by the image of the degree-one coboundary.  Everything is
graded by Cartan weight, so ranks and nullities are computed block by
block.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb

from .linalg import exact_rank, invert_rational, nullity
from .rootsystem import RootSystem, casimir_eigenvalue

DEFAULT_DIM_CEILING = 14
DEFAULT_MATRIX_CEILING = 3432  # largest wedge degree of a 14-dim algebra


@dataclass(frozen=True, eq=False)
class LieAlgebraTable:
    """Chevalley basis data: index 0..2m-1 are root vectors (positives
    first, then the matching negatives), the last `rank` entries are the
    simple coroots."""

    rs: RootSystem
    dim: int
    brackets: tuple          # brackets[a][b] = ((idx, coeff), ...)
    weights: tuple           # Cartan weight of each basis vector (fund coords)
    killing: tuple
    killing_inv: tuple

    def bracket(self, a: int, b: int):
        return self.brackets[a][b]

    def root_vector(self, root_idx: int, negative: bool = False) -> int:
        return root_idx + (self.rs.num_positive if negative else 0)


def _string_start(root_set, beta, alpha) -> int:
    """Largest p with beta - p*alpha a root."""
    p = 0
    cur = tuple(b - a for b, a in zip(beta, alpha))
    while cur in root_set:
        p += 1
        cur = tuple(c - a for c, a in zip(cur, alpha))
    return p


def _structure_signs(rs: RootSystem):
    """Constants N[x, y] for all root pairs with x + y a root.

    Fills positive pairs in increasing height of the sum, extraspecial
    pairs first, then resolves every mixed-sign pair through the triple
    identity  N(x,y)/(z,z) = N(y,-z)/(x,x)  for x + y = z.
    """
    pos = list(rs.positive_roots)
    pos_set = set(pos)
    all_roots = pos_set | {tuple(-c for c in r) for r in pos}
    norm = {}
    for r in pos:
        n = rs.pair_roots_std(r, r)
        norm[r] = n
        norm[tuple(-c for c in r)] = n

    order = {r: i for i, r in enumerate(pos)}  # height-then-lex rank
    table = {}  # (x, y) with x <= y in `order`, both positive, sum a root

    def n_positive(x, y):
        if order[x] <= order[y]:
            return table[(x, y)]
        return -table[(y, x)]

    def n_value(x, y):
        """N for arbitrary roots with x + y a root."""
        xp = x in pos_set
        yp = y in pos_set
        if xp and yp:
            return n_positive(x, y)
        if not xp and not yp:
            return -n_value(tuple(-c for c in x), tuple(-c for c in y))
        if not xp:
            return -n_value(y, x)
        # x positive, y negative.
        z = tuple(a + b for a, b in zip(x, y))
        if z in pos_set:
            return -Fraction(norm[z], norm[x]) * n_value(tuple(-c for c in y), z)
        return n_value(tuple(-c for c in y), tuple(-c for c in x))

    by_height = sorted((r for r in pos if sum(r) > 1), key=lambda r: (sum(r), r))
    for gamma in by_height:
        pairs = []
        for a in pos:
            b = tuple(g - x for g, x in zip(gamma, a))
            if b in pos_set and order[a] <= order[b]:
                pairs.append((a, b))
        pairs.sort(key=lambda p: order[p[0]])
        a1, b1 = pairs[0]  # extraspecial: minimal first summand
        table[(a1, b1)] = _string_start(all_roots, b1, a1) + 1
        for a, b in pairs[1:]:
            # Quadruple a1 + b1 - a - b = 0, no two opposite: solve for
            # N(-a, -b) and flip.  Terms vanish when the pair sum is not
            # a root.
            acc = Fraction(0)
            d1 = tuple(x - y for x, y in zip(b1, a))      # b1 - a
            if d1 in all_roots:
                acc += Fraction(n_value(b1, tuple(-c for c in a)) *
                                n_value(a1, tuple(-c for c in b)), norm[d1])
            d2 = tuple(x - y for x, y in zip(a1, a))      # a1 - a
            if d2 in all_roots:
                acc += Fraction(n_value(tuple(-c for c in a), a1) *
                                n_value(b1, tuple(-c for c in b)), norm[d2])
            val = Fraction(norm[gamma]) * acc / table[(a1, b1)]
            if val.denominator != 1:
                raise AssertionError("structure constant is not an integer")
            table[(a, b)] = int(val)
    # Magnitude check: every constant is +-(p+1) for its root string.
    for (a, b), v in table.items():
        p = _string_start(all_roots, b, a)
        if abs(v) != p + 1:
            raise AssertionError(f"constant {v} for {a}+{b} is not +-(p+1)")
    return n_value


def _coroot_coords(rs: RootSystem, root_coords):
    """Coordinates of phi^vee in the simple-coroot basis (integers)."""
    d = rs.simple_norm_halves
    norm_half = rs.pair_roots_std(root_coords, root_coords) / 2
    out = []
    for i, c in enumerate(root_coords):
        v = c * d[i] / norm_half
        if v.denominator != 1:
            raise AssertionError("coroot has non-integer coordinates")
        out.append(int(v))
    return out


@lru_cache(maxsize=None)
def build_chevalley(rs: RootSystem, dim_ceiling: int = DEFAULT_DIM_CEILING) -> LieAlgebraTable:
    """Structure constants, Killing form and its inverse, all verified.

    Build-time checks: antisymmetry and the Jacobi identity over all basis
    triples, nondegeneracy of the Killing form, and the Casimir acting as
    the identity in the adjoint representation.
    """
    if rs.dim_g > dim_ceiling:
        raise ValueError(
            f"dim {rs.dim_g} exceeds the ceiling {dim_ceiling}; raise it explicitly")
    m = rs.num_positive
    l = rs.rank
    dim = rs.dim_g
    pos = list(rs.positive_roots)
    n_value = _structure_signs(rs)
    index = {r: i for i, r in enumerate(pos)}

    def vec_index(root_coords) -> int:
        i = index.get(root_coords)
        if i is not None:
            return i
        return m + index[tuple(-c for c in root_coords)]

    def root_of(a: int):
        if a < m:
            return pos[a]
        return tuple(-c for c in pos[a - m])

    brackets = [[() for _ in range(dim)] for _ in range(dim)]

    def set_bracket(a, b, terms):
        terms = tuple((i, c) for i, c in terms if c != 0)
        brackets[a][b] = terms
        brackets[b][a] = tuple((i, -c) for i, c in terms)

    for a in range(2 * m):
        ra = root_of(a)
        for b in range(a + 1, 2 * m):
            rb = root_of(b)
            s = tuple(x + y for x, y in zip(ra, rb))
            if not any(s):
                hcoords = _coroot_coords(rs, ra if a < m else rb)
                sign = 1 if a < m else -1
                set_bracket(a, b, [(2 * m + i, sign * c)
                                   for i, c in enumerate(hcoords)])
            elif rs.is_root(s):
                v = Fraction(n_value(ra, rb))
                if v.denominator != 1:
                    raise AssertionError("non-integer structure constant")
                set_bracket(a, b, [(vec_index(s), int(v))])
    for i in range(l):
        h = 2 * m + i
        for a in range(2 * m):
            ra = root_of(a)
            pairing = sum(rs.cartan[i][j] * ra[j] for j in range(l))
            set_bracket(h, a, [(a, pairing)])

    weights = tuple(
        tuple(rs.root_coords_to_weight(root_of(a))) if a < 2 * m else (0,) * l
        for a in range(dim))

    table = LieAlgebraTable(
        rs=rs, dim=dim,
        brackets=tuple(tuple(row) for row in brackets),
        weights=weights, killing=(), killing_inv=())

    # ad matrices as dense columns for the Killing form.
    ad = []
    for a in range(dim):
        mat = [[0] * dim for _ in range(dim)]
        for b in range(dim):
            for i, c in brackets[a][b]:
                mat[i][b] += c
        ad.append(mat)
    killing = tuple(
        tuple(sum(ad[a][i][j] * ad[b][j][i] for i in range(dim)
                  for j in range(dim)) for b in range(dim))
        for a in range(dim))
    if exact_rank(killing) != dim:
        raise AssertionError("Killing form is degenerate")
    killing_inv = invert_rational(killing)
    object.__setattr__(table, "killing", killing)
    object.__setattr__(table, "killing_inv", killing_inv)

    _verify_jacobi(table)
    _verify_casimir_identity(table)
    return table


def _bracket_expand(table: LieAlgebraTable, terms_a, terms_b):
    """Bracket of two vectors given as sparse (index, coeff) lists."""
    out = {}
    for ia, ca in terms_a:
        row = table.brackets[ia]
        for ib, cb in terms_b:
            for i, c in row[ib]:
                out[i] = out.get(i, 0) + ca * cb * c
    return tuple((i, c) for i, c in out.items() if c != 0)


def _verify_jacobi(table: LieAlgebraTable) -> None:
    dim = table.dim
    for a in range(dim):
        for b in range(a + 1, dim):
            ab = table.brackets[a][b]
            for c in range(b + 1, dim):
                acc = {}
                for i, v in _bracket_expand(table, ab, ((c, 1),)):
                    acc[i] = acc.get(i, 0) + v
                for i, v in _bracket_expand(table, table.brackets[b][c], ((a, 1),)):
                    acc[i] = acc.get(i, 0) + v
                for i, v in _bracket_expand(table, table.brackets[c][a], ((b, 1),)):
                    acc[i] = acc.get(i, 0) + v
                if any(acc.values()):
                    raise AssertionError(f"Jacobi fails on triple {(a, b, c)}")


def _dual_ad_rows(table: LieAlgebraTable):
    """Sparse ad-action of the Killing-dual basis: rows[j][b] = [(i, c)]."""
    dim = table.dim
    rows = []
    for j in range(dim):
        col = [dict() for _ in range(dim)]
        for k in range(dim):
            coeff = table.killing_inv[j][k]
            if coeff == 0:
                continue
            for b in range(dim):
                for i, c in table.brackets[k][b]:
                    col[b][i] = col[b].get(i, Fraction(0)) + coeff * c
        rows.append(tuple(tuple((i, c) for i, c in d.items() if c != 0)
                          for d in col))
    return tuple(rows)


def _verify_casimir_identity(table: LieAlgebraTable) -> None:
    """sum_j ad(x_j) ad(y_j) must be the identity on the algebra."""
    dim = table.dim
    ady = _dual_ad_rows(table)
    for b in range(dim):
        acc = {}
        for j in range(dim):
            for i, c in ady[j][b]:
                for i2, c2 in table.brackets[j][i]:
                    acc[i2] = acc.get(i2, Fraction(0)) + c * c2
        expect = {b: Fraction(1)}
        acc = {i: c for i, c in acc.items() if c != 0}
        if acc != expect:
            raise AssertionError("Casimir does not act as the identity on the algebra")


@lru_cache(maxsize=None)
def _split_casimir(table: LieAlgebraTable):
    """Pair table: omega[(a, b)] = sum_j [x_j, x_a] (x) [y_j, x_b] as a
    tuple of (c, d, coeff).  Weight-preserving by construction."""
    dim = table.dim
    ady = _dual_ad_rows(table)
    omega = {}
    for a in range(dim):
        for b in range(dim):
            acc = {}
            for j in range(dim):
                left = table.brackets[j][a]
                if not left:
                    continue
                right = ady[j][b]
                for ic, cc in left:
                    for id_, cd in right:
                        key = (ic, id_)
                        acc[key] = acc.get(key, Fraction(0)) + cc * cd
            terms = tuple((c, d, v) for (c, d), v in acc.items() if v != 0)
            if terms:
                omega[(a, b)] = terms
    return omega


def _wedge_normalize(indices):
    """Sort a tuple of basis indices; returns (sign, sorted tuple) or None."""
    idx = list(indices)
    sign = 1
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
        if j > 0 and idx[j - 1] == idx[j]:
            return None
    return sign, tuple(idx)


def _weight_of_subset(table: LieAlgebraTable, subset):
    l = table.rs.rank
    out = [0] * l
    for a in subset:
        w = table.weights[a]
        for i in range(l):
            out[i] += w[i]
    return tuple(out)


def _wedge_blocks(table: LieAlgebraTable, k: int):
    """k-subsets of the basis grouped by total Cartan weight."""
    blocks = {}
    for subset in combinations(range(table.dim), k):
        blocks.setdefault(_weight_of_subset(table, subset), []).append(subset)
    return blocks


def _apply_casimir(table: LieAlgebraTable, subset):
    """theta(Cas) on a wedge basis vector: k times itself plus twice the
    split invariant tensor applied to every slot pair."""
    k = len(subset)
    omega = _split_casimir(table)
    out = {subset: Fraction(k)}
    for s in range(k):
        for t in range(s + 1, k):
            terms = omega.get((subset[s], subset[t]))
            if not terms:
                continue
            for c, d, v in terms:
                repl = list(subset)
                repl[s] = c
                repl[t] = d
                res = _wedge_normalize(repl)
                if res is None:
                    continue
                sign, key = res
                out[key] = out.get(key, Fraction(0)) + 2 * sign * v
    return {key: v for key, v in out.items() if v != 0}


def _check_matrix_ceiling(table: LieAlgebraTable, k: int, matrix_ceiling: int):
    size = comb(table.dim, k)
    if size > matrix_ceiling:
        raise ValueError(
            f"wedge degree {k} has dimension {size} over the ceiling {matrix_ceiling}")


def casimir_eigenspace_dim(table: LieAlgebraTable, k: int,
                           matrix_ceiling: int = DEFAULT_MATRIX_CEILING) -> int:
    """Dimension of the eigenvalue-k eigenspace of the Casimir action on
    the k-th wedge power, by exact nullity per weight block."""
    _check_matrix_ceiling(table, k, matrix_ceiling)
    if k == 0:
        return 1
    total = 0
    for block in _wedge_blocks(table, k).values():
        pos = {s: i for i, s in enumerate(block)}
        rows = []
        for s in block:
            img = _apply_casimir(table, s)
            row = [Fraction(0)] * len(block)
            for key, v in img.items():
                row[pos[key]] = v
            row[pos[s]] -= k
            rows.append(row)
        # Nullity of the transpose equals nullity of the matrix here
        # (square), so orientation does not matter.
        total += nullity(rows, len(block))
    return total


def max_casimir_eigenvalue(table: LieAlgebraTable, k: int,
                           matrix_ceiling: int = DEFAULT_MATRIX_CEILING) -> Fraction:
    """Largest Casimir eigenvalue on the k-th wedge power.

    Eigenvalues are Casimir scalars of the highest weights present; a
    dominant weight is a highest weight exactly when the raising
    operators have a joint kernel on its weight block.
    """
    _check_matrix_ceiling(table, k, matrix_ceiling)
    if k == 0:
        return Fraction(0)
    rs = table.rs
    blocks = _wedge_blocks(table, k)
    best = None
    for weight, block in blocks.items():
        if any(w < 0 for w in weight):
            continue
        if not _has_highest_weight_vector(table, blocks, weight, block):
            continue
        val = casimir_eigenvalue(rs, weight)
        if best is None or val > best:
            best = val
    if best is None:
        raise AssertionError("no highest weight found in a nonzero module")
    return best


def _theta_single(table: LieAlgebraTable, gen: int, subset):
    """Derivation action of one basis element on a wedge basis vector."""
    out = {}
    for s in range(len(subset)):
        for i, c in table.brackets[gen][subset[s]]:
            repl = list(subset)
            repl[s] = i
            res = _wedge_normalize(repl)
            if res is None:
                continue
            sign, key = res
            out[key] = out.get(key, 0) + sign * c
    return out


def _has_highest_weight_vector(table, blocks, weight, block) -> bool:
    rs = table.rs
    rows = []
    pos = {s: i for i, s in enumerate(block)}
    stacked_cols = len(block)
    for i_simple in range(rs.rank):
        gen = table.root_vector(simple_root_index(rs, i_simple))
        target_weight = tuple(w + c for w, c in
                              zip(weight, table.weights[gen]))
        target = blocks.get(target_weight, [])
        tpos = {s: i for i, s in enumerate(target)}
        mat = [[0] * stacked_cols for _ in range(len(target))]
        for s in block:
            img = _theta_single(table, gen, s)
            for key, v in img.items():
                mat[tpos[key]][pos[s]] += v
        rows.extend(mat)
    return nullity(rows, stacked_cols) > 0


def simple_root_index(rs: RootSystem, i: int) -> int:
    """Index of the i-th simple root inside the positive-root list."""
    coords = tuple(int(j == i) for j in range(rs.rank))
    return rs.root_index(coords)


@lru_cache(maxsize=None)
def _coboundary_images(table: LieAlgebraTable):
    """d(u) = 1/2 sum_j x_j wedge [y_j, u] for each basis element u."""
    dim = table.dim
    ady = _dual_ad_rows(table)
    images = []
    for u in range(dim):
        acc = {}
        for j in range(dim):
            for i, c in ady[j][u]:
                res = _wedge_normalize((j, i))
                if res is None:
                    continue
                sign, key = res
                acc[key] = acc.get(key, Fraction(0)) + sign * c / 2
        images.append(tuple((key, v) for key, v in acc.items() if v != 0))
    return tuple(images)


def dg_ideal_dim(table: LieAlgebraTable, k: int,
                 matrix_ceiling: int = DEFAULT_MATRIX_CEILING) -> int:
    """Dimension of degree-k part of the ideal generated by the image of
    the degree-one coboundary: rank of all (k-2)-wedges against the d(u)
    generators, weight block by weight block."""
    _check_matrix_ceiling(table, k, matrix_ceiling)
    if k < 2:
        return 0
    images = _coboundary_images(table)
    # Group generators w wedge d(u) by total weight.
    gen_blocks = {}
    for w_subset in combinations(range(table.dim), k - 2):
        w_weight = _weight_of_subset(table, w_subset)
        for u in range(table.dim):
            vec = {}
            for (a, b), c in images[u]:
                if a in w_subset or b in w_subset:
                    continue
                res = _wedge_normalize(w_subset + (a, b))
                sign, key = res
                vec[key] = vec.get(key, Fraction(0)) + sign * c
            vec = {key: v for key, v in vec.items() if v != 0}
            if vec:
                weight = tuple(x + y for x, y in
                               zip(w_weight, table.weights[u]))
                gen_blocks.setdefault(weight, []).append(vec)
    total = 0
    for weight, vecs in gen_blocks.items():
        cols = sorted({key for vec in vecs for key in vec})
        pos = {key: i for i, key in enumerate(cols)}
        rows = [[vec.get(key, Fraction(0)) for key in cols] for vec in vecs]
        total += exact_rank(rows)
    return total


def verify_ideal_top_vectors(table: LieAlgebraTable, ideals) -> dict:
    """Each abelian ideal's decomposable wedge must be a Casimir
    eigenvector with eigenvalue its size."""
    failures = []
    for xi in ideals:
        subset = tuple(sorted(table.root_vector(i) for i in xi.roots))
        k = len(subset)
        if k == 0:
            continue
        img = _apply_casimir(table, subset)
        if img != {subset: Fraction(k)}:
            failures.append(xi)
    return {"checked": len(list(ideals)), "failures": failures,
            "ok": not failures}
