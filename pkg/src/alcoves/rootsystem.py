"""Exact root-system data for the simple Lie types A through G.

Roots are stored as integer coordinate vectors in the simple-root basis;
weights as vectors of fundamental-weight coordinates.  Two inner-product
normalizations coexist:

* the standard one, with (psi, psi) = 2 for the highest root psi, used
  for all construction work because it keeps the combinatorics integral;

* the Killing one, obtained by dividing by 2 * h_dual, in which every
  long root has squared length 1/h_dual.  All Casimir eigenvalues and
  wall evaluations are Killing-normalized.

The conversion factor lives in exactly one place (`KILLING_SCALE` below).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .linalg import invert_rational

FAMILIES = "ABCDEFG"

# Number of positive roots per family, as a function of the rank.
_POSITIVE_ROOT_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


def _valid_type(family: str, rank: int) -> bool:
    return {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 3,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }.get(family, False)


def _cartan_matrix(family: str, rank: int):
    """Cartan matrix a[i][j] = <alpha_j, alpha_i^vee> in Bourbaki numbering."""
    a = [[2 * int(i == j) for j in range(rank)] for i in range(rank)]

    def bond(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if family in "ABC":
        for i in range(rank - 1):
            bond(i, i + 1)
        if family == "B" and rank >= 2:
            # alpha_rank is short: <alpha_{l-1}, alpha_l^vee> = -2.
            a[rank - 1][rank - 2] = -2
        if family == "C" and rank >= 2:
            a[rank - 2][rank - 1] = -2
    elif family == "D":
        for i in range(rank - 2):
            bond(i, i + 1)
        bond(rank - 3, rank - 1)
    elif family == "E":
        # Chain 1-3-4-5-..., with node 2 attached to node 4 (1-indexed).
        chain = [0] + list(range(2, rank))
        for u, v in zip(chain, chain[1:]):
            bond(u, v)
        bond(1, 3)
    elif family == "F":
        bond(0, 1)
        bond(1, 2, aij=-1, aji=-2)  # alpha_3, alpha_4 short
        bond(2, 3)
    elif family == "G":
        bond(0, 1, aij=-1, aji=-3)  # alpha_2 short
    return tuple(tuple(row) for row in a)


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Immutable exact data for one simple type.

    Instances are cached per (family, rank); construction is deterministic,
    so identity of the pair is identity of the data.
    """

    family: str
    rank: int
    cartan: tuple
    cartan_inv: tuple
    positive_roots: tuple          # coordinate vectors in the simple-root basis
    highest_root: int              # index of psi in positive_roots
    simple_norm_halves: tuple      # d_i = (alpha_i, alpha_i)_std / 2
    gram: tuple                    # (alpha_i, alpha_j)_std
    norms_std: tuple               # (phi, phi)_std per positive root
    h: int
    h_dual: int
    exponents: tuple
    dim_g: int
    two_rho: tuple                 # 2*rho in simple-root coordinates
    psi_coroot_values: tuple       # alpha_j(psi^vee), integers
    x0: tuple                      # alpha_i(x0) for the base point x0 ~ 2*rho
    _index: dict = field(repr=False, default=None)

    def __eq__(self, other):
        return isinstance(other, RootSystem) and \
            (self.family, self.rank) == (other.family, other.rank)

    def __hash__(self):
        return hash((self.family, self.rank))

    # -- basic views ---------------------------------------------------

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def num_positive(self) -> int:
        return len(self.positive_roots)

    @property
    def rho(self) -> tuple:
        return (1,) * self.rank

    def root_index(self, coords) -> int:
        return self._index[tuple(coords)]

    def is_root(self, coords) -> bool:
        c = tuple(coords)
        return c in self._index or tuple(-x for x in c) in self._index

    def root_height(self, idx: int) -> int:
        return sum(self.positive_roots[idx])

    # -- inner products (standard normalization) ------------------------

    def pair_roots_std(self, c1, c2) -> Fraction:
        """(x, y)_std for x, y given in simple-root coordinates."""
        g = self.gram
        return sum(a * sum(b * g[i][j] for j, b in enumerate(c2) if b)
                   for i, a in enumerate(c1) if a)

    def pair_weight_root_std(self, weight, root_coords) -> Fraction:
        """(lambda, x)_std for a weight (fundamental coords) and root coords."""
        d = self.simple_norm_halves
        return sum(c * d[i] * weight[i] for i, c in enumerate(root_coords) if c)

    def pair_weights_std(self, w1, w2) -> Fraction:
        c2 = self.weight_to_root_coords(w2)
        d = self.simple_norm_halves
        return sum(c * d[i] * w1[i] for i, c in enumerate(c2) if c)

    # -- coordinate conversions -----------------------------------------

    def weight_to_root_coords(self, weight) -> tuple:
        inv = self.cartan_inv
        return tuple(sum(inv[i][j] * weight[j] for j in range(self.rank))
                     for i in range(self.rank))

    def root_coords_to_weight(self, coords) -> tuple:
        a = self.cartan
        return tuple(sum(a[i][j] * coords[j] for j in range(self.rank))
                     for i in range(self.rank))

    # -- predicates ------------------------------------------------------

    def is_dominant_integral(self, weight) -> bool:
        return len(weight) == self.rank and \
            all(x == int(x) and x >= 0 for x in weight)

    def in_root_lattice(self, weight) -> bool:
        return all(c == int(c) for c in self.weight_to_root_coords(weight))


# Killing normalization: (x, y)_K = (x, y)_std / (2 * h_dual).
def KILLING_SCALE(rs: RootSystem) -> int:
    return 2 * rs.h_dual


def _positive_roots_by_closure(cartan, rank):
    """All positive roots, generated from the simple roots by root strings."""
    roots = {tuple(int(i == j) for j in range(rank)) for i in range(rank)}
    frontier = list(roots)
    while frontier:
        new = []
        for c in frontier:
            for i in range(rank):
                pairing = sum(cartan[i][j] * c[j] for j in range(rank))
                # String through c in direction alpha_i: p - q = pairing.
                p = 0
                down = list(c)
                while True:
                    down[i] -= 1
                    t = tuple(down)
                    if t in roots:
                        p += 1
                    else:
                        break
                if p - pairing >= 1:
                    up = list(c)
                    up[i] += 1
                    t = tuple(up)
                    if t not in roots:
                        roots.add(t)
                        new.append(t)
        frontier = new
    return sorted(roots, key=lambda c: (sum(c), c))


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int) -> RootSystem:
    """Construct the full exact root-system record for one simple type."""
    family = family.upper()
    if not _valid_type(family, rank):
        raise ValueError(f"not a valid simple type: {family}{rank}")

    cartan = _cartan_matrix(family, rank)
    positive = _positive_roots_by_closure(cartan, rank)
    expected = _POSITIVE_ROOT_COUNT[family](rank)
    if len(positive) != expected:
        raise AssertionError(
            f"closure produced {len(positive)} positive roots for "
            f"{family}{rank}, expected {expected}")

    index = {c: i for i, c in enumerate(positive)}

    # The highest root is the unique one from which no alpha_i can be added.
    psi_idx = len(positive) - 1
    psi = positive[psi_idx]
    for other in positive:
        diff = tuple(p - o for p, o in zip(psi, other))
        if any(x < 0 for x in diff):
            raise AssertionError("highest root is not maximal")

    # Symmetrizing factors d_i, propagated along the Dynkin diagram, then
    # scaled so that (psi, psi)_std = 2.
    d = [None] * rank
    d[0] = Fraction(1)
    todo = [0]
    while todo:
        i = todo.pop()
        for j in range(rank):
            if j != i and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * Fraction(cartan[i][j], cartan[j][i])
                todo.append(j)
    if any(x is None for x in d):
        raise AssertionError("Dynkin diagram is not connected")
    gram0 = [[d[i] * cartan[i][j] for j in range(rank)] for i in range(rank)]
    psi_norm = sum(psi[i] * psi[j] * gram0[i][j]
                   for i in range(rank) for j in range(rank))
    scale = Fraction(2) / psi_norm
    d = tuple(x * scale for x in d)
    gram = tuple(tuple(d[i] * cartan[i][j] for j in range(rank))
                 for i in range(rank))
    for i in range(rank):
        for j in range(rank):
            if gram[i][j] != gram[j][i]:
                raise AssertionError("Gram matrix is not symmetric")

    def pair(c1, c2):
        return sum(c1[i] * c2[j] * gram[i][j]
                   for i in range(rank) for j in range(rank))

    norms = tuple(pair(c, c) for c in positive)
    two_rho = tuple(sum(c[i] for c in positive) for i in range(rank))

    # h_dual from (2*rho, psi) + (psi, psi) = (psi, psi) * h_dual.
    h_dual_frac = pair(two_rho, psi) / Fraction(2) + 1
    if h_dual_frac.denominator != 1:
        raise AssertionError("dual Coxeter number is not an integer")
    h_dual = int(h_dual_frac)
    h = sum(psi) + 1

    # Exponents: the dual of the partition of positive roots by height.
    heights = [sum(c) for c in positive]
    max_h = max(heights)
    count_at = [heights.count(j) for j in range(1, max_h + 2)]
    exponents = []
    for j in range(1, max_h + 1):
        exponents.extend([j] * (count_at[j - 1] - count_at[j]))
    exponents = tuple(sorted(exponents))
    if sum(exponents) != len(positive) or len(exponents) != rank:
        raise AssertionError("height partition does not give the exponents")

    dim_g = 2 * len(positive) + rank

    # psi^vee in the coroot basis has coordinates psi_i * d_i (d_psi = 1);
    # alpha_j(psi^vee) = sum_i cvee_i * a_ij must be an integer.
    cvee = [psi[i] * d[i] for i in range(rank)]
    psi_coroot_values = []
    for j in range(rank):
        v = sum(cvee[i] * cartan[i][j] for i in range(rank))
        if v.denominator != 1:
            raise AssertionError("psi^vee does not lie in the coroot lattice")
        psi_coroot_values.append(int(v))

    x0 = tuple(di / h_dual for di in d)
    cartan_inv = invert_rational(cartan)

    return RootSystem(
        family=family, rank=rank, cartan=cartan, cartan_inv=cartan_inv,
        positive_roots=tuple(positive), highest_root=psi_idx,
        simple_norm_halves=d, gram=gram, norms_std=norms,
        h=h, h_dual=h_dual, exponents=exponents, dim_g=dim_g,
        two_rho=two_rho, psi_coroot_values=tuple(psi_coroot_values),
        x0=x0, _index=index)


def parse_type(label: str) -> RootSystem:
    """Build a root system from a label like 'A4' or 'E6'."""
    label = label.strip()
    if len(label) < 2 or label[0].upper() not in FAMILIES:
        raise ValueError(f"cannot parse type label {label!r}")
    try:
        rank = int(label[1:])
    except ValueError:
        raise ValueError(f"cannot parse type label {label!r}") from None
    return build_root_system(label[0].upper(), rank)


def casimir_eigenvalue(rs: RootSystem, weight) -> Fraction:
    """Killing-normalized Casimir scalar (lambda, lambda + 2*rho)_K.

    Requires a dominant integral weight; the highest root always gives 1.
    """
    if not rs.is_dominant_integral(weight):
        raise ValueError(f"weight {weight} is not dominant integral")
    lam_lam = rs.pair_weights_std(weight, weight)
    two_rho_lam = rs.pair_weight_root_std(weight, rs.two_rho)
    return Fraction(lam_lam + two_rho_lam, KILLING_SCALE(rs))


def weyl_dimension(rs: RootSystem, weight) -> int:
    """dim V_lambda by the Weyl product over positive roots, exactly."""
    if not rs.is_dominant_integral(weight):
        raise ValueError(f"weight {weight} is not dominant integral")
    lam_rho = tuple(int(x) + 1 for x in weight)
    num = Fraction(1)
    for c in rs.positive_roots:
        num *= Fraction(rs.pair_weight_root_std(lam_rho, c),
                        rs.pair_weight_root_std(rs.rho, c))
    if num.denominator != 1 or num <= 0:
        raise AssertionError("Weyl dimension product is not a positive integer")
    return int(num)


def heisenberg_count(rs: RootSystem) -> int:
    """m with 2m + 1 = #{phi > 0 : (psi, phi) > 0}; always h_dual - 2."""
    psi = rs.positive_roots[rs.highest_root]
    n = sum(1 for c in rs.positive_roots if rs.pair_roots_std(psi, c) > 0)
    m, odd = divmod(n - 1, 2)
    if odd:
        raise AssertionError("root set pairing positively with psi has even size")
    if m != rs.h_dual - 2:
        raise AssertionError(f"Heisenberg count {m} != h_dual - 2 for {rs.label}")
    return m
