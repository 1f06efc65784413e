"""Orbit counting over F_q by closure under generators.

Spaces are lists of canonical points; each generator is converted once
into a permutation of the point indices, after which orbit fusion on a
product of spaces is pure integer work (union-find with path
compression and union by size).  The sum of orbit sizes is audited
against the total point count on every call.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import gfq
from .compositions import Composition
from .errors import BudgetExceededError, CrossCheckError, UnsupportedPairError
from .flags import (
    DEFAULT_BUDGET,
    apply_to_flag,
    enumerate_flags,
    flag_count,
    gl_generators,
    sp_generators,
    symplectic_gram,
)
from .groups import (
    GroupDatum,
    GroupFamily,
    Orientation,
    ParabolicSpec,
    gl,
    parabolic_root_set,
    sp,
)
from .gfq import Mat
from .pairs import KParabolicSpec, PairKind, SymmetricPairSpec

__all__ = [
    "UnionFind",
    "OrbitCountReport",
    "count_K_orbits",
    "count_triple_orbits",
    "growth_probe",
]


class UnionFind:
    """Disjoint sets over range(n), path compression + union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.count = n

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        self.count -= 1

    def orbit_sizes(self) -> list[int]:
        return sorted(
            self.size[i] for i in range(len(self.parent)) if self.find(i) == i
        )


def _standardize(P: ParabolicSpec) -> ParabolicSpec:
    """Replace an Opposite spec by the conjugate Standard one: reversed
    composition in type A, same shape in type C."""
    if P.orientation is Orientation.STANDARD:
        return P
    if isinstance(P.shape, Composition):
        return ParabolicSpec(P.group, P.shape.reversed_())
    return ParabolicSpec(P.group, P.shape)


@lru_cache(maxsize=None)
def _space_points(group: GroupDatum, shape, q: int):
    """Canonical point list and index of one flag variety, shared across
    orbit computations."""
    count = flag_count(group, shape, q)
    pts = enumerate_flags(group, shape, q, budget=count)
    return tuple(pts), {pt: i for i, pt in enumerate(pts)}


@lru_cache(maxsize=512)
def _perm_for(group: GroupDatum, shape, q: int, mat: Mat):
    pts, index = _space_points(group, shape, q)
    return tuple(index[apply_to_flag(mat, pt, q)] for pt in pts)


@dataclass
class _Space:
    """A finite G-set with each generator realized as a permutation."""

    points: list
    perms: list

    @classmethod
    def flags(cls, group: GroupDatum, shape, q: int, mats: list[Mat | None], budget: int):
        count = flag_count(group, shape, q)
        if count > budget:
            raise BudgetExceededError(
                f"{group}/{shape} has {count} points over F_{q}, budget {budget}",
                count,
                budget,
            )
        pts, _ = _space_points(group, shape, q)
        identity_perm = None
        perms = []
        for m in mats:
            if m is None:
                if identity_perm is None:
                    identity_perm = tuple(range(len(pts)))
                perms.append(identity_perm)
            else:
                perms.append(_perm_for(group, shape, q, m))
        return cls(list(pts), perms)


def _product_orbits(spaces: list[_Space], budget: int) -> tuple[int, int]:
    """(total points, orbit count) for the diagonal action on the product."""
    sizes = [len(s.points) for s in spaces]
    total = 1
    for s in sizes:
        total *= s
    if total > budget:
        raise BudgetExceededError(
            f"product has {total} points, budget {budget}", total, budget
        )
    n_gens = len(spaces[0].perms)
    assert all(len(s.perms) == n_gens for s in spaces)
    uf = UnionFind(total)
    union = uf.union
    for g in range(n_gens):
        perms = [s.perms[g] for s in spaces]
        if len(perms) == 1:
            (p1,) = perms
            for a, b in enumerate(p1):
                if a != b:
                    union(a, b)
        elif len(perms) == 2:
            p1, p2 = perms
            s2 = sizes[1]
            for i, pi in enumerate(p1):
                base = i * s2
                image = pi * s2
                for j, pj in enumerate(p2):
                    a = base + j
                    b = image + pj
                    if a != b:
                        union(a, b)
        elif len(perms) == 3:
            p1, p2, p3 = perms
            s2, s3 = sizes[1], sizes[2]
            s23 = s2 * s3
            for i, pi in enumerate(p1):
                base_i = i * s23
                image_i = pi * s23
                for j, pj in enumerate(p2):
                    base = base_i + j * s3
                    image = image_i + pj * s3
                    for k, pk in enumerate(p3):
                        a = base + k
                        b = image + pk
                        if a != b:
                            union(a, b)
        else:
            strides = [1] * len(sizes)
            for i in range(len(sizes) - 2, -1, -1):
                strides[i] = strides[i + 1] * sizes[i + 1]
            for flat in range(total):
                rest, image = flat, 0
                for stride, perm in zip(strides, perms):
                    idx, rest = divmod(rest, stride)
                    image += perm[idx] * stride
                union(flat, image)
    sizes_audit = uf.orbit_sizes()
    assert sum(sizes_audit) == total, "orbit sizes do not add up to the point count"
    return total, uf.count


def _embed_block(m: Mat, coords: list[int], dim: int, q: int) -> Mat:
    big = [[1 if i == j else 0 for j in range(dim)] for i in range(dim)]
    for a, i in enumerate(coords):
        for b, j in enumerate(coords):
            big[i][j] = m[a][b]
    return tuple(tuple(r) for r in big)


def _ci_embed(a: Mat, n: int, q: int) -> Mat:
    """diag(A, w A^{-T} w) in Sp_2n for the anti-diagonal form."""
    inv_t = gfq.transpose(gfq.mat_inv(a, q))
    w = [[1 if i + j == n - 1 else 0 for j in range(n)] for i in range(n)]
    w = tuple(tuple(r) for r in w)
    mirrored = gfq.mat_mul(gfq.mat_mul(w, inv_t, q), w, q)
    dim = 2 * n
    big = [[0] * dim for _ in range(dim)]
    for i in range(n):
        for j in range(n):
            big[i][j] = a[i][j]
            big[n + i][n + j] = mirrored[i][j]
    out = tuple(tuple(r) for r in big)
    assert _is_symplectic(out, n, q)
    return out


def _is_symplectic(m: Mat, n: int, q: int) -> bool:
    j = symplectic_gram(n, q)
    return gfq.mat_mul(gfq.mat_mul(gfq.transpose(m), j, q), m, q) == j


def _k_moves(pair: SymmetricPairSpec, q: int):
    """Generators of K(F_q) as (ambient matrix, per-factor matrices)."""
    kind = pair.kind
    n, p = pair.group.n, pair.p
    if kind is PairKind.AIII:
        qq = pair.q
        moves = []
        for a in gl_generators(p, q):
            moves.append((_embed_block(a, list(range(p)), n, q), [a, None]))
        for b in gl_generators(qq, q):
            moves.append((_embed_block(b, list(range(p, n)), n, q), [None, b]))
        return moves
    if kind is PairKind.CI:
        return [(_ci_embed(a, n, q), [a]) for a in gl_generators(n, q)]
    if kind is PairKind.CII:
        qq = pair.q
        dim = 2 * n
        plus = list(range(p)) + list(range(dim - p, dim))
        middle = list(range(p, dim - p))
        moves = []
        for m in sp_generators(p, q):
            big = _embed_block(m, plus, dim, q)
            assert _is_symplectic(big, n, q)
            moves.append((big, [m, None]))
        for m in sp_generators(qq, q):
            big = _embed_block(m, middle, dim, q)
            assert _is_symplectic(big, n, q)
            moves.append((big, [None, m]))
        return moves
    if kind is PairKind.AII:
        return [(m, [m]) for m in sp_generators(n // 2, q)]
    raise UnsupportedPairError(
        "orbit counting over F_q is not implemented for AI pairs "
        "(orthogonal groups degenerate in characteristic 2)"
    )


def _z_factor_data(pair: SymmetricPairSpec, Q: KParabolicSpec):
    """(group, shape) per K-factor flag variety."""
    kind = pair.kind
    if kind is PairKind.AIII:
        return [(gl(pair.p), Q.factors[0]), (gl(pair.q), Q.factors[1])]
    if kind is PairKind.CI:
        return [(gl(pair.group.n), Q.factors[0])]
    if kind is PairKind.CII:
        return [(sp(pair.p), Q.factors[0]), (sp(pair.q), Q.factors[1])]
    if kind is PairKind.AII:
        return [(sp(pair.group.n // 2), Q.factors[0])]
    raise UnsupportedPairError("no F_q model for AI flag varieties of K")


def count_K_orbits(
    pair: SymmetricPairSpec,
    P: ParabolicSpec,
    Q: KParabolicSpec,
    q: int,
    budget: int = DEFAULT_BUDGET,
) -> int:
    """Orbits of K(F_q) acting diagonally on X_P(F_q) x Z_Q(F_q)."""
    _, orbits = _count_K_orbits_full(pair, P, Q, q, budget)
    return orbits


def _count_K_orbits_full(pair, P, Q, q, budget) -> tuple[int, int]:
    gfq.check_prime(q)
    if P.group != pair.group:
        raise ValueError(f"{P} does not live in {pair}")
    if Q.pair != pair:
        raise ValueError(f"{Q} belongs to a different pair")
    P = _standardize(P)
    moves = _k_moves(pair, q)
    ambient = [m for m, _ in moves]
    spaces = [_Space.flags(P.group, P.shape, q, ambient, budget)]
    for i, (fac_group, fac_shape) in enumerate(_z_factor_data(pair, Q)):
        mats = [factors[i] for _, factors in moves]
        spaces.append(_Space.flags(fac_group, fac_shape, q, mats, budget))
    return _product_orbits(spaces, budget)


def _parabolic_generators(P: ParabolicSpec, q: int) -> list[Mat]:
    """Generators of P(F_q) for a Standard parabolic: one root-subgroup
    element per root of Lie(P) plus torus generators.

    P is the product of its torus and root subgroups, so this set
    certainly generates; no commutator relations are relied on.
    """
    group = P.group
    n = group.n
    dim = group.dim
    gens: list[Mat] = []
    if q > 2:
        prim = _primitive(q)
        for i in range(n):
            if group.family is GroupFamily.GENERAL_LINEAR:
                gens.append(_unit_matrix_with(n, {(i, i): prim}, q))
            else:
                entries = {(i, i): prim, (dim - 1 - i, dim - 1 - i): pow(prim, -1, q)}
                m = _unit_matrix_with(dim, entries, q)
                assert _is_symplectic(m, n, q)
                gens.append(m)
    for alpha in sorted(parabolic_root_set(P)):
        gens.append(_root_element(group, alpha, q))
    return gens


def _unit_matrix_with(dim: int, entries: dict, q: int) -> Mat:
    m = [[1 if i == j else 0 for j in range(dim)] for i in range(dim)]
    for (i, j), v in entries.items():
        m[i][j] = v % q
    return tuple(tuple(r) for r in m)


def _primitive(q: int) -> int:
    for g in range(2, q):
        if len({pow(g, e, q) for e in range(1, q)}) == q - 1:
            return g
    raise ValueError(q)


def _root_element(group: GroupDatum, alpha, q: int) -> Mat:
    """x_alpha(1) as a matrix in the fixed realization."""
    if group.family is GroupFamily.GENERAL_LINEAR:
        i, j = alpha
        return _unit_matrix_with(group.n, {(i - 1, j - 1): 1}, q)
    return _sp_root_element(group.n, alpha, q)


def _sp_root_element(n: int, alpha, q: int) -> Mat:
    """x_alpha(1) in Sp_2n for the anti-diagonal form.

    The primary matrix position is read off the epsilon coordinates;
    the paired correction coefficient is found by search over F_q.
    """
    dim = 2 * n
    support = [(i, c) for i, c in enumerate(alpha) if c]
    negative = support[0][1] < 0
    vec = tuple(-c for c in alpha) if negative else alpha
    support = [(i, c) for i, c in enumerate(vec) if c]
    if len(support) == 1:
        (i, c) = support[0]
        assert c == 2
        positions = [(i, dim - 1 - i)]
    else:
        (i, ci), (j, cj) = support
        if ci == 1 and cj == -1:
            positions = [(i, j), (dim - 1 - j, dim - 1 - i)]
        else:
            assert ci == 1 and cj == 1
            positions = [(i, dim - 1 - j), (j, dim - 1 - i)]
    if negative:
        positions = [(b, a) for a, b in positions]
    if len(positions) == 1:
        m = _unit_matrix_with(dim, {positions[0]: 1}, q)
        assert _is_symplectic(m, n, q)
        return m
    first, second = positions
    for corr in range(q):
        m = _unit_matrix_with(dim, {first: 1, second: corr}, q)
        if _is_symplectic(m, n, q):
            return m
    raise RuntimeError(f"no symplectic root element for {alpha}")


def count_triple_orbits(
    group: GroupDatum,
    parabolics: list[ParabolicSpec],
    q: int,
    budget: int = DEFAULT_BUDGET,
) -> int:
    """Orbits of diagonal G(F_q) on X_{P1} x ... x X_{Pk} (k = 2 or 3).

    G is transitive on the first factor, so this equals the number of
    P1(F_q)-orbits on the product of the remaining factors, which is
    what gets enumerated.  For a pair this is the Bruhat double coset
    count, independent of q.
    """
    gfq.check_prime(q)
    if len(parabolics) not in (2, 3):
        raise ValueError("need two or three parabolic specs")
    if any(P.group != group for P in parabolics):
        raise ValueError("all parabolics must share the group")
    specs = [_standardize(P) for P in parabolics]
    first, rest = specs[0], specs[1:]
    if not first.is_standard:
        raise ValueError("first parabolic must normalize to Standard")
    gens = _parabolic_generators(first, q)
    spaces = [_Space.flags(group, P.shape, q, gens, budget) for P in rest]
    _, orbits = _product_orbits(spaces, budget)
    return orbits


@dataclass(frozen=True)
class OrbitCountReport:
    """Counts per field size plus a boundedness hint.

    The hint is an empirical signal, never a proof: Bounded means the
    counts agree across the sampled fields, Growing that they strictly
    increase.
    """

    entries: tuple[tuple[int, int, int], ...]  # (q, points, orbits)
    hint: str

    def rows(self):
        return [{"q": q, "points": pts, "orbits": orb} for q, pts, orb in self.entries]


def growth_probe(
    pair: SymmetricPairSpec,
    P: ParabolicSpec,
    Q: KParabolicSpec,
    q_list=(2, 3),
    budget: int = DEFAULT_BUDGET,
) -> OrbitCountReport:
    """Count orbits at each field size and classify the trend."""
    entries = []
    for q in q_list:
        points, orbits = _count_K_orbits_full(pair, P, Q, q, budget)
        entries.append((q, points, orbits))
    counts = [orb for _, _, orb in entries]
    if all(c == counts[0] for c in counts):
        hint = "Bounded"
    elif all(a <= b for a, b in zip(counts, counts[1:])):
        hint = "Growing"
    else:
        raise CrossCheckError(
            f"orbit counts decrease along {list(q_list)}: {counts}"
        )
    return OrbitCountReport(tuple(entries), hint)
