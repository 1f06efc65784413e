"""Symmetric pairs, the theta action on parabolics, and K-parabolics.

Fixed matrix realizations (the natural module always carries the
standard basis; Sp_2n uses the anti-diagonal symplectic form pairing
coordinates i and 2n+1-i):

* AIII(p,q): theta = conjugation by diag(I_p, -I_q); K = GL_p x GL_q
  block-diagonal on the first p and last q coordinates.
* AI: theta(g) = S (g^T)^{-1} S^{-1} for S the anti-diagonal symmetric
  form; K = SO_n split.
* AII: theta(g) = J (g^T)^{-1} J^{-1} for J the anti-diagonal
  symplectic form; K = Sp_n (even n).
* CI: theta = conjugation by diag(I_n, -I_n) inside Sp_2n; K = GL_n on
  the +1 eigenspace spanned by e_1..e_n.
* CII(p,q): theta = conjugation by the diagonal sign matrix whose +1
  coordinates are {1..p} and {2n-p+1..2n}; K = Sp_2p x Sp_2q.

Conjugation by a diagonal torus element fixes every standard root
subgroup, so for AIII, CI and CII every Standard or Opposite parabolic
spec is theta-stable.  For AI and AII theta sends the standard P_shape
to the standard parabolic of the reversed shape, so a spec is
theta-stable exactly when its shape is palindromic.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .compositions import Composition, SymplecticComposition
from .errors import ParseError
from .groups import GroupDatum, GroupFamily, ParabolicSpec, gl, sp

__all__ = [
    "PairKind",
    "SymmetricPairSpec",
    "KParabolicSpec",
    "theta_on_parabolic",
    "is_theta_stable",
    "intersect_with_K",
    "whole_K",
]


class PairKind(Enum):
    AI = "AI"
    AII = "AII"
    AIII = "AIII"
    CI = "CI"
    CII = "CII"


@dataclass(frozen=True)
class SymmetricPairSpec:
    kind: PairKind
    group: GroupDatum
    p: int = 0
    q: int = 0

    def __post_init__(self):
        kind, group = self.kind, self.group
        if kind in (PairKind.AI, PairKind.AII, PairKind.AIII):
            if group.family is not GroupFamily.GENERAL_LINEAR:
                raise ValueError(f"{kind.value} needs a general linear group")
        else:
            if group.family is not GroupFamily.SYMPLECTIC:
                raise ValueError(f"{kind.value} needs a symplectic group")
        if kind is PairKind.AII and group.n % 2 != 0:
            raise ValueError("AII needs even ambient rank")
        if kind in (PairKind.AIII, PairKind.CII):
            if self.p < 1 or self.q < 1 or self.p + self.q != group.n:
                raise ValueError(
                    f"{kind.value} needs p, q >= 1 with p + q = {group.n}"
                )
        elif self.p or self.q:
            raise ValueError(f"{kind.value} takes no (p, q) datum")

    @classmethod
    def parse(cls, token: str, ambient_dim: int | None = None) -> "SymmetricPairSpec":
        """Parse AIII:p,q, CII:p,q, and AI / AII / CI.

        The parameter-free kinds take their rank from ``ambient_dim``
        (the dimension of the natural module, so 2n for CI) or from an
        explicit suffix like AI:4 or CI:2.
        """
        token = token.strip()
        name, _, rest = token.partition(":")
        name = name.strip().upper()
        try:
            kind = PairKind(name)
        except ValueError as exc:
            raise ParseError(f"unknown pair kind {name!r}") from exc
        values: list[int] = []
        if rest.strip():
            try:
                values = [int(t.strip()) for t in rest.split(",")]
            except ValueError as exc:
                raise ParseError(f"bad pair parameters in {token!r}") from exc
        if kind in (PairKind.AIII, PairKind.CII):
            if len(values) != 2:
                raise ParseError(f"{kind.value} takes p,q: {token!r}")
            p, q = values
            group = gl(p + q) if kind is PairKind.AIII else sp(p + q)
            return cls(kind, group, p, q)
        if len(values) == 1:
            n = values[0]
        elif not values and ambient_dim is not None:
            if kind is PairKind.CI:
                if ambient_dim % 2 != 0:
                    raise ParseError(f"CI needs an even ambient dimension, got {ambient_dim}")
                n = ambient_dim // 2
            else:
                n = ambient_dim
        else:
            raise ParseError(f"{kind.value} needs a rank (e.g. {kind.value}:4): {token!r}")
        group = gl(n) if kind is not PairKind.CI else sp(n)
        return cls(kind, group)

    @property
    def is_inner(self) -> bool:
        """Whether theta is conjugation by a diagonal matrix."""
        return self.kind in (PairKind.AIII, PairKind.CI, PairKind.CII)

    def k_description(self) -> str:
        n = self.group.n
        return {
            PairKind.AI: f"SO_{n}",
            PairKind.AII: f"Sp_{n}",
            PairKind.AIII: f"GL_{self.p} x GL_{self.q}",
            PairKind.CI: f"GL_{n}",
            PairKind.CII: f"Sp_{2 * self.p} x Sp_{2 * self.q}",
        }[self.kind]

    def __str__(self) -> str:
        if self.kind in (PairKind.AIII, PairKind.CII):
            return f"{self.kind.value}:{self.p},{self.q}"
        return f"{self.kind.value}:{self.group.n}"


KShape = Composition | SymplecticComposition


@dataclass(frozen=True)
class KParabolicSpec:
    """A parabolic of K, one shape per simple factor of K.

    AIII: (Composition of p, Composition of q).
    CII:  (SymplecticComposition of 2p, SymplecticComposition of 2q).
    AI:   a single palindromic Composition of n (an SO_n flag shape).
    AII:  a single SymplecticComposition of n (K = Sp_n, even n).
    CI:   a single Composition of n (K = GL_n).
    """

    pair: SymmetricPairSpec
    factors: tuple[KShape, ...]

    def __post_init__(self):
        kind = self.pair.kind
        n, p, q = self.pair.group.n, self.pair.p, self.pair.q
        want: list[tuple[type, int]]
        if kind is PairKind.AIII:
            want = [(Composition, p), (Composition, q)]
        elif kind is PairKind.CII:
            want = [(SymplecticComposition, 2 * p), (SymplecticComposition, 2 * q)]
        elif kind is PairKind.AI:
            want = [(Composition, n)]
        elif kind is PairKind.AII:
            want = [(SymplecticComposition, n)]
        else:
            want = [(Composition, n)]
        if len(self.factors) != len(want):
            raise ValueError(f"{kind.value} needs {len(want)} factor shape(s)")
        for shape, (typ, size) in zip(self.factors, want):
            if not isinstance(shape, typ):
                raise ValueError(f"{kind.value} factor needs {typ.__name__}")
            if shape.size != size:
                raise ValueError(
                    f"{kind.value} factor size {shape.size}, expected {size}"
                )
        if kind is PairKind.AI and not self.factors[0].is_palindromic:
            raise ValueError("AI flag shapes must be palindromic")

    @classmethod
    def parse(cls, pair: SymmetricPairSpec, text: str) -> "KParabolicSpec":
        """Factors separated by ';', each a comma-separated shape."""
        chunks = [c for c in (t.strip() for t in text.split(";")) if c]
        kind = pair.kind
        if kind is PairKind.AIII:
            shapes: tuple[KShape, ...] = tuple(Composition.parse(c) for c in chunks)
        elif kind is PairKind.CII:
            shapes = tuple(SymplecticComposition.parse(c) for c in chunks)
        elif kind is PairKind.AII:
            shapes = tuple(SymplecticComposition.parse(c) for c in chunks)
        else:
            shapes = tuple(Composition.parse(c) for c in chunks)
        try:
            return cls(pair, shapes)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc

    def conjugacy_key(self):
        """Hashable key identifying the K-conjugacy class.

        GL factors are unordered (sort parts); Sp and SO factors are
        determined by their isotropic flag dimensions, i.e. by the
        shape itself.
        """
        keys = []
        for shape in self.factors:
            if isinstance(shape, Composition) and self.pair.kind is not PairKind.AI:
                keys.append(("gl", shape.sorted_key()))
            elif isinstance(shape, Composition):
                keys.append(("so", shape.parts))
            else:
                keys.append(("sp", shape.full_parts))
        return tuple(keys)

    @property
    def is_whole_K(self) -> bool:
        return all(not f.is_proper for f in self.factors)

    def __str__(self) -> str:
        return ";".join(str(f) for f in self.factors)


def whole_K(pair: SymmetricPairSpec) -> KParabolicSpec:
    """Q = K itself (the point flag variety)."""
    n, p, q = pair.group.n, pair.p, pair.q
    kind = pair.kind
    if kind is PairKind.AIII:
        return KParabolicSpec(pair, (Composition((p,)), Composition((q,))))
    if kind is PairKind.CII:
        return KParabolicSpec(
            pair,
            (SymplecticComposition((), 2 * p), SymplecticComposition((), 2 * q)),
        )
    if kind is PairKind.AII:
        return KParabolicSpec(pair, (SymplecticComposition((), n),))
    return KParabolicSpec(pair, (Composition((n,)),))


def _check_membership(pair: SymmetricPairSpec, P: ParabolicSpec) -> None:
    if P.group != pair.group:
        raise ValueError(f"parabolic of {P.group} does not live in pair {pair}")


def theta_on_parabolic(pair: SymmetricPairSpec, P: ParabolicSpec) -> ParabolicSpec:
    """A spec in the conjugacy class of theta(P).

    Inner involutions (AIII, CI, CII) fix every class.  For AI and AII
    the class of theta(P) is the opposite parabolic's, represented as
    the same orientation with reversed composition.
    """
    _check_membership(pair, P)
    if pair.is_inner:
        return P
    assert isinstance(P.shape, Composition)
    return ParabolicSpec(P.group, P.shape.reversed_(), P.orientation)


def is_theta_stable(pair: SymmetricPairSpec, P: ParabolicSpec) -> bool:
    """Whether the fixed matrix realization of P is preserved by theta."""
    _check_membership(pair, P)
    if pair.is_inner:
        return True
    assert isinstance(P.shape, Composition)
    return P.shape.is_palindromic


def _clip_overlap(parts: tuple[int, ...], cut: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split each block of a flag shape at coordinate ``cut``.

    Returns (sizes within the first ``cut`` coordinates, sizes within the
    rest), block by block, zeros kept.
    """
    lo, hi = [], []
    start = 0
    for part in parts:
        end = start + part
        inside = max(0, min(end, cut) - min(start, cut))
        lo.append(inside)
        hi.append(part - inside)
        start = end
    return tuple(lo), tuple(hi)


def _drop_zeros(parts: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(p for p in parts if p)


def intersect_with_K(pair: SymmetricPairSpec, P: ParabolicSpec) -> KParabolicSpec:
    """The K-parabolic Q = K intersected with P, in factor-shape form.

    Requires a theta-stable spec.  Orientation does not matter: the
    Opposite spec meets K in the opposite K-parabolic of the same class.
    """
    if not is_theta_stable(pair, P):
        raise ValueError(f"{P} is not theta-stable for {pair}")
    kind = pair.kind
    n, p = pair.group.n, pair.p
    if kind is PairKind.AIII:
        assert isinstance(P.shape, Composition)
        b, c = _clip_overlap(P.shape.parts, p)
        return KParabolicSpec(
            pair, (Composition(_drop_zeros(b)), Composition(_drop_zeros(c)))
        )
    if kind is PairKind.AI:
        assert isinstance(P.shape, Composition)
        return KParabolicSpec(pair, (P.shape,))
    if kind is PairKind.AII:
        assert isinstance(P.shape, Composition)
        return KParabolicSpec(
            pair, (SymplecticComposition.from_full(P.shape.parts),)
        )
    if kind is PairKind.CI:
        assert isinstance(P.shape, SymplecticComposition)
        tail = n - sum(P.shape.left)
        parts = _drop_zeros(P.shape.left + (tail,))
        return KParabolicSpec(pair, (Composition(parts),))
    # CII: each isotropic step splits between the two symplectic factors
    assert isinstance(P.shape, SymplecticComposition)
    b, c = _clip_overlap(P.shape.left, p)
    q = pair.q
    facp = SymplecticComposition(_drop_zeros(b), 2 * (p - sum(b)))
    facq = SymplecticComposition(_drop_zeros(c), 2 * (q - sum(c)))
    return KParabolicSpec(pair, (facp, facq))
