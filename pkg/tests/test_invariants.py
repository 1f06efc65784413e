"""Cross-module invariants: the classification tables against the
finite-field oracle, and clan counts at both small primes.

In type A the stabilizer of any tuple of flags is the unit group of the
endomorphism algebra of the configuration, hence connected, so orbit
counts of finite-type triples are literally equal across fields; for
infinite types they grow.  The sweeps below check both directions.
The first slot of each triple plays the role of the transitive factor
in the orbit reduction, so the largest variety is listed first.
"""

import itertools

from dflag.clans import enumerate_clans
from dflag.classify import mwz_classify_A
from dflag.compositions import Composition as C
from dflag.flags import flag_count
from dflag.groups import ParabolicSpec, borel, gl
from dflag.orbits import count_K_orbits, count_triple_orbits
from dflag.pairs import SymmetricPairSpec, whole_K

CAP = 300_000


def _proper_comps(n):
    out = []
    for cuts in range(1 << (n - 1)):
        parts, last = [], 0
        for i in range(1, n):
            if cuts >> (i - 1) & 1:
                parts.append(i - last)
                last = i
        parts.append(n - last)
        if len(parts) >= 2:
            out.append(tuple(parts))
    return out


def _reduced_size(n, shapes, q):
    size = 1
    for s in shapes[1:]:
        size *= flag_count(gl(n), C(s), q)
    return size


def _sweep(n, triples):
    checked = 0
    for shapes in triples:
        if any(_reduced_size(n, shapes, q) > CAP for q in (2, 3)):
            continue
        specs = [ParabolicSpec(gl(n), C(s)) for s in shapes]
        counts = [count_triple_orbits(gl(n), specs, q) for q in (2, 3)]
        finite = mwz_classify_A(*(C(s) for s in shapes)).finite
        if finite:
            assert counts[0] == counts[1], (n, shapes, counts)
        else:
            assert counts[0] < counts[1], (n, shapes, counts)
        checked += 1
    return checked


def test_mwz_exhaustive_versus_oracle_rank3():
    shapes = _proper_comps(3)
    checked = _sweep(3, itertools.product(shapes, repeat=3))
    assert checked == len(shapes) ** 3


def test_mwz_exhaustive_versus_oracle_rank4_selected():
    # representatives of every table family plus an infinite case
    triples = [
        ((1, 1, 1, 1), (3, 1), (2, 2)),  # S (and D) rows
        ((2, 2), (2, 2), (2, 2)),  # D row
        ((2, 1, 1), (2, 2), (2, 1, 1)),  # E_6 (plus E^{(a)}, E^{(b)})
        ((1, 1, 1, 1), (2, 2), (2, 1, 1)),  # E_7 via lengths (4, 2, 3)
        ((1, 1, 1, 1), (3, 1), (2, 1, 1)),  # E^{(b)}: the length-3 slot has a 1
        ((2, 1, 1), (2, 1, 1), (2, 1, 1)),  # infinite: lengths (3, 3, 3)
    ]
    checked = _sweep(4, triples)
    assert checked == len(triples)


def test_mwz_oracle_spot_checks_rank5():
    finite_triples = [
        ((3, 2), (4, 1), (4, 1)),  # maximal shapes: D row
        ((2, 2, 1), (4, 1), (4, 1)),  # lengths (3, 2, 2): D row
    ]
    for shapes in finite_triples:
        specs = [ParabolicSpec(gl(5), C(s)) for s in shapes]
        counts = [count_triple_orbits(gl(5), specs, q) for q in (2, 3)]
        assert mwz_classify_A(*(C(s) for s in shapes)).finite
        assert counts[0] == counts[1], (shapes, counts)


def test_clan_counts_at_both_primes():
    for p, q in [(1, 1), (2, 1), (2, 2), (3, 1)]:
        pair = SymmetricPairSpec.parse(f"AIII:{p},{q}")
        expected = len(enumerate_clans(p, q))
        for field in (2, 3):
            got = count_K_orbits(pair, borel(gl(p + q)), whole_K(pair), field)
            assert got == expected, (p, q, field)
