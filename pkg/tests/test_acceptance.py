"""Acceptance suite: one test per criterion, each printing a PASS/FAIL
line and enforcing its stated runtime budget.

The table-reproduction check compares the library against an
independent transcription of the classification rows kept in this file;
the oracle checks compare decisions against brute-force orbit counts
over small prime fields.
"""

import itertools
import math
import time
from contextlib import contextmanager

from dflag.clans import enumerate_clans
from dflag.classify import (
    Status,
    classify_AIII_borel,
    classify_double_flag,
    mwz_classify_A,
    mwz_classify_C,
)
from dflag.compositions import Composition as C
from dflag.compositions import SymplecticComposition as SC
from dflag.groups import ParabolicSpec, borel, gl, sp
from dflag.lr import (
    Partition,
    lr_coefficient,
    restrict_to_levi,
    spherical_probe_restriction,
    spherical_probe_tensor,
    tensor_decompose,
    weyl_dim_gl,
)
from dflag.orbits import count_K_orbits, count_triple_orbits, growth_probe
from dflag.pairs import KParabolicSpec, SymmetricPairSpec, whole_K
from dflag.weyl import bruhat_double_cosets, twisted_involutions

P = Partition


@contextmanager
def criterion(number: int, description: str, budget_seconds: float | None = None):
    start = time.monotonic()
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {number}: FAIL - {description}")
        raise
    elapsed = time.monotonic() - start
    if budget_seconds is not None:
        assert elapsed < budget_seconds, (
            f"criterion {number} took {elapsed:.1f}s, budget {budget_seconds}s"
        )
    print(f"ACCEPTANCE {number}: PASS - {description} ({elapsed:.1f}s)")


def _comps(n):
    out = []
    for cuts in range(1 << (n - 1)):
        parts, last = [], 0
        for i in range(1, n):
            if cuts >> (i - 1) & 1:
                parts.append(i - last)
                last = i
        parts.append(n - last)
        out.append(tuple(parts))
    return out


def _proper_comps(n):
    return [c for c in _comps(n) if len(c) >= 2]


def _proper_sp_shapes(n):
    shapes = []
    for d in range(1, n + 1):
        for left in _comps(d):
            cand = SC(left, 2 * (n - d))
            if cand.is_proper:
                shapes.append(cand)
    return shapes


# Independent transcription of the type A rows: lengths pattern plus
# extra conditions, applied over all slot assignments.
def _hand_rows_A(n, triple):
    rows = set()
    for a, b, c in itertools.permutations(triple):
        la, lb, lc = len(a), len(b), len(c)
        sa = tuple(sorted(a, reverse=True))
        if la != 2:
            continue
        if sa == (n - 1, 1):
            rows.add("S_{q,r}")
        if lb == 2:
            rows.add("D_{r+2}")
        if lb == 3 and lc == 3:
            rows.add("E_6")
        if lb == 3 and lc == 4:
            rows.add("E_7")
        if lb == 3 and lc == 5:
            rows.add("E_8")
        if lb == 3 and n >= 4 and sa == (n - 2, 2):
            rows.add("E^{(a)}_{r+3}")
        if lb == 3 and 1 in b:
            rows.add("E^{(b)}_{r+3}")
    return rows


# Independent transcription of the type C rows over full palindromes.
def _hand_rows_C(n, triple):
    rows = set()
    pencil = (1, 2 * n - 2, 1)
    for a, b, c in itertools.permutations(triple):
        la, lb, lc = len(a), len(b), len(c)
        if la == 2 and lb == 2:
            rows.add("SpD_{r+2}")
        if la == 2 and lb == 3 and lc == 3:
            rows.add("SpE_6")
        if la == 2 and lb == 3 and lc == 4:
            rows.add("SpE_7")
        if la == 2 and lb == 3 and lc == 5:
            rows.add("SpE_8")
        if la == 2 and lb == 3 and b == pencil and lc >= 3:
            rows.add("SpE^{(b)}_{r+3}")
        if la == 3 and lb == 3 and a == pencil and b == pencil and lc >= 3:
            rows.add("SpY_{4,r}")
    return rows


def test_criterion_1_mwz_table_reproduction():
    with criterion(1, "MWZ table reproduction (A: n=3,4,5; C: n=2,3)", 10.0):
        for n in (3, 4, 5):
            shapes = _proper_comps(n)
            for a in shapes:
                for b in shapes:
                    for c in shapes:
                        verdict = mwz_classify_A(C(a), C(b), C(c))
                        expected = _hand_rows_A(n, (a, b, c))
                        assert verdict.finite == bool(expected), (n, a, b, c)
                        assert set(verdict.families()) == expected, (n, a, b, c)
        for n in (2, 3):
            shapes = _proper_sp_shapes(n)
            for a in shapes:
                for b in shapes:
                    for c in shapes:
                        verdict = mwz_classify_C(a, b, c)
                        expected = _hand_rows_C(
                            n, (a.full_parts, b.full_parts, c.full_parts)
                        )
                        assert verdict.finite == bool(expected), (n, a, b, c)
                        assert set(verdict.families()) == expected, (n, a, b, c)


def test_criterion_2_bruhat_exactness():
    with criterion(2, "triple-orbit pair counts equal Bruhat double cosets", 60.0):
        for n in (2, 3, 4):
            specs = [ParabolicSpec(gl(n), C(c)) for c in _comps(n)]
            for P1 in specs:
                for P2 in specs:
                    expected = bruhat_double_cosets(P1, P2).count
                    for q in (2, 3):
                        got = count_triple_orbits(gl(n), [P1, P2], q)
                        assert got == expected, (n, P1.shape, P2.shape, q)
        sp_specs = [ParabolicSpec(sp(2), SC((), 4))] + [
            ParabolicSpec(sp(2), s) for s in _proper_sp_shapes(2)
        ]
        for P1 in sp_specs:
            for P2 in sp_specs:
                expected = bruhat_double_cosets(P1, P2).count
                for q in (2, 3):
                    got = count_triple_orbits(sp(2), [P1, P2], q)
                    assert got == expected, (P1.shape, P2.shape, q)


def test_criterion_3_clans_match_orbit_counts():
    with criterion(3, "clan counts equal K-orbit counts on full flags", 120.0):
        expected_small = {(1, 1): 3, (2, 1): 6}
        for p, q in [(1, 1), (2, 1), (2, 2), (3, 1)]:
            pair = SymmetricPairSpec.parse(f"AIII:{p},{q}")
            clans = len(enumerate_clans(p, q))
            orbits = count_K_orbits(pair, borel(gl(p + q)), whole_K(pair), 2)
            assert clans == orbits, (p, q, clans, orbits)
            if (p, q) in expected_small:
                assert clans == expected_small[(p, q)]


def test_criterion_4_aiii_borel_theorem_both_directions():
    with criterion(4, "AIII Borel table matches oracle boundedness (p+q <= 4)", 600.0):
        for p in (1, 2):
            for q in range(p, 5 - p):
                n = p + q
                pair = SymmetricPairSpec.parse(f"AIII:{p},{q}")
                B = borel(gl(n))
                for s1 in _comps(p):
                    for s2 in _comps(q):
                        case = classify_AIII_borel(p, q, C(s1), C(s2))
                        Q = KParabolicSpec(pair, (C(s1), C(s2)))
                        report = growth_probe(pair, B, Q, q_list=(2, 3))
                        assert (case != "Infinite") == (report.hint == "Bounded"), (
                            p, q, s1, s2, case, report.entries,
                        )
        # the two pinned instances
        pair22 = SymmetricPairSpec.parse("AIII:2,2")
        blocked = growth_probe(
            pair22, borel(gl(4)), KParabolicSpec.parse(pair22, "1,1;1,1")
        )
        assert blocked.hint == "Growing"
        pair13 = SymmetricPairSpec.parse("AIII:1,3")
        for s2 in _comps(3):
            report = growth_probe(
                pair13, borel(gl(4)), KParabolicSpec(pair13, (C((1,)), C(s2)))
            )
            assert report.hint == "Bounded", s2


def test_criterion_5_finite_verdicts_confirmed_by_oracle():
    # Type A probes run at the default q = 2, 3.  Type C probes run at
    # odd characteristics (3, 5): over F_2 the square classes collapse,
    # so CI orbit counts of genuinely finite varieties can differ
    # between q = 2 and odd q (disconnected stabilizers); see the
    # documented caveat test in the oracle suite.
    with criterion(5, "every FiniteProven verdict is oracle-confirmed", 600.0):
        confirmed = 0
        for p in (1, 2, 3):
            for q in range(1, 5 - p):
                n = p + q
                pair = SymmetricPairSpec.parse(f"AIII:{p},{q}")
                for shape in _comps(n):
                    P = ParabolicSpec(gl(n), C(shape))
                    for s1 in _comps(p):
                        for s2 in _comps(q):
                            Q = KParabolicSpec(pair, (C(s1), C(s2)))
                            verdict, _ = classify_double_flag(pair, P, Q)
                            if verdict.status is Status.FINITE_PROVEN:
                                report = growth_probe(pair, P, Q, q_list=(2, 3))
                                assert report.hint == "Bounded", (
                                    str(pair), shape, s1, s2, report.entries,
                                )
                                confirmed += 1
        ci = SymmetricPairSpec.parse("CI:2")
        cii = SymmetricPairSpec.parse("CII:1,1")
        ci_qs = [KParabolicSpec(ci, (C(c),)) for c in _comps(2)]
        sp1 = [SC((), 2), SC((1,), 0)]
        cii_qs = [KParabolicSpec(cii, (a, b)) for a in sp1 for b in sp1]
        for pair, qspecs in ((ci, ci_qs), (cii, cii_qs)):
            for shape in _proper_sp_shapes(2):
                Pspec = ParabolicSpec(sp(2), shape)
                for Q in qspecs:
                    verdict, _ = classify_double_flag(pair, Pspec, Q)
                    if verdict.status is Status.FINITE_PROVEN:
                        report = growth_probe(pair, Pspec, Q, q_list=(3, 5))
                        assert report.hint == "Bounded", (
                            str(pair), str(shape), str(Q), report.entries,
                        )
                        confirmed += 1
        assert confirmed >= 100


def test_criterion_6_sphericity_implication_suite():
    with criterion(6, "tensor sweep implies restriction sweep; Kramer pairs pass", 300.0):
        for n in range(2, 6):
            for shape in _comps(n):
                Pspec = ParabolicSpec(gl(n), C(shape))
                pair_any = SymmetricPairSpec.parse(f"AIII:1,{n - 1}")
                tensor = spherical_probe_tensor(Pspec, pair_any, 3, 3)
                if tensor.multiplicity_free:
                    for p in range(1, n):
                        restr = spherical_probe_restriction(Pspec, p, n - p, 3)
                        assert restr.multiplicity_free, (n, shape, p)
        # the Kramer pair restricts multiplicity freely for every P
        for n in range(2, 6):
            for shape in _comps(n):
                Pspec = ParabolicSpec(gl(n), C(shape))
                restr = spherical_probe_restriction(Pspec, 1, n - 1, 3)
                assert restr.multiplicity_free, (n, shape)


def _partitions_up_to(size, max_rows):
    out = [()]
    for total in range(1, size + 1):
        def rec(remaining, max_part, acc):
            if remaining == 0:
                out.append(tuple(acc))
                return
            if len(acc) == max_rows:
                return
            for part in range(min(remaining, max_part), 0, -1):
                rec(remaining - part, part, acc + [part])

        rec(total, total, [])
    return out


def test_criterion_7_branching_arithmetic():
    with criterion(7, "LR symmetry and dimension audits are exact", 300.0):
        assert lr_coefficient(P((3, 2, 1)), P((2, 1)), P((2, 1))) == 2
        assert weyl_dim_gl(P((2, 1)), 3) == 8
        small = _partitions_up_to(6, 4)
        # symmetry
        for lam_p in small:
            lam = P(lam_p)
            for mu_p in _partitions_up_to(lam.size, 4):
                for nu_p in _partitions_up_to(lam.size - sum(mu_p), 4):
                    if sum(mu_p) + sum(nu_p) != lam.size:
                        continue
                    assert lr_coefficient(lam, P(mu_p), P(nu_p)) == lr_coefficient(
                        lam, P(nu_p), P(mu_p)
                    )
        # restriction audit across every Levi of GL_n, n <= 4
        for lam_p in small:
            lam = P(lam_p)
            for n in range(max(1, lam.rows), 5):
                dim = weyl_dim_gl(lam, n)
                for p in range(1, n):
                    q = n - p
                    if lam.rows > p + q:
                        continue
                    total = sum(
                        c * weyl_dim_gl(mu, p) * weyl_dim_gl(nu, q)
                        for (mu, nu), c in restrict_to_levi(lam, p, q)
                    )
                    assert total == dim, (lam_p, p, q)
        # tensor audit
        for lam_p in small:
            for mu_p in small:
                lam, mu = P(lam_p), P(mu_p)
                for n in (2, 3, 4):
                    if lam.rows > n or mu.rows > n:
                        continue
                    total = sum(
                        c * weyl_dim_gl(nu, n) for nu, c in tensor_decompose(lam, mu, n)
                    )
                    assert total == weyl_dim_gl(lam, n) * weyl_dim_gl(mu, n), (
                        lam_p, mu_p, n,
                    )


def test_criterion_8_combinatorial_counts():
    with criterion(8, "telephone numbers and hyperoctahedral orders", 60.0):
        telephone = [1, 2, 4, 10, 26]
        for n, expected in zip(range(1, 6), telephone):
            assert len(twisted_involutions(gl(n))) == expected
        for n in (1, 2, 3):
            order = bruhat_double_cosets(borel(sp(n)), borel(sp(n))).count
            assert order == 2**n * math.factorial(n)
