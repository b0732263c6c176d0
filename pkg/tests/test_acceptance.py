"""The eight acceptance criteria, each with its tolerance and wall-clock bound.

Every test records a one-line PASS/FAIL summary that is printed at the end
of the pytest run.
"""

import itertools
import random
import time

from conftest import ACCEPTANCE_LINES
from clover_milnor.classify import Verdict, classify_4clover, fingerprint
from clover_milnor.hset import hset_generators, hset_member, lattices_equal
from clover_milnor.magnus import expand, inverse, mul
from clover_milnor.milnor import TanglePresentation, milnor_number, mu_table, seq_basis
from clover_milnor.realize import realize
from clover_milnor.sampling import random_gamma, random_string_link, random_word
from clover_milnor.slmove import congruence_report, linking_of, prop_delta_formula, sl_move
from clover_milnor.word import GroupWord, commutator, concat, invert, iterated_commutator
from clover_milnor.zlattice import IntMatrix, member, same_span
from strategies import brute_solutions
from tables import BASIS, expected_generators


def record(number, title, ok, elapsed, limit, detail=""):
    status = "PASS" if ok and elapsed < limit else "FAIL"
    extra = f"; {detail}" if detail else ""
    ACCEPTANCE_LINES.append(f"[{status}] criterion {number}: {title} ({elapsed:.2f}s < {limit}s{extra})")
    assert ok, detail
    assert elapsed < limit, f"took {elapsed:.2f}s, bound {limit}s"


def test_criterion_1_magnus_homomorphism():
    rng = random.Random(101)
    t0 = time.perf_counter()
    bad = 0
    for _ in range(200):
        n, q = rng.randint(1, 5), rng.randint(1, 5)
        v = random_word(rng, n, rng.randint(0, 12))
        w = random_word(rng, n, rng.randint(0, 12))
        bad += expand(concat(v, w), q) != mul(expand(v, q), expand(w, q))
        bad += inverse(expand(w, q)) != expand(invert(w), q)
    record(1, "Magnus homomorphism, 200 word pairs", bad == 0, time.perf_counter() - t0, 5,
           f"{bad} mismatches")


def _tangle_with_mu(rng, mu2):
    """lambda_j = prod_p alpha_p^mu(pj), with random degree-3 commutators on lambda_4."""
    longs = []
    for j in range(1, 5):
        w = GroupWord.identity(4)
        for p in range(1, 5):
            if p != j:
                w = w * GroupWord.generator(4, p, mu2[(p, j)])
        longs.append(w)
    for _ in range(rng.randint(0, 3)):
        a, b, c = rng.sample([1, 2, 3], 3)
        gens = [GroupWord.generator(4, x) for x in (a, b, c)]
        longs[3] = longs[3] * iterated_commutator(gens) ** rng.choice([1, -1])
    return TanglePresentation(4, longs)


def test_criterion_2_reference_table():
    rng = random.Random(202)
    t0 = time.perf_counter()
    bad = 0
    for _ in range(20):
        mu2 = {}
        for p, q in itertools.combinations(range(1, 5), 2):
            mu2[(p, q)] = mu2[(q, p)] = rng.randint(-3, 3)
        t = _tangle_with_mu(rng, mu2)
        table = mu_table(t, 4, non_repeated_only=True)
        L = hset_generators(t, 1, 4)
        bad += any(table[pq] != v for pq, v in mu2.items())
        bad += L.gens.tolist() != expected_generators(mu2)
        bad += list(L.base) != [table[S + (4,)] for S in BASIS]
    record(2, "H(4,4) generator rows vs hand-coded table, 20 symmetric mu", bad == 0,
           time.perf_counter() - t0, 1, f"{bad} mismatches")


def test_criterion_3_closed_form():
    rng = random.Random(303)
    t0 = time.perf_counter()
    cases = [(4, 1), (5, 1), (4, 2), (5, 2), (6, 2)]
    instances = nonvacuous = monomials = nonzero = bad = 0
    for trial in range(90):
        n, k = cases[trial % len(cases)]
        gamma, u = random_gamma(rng, n, k), random_string_link(rng, n)
        instances += 1
        if 2 * k + 1 > n - 1:
            # no non-repeated j-free sequence of length 2k+1 exists; nothing to compare
            continue
        nonvacuous += 1
        moved = sl_move(gamma, u, 2 * k + 1)
        mu = mu_table(gamma, 2 * k + 2, non_repeated_only=True)
        m = linking_of(u)
        for j in range(1, n + 1):
            pred = prop_delta_formula(mu, m, k, j, n)
            for S in seq_basis(n, j, 2 * k + 1):
                monomials += 1
                diff = milnor_number(moved, S + (j,)) - milnor_number(gamma, S + (j,))
                nonzero += diff != 0
                bad += diff != pred.get(S, 0)
    ok = bad == 0 and nonvacuous >= 50 and nonzero > 0
    record(3, f"closed-form degree-(2k+1) change, {nonvacuous} non-vacuous of {instances} instances",
           ok, time.perf_counter() - t0, 60, f"{monomials} monomials, {nonzero} nonzero changes, {bad} mismatches")


def _congruence_runs():
    rng = random.Random(404)
    rows = []
    triples = 0
    for trial in range(40):
        n, k = [(3, 1), (4, 1), (3, 2), (4, 2)][trial % 4]
        gamma, u = random_gamma(rng, n, k), random_string_link(rng, n)
        for r in congruence_report(gamma, u, k, 2 * k + 2):
            rows.append((k, r))
            triples += 1
    return triples, rows


_CONGRUENCE = {}


def _cached_runs():
    if not _CONGRUENCE:
        t0 = time.perf_counter()
        _CONGRUENCE["data"] = _congruence_runs()
        _CONGRUENCE["elapsed"] = time.perf_counter() - t0
    return _CONGRUENCE["data"], _CONGRUENCE["elapsed"]


def test_criterion_4_congruence():
    (triples, rows), elapsed = _cached_runs()
    bad = sum(not r.ok for _, r in rows)
    top = [r for k, r in rows if len(r.seq) == 2 * k + 2]
    moved = sum(r.after != r.before for r in top)
    ok = bad == 0 and triples >= 100 and moved > 0
    record(4, f"mu' = mu mod delta^k over {triples} (gamma, u, I) triples", ok, elapsed, 60,
           f"{moved} length-(2k+2) values changed, {bad} violations")


def test_criterion_5_short_invariance():
    (triples, rows), elapsed = _cached_runs()
    short = [r for k, r in rows if len(r.seq) <= 2 * k + 1]
    bad = sum(r.after != r.before for r in short)
    nontrivial = sum(r.before != 0 for r in short if len(r.seq) > 1)
    ok = bad == 0 and len(short) >= 100 and nontrivial > 0
    record(5, f"length <= 2k+1 Milnor numbers unchanged, {len(short)} checks", ok, elapsed, 60,
           f"{nontrivial} nonzero values, {bad} changed")


def test_criterion_6_lattice_invariance():
    rng = random.Random(606)
    t0 = time.perf_counter()
    cases = [(4, 1), (5, 1), (6, 2)]
    checked = bad = moved_base = 0
    for trial in range(24):
        n, k = cases[trial % 3]
        gamma, u = random_gamma(rng, n, k), random_string_link(rng, n)
        moved = sl_move(gamma, u, 2 * k + 1)
        for j in range(1, n + 1):
            L1, L2 = hset_generators(gamma, k, j), hset_generators(moved, k, j)
            checked += 1
            moved_base += L1.base != L2.base
            ok = hset_member(L1, L2.base) and hset_member(L2, L1.base) and same_span(L1.gens, L2.gens)
            bad += not (ok and lattices_equal(L1, L2))
    record(6, f"H(2k+2, j) unchanged by SL-moves, 24 (gamma, u), {checked} lattices",
           bad == 0 and moved_base > 0, time.perf_counter() - t0, 60,
           f"{moved_base} base points moved, {bad} mismatches")


def test_criterion_7_lattice_oracle():
    rng = random.Random(707)
    t0 = time.perf_counter()
    systems = bad = members = 0
    while systems < 100:
        A = [[rng.randint(-4, 4) for _ in range(3)] for _ in range(4)]
        if rng.random() < 0.5:
            x0 = [rng.randint(-5, 5) for _ in range(3)]
            b = list(IntMatrix.from_rows(A) @ x0)
        else:
            b = [rng.randint(-6, 6) for _ in range(4)]
        systems += 1
        x = member(A, b)
        brute = next(brute_solutions(A, b, 5), None)
        if x is not None:
            members += 1
            bad += list(IntMatrix.from_rows(A) @ x) != b
        bad += (x is None) != (brute is None)
    record(7, "HNF membership vs brute force on 100 random 4x3 systems", bad == 0 and 0 < members < 100,
           time.perf_counter() - t0, 10, f"{members} members, {bad} disagreements")


def _perturb(rng, t):
    """Change some non-repeated mu of length 2 or 3, keeping zero framing."""
    longs = list(t.longitudes)
    if rng.random() < 0.5:
        p, q = rng.sample(range(1, 5), 2)
        e = rng.choice([-2, -1, 1, 2])
        longs[q - 1] = longs[q - 1] * GroupWord.generator(4, p, e)
        longs[p - 1] = longs[p - 1] * GroupWord.generator(4, q, e)
    else:
        a, b, j = rng.sample(range(1, 5), 3)
        c = commutator(GroupWord.generator(4, a), GroupWord.generator(4, b))
        longs[j - 1] = longs[j - 1] * c ** rng.choice([-1, 1])
    return TanglePresentation(4, longs)


def test_criterion_8_classifier():
    rng = random.Random(808)
    t0 = time.perf_counter()
    eq_bad = ineq_bad = 0
    for _ in range(20):
        gamma, u = random_gamma(rng, 4, 1), random_string_link(rng, 4)
        other = TanglePresentation(4, [realize(s) for s in sl_move(gamma, u, 3).series])
        eq_bad += classify_4clover(gamma, other) is not Verdict.EQUIVALENT
    for _ in range(20):
        gamma = random_gamma(rng, 4, 1)
        other = _perturb(rng, gamma)
        if fingerprint(gamma) == fingerprint(other):
            ineq_bad += 1
            continue
        ineq_bad += classify_4clover(gamma, other) is not Verdict.INEQUIVALENT
    record(8, "classifier: 20 SL-move pairs equivalent, 20 mu-perturbed pairs inequivalent",
           eq_bad == 0 and ineq_bad == 0, time.perf_counter() - t0, 30,
           f"{eq_bad} equivalent-pair errors, {ineq_bad} inequivalent-pair errors")
