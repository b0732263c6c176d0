"""Seeded randomized property runs behind ``clover-milnor verify``.

Every suite takes a seed and a trial count and returns a plain dict, so a
run is fully determined by its arguments.
"""

from __future__ import annotations

import random
from typing import Callable

from .hset import hset_generators, lattices_equal
from .magnus import expand, inverse, mul
from .milnor import SeriesPresentation, milnor_number, mu_table, seq_basis
from .sampling import random_gamma, random_string_link, random_word
from .slmove import SLMoveInput, congruence_report, linking_of, prop_delta_formula, transform
from .word import concat, invert


def _report(name: str, seed: int, trials: int, checked: int, failures: list) -> dict:
    return {
        "prop": name,
        "seed": seed,
        "trials": trials,
        "checked": checked,
        "failures": failures[:20],
        "failure_count": len(failures),
        "passed": not failures,
    }


def magnus_homomorphism(seed: int, trials: int = 200) -> dict:
    rng = random.Random(seed)
    checked, failures = 0, []
    for t in range(trials):
        n, q = rng.randint(1, 5), rng.randint(1, 5)
        v = random_word(rng, n, rng.randint(0, 12))
        w = random_word(rng, n, rng.randint(0, 12))
        checked += 2
        if expand(concat(v, w), q) != mul(expand(v, q), expand(w, q)):
            failures.append({"trial": t, "check": "multiplicative", "v": v.to_pairs(), "w": w.to_pairs()})
        if inverse(expand(w, q)) != expand(invert(w), q):
            failures.append({"trial": t, "check": "inverse", "w": w.to_pairs()})
    return _report("magnus-hom", seed, trials, checked, failures)


def sl_congruence(seed: int, trials: int = 20) -> dict:
    """Congruence mod delta^k for all |I| <= 2k+2, and exact invariance for |I| <= 2k+1."""
    rng = random.Random(seed)
    checked, failures = 0, []
    for t in range(trials):
        n, k = rng.choice([3, 4]), rng.choice([1, 2])
        gamma, u = random_gamma(rng, n, k), random_string_link(rng, n)
        for row in congruence_report(gamma, u, k, 2 * k + 2):
            checked += 1
            exact = len(row.seq) <= 2 * k + 1
            if not row.ok or (exact and row.after != row.before):
                failures.append({"trial": t, "n": n, "k": k, "seq": list(row.seq),
                                 "before": row.before, "after": row.after, "modulus": row.modulus})
    return _report("sl-congruence", seed, trials, checked, failures)


def _closed_form_case(rng: random.Random, n: int, k: int) -> tuple[int, list]:
    gamma, u = random_gamma(rng, n, k), random_string_link(rng, n)
    q = 2 * k + 1
    moved = SeriesPresentation(n, tuple(transform(SLMoveInput(gamma, u, q))))
    mu = mu_table(gamma, 2 * k + 2, non_repeated_only=True)
    m = linking_of(u)
    checked, bad = 0, []
    for j in range(1, n + 1):
        pred = prop_delta_formula(mu, m, k, j, n)
        for S in seq_basis(n, j, 2 * k + 1):
            checked += 1
            diff = milnor_number(moved, S + (j,)) - milnor_number(gamma, S + (j,))
            if diff != pred.get(S, 0):
                bad.append({"n": n, "k": k, "j": j, "S": list(S), "transform": diff, "formula": pred.get(S, 0)})
    return checked, bad


def sl_closed_form(seed: int, trials: int = 50) -> dict:
    rng = random.Random(seed)
    checked, failures = 0, []
    for t in range(trials):
        n, k = rng.choice([(4, 1), (5, 1), (6, 2)])
        c, bad = _closed_form_case(rng, n, k)
        checked += c
        failures.extend(dict(b, trial=t) for b in bad)
    return _report("sl-closed-form", seed, trials, checked, failures)


def hset_invariance(seed: int, trials: int = 20) -> dict:
    rng = random.Random(seed)
    checked, failures = 0, []
    for t in range(trials):
        n, k = rng.choice([(4, 1), (5, 1), (6, 2)])
        gamma, u = random_gamma(rng, n, k), random_string_link(rng, n)
        moved = SeriesPresentation(n, tuple(transform(SLMoveInput(gamma, u, 2 * k + 1))))
        for j in range(1, n + 1):
            checked += 1
            if not lattices_equal(hset_generators(gamma, k, j), hset_generators(moved, k, j)):
                failures.append({"trial": t, "n": n, "k": k, "j": j})
    return _report("hset-invariance", seed, trials, checked, failures)


SUITES: dict[str, Callable[..., dict]] = {
    "magnus-hom": magnus_homomorphism,
    "sl-congruence": sl_congruence,
    "sl-closed-form": sl_closed_form,
    "hset-invariance": hset_invariance,
}


def run_suite(name: str, seed: int, trials: int | None = None) -> dict:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown property suite {name!r}; choose from {sorted(SUITES)}") from None
    return fn(seed) if trials is None else fn(seed, trials)
