"""Exhaustive verification sweeps over desk-scale parameter ranges.

Each sweep yields (key, verdict) pairs, where key is a JSON-ready dict
identifying the instance.  The CLI and the acceptance tests share these
drivers so they exercise identical code paths.
"""

from __future__ import annotations

from math import gcd
from typing import Iterator

from .actions import Verdict, check_csp, check_refinement
from .insertion import label_spaces, leaves, phi, phi_inverse, predicted_maj_increment
from .formulas import (brute_gf, count_w_alpha_delta, feasible_deltas, is_nonempty,
                       macmahon_check, maj_gf_mod_n, params, period_g_check,
                       rotation_action, tilde_maj_gf, vandermonde_check,
                       verify_flex_universal)
from .qpoly import ResiduePoly, has_period
from .subsets import (verify_chain_refinement, verify_g_dd_trivial,
                      verify_isomorphic_actions, verify_mbs_csp,
                      verify_multisubset_refinement, verify_subset_star)
from .words import (cdt, enumerate_by_content, flex, maj, necklace, pad_to,
                    strip_trailing_zeros, strong_compositions)

SweepItem = tuple[dict, Verdict]


def iter_contents(n_max: int, max_parts: int = 4) -> Iterator[tuple]:
    for n in range(1, n_max + 1):
        for parts in range(1, min(max_parts, n) + 1):
            yield from strong_compositions(n, parts)


def cdt_groups(alpha) -> dict[tuple, list[tuple]]:
    """All words of the content, grouped by padded cyclic descent type."""
    m = len(alpha)
    groups: dict[tuple, list[tuple]] = {}
    for w in enumerate_by_content(alpha):
        groups.setdefault(pad_to(cdt(w), m), []).append(w)
    return groups


def sweep_main(n_max: int = 8, max_parts: int = 4) -> Iterator[SweepItem]:
    """The refinement CSP on every feasible content/CDT class: rotation
    against the brute-force maj generating function, both check methods."""
    for alpha in iter_contents(n_max, max_parts):
        n = sum(alpha)
        groups = cdt_groups(alpha)
        parent = rotation_action([w for ws in groups.values() for w in ws])
        for delta, words in sorted(groups.items()):
            f = brute_gf(words, n, maj)
            verdict = check_refinement(parent, words, f)
            yield {"alpha": alpha, "delta": delta}, verdict


def sweep_formulas(n_max: int = 10, max_parts: int = 4) -> Iterator[SweepItem]:
    """Closed forms against enumeration: the tilde generating function over
    words ending in 1, the mod q^n - 1 formula, and the counting formula;
    also confirms the emptiness test matches what enumeration finds."""
    for alpha in iter_contents(n_max, max_parts):
        n = sum(alpha)
        m = len(alpha)
        groups = cdt_groups(alpha)
        seen = set(groups)
        for delta in feasible_deltas(alpha):
            seen.add(delta)
        for delta in sorted(seen):
            words = groups.get(delta, [])
            witness = None
            if bool(words) != is_nonempty(alpha, delta):
                witness = {"check": "nonempty"}
            elif len(words) != count_w_alpha_delta(alpha, delta):
                witness = {"check": "count", "enumerated": len(words)}
            else:
                tilde = {}
                for w in words:
                    if w[-1] == 1:
                        tilde[maj(w)] = tilde.get(maj(w), 0) + 1
                formula = tilde_maj_gf(alpha, delta)
                if {e: c for e, c in enumerate(formula) if c} != tilde:
                    witness = {"check": "tilde_maj_gf"}
                else:
                    oracle = (brute_gf(words, n, maj) if words
                              else ResiduePoly.zero(n))
                    if oracle != maj_gf_mod_n(alpha, delta):
                        witness = {"check": "maj_gf_mod_n"}
            yield {"alpha": alpha, "delta": delta}, Verdict(witness is None, witness)


def sweep_phi(n_max: int = 10, max_parts: int = 4) -> Iterator[SweepItem]:
    """Bijectivity of the insertion encoding: over the whole label product,
    rebuilding then re-reading is the identity, the rebuilt words are
    exactly the enumerated words ending in 1, and every edge's predicted
    maj increment matches the actual change."""
    for alpha in iter_contents(n_max, max_parts):
        m = len(alpha)
        ending_in_one = {}
        for delta, words in cdt_groups(alpha).items():
            ending_in_one[delta] = {w for w in words if w[-1] == 1}
        for delta in feasible_deltas(alpha):
            witness = None
            built = set()
            for w in leaves(alpha, delta):
                image = phi(w)
                if phi_inverse(image, alpha, delta) != w:
                    witness = {"check": "roundtrip", "word": w}
                    break
                rebuilt = (1,) * alpha[0]
                ok = True
                for l, (falls, runs) in enumerate(image, start=2):
                    before = maj(rebuilt)
                    predicted = predicted_maj_increment(rebuilt, falls, runs)
                    from .insertion import insert_triple
                    rebuilt = insert_triple(rebuilt, l, falls, runs)
                    if maj(rebuilt) - before != predicted:
                        witness = {"check": "maj-increment", "word": w, "letter": l}
                        ok = False
                        break
                if not ok:
                    break
                built.add(w)
            if witness is None and built != ending_in_one.get(delta, set()):
                witness = {"check": "leaf-set"}
            yield {"alpha": alpha, "delta": delta}, Verdict(witness is None, witness)


def sweep_macmahon(n_max: int = 8, max_parts: int | None = None) -> Iterator[SweepItem]:
    for alpha in iter_contents(n_max, max_parts or n_max):
        yield {"alpha": alpha}, macmahon_check(alpha)


def sweep_vandermonde(n_max: int = 10, max_parts: int = 4) -> Iterator[SweepItem]:
    for alpha in iter_contents(n_max, max_parts):
        yield {"alpha": alpha}, vandermonde_check(alpha)


def sweep_period_g(n_max: int = 8, max_parts: int = 4) -> Iterator[SweepItem]:
    for alpha in iter_contents(n_max, max_parts):
        for delta in feasible_deltas(alpha):
            yield {"alpha": alpha, "delta": delta}, period_g_check(alpha, delta)


def sweep_flex_universal(n_max: int = 10, alphabet: int = 3) -> Iterator[SweepItem]:
    """Every necklace is its own CSP under the flex statistic."""
    import itertools
    for n in range(1, n_max + 1):
        seen = set()
        for w in itertools.product(range(1, alphabet + 1), repeat=n):
            rep = necklace(w).representative
            if rep in seen:
                continue
            seen.add(rep)
            yield {"necklace": rep}, verify_flex_universal(rep)


def sweep_flex_maj(n_max: int = 8, max_parts: int = 4) -> Iterator[SweepItem]:
    """flex and maj equidistributed mod n on every content/CDT class."""
    for alpha in iter_contents(n_max, max_parts):
        n = sum(alpha)
        for delta, words in sorted(cdt_groups(alpha).items()):
            holds = brute_gf(words, n, flex) == brute_gf(words, n, maj)
            yield ({"alpha": alpha, "delta": delta},
                   Verdict(holds, None if holds else {"check": "flex-vs-maj"}))


# ---------------------------------------------------------------------------
# subset-side sweeps

def compositions_with_parts(k: int, parts: int) -> Iterator[tuple]:
    if parts == 1:
        yield (k,)
        return
    for first in range(k + 1):
        for rest in compositions_with_parts(k - first, parts - 1):
            yield (first,) + rest


def sweep_multisubset(n_max: int = 10, k_max: int = 4) -> Iterator[SweepItem]:
    for n in range(1, n_max + 1):
        for d in range(1, n + 1):
            if n % d:
                continue
            for k in range(0, k_max + 1):
                for alpha in compositions_with_parts(k, n // d):
                    yield ({"n": n, "d": d, "alpha": alpha},
                           verify_multisubset_refinement(n, d, alpha))


def sweep_subset_star(n_max: int = 10, k_max: int = 4) -> Iterator[SweepItem]:
    for n in range(1, n_max + 1):
        for d in range(1, n + 1):
            if n % d:
                continue
            for k in range(0, k_max + 1):
                for alpha in compositions_with_parts(k, n // d):
                    if any(a > d for a in alpha):
                        continue
                    yield ({"n": n, "d": d, "alpha": alpha},
                           verify_subset_star(n, d, alpha))


def divisor_chains(n: int, k: int) -> Iterator[tuple]:
    """All divisor chains ending in gcd(n, k) | n, listed ascending."""
    d0 = gcd(n, k)

    def extend(chain):
        yield tuple(chain)
        for e in range(1, chain[0]):
            if chain[0] % e == 0:
                yield from extend([e] + chain)

    yield from extend([d0, n])


def sweep_chains(n_max: int = 12) -> Iterator[SweepItem]:
    for n in range(1, n_max + 1):
        for k in range(0, n + 1):
            for chain in divisor_chains(n, k):
                yield ({"n": n, "k": k, "chain": chain},
                       verify_chain_refinement(n, k, chain))


def sweep_g_dd(n_max: int = 12) -> Iterator[SweepItem]:
    for n in range(1, n_max + 1):
        for d in range(1, n + 1):
            if n % d:
                continue
            for k in range(0, n + 1):
                yield {"n": n, "d": d, "k": k}, verify_g_dd_trivial(n, k, d)


def sweep_action_isomorphism(n_max: int = 12, k_max: int = 4) -> Iterator[SweepItem]:
    for n in range(1, n_max + 1):
        for d in range(1, n + 1):
            if n % d:
                continue
            for k in range(0, min(k_max, n) + 1):
                yield ({"n": n, "d": d, "k": k},
                       verify_isomorphic_actions(n, d, k))


def sweep_mbs(n_max: int = 8) -> Iterator[SweepItem]:
    for n in range(1, n_max + 1):
        for k in range(0, n + 1):
            for b in range(0, k + 1):
                yield {"n": n, "k": k, "b": b}, verify_mbs_csp(n, k, b)


# ---------------------------------------------------------------------------
# aggregation

def run_sweep(items: Iterator[SweepItem], collect_instances: bool = False) -> dict:
    """Drain a sweep into a JSON-ready report."""
    total = 0
    failures = []
    instances = []
    for key, verdict in items:
        total += 1
        if collect_instances:
            instances.append({**key, "holds": verdict.holds})
        if not verdict.holds:
            failures.append({**key, "witness": verdict.witness})
    report = {"instances_checked": total, "failures": failures,
              "holds": not failures}
    if collect_instances:
        report["instances"] = instances
    return report
