"""Exhaustive re-checks of the extremal tenacity and connectivity results.

Each ``verify_*`` function enumerates a family of graphs, compares exact
values against the closed forms in :mod:`vulngraph.extremal` and returns a
:class:`VerificationReport`.  Reports are deterministic: timing is only
recorded when asked for.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import comb
from typing import Any, Callable, Optional

import numpy as np

from . import batch
from .enumeration import (
    all_connected_graphs,
    all_trees,
    all_unicyclic,
    random_connected_graph,
    random_connected_spanning_subgraph,
)
from .errors import CapExceededError
from .extremal import (
    build_harary_graph,
    build_min_connectivity_graph,
    build_min_tenacity_graph,
    cycle_tenacity,
    has_min_tenacity_structure,
    is_max_tenacity_tree,
    is_max_tenacity_unicyclic,
    max_connectivity_value,
    max_tree_tenacity,
    max_unicyclic_tenacity,
    min_tenacity_value,
    path_tenacity,
)
from .graph import Graph, cycle_graph, from_edge_list, is_forest_mask, omega_tau, path_graph
from .graph6 import to_graph6
from .invariants import connectivity, subsets_by_size, tenacity

CLAIMS = (
    "theorem1",
    "corollary1",
    "theorem2",
    "theorem3",
    "lemma1",
    "lemma2",
    "lemma3",
    "lemma4",
    "harary_max",
    "harary_min",
)


@dataclass
class VerificationReport:
    claim: str
    range: dict[str, Any]
    checked_count: int
    witnesses: list[str] = field(default_factory=list)
    counterexample: Optional[dict[str, Any]] = None
    excluded: list[str] = field(default_factory=list)
    findings: list[dict[str, Any]] = field(default_factory=list)
    details: list[dict[str, Any]] = field(default_factory=list)
    parts: list["VerificationReport"] = field(default_factory=list)
    duration_ms: Optional[int] = None

    @property
    def status(self) -> str:
        failed = self.counterexample is not None or any(p.status != "verified" for p in self.parts)
        return "counterexample" if failed else "verified"

    def fail(self, **evidence) -> None:
        """Record the first counterexample; later ones only count."""
        if self.counterexample is None:
            self.counterexample = evidence

    def to_dict(self) -> dict[str, Any]:
        out = asdict(self)
        out["status"] = self.status
        out["parts"] = [p.to_dict() for p in self.parts]
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _g6(g: Graph) -> str:
    return to_graph6(g).decode("ascii")


def _check_range(name: str, value: int, low: int, high: int) -> None:
    if not low <= value <= high:
        raise CapExceededError(f"{name} must lie in {low}..{high}, got {value}")


def _timed(func: Callable[..., VerificationReport]) -> Callable[..., VerificationReport]:
    def wrapper(*args, timing: bool = False, **kwargs):
        start = time.perf_counter()
        report = func(*args, **kwargs)
        if timing:
            report.duration_ms = round((time.perf_counter() - start) * 1000)
        return report

    wrapper.__name__ = func.__name__
    wrapper.__doc__ = func.__doc__
    return wrapper


def _minimum_structure_findings(n_max: int) -> tuple[int, list[dict[str, Any]]]:
    """Minimum-tenacity isomorphism classes lacking the clique-plus-independent-set shape."""
    checked = 0
    findings = []
    for n in range(3, n_max + 1):
        for m in range(n - 1, comb(n, 2)):
            target = min_tenacity_value(n, m)
            for g in all_connected_graphs(n, m, up_to_isomorphism=True):
                checked += 1
                if tenacity(g).value == target and not has_min_tenacity_structure(g):
                    findings.append({"n": n, "m": m, "graph6": _g6(g), "tenacity": str(target)})
    return checked, findings


@_timed
def verify_theorem1(n_max: int = 7) -> VerificationReport:
    """Minimum tenacity over all connected labelled ``(n, m)``-graphs, ``3 <= n <= n_max``.

    Also checks that the clique-plus-independent-set construction attains it.
    """
    _check_range("n_max", n_max, 4, batch.BATCH_CAP)
    report = VerificationReport("theorem1", {"n": [3, n_max], "m": "n-1..C(n,2)-1", "mode": "labeled"}, 0)
    for n in range(3, n_max + 1):
        codes = batch.labeled_connected_codes(n)
        sizes = batch.edge_counts(codes)
        keep = sizes < comb(n, 2)
        codes, sizes = codes[keep], sizes[keep]
        num, den = batch.batch_tenacity(codes, n)
        for m in range(n - 1, comb(n, 2)):
            chosen = sizes == m
            expected = min_tenacity_value(n, m)
            observed = batch.minimum_fraction(num[chosen], den[chosen])
            attaining = np.flatnonzero(chosen & (num * expected.denominator == den * expected.numerator))
            built = build_min_tenacity_graph(n, m)
            built_value = tenacity(built).value
            count = int(chosen.sum())
            report.checked_count += count
            report.details.append(
                {
                    "n": n,
                    "m": m,
                    "graphs": count,
                    "expected": str(expected),
                    "observed": str(observed),
                    "minimisers": int(attaining.size),
                    "construction": _g6(built),
                    "construction_value": str(built_value),
                }
            )
            if observed != expected:
                hits = chosen & (num * observed.denominator == den * observed.numerator)
                index = int(np.flatnonzero(hits)[0])
                worst = from_edge_list(n, batch.code_to_edges(int(codes[index]), n))
                report.fail(n=n, m=m, graph6=_g6(worst), expected=str(expected), observed=str(observed))
            elif built_value != expected:
                report.fail(n=n, m=m, graph6=_g6(built), expected=str(expected), observed=str(built_value),
                            kind="construction does not attain the minimum")
            report.witnesses.append(_g6(built))
    return report


@_timed
def verify_corollary1(n_max: int = 12, structure_n_max: int = 7) -> VerificationReport:
    """The constructed graph attains the minimum tenacity for every admissible ``(n, m)``.

    For orders up to ``structure_n_max`` every isomorphism class attaining the
    minimum is additionally tested for the clique-plus-independent-set shape;
    classes without it are listed as findings rather than counterexamples.
    """
    _check_range("n_max", n_max, 3, 12)
    _check_range("structure_n_max", structure_n_max, 0, min(n_max, batch.BATCH_CAP))
    report = VerificationReport("corollary1", {"n": [3, n_max], "m": "n-1..C(n,2)-1"}, 0)
    for n in range(3, n_max + 1):
        for m in range(n - 1, comb(n, 2)):
            built = build_min_tenacity_graph(n, m)
            expected = min_tenacity_value(n, m)
            observed = tenacity(built).value
            report.checked_count += 1
            report.witnesses.append(_g6(built))
            if observed != expected:
                report.fail(n=n, m=m, graph6=_g6(built), expected=str(expected), observed=str(observed))
    if structure_n_max >= 3:
        checked, findings = _minimum_structure_findings(structure_n_max)
        report.range["structure_n"] = [3, structure_n_max]
        report.details.append({"structure_classes_checked": checked, "without_structure": len(findings)})
        report.findings = findings
    return report


def _double_inclusion(
    report: VerificationReport,
    n: int,
    graphs: list[Graph],
    expected: Fraction,
    predicate: Callable[[Graph], bool],
) -> None:
    values = [tenacity(g).value for g in graphs]
    observed = max(values)
    maximisers = {i for i, v in enumerate(values) if v == observed}
    accepted = {i for i, g in enumerate(graphs) if predicate(g)}
    missed = sorted(maximisers - accepted)
    wrong = sorted(accepted - maximisers)
    report.checked_count += len(graphs)
    report.witnesses.extend(_g6(graphs[i]) for i in sorted(maximisers))
    report.details.append(
        {
            "n": n,
            "graphs": len(graphs),
            "expected_max": str(expected),
            "observed_max": str(observed),
            "maximisers": len(maximisers),
            "predicate_accepts": len(accepted),
            "maximisers_rejected_by_predicate": [_g6(graphs[i]) for i in missed],
            "accepted_but_not_maximal": [_g6(graphs[i]) for i in wrong],
        }
    )
    if observed != expected:
        best = graphs[min(maximisers)]
        report.fail(n=n, graph6=_g6(best), expected=str(expected), observed=str(observed),
                    kind="maximum value differs from closed form")
    if missed:
        report.fail(n=n, graph6=_g6(graphs[missed[0]]), expected="predicate accepts every maximiser",
                    observed=f"tenacity {values[missed[0]]} is maximal but predicate rejects",
                    kind="necessity")
    if wrong:
        report.fail(n=n, graph6=_g6(graphs[wrong[0]]), expected=f"tenacity {observed}",
                    observed=f"tenacity {values[wrong[0]]}", kind="sufficiency")
    for kind, items in (("necessity", missed), ("sufficiency", wrong)):
        for i in items:
            report.findings.append({"n": n, "direction": kind, "graph6": _g6(graphs[i]), "tenacity": str(values[i])})


@_timed
def verify_theorem2(n_max: int = 12) -> VerificationReport:
    """Maximum tenacity among trees and the exact set of maximisers, ``2 <= n <= n_max``."""
    _check_range("n_max", n_max, 2, 12)
    report = VerificationReport("theorem2", {"n": [2, n_max], "family": "trees"}, 0)
    for n in range(2, n_max + 1):
        if n == 2:
            report.excluded.append("n=2: the only tree is P_2 = K_2, a complete graph with undefined tenacity")
            continue
        _double_inclusion(report, n, list(all_trees(n)), max_tree_tenacity(n), is_max_tenacity_tree)
    return report


@_timed
def verify_theorem3(n_max: int = 11) -> VerificationReport:
    """Maximum tenacity among unicyclic graphs and the maximiser set, ``3 <= n <= n_max``."""
    _check_range("n_max", n_max, 4, 11)
    report = VerificationReport("theorem3", {"n": [3, n_max], "family": "unicyclic"}, 0)
    report.excluded.append("n=3: the only unicyclic graph is C_3 = K_3, a complete graph with undefined tenacity")
    for n in range(4, n_max + 1):
        _double_inclusion(report, n, list(all_unicyclic(n)), max_unicyclic_tenacity(n), is_max_tenacity_unicyclic)
    return report


def _closed_form_report(claim: str, orders: range, build, formula) -> VerificationReport:
    report = VerificationReport(claim, {"n": [orders.start, orders.stop - 1]}, 0)
    for n in orders:
        g = build(n)
        expected, observed = formula(n), tenacity(g).value
        report.checked_count += 1
        report.details.append({"n": n, "expected": str(expected), "observed": str(observed)})
        if observed != expected:
            report.fail(n=n, graph6=_g6(g), expected=str(expected), observed=str(observed))
    return report


def lemma2_violations(g: Graph, value: Fraction) -> tuple[int, list[dict[str, Any]]]:
    """Check the forest-cut bound on every cut of ``g``.

    Returns the number of cuts satisfying the weak hypothesis and the list of
    cuts where the implied bound fails.
    """
    applicable = 0
    bad = []
    full = g.full_mask
    for s in range(1, g.n - 1):
        for x in subsets_by_size(g.n, s):
            rest = full & ~x
            omega, _ = omega_tau(g.adj, rest)
            if omega < s + 2 or not is_forest_mask(g, rest):
                continue
            applicable += 1
            strict = omega >= s + 3
            if value > 1 or (strict and value >= 1):
                bad.append({"graph6": _g6(g), "cut": x, "omega": omega, "tenacity": str(value), "strict": strict})
    return applicable, bad


@_timed
def verify_lemmas(
    n_max: int = 16, samples: int = 1000, seed: int = 0, sample_n_max: int = 10, sample_n_min: int = 4
) -> VerificationReport:
    """Path and cycle closed forms plus sampled spanning-subgraph monotonicity and the forest-cut bound."""
    _check_range("n_max", n_max, 4, 16)
    _check_range("sample_n_max", sample_n_max, 4, min(10, n_max))
    _check_range("sample_n_min", sample_n_min, 4, sample_n_max)
    _check_range("samples", samples, 1, 10**6)
    lemma3 = _closed_form_report("lemma3", range(3, n_max + 1), path_graph, path_tenacity)
    lemma3.excluded.append("n=2: P_2 = K_2 is complete")
    lemma4 = _closed_form_report("lemma4", range(4, n_max + 1), cycle_graph, cycle_tenacity)
    lemma4.excluded.append("n=3: C_3 = K_3 is complete")

    rng = random.Random(seed)
    sampled = [sample_n_min, sample_n_max]
    lemma1 = VerificationReport("lemma1", {"n": sampled, "samples": samples, "seed": seed}, 0)
    lemma2 = VerificationReport("lemma2", {"n": sampled, "graphs": "sampled lemma1 pairs"}, 0)
    cuts_checked = 0
    for _ in range(samples):
        n = rng.randint(sample_n_min, sample_n_max)
        m = rng.randint(n - 1, comb(n, 2) - 1)
        g = random_connected_graph(n, m, rng.getrandbits(32))
        h = random_connected_spanning_subgraph(g, rng.getrandbits(32))
        tg, th = tenacity(g).value, tenacity(h).value
        lemma1.checked_count += 1
        if th > tg:
            lemma1.fail(graph6=_g6(g), subgraph6=_g6(h), expected=f"T(H) <= {tg}", observed=str(th))
        for graph, value in ((g, tg), (h, th)):
            applicable, bad = lemma2_violations(graph, value)
            lemma2.checked_count += 1
            cuts_checked += applicable
            if bad:
                lemma2.fail(**bad[0], expected="T <= 1 (T < 1 when omega >= |X|+3)")
    lemma2.details.append({"cuts_meeting_hypothesis": cuts_checked})

    return VerificationReport(
        "lemmas",
        {"n": [3, n_max], "sample_n": sampled, "samples": samples, "seed": seed},
        sum(p.checked_count for p in (lemma1, lemma2, lemma3, lemma4)),
        parts=[lemma1, lemma2, lemma3, lemma4],
    )


@_timed
def verify_harary(n_max: int = 10, exhaustive_n_max: int = 7) -> VerificationReport:
    """Constructed graphs reach the maximum and minimum connectivity for their size.

    For orders up to ``exhaustive_n_max`` every connected labelled graph is
    checked against both bounds.
    """
    _check_range("n_max", n_max, 4, 10)
    _check_range("exhaustive_n_max", exhaustive_n_max, 0, min(n_max, batch.BATCH_CAP))
    high = VerificationReport("harary_max", {"n": [4, n_max], "m": "n-1..C(n,2)"}, 0)
    low = VerificationReport("harary_min", {"n": [4, n_max], "m": "C(n-1,2)+1..C(n,2)"}, 0)
    for n in range(4, n_max + 1):
        for m in range(n - 1, comb(n, 2) + 1):
            g = build_harary_graph(n, m)
            expected, observed = max_connectivity_value(n, m), int(connectivity(g).value)
            high.checked_count += 1
            if observed != expected or g.m != m:
                high.fail(n=n, m=m, graph6=_g6(g), expected=expected, observed=observed)
            if m > comb(n - 1, 2):
                g = build_min_connectivity_graph(n, m)
                expected, observed = m - comb(n - 1, 2), int(connectivity(g).value)
                low.checked_count += 1
                if observed != expected or g.m != m:
                    low.fail(n=n, m=m, graph6=_g6(g), expected=expected, observed=observed)
    for n in range(4, exhaustive_n_max + 1):
        codes = batch.labeled_connected_codes(n)
        sizes = batch.edge_counts(codes)
        _, _, kappa = batch.batch_scan(codes, n)
        exhaustive = {"n": n, "graphs": int(codes.size)}
        for report, bound, too_far in (
            (high, lambda m: 2 * m // n, kappa > 2 * sizes // n),
            (low, lambda m: max(0, m - comb(n - 1, 2)), kappa < sizes - comb(n - 1, 2)),
        ):
            report.details.append(dict(exhaustive))
            if too_far.any():
                index = int(np.flatnonzero(too_far)[0])
                g = from_edge_list(n, batch.code_to_edges(int(codes[index]), n))
                report.fail(n=n, m=g.m, graph6=_g6(g), expected=bound(g.m), observed=int(kappa[index]),
                            kind="exhaustive bound")
    high.range["exhaustive_n"] = low.range["exhaustive_n"] = [4, exhaustive_n_max]
    return VerificationReport(
        "harary",
        {"n": [4, n_max], "exhaustive_n": [4, exhaustive_n_max]},
        high.checked_count + low.checked_count,
        parts=[high, low],
    )
