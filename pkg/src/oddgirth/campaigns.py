"""Verification campaigns for the structure theorem and the forbidden configurations.

Each campaign returns a :class:`CampaignReport`.  A failure payload holds
the offending graph in edge-list form plus the parameters needed to replay
the same instance check with :func:`replay_failure`.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Callable

from .enumeration import EnumerationConstraints, enumerate_graphs
from .errors import OddGirthError, SearchBudgetExceeded
from .forbidden import DEFAULT_BUDGET, find_induced_phi, find_tetrahedron
from .generators import gen_blowup, gen_complete, gen_cycle, gen_mobius_ladder
from .graph import Graph, build_graph, empty_graph, parse_edge_list, to_edge_list
from .homcore import constructive_c_hom, find_hom, independent_set_from_hom, is_blowup_of
from .parity import odd_girth
from .rng import XorShift64Star
from .saturation import SaturationOrder, in_class_G, meets_degree_threshold, saturate

EXHAUSTIVE_MAX_N = 9


@dataclass
class CampaignReport:
    name: str
    params: dict
    counts: dict = field(default_factory=dict)
    failures: list[dict] = field(default_factory=list)
    duration: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def exit_status(self) -> int:
        return 0 if self.ok else 1

    def bump(self, key: str, by: int = 1) -> None:
        self.counts[key] = self.counts.get(key, 0) + by

    def fail(self, check: str, g: Graph, detail: str, **extra) -> None:
        payload = {"check": check, "graph": to_edge_list(g), "detail": detail}
        payload.update(extra)
        payload["replay"] = replay_command(payload)
        self.failures.append(payload)

    def finish(self, started: float) -> "CampaignReport":
        self.duration = time.perf_counter() - started
        self.failures.sort(key=lambda f: (f["check"], f["graph"], f["detail"]))
        self.counts["failures"] = len(self.failures)
        return self

    def to_records(self) -> list[dict]:
        head = {
            "record": "campaign",
            "name": self.name,
            "params": self.params,
            "counts": self.counts,
            "status": "pass" if self.ok else "fail",
            "duration_s": round(self.duration, 3),
        }
        return [head] + [{"record": "failure", **f} for f in self.failures]

    def to_jsonl(self) -> str:
        return "".join(json.dumps(r, sort_keys=False) + "\n" for r in self.to_records())

    def summary(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        counts = " ".join(f"{k}={v}" for k, v in self.counts.items())
        lines = [f"{self.name}: {'PASS' if self.ok else 'FAIL'} ({params}) {counts} [{self.duration:.2f}s]"]
        for f in self.failures:
            lines.append(f"  failure {f['check']}: {f['detail']}")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# structure theorem


def theorem_instance(g: Graph, k: int) -> tuple[list[tuple[str, str]], dict]:
    """Run every theorem-level check on one graph meeting the hypotheses.

    Returns ``(failures, facts)`` with failures as ``(check, detail)`` pairs.
    """
    failures: list[tuple[str, str]] = []
    facts = {"certificate": False, "non_bipartite": False, "independent_set": False}
    try:
        result = constructive_c_hom(g, k)
    except OddGirthError as exc:
        failures.append(("constructive", f"{type(exc).__name__}: {exc}"))
        result = None
    oracle = find_hom(g, gen_cycle(2 * k + 1))
    if oracle is None:
        failures.append(("oracle", "brute-force search found no homomorphism to the odd cycle"))
    if result is None:
        return failures, facts
    cert = result.certificate
    if not cert.validate(g):
        failures.append(("certificate", "constructive map is not a homomorphism"))
        return failures, facts
    facts["certificate"] = True
    if result.decomposition is not None:
        facts["non_bipartite"] = True
        if not result.decomposition.validate(result.saturated):
            failures.append(("decomposition", "partition is not a blow-up of the saturation"))
    try:
        indep = independent_set_from_hom(g, cert, k)
    except (OddGirthError, AssertionError) as exc:
        failures.append(("independent_set", f"{type(exc).__name__}: {exc}"))
        return failures, facts
    bound = -(-k * g.n // (2 * k + 1))
    if not g.is_independent(indep):
        failures.append(("independent_set", "extracted set is not independent"))
    elif len(indep) < bound:
        failures.append(("independent_set", f"size {len(indep)} < {bound}"))
    else:
        facts["independent_set"] = True
    return failures, facts


def _record_theorem(report: CampaignReport, g: Graph, k: int) -> None:
    report.bump("graphs_tested")
    failures, facts = theorem_instance(g, k)
    if facts["certificate"]:
        report.bump("certificates")
    if facts["non_bipartite"]:
        report.bump("non_bipartite_certificates")
    if facts["independent_set"]:
        report.bump("independent_sets_checked")
    for check, detail in failures:
        report.fail(check, g, detail, campaign="theorem", k=k)


def sample_theorem_graph(rng: XorShift64Star, k: int, n_max: int, attempts: int = 64) -> Graph | None:
    """Random graph on at most ``n_max`` vertices meeting the theorem's hypotheses.

    Draws a dense random subgraph of a random blow-up of ``C_{2k+1}`` or of
    ``K_2``, or a random saturation from the empty graph, and keeps the first
    draw whose minimum degree clears ``3n/4k``.  Vertices are shuffled.
    """
    for _ in range(attempts):
        n = rng.randint(2, n_max)
        strategy = rng.below(3)
        if strategy == 2:
            g = saturate(empty_graph(n), k, SaturationOrder.seeded(rng.next_u64()))
        else:
            parts = 2 if strategy == 1 or n < 2 * k + 1 else 2 * k + 1
            base = gen_complete(2) if parts == 2 else gen_cycle(parts)
            sizes = [1] * parts
            for _ in range(n - parts):
                sizes[rng.below(parts)] += 1
            g, _ = gen_blowup(base, sizes)
            g = _thin(rng, g, 3 * n // (4 * k) + 1)
        if meets_degree_threshold(g, k) and odd_girth(g) >= 2 * k + 1:
            return g.relabel(rng.permutation(g.n))
    return None


def _thin(rng: XorShift64Star, g: Graph, floor: int, max_drop: float = 1.0) -> Graph:
    """Delete random edges while every degree stays >= ``floor``."""
    edges = g.edges()
    rng.shuffle(edges)
    degree = g.degrees()
    keep = []
    drop_rate = rng.random() * max_drop
    for u, v in edges:
        if degree[u] > floor and degree[v] > floor and rng.random() < drop_rate:
            degree[u] -= 1
            degree[v] -= 1
        else:
            keep.append((u, v))
    return build_graph(g.n, keep)


def verify_theorem(
    k: int, n_max: int, mode: str = "exhaustive", seed: int = 0, count: int = 0
) -> CampaignReport:
    """Check the constructive homomorphism on every (or every sampled) qualifying graph."""
    started = time.perf_counter()
    params = {"k": k, "n_max": n_max, "mode": mode}
    if mode == "sampled":
        params.update(seed=seed, count=count)
    report = CampaignReport("theorem", params)
    if mode == "exhaustive":
        if n_max > EXHAUSTIVE_MAX_N:
            raise ValueError(f"exhaustive mode supports n_max <= {EXHAUSTIVE_MAX_N}")
        for n in range(1, n_max + 1):
            for g in enumerate_graphs(EnumerationConstraints.theorem(n, k)):
                _record_theorem(report, g, k)
    elif mode == "sampled":
        rng = XorShift64Star(seed)
        for _ in range(count):
            g = sample_theorem_graph(rng, k, n_max)
            if g is None:
                report.bump("samples_unreached")
                continue
            _record_theorem(report, g, k)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return report.finish(started)


# ---------------------------------------------------------------------------
# sharpness


def verify_sharpness(k: int, t: int) -> CampaignReport:
    """Balanced blow-ups of ``M_{4k}`` sit exactly on the degree threshold and escape ``C_{2k+1}``."""
    started = time.perf_counter()
    report = CampaignReport("sharpness", {"k": k, "t": t})
    if k < 2 or t < 1:
        raise ValueError("sharpness needs k >= 2 and t >= 1")
    ladder = gen_mobius_ladder(4 * k)
    g, _ = gen_blowup(ladder, [t] * (4 * k))
    report.bump("graphs_tested")
    checks: list[tuple[str, Callable[[], bool], str]] = [
        ("order", lambda: g.n == 4 * k * t, f"n={g.n}, expected {4 * k * t}"),
        ("min_degree", lambda: g.min_degree() == 3 * t and 4 * k * g.min_degree() == 3 * g.n,
         f"delta={g.min_degree()}, expected 3t={3 * t} = 3n/4k"),
        ("odd_girth", lambda: odd_girth(g) == 2 * k + 1, f"odd girth {odd_girth(g)}, expected {2 * k + 1}"),
        ("no_hom", lambda: find_hom(g, gen_cycle(2 * k + 1)) is None, f"found a homomorphism into C_{2 * k + 1}"),
        ("mobius_blowup", lambda: is_blowup_of(g, ladder) is not None, f"not recognised as a blow-up of M_{4 * k}"),
    ]
    for name, check, detail in checks:
        if check():
            report.bump("assertions_passed")
        else:
            report.fail(name, g, detail, campaign="sharpness", k=k, t=t)
    return report.finish(started)


# ---------------------------------------------------------------------------
# forbidden configurations in edge-maximal graphs


def default_lemma_range(k: int) -> tuple[int, int]:
    return (2 * k + 1, 12) if k == 2 else (2 * k + 1, 14)


def sample_lemma_graph(rng: XorShift64Star, k: int, n_range: tuple[int, int]) -> Graph:
    """Random odd-girth >= 2k+1 graph saturated in a seeded random order."""
    n = rng.randint(*n_range)
    strategy = rng.below(3)
    if strategy == 0:
        start = empty_graph(n)
    else:
        parts = 2 if strategy == 1 or n < 2 * k + 1 else 2 * k + 1
        base = gen_complete(2) if parts == 2 else gen_cycle(parts)
        sizes = [1 + (n - parts) // parts] * parts
        for _ in range(n - sum(sizes)):
            sizes[rng.below(parts)] += 1
        blown, _ = gen_blowup(base, sizes)
        start = _thin(rng, blown, 0, max_drop=0.3).relabel(rng.permutation(n))
    return saturate(start, k, SaturationOrder.seeded(rng.next_u64()))


def lemma_instance(g: Graph, k: int, budget: int | None = DEFAULT_BUDGET) -> list[tuple[str, str]]:
    failures = []
    phi = find_induced_phi(g)
    if phi is not None:
        failures.append(("induced_phi", json.dumps(phi.to_record())))
    try:
        tetra = find_tetrahedron(g, k, budget)
    except SearchBudgetExceeded as exc:
        failures.append(("tetrahedron", f"inconclusive: {exc}"))
    else:
        if tetra is not None:
            failures.append(("tetrahedron", json.dumps(tetra.to_record())))
    return failures


def verify_lemmas(
    k: int, seed: int, count: int, n_range: tuple[int, int] | None = None, budget: int | None = DEFAULT_BUDGET
) -> CampaignReport:
    """Saturate random graphs, keep class members, and look for forbidden configurations."""
    started = time.perf_counter()
    n_range = n_range or default_lemma_range(k)
    report = CampaignReport("lemmas", {"k": k, "seed": seed, "count": count, "n_range": list(n_range)})
    report.counts.update(generated=0, class_members=0, non_bipartite_members=0)
    rng = XorShift64Star(seed)
    for _ in range(count):
        g = sample_lemma_graph(rng, k, n_range)
        report.bump("generated")
        if not in_class_G(g, k):
            continue
        report.bump("class_members")
        if odd_girth(g) == 2 * k + 1:
            report.bump("non_bipartite_members")
        for check, detail in lemma_instance(g, k, budget):
            report.fail(check, g, detail, campaign="lemmas", k=k)
    return report.finish(started)


# ---------------------------------------------------------------------------
# replay


def replay_command(payload: dict) -> str:
    """CLI invocation that re-runs the failing check on the payload graph (fed on stdin)."""
    k = payload.get("k")
    check = payload["check"]
    if payload.get("campaign") == "sharpness":
        return f"oddgirth verify sharpness --k {k} --t {payload['t']}"
    if check == "oracle":
        return f"oddgirth hom --target cycle --k {k}"
    if check == "induced_phi":
        return "oddgirth detect phi"
    if check == "tetrahedron":
        return f"oddgirth detect tetra --k {k}"
    if check == "independent_set":
        return f"oddgirth indep --k {k}"
    return f"oddgirth check --k {k}"


def replay_failure(payload: dict) -> list[dict]:
    """Re-run the instance check a failure came from; returns the regenerated payloads."""
    g = parse_edge_list(payload["graph"])
    k = payload["k"]
    campaign = payload["campaign"]
    if campaign == "theorem":
        found = theorem_instance(g, k)[0]
    elif campaign == "lemmas":
        found = lemma_instance(g, k)
    elif campaign == "sharpness":
        report = verify_sharpness(k, payload["t"])
        return report.failures
    else:
        raise ValueError(f"unknown campaign {campaign!r}")
    extra = {key: payload[key] for key in ("campaign", "k") if key in payload}
    return [{"check": c, "graph": to_edge_list(g), "detail": d, **extra} for c, d in found]
