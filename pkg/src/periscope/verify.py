"""Named verification suites.

Each suite is a thin wrapper over library calls that returns a
:class:`SuiteResult`; it passes iff every row passes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from . import constructions as cons
from . import experiments as exp
from . import indices as ix
from .graph import degree_sequence, has_nontrivial_automorphism
from .search import enumerate_connected_graphs, find_nt_balanced, maximize_index

TABLE1 = {
    1: (0, 0),
    2: (0, 0),
    3: (2, 2),
    4: (4, 5),
    5: (9, 9),
    6: (13, 15),
    7: (21, 21),
    8: (27, 28),
}

IRR_SEED = 2023
EPERI_SWEEP = (200, 400, 614)  # 614 is the largest s with n <= 2000
ESPR_SWEEP = (10, 25, 50, 100)
SPIDER_SWEEP = (10, 20, 30)


@dataclass
class Check:
    label: str
    passed: bool
    detail: str = ""


@dataclass
class SuiteResult:
    name: str
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, label: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(label, bool(passed), detail))

    def format(self) -> str:
        lines = [f"== {self.name}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            lines.append(f"  [{'PASS' if c.passed else 'FAIL'}] {c.label}  {c.detail}".rstrip())
        lines.extend(f"  note: {s}" for s in self.notes)
        return "\n".join(lines)


def suite_table1(workers: int = 1) -> SuiteResult:
    res = SuiteResult("table1")
    for n, (t_exp, g_exp) in TABLE1.items():
        t = maximize_index(n, "trees", "peri", workers=workers).max_value
        g = maximize_index(n, "graphs", "peri", workers=workers).max_value
        res.add(f"n={n}", t == t_exp and g == g_exp, f"trees {t} (table {t_exp}), graphs {g} (table {g_exp})")
    return res


def suite_witnesses(workers: int = 1) -> SuiteResult:
    res = SuiteResult("witnesses")
    for n in range(3, 9):
        for k, cls in enumerate(("trees", "graphs")):
            g = cons.table1_witness(n, cls)
            peri = ix.peri_graph(ix.closeness_counts(g))
            res.add(f"n={n} {cls}", peri == TABLE1[n][k], f"peri {peri}")
    return res


def _bound_violations(g) -> list[str]:
    n = g.n
    cc = ix.closeness_counts(g)
    r = ix.index_report(g)
    pairs = n * (n - 1) // 2
    bad = []
    if r.peri > pairs:
        bad.append("peri > C(n,2)")
    if not 6 * r.eperi < n**3:
        bad.append("eperi >= n^3/6")
    if 4 * r.espr > n**4:
        bad.append("espr > n^4/4")
    if r.nt > pairs * (n - 2) ** 2:
        bad.append("NT > C(n,2)(n-2)^2")
    c = cc.counts
    extra = sum(int(c[u, v] + c[v, u]) for u, v in g.edges())
    if ix.espr_degree_proxy(g, cc) != r.espr + extra:
        bad.append("proxy identity")
    if not r.nt >= r.mo_star >= r.mo:
        bad.append("NT >= Mo* >= Mo")
    return bad


def bound_graphs():
    """Constructed graphs checked alongside the enumeration (moderate sizes)."""
    yield "eperi_extremal(8)", cons.eperi_extremal(8)
    yield "eperi_extremal(50)", cons.eperi_extremal(50)
    for s in ESPR_SWEEP:
        yield f"espr_extremal({s})", cons.espr_extremal(s)
    for a in SPIDER_SWEEP[:2]:
        yield f"balanced_spider({a},{a})", cons.balanced_spider(a, a)
    for n in (4, 100):
        yield f"pendant_clique({n})", cons.pendant_clique(n)
    yield "K_{50,50,50}", cons.complete_multipartite([50, 50, 50])
    yield "rhombic_dodecahedron", cons.rhombic_dodecahedron()
    yield "rhombic_triacontahedron", cons.rhombic_triacontahedron()


def suite_bounds(workers: int = 1) -> SuiteResult:
    res = SuiteResult("bounds")
    for n in range(1, 8):
        count, bad = 0, []
        for g in enumerate_connected_graphs(n):
            count += 1
            bad.extend(_bound_violations(g))
        res.add(f"all connected n={n}", not bad, f"{count} graphs, {len(bad)} violations")
    for label, g in bound_graphs():
        bad = _bound_violations(g)
        res.add(label, not bad, ", ".join(bad))
    return res


def suite_automorphism(workers: int = 1) -> SuiteResult:
    res = SuiteResult("automorphism")
    for n in range(2, 8):
        pairs = n * (n - 1) // 2
        sym = bad = 0
        for g in enumerate_connected_graphs(n):
            if has_nontrivial_automorphism(g):
                sym += 1
                if ix.peri_graph(ix.closeness_counts(g)) >= pairs:
                    bad += 1
        res.add(f"n={n}", bad == 0, f"{sym} symmetric graphs, {bad} with peri = C(n,2)")
    return res


def suite_nt_counterexamples(workers: int = 1) -> SuiteResult:
    res = SuiteResult("nt-counterexamples")
    p4 = ix.nt_graph(ix.closeness_counts(cons.pendant_clique(4)))
    s3 = ix.nt_graph(ix.closeness_counts(cons.star(3)))
    res.add("NT(pendant_clique(4)) = NT(P4) = 10", p4 == 10, f"got {p4}")
    res.add("NT(S3) = 12", s3 == 12, f"got {s3}")
    res.add("NT(S3) > NT(P4)", s3 > p4, f"{s3} > {p4}")
    return res


def suite_bipartite_espr(workers: int = 1) -> SuiteResult:
    res = SuiteResult("bipartite-espr-formula")
    for n in range(4, 15):
        g = cons.complete_bipartite(n // 2, (n + 1) // 2)
        got = ix.espr_graph(g, ix.closeness_counts(g))
        q = n * n // 4
        res.add(f"n={n}", got == q * (2 * q - 2), f"espr {got}, formula {q * (2 * q - 2)}")
    return res


def suite_ratios(workers: int = 1) -> SuiteResult:
    res = SuiteResult("ratios")
    rep = exp.ratio_sweep("eperi_extremal", EPERI_SWEEP)
    res.add(
        "eperi_extremal within 15% of sqrt(3)/24, increasing",
        rep.relative_gap() <= 0.15 and rep.approaching(3) and rep.ratios == sorted(rep.ratios),
        f"ratios {[round(r, 5) for r in rep.ratios]} at n {[r.n for r in rep.rows]}",
    )
    rep = exp.ratio_sweep("espr_extremal", ESPR_SWEEP)
    res.add(
        "espr_extremal within 10% of 5/32, approaching",
        rep.relative_gap() <= 0.10 and rep.approaching(len(ESPR_SWEEP)),
        f"ratios {[round(r, 5) for r in rep.ratios]}",
    )
    spider = exp.ratio_sweep("balanced_spider", SPIDER_SWEEP)
    for row in spider.rows:
        a, n = row.param, row.n
        res.add(
            f"S_{{{a},{a}}} ratio in [0.5(1-5/a), 0.5] and NT >= n(n-a)(n-2a)^2/2",
            0.5 * (1 - 5 / a) <= row.ratio <= 0.5
            and 2 * row.value >= n * (n - a) * (n - 2 * a) ** 2,
            f"ratio {row.ratio:.5f}",
        )
    trip = exp.ratio_sweep("complete_tripartite", [50])
    res.add("K_{50,50,50} within 10% of 4/27", trip.relative_gap() <= 0.10, f"ratio {trip.ratios[0]:.5f}")
    pend = exp.ratio_sweep("pendant_clique", [100, 200])
    comparable = exp.ratio_sweep("balanced_spider", [10, 14])  # n = 101, 197
    for prow, srow in zip(pend.rows, comparable.rows):
        res.add(
            f"pendant_clique({prow.n}) within 10% of 0.25 and below S_{{{srow.param},{srow.param}}}",
            abs(prow.ratio - 0.25) <= 0.025 and prow.ratio < srow.ratio,
            f"{prow.ratio:.5f} < {srow.ratio:.5f}",
        )
    return res


def suite_ultra_closure(workers: int = 1) -> SuiteResult:
    res = SuiteResult("ultra-closure")
    rd, rt = cons.rhombic_dodecahedron(), cons.rhombic_triacontahedron()
    for name, g in (("rhombic_dodecahedron", rd), ("rhombic_triacontahedron", rt)):
        cc = ix.closeness_counts(g)
        degs = degree_sequence(g)
        ultra, nt = ix.is_ultra_nt_balanced(cc), ix.nt_graph(cc)
        res.add(name, ultra and nt == 0 and degs[0] != degs[-1], f"ultra={ultra} NT={nt} degrees {sorted(set(degs))}")
    rows = exp.verify_ultra_closure(
        [
            ("RD x K3", rd, cons.complete(3)),
            ("RD x C5", rd, cons.cycle(5)),
            ("RD x K5", rd, cons.complete(5)),
        ]
    )
    for row in rows:
        res.add(row.label, row.passed and not row.regular, f"n={row.n} ultra={row.ultra} NT={row.nt}")
    return res


def suite_conjecture_probe(workers: int = 1, max_n: int = 8) -> SuiteResult:
    """Reports counterexamples to 'NT-balanced implies ultra'; never fails on them."""
    res = SuiteResult("conjecture-probe")
    for n in range(1, max_n + 1):
        found = find_nt_balanced(n, require_not_ultra=True)
        balanced = len(find_nt_balanced(n))
        res.add(f"n={n} scanned", True, f"{balanced} NT-balanced, {len(found)} not ultra")
        for g in found:
            res.notes.append(f"counterexample found at n={n}: {g!r}")
    if not res.notes:
        res.notes.append("no NT-balanced graph that fails ultra balance")
    return res


def suite_irr_montecarlo(workers: int = 1) -> SuiteResult:
    res = SuiteResult("irr-montecarlo")
    for p in (0.5, 0.3):
        rep = exp.monte_carlo_irr(200, p, 100, IRR_SEED)
        res.add(
            f"n=200 p={p} within 5%",
            rep.relative_error < 0.05,
            f"mean {rep.sample_mean:.1f}, predicted {rep.predicted:.1f}, rel err {rep.relative_error:.4f}",
        )
    half = exp.predicted_irr(200, 0.5)
    res.add("p=1/2 prediction equals n^2.5/(4 sqrt(pi))", math.isclose(half, 200**2.5 / (4 * math.sqrt(math.pi))))
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "table1": suite_table1,
    "witnesses": suite_witnesses,
    "bounds": suite_bounds,
    "automorphism": suite_automorphism,
    "nt-counterexamples": suite_nt_counterexamples,
    "bipartite-espr-formula": suite_bipartite_espr,
    "ratios": suite_ratios,
    "ultra-closure": suite_ultra_closure,
    "conjecture-probe": suite_conjecture_probe,
    "irr-montecarlo": suite_irr_montecarlo,
}


def run_suite(name: str, workers: int = 1) -> SuiteResult:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}") from None
    return fn(workers=workers)
