"""Ratio sweeps over the extremal families, product closure checks and the
random-graph irregularity study.

Random graphs use numpy's PCG64 bit generator; trial ``i`` of a Monte-Carlo
run is seeded with ``seed + i`` so every trial can be reproduced alone.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from . import constructions as cons
from . import indices as ix
from .graph import Graph, cartesian_product, degree_sequence, from_adjacency_matrix

__all__ = [
    "SWEEP_FAMILIES",
    "SweepFamily",
    "RatioSweepRow",
    "RatioSweepReport",
    "ratio_sweep",
    "UltraClosureRow",
    "verify_ultra_closure",
    "sample_gnp",
    "predicted_irr",
    "expected_irr_exact",
    "MonteCarloReport",
    "monte_carlo_irr",
]


@dataclass(frozen=True)
class SweepFamily:
    build: Callable[[int], Graph]
    index: str
    exponent: int
    target: float


SWEEP_FAMILIES = {
    "eperi_extremal": SweepFamily(cons.eperi_extremal, "eperi", 3, math.sqrt(3) / 24),
    "espr_extremal": SweepFamily(cons.espr_extremal, "espr", 4, 5 / 32),
    "balanced_spider": SweepFamily(lambda a: cons.balanced_spider(a, a), "nt", 4, 0.5),
    "pendant_clique": SweepFamily(cons.pendant_clique, "nt", 4, 0.25),
    "complete_tripartite": SweepFamily(
        lambda m: cons.complete_multipartite([m, m, m]), "espr", 4, 4 / 27
    ),
}


@dataclass(frozen=True)
class RatioSweepRow:
    family: str
    param: int
    n: int
    value: int
    ratio: float
    target: float


@dataclass
class RatioSweepReport:
    family: str
    index: str
    exponent: int
    target: float
    rows: list[RatioSweepRow] = field(default_factory=list)

    CSV_COLUMNS = ("family", "param", "n", "value", "ratio", "target")

    @property
    def ratios(self) -> list[float]:
        return [r.ratio for r in self.rows]

    def relative_gap(self) -> float:
        """``|ratio - target| / target`` at the largest swept ``n``."""
        return abs(self.rows[-1].ratio - self.target) / self.target

    def approaching(self, last: int = 3) -> bool:
        """Whether the distance to the target strictly shrinks over the last points."""
        gaps = [abs(r - self.target) for r in self.ratios[-last:]]
        return all(b < a for a, b in zip(gaps, gaps[1:]))

    def converged(self, rel_tol: float = 0.15, last: int = 3) -> bool:
        return self.relative_gap() <= rel_tol and self.approaching(last)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.CSV_COLUMNS)
        for r in self.rows:
            w.writerow([r.family, r.param, r.n, r.value, repr(r.ratio), repr(r.target)])
        return buf.getvalue()


def ratio_sweep(family: str, params: Iterable[int]) -> RatioSweepReport:
    """Exact index of each family member, normalised by ``n**k``.

    Families and their normalisation: ``eperi_extremal`` (eperi / n^3),
    ``espr_extremal`` and ``complete_tripartite`` (espr / n^4),
    ``balanced_spider`` with ``a`` legs of length ``a`` and ``pendant_clique``
    (NT / n^4).
    """
    try:
        fam = SWEEP_FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown sweep family {family!r}") from None
    rows = []
    for p in params:
        g = fam.build(p)
        value = ix.compute_index(g, fam.index)
        rows.append(RatioSweepRow(family, p, g.n, value, value / g.n**fam.exponent, fam.target))
    rows.sort(key=lambda r: (r.n, r.param))
    return RatioSweepReport(family, fam.index, fam.exponent, fam.target, rows)


# ultra NT-balance of products -------------------------------------------------


@dataclass(frozen=True)
class UltraClosureRow:
    label: str
    n: int
    ultra: bool
    nt: int
    regular: bool

    @property
    def passed(self) -> bool:
        return self.ultra and self.nt == 0


def verify_ultra_closure(
    factor_pairs: Sequence[tuple[str, Graph, Graph]],
) -> list[UltraClosureRow]:
    """Recompute ultra balance from scratch on each ``G x H`` product.

    Raises
    ------
    ValueError
        If a factor is not ultra NT-balanced itself.
    """
    rows = []
    for label, g, h in factor_pairs:
        for name, f in (("left", g), ("right", h)):
            if not ix.is_ultra_nt_balanced(ix.closeness_counts(f)):
                raise ValueError(f"{label}: {name} factor is not ultra NT-balanced")
        prod = cartesian_product(g, h)
        cc = ix.closeness_counts(prod)
        degs = degree_sequence(prod)
        rows.append(
            UltraClosureRow(label, prod.n, ix.is_ultra_nt_balanced(cc), ix.nt_graph(cc), degs[0] == degs[-1])
        )
    return rows


# random graphs ----------------------------------------------------------------


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def sample_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi ``G(n, p)``; not necessarily connected."""
    if not 0 < p < 1:
        raise ValueError("p must lie strictly between 0 and 1")
    rng = _rng(seed)
    iu = np.triu_indices(n, 1)
    a = np.zeros((n, n), dtype=np.int8)
    a[iu] = rng.random(len(iu[0])) < p
    return from_adjacency_matrix(a | a.T)


def predicted_irr(n: int, p: float) -> float:
    """Leading-order expected irregularity ``p * sqrt(p(1-p)/pi) * n**2.5``."""
    return p * math.sqrt(p * (1 - p) / math.pi) * n**2.5


def expected_irr_exact(n: int, p: float) -> float:
    """Exact ``E[irr(G(n, p))]`` for finite ``n``.

    For a pair ``{u, v}``, ``deg(u) - deg(v)`` (ignoring the shared edge) is a
    sum of ``n - 2`` independent steps in ``{-1, 0, 1}``; its distribution is
    obtained by repeated convolution.
    """
    q = p * (1 - p)
    step = np.array([q, 1 - 2 * q, q])
    dist = np.array([1.0])
    for _ in range(n - 2):
        dist = np.convolve(dist, step)
    k = np.arange(-(n - 2), n - 1)
    return math.comb(n, 2) * p * float(np.abs(k) @ dist)


@dataclass
class MonteCarloReport:
    n: int
    p: float
    trials: int
    seed: int
    sample_mean: float
    sample_std: float
    predicted: float
    relative_error: float

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def monte_carlo_irr(n: int, p: float, trials: int, seed: int) -> MonteCarloReport:
    if not 0 < p < 1:
        raise ValueError("p must lie strictly between 0 and 1")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    values = np.array([ix.irr_graph(sample_gnp(n, p, seed + t)) for t in range(trials)], dtype=float)
    mean = float(values.mean())
    pred = predicted_irr(n, p)
    std = float(values.std(ddof=1)) if trials > 1 else 0.0
    return MonteCarloReport(n, p, trials, seed, mean, std, pred, abs(mean - pred) / pred)
