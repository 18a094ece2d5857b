"""Probability weights, clique entropies, and configuration-entropy bounds.

A probability weight assigns every ray a value in [0, 1] so that each
maximal clique sums to 1; it is equientropic when all clique entropies
coincide.  The infimum of the common entropy over equientropic weights
has no known closed form, so :func:`minimize_entropy` reports certified
UPPER bounds only: the returned value is always the recomputed entropy
of an explicit validating witness.

Natural logarithm throughout; 0*log(0) = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .rays import Configuration
from .orthograph import maximal_cliques, is_saturated
from .colouring import Colouring, find_partition_colouring

EQUIENTROPY_TOL = 1e-9


@dataclass(frozen=True)
class ProbabilityWeight:
    """Per-ray values; exact-rational mode iff all values are Fractions."""

    values: tuple

    @property
    def exact(self) -> bool:
        return all(isinstance(v, Fraction) for v in self.values)


@dataclass
class EntropyReport:
    per_clique: dict[tuple[int, ...], float]
    equientropic: bool
    common_entropy: float | None
    upper_bound: float | None  # on the configuration entropy, when equientropic
    statistical_weight: float | None  # exp of the bound
    witness: ProbabilityWeight | None = None


@dataclass(frozen=True)
class WeightSpec:
    """Distinct rational values w_i = q_i / gamma with minimal gamma."""

    values: tuple[Fraction, ...]
    numerators: tuple[int, ...]
    gamma: int
    clique_multiplicities: dict[tuple[int, ...], tuple[int, ...]]


def _xlogx(p: float) -> float:
    return 0.0 if p == 0 else p * math.log(p)


def _require_saturated(config: Configuration) -> None:
    ok, witness = is_saturated(config)
    if not ok:
        raise ValueError(
            f"configuration is not saturated (dead-end clique {witness})"
        )


def validate_probability_weight(
    config: Configuration, f: ProbabilityWeight, tol: float = 1e-12
) -> bool:
    """True iff every maximal clique sums to 1 (exactly in rational mode)."""
    _require_saturated(config)
    if len(f.values) != config.n:
        raise ValueError("weight is not total on the configuration")
    if any(v < 0 or v > 1 for v in f.values):
        return False
    exact = f.exact
    for clique in maximal_cliques(config):
        s = sum(f.values[v] for v in clique)
        if exact:
            if s != 1:
                return False
        elif abs(float(s) - 1.0) > tol:
            return False
    return True


def entropy_report(
    config: Configuration, f: ProbabilityWeight, tol: float = EQUIENTROPY_TOL
) -> EntropyReport:
    """Per-clique entropies and the equientropic verdict.

    In rational mode cliques are equientropic iff their value multisets
    agree, which is exact; in floating mode entropies are compared
    within tol.
    """
    if not validate_probability_weight(config, f):
        raise ValueError("not a valid probability weight")
    per: dict[tuple[int, ...], float] = {}
    multisets = set()
    for clique in maximal_cliques(config):
        vals = [f.values[v] for v in clique]
        per[clique] = -sum(_xlogx(float(v)) for v in vals)
        if f.exact:
            multisets.add(tuple(sorted(vals)))
    if f.exact:
        equi = len(multisets) <= 1
    else:
        ents = list(per.values())
        equi = max(ents) - min(ents) <= tol if ents else True
    common = next(iter(per.values())) if (equi and per) else None
    return EntropyReport(
        per_clique=per,
        equientropic=equi,
        common_entropy=common,
        upper_bound=common,
        statistical_weight=math.exp(common) if common is not None else None,
        witness=f,
    )


def weight_from_partition_colouring(
    config: Configuration, colouring: Colouring, colour_values
) -> ProbabilityWeight:
    """The induced weight f(x) = colour_values[colouring(x)].

    Always equientropic: the per-clique value multiset is fixed by the
    partition.  The clique-sum constraint on the colour values is
    checked up front.
    """
    vals = [Fraction(v) for v in colour_values]
    part = colouring.partition
    if len(vals) != len(part):
        raise ValueError("one value per colour required")
    if any(v < 0 or v > 1 for v in vals):
        raise ValueError("colour values must lie in [0, 1]")
    total = sum(n * v for n, v in zip(part, vals))
    if total != 1:
        raise ValueError(f"clique sum is {total}, not 1")
    from .colouring import verify_partition_colouring

    if not verify_partition_colouring(config, colouring):
        raise ValueError("colouring is not compatible with its partition")
    return ProbabilityWeight(
        tuple(vals[c] for c in colouring.values)
    )


def weight_spec(config: Configuration, f: ProbabilityWeight) -> WeightSpec:
    """Mixed-colour form of a rational weight: values q_i / gamma, minimal gamma."""
    if not f.exact:
        raise ValueError("weight spec requires a rational weight")
    distinct = sorted(set(f.values))
    gamma = 1
    for v in distinct:
        gamma = gamma * v.denominator // math.gcd(gamma, v.denominator)
    nums = tuple(int(v * gamma) for v in distinct)
    mult: dict[tuple[int, ...], tuple[int, ...]] = {}
    for clique in maximal_cliques(config):
        counts = [0] * len(distinct)
        for v in clique:
            counts[distinct.index(f.values[v])] += 1
        mult[clique] = tuple(counts)
    return WeightSpec(tuple(distinct), nums, gamma, mult)


def _two_value_entropy(n0: int, n1: int, w1: float) -> float:
    # n0 rays at w0, n1 rays at w1 per clique; n0*w0 + n1*w1 = 1.
    w0 = (1.0 - n1 * w1) / n0
    return -(n0 * _xlogx(w0) + n1 * _xlogx(w1))


def minimize_entropy(
    config: Configuration,
    partitions=None,
    starts: int = 8,
    seed: int = 7,
) -> EntropyReport:
    """Best upper bound on the configuration entropy found by search.

    Combines (a) weights induced by two-part partition colourings with
    the colour values optimized along the one-dimensional constraint
    and (b) a penalized continuous descent over the clique-sum
    constraint set from multiple random starts.  The reported bound is
    the recomputed entropy of the returned witness, never the
    optimizer's own objective.
    """
    _require_saturated(config)
    d = config.dim
    n = config.n
    cliques = maximal_cliques(config)

    best_weight = ProbabilityWeight(tuple(Fraction(1, d) for _ in range(n)))
    best_value = math.log(d) if cliques else 0.0
    if not cliques:
        # No clique constraints; weight 1 on one ray has zero entropy.
        vals = [Fraction(0)] * n
        if n:
            vals[0] = Fraction(1)
        best_weight = ProbabilityWeight(tuple(vals))
        best_value = 0.0

    if partitions is None:
        partitions = [(d - a, a) for a in range(1, d // 2 + 1)]

    for part in partitions:
        col = find_partition_colouring(config, part)
        if col is None:
            continue
        n0, n1 = part
        # Endpoint w1 = 1/n1 zeroes the majority colour and is optimal
        # for every partition examined here; a grid over the interior
        # guards against surprises.
        candidates = [Fraction(1, n1)]
        for k in range(1, 20):
            candidates.append(Fraction(k, 20 * n1))
        for w1 in candidates:
            w0 = Fraction(1 - n1 * w1, n0)
            if w0 < 0 or w0 > 1 or w1 < 0 or w1 > 1:
                continue
            weight = weight_from_partition_colouring(config, col, (w0, w1))
            rep = entropy_report(config, weight)
            if rep.equientropic and rep.common_entropy < best_value - 1e-15:
                best_value = rep.common_entropy
                best_weight = weight

    cont = _continuous_search(config, cliques, starts, seed)
    if cont is not None:
        weight, value = cont
        if value < best_value - 1e-12:
            best_value = value
            best_weight = weight

    rep = entropy_report(config, best_weight)
    if not rep.equientropic:
        raise AssertionError("search returned a non-equientropic witness")
    return rep


def _continuous_search(config, cliques, starts, seed):
    """Penalized local descent over floating weights; None if scipy or
    the search finds nothing valid."""
    if not cliques:
        return None
    import numpy as np
    from scipy.optimize import minimize

    n = config.n
    a_rows = np.zeros((len(cliques), n))
    for i, c in enumerate(cliques):
        a_rows[i, list(c)] = 1.0

    def objective(x):
        p = np.clip(x, 1e-12, 1.0)
        ent = -(a_rows @ (np.where(x > 1e-12, x * np.log(p), 0.0)))
        sums = a_rows @ x
        mean = ent.mean()
        return mean + 50.0 * np.sum((sums - 1.0) ** 2) + 50.0 * np.sum(
            (ent - mean) ** 2
        )

    rng = np.random.default_rng(seed)
    best = None
    for _ in range(starts):
        x0 = rng.uniform(0.0, 2.0 / config.dim, size=n)
        res = minimize(
            objective,
            x0,
            method="L-BFGS-B",
            bounds=[(0.0, 1.0)] * n,
            options={"maxiter": 400},
        )
        x = np.clip(res.x, 0.0, 1.0)
        weight = ProbabilityWeight(tuple(float(v) for v in x))
        try:
            if not validate_probability_weight(config, weight, tol=1e-9):
                continue
        except ValueError:
            continue
        rep = entropy_report(config, weight)
        if not rep.equientropic:
            continue
        value = max(rep.per_clique.values())
        if best is None or value < best[1]:
            best = (weight, value)
    return best
