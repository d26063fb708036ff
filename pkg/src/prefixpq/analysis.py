"""Expected-occupancy model for the trie under uniform random keys.

With N keys drawn independently and uniformly from the full key space, the
chunk prefixes of length L are themselves uniform over ``P**L`` patterns
(``P`` the layer degree).  Two quantities describe the resulting shape:

* ``prob_exact_occupancy(n, degree, level, count)`` -- probability that
  exactly ``count`` of the N keys land in one fixed length-L prefix class.
* ``expected_layers_at_level(n, degree, level)`` -- expected number of
  layers in use at chunk depth L below the root (``level`` 0 is the root,
  which exists whenever at least two distinct stored keys exist).  A layer
  lives at depth L exactly when at least two keys share its length-L
  prefix, so the expectation is ``P**L`` times the per-prefix probability
  of a 2+ collision, written in closed form below.

``monte_carlo_layer_counts`` cross-checks the model against the real
structure: it builds tries from random keys and counts live layers per
level by direct traversal.  ``layer_count_std_bound`` supplies a sound
standard-deviation bound for the per-level count (collision indicators of
distinct prefixes are negatively associated, so the sum's variance is at
most the sum of the indicator variances), which keeps the 3-standard-error
comparison meaningful even at deep levels where every trial observes zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .ptrie import Layer, LeafNode, PTrie, PTrieConfig


def _check_common(n: int, degree: int, level: int) -> None:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if degree < 2:
        raise ValueError(f"degree must be at least 2, got {degree}")
    if level < 0:
        raise ValueError(f"level must be nonnegative, got {level}")


def prob_exact_occupancy(n: int, degree: int, level: int, count: int) -> float:
    """P[g] = C(n, g) * P**(-gL) * (1 - P**(-L))**(n-g).

    Probability that a fixed length-``level`` prefix class receives exactly
    ``count`` of ``n`` uniform keys.  Sums to 1 over ``count`` = 0..n; at
    level 0 it degenerates to the indicator of ``count == n``.
    """
    _check_common(n, degree, level)
    if count < 0 or count > n:
        raise ValueError(f"count must be in 0..{n}, got {count}")
    if level == 0:
        return 1.0 if count == n else 0.0
    r = float(degree) ** (-level)
    return math.comb(n, count) * r**count * (1.0 - r) ** (n - count)


def expected_layers_at_level(n: int, degree: int, level: int) -> float:
    """E[layers at depth ``level``] = P**L (1-(1-P**-L)**n) - n (1-P**-L)**(n-1).

    Depth 0 is the root: present as a layer exactly when two or more
    distinct keys exist, so the expectation is the collision indicator
    there (0 for n < 2, 1 for n >= 2).  Deeper terms are evaluated through
    ``log1p``/``expm1`` to survive the near-cancellation at small hit
    probabilities.
    """
    _check_common(n, degree, level)
    if level == 0:
        return 1.0 if n >= 2 else 0.0
    if n < 2:
        return 0.0
    r = float(degree) ** (-level)
    log_miss = math.log1p(-r)
    # 1 - (1-r)**n, computed without losing the tiny difference
    hit_any = -math.expm1(n * log_miss)
    single = n * math.exp((n - 1) * log_miss)
    return float(degree) ** level * hit_any - single


def prefix_collision_prob(n: int, degree: int, level: int) -> float:
    """P[one fixed length-``level`` prefix class receives 2+ of n keys]."""
    _check_common(n, degree, level)
    if n < 2:
        return 0.0
    if level == 0:
        return 1.0
    r = float(degree) ** (-level)
    log_miss = math.log1p(-r)
    return -math.expm1(n * log_miss) - n * r * math.exp((n - 1) * log_miss)


def layer_count_std_bound(n: int, degree: int, level: int) -> float:
    """Upper bound on the std-dev of the level-``level`` layer count.

    The count is a sum of ``P**L`` collision indicators whose pairwise
    covariances are nonpositive (occupancy counts of disjoint bins are
    negatively associated, and "2+ hits" is monotone in the count), so
    Var <= P**L * q * (1 - q) with q the per-prefix collision probability.
    """
    _check_common(n, degree, level)
    if level == 0:
        return 0.0
    q = prefix_collision_prob(n, degree, level)
    return math.sqrt(float(degree) ** level * q * (1.0 - q))


def count_layers_per_level(trie: PTrie) -> list[int]:
    """Live layers at each depth 0..depth_max-1 by direct traversal."""
    counts = [0] * trie.config.depth_max
    stack: list[Layer] = [trie.root]
    while stack:
        layer = stack.pop()
        counts[layer.level - 1] += 1
        for slot in layer.slots:
            if slot is not None and type(slot) is not LeafNode:
                stack.append(slot)
    return counts


@dataclass(frozen=True)
class LayerCountObservation:
    """Monte Carlo layer counts against the closed-form expectation."""

    n_keys: int
    degree: int
    trials: int
    expected: tuple[float, ...]
    observed_mean: tuple[float, ...]
    std_bound: tuple[float, ...]
    observed_totals: tuple[int, ...]

    @property
    def expected_total(self) -> float:
        return sum(self.expected)

    @property
    def observed_total_mean(self) -> float:
        return sum(self.observed_totals) / len(self.observed_totals)


def monte_carlo_layer_counts(
    n_keys: int,
    config: PTrieConfig | None = None,
    trials: int = 200,
    seed: int = 0,
) -> LayerCountObservation:
    """Build ``trials`` tries from fresh uniform keys and tally layers.

    Counting starts at the root (level index 0), matching the model's
    depth indexing.  Duplicate keys share a leaf and add no layers, which
    is also how the model treats colliding full-width keys.
    """
    cfg = config if config is not None else PTrieConfig()
    if trials < 1:
        raise ValueError(f"trials must be positive, got {trials}")
    rng = np.random.default_rng(seed)
    depth = cfg.depth_max
    sums = [0] * depth
    totals = []
    for _ in range(trials):
        keys = rng.integers(0, 1 << cfg.word_bits, size=n_keys, dtype=np.uint64)
        trie = PTrie(cfg)
        for key in keys.tolist():
            trie.insert(key)
        counts = count_layers_per_level(trie)
        for lvl, c in enumerate(counts):
            sums[lvl] += c
        totals.append(sum(counts))
    expected = tuple(
        expected_layers_at_level(n_keys, cfg.degree, lvl) for lvl in range(depth)
    )
    std_bound = tuple(
        layer_count_std_bound(n_keys, cfg.degree, lvl) for lvl in range(depth)
    )
    observed = tuple(s / trials for s in sums)
    return LayerCountObservation(
        n_keys=n_keys,
        degree=cfg.degree,
        trials=trials,
        expected=expected,
        observed_mean=observed,
        std_bound=std_bound,
        observed_totals=tuple(totals),
    )


def occupancy_distribution(n: int, degree: int, level: int) -> list[float]:
    """The full distribution P[g] for g = 0..n at one prefix level."""
    return [prob_exact_occupancy(n, degree, level, g) for g in range(n + 1)]
