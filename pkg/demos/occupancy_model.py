"""Layer occupancy under uniform random keys: closed form vs simulation.

Run:  python3 demos/occupancy_model.py
"""

import math

from prefixpq import PTrieConfig
from prefixpq.analysis import (
    monte_carlo_layer_counts,
    occupancy_distribution,
    prob_exact_occupancy,
)

print("chance that one top-level chunk pattern catches g of 8 random keys")
print("(degree 16, level 1):")
for g, p in enumerate(occupancy_distribution(8, 16, 1)):
    bar = "#" * round(p * 60)
    print(f"  g={g}: {p:8.5f} {bar}")
print("  two fixed keys colliding in one fixed pattern:",
      prob_exact_occupancy(2, 16, 1, 2), "= 1/256")

print("\nexpected live layers per level vs 400-trial simulation (n=256):")
obs = monte_carlo_layer_counts(256, PTrieConfig(32, 4), trials=400, seed=7)
print("  level  expected    observed    3*SE band")
for lvl in range(8):
    band = 3 * obs.std_bound[lvl] / math.sqrt(obs.trials)
    print(f"  {lvl:>5}  {obs.expected[lvl]:>9.4f}  {obs.observed_mean[lvl]:>9.4f}"
          f"  +/- {band:.4f}")
print(f"  total  {obs.expected_total:>9.4f}  {obs.observed_total_mean:>9.4f}")
print("\nmost mass sits two levels down: 256 keys split 16 ways twice")
