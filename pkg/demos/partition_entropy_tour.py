"""Classical partition entropy and its quantum echo.

Logical entropy of a distribution is the chance two independent draws
differ. Coarse-grain by a partition and only cross-block differences
count; that probability mass is computable two unrelated ways, and it
reappears verbatim as the post-measurement entropy of a quantum state
that encodes the distribution in its amplitudes.

Run:  python3 demos/partition_entropy_tour.py
"""
import numpy as np

from logent.classical import (bridge_check, dit_count, logical_entropy_dist,
                              partition_entropy, random_distribution,
                              random_partition)
from logent.measurement import project, projectors_from_partition
from logent.states import logical_entropy

p = [0.5, 0.25, 0.25]
print(f"distribution p = {p}")
print(f"h(p) = 1 - sum p_i^2 = {logical_entropy_dist(p):.4f}")
print("interpretation: two independent draws differ with probability 0.625\n")

blocks = [[0], [1, 2]]
print(f"partition {blocks}: outcomes 1 and 2 are no longer distinguished")
print(f"partition entropy = {partition_entropy(p, blocks):.4f}")
print(f"dit count (literal sum over ordered cross-block pairs) = "
      f"{dit_count(p, blocks):.4f}\n")

print("refining a partition only adds distinctions:")
for blks in ([[0, 1, 2]], [[0], [1, 2]], [[0], [1], [2]]):
    print(f"  {str(blks):24} -> {partition_entropy(p, blks):.4f}")
print()

print("=== The quantum side ===")
amps = np.sqrt(np.array(p, dtype=complex))
rho = np.outer(amps, amps.conj())
print("encode p in amplitudes: rho = |psi><psi| with |psi> = sum sqrt(p_k)|k>")
print(f"rho =\n{np.round(rho.real, 4)}")
measured = project(rho, projectors_from_partition(blocks, 3))
print(f"measure the partition's projectors:\n{np.round(measured.real, 4)}")
print(f"post-measurement entropy = {logical_entropy(measured):.4f}"
      f" == partition entropy = {partition_entropy(p, blocks):.4f}")
print(f"bridge_check: {bridge_check(p, blocks)}\n")

print("and on 5 random (distribution, partition) pairs:")
rng = np.random.default_rng(7)
for k in range(5):
    n = int(rng.integers(2, 9))
    probs = random_distribution(n, rng)
    blks = random_partition(n, rng)
    print(f"  n={n}, {len(blks)} blocks: bridge_check = {bridge_check(probs, blks)}")
