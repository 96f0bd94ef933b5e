"""
Grover depth benchmark across coupling topologies
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np

from lattice.coupling_maps import build_topology
from lattice.grover import grover_circuit
from routing.router import route
from routing.scheduler import schedule_depth
from routing.verify import check_on_map, verify_routed
from utils.batch_processor import BatchProcessor
from utils.errors import ConfigurationError, VerificationError


REFERENCE_TOPOLOGY = "heavyhex"
HYBRID_TOPOLOGY = "hybrid"
MAX_VERIFIED_QUBITS = 8

DEPTH_COLUMNS = [
    "n", "topology", "seed", "depth", "depth_2q_only", "swaps",
    "verified", "contention", "depth_alt_contention",
]


@dataclass(frozen=True)
class DepthRow:
    n: int
    topology: str
    seed: int
    depth: int
    depth_2q_only: int
    swaps: int
    verified: bool
    contention: bool
    depth_alt_contention: int

    def as_list(self):
        return [getattr(self, column) for column in DEPTH_COLUMNS]


@dataclass
class DepthReport:
    """Per-seed benchmark rows plus the hybrid-vs-reference comparison"""

    rows: List[DepthRow] = field(default_factory=list)
    reference: str = REFERENCE_TOPOLOGY

    def _group(self):
        groups: Dict[tuple, List[DepthRow]] = {}
        for row in self.rows:
            groups.setdefault((row.n, row.topology), []).append(row)
        return groups

    def min_depth(self, n, topology):
        return min(r.depth for r in self._group()[(n, topology)])

    def summary(self):
        """
        Aggregates per (n, topology)

        Returns:
            List of dicts with min / mean depth and swaps
        """
        out = []
        for (n, topology), rows in self._group().items():
            depths = [r.depth for r in rows]
            swaps = [r.swaps for r in rows]
            out.append({
                "n": n,
                "topology": topology,
                "seeds": len(rows),
                "min_depth": min(depths),
                "mean_depth": float(np.mean(depths)),
                "min_depth_2q_only": min(r.depth_2q_only for r in rows),
                "min_swaps": min(swaps),
                "mean_swaps": float(np.mean(swaps)),
            })
        return out

    def reduction_pct(self):
        """
        100 * (1 - hybrid_min / reference_min) per n where both were run
        """
        groups = self._group()
        reductions = {}
        for n in sorted({row.n for row in self.rows}):
            if (n, HYBRID_TOPOLOGY) in groups and (n, self.reference) in groups:
                hybrid = self.min_depth(n, HYBRID_TOPOLOGY)
                reference = self.min_depth(n, self.reference)
                reductions[n] = 100.0 * (1.0 - hybrid / reference)
        return reductions

    def to_rows(self):
        return [row.as_list() for row in self.rows]

    def to_dict(self):
        return {
            "reference_topology": self.reference,
            "summary": self.summary(),
            "reduction_pct": {str(n): v for n, v in self.reduction_pct().items()},
            "rows": [dict(zip(DEPTH_COLUMNS, row.as_list())) for row in self.rows],
            "measurements": "excluded from depth",
        }


def default_contention(topology):
    """Shared couplers only exist on the hybrid lattice"""
    return topology == HYBRID_TOPOLOGY


def run_point(n, topology, seed, contention=None, verify=True):
    """
    Route one Grover instance and measure it

    Args:
        n: Problem size
        topology: Topology name
        seed: Routing seed
        contention: Coupler contention (None = topology default)
        verify: Run the equivalence check (skipped above 8 qubits)

    Returns:
        DepthRow
    """
    circuit = grover_circuit(n)
    cmap = build_topology(topology, n)
    routed = route(circuit, cmap, seed=seed)
    check_on_map(routed, cmap)

    verified = False
    if verify and cmap.n_qubits <= MAX_VERIFIED_QUBITS:
        result = verify_routed(circuit, routed, seed=seed)
        if not result.passed:
            raise VerificationError(
                f"Grover n={n} on {topology} seed={seed}: max deviation {result.max_deviation:.3e}"
            )
        verified = True

    if contention is None:
        contention = default_contention(topology)
    return DepthRow(
        n=n,
        topology=topology,
        seed=seed,
        depth=schedule_depth(routed, cmap, contention),
        depth_2q_only=schedule_depth(routed, cmap, contention, two_qubit_only=True),
        swaps=routed.swaps_inserted,
        verified=verified,
        contention=contention,
        depth_alt_contention=schedule_depth(routed, cmap, not contention)
    )


def benchmark_grover(n_range=range(2, 7), topologies=(HYBRID_TOPOLOGY, REFERENCE_TOPOLOGY),
                     seeds=range(8), contention: Optional[bool] = None, processor=None):
    """
    Route Grover circuits for every (n, topology, seed)

    Args:
        n_range: Problem sizes
        topologies: Topology names
        seeds: Routing seeds
        contention: Force coupler contention on/off (None = per topology)
        processor: Optional BatchProcessor

    Returns:
        DepthReport with rows ordered by (n, topology, seed)
    """
    n_range, topologies, seeds = list(n_range), list(topologies), list(seeds)
    if not topologies:
        raise ConfigurationError("benchmark needs at least one topology")
    if not seeds:
        raise ConfigurationError("benchmark needs at least one seed")
    if not n_range:
        raise ConfigurationError("benchmark needs at least one problem size")

    tasks = [(n, t, s) for n in n_range for t in topologies for s in seeds]
    processor = processor or BatchProcessor(label="bench-grover")
    rows = processor.map(tasks, lambda task: run_point(*task, contention=contention))
    return DepthReport(rows=rows)
