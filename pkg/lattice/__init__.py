"""
Coupling maps, benchmark circuits and a verification simulator
"""
from .circuit import Circuit, Gate
from .coupling_maps import (
    Cluster,
    CouplingMap,
    all_to_all_map,
    build_topology,
    heavy_hex_map,
    hybrid_grid_map,
    hybrid_map_for,
)
from .grover import expand_mcx, grover_circuit, mcx_decompose, success_probability
from .simulator import simulate_statevector, unitary_of

__all__ = [
    'Gate',
    'Circuit',
    'Cluster',
    'CouplingMap',
    'hybrid_grid_map',
    'hybrid_map_for',
    'heavy_hex_map',
    'all_to_all_map',
    'build_topology',
    'grover_circuit',
    'mcx_decompose',
    'expand_mcx',
    'success_probability',
    'simulate_statevector',
    'unitary_of',
]
