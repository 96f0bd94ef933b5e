"""
Routing, depth scheduling, verification and the Grover depth benchmark
"""
from .benchmark import DepthReport, DepthRow, benchmark_grover
from .router import Layout, RoutedCircuit, distance_matrix, route
from .scheduler import schedule_depth
from .verify import VerificationResult, check_on_map, verify_routed

__all__ = [
    'Layout',
    'RoutedCircuit',
    'distance_matrix',
    'route',
    'schedule_depth',
    'check_on_map',
    'verify_routed',
    'VerificationResult',
    'DepthRow',
    'DepthReport',
    'benchmark_grover',
]
