from .kernel import BACKEND, available_backends
from .multicover import (
    ADJACENCY,
    METRIC,
    DimensionResult,
    GeneratorList,
    MulticoverInstance,
    adim_k,
    build_multicover_instance,
    dim_k,
    enumerate_k_adjacency_bases,
    enumerate_k_metric_bases,
    enumerate_minimum_generators,
    exact_min_multicover,
    greedy_cover,
    is_generator,
    naive_min_multicover,
    reduce_constraints,
    valid_k_limit,
)
