"""Vietoris-Rips persistent homology: point-cloud generators, Betti numbers,
persistence barcodes and p-Wasserstein distances.

Point clouds are (n, dim) float arrays. Barcodes are (n, 3) arrays whose rows
are (dim, birth, death), with death = inf for classes that never die.
"""

from ._vrph import (
    ComputationError,
    IoError,
    MsdConfig,
    ResourceError,
    barcode_svg,
    betti_curve,
    betti_numbers,
    count_simplices,
    diagram_svg,
    distance_matrix,
    fibonacci_sphere,
    msd_manifold,
    natural_frequencies,
    persistence,
    rescale_unit_box,
    sphere_latlon,
    wasserstein,
)

__all__ = [
    "ComputationError",
    "IoError",
    "MsdConfig",
    "ResourceError",
    "barcode_svg",
    "betti_curve",
    "betti_numbers",
    "count_simplices",
    "diagram_svg",
    "distance_matrix",
    "fibonacci_sphere",
    "msd_manifold",
    "natural_frequencies",
    "persistence",
    "rescale_unit_box",
    "sphere_latlon",
    "wasserstein",
]
