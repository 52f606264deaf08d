"""Point cloud subsampling: farthest point sampling, sector-partitioned FPS,
windowed distance updates, baselines, synthetic LiDAR generators, and quality
metrics. All heavy lifting happens in the C++ extension module."""

from pcsample._core import (
    afps,
    bin_approx_sort,
    coverage_radius,
    exact_sort,
    fps,
    gen_scanning_lidar,
    gen_sparse_dense,
    gen_stepper_lidar,
    grid_voxel_sample,
    locality_score,
    npdu_afps,
    npdu_fps,
    rps,
    separation,
    shuffle,
)

__all__ = [
    "afps",
    "bin_approx_sort",
    "coverage_radius",
    "exact_sort",
    "fps",
    "gen_scanning_lidar",
    "gen_sparse_dense",
    "gen_stepper_lidar",
    "grid_voxel_sample",
    "locality_score",
    "npdu_afps",
    "npdu_fps",
    "rps",
    "separation",
    "shuffle",
]
