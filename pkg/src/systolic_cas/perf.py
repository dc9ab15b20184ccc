"""Linear CLB and latency model for a forest on an FPGA."""
from __future__ import annotations

from dataclasses import dataclass

from .neighborhood import ball_size

# whole-forest measurement for the 21-node / 10-exit single-motif forest
MEASURED_SMALL_FOREST = ((21, 10), 1452)


@dataclass(frozen=True)
class ResourceProfile:
    clb_per_processing_node: int = 8
    clb_per_exit_node: int = 130
    clock_processing_hz: float = 166.639e6
    clock_exit_hz: float = 57.991e6
    clock_divided_hz: float = 93.032e6

    def __post_init__(self):
        for name, value in vars(self).items():
            if value <= 0:
                raise ValueError(f"{name} must be positive, got {value}")

    def clocks(self) -> dict[str, float]:
        return {
            "processing": self.clock_processing_hz,
            "exit": self.clock_exit_hz,
            "divided": self.clock_divided_hz,
        }


DEFAULT_PROFILE = ResourceProfile()


@dataclass(frozen=True)
class Feasibility:
    clbs: int
    device_clbs: int

    @property
    def utilization(self) -> float:
        return self.clbs / self.device_clbs

    @property
    def feasible(self) -> bool:
        return self.clbs <= self.device_clbs


def estimate_clbs(counts: tuple[int, int], profile: ResourceProfile = DEFAULT_PROFILE) -> int:
    """Sum of per-node CLB costs. Ignores synthesis-time sharing, so it over-estimates."""
    processing, exits = counts
    return processing * profile.clb_per_processing_node + exits * profile.clb_per_exit_node


def estimate_latency(l: int, m: int, clock_hz: float) -> float:
    """Seconds to stream one length-``l`` query: ``2l + m`` clock ticks."""
    if not l >= m >= 1:
        raise ValueError(f"need l >= m >= 1, got l={l}, m={m}")
    if clock_hz <= 0:
        raise ValueError(f"clock must be positive, got {clock_hz}")
    return (2 * l + m) / clock_hz


def feasibility(counts: tuple[int, int], device_clbs: int,
                profile: ResourceProfile = DEFAULT_PROFILE) -> Feasibility:
    if device_clbs <= 0:
        raise ValueError(f"device_clbs must be positive, got {device_clbs}")
    return Feasibility(estimate_clbs(counts, profile), device_clbs)


def worst_case_counts(m: int, d: int, sigma: int = 4) -> tuple[int, int]:
    """Node counts for one generator with no path sharing at all."""
    leaves = ball_size(m, d, sigma)
    return m * leaves, leaves
