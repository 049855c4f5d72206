"""Resizable arrays with measured space: tiered blocks, classical baselines and the growth game."""

from .base import ResizableArray
from .baseline import BrodnikArray, GeometricArray, HatArray, NaiveArray, brodnik_locate
from .bitkit import PackedCounters, PrefixCounters, lsb, msb
from .deque import TieredDeque
from .space import AllocatorError, Block, InvalidHandle, Memory, SpaceReport
from .tiered import TieredArray

__all__ = [
    "AllocatorError", "Block", "BrodnikArray", "GeometricArray", "HatArray",
    "InvalidHandle", "Memory", "NaiveArray", "PackedCounters", "PrefixCounters",
    "ResizableArray", "SpaceReport", "TieredArray", "TieredDeque", "brodnik_locate",
    "lsb", "msb",
]
