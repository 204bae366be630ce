"""Mining configuration and result containers shared by all miners."""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from typing import IO

from .core import Pattern, format_pattern, pattern_key
from .ingest import TimeWindow


@dataclass(frozen=True)
class MiningConfig:
    """Support threshold plus an optional bound on pattern length.

    ``min_support`` is an absolute object count when given as an int (>= 1)
    and a fraction of the derived database's objects when given as a float
    in (0, 1]; fractions resolve as ceil(fraction * objects), never below 1.
    """

    min_support: int | float = 1
    max_pattern_length: int | None = None

    def __post_init__(self) -> None:
        ms = self.min_support
        if isinstance(ms, bool) or not isinstance(ms, (int, float)):
            raise ValueError(f"min_support must be int or float, got {ms!r}")
        if isinstance(ms, int):
            if ms < 1:
                raise ValueError(f"absolute min_support must be >= 1, got {ms}")
        elif not 0.0 < ms <= 1.0:
            raise ValueError(f"fractional min_support must be in (0, 1], got {ms}")
        if self.max_pattern_length is not None and self.max_pattern_length < 1:
            raise ValueError("max_pattern_length must be positive or None")

    def resolve_threshold(self, object_count: int) -> int:
        """Absolute support count this config means for a database size."""
        if isinstance(self.min_support, int):
            return self.min_support
        return max(1, math.ceil(self.min_support * object_count))


@dataclass
class MiningStats:
    """Timings and scan/counter metadata recorded by a mining run."""

    scan_ms: float = 0.0
    count_ms: float = 0.0
    total_ms: float = 0.0
    scan_count: int = 0
    peak_counters: int = 0


@dataclass
class MiningResult:
    """Frequent patterns with absolute support, plus run metadata."""

    patterns: dict[Pattern, int]
    config: MiningConfig
    window: TimeWindow
    timings: MiningStats
    object_count: int

    @property
    def threshold(self) -> int:
        return self.config.resolve_threshold(self.object_count)

    def relative_support(self, pattern: Pattern) -> float:
        if self.object_count == 0:
            return 0.0
        return self.patterns[pattern] / self.object_count

    def sorted_patterns(self) -> list[tuple[Pattern, int]]:
        """(pattern, support) pairs ordered by length then item order."""
        return sorted(self.patterns.items(), key=lambda kv: pattern_key(kv[0]))

    def write_csv(self, out: IO[str]) -> None:
        """Export ``pattern,support,relative_support`` rows in canonical order."""
        writer = csv.writer(out)
        writer.writerow(["pattern", "support", "relative_support"])
        for pattern, support in self.sorted_patterns():
            writer.writerow(
                [format_pattern(pattern), support, f"{self.relative_support(pattern):.6f}"]
            )

    def to_json_dict(self) -> dict:
        """JSON-ready payload with config/window/timings metadata."""
        return {
            "patterns": [
                {
                    "pattern": format_pattern(p),
                    "length": len(p),
                    "support": s,
                    "relative_support": self.relative_support(p),
                }
                for p, s in self.sorted_patterns()
            ],
            "config": {
                "min_support": self.config.min_support,
                "max_pattern_length": self.config.max_pattern_length,
            },
            "window": {
                "start": self.window.start.isoformat(),
                "end": self.window.end.isoformat(),
                "interval_days": self.window.days,
            },
            "timings": {
                "scan_ms": self.timings.scan_ms,
                "count_ms": self.timings.count_ms,
                "total_ms": self.timings.total_ms,
                "scan_count": self.timings.scan_count,
                "peak_counters": self.timings.peak_counters,
            },
            "object_count": self.object_count,
            "threshold": self.threshold,
        }

    def write_json(self, out: IO[str]) -> None:
        json.dump(self.to_json_dict(), out, indent=2)
        out.write("\n")
