"""Prefix-partitioned sequential pattern miner.

Mining runs in two passes over the in-memory sequence database. The first
pass counts per-object item frequencies and discards infrequent items: no
frequent sequence can contain one, so each sequence can be reduced to its
frequent items before enumeration. The second pass enumerates the distinct
subsequences of every reduced sequence and accumulates per-object support
in counters grouped by first item. Those prefix groups partition the
candidate space into disjoint counting arenas, so they can be owned by
independent workers without sharing.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .core import (
    DEFAULT_ENUMERATION_CAP,
    FrequentItemTable,
    Item,
    Pattern,
    enumerate_distinct_subsequences,
    prefix_key,
    reduce_sequence,
)
from .ingest import SequenceDatabase
from .results import MiningConfig, MiningResult, MiningStats


class PatternCounter:
    """Support count plus the ordinal of the last object that bumped it.

    The ordinal guard makes increments idempotent per object, so support
    stays a count of objects no matter how many embeddings one sequence has.
    """

    __slots__ = ("count", "last_object")

    def __init__(self) -> None:
        self.count = 0
        self.last_object = -1

    def bump(self, object_ordinal: int) -> None:
        if self.last_object != object_ordinal:
            self.count += 1
            self.last_object = object_ordinal

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"PatternCounter(count={self.count}, last_object={self.last_object})"


@dataclass
class PrefixPartition:
    """All counted patterns that share one first item."""

    prefix: Item
    counters: dict[Pattern, PatternCounter] = field(default_factory=dict)

    def count(self, pattern: Pattern, object_ordinal: int) -> None:
        counter = self.counters.get(pattern)
        if counter is None:
            counter = self.counters[pattern] = PatternCounter()
        counter.bump(object_ordinal)

    def __len__(self) -> int:
        return len(self.counters)


def frequent_items(E: SequenceDatabase, config: MiningConfig) -> FrequentItemTable:
    """First pass: items kept iff they occur in enough objects' sequences."""
    threshold = config.resolve_threshold(E.object_count)
    counts: dict[Item, int] = {}
    for seq in E.sequences():
        for item in set(seq):
            counts[item] = counts.get(item, 0) + 1
    kept = {item: c for item, c in counts.items() if c >= threshold}
    return FrequentItemTable(counts=kept, threshold=threshold)


def mine_partitioned(
    E: SequenceDatabase,
    frequent: FrequentItemTable,
    config: MiningConfig,
    *,
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP,
) -> dict[Item, PrefixPartition]:
    """Second pass: per-object support accumulation inside prefix partitions.

    Each sequence is reduced to its frequent items, its distinct length>=2
    subsequences (up to the configured max) are enumerated, and each bumps
    the counter in the partition keyed by its first item at most once per
    object. Length-1 patterns are excluded; the first pass already counted
    them. Empty reduced sequences are skipped.
    """
    partitions: dict[Item, PrefixPartition] = {}
    for ordinal, seq in enumerate(E.sequences()):
        reduced = reduce_sequence(seq, frequent)
        if len(reduced) < 2:
            continue
        subsequences = enumerate_distinct_subsequences(
            reduced, config.max_pattern_length, min_len=2, cap=enumeration_cap
        )
        for pattern in subsequences:
            prefix = prefix_key(pattern)
            partition = partitions.get(prefix)
            if partition is None:
                partition = partitions[prefix] = PrefixPartition(prefix)
            partition.count(pattern, ordinal)
    return partitions


def mine_rsp(
    E: SequenceDatabase,
    config: MiningConfig,
    *,
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP,
) -> MiningResult:
    """Mine all frequent patterns: frequent items, then partitioned counting.

    The result is the union of frequent length-1 items from the first pass
    and threshold-filtered longer patterns from the partitions. Two logical
    passes over the database total.
    """
    stats = MiningStats()
    t0 = time.perf_counter()
    table = frequent_items(E, config)
    t1 = time.perf_counter()
    partitions = mine_partitioned(E, table, config, enumeration_cap=enumeration_cap)
    t2 = time.perf_counter()

    threshold = table.threshold
    patterns: dict[Pattern, int] = {}
    max_len = config.max_pattern_length
    if max_len is None or max_len >= 1:
        for item, count in table.counts.items():
            patterns[(item,)] = count
    for partition in partitions.values():
        for pattern, counter in partition.counters.items():
            if counter.count >= threshold:
                patterns[pattern] = counter.count

    stats.scan_ms = (t1 - t0) * 1000.0
    stats.count_ms = (t2 - t1) * 1000.0
    stats.total_ms = (time.perf_counter() - t0) * 1000.0
    stats.scan_count = 2
    stats.peak_counters = len(table.counts) + sum(len(p) for p in partitions.values())
    return MiningResult(
        patterns=patterns,
        config=config,
        window=E.window,
        timings=stats,
        object_count=E.object_count,
    )
