"""Level-wise GSP baseline: candidate join, apriori prune, counting scans.

This is the naive comparison target. Candidates of length k+1 are joined
from frequent length-k patterns, pruned by the apriori principle, and then
counted with a full pass over the sequence database, one level at a time.
Gap constraints are out of scope (the window is applied at derivation), so
pruning may legally check all length-k subsequences, not just contiguous
ones. Containment testing is a plain subsequence check per candidate per
object; no candidate indexing.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .core import Item, Pattern, is_subsequence
from .ingest import SequenceDatabase
from .results import MiningConfig, MiningResult, MiningStats


@dataclass(frozen=True)
class CandidateSet:
    """Candidates of one length, the unit the level loop works on."""

    level: int
    candidates: frozenset[Pattern]

    def __post_init__(self) -> None:
        for c in self.candidates:
            if len(c) != self.level:
                raise ValueError(f"candidate {c!r} is not length {self.level}")

    def __len__(self) -> int:
        return len(self.candidates)


def join_level(frequent_k: frozenset[Pattern] | set[Pattern]) -> CandidateSet:
    """Join frequent length-k patterns into length-(k+1) candidates.

    For k=1 every ordered pair (including an item with itself) is a
    candidate. For k>=2, s1 joins s2 when s1 minus its first item equals
    s2 minus its last item, yielding s1 extended by s2's last item.
    """
    patterns = list(frequent_k)
    if not patterns:
        return CandidateSet(level=2, candidates=frozenset())
    k = len(patterns[0])
    if any(len(p) != k for p in patterns):
        raise ValueError("join input must be patterns of one length")

    if k == 1:
        items = [p[0] for p in patterns]
        pairs = frozenset((a, b) for a in items for b in items)
        return CandidateSet(level=2, candidates=pairs)

    by_head: dict[tuple, list[Pattern]] = {}
    for p in patterns:
        by_head.setdefault(p[:-1], []).append(p)
    joined: set[Pattern] = set()
    for s1 in patterns:
        for s2 in by_head.get(s1[1:], ()):
            joined.add(s1 + (s2[-1],))
    return CandidateSet(level=k + 1, candidates=frozenset(joined))


def prune_level(
    candidates: CandidateSet, frequent_k: frozenset[Pattern] | set[Pattern]
) -> CandidateSet:
    """Drop candidates having any length-k subsequence outside frequent_k."""
    frequent = set(frequent_k)
    kept: set[Pattern] = set()
    for cand in candidates.candidates:
        subs = (cand[:i] + cand[i + 1 :] for i in range(len(cand)))
        if all(sub in frequent for sub in subs):
            kept.add(cand)
    return CandidateSet(level=candidates.level, candidates=frozenset(kept))


def mine_gsp(E: SequenceDatabase, config: MiningConfig) -> MiningResult:
    """Level-wise mining loop; output matches the partitioned miner exactly.

    Scan 1 counts items. Each further level joins, prunes, and counts its
    candidates with another pass; the loop ends when a level yields no
    frequent patterns or the configured max length is reached. scan_count
    records 1 plus one scan per attempted level.
    """
    stats = MiningStats()
    t0 = time.perf_counter()
    threshold = config.resolve_threshold(E.object_count)
    max_len = config.max_pattern_length

    item_counts: dict[Item, int] = {}
    for seq in E.sequences():
        for item in set(seq):
            item_counts[item] = item_counts.get(item, 0) + 1
    stats.scan_count = 1
    stats.peak_counters = len(item_counts)
    t1 = time.perf_counter()

    patterns: dict[Pattern, int] = {}
    current: set[Pattern] = set()
    if max_len is None or max_len >= 1:
        for item, count in item_counts.items():
            if count >= threshold:
                patterns[(item,)] = count
                current.add((item,))

    level = 1
    sequences = list(E.sequences())
    while current and (max_len is None or level < max_len):
        candidates = prune_level(join_level(current), current)
        stats.scan_count += 1
        stats.peak_counters = max(stats.peak_counters, len(candidates))
        level += 1
        current = set()
        for cand in candidates.candidates:
            support = sum(1 for seq in sequences if is_subsequence(cand, seq))
            if support >= threshold:
                patterns[cand] = support
                current.add(cand)

    stats.scan_ms = (t1 - t0) * 1000.0
    stats.count_ms = (time.perf_counter() - t1) * 1000.0
    stats.total_ms = (time.perf_counter() - t0) * 1000.0
    return MiningResult(
        patterns=patterns,
        config=config,
        window=E.window,
        timings=stats,
        object_count=E.object_count,
    )
