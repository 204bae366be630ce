"""Items, sequences, patterns, and the subsequence algebra every miner uses.

A sequence is the time-ordered list of items observed for one object; a
pattern is the same shape playing the candidate/result role in mining.
Both are plain tuples, immutable and hashable, so they can key counters
and be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

Item = int | str
Sequence = tuple[Item, ...]
Pattern = tuple[Item, ...]

# Reduced sequences longer than this cannot be exhaustively enumerated
# without an explicit length bound (2^n distinct subsequences).
DEFAULT_ENUMERATION_CAP = 20


class CapExceeded(RuntimeError):
    """Subsequence enumeration would blow up past the configured cap."""


def item_key(item: Item):
    """Sort key giving a total order over items even when ints and strings mix."""
    return (isinstance(item, str), item)


def pattern_key(pattern: Pattern):
    """Canonical output order: by length, then lexicographic by item order."""
    return (len(pattern), tuple(item_key(i) for i in pattern))


def parse_item(token: str) -> Item:
    """Read an item token: integer-looking tokens become ints, rest stay strings."""
    token = token.strip()
    try:
        return int(token)
    except ValueError:
        return token


def format_pattern(pattern: Iterable[Item]) -> str:
    """Canonical textual form, items joined by ':' (e.g. ``10:20:50``)."""
    return ":".join(str(i) for i in pattern)


def parse_pattern(text: str) -> Pattern:
    """Inverse of :func:`format_pattern`."""
    if not text:
        raise ValueError("empty pattern text")
    return tuple(parse_item(tok) for tok in text.split(":"))


@dataclass(frozen=True)
class FrequentItemTable:
    """Items that met the support threshold, with their per-object counts."""

    counts: Mapping[Item, int]
    threshold: int

    def __contains__(self, item: Item) -> bool:
        return item in self.counts

    def __len__(self) -> int:
        return len(self.counts)

    def items(self) -> frozenset[Item]:
        return frozenset(self.counts)


def is_subsequence(candidate: Pattern, target: Sequence) -> bool:
    """True iff ``candidate`` embeds into ``target`` in order, gaps allowed."""
    n = len(candidate)
    if n > len(target):
        return False
    i = 0
    want = candidate[0] if n else None
    for x in target:
        if x == want:
            i += 1
            if i == n:
                return True
            want = candidate[i]
    return n == 0


def reduce_sequence(seq: Sequence, frequent: FrequentItemTable) -> Sequence:
    """Drop items outside the frequent table, preserving order.

    Returns the empty tuple when nothing survives. Idempotent.
    """
    counts = frequent.counts
    return tuple(x for x in seq if x in counts)


def enumerate_distinct_subsequences(
    seq: Sequence,
    max_len: int | None = None,
    *,
    min_len: int = 1,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> Iterator[Pattern]:
    """Yield every distinct non-empty subsequence of ``seq`` with length in
    [min_len, max_len], each exactly once regardless of how many embeddings
    it has.

    ``max_len=None`` means unbounded, which is only allowed for sequences no
    longer than ``cap`` (raises :class:`CapExceeded` otherwise). Enumeration
    is lazy; order is depth-first by leftmost embedding.
    """
    if max_len is None and len(seq) > cap:
        raise CapExceeded(
            f"sequence of length {len(seq)} exceeds enumeration cap {cap}; "
            "set a max pattern length or raise the cap"
        )
    limit = len(seq) if max_len is None else min(max_len, len(seq))

    # Branching only on the first unseen occurrence of each item per level
    # enumerates each distinct subsequence via its leftmost embedding.
    def walk(prefix: Pattern, start: int) -> Iterator[Pattern]:
        seen: set[Item] = set()
        for i in range(start, len(seq)):
            x = seq[i]
            if x in seen:
                continue
            seen.add(x)
            ext = prefix + (x,)
            if len(ext) >= min_len:
                yield ext
            if len(ext) < limit:
                yield from walk(ext, i + 1)

    return walk((), 0)


def prefix_key(pattern: Pattern) -> Item:
    """First item of a pattern; patterns sharing it land in one partition."""
    if not pattern:
        raise ValueError("empty pattern has no prefix")
    return pattern[0]
