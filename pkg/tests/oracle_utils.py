"""Brute-force reference implementations used only by tests.

These deliberately share no code with the package: subsequence sets come
from itertools index combinations and support from per-object set
membership, so they can arbitrate what the real miners should return.
"""

from itertools import combinations


def brute_subsequences(seq, max_len=None):
    """Every distinct non-empty subsequence of ``seq`` up to ``max_len``."""
    out = set()
    n = len(seq)
    top = n if max_len is None else min(max_len, n)
    for k in range(1, top + 1):
        for idx in combinations(range(n), k):
            out.add(tuple(seq[i] for i in idx))
    return out


def brute_contains(pattern, seq):
    """Subsequence test by exhaustive index combinations."""
    n = len(pattern)
    if n > len(seq):
        return False
    return any(
        tuple(seq[i] for i in idx) == tuple(pattern)
        for idx in combinations(range(len(seq)), n)
    )


def brute_mine(sequences, min_support, max_len=None):
    """pattern -> object support over an iterable of sequences."""
    counts = {}
    for seq in sequences:
        for pat in brute_subsequences(seq, max_len):
            counts[pat] = counts.get(pat, 0) + 1
    return {p: c for p, c in counts.items() if c >= min_support}
