"""Time-windowed sequential pattern mining with interactive previews.

Workflow: load transactions, preview per-object sequences under candidate
day windows, freeze a window, then mine frequent patterns with either the
prefix-partitioned miner (``mine_rsp``) or the level-wise GSP baseline
(``mine_gsp``). A brute-force reference miner, a synthetic data generator,
a benchmark harness, and an HTTP service round out the toolbox.
"""

from .bench import BenchReport, BenchRow, MismatchError, mine_naive, run_benchmark
from .core import (
    CapExceeded,
    FrequentItemTable,
    Item,
    Pattern,
    Sequence,
    enumerate_distinct_subsequences,
    format_pattern,
    is_subsequence,
    parse_pattern,
    prefix_key,
    reduce_sequence,
)
from .gsp import CandidateSet, join_level, mine_gsp, prune_level
from .ingest import (
    EmptyInput,
    ParseError,
    PreviewReport,
    SequenceDatabase,
    TimeWindow,
    TransactionDb,
    TransactionRecord,
    derive_sequence_db,
    load_transactions,
    preview_sample,
    write_sequence_csv,
    write_transaction_csv,
)
from .results import MiningConfig, MiningResult, MiningStats
from .rsp import PrefixPartition, frequent_items, mine_partitioned, mine_rsp
from .synth import InvalidParams, SynthParams, generate

__version__ = "0.1.0"

__all__ = [
    "BenchReport",
    "BenchRow",
    "CandidateSet",
    "CapExceeded",
    "EmptyInput",
    "FrequentItemTable",
    "InvalidParams",
    "Item",
    "MiningConfig",
    "MiningResult",
    "MiningStats",
    "MismatchError",
    "ParseError",
    "Pattern",
    "PrefixPartition",
    "PreviewReport",
    "Sequence",
    "SequenceDatabase",
    "SynthParams",
    "TimeWindow",
    "TransactionDb",
    "TransactionRecord",
    "derive_sequence_db",
    "enumerate_distinct_subsequences",
    "format_pattern",
    "frequent_items",
    "generate",
    "is_subsequence",
    "join_level",
    "load_transactions",
    "mine_gsp",
    "mine_naive",
    "mine_partitioned",
    "mine_rsp",
    "parse_pattern",
    "prefix_key",
    "preview_sample",
    "prune_level",
    "reduce_sequence",
    "run_benchmark",
    "write_sequence_csv",
    "write_transaction_csv",
]
