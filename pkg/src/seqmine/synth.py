"""Seeded market-basket-style transaction generator.

Shapes datasets by the usual knobs: number of customers, average
transactions per customer, and item universe size (single-item events
only). Sequences are spliced from a pool of seeded "potentially frequent"
patterns with per-item corruption plus uniform noise, so mined data has
embedded frequent structure rather than pure uniformity. Every customer
gets its own RNG stream derived from the master seed, which keeps output
byte-stable regardless of generation order or thread count.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime, timedelta

import numpy as np

from .ingest import TransactionDb, TransactionRecord

EPOCH = datetime(2008, 1, 1)

# Fraction of emitted items that are uniform noise rather than pool splice.
NOISE_PROB = 0.1
# Mean pool pattern length (geometric).
POOL_PATTERN_MEAN_LEN = 4.0


class InvalidParams(ValueError):
    """Generator parameters out of range."""


@dataclass(frozen=True)
class SynthParams:
    """Dataset shape: |D| customers, |C| avg transactions, |N| items.

    ``event_size`` is the average event size |I|; only singleton events are
    supported. ``pattern_pool_size`` defaults to the item count.
    """

    customers: int
    avg_transactions: float
    item_count: int
    event_size: int = 1
    pattern_pool_size: int | None = None
    corruption_prob: float = 0.25
    seed: int = 0

    def __post_init__(self) -> None:
        if self.customers < 0:
            raise InvalidParams(f"customers must be >= 0, got {self.customers}")
        if self.avg_transactions <= 0:
            raise InvalidParams(f"avg_transactions must be > 0, got {self.avg_transactions}")
        if self.item_count < 1:
            raise InvalidParams(f"item_count must be >= 1, got {self.item_count}")
        if self.event_size != 1:
            raise InvalidParams("only singleton events are supported (event_size=1)")
        if self.pattern_pool_size is not None and self.pattern_pool_size < 1:
            raise InvalidParams("pattern_pool_size must be >= 1")
        if not 0.0 <= self.corruption_prob <= 1.0:
            raise InvalidParams("corruption_prob must be in [0, 1]")

    @property
    def pool_size(self) -> int:
        return self.pattern_pool_size if self.pattern_pool_size is not None else self.item_count

    @property
    def dataset_id(self) -> str:
        c = self.avg_transactions
        c_txt = str(int(c)) if float(c).is_integer() else str(c)
        return f"C{c_txt}-I{self.event_size}-N{self.item_count}-D{self.customers}"


def _stream(seed: int, key: tuple[int, ...]) -> np.random.Generator:
    # Independent per-purpose substream off the master seed; masking keeps
    # negative seeds valid (SeedSequence wants unsigned entropy).
    entropy = seed & 0xFFFFFFFFFFFFFFFF
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy, spawn_key=key)))


def _make_pool(params: SynthParams) -> list[list[int]]:
    rng = _stream(params.seed, (0,))
    pool = []
    for _ in range(params.pool_size):
        length = int(rng.geometric(1.0 / POOL_PATTERN_MEAN_LEN))
        pool.append([int(x) for x in rng.integers(0, params.item_count, size=length)])
    return pool


def _customer_items(params: SynthParams, pool: list[list[int]], customer: int) -> list[int]:
    rng = _stream(params.seed, (1, customer))
    count = max(1, int(rng.poisson(params.avg_transactions)))
    items: list[int] = []
    while len(items) < count:
        if rng.random() < NOISE_PROB:
            items.append(int(rng.integers(0, params.item_count)))
            continue
        pattern = pool[int(rng.integers(0, len(pool)))]
        for item in pattern:
            if rng.random() < params.corruption_prob:
                item = int(rng.integers(0, params.item_count))
            items.append(item)
    return items[:count]


def generate(params: SynthParams) -> TransactionDb:
    """Generate a deterministic transaction database for ``params``.

    Customer ids are 1-based; transactions fall on consecutive days starting
    at the fixed epoch, so any day window slices sequence length directly.
    """
    pool = _make_pool(params)
    records: list[TransactionRecord] = []
    for customer in range(params.customers):
        items = _customer_items(params, pool, customer)
        for day, item in enumerate(items):
            records.append(
                TransactionRecord(
                    object_id=customer + 1,
                    timestamp=EPOCH + timedelta(days=day),
                    item=item,
                )
            )
    return TransactionDb.from_records(records)
