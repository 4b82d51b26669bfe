"""
File location; .../classical/distsearch.py
Description: This file contains the bounded minimum-weight search engine.
            Error patterns are enumerated level by level with vectorized
            syndrome updates and matched in the middle through a sorted
            syndrome table. Positions carry an alphabet of q symbols:
            q = 1 for binary codes, q = 3 (X, Z, Y) for symplectic codes.
(c) 2024 QGPCodes - all rights reserved
"""

# Global imports
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Iterable, Optional
import time
from . import logger

# Django imports
from django.conf import settings

# Application imports
from classical.lincode import BitVector, LinearCode
from main.exceptions import BudgetError, SearchError
from main.validators import validate_radius

# Third-party imports
import numpy as np

# ------------------------------------------
# Search outcomes
# ------------------------------------------


@dataclass(frozen=True)
class SearchOutcome:
    """
    Result of a bounded search. If found, the witness has the target
    syndrome and its weight is `weight` <= `radius`.
    """

    found: bool
    radius: int
    weight: Optional[int] = None
    witness: Optional[BitVector] = None

    def to_dict(self) -> dict:
        return {
            "found": self.found,
            "radius": self.radius,
            "weight": self.weight,
            "witness": self.witness.to_hex() if self.witness is not None else None,
        }


# ------------------------------------------
# Pattern enumeration
# ------------------------------------------


def pattern_count(n: int, q: int, max_weight: int) -> int:
    """Number of patterns of weight <= max_weight over n positions and q symbols."""
    return sum(comb(n, i) * q**i for i in range(max_weight + 1))


def check_budget(n: int, q: int, radius: int, budget: Optional[int] = None) -> int:
    """
    Return the number of patterns a search of the given radius enumerates.

    Raises:
    BudgetError: If the count exceeds the budget.
    """

    if budget is None:
        budget = settings.QGP_SEARCH_BUDGET
    cost = pattern_count(n, q, (radius + 1) // 2) + pattern_count(n, q, radius // 2)
    if cost > budget:
        raise BudgetError(
            f"A radius-{radius} search over {n} positions enumerates {cost} patterns, "
            f"the budget is {budget}."
        )
    return cost


@dataclass(frozen=True, eq=False)
class Patterns:
    """
    Error patterns sorted by weight, then lexicographically on their
    (position, symbol) sequences. Unused slots hold position -1.
    """

    positions: np.ndarray
    symbols: np.ndarray
    weights: np.ndarray
    syndromes: np.ndarray

    def __len__(self) -> int:
        return len(self.weights)

    def prefix(self, max_weight: int) -> "Patterns":
        count = int(np.searchsorted(self.weights, max_weight, side="right"))
        return Patterns(
            positions=self.positions[:count, :max_weight],
            symbols=self.symbols[:count, :max_weight],
            weights=self.weights[:count],
            syndromes=self.syndromes[:count],
        )


def enumerate_patterns(columns: np.ndarray, max_weight: int) -> Patterns:
    """
    Enumerate every pattern of weight <= max_weight together with its
    syndrome. Level w is obtained from level w-1 by appending a position
    beyond the last one, so parents in lexicographic order give children
    in lexicographic order.

    Parameters:
    columns (np.ndarray): Packed syndromes of shape (n, q); entry (p, c)
                    is the syndrome of symbol c at position p.
    max_weight (int): Largest weight enumerated.

    Returns:
    patterns (Patterns): All patterns with their syndromes.
    """

    n, q = columns.shape
    pos = np.zeros((1, 0), dtype=np.int16)
    sym = np.zeros((1, 0), dtype=np.uint8)
    syn = np.zeros(1, dtype=columns.dtype)
    levels = [(pos, sym, syn)]

    for w in range(1, max_weight + 1):
        last = pos[:, -1].astype(np.int64) if w > 1 else np.full(len(syn), -1, dtype=np.int64)
        avail = n - 1 - last
        parent = np.repeat(np.arange(len(syn)), avail)
        starts = np.repeat(np.cumsum(avail) - avail, avail)
        new_pos = last[parent] + 1 + (np.arange(len(parent)) - starts)

        parent = np.repeat(parent, q)
        new_pos = np.repeat(new_pos, q)
        new_sym = np.tile(np.arange(q, dtype=np.uint8), len(parent) // q)

        syn = syn[parent] ^ columns[new_pos, new_sym]
        pos = np.hstack([pos[parent], new_pos[:, None].astype(np.int16)])
        sym = np.hstack([sym[parent], new_sym[:, None]])
        levels.append((pos, sym, syn))

    padded_pos, padded_sym, weights, syndromes = [], [], [], []
    for w, (p, s, y) in enumerate(levels):
        fill = max_weight - w
        padded_pos.append(np.hstack([p, np.full((len(y), fill), -1, dtype=np.int16)]))
        padded_sym.append(np.hstack([s, np.zeros((len(y), fill), dtype=np.uint8)]))
        weights.append(np.full(len(y), w, dtype=np.int8))
        syndromes.append(y)

    return Patterns(
        positions=np.vstack(padded_pos),
        symbols=np.vstack(padded_sym),
        weights=np.concatenate(weights),
        syndromes=np.concatenate(syndromes),
    )


# ------------------------------------------
# Syndrome table
# ------------------------------------------


@dataclass(frozen=True, eq=False)
class SyndromeIndex:
    """
    Sorted distinct syndromes of a pattern set. For each key, `best` is the
    first pattern (minimal weight, then lexicographic) with that syndrome
    and `second` the next one, or -1.
    """

    patterns: Patterns
    keys: np.ndarray
    best: np.ndarray
    second: np.ndarray

    @property
    def max_weight(self) -> int:
        return self.patterns.positions.shape[1]

    @classmethod
    def build(cls, patterns: Patterns) -> "SyndromeIndex":
        order = np.argsort(patterns.syndromes, kind="stable")
        ordered = patterns.syndromes[order]
        boundary = np.ones(len(order), dtype=bool)
        boundary[1:] = (ordered[1:] != ordered[:-1]).astype(bool)
        starts = np.flatnonzero(boundary)
        sizes = np.diff(np.append(starts, len(order)))
        following = order[np.minimum(starts + 1, len(order) - 1)]
        return cls(
            patterns=patterns,
            keys=ordered[starts],
            best=order[starts],
            second=np.where(sizes > 1, following, -1),
        )


# ------------------------------------------
# Meet-in-the-middle search
# ------------------------------------------


class Searcher:
    """
    Bounded minimum-weight search over a fixed set of column syndromes.
    The radius is split as a + b with a = ceil(radius/2) patterns streamed
    against a table of the patterns of weight <= b.
    """

    def __init__(self, columns: np.ndarray, radius: int, budget: Optional[int] = None):
        self.columns = np.asarray(columns)
        self.n, self.q = self.columns.shape
        validate_radius(radius, self.n)
        self.radius = radius
        check_budget(self.n, self.q, radius, budget)

        started = time.perf_counter()
        self.stream = enumerate_patterns(self.columns, (radius + 1) // 2)
        self.index = SyndromeIndex.build(self.stream.prefix(radius // 2))
        # Keys of merged patterns are position * 4 + symbol code
        self.sentinel = 4 * self.n + 4
        logger.debug(
            f"Search tables for radius {radius}: {len(self.stream)} streamed, "
            f"{len(self.index.patterns)} tabled, {time.perf_counter() - started:.2f} s"
        )

    def _key(self, target: int):
        return np.uint64(target) if self.columns.dtype == np.uint64 else int(target)

    def _merge(self, rows: np.ndarray, partners: np.ndarray) -> np.ndarray:
        """
        Sum the stream patterns `rows` and the table patterns `partners`.
        Returns one sorted row of keys per pair, padded with the sentinel.
        """

        table = self.index.patterns
        pos = np.hstack([self.stream.positions[rows], table.positions[partners]]).astype(np.int64)
        code = np.hstack([self.stream.symbols[rows], table.symbols[partners]]).astype(np.int64) + 1
        code = np.where(pos < 0, 0, code)
        pos = np.where(pos < 0, self.n, pos)

        order = np.argsort(pos, axis=1, kind="stable")
        pos = np.take_along_axis(pos, order, axis=1)
        code = np.take_along_axis(code, order, axis=1)
        # A position occurs at most twice: once per side
        dup = (pos[:, 1:] == pos[:, :-1]) & (pos[:, 1:] < self.n)
        code[:, :-1] ^= np.where(dup, code[:, 1:], 0)
        code[:, 1:][dup] = 0

        keys = np.where(code > 0, pos * 4 + code, self.sentinel)
        keys.sort(axis=1)
        return keys

    def _witness(self, keys: np.ndarray) -> BitVector:
        length = self.n if self.q == 1 else 2 * self.n
        bits = 0
        for key in keys[keys < self.sentinel]:
            p, c = divmod(int(key), 4)
            if c & 1:
                bits |= 1 << p
            if c & 2:
                bits |= 1 << (self.n + p)
        return BitVector(length, bits)

    def _verify(self, keys: np.ndarray, target: int, exclude_zero: bool) -> None:
        keys = keys[keys < self.sentinel]
        syndrome = self._key(0)
        for key in keys:
            p, c = divmod(int(key), 4)
            syndrome = syndrome ^ self.columns[p, c - 1]
        if syndrome != self._key(target) or len(keys) > self.radius or (exclude_zero and len(keys) == 0):
            raise SearchError(f"Witness {keys.tolist()} failed its re-verification.")

    def search(self, target: int, exclude_zero: bool = False) -> SearchOutcome:
        """
        Find the minimum weight pattern of weight <= radius with the target
        syndrome, or report that none exists. Among several patterns of
        minimal weight the lexicographically smallest is returned.

        Parameters:
        target (int): Packed target syndrome.
        exclude_zero (bool): Ignore the zero pattern (used for the
                    minimum weight of the code itself).

        Returns:
        outcome (SearchOutcome): The result with its re-verified witness.
        """

        index = self.index
        probes = self.stream.syndromes ^ self._key(target)
        slot = np.minimum(np.searchsorted(index.keys, probes), len(index.keys) - 1)
        rows = np.flatnonzero((index.keys[slot] == probes).astype(bool))
        if rows.size == 0:
            return SearchOutcome(found=False, radius=self.radius)

        partners = index.best[slot[rows]]
        keys = self._merge(rows, partners)
        weights = (keys < self.sentinel).sum(axis=1)

        if exclude_zero:
            zero = np.flatnonzero(weights == 0)
            if zero.size:
                # The stream pattern equals the table entry, fall back to the runner-up
                second = index.second[slot[rows[zero]]]
                has = second >= 0
                keys[zero[has]] = self._merge(rows[zero[has]], second[has])
                weights[zero[has]] = (keys[zero[has]] < self.sentinel).sum(axis=1)
                keep = np.ones(len(rows), dtype=bool)
                keep[zero[~has]] = False
                keys, weights = keys[keep], weights[keep]
                if weights.size == 0:
                    return SearchOutcome(found=False, radius=self.radius)

        weight = int(weights.min())
        candidates = keys[weights == weight]
        chosen = candidates[np.lexsort(candidates.T[::-1])[0]]
        self._verify(chosen, target, exclude_zero)
        return SearchOutcome(found=True, radius=self.radius, weight=weight, witness=self._witness(chosen))


# ------------------------------------------
# Worker pool
# ------------------------------------------

_worker_searcher: Optional[Searcher] = None


def _init_worker(columns: np.ndarray, radius: int, budget: int) -> None:
    global _worker_searcher
    _worker_searcher = Searcher(columns, radius, budget)


def _search_in_worker(job: tuple[int, bool]) -> SearchOutcome:
    target, exclude_zero = job
    return _worker_searcher.search(target, exclude_zero)


def search_many(
    columns: np.ndarray,
    targets: Iterable[int],
    radius: int,
    workers: int = 1,
    exclude_zero: bool = False,
    budget: Optional[int] = None,
) -> list[SearchOutcome]:
    """
    Run independent searches for several target syndromes. With more than
    one worker the targets are spread over a process pool whose workers
    each build the read-only tables once.

    Parameters:
    columns (np.ndarray): Packed column syndromes of shape (n, q).
    targets (iterable of ints): Packed target syndromes.
    radius (int): Search radius.
    workers (int): Number of processes.
    exclude_zero (bool): Ignore the zero pattern.
    budget (int): Pattern budget. Default is settings.QGP_SEARCH_BUDGET.

    Returns:
    outcomes (list of SearchOutcome): One outcome per target, in order.
    """

    targets = list(targets)
    if budget is None:
        budget = settings.QGP_SEARCH_BUDGET
    columns = np.asarray(columns)
    check_budget(columns.shape[0], columns.shape[1], radius, budget)

    started = time.perf_counter()
    if workers <= 1 or len(targets) <= 1:
        searcher = Searcher(columns, radius, budget)
        outcomes = [searcher.search(t, exclude_zero) for t in targets]
    else:
        jobs = [(t, exclude_zero) for t in targets]
        chunksize = max(1, len(jobs) // (4 * workers))
        with ProcessPoolExecutor(
            max_workers=workers, initializer=_init_worker, initargs=(columns, radius, budget)
        ) as pool:
            outcomes = list(pool.map(_search_in_worker, jobs, chunksize=chunksize))
    logger.info(
        f"{len(targets)} searches of radius {radius} on {workers} worker(s) "
        f"in {time.perf_counter() - started:.2f} s"
    )
    return outcomes


# ------------------------------------------
# Binary codes
# ------------------------------------------


def binary_columns(C: LinearCode) -> np.ndarray:
    return C.column_syndromes()[:, None]


def coset_min_weight(
    C: LinearCode, shift: BitVector, radius: int, budget: Optional[int] = None
) -> SearchOutcome:
    """
    Minimum weight in the coset C + shift, if it is at most radius.
    """

    searcher = Searcher(binary_columns(C), radius, budget)
    return searcher.search(C.syndrome(shift))


def coset_min_weights(
    C: LinearCode,
    shifts: Iterable[BitVector],
    radius: int,
    workers: int = 1,
    budget: Optional[int] = None,
) -> list[SearchOutcome]:
    """Batched coset_min_weight over many shifts of the same code."""
    targets = [C.syndrome(shift) for shift in shifts]
    return search_many(binary_columns(C), targets, radius, workers=workers, budget=budget)


def min_weight(C: LinearCode, radius: int, budget: Optional[int] = None) -> SearchOutcome:
    """
    Minimum weight of a nonzero codeword of C, if it is at most radius.
    """

    searcher = Searcher(binary_columns(C), radius, budget)
    return searcher.search(0, exclude_zero=True)
