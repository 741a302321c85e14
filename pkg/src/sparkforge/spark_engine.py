"""Spark computation: exact certificates, numeric probes, compressed probes.

The spark of a matrix is the size of its smallest linearly dependent column
subset, with sentinel cols+1 when every column subset is independent.  A
matrix with M rows is "full spark" when the spark equals M+1, equivalently
when every MxM column submatrix is invertible.

Subset sweeps run in lexicographic column order.  The witness reported is
the lexicographically smallest dependent subset found at the answer size,
and certificates are identical whatever the thread count.
"""

from __future__ import annotations

import itertools
import math
import os
import random
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import (
    BudgetExceeded,
    CapExceeded,
    NonFiniteEntry,
    ShapeError,
    ZeroMatrix,
)
from .exact_linalg import ExactMatrix, det_exact, rank_exact

__all__ = [
    "SparkCertificate",
    "CompressedProbeResult",
    "spark",
    "is_full_spark",
    "numeric_spark_probe",
    "compressed_spark_probe",
    "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 10**6

# Sweeps smaller than this stay sequential even when threads are offered.
_PARALLEL_THRESHOLD = 2048


@dataclass(frozen=True)
class SparkCertificate:
    """Outcome of a spark computation or full-spark check.

    ``witness`` is the lexicographically smallest dependent column subset
    that was explicitly verified; it is None when no dependent subset was
    examined (sentinel results, and spark = rows+1 results where dependence
    of every larger subset is forced by the row count).  For full-spark
    refutations the witness has size rows and ``spark`` records that size,
    an upper bound: smaller subsets were never searched.

    ``checked_subsets`` counts examined subsets: on refutation, every
    subset up to and including the witness in sweep order; on confirmation,
    the whole sweep.
    """

    spark: int
    rows: int
    cols: int
    witness: tuple[int, ...] | None
    checked_subsets: int
    mode: str
    budget: int | None = None

    @property
    def full_spark(self) -> bool:
        return self.cols >= self.rows and self.spark == self.rows + 1

    @property
    def sentinel(self) -> bool:
        """True when no dependent column subset exists at all."""
        return self.spark == self.cols + 1

    def as_dict(self) -> dict:
        return {
            "spark": self.spark,
            "rows": self.rows,
            "cols": self.cols,
            "full_spark": self.full_spark,
            "sentinel": self.sentinel,
            "witness": list(self.witness) if self.witness is not None else None,
            "checked_subsets": self.checked_subsets,
            "mode": self.mode,
            "budget": self.budget,
        }


@dataclass(frozen=True)
class CompressedProbeResult:
    """Randomized one-sided test of the claim spark(F) > K.

    A False answer is always evidence of a dependent set of size at most K
    in the compressed matrix; it certifies spark(F) <= K only when the
    candidate columns are confirmed dependent in F itself (the CLI offers
    that corroboration).  A True answer is probabilistic.
    """

    exceeds_k: bool
    k: int
    trials: int
    p: int
    capped: bool
    failing_trial: int | None
    candidate_columns: tuple[int, ...] | None

    def __bool__(self) -> bool:
        return self.exceeds_k

    def as_dict(self) -> dict:
        return {
            "spark_exceeds_k": self.exceeds_k,
            "k": self.k,
            "trials": self.trials,
            "p": self.p,
            "capped": self.capped,
            "failing_trial": self.failing_trial,
            "candidate_columns": (
                list(self.candidate_columns) if self.candidate_columns is not None else None
            ),
        }


def spark(a: ExactMatrix, budget: int = DEFAULT_BUDGET) -> SparkCertificate:
    """Exact spark by ascending subset size with short circuit.

    Each size level is enumerated in lexicographic column order and only
    entered when it fits in the remaining budget; BudgetExceeded reports
    the size that could not be swept.
    """
    if a.is_zero():
        raise ZeroMatrix("spark of the zero matrix is undefined")
    m, n = a.rows, a.cols
    checked = 0
    for k in range(1, min(m, n) + 1):
        level = math.comb(n, k)
        if checked + level > budget:
            raise BudgetExceeded(
                f"size-{k} level needs {level} more subsets, budget {budget}",
                k_reached=k,
            )
        for cols in itertools.combinations(range(n), k):
            checked += 1
            if rank_exact(a.column_submatrix(cols)) < k:
                return SparkCertificate(
                    spark=k,
                    rows=m,
                    cols=n,
                    witness=cols,
                    checked_subsets=checked,
                    mode="exact",
                    budget=budget,
                )
    if n > m:
        # Any m+1 columns in an m-row matrix are dependent.
        final = m + 1
    else:
        final = n + 1
    return SparkCertificate(
        spark=final,
        rows=m,
        cols=n,
        witness=None,
        checked_subsets=checked,
        mode="exact",
        budget=budget,
    )


def _comb_unrank(n: int, k: int, rank: int) -> list[int]:
    out = []
    c = 0
    for remaining in range(k, 0, -1):
        while True:
            cnt = math.comb(n - c - 1, remaining - 1)
            if rank < cnt:
                out.append(c)
                c += 1
                break
            rank -= cnt
            c += 1
    return out


def _next_combination(combo: list[int], n: int) -> bool:
    k = len(combo)
    for i in range(k - 1, -1, -1):
        if combo[i] != i + n - k:
            combo[i] += 1
            for j in range(i + 1, k):
                combo[j] = combo[j - 1] + 1
            return True
    return False


_WORKER_MATRIX: ExactMatrix | None = None


def _sweep_init(matrix: ExactMatrix) -> None:
    global _WORKER_MATRIX
    _WORKER_MATRIX = matrix


def _sweep_chunk(span: tuple[int, int]) -> int | None:
    """Scan ranks [start, start+count); return the first singular rank."""
    start, count = span
    a = _WORKER_MATRIX
    n = a.cols
    combo = _comb_unrank(n, a.rows, start)
    for off in range(count):
        if det_exact(a.column_submatrix(combo)).is_zero():
            return start + off
        if off + 1 < count and not _next_combination(combo, n):
            break
    return None


def _full_spark_sequential(a: ExactMatrix, total: int, budget: int) -> SparkCertificate:
    m, n = a.rows, a.cols
    for idx, cols in enumerate(itertools.combinations(range(n), m)):
        if det_exact(a.column_submatrix(cols)).is_zero():
            return SparkCertificate(
                spark=m,
                rows=m,
                cols=n,
                witness=cols,
                checked_subsets=idx + 1,
                mode="exact",
                budget=budget,
            )
    return SparkCertificate(
        spark=m + 1,
        rows=m,
        cols=n,
        witness=None,
        checked_subsets=total,
        mode="exact",
        budget=budget,
    )


def _full_spark_parallel(
    a: ExactMatrix, total: int, budget: int, threads: int
) -> SparkCertificate:
    m, n = a.rows, a.cols
    chunk = max(256, total // (threads * 8))
    spans = [(s, min(chunk, total - s)) for s in range(0, total, chunk)]
    hit = None
    with ProcessPoolExecutor(
        max_workers=threads, initializer=_sweep_init, initargs=(a,)
    ) as pool:
        futures = [pool.submit(_sweep_chunk, span) for span in spans]
        # Consume in submission order so the first hit is the lex smallest.
        for fut in futures:
            rank = fut.result()
            if rank is not None:
                hit = rank
                for later in futures:
                    later.cancel()
                break
    if hit is None:
        return SparkCertificate(
            spark=m + 1,
            rows=m,
            cols=n,
            witness=None,
            checked_subsets=total,
            mode="exact",
            budget=budget,
        )
    return SparkCertificate(
        spark=m,
        rows=m,
        cols=n,
        witness=tuple(_comb_unrank(n, m, hit)),
        checked_subsets=hit + 1,
        mode="exact",
        budget=budget,
    )


def is_full_spark(
    a: ExactMatrix, budget: int = DEFAULT_BUDGET, threads: int = 1
) -> SparkCertificate:
    """Check every MxM column submatrix for invertibility, exactly.

    The sweep may be split across worker processes; the certificate is the
    same for every thread count.
    """
    m, n = a.rows, a.cols
    if m > n:
        raise ShapeError(f"full spark needs cols >= rows, got {m}x{n}")
    total = math.comb(n, m)
    if total > budget:
        raise BudgetExceeded(
            f"sweep needs {total} subsets, budget {budget}", k_reached=m
        )
    if threads > 1 and total >= _PARALLEL_THRESHOLD:
        return _full_spark_parallel(a, total, budget, threads)
    return _full_spark_sequential(a, total, budget)


def default_threads() -> int:
    return os.cpu_count() or 1


def numeric_spark_probe(
    f, tol: float = 1e-10, budget: int = DEFAULT_BUDGET
) -> SparkCertificate:
    """Floating-point spark estimate via singular value rank decisions.

    A column subset counts as dependent when its smallest singular value is
    at most tol * largest * max(shape).  Same sweep order and sentinel
    conventions as the exact engine; the certificate is advisory, not a
    proof.
    """
    arr = np.asarray(getattr(f, "matrix", f), dtype=complex)
    if arr.ndim != 2:
        raise ShapeError("expected a 2-d array")
    if not np.isfinite(arr).all():
        raise NonFiniteEntry("matrix contains NaN or infinity")
    m, n = arr.shape
    checked = 0
    for k in range(1, min(m, n) + 1):
        level = math.comb(n, k)
        if checked + level > budget:
            raise BudgetExceeded(
                f"size-{k} level needs {level} more subsets, budget {budget}",
                k_reached=k,
            )
        for cols in itertools.combinations(range(n), k):
            checked += 1
            sub = arr[:, cols]
            s = np.linalg.svd(sub, compute_uv=False)
            smax = float(s[0])
            if smax == 0.0 or float(s[-1]) <= tol * smax * max(sub.shape):
                return SparkCertificate(
                    spark=k,
                    rows=m,
                    cols=n,
                    witness=cols,
                    checked_subsets=checked,
                    mode="numeric",
                    budget=budget,
                )
    final = m + 1 if n > m else n + 1
    return SparkCertificate(
        spark=final,
        rows=m,
        cols=n,
        witness=None,
        checked_subsets=checked,
        mode="numeric",
        budget=budget,
    )


def compressed_spark_probe(
    f: ExactMatrix,
    k: int,
    trials: int,
    rng_seed: int,
    p_cap: int = 10**6,
    allow_cap: bool = True,
    budget: int = DEFAULT_BUDGET,
) -> CompressedProbeResult:
    """Randomized test of spark(F) > k through integer sketch matrices.

    Each trial compresses F to k rows with a Vandermonde sketch on k
    distinct bases drawn from {1, ..., P}, P = rows^3 * 2^(cols+1), and
    checks the compressed matrix for full spark exactly.  P is clamped to
    p_cap (with a warning recorded on the result) unless allow_cap is
    False, in which case CapExceeded is raised.
    """
    if not isinstance(f, ExactMatrix) or not f.is_integer():
        raise TypeError("compressed probe needs an integer ExactMatrix")
    m, n = f.rows, f.cols
    if not 1 <= k <= min(m, n):
        raise ShapeError(f"k must lie in 1..min(rows, cols), got {k}")
    if trials < 1:
        raise ValueError("trials must be positive")
    p = (m**3) * (2 ** (n + 1))
    capped = False
    if p > p_cap:
        if not allow_cap:
            raise CapExceeded(f"P = {p} exceeds cap {p_cap}")
        warnings.warn(
            f"sketch base pool capped at {p_cap} (uncapped size {p}); "
            "the success guarantee degrades",
            stacklevel=2,
        )
        p = p_cap
        capped = True
    if p < k:
        raise CapExceeded(f"cap {p} leaves fewer than k = {k} bases")
    rng = random.Random(rng_seed)
    rows_of_f = f.to_rows()
    for t in range(trials):
        bases = sorted(rng.sample(range(1, p + 1), k))
        compressed = []
        for b in bases:
            powers = [1]
            for _ in range(m - 1):
                powers.append(powers[-1] * b)
            compressed.append(
                [sum(powers[i] * rows_of_f[i][j] for i in range(m)) for j in range(n)]
            )
        cert = is_full_spark(ExactMatrix.from_rows(compressed), budget=budget)
        if not cert.full_spark:
            return CompressedProbeResult(
                exceeds_k=False,
                k=k,
                trials=trials,
                p=p,
                capped=capped,
                failing_trial=t,
                candidate_columns=cert.witness,
            )
    return CompressedProbeResult(
        exceeds_k=True,
        k=k,
        trials=trials,
        p=p,
        capped=capped,
        failing_trial=None,
        candidate_columns=None,
    )
