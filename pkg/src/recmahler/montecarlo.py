"""Monte Carlo cross-checks of the closed distribution and volume forms.

Sampling pulls coefficient vectors uniformly from a product of disks that
provably contains the target sublevel set: a monic degree-2N polynomial
with Mahler measure mu has |coefficient of x^{N+n}| <= C(2N, N-n) * mu
(each coefficient is an elementary symmetric function of the roots, and
every k-subset product is at most prod max(1, |root|)).  The indicator of
{nu_rec <= xi} integrated over that region times the region volume is the
distribution value h_N(xi); dropping the monic normalization and bounding
the leading coefficient by 1 gives the star-body volume the same way.

Reproducibility: draws come from the Philox counter-based generator, keyed
by the user seed with the chunk index placed in the counter's top word.
Samples are processed in fixed-size chunks of 2^16 regardless of worker
count, so estimates are bit-identical for any --workers value; worker
threads only change wall-clock time.  Chunk tallies are integers, which
makes the reduction order immaterial.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import NoConvergence
from .measure import aberth_batch

CHUNK = 1 << 16
_REJECTION_CAP = 1e-6


@dataclass(frozen=True)
class MCEstimate:
    """A mean with its standard error and the run's audit fields.

    rejections counts samples whose root solve failed to converge; they are
    scored as misses and must stay below 1e-6 of the total, which the
    drivers enforce before returning.
    """

    mean: float
    std_error: float
    samples: int
    seed: int
    region_volume: float
    rejections: int = 0


def bounding_radii(n_order: int, xi: float) -> np.ndarray:
    """Disk radii containing {nu_rec <= xi}: |b_n| <= C(2N, N-n) * xi."""
    if n_order < 1:
        raise ValueError("order must be at least 1")
    if not (xi >= 1.0):
        raise ValueError("threshold below the support edge xi = 1")
    return np.array(
        [math.comb(2 * n_order, n_order - n) * xi for n in range(n_order)],
        dtype=float,
    )


def _volume_radii(n_order: int) -> np.ndarray:
    """Disk radii containing {mu_rec <= 1} for v in C^{N+1} (monic bound 1
    on the leading slot)."""
    return np.array(
        [math.comb(2 * n_order, n_order - n) for n in range(n_order + 1)],
        dtype=float,
    )


def _chunk_generator(seed: int, chunk_index: int) -> np.random.Generator:
    counter = np.zeros(4, dtype=np.uint64)
    counter[3] = np.uint64(chunk_index + 1)
    return np.random.Generator(np.random.Philox(key=np.uint64(seed), counter=counter))


def _sample_disks(gen: np.random.Generator, count: int, radii: np.ndarray) -> np.ndarray:
    """count x len(radii) complex points, uniform on each disk."""
    u = gen.random((count, radii.size))
    w = gen.random((count, radii.size))
    return radii[None, :] * np.sqrt(u) * np.exp(2j * np.pi * w)


def _measures_batch(coeffs: np.ndarray, tol: float = 1e-9) -> tuple[np.ndarray, np.ndarray]:
    """Mahler measures of a batch of same-degree polynomials.

    Returns (measures, converged).  Unconverged rows report measure inf so
    they can never be counted as hits by accident.
    """
    roots, _, ok = aberth_batch(coeffs, tol, fast_exit=True)
    meas = np.abs(coeffs[:, -1]) * np.prod(np.maximum(1.0, np.abs(roots)), axis=1)
    meas = np.where(ok, meas, np.inf)
    return meas, ok


def _run_chunks(samples: int, seed: int, workers: int, chunk_fn):
    """Map chunk_fn(gen, count) over fixed chunks, reduce integer tallies."""
    n_chunks = (samples + CHUNK - 1) // CHUNK

    def work(ci: int) -> tuple[int, int]:
        count = min(CHUNK, samples - ci * CHUNK)
        return chunk_fn(_chunk_generator(seed, ci), count)

    if workers <= 1:
        tallies = [work(ci) for ci in range(n_chunks)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            tallies = list(pool.map(work, range(n_chunks)))
    hits = sum(t[0] for t in tallies)
    rejections = sum(t[1] for t in tallies)
    return hits, rejections


def _estimate(
    hits: int, rejections: int, samples: int, seed: int, volume: float
) -> MCEstimate:
    if rejections > _REJECTION_CAP * samples:
        raise NoConvergence(
            f"{rejections} of {samples} samples failed the root solve"
        )
    p = hits / samples
    return MCEstimate(
        mean=volume * p,
        std_error=volume * math.sqrt(p * (1.0 - p) / samples),
        samples=samples,
        seed=seed,
        region_volume=volume,
        rejections=rejections,
    )


def mc_hN(
    n_order: int,
    xi: float,
    samples: int,
    seed: int = 0,
    workers: int = 1,
) -> MCEstimate:
    """Monte Carlo estimate of the distribution value h_N(xi)."""
    if samples < 10_000:
        raise ValueError("at least 10^4 samples required")
    radii = bounding_radii(n_order, xi)
    volume = float(np.prod(np.pi * radii ** 2))
    n = n_order

    def chunk(gen: np.random.Generator, count: int) -> tuple[int, int]:
        b = _sample_disks(gen, count, radii)
        coeffs = np.zeros((count, 2 * n + 1), dtype=complex)
        coeffs[:, 0] = 1.0
        coeffs[:, 2 * n] = 1.0
        coeffs[:, n] = b[:, 0]
        for m in range(1, n):
            coeffs[:, n + m] = b[:, m]
            coeffs[:, n - m] = b[:, m]
        meas, ok = _measures_batch(coeffs)
        return int(np.count_nonzero(meas <= xi)), int(np.count_nonzero(~ok))

    hits, rejections = _run_chunks(samples, seed, workers, chunk)
    return _estimate(hits, rejections, samples, seed, volume)


def mc_volume(
    n_order: int,
    samples: int,
    seed: int = 0,
    workers: int = 1,
) -> MCEstimate:
    """Monte Carlo estimate of the volume of {mu_rec <= 1} in C^{N+1}."""
    if samples < 10_000:
        raise ValueError("at least 10^4 samples required")
    radii = _volume_radii(n_order)
    volume = float(np.prod(np.pi * radii ** 2))
    n = n_order

    def chunk(gen: np.random.Generator, count: int) -> tuple[int, int]:
        v = _sample_disks(gen, count, radii)
        coeffs = np.zeros((count, 2 * n + 1), dtype=complex)
        coeffs[:, n] = v[:, 0]
        for m in range(1, n + 1):
            coeffs[:, n + m] = v[:, m]
            coeffs[:, n - m] = v[:, m]
        # a leading coefficient of exactly 0 has probability 0; perturb the
        # impossible case rather than crash the whole chunk
        zero_lead = coeffs[:, -1] == 0
        if np.any(zero_lead):
            coeffs[zero_lead, -1] = 1e-300
        meas, ok = _measures_batch(coeffs)
        return int(np.count_nonzero(meas <= 1.0)), int(np.count_nonzero(~ok))

    hits, rejections = _run_chunks(samples, seed, workers, chunk)
    return _estimate(hits, rejections, samples, seed, volume)
