"""Fortuna-style PRNG with simulated embedded entropy sources.

Compiled core: generator and 32-pool accumulator, CRC-16 SRAM seed
extraction, source simulators, min-entropy estimators, and the statistical
test batch harness.
"""

from ._core import (
    MAX_REQUEST_BYTES,
    SEED_BYTES,
    SRAM_IMAGE_BYTES,
    Accumulator,
    Generator,
    SramModel,
    TempModel,
    VloModel,
    aggregate_histogram,
    block_frequency_test,
    bytes_to_bits,
    collision_estimate,
    compression_estimate,
    crc16,
    cusum_test,
    extract_seed,
    frequency_test,
    full_report,
    longest_run_test,
    markov_estimate,
    mcv_estimate,
    reseed_cadence,
    run_batch,
    run_harvest,
    runs_test,
)

__all__ = [
    "MAX_REQUEST_BYTES",
    "SEED_BYTES",
    "SRAM_IMAGE_BYTES",
    "Accumulator",
    "Generator",
    "SramModel",
    "TempModel",
    "VloModel",
    "aggregate_histogram",
    "block_frequency_test",
    "bytes_to_bits",
    "collision_estimate",
    "compression_estimate",
    "crc16",
    "cusum_test",
    "extract_seed",
    "frequency_test",
    "full_report",
    "longest_run_test",
    "markov_estimate",
    "mcv_estimate",
    "reseed_cadence",
    "run_batch",
    "run_harvest",
    "runs_test",
]

__version__ = "0.1.0"
