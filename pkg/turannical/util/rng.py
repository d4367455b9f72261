"""
Counter-based random streams.

Every stochastic quantity is drawn from numpy's Philox4x64 generator keyed
by (trial, master seed), so a trial's draws depend only on those two
numbers and never on scheduling or thread count.

The trial index fills the upper key word and the master seed the lower one,
so the 128-bit key is (trial << 64) | seed. XOR-ing seed and trial would
map different (seed, trial) pairs onto the same stream.
"""

import numpy as np

from turannical.config.constants import SEED_BITS
from turannical.errors import ParameterError

# Independent streams inside one trial live in the top counter word
STREAM_HYPERGRAPH = 0
STREAM_GRAPH = 1


def trial_generator(master_seed: int, trial: int, stream: int = 0) -> np.random.Generator:
    """
    Generator for one (seed, trial, stream) triple.

    Args:
        master_seed: 64-bit master seed
        trial: Trial index (64-bit)
        stream: Stream tag inside the trial

    Returns:
        numpy Generator backed by Philox

    Raises:
        ParameterError: If seed or trial do not fit in 64 bits
    """
    limit = 2**SEED_BITS
    if not 0 <= master_seed < limit:
        raise ParameterError(f"seed {master_seed} is not a 64-bit unsigned integer")
    if not 0 <= trial < limit:
        raise ParameterError(f"trial index {trial} is not a 64-bit unsigned integer")
    key = (trial << SEED_BITS) | master_seed
    counter = stream << (3 * SEED_BITS)
    return np.random.Generator(np.random.Philox(key=key, counter=counter))
