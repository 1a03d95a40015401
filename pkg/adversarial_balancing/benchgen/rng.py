# adversarial_balancing/benchgen/rng.py

import numpy as np

from adversarial_balancing.exceptions import InvalidInputError

_TWO_POW_M53 = 2.0 ** -53


class RngStream:
    """
    Portable random stream: Philox4x64 counter-based 64-bit words keyed by
    the seed; uniforms from the top 53 bits, centred in their bin so they
    lie in the open interval (0, 1); standard normals by Box-Muller on
    consecutive uniform pairs (cosine branch first, then sine).
    """

    def __init__(self, seed: int):
        if not 0 <= int(seed) < 2**64:
            raise InvalidInputError("RngStream", "seed must be a 64-bit unsigned integer", seed=seed)
        self.seed = int(seed)
        self._bits = np.random.Philox(key=self.seed)

    def words(self, size: int) -> np.ndarray:
        return self._bits.random_raw(size)

    def uniform(self, size: int) -> np.ndarray:
        w = self.words(size)
        return ((w >> np.uint64(11)).astype(float) + 0.5) * _TWO_POW_M53

    def normal(self, size: int) -> np.ndarray:
        pairs = (size + 1) // 2
        u = self.uniform(2 * pairs).reshape(pairs, 2)
        r = np.sqrt(-2.0 * np.log(u[:, 0]))
        angle = 2.0 * np.pi * u[:, 1]
        z = np.column_stack([r * np.cos(angle), r * np.sin(angle)]).ravel()
        return z[:size]

    def bernoulli(self, p: np.ndarray) -> np.ndarray:
        return (self.uniform(np.size(p)) < p).astype(int)

    def indices(self, n: int, size: int) -> np.ndarray:
        """``size`` draws uniformly from range(n)."""
        return np.minimum((self.uniform(size) * n).astype(int), n - 1)
