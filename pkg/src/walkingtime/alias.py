"""Alias method for O(1) draws from a fixed discrete distribution."""

from __future__ import annotations

import numpy as np


class AliasTable:
    """Vose alias table built from non-negative weights.

    Construction is O(K); each draw costs one uniform index plus one coin
    flip.  Weights need not be normalized but must sum to a positive value.
    """

    def __init__(self, weights):
        w = np.asarray(weights, dtype=np.float64)
        if w.ndim != 1 or w.size == 0:
            raise ValueError("weights must be a non-empty 1-d sequence")
        if np.any(w < 0) or not np.all(np.isfinite(w)):
            raise ValueError("weights must be finite and non-negative")
        total = w.sum()
        if total <= 0:
            raise ValueError("weights must sum to a positive value")
        k = w.size
        prob = w * (k / total)
        accept = np.zeros(k, dtype=np.float64)
        alias = np.zeros(k, dtype=np.int64)
        small = [i for i in range(k) if prob[i] < 1.0]
        large = [i for i in range(k) if prob[i] >= 1.0]
        while small and large:
            s = small.pop()
            l = large.pop()
            accept[s] = prob[s]
            alias[s] = l
            prob[l] -= 1.0 - prob[s]
            (small if prob[l] < 1.0 else large).append(l)
        # leftovers are 1.0 up to rounding
        for i in large:
            accept[i] = 1.0
        for i in small:
            accept[i] = 1.0
        self.accept = accept
        self.alias = alias
        self.probabilities = w / total

    def __len__(self) -> int:
        return self.accept.size

    def draw(self, rng: np.random.Generator) -> int:
        """One index drawn proportionally to the construction weights."""
        i = int(rng.integers(self.accept.size))
        if rng.random() < self.accept[i]:
            return i
        return int(self.alias[i])

    def sample(self, rng: np.random.Generator, n: int) -> np.ndarray:
        """n independent draws as an int64 array."""
        idx = rng.integers(self.accept.size, size=n)
        flip = rng.random(n) < self.accept[idx]
        return np.where(flip, idx, self.alias[idx])
