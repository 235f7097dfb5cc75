"""Named random streams derived from one run seed."""
from __future__ import annotations

import zlib

import numpy as np


def _key(part) -> int:
    if isinstance(part, int):
        return part & 0xFFFFFFFF
    if isinstance(part, (frozenset, set)):
        part = ",".join(map(str, sorted(part)))
    return zlib.crc32(str(part).encode())


def derive_seed(seed: int, name: str, *keys) -> int:
    """Deterministic 63-bit seed for stream ``name`` and optional keys."""
    ss = np.random.SeedSequence([seed & 0xFFFFFFFFFFFFFFFF, _key(name), *(_key(k) for k in keys)])
    return int(ss.generate_state(2, dtype=np.uint64)[0] >> np.uint64(1))


def stream(seed: int, name: str, *keys) -> np.random.Generator:
    return np.random.default_rng(derive_seed(seed, name, *keys))
