"""Bitmask helpers; subsets of an indexed carrier are plain ints."""
from functools import lru_cache


@lru_cache(maxsize=1 << 17)
def bits(mask):
    """Indices set in ``mask`` in increasing order, as a tuple."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def popcount(mask):
    return bin(mask).count("1")


def submasks(mask):
    """Yield every submask of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask
