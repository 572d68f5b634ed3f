"""Tiny int-bitmask helpers shared across modules."""


def mask_of(variables):
    m = 0
    for v in variables:
        m |= 1 << v
    return m


def bits_of(mask):
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def set_of(mask):
    return frozenset(bits_of(mask))
