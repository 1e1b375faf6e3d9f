"""
Subsets of a finite index range stored as Python integers.

Bit ``i`` of a mask is set iff element ``i`` belongs to the subset.
"""
from typing import Iterable, Iterator


def full_mask(size: int) -> int:
    return (1 << size) - 1


def singleton(i: int) -> int:
    return 1 << i


def mask_of(elements: Iterable[int]) -> int:
    """
    Build a mask from element indices

    :param elements: indices to include
    :type elements: Iterable[int]
    :return: the mask with exactly these bits set
    :rtype: int
    """
    mask = 0
    for i in elements:
        mask |= 1 << i
    return mask


def members(mask: int) -> Iterator[int]:
    """
    Iterate over the indices of a mask in increasing order

    :param mask: subset mask
    :type mask: int
    :return: iterator of indices
    :rtype: Iterator[int]
    """
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def count(mask: int) -> int:
    return bin(mask).count("1")


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def all_masks(size: int) -> range:
    return range(1 << size)


def submasks(mask: int) -> Iterator[int]:
    # Gosper-style walk over every submask, the empty mask last
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def within(mask: int, size: int) -> bool:
    return 0 <= mask <= full_mask(size)
