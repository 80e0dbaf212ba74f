"""Finite measurable spaces and their sets.

A space is a finite, ordered universe of named points together with a
sigma-algebra.  On a finite universe every sigma-algebra is generated by a
partition; the partition blocks are the algebra atoms, and measurable sets are
exactly the unions of blocks.  The default algebra is the power set (singleton
blocks).

Sets are stored as bit masks over point indices, which keeps subset tests,
unions and complements cheap and gives a fixed canonical enumeration order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import InvalidFamilyError, SpaceMismatchError


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class MeasurableSpace:
    """A finite universe with a partition-generated sigma-algebra."""

    atoms: tuple  # point names, fixed order
    blocks: tuple  # algebra atoms as bit masks, disjoint and covering

    @property
    def full_mask(self) -> int:
        return (1 << len(self.atoms)) - 1

    @property
    def n_blocks(self) -> int:
        return len(self.blocks)

    @property
    def is_power_set(self) -> bool:
        return len(self.blocks) == len(self.atoms)

    def index_of(self, atom) -> int:
        try:
            return self.atoms.index(atom)
        except ValueError:
            raise KeyError(f"unknown atom {atom!r}") from None

    def block_index_of(self, atom) -> int:
        bit = 1 << self.index_of(atom)
        for i, block in enumerate(self.blocks):
            if block & bit:
                return i
        raise AssertionError("partition does not cover the universe")

    # -- set construction ---------------------------------------------------

    def set_from_mask(self, mask: int) -> "MeasurableSet":
        if mask & ~self.full_mask:
            raise ValueError("mask uses bits outside the universe")
        for block in self.blocks:
            inter = mask & block
            if inter and inter != block:
                raise InvalidFamilyError(
                    "set is not measurable: it splits an algebra atom"
                )
        return MeasurableSet(self, mask)

    def make_set(self, atom_names: Iterable) -> "MeasurableSet":
        mask = 0
        for name in atom_names:
            mask |= 1 << self.index_of(name)
        return self.set_from_mask(mask)

    @property
    def empty_set(self) -> "MeasurableSet":
        return MeasurableSet(self, 0)

    @property
    def full_set(self) -> "MeasurableSet":
        return MeasurableSet(self, self.full_mask)

    def block_set(self, block_index: int) -> "MeasurableSet":
        return MeasurableSet(self, self.blocks[block_index])

    # -- enumeration --------------------------------------------------------

    def subsets(self) -> Iterator["MeasurableSet"]:
        """All measurable sets in canonical order (block-subset counting)."""
        for selector in range(1 << self.n_blocks):
            mask = 0
            bits = selector
            i = 0
            while bits:
                if bits & 1:
                    mask |= self.blocks[i]
                bits >>= 1
                i += 1
            yield MeasurableSet(self, mask)

    def n_subsets(self) -> int:
        return 1 << self.n_blocks


@dataclass(frozen=True)
class MeasurableSet:
    """A measurable set, canonically a union of algebra atoms."""

    space: MeasurableSpace
    mask: int

    def _check(self, other: "MeasurableSet") -> None:
        if self.space != other.space:
            raise SpaceMismatchError("sets live on different spaces")

    @property
    def is_empty(self) -> bool:
        return self.mask == 0

    @property
    def is_full(self) -> bool:
        return self.mask == self.space.full_mask

    def __len__(self):
        return _popcount(self.mask)

    def __contains__(self, atom) -> bool:
        return bool(self.mask & (1 << self.space.index_of(atom)))

    def __and__(self, other):
        self._check(other)
        return MeasurableSet(self.space, self.mask & other.mask)

    def __or__(self, other):
        self._check(other)
        return MeasurableSet(self.space, self.mask | other.mask)

    def __sub__(self, other):
        self._check(other)
        return MeasurableSet(self.space, self.mask & ~other.mask)

    def complement(self) -> "MeasurableSet":
        return MeasurableSet(self.space, self.space.full_mask & ~self.mask)

    def issubset(self, other: "MeasurableSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def atom_names(self) -> tuple:
        return tuple(
            name for i, name in enumerate(self.space.atoms) if self.mask & (1 << i)
        )

    def block_indices(self) -> tuple:
        return tuple(
            i for i, block in enumerate(self.space.blocks)
            if block and block & self.mask == block
        )

    def __str__(self):
        return "{" + ",".join(str(n) for n in self.atom_names()) + "}"


def build_space(
    atom_names: Sequence,
    partition: Optional[Sequence[Sequence]] = None,
) -> MeasurableSpace:
    """Create a finite measurable space.

    Without a partition the algebra is the power set.  With a partition the
    algebra is generated by its blocks, which must be nonempty, disjoint and
    cover the universe.
    """
    names = tuple(atom_names)
    if not names:
        raise ValueError("a space needs at least one atom")
    if len(set(names)) != len(names):
        raise ValueError("atom names must be distinct")
    index = {name: i for i, name in enumerate(names)}

    if partition is None:
        blocks = tuple(1 << i for i in range(len(names)))
    else:
        masks = []
        seen = 0
        for block in partition:
            mask = 0
            for name in block:
                if name not in index:
                    raise ValueError(f"partition mentions unknown atom {name!r}")
                mask |= 1 << index[name]
            if mask == 0:
                raise ValueError("partition blocks must be nonempty")
            if mask & seen:
                raise ValueError("partition blocks must be disjoint")
            seen |= mask
            masks.append(mask)
        if seen != (1 << len(names)) - 1:
            raise ValueError("partition blocks must cover the universe")
        masks.sort(key=lambda m: (m & -m))  # order by lowest atom index
        blocks = tuple(masks)

    return MeasurableSpace(atoms=names, blocks=blocks)
