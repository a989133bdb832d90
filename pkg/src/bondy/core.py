"""Bondy and non-Bondy set systems over a finite ground set.

The ground set is {1, .., s}; a subset of it is stored as a bit mask in
which element i occupies bit i-1.  A *system* is a duplicate-free
collection of such subsets.  An element a is a *Bondy witness* for a
system when the system never contains both A and A | {a} for a member A
avoiding a; a system with at least one witness is a *Bondy system*,
otherwise it is *non-Bondy*.

The operators here classify systems by how their members sit next to
each other in the subset lattice:

* ``covered_elements``: elements a realized by at least one pair
  (A, A | {a}) of members with a not in A.
* ``once_covered_elements``: elements realized by exactly one such pair.
* ``adjacent_members``: members at symmetric-difference distance exactly
  one from some other member.

A system is non-Bondy exactly when every element is covered.  A
non-Bondy system none of whose proper subsystems is non-Bondy is
*inclusion-minimal*; a system equal to its adjacent members in which
every element is covered exactly once is *slender*, and every slender
system is inclusion-minimal non-Bondy.

All types are immutable values with structural equality; all operations
are pure functions.
"""

from dataclasses import dataclass
from functools import cached_property

MAX_GROUND_SIZE = 63


@dataclass(frozen=True, order=True)
class GroundSet:
    """The universe {1, .., size} that systems live over."""

    size: int

    def __post_init__(self):
        if not 1 <= self.size <= MAX_GROUND_SIZE:
            raise ValueError(
                f"ground size must be in 1..{MAX_GROUND_SIZE}, got {self.size}"
            )

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def elements(self) -> range:
        return range(1, self.size + 1)

    def holds_mask(self, bits: int) -> bool:
        return bits & ~self.full_mask == 0


def _element_tuple(bits: int) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(bits.bit_length()) if bits >> i & 1)


@dataclass(frozen=True, order=True)
class SubsetMask:
    """One subset of the ground set, as a characteristic bit vector."""

    bits: int = 0

    def __post_init__(self):
        if self.bits < 0:
            raise ValueError("mask bits must be non-negative")

    @classmethod
    def from_elements(cls, elements) -> "SubsetMask":
        bits = 0
        for e in elements:
            if not isinstance(e, int) or e < 1:
                raise ValueError(f"element indices are 1-based integers, got {e!r}")
            bits |= 1 << (e - 1)
        return cls(bits)

    @property
    def elements(self) -> tuple[int, ...]:
        return _element_tuple(self.bits)

    @property
    def size(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, element: int) -> bool:
        return element >= 1 and self.bits >> (element - 1) & 1 == 1

    def with_element(self, element: int) -> "SubsetMask":
        if element < 1:
            raise ValueError(f"element indices are 1-based, got {element}")
        return SubsetMask(self.bits | 1 << (element - 1))

    def __repr__(self):
        return f"SubsetMask.from_elements({list(self.elements)})"


@dataclass(frozen=True)
class ElementSet:
    """A set of ground elements, reported by operators over systems."""

    ground: GroundSet
    bits: int = 0

    def __post_init__(self):
        if not self.ground.holds_mask(self.bits):
            raise ValueError(
                f"element set does not fit ground size {self.ground.size}"
            )

    @classmethod
    def of(cls, ground: GroundSet, elements) -> "ElementSet":
        bits = 0
        for e in elements:
            if not 1 <= e <= ground.size:
                raise ValueError(
                    f"element {e} outside ground 1..{ground.size}"
                )
            bits |= 1 << (e - 1)
        return cls(ground, bits)

    @property
    def elements(self) -> tuple[int, ...]:
        return _element_tuple(self.bits)

    @property
    def is_full(self) -> bool:
        return self.bits == self.ground.full_mask

    def __contains__(self, element: int) -> bool:
        return element >= 1 and self.bits >> (element - 1) & 1 == 1

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __repr__(self):
        return f"ElementSet.of(GroundSet({self.ground.size}), {list(self.elements)})"


@dataclass(frozen=True)
class SetSystem:
    """A duplicate-free collection of subsets of one ground set.

    Members are kept sorted ascending by mask value, so two systems are
    equal exactly when they hold the same subsets of the same ground.
    """

    ground: GroundSet
    members: tuple[SubsetMask, ...] = ()

    def __post_init__(self):
        full = self.ground.full_mask
        seen = set()
        for m in self.members:
            if m.bits & ~full:
                raise ValueError(
                    f"member {list(m.elements)} does not fit ground size {self.ground.size}"
                )
            if m.bits in seen:
                raise ValueError(f"duplicate member {list(m.elements)}")
            seen.add(m.bits)
        ordered = tuple(sorted(self.members, key=lambda m: m.bits))
        if ordered != self.members:
            object.__setattr__(self, "members", ordered)

    @classmethod
    def from_masks(cls, ground: GroundSet, masks) -> "SetSystem":
        return cls(ground, tuple(SubsetMask(b) for b in masks))

    @classmethod
    def from_sets(cls, ground_size: int, sets) -> "SetSystem":
        ground = GroundSet(ground_size)
        return cls(ground, tuple(SubsetMask.from_elements(s) for s in sets))

    @cached_property
    def member_bits(self) -> tuple[int, ...]:
        return tuple(m.bits for m in self.members)

    @cached_property
    def _present(self) -> frozenset:
        return frozenset(self.member_bits)

    def sets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(m.elements for m in self.members)

    @property
    def has_empty_member(self) -> bool:
        return 0 in self._present

    @property
    def has_full_member(self) -> bool:
        return self.ground.full_mask in self._present

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, mask: SubsetMask) -> bool:
        return mask.bits in self._present

    def __repr__(self):
        return f"SetSystem.from_sets({self.ground.size}, {[list(t) for t in self.sets()]})"


@dataclass(frozen=True)
class BondyVerdict:
    """Classification of one system: Bondy or not, and every witness.

    ``witnesses`` is exactly the complement of the covered elements, so
    ``is_bondy`` holds exactly when it is non-empty.
    """

    is_bondy: bool
    witnesses: ElementSet


# ---------------------------------------------------------------------------
# mask-level kernels shared by the operators


def _covered(member_bits, present, full: int) -> int:
    """Bits of elements covered by at least one member pair."""
    covered = 0
    for a in member_bits:
        free = full & ~a
        while free:
            b = free & -free
            if (a | b) in present:
                covered |= b
                if covered == full:
                    return full
            free ^= b
    return covered


def _covered_without(member_bits, present, full: int, removed: int) -> int:
    """Covered bits after deleting one member, with early exit on full."""
    covered = 0
    for a in member_bits:
        if a == removed:
            continue
        free = full & ~a
        while free:
            b = free & -free
            c = a | b
            if c != removed and c in present:
                covered |= b
                if covered == full:
                    return full
            free ^= b
    return covered


def _cover_counts(member_bits, present, size: int) -> list:
    full = (1 << size) - 1
    counts = [0] * size
    for a in member_bits:
        free = full & ~a
        while free:
            b = free & -free
            if (a | b) in present:
                counts[b.bit_length() - 1] += 1
            free ^= b
    return counts


# ---------------------------------------------------------------------------
# operators


def covered_elements(system: SetSystem) -> ElementSet:
    """Elements a with at least one member pair (A, A | {a}), a not in A."""
    bits = _covered(system.member_bits, system._present, system.ground.full_mask)
    return ElementSet(system.ground, bits)


def once_covered_elements(system: SetSystem) -> ElementSet:
    """Elements a with exactly one member pair (A, A | {a}), a not in A."""
    counts = _cover_counts(system.member_bits, system._present, system.ground.size)
    bits = 0
    for i, c in enumerate(counts):
        if c == 1:
            bits |= 1 << i
    return ElementSet(system.ground, bits)


def adjacent_members(system: SetSystem) -> SetSystem:
    """The members lying at symmetric-difference distance one from another member."""
    present = system._present
    s = system.ground.size
    keep = [
        a
        for a in system.member_bits
        if any((a ^ (1 << i)) in present for i in range(s))
    ]
    return SetSystem.from_masks(system.ground, keep)


def bondy_verdict(system: SetSystem) -> BondyVerdict:
    """Classify the system; the witnesses are the uncovered elements."""
    full = system.ground.full_mask
    lam = _covered(system.member_bits, system._present, full)
    witnesses = ElementSet(system.ground, full & ~lam)
    return BondyVerdict(is_bondy=bool(witnesses), witnesses=witnesses)


def is_bondy(system: SetSystem) -> bool:
    return bondy_verdict(system).is_bondy


def is_non_bondy(system: SetSystem) -> bool:
    return not bondy_verdict(system).is_bondy


def complement_system(system: SetSystem) -> SetSystem:
    """Replace every member by its complement in the ground set.

    Complementation preserves symmetric differences, so it carries pairs
    to pairs: covered elements, adjacency, and the Bondy verdict are all
    unchanged, and applying it twice gives back the input.
    """
    full = system.ground.full_mask
    return SetSystem.from_masks(system.ground, (full ^ b for b in system.member_bits))


def is_inclusion_minimal_non_bondy(system: SetSystem) -> bool:
    """Non-Bondy, with every proper subsystem Bondy.

    Deleting members can only lose covered elements, so it is enough to
    check the subsystems obtained by deleting a single member.
    """
    bits = system.member_bits
    present = system._present
    full = system.ground.full_mask
    if _covered(bits, present, full) != full:
        return False
    for removed in bits:
        if _covered_without(bits, present, full, removed) == full:
            return False
    return True


def is_slender(system: SetSystem) -> bool:
    """Every member has an adjacent member and every element is covered exactly once."""
    return adjacent_members(system) == system and once_covered_elements(system).is_full


def minimize(system: SetSystem) -> SetSystem:
    """Shrink a non-Bondy system to an inclusion-minimal non-Bondy subsystem.

    Scans members by descending mask value, deletes the first one whose
    deletion keeps the system non-Bondy, and restarts the scan until no
    deletion survives.  Rejects Bondy input.
    """
    full = system.ground.full_mask
    bits = list(system.member_bits)
    present = set(bits)
    if _covered(bits, present, full) != full:
        raise ValueError("system is Bondy: it has no non-Bondy subsystem")
    changed = True
    while changed:
        changed = False
        for b in sorted(bits, reverse=True):
            if _covered_without(bits, present, full, b) == full:
                bits.remove(b)
                present.discard(b)
                changed = True
                break
    return SetSystem.from_masks(system.ground, bits)


def extract_witness_pairs(system: SetSystem) -> SetSystem:
    """Pick, for every element a, one member pair (A, A | {a}) from the system.

    For each element in ascending order the pair with the smallest A in
    element-tuple order is chosen.  The union of the chosen pairs is a
    non-Bondy subsystem with at most 2s members.  Rejects Bondy input.
    """
    full = system.ground.full_mask
    bits = system.member_bits
    present = system._present
    if _covered(bits, present, full) != full:
        raise ValueError("system is Bondy: no witness pair covers every element")
    chosen = set()
    for i in range(system.ground.size):
        b = 1 << i
        candidates = [a for a in bits if not a & b and (a | b) in present]
        a = min(candidates, key=_element_tuple)
        chosen.add(a)
        chosen.add(a | b)
    return SetSystem.from_masks(system.ground, chosen)
