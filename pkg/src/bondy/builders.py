"""Constructions of slender and inclusion-minimal non-Bondy systems.

The catalog holds, for each ground size up to 6, explicit small systems
that are all slender (hence inclusion-minimal non-Bondy).  On top of it
sit four combining rules:

* ``disjoint_union`` places two systems on disjoint blocks of a larger
  ground; sizes add, and minimality and slenderness carry over as long
  as neither input contains the empty set.
* ``extend`` adjoins a fresh top element w = s+1 together with the
  single new member A | {w} for a chosen existing member A.
* ``base_2s`` gives one slender system of size exactly 2s without the
  empty set for each ground size 5..9; ``build_slender_2s`` stretches
  that to every s >= 5 by disjoint unions, with a complemented variant
  that avoids the full set instead of the empty set.
* ``build_slender`` realizes every size t with s+1 <= t <= 2s on every
  ground size s >= 6, recursing down to the catalog at s = 6.

Each closed construction is described by a ``BuildTrace``; replaying a
trace rebuilds the identical system.
"""

from dataclasses import dataclass
from functools import lru_cache

from .core import (
    GroundSet,
    SetSystem,
    SubsetMask,
    _element_tuple,
    complement_system,
    is_inclusion_minimal_non_bondy,
)

# Catalog of small systems, keyed by ground size.  For s <= 3 the list is
# complete up to relabeling; for s = 4..6 it realizes every attainable
# size once.  Systems are 1-based element tuples, 1-based indices.
_CATALOG: dict = {
    1: (
        ((), (1,)),
    ),
    2: (
        ((), (1,), (1, 2)),
        ((), (1,), (2,)),
        ((1,), (2,), (1, 2)),
    ),
    3: (
        ((), (1,), (1, 2), (1, 2, 3)),
        ((), (1,), (1, 2), (1, 3)),
        ((), (1,), (2,), (1, 3)),
        ((), (1,), (2,), (3,)),
        ((1,), (2,), (1, 2), (1, 2, 3)),
        ((1,), (1, 3), (2, 3), (1, 2, 3)),
        ((1, 2), (1, 3), (2, 3), (1, 2, 3)),
        ((1,), (2,), (1, 2), (1, 3)),
    ),
    4: (
        ((), (1,), (2,), (3,), (4,)),
        ((1,), (2,), (1, 2), (1, 2, 3), (1, 2, 3, 4)),
        ((1,), (2,), (3,), (4,), (1, 2), (3, 4)),
        ((), (1,), (1, 2), (1, 2, 3), (1, 2, 3, 4)),
    ),
    5: (
        ((), (1,), (2,), (3,), (4,), (5,)),
        ((), (1,), (1, 2), (1, 2, 3), (1, 2, 3, 4), (1, 2, 3, 4, 5)),
        ((1,), (2,), (4,), (5,), (1, 2), (1, 3), (4, 5)),
        ((1,), (2,), (3,), (4,), (1, 2), (3, 4), (1, 2, 3, 4), (1, 2, 3, 4, 5)),
        (
            (1, 2), (2, 3), (3, 4), (4, 5), (1, 5),
            (1, 2, 4), (2, 3, 5), (1, 3, 4), (2, 4, 5), (1, 3, 5),
        ),
    ),
    6: (
        ((), (1,), (2,), (3,), (4,), (5,), (6,)),
        ((1,), (2,), (1, 2), (1, 3), (4,), (5,), (4, 5), (4, 5, 6)),
        (
            (1,), (2,), (1, 2), (3,), (4,), (3, 4),
            (1, 2, 3, 4), (1, 2, 3, 4, 5), (4, 6),
        ),
        (
            (1,), (2,), (1, 2), (3,), (4,), (3, 4), (5,), (5, 6),
            (1, 2, 3, 4), (1, 2, 3, 4, 5),
        ),
        (
            (1, 2), (2, 3), (3, 4), (4, 5), (1, 5),
            (1, 2, 4), (2, 3, 5), (1, 3, 4), (2, 4, 5), (1, 3, 5),
            (1, 3, 5, 6),
        ),
        (
            (), (6,),
            (1, 2), (2, 3), (3, 4), (4, 5), (1, 5),
            (1, 2, 4), (2, 3, 5), (1, 3, 4), (2, 4, 5), (1, 3, 5),
        ),
    ),
}

# Extra members stacked onto the ground-5 cycle system to reach size 2s
# on ground sizes 6..9.
_BASE_2S_STEPS: dict = {
    6: ((1, 2, 3, 4, 5), (1, 2, 3, 4, 5, 6)),
    7: ((6,), (6, 7)),
    8: ((1, 7), (1, 7, 8)),
    9: ((1, 2, 3, 4, 5, 6, 7, 8), (1, 2, 3, 4, 5, 6, 7, 8, 9)),
}

VARIANT_NO_EMPTY = "no-empty"
VARIANT_NO_FULL = "no-full"


@dataclass(frozen=True)
class SpectrumTarget:
    """A (ground size, system size) request with s >= 6 and s+1 <= t <= 2s."""

    s: int
    t: int

    def __post_init__(self):
        if self.s < 6:
            raise ValueError(f"ground size must be at least 6, got {self.s}")
        if not self.s + 1 <= self.t <= 2 * self.s:
            raise ValueError(
                f"size must satisfy s+1 <= t <= 2*s, got t={self.t} for s={self.s}"
            )


@dataclass(frozen=True)
class BuildTrace:
    """Derivation record of a constructed system.

    ``rule`` is one of "fixture", "base-2s", "disjoint-union", "extend",
    "complement"; ``detail`` holds the rule parameters and ``inputs`` the
    traces of the operand systems.  ``replay`` rebuilds the identical
    system from a trace.
    """

    rule: str
    detail: tuple = ()
    inputs: tuple = ()


def fixture_ids() -> tuple:
    """All (ground size, index) pairs present in the catalog."""
    return tuple(
        (s, i + 1) for s in sorted(_CATALOG) for i in range(len(_CATALOG[s]))
    )


@lru_cache(maxsize=None)
def fixture(s: int, index: int) -> SetSystem:
    """Return catalog system `index` (1-based) on ground size `s`."""
    table = _CATALOG.get(s)
    if table is None:
        raise ValueError(
            f"no catalog entries for ground size {s}; available sizes are 1..6"
        )
    if not 1 <= index <= len(table):
        raise ValueError(
            f"no catalog system {index} on ground size {s}; valid indices are 1..{len(table)}"
        )
    return SetSystem.from_sets(s, table[index - 1])


def disjoint_union(a: SetSystem, b: SetSystem) -> SetSystem:
    """Combine two systems on disjoint grounds, shifting b above a.

    Both inputs must be inclusion-minimal non-Bondy and avoid the empty
    set; the result is then inclusion-minimal non-Bondy of size
    |a| + |b|, slender whenever both inputs are, and its once-covered
    elements are the union of the inputs' (with b's shifted).
    """
    for label, operand in (("first", a), ("second", b)):
        if operand.has_empty_member:
            raise ValueError(f"{label} operand contains the empty set")
        if not is_inclusion_minimal_non_bondy(operand):
            raise ValueError(
                f"{label} operand is not inclusion-minimal non-Bondy"
            )
    shift = a.ground.size
    ground = GroundSet(shift + b.ground.size)
    masks = list(a.member_bits) + [bits << shift for bits in b.member_bits]
    return SetSystem.from_masks(ground, masks)


def extend(system: SetSystem, member: SubsetMask) -> SetSystem:
    """Adjoin a fresh top element w = s+1 and the single member `member | {w}`.

    `member` must already be in the system.  When the input is
    inclusion-minimal non-Bondy (resp. slender) on s elements, the
    result is so on s+1 elements, one member larger; the full set stays
    absent whenever it was absent and `member` is not the old full set.
    """
    if member not in system:
        raise ValueError(
            f"chosen member {list(member.elements)} is not in the system"
        )
    s = system.ground.size
    ground = GroundSet(s + 1)
    masks = list(system.member_bits) + [member.bits | 1 << s]
    return SetSystem.from_masks(ground, masks)


@lru_cache(maxsize=None)
def base_2s(s: int) -> SetSystem:
    """The stock slender system of size 2s on ground size s, for s in 5..9.

    Starts from the ground-5 system of all five cycle pairs {i, i+1} and
    the complements of the five cycle diagonals, then stacks two members
    per further element.  No empty set; sizes are exactly 2s.
    """
    if not 5 <= s <= 9:
        raise ValueError(f"base systems exist for ground sizes 5..9, got {s}")
    sets = list(_CATALOG[5][4])
    for k in range(6, s + 1):
        sets.extend(_BASE_2S_STEPS[k])
    return SetSystem.from_sets(s, sets)


def _split_parts(s: int) -> list:
    """Split s >= 5 into parts from {5, .., 9} with at most one part above 5."""
    if s <= 9:
        return [s]
    rem = s % 5
    if rem == 0:
        return [5] * (s // 5)
    t = 5 + rem
    return [5] * ((s - t) // 5) + [t]


def _slender_2s_trace(s: int, variant: str) -> BuildTrace:
    parts = _split_parts(s)
    trace = BuildTrace("base-2s", (parts[0],))
    for part in parts[1:]:
        trace = BuildTrace(
            "disjoint-union", (), (trace, BuildTrace("base-2s", (part,)))
        )
    if variant == VARIANT_NO_FULL:
        trace = BuildTrace("complement", (), (trace,))
    return trace


def slender_2s_trace(s: int, variant: str = VARIANT_NO_EMPTY) -> BuildTrace:
    """Trace of the size-2s slender system on ground size s >= 5."""
    if s < 5:
        raise ValueError(f"ground size must be at least 5, got {s}")
    _require_variant(variant)
    return _slender_2s_trace(s, variant)


def _require_variant(variant: str):
    if variant not in (VARIANT_NO_EMPTY, VARIANT_NO_FULL):
        raise ValueError(
            f"variant must be {VARIANT_NO_EMPTY!r} or {VARIANT_NO_FULL!r}, got {variant!r}"
        )


@lru_cache(maxsize=None)
def build_slender_2s(s: int, variant: str = VARIANT_NO_EMPTY) -> SetSystem:
    """A slender system of size exactly 2s on ground size s >= 5.

    The "no-empty" variant never contains the empty set; the "no-full"
    variant is its memberwise complement and never contains the full
    set.  Ground sizes 5..9 come straight from ``base_2s``; larger ones
    are disjoint unions of base systems.
    """
    return replay(slender_2s_trace(s, variant))


@lru_cache(maxsize=None)
def _slender_trace(s: int, t: int) -> BuildTrace:
    if s == 6:
        return BuildTrace("fixture", (6, t - 6))
    if t == 2 * s:
        return _slender_2s_trace(s, VARIANT_NO_FULL)
    child = _slender_trace(s - 1, t - 1)
    base = replay(child)
    member = min(base.members, key=lambda m: m.elements)
    return BuildTrace("extend", (member.bits,), (child,))


def slender_trace(target: SpectrumTarget) -> BuildTrace:
    """Trace of a slender system of size target.t on ground size target.s.

    Ground size 6 reads the catalog, size t = 2s takes the no-full
    variant of ``build_slender_2s``, and everything else extends the
    (s-1, t-1) system by its first member in element-tuple order (never
    the full set, which stays absent throughout).
    """
    return _slender_trace(target.s, target.t)


@lru_cache(maxsize=None)
def build_slender(target: SpectrumTarget) -> SetSystem:
    """A slender system of size target.t on ground size target.s, full set absent."""
    return replay(slender_trace(target))


def replay(trace: BuildTrace) -> SetSystem:
    """Rebuild the system a trace describes, bit for bit."""
    if trace.rule == "fixture":
        s, index = trace.detail
        return fixture(s, index)
    if trace.rule == "base-2s":
        (s,) = trace.detail
        return base_2s(s)
    if trace.rule == "disjoint-union":
        left, right = trace.inputs
        return disjoint_union(replay(left), replay(right))
    if trace.rule == "extend":
        (member_bits,) = trace.detail
        (child,) = trace.inputs
        return extend(replay(child), SubsetMask(member_bits))
    if trace.rule == "complement":
        (child,) = trace.inputs
        return complement_system(replay(child))
    raise ValueError(f"unknown trace rule {trace.rule!r}")


def build_maximal_bondy(s: int, w: int, avoiding: SetSystem) -> SetSystem:
    """A Bondy system of size exactly 2^(s-1) with witness w.

    `avoiding` lists subsets of the ground that avoid w; they are kept
    as they are, and every other subset avoiding w gets w added.  The
    result is Bondy, and every inclusion- or size-maximal Bondy system
    arises this way.
    """
    ground = GroundSet(s)
    if not 1 <= w <= s:
        raise ValueError(f"witness must lie in 1..{s}, got {w}")
    if avoiding.ground != ground:
        raise ValueError(
            f"avoiding-system ground size {avoiding.ground.size} does not match {s}"
        )
    wbit = 1 << (w - 1)
    for m in avoiding.member_bits:
        if m & wbit:
            raise ValueError(
                f"member {list(_element_tuple(m))} of the avoiding system contains {w}"
            )
    keep = avoiding._present
    rest = ground.full_mask ^ wbit
    masks = []
    sub = rest
    while True:
        masks.append(sub if sub in keep else sub | wbit)
        if sub == 0:
            break
        sub = (sub - 1) & rest
    return SetSystem.from_masks(ground, masks)
