"""Shared test helpers: naive oracles and reference enumerators.

Everything here recomputes results from the definitions with plain
set/loop code, deliberately ignoring the package's bit tricks, so the
implementation and the oracle can disagree only if one of them is
wrong.
"""

from itertools import combinations, permutations

from bondy import GroundSet, SetSystem

# ---------------------------------------------------------------------------
# naive operator oracles over plain frozensets


def member_sets(system: SetSystem):
    return [frozenset(entry) for entry in system.sets()]


def naive_covered(system: SetSystem) -> set:
    sets_ = member_sets(system)
    present = set(sets_)
    out = set()
    for a in range(1, system.ground.size + 1):
        for entry in sets_:
            if a not in entry and frozenset(entry | {a}) in present:
                out.add(a)
                break
    return out


def naive_covered_once(system: SetSystem) -> set:
    sets_ = member_sets(system)
    present = set(sets_)
    out = set()
    for a in range(1, system.ground.size + 1):
        count = sum(
            1
            for entry in sets_
            if a not in entry and frozenset(entry | {a}) in present
        )
        if count == 1:
            out.add(a)
    return out


def naive_adjacent(system: SetSystem) -> set:
    sets_ = member_sets(system)
    return {
        entry
        for entry in sets_
        if any(len(entry ^ other) == 1 for other in sets_ if other != entry)
    }


def naive_is_bondy(system: SetSystem) -> bool:
    # literal definition: a witness element a belongs to every A with
    # both A and A | {a} present
    sets_ = member_sets(system)
    present = set(sets_)
    for a in range(1, system.ground.size + 1):
        if all(
            a in entry or frozenset(entry | {a}) not in present for entry in sets_
        ):
            return True
    return False


def naive_inclusion_minimal(system: SetSystem) -> bool:
    """Quantifies over every proper subsystem; only usable for small systems."""
    if naive_is_bondy(system):
        return False
    entries = system.sets()
    ground = system.ground.size
    for k in range(len(entries)):
        for combo in combinations(entries, k):
            if not naive_is_bondy(SetSystem.from_sets(ground, combo)):
                return False
    return True


def naive_is_slender(system: SetSystem) -> bool:
    full = set(range(1, system.ground.size + 1))
    return (
        naive_adjacent(system) == set(member_sets(system))
        and naive_covered_once(system) == full
    )


# ---------------------------------------------------------------------------
# reference canonicalization and enumeration


def ref_canon(member_bits, s: int) -> tuple:
    best = None
    for perm in permutations(range(s)):
        relabeled = sorted(
            sum(1 << perm[i] for i in range(s) if m >> i & 1) for m in member_bits
        )
        if best is None or relabeled < best:
            best = relabeled
    return tuple(best)


def _covered_mask(members, s: int) -> int:
    mset = set(members)
    cov = 0
    for a in members:
        for i in range(s):
            if not a >> i & 1 and a | 1 << i in mset:
                cov |= 1 << i
    return cov


def _is_minimal_masks(members, s: int) -> bool:
    full = (1 << s) - 1
    if _covered_mask(members, s) != full:
        return False
    return all(
        _covered_mask([m for m in members if m != r], s) != full for r in members
    )


def brute_minimal_classes(s: int) -> dict:
    """Size -> canonical classes, by scanning every subset of the power set."""
    n = 1 << s
    out = {}
    for code in range(1 << n):
        members = [m for m in range(n) if code >> m & 1]
        if _is_minimal_masks(members, s):
            out.setdefault(len(members), set()).add(ref_canon(members, s))
    return out


def reference_enumerate(s: int, prunes=frozenset()) -> dict:
    """The search scheme with each prune rule individually switchable.

    With no prunes this is a plain depth-first scan over ascending
    member masks that stops once every element is covered and applies
    the single-deletion filter; prunes: "cap" (size limit 2s),
    "deadline" (drop branches whose unsatisfied member can no longer
    get a neighbor), "coverage" (drop branches whose uncovered element
    can no longer get a covering pair), "seeds" (first/second member
    symmetry restrictions).  Returns size -> set of canonical tuples.
    """
    full = (1 << s) - 1
    results = {}

    def max_neighbor(m):
        top = full & ~m
        return m | 1 << (top.bit_length() - 1) if top else -1

    def grow(members, last):
        cov = _covered_mask(members, s)
        if members and cov == full:
            if _is_minimal_masks(members, s):
                results.setdefault(len(members), set()).add(
                    ref_canon(members, s)
                )
            return
        if "cap" in prunes and len(members) >= 2 * s:
            return
        hi = full
        if "deadline" in prunes:
            for a in members:
                if not any(
                    bin(a ^ b).count("1") == 1 for b in members if b != a
                ):
                    mn = max_neighbor(a)
                    if mn <= last:
                        return
                    hi = min(hi, mn)
        if "coverage" in prunes:
            for i in range(s):
                if not cov >> i & 1 and last >= full ^ 1 << i:
                    cands = [
                        a | 1 << i
                        for a in members
                        if not a >> i & 1 and a | 1 << i > last
                    ]
                    if not cands:
                        return
                    hi = min(hi, max(cands))
        for m in range(last + 1, hi + 1):
            if "seeds" in prunes and members:
                if bin(m).count("1") < bin(members[0]).count("1"):
                    continue
                if len(members) == 1 and not _block_minimal(
                    m, bin(members[0]).count("1")
                ):
                    continue
            if "seeds" in prunes and not members and m != (1 << m.bit_length()) - 1:
                continue
            grow(members + [m], m)

    grow([], -1)
    return results


def _block_minimal(m, k):
    low = m & (1 << k) - 1
    high = m >> k
    return (
        low == (1 << bin(low).count("1")) - 1
        and high == (1 << bin(high).count("1")) - 1
    )


# ---------------------------------------------------------------------------
# stock systems and generators


def empty_plus_singletons(s: int) -> SetSystem:
    """The size s+1 non-Bondy system of the empty set and all singletons."""
    return SetSystem.from_sets(s, [()] + [(i,) for i in range(1, s + 1)])


def forked_chains_system() -> SetSystem:
    """Size-10 system on 7 elements: two singleton-rooted chains that
    share element 5, which therefore gets covered twice.  It is
    inclusion-minimal but not slender."""
    return SetSystem.from_sets(
        7,
        [
            (1,), (2,), (3,), (4,),
            (1, 2), (3, 4),
            (1, 2, 5), (3, 4, 5),
            (1, 2, 5, 6), (3, 4, 5, 7),
        ],
    )


def random_system(rng, s: int, size=None) -> SetSystem:
    if size is None:
        size = rng.randrange(0, min(1 << s, 3 * s) + 1)
    masks = rng.sample(range(1 << s), size)
    return SetSystem.from_masks(GroundSet(s), masks)


def all_systems(s: int):
    """Every system on ground size s, all 2^(2^s) of them."""
    n = 1 << s
    ground = GroundSet(s)
    for code in range(1 << n):
        yield SetSystem.from_masks(ground, [m for m in range(n) if code >> m & 1])
