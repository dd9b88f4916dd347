"""Complete subgroup lattices: enumeration, Hasse covers, and queries.

Member sets are kept both as sorted tuples and as integer bitmasks; the
mask makes containment and intersection one machine operation each.
Subgroup ids come from the canonical ordering (size ascending, then
lexicographic member list) so every downstream artifact is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import LatticeCapExceeded
from .groups import Group, closure_from_generators

DEFAULT_ORDER_LIMIT = 384
DEFAULT_COUNT_LIMIT = 20000


@dataclass(frozen=True)
class Subgroup:
    """A subgroup as an element set plus its position in the lattice order."""

    members: tuple[int, ...]
    mask: int
    id: int

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, g: int) -> bool:
        return bool(self.mask >> g & 1)


def _mask_of(members) -> int:
    mask = 0
    for g in members:
        mask |= 1 << g
    return mask


def _members_of(mask: int) -> tuple[int, ...]:
    out = []
    g = 0
    while mask:
        if mask & 1:
            out.append(g)
        mask >>= 1
        g += 1
    return tuple(out)


class SubgroupLattice:
    """All subgroups of a group with their Hasse cover arcs.

    ``covers`` holds triples (lower_id, upper_id, label) where lower is the
    *larger* group, upper the smaller one covering it from above in the
    drawing convention (arrows point toward smaller groups), and the label
    is the relative index |lower| / |upper|.
    """

    def __init__(self, group: Group, subgroups: list[Subgroup],
                 covers: list[tuple[int, int, int]]):
        self.group = group
        self.subgroups = subgroups
        self.covers = covers
        self._id_by_mask = {s.mask: s.id for s in subgroups}

    def __len__(self) -> int:
        return len(self.subgroups)

    def id_of(self, members) -> int:
        mask = members if isinstance(members, int) else _mask_of(members)
        return self._id_by_mask[mask]

    def contains(self, outer_id: int, inner_id: int) -> bool:
        inner = self.subgroups[inner_id].mask
        return inner & self.subgroups[outer_id].mask == inner

    @property
    def trivial_id(self) -> int:
        return 0

    @property
    def full_id(self) -> int:
        return len(self.subgroups) - 1

    def conjugate_subgroup(self, h_id: int, s: int) -> int:
        """Id of s^-1 H s."""
        G = self.group
        mask = 0
        s_inv = G.inverse[s]
        for g in self.subgroups[h_id].members:
            mask |= 1 << G.mul(G.mul(s_inv, g), s)
        return self._id_by_mask[mask]

    def conjugacy_class_of_subgroup(self, h_id: int) -> tuple[int, ...]:
        """Sorted ids of all conjugates of subgroup h_id."""
        return tuple(sorted({
            self.conjugate_subgroup(h_id, s) for s in self.group.elements()
        }))

    def is_cyclic_subgroup(self, h_id: int) -> bool:
        sub = self.subgroups[h_id]
        G = self.group
        return any(G.element_order(g) == sub.order for g in sub.members)


def all_subgroups(G: Group, order_limit: int = DEFAULT_ORDER_LIMIT,
                  count_limit: int = DEFAULT_COUNT_LIMIT) -> SubgroupLattice:
    """Enumerate every subgroup and the Hasse covers between them.

    Seeds with the cyclic subgroups and closes under join-with-a-cyclic;
    every subgroup is a join of cyclic subgroups, so the fixed point is
    complete without scanning the power set.
    """
    n = G.order
    if n > order_limit:
        raise LatticeCapExceeded(f"order {n} exceeds lattice cap {order_limit}")

    cyclic_masks: dict[int, int] = {}
    for g in range(n):
        members = tuple(_cyclic_members(G, g))
        cyclic_masks.setdefault(_mask_of(members), g)

    gens_by_mask: dict[int, tuple[int, ...]] = {
        mask: ((g,) if g else ()) for mask, g in cyclic_masks.items()
    }

    seeds = sorted(cyclic_masks)
    known = set(seeds)
    frontier = list(seeds)
    while frontier:
        mask = frontier.pop()
        for seed in seeds:
            if seed & ~mask == 0 or mask & ~seed == 0:
                continue  # one contains the other; join is the bigger one
            gens = gens_by_mask[mask] + gens_by_mask[seed]
            new_members = closure_from_generators(G, gens)
            new_mask = _mask_of(new_members)
            if new_mask not in known:
                if len(known) >= count_limit:
                    raise LatticeCapExceeded(
                        f"subgroup count exceeds lattice cap {count_limit}"
                    )
                known.add(new_mask)
                gens_by_mask[new_mask] = _minimized_gens(G, gens, new_members)
                frontier.append(new_mask)

    ordered = sorted(
        (_members_of(mask) for mask in known),
        key=lambda members: (len(members), members),
    )
    subgroups = [
        Subgroup(members, _mask_of(members), i) for i, members in enumerate(ordered)
    ]
    covers = _hasse_covers(subgroups)
    return SubgroupLattice(G, subgroups, covers)


def _cyclic_members(G: Group, g: int) -> list[int]:
    members = [0]
    x = g
    while x != 0:
        members.append(x)
        x = G.mul(x, g)
    return sorted(members)


def _minimized_gens(G: Group, gens, members) -> tuple[int, ...]:
    """Drop redundant generators so later joins stay cheap."""
    kept: list[int] = []
    target = len(members)
    for g in gens:
        if g not in kept:
            kept.append(g)
    for g in list(kept):
        trial = [x for x in kept if x != g]
        if trial and len(closure_from_generators(G, trial)) == target:
            kept = trial
    return tuple(kept)


def _hasse_covers(subgroups: list[Subgroup]) -> list[tuple[int, int, int]]:
    by_size: dict[int, list[Subgroup]] = {}
    for s in subgroups:
        by_size.setdefault(s.order, []).append(s)
    sizes = sorted(by_size)
    covers = []
    for upper in subgroups:  # upper = the smaller group in the pair
        above = upper.mask
        candidates = [
            low
            for size in sizes
            if size > upper.order and size % upper.order == 0
            for low in by_size[size]
            if above & ~low.mask == 0
        ]
        for low in candidates:
            if any(
                mid.order < low.order
                and above & ~mid.mask == 0
                and mid.mask & ~low.mask == 0
                for mid in candidates
            ):
                continue
            covers.append((low.id, upper.id, low.order // upper.order))
    covers.sort()
    return covers


# -- queries ---------------------------------------------------------------------

def is_normal(L: SubgroupLattice, H: Subgroup | int) -> bool:
    h = L.subgroups[H] if isinstance(H, int) else H
    G = L.group
    for s in G.elements():
        s_inv = G.inverse[s]
        for g in h.members:
            if not h.mask >> G.mul(G.mul(s_inv, g), s) & 1:
                return False
    return True


def normalizer(L: SubgroupLattice, H: Subgroup | int) -> Subgroup:
    h = L.subgroups[H] if isinstance(H, int) else H
    G = L.group
    members = []
    for s in G.elements():
        s_inv = G.inverse[s]
        mask = 0
        for g in h.members:
            mask |= 1 << G.mul(G.mul(s_inv, g), s)
        if mask == h.mask:
            members.append(s)
    return L.subgroups[L.id_of(members)]


def centralizer(G: Group, elems, L: SubgroupLattice | None = None) -> Subgroup:
    """Elements commuting with everything in ``elems``."""
    elems = list(elems)
    members = tuple(
        s for s in G.elements()
        if all(G.mul(s, g) == G.mul(g, s) for g in elems)
    )
    if L is not None:
        return L.subgroups[L.id_of(members)]
    return Subgroup(members, _mask_of(members), -1)


def center(G: Group, L: SubgroupLattice | None = None) -> Subgroup:
    return centralizer(G, G.elements(), L)


def commutator_subgroup(G: Group, L: SubgroupLattice | None = None) -> Subgroup:
    """Subgroup generated by all commutators a^-1 b^-1 a b."""
    comms = set()
    for a in G.elements():
        a_inv = G.inverse[a]
        for b in G.elements():
            comms.add(G.mul(G.mul(G.inverse[b], a_inv), G.mul(b, a)))
    members = tuple(closure_from_generators(G, sorted(comms)))
    if L is not None:
        return L.subgroups[L.id_of(members)]
    return Subgroup(members, _mask_of(members), -1)


def join(L: SubgroupLattice, A: Subgroup | int, B: Subgroup | int) -> Subgroup:
    a = L.subgroups[A] if isinstance(A, int) else A
    b = L.subgroups[B] if isinstance(B, int) else B
    if a.mask & ~b.mask == 0:
        return b
    if b.mask & ~a.mask == 0:
        return a
    members = closure_from_generators(L.group, a.members + b.members)
    return L.subgroups[L.id_of(members)]


def meet(L: SubgroupLattice, A: Subgroup | int, B: Subgroup | int) -> Subgroup:
    a = L.subgroups[A] if isinstance(A, int) else A
    b = L.subgroups[B] if isinstance(B, int) else B
    return L.subgroups[L.id_of(a.mask & b.mask)]


# -- derived facts used by the analysis module ------------------------------------

def normal_subgroup_ids(L: SubgroupLattice) -> tuple[int, ...]:
    return tuple(s.id for s in L.subgroups if is_normal(L, s))


def cyclic_subgroup_ids(L: SubgroupLattice) -> tuple[int, ...]:
    return tuple(s.id for s in L.subgroups if L.is_cyclic_subgroup(s.id))


def is_solvable(G: Group) -> bool:
    members = tuple(G.elements())
    while len(members) > 1:
        derived = _derived_members(G, members)
        if len(derived) == len(members):
            return False
        members = derived
    return True


def _derived_members(G: Group, members) -> tuple[int, ...]:
    comms = set()
    for a in members:
        a_inv = G.inverse[a]
        for b in members:
            comms.add(G.mul(G.mul(G.inverse[b], a_inv), G.mul(b, a)))
    return tuple(closure_from_generators(G, sorted(comms)))


def is_nilpotent(G: Group, L: SubgroupLattice) -> bool:
    """Nilpotent iff each Sylow subgroup is unique (hence normal)."""
    n = G.order
    factors = _prime_factors(n)
    for p in factors:
        pk = 1
        while n % (pk * p) == 0:
            pk *= p
        sylows = [s for s in L.subgroups if s.order == pk]
        if len(sylows) != 1:
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def minimal_generator_count(G: Group) -> int:
    """Smallest size of a generating set, by direct search."""
    n = G.order
    if n == 1:
        return 0
    if max(G.element_order(g) for g in range(n)) == n:
        return 1
    upper = len(G.generating_set())
    from itertools import combinations

    candidates = [g for g in range(1, n)]
    for r in range(2, upper):
        for combo in combinations(candidates, r):
            if len(closure_from_generators(G, combo)) == n:
                return r
    return upper


# -- exports ----------------------------------------------------------------------

def lattice_to_dot(L: SubgroupLattice) -> str:
    lines = ["digraph subgroups {"]
    for s in L.subgroups:
        lines.append(f'  H{s.id} [label="H{s.id} (order {s.order})"];')
    for low, up, label in sorted(L.covers):
        lines.append(f'  H{low} -> H{up} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def lattice_to_json(L: SubgroupLattice) -> dict:
    return {
        "group": L.group.name,
        "subgroups": [
            {
                "id": s.id,
                "order": s.order,
                "members": list(s.members),
                "member_names": [L.group.names[g] for g in s.members],
            }
            for s in L.subgroups
        ],
        "covers": [
            {"lower": low, "upper": up, "index": label}
            for low, up, label in sorted(L.covers)
        ],
    }
