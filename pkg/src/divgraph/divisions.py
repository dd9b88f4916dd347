"""Conjugacy classes and divisions.

Two elements share a division when the cyclic subgroups they generate are
conjugate; equivalently one is conjugate to a power of the other with the
exponent coprime to its order.  Divisions are unions of conjugacy classes,
and classes can be read off a Cayley table two independent ways: by direct
conjugation orbits and by Golomb's diagonal-symmetry rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import InternalInvariantError, NotEvenClass, NotSplitClass, TypeMismatch
from .groups import Group
from .perms import Permutation, parity_of_type


@dataclass(frozen=True)
class ConjugacyClass:
    representative: int
    members: tuple[int, ...]


@dataclass(frozen=True)
class Division:
    representative: int
    members: tuple[int, ...]
    classes: tuple[int, ...]  # ids into the conjugacy_classes list
    common_order: int


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def conjugacy_classes(G: Group) -> list[ConjugacyClass]:
    """Conjugation orbits, each represented by its minimal element.

    Orbits are walked under conjugation by a generating set only, which is
    enough because conjugation by a product factors through the generators.
    """
    gens = G.generating_set() or (0,)
    assigned = [False] * G.order
    classes = []
    for rep in G.elements():
        if assigned[rep]:
            continue
        orbit = [rep]
        assigned[rep] = True
        head = 0
        while head < len(orbit):
            x = orbit[head]
            head += 1
            for s in gens:
                y = G.conjugate(x, s)
                if not assigned[y]:
                    assigned[y] = True
                    orbit.append(y)
        classes.append(ConjugacyClass(rep, tuple(sorted(orbit))))
    return classes


def golomb_classes(G: Group) -> list[ConjugacyClass]:
    """Conjugacy classes from table symmetry: ab and ba are always conjugate,
    and every conjugate pair arises this way.

    Also verifies the counting rule: if c appears k times as both ab and ba
    for the same (a, b), its class has exactly n/k elements.
    """
    n = G.order
    uf = _UnionFind(n)
    diag_count = [0] * n
    for a in range(n):
        for b in range(n):
            ab = G.mul(a, b)
            ba = G.mul(b, a)
            uf.union(ab, ba)
            if ab == ba:
                diag_count[ab] += 1
    groups: dict[int, list[int]] = {}
    for g in range(n):
        groups.setdefault(uf.find(g), []).append(g)
    classes = [
        ConjugacyClass(min(members), tuple(sorted(members)))
        for members in groups.values()
    ]
    classes.sort(key=lambda c: c.representative)
    for c in classes:
        k = diag_count[c.representative]
        if k == 0 or n % k or n // k != len(c.members):
            raise InternalInvariantError(
                f"size rule n/k failed for class of {c.representative}: "
                f"k={k}, class size {len(c.members)}"
            )
    return classes


def symmetric_pair_count(G: Group, c: int, d: int) -> int:
    """Number of cells (a, b) with ab = c and ba = d."""
    n = G.order
    return sum(
        1
        for a in range(n)
        for b in range(n)
        if G.mul(a, b) == c and G.mul(b, a) == d
    )


def divisions(G: Group, classes: list[ConjugacyClass] | None = None) -> list[Division]:
    """Divisions as fused conjugacy classes.

    For each class representative phi, the classes of phi^k over all k
    coprime to ord(phi) are merged; the fusion runs over whole classes via a
    union-find keyed by class ids.
    """
    if classes is None:
        classes = conjugacy_classes(G)
    class_of = [0] * G.order
    for idx, c in enumerate(classes):
        for g in c.members:
            class_of[g] = idx
    uf = _UnionFind(len(classes))
    for idx, c in enumerate(classes):
        phi = c.representative
        order = G.element_order(phi)
        x = phi
        for k in range(1, order):
            if gcd(k, order) == 1:
                uf.union(idx, class_of[x])
            x = G.mul(x, phi)
    grouped: dict[int, list[int]] = {}
    for idx in range(len(classes)):
        grouped.setdefault(uf.find(idx), []).append(idx)
    out = []
    for class_ids in grouped.values():
        members = sorted(g for idx in class_ids for g in classes[idx].members)
        rep = members[0]
        orders = {G.element_order(g) for g in members}
        if len(orders) != 1:
            raise InternalInvariantError(
                f"division of {rep} mixes element orders {orders}"
            )
        out.append(Division(rep, tuple(members), tuple(sorted(class_ids)), orders.pop()))
    out.sort(key=lambda d: d.representative)
    return out


def division_of(G: Group, g: int, divs: list[Division] | None = None) -> Division:
    """The unique division containing g."""
    if divs is None:
        divs = divisions(G)
    for d in divs:
        if g in d.members:
            return d
    raise ValueError(f"element {g} outside 0..{G.order - 1}")


# -- alternating-group division theory ----------------------------------------


def _check_partition(t) -> tuple[int, ...]:
    t = tuple(int(x) for x in t)
    if not t or any(x < 1 for x in t):
        raise ValueError(f"not a partition of a positive integer: {t}")
    if list(t) != sorted(t, reverse=True):
        raise ValueError(f"partition must be weakly decreasing: {t}")
    return t


def class_splits_in_alternating(t) -> bool:
    """Does the even class with cycle type t split into two A_n classes?

    True exactly when the cycle lengths (fixed points included) are odd and
    pairwise distinct.
    """
    t = _check_partition(t)
    if parity_of_type(t) != 0:
        raise NotEvenClass(f"cycle type {t} describes odd permutations")
    return all(x % 2 == 1 for x in t) and len(set(t)) == len(t)


def split_class_inverse_closed(t) -> bool:
    """Are the two split classes each closed under inverses?

    True exactly when the number of cycle lengths congruent to 3 mod 4 is
    even; otherwise every inverse pair straddles the two classes.
    """
    t = _check_partition(t)
    if not class_splits_in_alternating(t):
        raise NotSplitClass(f"cycle type {t} does not split")
    return sum(1 for x in t if x % 4 == 3) % 2 == 0


def ambivalent_alternating(n: int) -> bool:
    """Is every element of A_n conjugate (in A_n) to its inverse?"""
    if n < 2:
        raise ValueError(f"alternating ambivalence needs n >= 2, got {n}")
    return n in (2, 5, 6, 10, 14)


def standard_conjugator(p: Permutation, q: Permutation) -> Permutation:
    """Some s with s^-1 p s = q, built by aligning cycles sorted by
    (length, minimal point)."""
    if p.cycle_type() != q.cycle_type():
        raise TypeMismatch(f"{p} and {q} have different cycle types")
    key = lambda c: (len(c), c[0])
    p_cycles = sorted(p.cycles(include_fixed=True), key=key)
    q_cycles = sorted(q.cycles(include_fixed=True), key=key)
    images = [0] * p.degree
    for pc, qc in zip(p_cycles, q_cycles):
        for a, b in zip(pc, qc):
            images[a - 1] = b - 1
    s = Permutation(images)
    if s.inverse() * p * s != q:
        raise InternalInvariantError("constructed conjugator failed to conjugate")
    return s


def same_class_in_alternating(p: Permutation, q: Permutation, n: int) -> bool:
    """Do p and q (even, same cycle type) lie in the same A_n class?

    For non-split types the S_n class does not break apart, so the answer is
    yes.  For split types any conjugator has a well-defined parity, so the
    canonical one decides.
    """
    if p.degree != n or q.degree != n:
        raise TypeMismatch(f"expected degree {n}, got {p.degree} and {q.degree}")
    if not (p.is_even() and q.is_even()):
        raise NotEvenClass("both permutations must be even")
    if p.cycle_type() != q.cycle_type():
        raise TypeMismatch(f"cycle types differ: {p.cycle_type()} vs {q.cycle_type()}")
    if not class_splits_in_alternating(p.cycle_type()):
        return True
    return standard_conjugator(p, q).is_even()


def canonical_permutation_of_type(t, n: int) -> Permutation:
    """The permutation with cycle type t using the points 1..n in order."""
    t = _check_partition(t)
    if sum(t) != n:
        raise ValueError(f"{t} is not a partition of {n}")
    cycles = []
    next_point = 1
    for length in t:
        cycles.append(tuple(range(next_point, next_point + length)))
        next_point += length
    return Permutation.from_cycles(cycles, n)


def _even_partitions(n: int):
    def parts(remaining, maximum):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, maximum), 0, -1):
            for rest in parts(remaining - first, first):
                yield (first,) + rest

    for t in parts(n, n):
        if parity_of_type(t) == 0:
            yield t


def alternating_divisions_by_type(n: int, cap: int = 20) -> dict[tuple[int, ...], int]:
    """For each even cycle type of degree n, the number of A_n divisions it
    carries (1 or 2), decided from the splitting and conjugator-parity rules
    rather than looked up.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if n > cap:
        raise ValueError(f"degree {n} exceeds cap {cap}")
    out: dict[tuple[int, ...], int] = {}
    for t in _even_partitions(n):
        out[t] = _divisions_within_type(t, n)
    return out


def _divisions_within_type(t, n: int) -> int:
    if not class_splits_in_alternating(t):
        return 1
    if not split_class_inverse_closed(t):
        # inverse pairs straddle the two classes, and [phi] contains phi^-1
        return 1
    pi = canonical_permutation_of_type(t, n)
    order = pi.order()
    power = pi
    for k in range(2, order):
        power = power * pi
        if gcd(k, order) == 1 and not same_class_in_alternating(pi, power, n):
            return 1
    return 2
