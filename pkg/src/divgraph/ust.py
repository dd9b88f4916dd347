"""Layered orbit digraphs: one splitting-type component per division.

For a division with representative phi, the cyclic group D = <phi> acts on
the right of every coset space H\\G.  Each D-orbit is a vertex (a "prime" of
the field fixed by H), its length is the inertial degree over the base
prime, and orbits in cover-adjacent coset spaces are linked through the
projection Ka_i b_j -> H b_j with the relative degree as the arc label.
The disjoint union over all divisions is the group's division graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .divisions import Division, divisions
from .errors import InternalInvariantError
from .groups import Group
from .lattice import SubgroupLattice, all_subgroups


@dataclass(frozen=True)
class CosetSpace:
    subgroup_id: int
    cosets: tuple[tuple[int, ...], ...]
    coset_of: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.cosets)


@dataclass(frozen=True)
class Orbit:
    cosets: tuple[int, ...]
    length: int


class Arc(NamedTuple):
    lower: tuple[int, int]  # (subgroup_id, orbit_idx) in the larger group's cluster
    upper: tuple[int, int]  # (subgroup_id, orbit_idx) in the smaller group's cluster
    label: int


@dataclass(frozen=True)
class USTComponent:
    division_rep: int
    clusters: dict[int, tuple[Orbit, ...]]
    arcs: tuple[Arc, ...]

    def cluster_sizes(self) -> dict[int, int]:
        return {sid: len(orbits) for sid, orbits in self.clusters.items()}

    def label_multiset(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for arc in self.arcs:
            out[arc.label] = out.get(arc.label, 0) + 1
        return out

    def vertex_count(self) -> int:
        return sum(len(orbits) for orbits in self.clusters.values())


@dataclass(frozen=True)
class DivisionGraph:
    group_name: str
    components: tuple[tuple[Division, USTComponent], ...]


def right_cosets(G: Group, L: SubgroupLattice, subgroup_id: int) -> CosetSpace:
    """Right cosets Hg, ordered by minimal element (so coset 0 contains 0)."""
    members = L.subgroups[subgroup_id].members
    coset_of = [-1] * G.order
    cosets = []
    for g in range(G.order):
        if coset_of[g] >= 0:
            continue
        idx = len(cosets)
        coset = sorted(G.mul(h, g) for h in members)
        for x in coset:
            coset_of[x] = idx
        cosets.append(tuple(coset))
    return CosetSpace(subgroup_id, tuple(cosets), tuple(coset_of))


def orbit_decomposition(cs: CosetSpace, G: Group, phi: int) -> list[Orbit]:
    """Orbits of the right action (Hg) . phi = H(g phi), by minimal coset index."""
    act = [cs.coset_of[G.mul(coset[0], phi)] for coset in cs.cosets]
    seen = [False] * len(cs.cosets)
    orbits = []
    for start in range(len(cs.cosets)):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = True
        c = act[start]
        while c != start:
            cycle.append(c)
            seen[c] = True
            c = act[c]
        orbits.append(Orbit(tuple(sorted(cycle)), len(cycle)))
    return orbits


def ust_component(G: Group, L: SubgroupLattice, d: Division,
                  representative: int | None = None) -> USTComponent:
    """One splitting-type component: clusters of D-orbits plus labeled arcs.

    The component is the same (as a colored labeled digraph) for every
    representative of the division; ``representative`` exists so tests can
    assert exactly that.
    """
    phi = d.representative if representative is None else representative
    if phi not in d.members:
        raise ValueError(f"element {phi} is not in division [{d.representative}]")

    spaces = {s.id: right_cosets(G, L, s.id) for s in L.subgroups}
    clusters: dict[int, tuple[Orbit, ...]] = {}
    orbit_of_coset: dict[int, list[int]] = {}
    for sid, cs in spaces.items():
        orbits = orbit_decomposition(cs, G, phi)
        clusters[sid] = tuple(orbits)
        lookup = [-1] * len(cs.cosets)
        for oidx, orbit in enumerate(orbits):
            for c in orbit.cosets:
                lookup[c] = oidx
        orbit_of_coset[sid] = lookup

    arcs = []
    for low_id, up_id, index in L.covers:
        cs_low = spaces[low_id]
        cs_up = spaces[up_id]
        low_orbits = clusters[low_id]
        sums = [0] * len(low_orbits)
        for up_idx, up_orbit in enumerate(clusters[up_id]):
            targets = {
                orbit_of_coset[low_id][cs_low.coset_of[cs_up.cosets[c][0]]]
                for c in up_orbit.cosets
            }
            if len(targets) != 1:
                raise InternalInvariantError(
                    f"orbit {up_idx} of H{up_id} projects onto several orbits of H{low_id}"
                )
            low_idx = targets.pop()
            low_len = low_orbits[low_idx].length
            if up_orbit.length % low_len:
                raise InternalInvariantError(
                    f"non-integer relative degree {up_orbit.length}/{low_len}"
                )
            label = up_orbit.length // low_len
            sums[low_idx] += label
            arcs.append(Arc((low_id, low_idx), (up_id, up_idx), label))
        if any(s != index for s in sums):
            raise InternalInvariantError(
                f"arc labels from H{low_id} to H{up_id} sum to {sums}, "
                f"expected the relative index {index}"
            )

    base = clusters[L.full_id]
    if len(base) != 1 or base[0].length != 1:
        raise InternalInvariantError("base cluster must be a single length-1 orbit")
    return USTComponent(phi, clusters, tuple(sorted(arcs)))


def division_graph(G: Group, L: SubgroupLattice | None = None,
                   divs: list[Division] | None = None) -> DivisionGraph:
    """One component per division, ordered by division representative."""
    if L is None:
        L = all_subgroups(G)
    if divs is None:
        divs = divisions(G)
    components = tuple(
        (d, ust_component(G, L, d)) for d in sorted(divs, key=lambda d: d.representative)
    )
    return DivisionGraph(G.name, components)


# -- Lagarias equivalence check ---------------------------------------------------


@dataclass(frozen=True)
class LagariasReport:
    group_name: str
    elements: int
    subgroups: int
    violations: tuple[tuple[str, str, str], ...]

    @property
    def passed(self) -> bool:
        return not self.violations


def verify_lagarias(G: Group, L: SubgroupLattice | None = None,
                    divs: list[Division] | None = None) -> LagariasReport:
    """Check: same division <=> same orbit-length multisets on every H\\G.

    Each element gets a signature listing, per subgroup, the sorted orbit
    lengths of its cyclic group acting on the right cosets; the signature
    partition must match the division partition exactly.
    """
    if L is None:
        L = all_subgroups(G)
    if divs is None:
        divs = divisions(G)

    spaces = [right_cosets(G, L, s.id) for s in L.subgroups]
    signature = {}
    for g in G.elements():
        signature[g] = tuple(
            tuple(sorted(o.length for o in orbit_decomposition(cs, G, g)))
            for cs in spaces
        )

    division_id = {}
    for idx, d in enumerate(divs):
        for g in d.members:
            division_id[g] = idx

    violations = []
    by_signature: dict[tuple, int] = {}
    for g in G.elements():
        sig = signature[g]
        if sig in by_signature:
            other = by_signature[sig]
            if division_id[other] != division_id[g]:
                violations.append((
                    G.names[other], G.names[g],
                    "same splitting type but different divisions",
                ))
        else:
            by_signature[sig] = g
    for d in divs:
        rep_sig = signature[d.representative]
        for g in d.members:
            if signature[g] != rep_sig:
                violations.append((
                    G.names[d.representative], G.names[g],
                    "same division but different splitting types",
                ))
    return LagariasReport(G.name, G.order, len(L), tuple(violations))


# -- exports ----------------------------------------------------------------------


def division_graph_to_dot(dg: DivisionGraph) -> str:
    """DOT rendering: one cluster-ranked subgraph per component.

    Vertices are named d<rep>/H<id>/o<k>; the color attribute is the
    subgroup id and edge labels are the relative degrees.
    """
    lines = ["digraph division_graph {"]
    for ci, (division, comp) in enumerate(dg.components):
        rep = division.representative
        lines.append(f"  subgraph cluster_{ci} {{")
        lines.append(f'    label="division [{rep}]";')
        for sid in sorted(comp.clusters):
            names = []
            for k, orbit in enumerate(comp.clusters[sid]):
                names.append(f'"d{rep}/H{sid}/o{k}"')
                lines.append(
                    f'    "d{rep}/H{sid}/o{k}" [color="{sid}" length="{orbit.length}"];'
                )
            lines.append(f"    {{ rank=same; {' '.join(names)} }}")
        for arc in sorted(comp.arcs):
            (ls, lo), (us, uo) = arc.lower, arc.upper
            lines.append(
                f'    "d{rep}/H{ls}/o{lo}" -> "d{rep}/H{us}/o{uo}" [label="{arc.label}"];'
            )
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def division_graph_to_json(dg: DivisionGraph, group: Group | None = None) -> dict:
    names = group.names if group is not None else None
    components = []
    for division, comp in dg.components:
        components.append({
            "division": {
                "representative": division.representative,
                "representative_name": (
                    names[division.representative] if names else None
                ),
                "members": list(division.members),
                "member_names": (
                    [names[g] for g in division.members] if names else None
                ),
                "united_classes": list(division.classes),
                "common_order": division.common_order,
            },
            "clusters": {
                str(sid): [
                    {"cosets": list(o.cosets), "length": o.length}
                    for o in comp.clusters[sid]
                ]
                for sid in sorted(comp.clusters)
            },
            "arcs": [
                {
                    "lower": list(arc.lower),
                    "upper": list(arc.upper),
                    "label": arc.label,
                }
                for arc in sorted(comp.arcs)
            ],
        })
    return {
        "schema": "divgraph.division_graph/1",
        "group": dg.group_name,
        "components": components,
    }
