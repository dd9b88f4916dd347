"""Reading group structure back out of a division graph, and comparing graphs.

Everything in the ``recover_*`` family treats the graph as opaque: colors
are just cluster keys, and all conclusions come from orbit lengths, arc
labels, and the cover structure between color clusters.  The certificate
canonicalizes a whole division graph up to component permutation and one
global color bijection, which is the announced equivalence for deciding
whether two groups have the same invariant.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .canon import DEFAULT_BUDGET, canonical_form
from .divisions import divisions
from .errors import InternalInvariantError, MalformedGraph
from .groups import (
    Group,
    are_isomorphic,
    quotient_group,
    subgroup_as_group,
)
from .lattice import (
    SubgroupLattice,
    all_subgroups,
    center,
    commutator_subgroup,
    cyclic_subgroup_ids,
    is_nilpotent,
    is_normal,
    is_solvable,
    minimal_generator_count,
    normal_subgroup_ids,
)
from .ust import DivisionGraph, USTComponent, division_graph


# -- graph-only extraction ----------------------------------------------------


def _identity_component(dg: DivisionGraph) -> USTComponent:
    all_one = [
        comp for _, comp in dg.components
        if all(arc.label == 1 for arc in comp.arcs)
    ]
    if len(all_one) != 1:
        raise MalformedGraph(
            f"expected exactly one all-label-1 component, found {len(all_one)}"
        )
    return all_one[0]


def recover_order(dg: DivisionGraph) -> int:
    """|G|: the size of the top cluster where the base prime splits completely."""
    comp = _identity_component(dg)
    return max(len(orbits) for orbits in comp.clusters.values())


@dataclass(frozen=True)
class LatticeSketch:
    """The subgroup graph as recovered from a division graph alone."""

    colors: tuple[int, ...]
    covers: tuple[tuple[int, int, int], ...]  # (lower color, upper color, index)
    order_of: dict[int, int]

    def contains(self, outer: int, inner: int) -> bool:
        """inner <= outer as subgroups (outer is the larger one)."""
        return inner in self._reachable()[outer]

    def _reachable(self) -> dict[int, frozenset]:
        cache = getattr(self, "_reach_cache", None)
        if cache is None:
            succ: dict[int, list[int]] = {c: [] for c in self.colors}
            for low, up, _ in self.covers:
                succ[low].append(up)
            cache = {}
            for c in sorted(self.colors, key=lambda c: self.order_of[c]):
                reach = {c}
                for nxt in succ[c]:
                    reach |= cache[nxt]
                cache[c] = frozenset(reach)
            object.__setattr__(self, "_reach_cache", cache)
        return cache

    @property
    def full_color(self) -> int:
        return max(self.colors, key=lambda c: self.order_of[c])

    @property
    def trivial_color(self) -> int:
        return min(self.colors, key=lambda c: self.order_of[c])

    def join(self, chosen) -> int:
        """Smallest color containing every color in ``chosen``."""
        reach = self._reachable()
        above = [
            c for c in self.colors
            if all(inner in reach[c] for inner in chosen)
        ]
        return min(above, key=lambda c: self.order_of[c])

    def meet(self, a: int, b: int) -> int:
        reach = self._reachable()
        below = [c for c in self.colors if c in reach[a] and c in reach[b]]
        return max(below, key=lambda c: self.order_of[c])


def recover_lattice(dg: DivisionGraph) -> LatticeSketch:
    """Colors plus cover arcs with indices, recovered from arc labels.

    For a cover pair the relative index is the label sum over the arcs
    leaving any one lower-cluster vertex; every vertex and every component
    must agree, which doubles as a structural sanity check.
    """
    colors = None
    for _, comp in dg.components:
        comp_colors = tuple(sorted(comp.clusters))
        if colors is None:
            colors = comp_colors
        elif colors != comp_colors:
            raise MalformedGraph("components disagree on the color set")
    if not colors:
        raise MalformedGraph("empty division graph")

    index_of_pair: dict[tuple[int, int], int] = {}
    for _, comp in dg.components:
        sums: dict[tuple[int, int, int], int] = {}
        for arc in comp.arcs:
            (low_color, low_idx), (up_color, _), label = arc
            key = (low_color, up_color, low_idx)
            sums[key] = sums.get(key, 0) + label
        per_pair: dict[tuple[int, int], set[int]] = {}
        for (low_color, up_color, _), total in sums.items():
            per_pair.setdefault((low_color, up_color), set()).add(total)
        for pair, totals in per_pair.items():
            if len(totals) != 1:
                raise MalformedGraph(f"inconsistent label sums {totals} for pair {pair}")
            total = totals.pop()
            if index_of_pair.setdefault(pair, total) != total:
                raise MalformedGraph(f"components disagree on the index of {pair}")

    identity = _identity_component(dg)
    total_order = max(len(orbits) for orbits in identity.clusters.values())
    order_of = {}
    for color in colors:
        cosets = len(identity.clusters[color])
        if total_order % cosets:
            raise MalformedGraph(f"cluster size {cosets} does not divide {total_order}")
        order_of[color] = total_order // cosets
    covers = tuple(sorted(
        (low, up, idx) for (low, up), idx in index_of_pair.items()
    ))
    return LatticeSketch(colors, covers, order_of)


def recover_normal_colors(dg: DivisionGraph) -> frozenset[int]:
    """Colors whose orbit lengths are constant within every component."""
    colors = sorted({c for _, comp in dg.components for c in comp.clusters})
    normal = []
    for color in colors:
        if all(
            len({o.length for o in comp.clusters[color]}) == 1
            for _, comp in dg.components
        ):
            normal.append(color)
    return frozenset(normal)


def recover_cyclic_colors(dg: DivisionGraph,
                          sketch: LatticeSketch | None = None):
    """Cyclic colors and, per component, the conjugate family they form.

    In the component of a division, the minimal colors containing a
    length-1 orbit (a prime with inertial degree one) are exactly the
    conjugates of the decomposition group of that division.
    """
    if sketch is None:
        sketch = recover_lattice(dg)
    families = []
    for _, comp in dg.components:
        fixed = [
            color for color, orbits in comp.clusters.items()
            if any(o.length == 1 for o in orbits)
        ]
        family = tuple(sorted(
            c for c in fixed
            if not any(d != c and sketch.contains(c, d) for d in fixed)
        ))
        families.append(family)
    cyclic = frozenset(c for family in families for c in family)
    return cyclic, families


# -- graph-side derivations used in the analysis report -------------------------


def _abelian_from_sketch(sketch: LatticeSketch, normal_colors, cyclic_colors):
    """Direct-product-of-normal-cyclics test; returns factor orders or None."""
    total = sketch.order_of[sketch.full_color]
    trivial = sketch.trivial_color
    candidates = sorted(
        (c for c in sketch.colors
         if c in normal_colors and c in cyclic_colors and sketch.order_of[c] > 1),
        key=lambda c: -sketch.order_of[c],
    )

    def search(remaining: int, start: int, chosen: list[int]):
        if remaining == 1:
            return list(chosen)
        for i in range(start, len(candidates)):
            c = candidates[i]
            order = sketch.order_of[c]
            if remaining % order:
                continue
            if chosen and sketch.meet(sketch.join(chosen), c) != trivial:
                continue
            chosen.append(c)
            found = search(remaining // order, i + 1, chosen)
            if found is not None:
                return found
            chosen.pop()
        return None

    family = search(total, 0, [])
    if family is None:
        return None
    return sorted(sketch.order_of[c] for c in family)


def invariant_factors_from_cyclic_orders(orders) -> tuple[int, ...]:
    """Normalize a multiset of cyclic factor orders to invariant factors."""
    primary: dict[int, list[int]] = {}
    for order in orders:
        n, d = order, 2
        while d * d <= n:
            if n % d == 0:
                e = 0
                while n % d == 0:
                    n //= d
                    e += 1
                primary.setdefault(d, []).append(e)
            d += 1
        if n > 1:
            primary.setdefault(n, []).append(1)
    for exps in primary.values():
        exps.sort(reverse=True)
    factors = []
    while any(primary.values()):
        f = 1
        for p, exps in primary.items():
            if exps:
                f *= p ** exps.pop(0)
        factors.append(f)
    return tuple(sorted(factors))


def invariant_factors_direct(G: Group) -> tuple[int, ...] | None:
    """Invariant factors of an abelian group from element-order counts.

    For each prime p, #{g : order(g) divides p^j} = p^(sum_i min(j, l_i))
    determines the primary type l; the types then recombine into invariant
    factors.  Independent of the subgroup lattice on purpose.
    """
    if not G.is_abelian():
        return None
    n = G.order
    orders = [G.element_order(g) for g in G.elements()]
    cyclic_orders: list[int] = []
    m = n
    d = 2
    primes = []
    while d * d <= m:
        if m % d == 0:
            primes.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        primes.append(m)
    for p in primes:
        sylow = 1
        while n % (sylow * p) == 0:
            sylow *= p
        exps = []  # exps[j-1] = log_p #{g : order(g) | p^j}
        j = 1
        while True:
            c = sum(1 for o in orders if p ** j % o == 0)
            e = 0
            while c > 1:
                c //= p
                e += 1
            exps.append(e)
            if p ** exps[-1] == sylow:
                break
            j += 1
        parts_ge = []  # parts_ge[j-1] = number of primary parts >= j
        prev = 0
        for e in exps:
            parts_ge.append(e - prev)
            prev = e
        for j in range(len(parts_ge) - 1, -1, -1):
            nxt = parts_ge[j + 1] if j + 1 < len(parts_ge) else 0
            cyclic_orders.extend([p ** (j + 1)] * (parts_ge[j] - nxt))
    return invariant_factors_from_cyclic_orders(cyclic_orders)


def _min_generators_from_sketch(sketch: LatticeSketch, cyclic_colors) -> int:
    """Smallest join cover of maximal cyclic colors (generator-count heuristic)."""
    full = sketch.full_color
    if sketch.order_of[full] == 1:
        return 0
    maximal = [
        c for c in cyclic_colors
        if not any(
            d != c and d in cyclic_colors and sketch.contains(d, c)
            for d in sketch.colors
        )
    ]
    maximal.sort(key=lambda c: -sketch.order_of[c])
    if full in maximal:
        return 1
    for r in range(2, len(maximal) + 1):
        for combo in combinations(maximal, r):
            if sketch.join(list(combo)) == full:
                return r
    raise MalformedGraph("maximal cyclic colors fail to join to the full group")


# -- analysis report --------------------------------------------------------------


@dataclass(frozen=True)
class OracleCheck:
    graph_value: object
    direct_value: object
    agree: bool


@dataclass(frozen=True)
class AnalysisReport:
    group_name: str
    order: int
    division_count: int
    lattice_sketch: LatticeSketch
    normal_color_ids: frozenset[int]
    cyclic_color_ids: frozenset[int]
    conjugate_cyclic_families: tuple[tuple[int, ...], ...]
    oracle_checks: dict[str, OracleCheck]

    @property
    def all_agree(self) -> bool:
        return all(c.agree for c in self.oracle_checks.values())

    def to_json(self) -> dict:
        return {
            "schema": "divgraph.analysis/1",
            "group": self.group_name,
            "order": self.order,
            "division_count": self.division_count,
            "lattice_sketch": {
                "colors": list(self.lattice_sketch.colors),
                "orders": {str(c): self.lattice_sketch.order_of[c]
                           for c in self.lattice_sketch.colors},
                "covers": [list(c) for c in self.lattice_sketch.covers],
            },
            "normal_color_ids": sorted(self.normal_color_ids),
            "cyclic_color_ids": sorted(self.cyclic_color_ids),
            "conjugate_cyclic_families": [list(f) for f in self.conjugate_cyclic_families],
            "oracle_checks": {
                name: {
                    "graph_value": _jsonable(check.graph_value),
                    "direct_value": _jsonable(check.direct_value),
                    "agree": check.agree,
                }
                for name, check in sorted(self.oracle_checks.items())
            },
        }


def _jsonable(value):
    if isinstance(value, frozenset):
        return sorted(_jsonable(v) for v in value)
    if isinstance(value, (tuple, list)):
        return [_jsonable(v) for v in value]
    return value


def analyze(G: Group, L: SubgroupLattice | None = None,
            dg: DivisionGraph | None = None) -> AnalysisReport:
    """Full report: graph-side recoveries checked against direct computation."""
    if L is None:
        L = all_subgroups(G)
    divs = divisions(G)
    if dg is None:
        dg = division_graph(G, L, divs)

    sketch = recover_lattice(dg)
    normal_colors = recover_normal_colors(dg)
    cyclic_colors, families = recover_cyclic_colors(dg, sketch)

    checks: dict[str, OracleCheck] = {}

    order_direct = G.order
    order_graph = recover_order(dg)
    checks["order"] = OracleCheck(order_graph, order_direct, order_graph == order_direct)

    covers_direct = tuple(sorted(L.covers))
    checks["lattice_covers"] = OracleCheck(
        sketch.covers, covers_direct, sketch.covers == covers_direct
    )

    normal_direct = frozenset(normal_subgroup_ids(L))
    checks["normal_subgroups"] = OracleCheck(
        normal_colors, normal_direct, normal_colors == normal_direct
    )

    cyclic_direct = frozenset(cyclic_subgroup_ids(L))
    checks["cyclic_subgroups"] = OracleCheck(
        cyclic_colors, cyclic_direct, cyclic_colors == cyclic_direct
    )

    families_direct = tuple(
        L.conjugacy_class_of_subgroup(
            L.id_of(_cyclic_members_of(G, d.representative))
        )
        for d, _ in dg.components
    )
    checks["decomposition_families"] = OracleCheck(
        tuple(families), families_direct, tuple(families) == families_direct
    )

    factors_graph = _abelian_from_sketch(sketch, normal_colors, cyclic_colors)
    abelian_graph = factors_graph is not None
    abelian_direct = G.is_abelian()
    factors_direct = invariant_factors_direct(G)
    graph_invariants = (
        invariant_factors_from_cyclic_orders(factors_graph) if abelian_graph else None
    )
    checks["abelian"] = OracleCheck(
        abelian_graph, abelian_direct, abelian_graph == abelian_direct
    )
    checks["abelian_invariant_factors"] = OracleCheck(
        graph_invariants, factors_direct, graph_invariants == factors_direct
    )

    graph_trivial, graph_full = sketch.trivial_color, sketch.full_color
    simple_graph = recover_order(dg) > 1 and not any(
        c not in (graph_trivial, graph_full) for c in normal_colors
    )
    simple_direct = G.order > 1 and all(
        s.id in (L.trivial_id, L.full_id) for s in L.subgroups if is_normal(L, s)
    )
    checks["simple"] = OracleCheck(simple_graph, simple_direct, simple_graph == simple_direct)

    mingen_graph = _min_generators_from_sketch(sketch, cyclic_colors)
    mingen_direct = minimal_generator_count(G)
    checks["minimal_generators"] = OracleCheck(
        mingen_graph, mingen_direct, mingen_graph == mingen_direct
    )

    checks["center_order"] = OracleCheck(None, center(G).order, True)
    checks["commutator_order"] = OracleCheck(None, commutator_subgroup(G).order, True)
    checks["solvable"] = OracleCheck(None, is_solvable(G), True)
    checks["nilpotent"] = OracleCheck(None, is_nilpotent(G, L), True)

    return AnalysisReport(
        group_name=G.name,
        order=order_direct,
        division_count=len(dg.components),
        lattice_sketch=sketch,
        normal_color_ids=normal_colors,
        cyclic_color_ids=cyclic_colors,
        conjugate_cyclic_families=tuple(families),
        oracle_checks=checks,
    )


def _cyclic_members_of(G: Group, g: int) -> tuple[int, ...]:
    members = [0]
    x = g
    while x != 0:
        members.append(x)
        x = G.mul(x, g)
    return tuple(sorted(members))


# -- certificates ------------------------------------------------------------------


@dataclass(frozen=True)
class Certificate:
    data: bytes

    def hex(self) -> str:
        return self.data.hex()

    def __eq__(self, other):
        return isinstance(other, Certificate) and self.data == other.data

    def __hash__(self):
        return hash(self.data)


def _component_fingerprint(comp: USTComponent) -> tuple:
    cluster_profile = tuple(sorted(
        tuple(sorted(o.length for o in orbits)) for orbits in comp.clusters.values()
    ))
    labels = tuple(sorted(arc.label for arc in comp.arcs))
    return (cluster_profile, labels)


def _color_fingerprint(dg: DivisionGraph, color: int) -> tuple:
    return tuple(sorted(
        tuple(sorted(o.length for o in comp.clusters[color]))
        for _, comp in dg.components
    ))


def certificate(dg: DivisionGraph, budget: int = DEFAULT_BUDGET) -> Certificate:
    """Canonical byte string of the graph up to component permutation and a
    single global color bijection.

    The graph handed to the canonicalizer has one service node per
    component and one per color; orbit vertices point at both, so any
    automorphism permutes components wholesale and renames colors
    consistently across the whole graph.  Service arcs carry label 0,
    which no structural arc uses.
    """
    colors = sorted({c for _, comp in dg.components for c in comp.clusters})
    comp_count = len(dg.components)

    comp_cells: dict[tuple, list[int]] = {}
    for ci, (_, comp) in enumerate(dg.components):
        comp_cells.setdefault(_component_fingerprint(comp), []).append(ci)

    color_node: dict[int, int] = {
        color: comp_count + i for i, color in enumerate(colors)
    }
    color_cells: dict[tuple, list[int]] = {}
    for color in colors:
        color_cells.setdefault(_color_fingerprint(dg, color), []).append(color_node[color])

    vertex_id: dict[tuple[int, int, int], int] = {}
    length_cells: dict[int, list[int]] = {}
    next_id = comp_count + len(colors)
    arcs: list[tuple[int, int, int]] = []
    for ci, (_, comp) in enumerate(dg.components):
        for color in sorted(comp.clusters):
            for oi, orbit in enumerate(comp.clusters[color]):
                vid = next_id
                next_id += 1
                vertex_id[(ci, color, oi)] = vid
                length_cells.setdefault(orbit.length, []).append(vid)
                arcs.append((vid, ci, 0))
                arcs.append((vid, color_node[color], 0))
        for arc in comp.arcs:
            (lc, lo), (uc, uo) = arc.lower, arc.upper
            arcs.append((
                vertex_id[(ci, lc, lo)], vertex_id[(ci, uc, uo)], arc.label
            ))

    init_cells = (
        [comp_cells[fp] for fp in sorted(comp_cells)]
        + [color_cells[fp] for fp in sorted(color_cells)]
        + [length_cells[length] for length in sorted(length_cells)]
    )
    result = canonical_form(next_id, arcs, init_cells, budget=budget)
    return Certificate(b"divgraph-cert/1;" + result.encoding)


@dataclass(frozen=True)
class ComparisonResult:
    verdict: str  # "same" | "different"
    left: Certificate
    right: Certificate


def compare(G1: Group, G2: Group, budget: int = DEFAULT_BUDGET) -> ComparisonResult:
    """Equal certificates <=> equivalent division graphs."""
    c1 = certificate(division_graph(G1), budget=budget)
    c2 = certificate(division_graph(G2), budget=budget)
    return ComparisonResult("same" if c1 == c2 else "different", c1, c2)


@dataclass(frozen=True)
class ScanReport:
    group_names: tuple[str, ...]
    collisions: tuple[tuple[str, str], ...]  # equal certificate, non-isomorphic
    matched_isomorphic: tuple[tuple[str, str], ...]

    @property
    def clean(self) -> bool:
        return not self.collisions


def conjecture_scan(groups, budget: int = DEFAULT_BUDGET) -> ScanReport:
    """Look for equal certificates among non-isomorphic groups.

    Isomorphic pairs with unequal certificates would contradict certificate
    invariance outright, so that case raises instead of being reported.
    """
    groups = list(groups)
    certs = [certificate(division_graph(g), budget=budget) for g in groups]
    collisions = []
    matched = []
    for i, j in combinations(range(len(groups)), 2):
        same_cert = certs[i] == certs[j]
        iso = are_isomorphic(groups[i], groups[j])
        if same_cert and not iso:
            collisions.append((groups[i].name, groups[j].name))
        elif same_cert and iso:
            matched.append((groups[i].name, groups[j].name))
        elif iso and not same_cert:
            raise InternalInvariantError(
                f"isomorphic groups {groups[i].name} and {groups[j].name} "
                "received different certificates"
            )
    return ScanReport(
        tuple(g.name for g in groups), tuple(collisions), tuple(matched)
    )


# -- component-level canonical forms (colors held fixed) ----------------------------


@dataclass(frozen=True)
class AbstractComponent:
    """A splitting-type component detached from its group: orbit lengths per
    color plus labeled arcs between (color, slot) pairs."""

    clusters: dict[int, tuple[int, ...]]
    arcs: tuple[tuple[tuple[int, int], tuple[int, int], int], ...]


def abstract_component(comp: USTComponent) -> AbstractComponent:
    return AbstractComponent(
        {color: tuple(o.length for o in orbits) for color, orbits in comp.clusters.items()},
        tuple((arc.lower, arc.upper, arc.label) for arc in comp.arcs),
    )


def component_encoding(component: AbstractComponent, color_key,
                       budget: int = DEFAULT_BUDGET) -> bytes:
    """Canonical bytes of one component with colors pinned (no renaming).

    ``color_key`` maps raw colors to sortable tokens; components from
    different graphs compare equal exactly when a color-respecting,
    length- and label-preserving isomorphism exists.
    """
    colors = sorted(component.clusters, key=color_key)
    vid: dict[tuple[int, int], int] = {}
    cells: dict[tuple, list[int]] = {}
    n = 0
    for color in colors:
        for slot, length in enumerate(component.clusters[color]):
            vid[(color, slot)] = n
            cells.setdefault((color_key(color), length), []).append(n)
            n += 1
    arcs = [
        (vid[low], vid[up], label) for low, up, label in component.arcs
    ]
    result = canonical_form(n, arcs, [cells[k] for k in sorted(cells)], budget=budget)
    return result.encoding


# -- division graphs of subgroups and quotients (extraction procedures) -------------


def restricted_components(dg: DivisionGraph, h_color: int,
                          sketch: LatticeSketch | None = None) -> list[AbstractComponent]:
    """Splitting types of the primes of color ``h_color``, rescaled to that
    base; after deduplication these are the components of the subgroup's own
    division graph."""
    if sketch is None:
        sketch = recover_lattice(dg)
    sub_colors = {c for c in sketch.colors if sketch.contains(h_color, c)}
    out = []
    for _, comp in dg.components:
        upward: dict[tuple[int, int], list] = {}
        for arc in comp.arcs:
            upward.setdefault(arc.lower, []).append(arc)
        for base_idx, base_orbit in enumerate(comp.clusters[h_color]):
            reached = {(h_color, base_idx)}
            frontier = [(h_color, base_idx)]
            arcs = []
            while frontier:
                node = frontier.pop()
                for arc in upward.get(node, ()):
                    arcs.append(arc)
                    if arc.upper not in reached:
                        reached.add(arc.upper)
                        frontier.append(arc.upper)
            base_len = base_orbit.length
            clusters: dict[int, list[int]] = {c: [] for c in sub_colors}
            slot_of: dict[tuple[int, int], tuple[int, int]] = {}
            for color, idx in sorted(reached):
                length = comp.clusters[color][idx].length
                if length % base_len:
                    raise MalformedGraph("orbit length not divisible by base length")
                slot_of[(color, idx)] = (color, len(clusters[color]))
                clusters[color].append(length // base_len)
            new_arcs = tuple(sorted(
                (slot_of[arc.lower], slot_of[arc.upper], arc.label) for arc in arcs
            ))
            out.append(AbstractComponent(
                {c: tuple(v) for c, v in clusters.items()}, new_arcs
            ))
    return out


def quotient_components(dg: DivisionGraph, h_color: int,
                        sketch: LatticeSketch | None = None) -> list[AbstractComponent]:
    """Splitting patterns that stop at color ``h_color``; after deduplication
    these are the components of the quotient's division graph."""
    if sketch is None:
        sketch = recover_lattice(dg)
    over_colors = {c for c in sketch.colors if sketch.contains(c, h_color)}
    out = []
    for _, comp in dg.components:
        clusters = {
            c: tuple(o.length for o in comp.clusters[c]) for c in over_colors
        }
        arcs = tuple(sorted(
            (arc.lower, arc.upper, arc.label)
            for arc in comp.arcs
            if arc.lower[0] in over_colors and arc.upper[0] in over_colors
        ))
        out.append(AbstractComponent(clusters, arcs))
    return out


def dedup_components(components, color_key, budget: int = DEFAULT_BUDGET) -> dict[bytes, AbstractComponent]:
    """Deduplicate by color-fixed canonical encoding."""
    out: dict[bytes, AbstractComponent] = {}
    for comp in components:
        out.setdefault(component_encoding(comp, color_key, budget=budget), comp)
    return out


def division_graph_of_subgroup(G: Group, L: SubgroupLattice, dg: DivisionGraph,
                               h_id: int):
    """Extract D(H) from D(G) and pair it with the directly computed D(H).

    Returns (extracted, direct) as parallel dicts of canonical encodings so
    a caller (or test) can check the extraction procedure verbatim.  Colors
    of the extraction are translated to the subgroup's own lattice ids, so
    the encodings are directly comparable.
    """
    sub, members = subgroup_as_group(G, L.subgroups[h_id].members)
    sub_lattice = all_subgroups(sub)
    to_local = {g: i for i, g in enumerate(members)}

    def sub_lattice_id(g_color: int) -> int:
        local_members = tuple(sorted(to_local[g] for g in L.subgroups[g_color].members))
        return sub_lattice.id_of(local_members)

    extracted = dedup_components(restricted_components(dg, h_id), sub_lattice_id)
    direct_graph = division_graph(sub, sub_lattice)
    direct = dedup_components(
        (abstract_component(comp) for _, comp in direct_graph.components),
        lambda c: c,
    )
    return extracted, direct


def division_graph_of_quotient(G: Group, L: SubgroupLattice, dg: DivisionGraph,
                               h_id: int):
    """Extract D(G/H) from D(G) alongside the directly computed D(G/H)."""
    quotient, coset_of = quotient_group(G, L.subgroups[h_id].members)
    q_lattice = all_subgroups(quotient)

    def q_lattice_id(g_color: int) -> int:
        cosets = tuple(sorted({coset_of[g] for g in L.subgroups[g_color].members}))
        return q_lattice.id_of(cosets)

    extracted = dedup_components(quotient_components(dg, h_id), q_lattice_id)
    direct_graph = division_graph(quotient, q_lattice)
    direct = dedup_components(
        (abstract_component(comp) for _, comp in direct_graph.components),
        lambda c: c,
    )
    return extracted, direct
