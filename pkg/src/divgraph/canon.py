"""Complete canonical forms for vertex-colored, arc-labeled digraphs.

The canonicalizer is an individualization-refinement search: refine the
ordered partition until equitable, branch on the vertices of the first
non-singleton cell, and take the lexicographically minimal leaf encoding.
Automorphisms discovered between equal leaves prune sibling branches, so
highly symmetric graphs stay tractable.  A leaf encoding carries the full
labeled adjacency, so two graphs receive equal encodings if and only if
they are isomorphic respecting initial cell classes, arc directions, and
arc labels.
"""

from __future__ import annotations

from .errors import CanonicalizationBudgetExceeded

DEFAULT_BUDGET = 500_000


class CanonicalResult:
    __slots__ = ("encoding", "order", "automorphisms", "nodes")

    def __init__(self, encoding, order, automorphisms, nodes):
        self.encoding = encoding            # bytes
        self.order = order                  # canonical position -> vertex id
        self.automorphisms = automorphisms  # generator vertex maps found
        self.nodes = nodes                  # search nodes visited


def canonical_form(n: int, arcs, init_cells,
                   budget: int = DEFAULT_BUDGET) -> CanonicalResult:
    """Canonicalize a digraph on the vertices 0..n-1.

    ``arcs`` is an iterable of (u, v, label) with integer labels and at most
    one arc per ordered pair.  ``init_cells`` is an ordered partition of the
    vertices; its cell order encodes invariant vertex classes, and only maps
    preserving each class are considered.
    """
    return _Searcher(n, arcs, init_cells, budget).run()


class _Searcher:
    def __init__(self, n, arcs, init_cells, budget):
        self.n = n
        self.budget = budget
        self.nodes = 0
        out = [[] for _ in range(n)]
        in_ = [[] for _ in range(n)]
        nbrs = [set() for _ in range(n)]
        for u, v, label in arcs:
            out[u].append((label, v))
            in_[v].append((label, u))
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.out = [tuple(x) for x in out]
        self.in_ = [tuple(x) for x in in_]
        self.nbrs = [tuple(x) for x in nbrs]

        self.init_class = [-1] * n
        for ci, cell in enumerate(init_cells):
            for v in cell:
                if self.init_class[v] != -1:
                    raise ValueError(f"vertex {v} appears in two initial cells")
                self.init_class[v] = ci
        if any(c < 0 for c in self.init_class):
            raise ValueError("initial cells must cover every vertex")

        self.best_key = None
        self.best_order = None
        self.best_path: list[tuple[int, ...]] = []
        self.best_prefix: tuple[int, ...] = ()
        self.generators: list[tuple[int, ...]] = []
        self._gen_set: set[tuple[int, ...]] = set()
        self._bounce: int | None = None

    # -- refinement ---------------------------------------------------------

    def _refine(self, cells, cell_of, changed):
        """Split cells by neighborhood signatures until equitable.

        One round recomputes signatures only in cells holding a neighbor of
        a vertex whose cell membership changed, and applies all of the
        round's splits simultaneously, so the schedule is invariant under
        isomorphism.
        """
        out, in_, nbrs = self.out, self.in_, self.nbrs
        while changed:
            touched = set()
            for v in changed:
                touched.update(nbrs[v])
            dirty = sorted({
                cell_of[w] for w in touched if len(cells[cell_of[w]]) > 1
            })
            splits = {}
            for ci in dirty:
                sigs: dict[tuple, list[int]] = {}
                for v in cells[ci]:
                    sig = (
                        tuple(sorted((lab, cell_of[w]) for lab, w in out[v])),
                        tuple(sorted((lab, cell_of[w]) for lab, w in in_[v])),
                    )
                    sigs.setdefault(sig, []).append(v)
                if len(sigs) > 1:
                    splits[ci] = [sigs[key] for key in sorted(sigs)]
            if not splits:
                break
            new_cells = []
            changed = set()
            for ci, cell in enumerate(cells):
                if ci in splits:
                    new_cells.extend(splits[ci])
                    changed.update(cell)
                else:
                    new_cells.append(cell)
            cells = new_cells
            for idx, cell in enumerate(cells):
                for v in cell:
                    cell_of[v] = idx
        return cells, cell_of

    def _initial_partition(self):
        by_class: dict[int, list[int]] = {}
        for v in range(self.n):
            by_class.setdefault(self.init_class[v], []).append(v)
        cells = [sorted(by_class[ci]) for ci in sorted(by_class)]
        cell_of = [0] * self.n
        for idx, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = idx
        return self._refine(cells, cell_of, set(range(self.n)))

    # -- search -------------------------------------------------------------

    def run(self) -> CanonicalResult:
        cells, cell_of = self._initial_partition()
        self._search(cells, cell_of, ())
        return CanonicalResult(
            self._encode_bytes(self.best_key),
            self.best_order,
            list(self.generators),
            self.nodes,
        )

    def _search(self, cells, cell_of, prefix):
        self.nodes += 1
        if self.nodes > self.budget:
            raise CanonicalizationBudgetExceeded(
                f"canonical search exceeded {self.budget} nodes"
            )

        # node-invariant pruning: the canonical leaf minimizes the sequence
        # of cell-size tuples along its path before the leaf key is compared
        inv = tuple(len(cell) for cell in cells)
        depth = len(prefix)
        if self.best_key is not None and depth < len(self.best_path):
            best_inv = self.best_path[depth]
            if inv > best_inv:
                return
            if inv < best_inv:
                self.best_key = None
                self.best_order = None
                del self.best_path[depth:]
                self.best_path.append(inv)
        elif self.best_key is None:
            del self.best_path[depth:]
            self.best_path.append(inv)

        target = None
        for ci, cell in enumerate(cells):
            if len(cell) > 1:
                target = ci
                break
        if target is None:
            self._handle_leaf(cells, prefix)
            return

        explored: list[int] = []
        orbit_of = None
        orbit_gen_count = -1
        for v in cells[target]:
            if explored:
                if orbit_gen_count != len(self.generators):
                    orbit_of = self._cell_orbits(cells[target], prefix)
                    orbit_gen_count = len(self.generators)
                if orbit_of is not None:
                    root = orbit_of[v]
                    if any(orbit_of[u] == root for u in explored):
                        continue
            explored.append(v)
            child_cells = [list(c) for c in cells]
            child_cell_of = list(cell_of)
            rest = [w for w in child_cells[target] if w != v]
            child_cells[target] = [v]
            child_cells.insert(target + 1, rest)
            for idx in range(target + 1, len(child_cells)):
                for w in child_cells[idx]:
                    child_cell_of[w] = idx
            child_cell_of[v] = target
            child_cells, child_cell_of = self._refine(
                child_cells, child_cell_of, set(rest) | {v}
            )
            self._search(child_cells, child_cell_of, prefix + (v,))
            if self._bounce is not None:
                if self._bounce < depth:
                    return  # a discovered automorphism covers this whole subtree
                self._bounce = None

    def _cell_orbits(self, cell, prefix):
        """Orbit representative per cell member under the discovered
        automorphisms fixing the prefix pointwise; None when there are none.

        Automorphisms fixing the prefix stabilize every cell of this node's
        partition setwise (the partition is a deterministic function of the
        prefix), so the orbit walk never leaves the cell.
        """
        useful = [
            g for g in self.generators if all(g[p] == p for p in prefix)
        ]
        if not useful:
            return None
        orbit_of: dict[int, int] = {}
        for u in cell:
            if u in orbit_of:
                continue
            orbit_of[u] = u
            queue = [u]
            while queue:
                x = queue.pop()
                for g in useful:
                    y = g[x]
                    if y not in orbit_of:
                        orbit_of[y] = u
                        queue.append(y)
        return orbit_of

    def _handle_leaf(self, cells, prefix):
        order = [cell[0] for cell in cells]
        position = [0] * self.n
        for pos, v in enumerate(order):
            position[v] = pos
        key = tuple(
            (
                self.init_class[v],
                tuple(sorted((lab, position[w]) for lab, w in self.out[v])),
            )
            for v in order
        )
        if self.best_key is None or key < self.best_key:
            self.best_key = key
            self.best_order = order
            self.best_prefix = prefix
        elif key == self.best_key:
            mapping = [0] * self.n
            for pos in range(self.n):
                mapping[self.best_order[pos]] = order[pos]
            mapping = tuple(mapping)
            if mapping not in self._gen_set and any(
                mapping[i] != i for i in range(self.n)
            ):
                self.generators.append(mapping)
                self._gen_set.add(mapping)
            self._maybe_bounce(mapping, prefix)

    def _maybe_bounce(self, mapping, prefix):
        """After an equal leaf: if the automorphism maps the best leaf's
        branch onto the current one at their first divergence, the rest of
        the current subtree repeats explored territory; unwind to the fork.
        """
        best = self.best_prefix
        k = 0
        while k < len(best) and k < len(prefix) and best[k] == prefix[k]:
            k += 1
        if k >= len(best) or k >= len(prefix):
            return
        if all(mapping[best[i]] == prefix[i] for i in range(k + 1)):
            self._bounce = k

    def _encode_bytes(self, key) -> bytes:
        chunks = [f"n={self.n}"]
        for init_class, adjacency in key:
            arc_txt = ",".join(f"{lab}:{w}" for lab, w in adjacency)
            chunks.append(f"{init_class}|{arc_txt}")
        return ";".join(chunks).encode("ascii")
