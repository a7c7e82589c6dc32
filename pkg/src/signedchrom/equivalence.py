"""Isomorphism and switching-isomorphism of signed graphs, and signature orbits.

Decision procedures return explicit witnesses (a vertex permutation, plus a
switching set where applicable) so a result of "equivalent" can be re-checked
independently.  Signature classes over a fixed underlying graph are
enumerated by a union-find over all 2^|E| sign patterns, united under
single-vertex switchings and underlying-graph automorphisms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceededError
from .graphs import SignedGraph, all_positive, component_stats, switch

DEFAULT_VERTEX_BUDGET = 12
DEFAULT_ORBIT_EDGE_BUDGET = 21


def _adjacency(g: SignedGraph) -> list[list[int]]:
    """n x n matrix of edge signs, 0 where there is no edge."""
    adj = [[0] * g.n for _ in range(g.n)]
    for u, v, s in g.edges:
        adj[u][v] = s
        adj[v][u] = s
    return adj


def _profiles(g: SignedGraph) -> list[tuple[int, int, int]]:
    """(degree, positive degree, negative degree) per vertex."""
    pos = [0] * g.n
    neg = [0] * g.n
    for u, v, s in g.edges:
        if s > 0:
            pos[u] += 1
            pos[v] += 1
        else:
            neg[u] += 1
            neg[v] += 1
    return [(pos[v] + neg[v], pos[v], neg[v]) for v in range(g.n)]


def _search_isomorphisms(g1: SignedGraph, g2: SignedGraph, find_all: bool):
    """Backtracking over vertex maps pruned by sign-degree profiles."""
    n = g1.n
    if n != g2.n or g1.m != g2.m:
        return []
    prof1 = _profiles(g1)
    prof2 = _profiles(g2)
    if sorted(prof1) != sorted(prof2):
        return []
    adj1 = _adjacency(g1)
    adj2 = _adjacency(g2)
    # place high-degree vertices first; ties broken by index for determinism
    order = sorted(range(n), key=lambda v: (-prof1[v][0], v))
    found: list[tuple[int, ...]] = []
    image = [-1] * n
    used = [False] * n

    def extend(step: int) -> bool:
        if step == n:
            perm = tuple(image)
            found.append(perm)
            return not find_all
        v = order[step]
        row1 = adj1[v]
        for w in range(n):
            if used[w] or prof1[v] != prof2[w]:
                continue
            row2 = adj2[w]
            ok = True
            for prev in order[:step]:
                if row1[prev] != row2[image[prev]]:
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                if extend(step + 1):
                    return True
                used[w] = False
                image[v] = -1
        return False

    extend(0)
    return found


def find_isomorphism(
    g1: SignedGraph, g2: SignedGraph, *, max_vertices: int = DEFAULT_VERTEX_BUDGET
) -> tuple[int, ...] | None:
    """A sign-preserving vertex bijection with relabel(g1, perm) == g2, or None."""
    if max(g1.n, g2.n) > max_vertices:
        raise BudgetExceededError(
            f"isomorphism search limited to {max_vertices} vertices"
        )
    maps = _search_isomorphisms(g1, g2, find_all=False)
    return maps[0] if maps else None


def are_isomorphic(g1: SignedGraph, g2: SignedGraph, **kw) -> bool:
    return find_isomorphism(g1, g2, **kw) is not None


def automorphisms(g: SignedGraph) -> list[tuple[int, ...]]:
    """All sign-preserving automorphisms of g."""
    return _search_isomorphisms(g, g, find_all=True)


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(p[q[v]] for v in range(len(p)))


def generating_automorphisms(g: SignedGraph) -> list[tuple[int, ...]]:
    """A small generating set for the automorphism group of g."""
    identity = tuple(range(g.n))
    group = {identity}
    gens: list[tuple[int, ...]] = []
    for perm in automorphisms(g):
        if perm in group:
            continue
        gens.append(perm)
        frontier = list(group)
        while frontier:
            a = frontier.pop()
            for b in gens:
                for c in (_compose(a, b), _compose(b, a)):
                    if c not in group:
                        group.add(c)
                        frontier.append(c)
    return gens


def negative_cycle_count(g: SignedGraph) -> int | None:
    """Number of negative cycles, via the cycle space; None if too large.

    Both switching and isomorphism preserve this count, so it serves as a
    cheap rejection test before the switching search.
    """
    stats = component_stats(g)
    dim = g.m - g.n + stats.c
    if dim > 16:
        return None
    # spanning forest via union-find; non-tree edges index the cycle space
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    tree_adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    non_tree: list[int] = []
    for i, (u, v, _) in enumerate(g.edges):
        ru, rv = find(u), find(v)
        if ru == rv:
            non_tree.append(i)
        else:
            parent[ru] = rv
            tree_adj[u].append((v, i))
            tree_adj[v].append((u, i))

    def tree_path_mask(u: int, v: int) -> int:
        # BFS in the forest from u to v, returning the edge-index bitmask
        prev: dict[int, tuple[int, int]] = {u: (-1, -1)}
        queue = [u]
        while queue:
            x = queue.pop()
            if x == v:
                break
            for y, ei in tree_adj[x]:
                if y not in prev:
                    prev[y] = (x, ei)
                    queue.append(y)
        mask = 0
        x = v
        while x != u:
            x, ei = prev[x]
            mask |= 1 << ei
        return mask

    fundamental = []
    for i in non_tree:
        u, v, _ = g.edges[i]
        fundamental.append(tree_path_mask(u, v) | (1 << i))
    neg_mask = 0
    for i, (_, _, s) in enumerate(g.edges):
        if s < 0:
            neg_mask |= 1 << i
    deg = [0] * g.n
    count = 0
    for combo in range(1, 1 << dim):
        mask = 0
        mm = combo
        while mm:
            low = mm & -mm
            mm ^= low
            mask ^= fundamental[low.bit_length() - 1]
        # a cycle-space element is a cycle iff it is connected and 2-regular
        touched: list[int] = []
        ok = True
        em = mask
        while em:
            low = em & -em
            em ^= low
            u, v, _ = g.edges[low.bit_length() - 1]
            for x in (u, v):
                if deg[x] == 0:
                    touched.append(x)
                deg[x] += 1
                if deg[x] > 2:
                    ok = False
        if ok and touched:
            # connectivity check restricted to the chosen edges
            seen = {touched[0]}
            stack = [touched[0]]
            inc: dict[int, list[int]] = {x: [] for x in touched}
            em = mask
            while em:
                low = em & -em
                em ^= low
                u, v, _ = g.edges[low.bit_length() - 1]
                inc[u].append(v)
                inc[v].append(u)
            while stack:
                x = stack.pop()
                for y in inc[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            if len(seen) == len(touched) and all(deg[x] == 2 for x in touched):
                if (mask & neg_mask).bit_count() & 1:
                    count += 1
        for x in touched:
            deg[x] = 0
    return count


def find_switching_isomorphism(
    g1: SignedGraph, g2: SignedGraph, *, max_vertices: int = 10
) -> tuple[frozenset[int], tuple[int, ...]] | None:
    """A pair (X, perm) with relabel(g1, perm) == switch(g2, X), or None.

    Switchings of g2 are enumerated over 2^(n-c) class representatives (one
    vertex per component is pinned, since switching a full component changes
    nothing).
    """
    if max(g1.n, g2.n) > max_vertices:
        raise BudgetExceededError(
            f"switching-isomorphism search limited to {max_vertices} vertices"
        )
    if g1.n != g2.n or g1.m != g2.m:
        return None
    s1, s2 = component_stats(g1), component_stats(g2)
    if (s1.c, s1.b) != (s2.c, s2.b):
        return None
    n1, n2 = negative_cycle_count(g1), negative_cycle_count(g2)
    if n1 is not None and n2 is not None and n1 != n2:
        return None
    free = free_switching_vertices(g2)
    for bits in range(1 << len(free)):
        X = frozenset(free[i] for i in range(len(free)) if bits >> i & 1)
        candidate = switch(g2, X)
        perm = find_isomorphism(g1, candidate, max_vertices=max_vertices)
        if perm is not None:
            return X, perm
    return None


def free_switching_vertices(g: SignedGraph) -> list[int]:
    """All vertices except one representative per connected component."""
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v, _ in g.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    roots = {find(v) for v in range(g.n)}
    return [v for v in range(g.n) if v not in roots]


def are_switching_isomorphic(g1: SignedGraph, g2: SignedGraph, **kw) -> bool:
    return find_switching_isomorphism(g1, g2, **kw) is not None


# -- signature orbits over a fixed underlying graph -----------------------------


@dataclass(frozen=True)
class ClassInventory:
    """Signature classes of one underlying graph under iso or switching-iso.

    Masks encode signatures: bit i set means edge i (in the graph's canonical
    lexicographic edge order) is negative.  Representatives are the minimal
    mask of each orbit, listed in increasing order.
    """

    underlying: SignedGraph
    mode: str
    representative_masks: tuple[int, ...]
    representatives: tuple[SignedGraph, ...]
    orbit_sizes: tuple[int, ...]
    mask_to_class: tuple[int, ...]

    @property
    def class_count(self) -> int:
        return len(self.representatives)


def graph_from_mask(underlying: SignedGraph, mask: int) -> SignedGraph:
    edges = tuple(
        (u, v, -1 if mask >> i & 1 else 1)
        for i, (u, v, _) in enumerate(underlying.edges)
    )
    return SignedGraph(underlying.n, edges)


MODE_ISO = "iso"
MODE_SWITCHING_ISO = "switching_iso"


def enumerate_classes(
    underlying: SignedGraph,
    mode: str,
    *,
    max_edges: int = DEFAULT_ORBIT_EDGE_BUDGET,
) -> ClassInventory:
    """Partition all 2^|E| signatures of the underlying graph into classes.

    mode "iso" unites signatures under underlying-graph automorphisms only;
    "switching_iso" adds single-vertex switchings as generators.
    """
    if mode not in (MODE_ISO, MODE_SWITCHING_ISO):
        raise ValueError(f"mode must be 'iso' or 'switching_iso', got {mode!r}")
    base = all_positive(underlying)
    m = base.m
    if m > max_edges:
        raise BudgetExceededError(f"{m} edges exceed the orbit budget of {max_edges}")
    edge_index = {(u, v): i for i, (u, v, _) in enumerate(base.edges)}

    switch_masks: list[int] = []
    if mode == MODE_SWITCHING_ISO:
        for v in range(base.n):
            sm = 0
            for (a, b), i in edge_index.items():
                if v in (a, b):
                    sm |= 1 << i
            if sm:
                switch_masks.append(sm)

    perm_tables: list[list[int]] = []
    for perm in generating_automorphisms(base):
        table = [0] * m
        for (a, b), i in edge_index.items():
            x, y = perm[a], perm[b]
            if x > y:
                x, y = y, x
            table[i] = edge_index[(x, y)]
        if table != list(range(m)):
            perm_tables.append(table)

    size = 1 << m
    parent = list(range(size))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            if ra < rb:
                parent[rb] = ra
            else:
                parent[ra] = rb

    for mask in range(size):
        for sm in switch_masks:
            union(mask, mask ^ sm)
        for table in perm_tables:
            img = 0
            mm = mask
            while mm:
                low = mm & -mm
                mm ^= low
                img |= 1 << table[low.bit_length() - 1]
            union(mask, img)

    rep_of_root: dict[int, int] = {}
    reps: list[int] = []
    sizes: list[int] = []
    mask_to_class = [0] * size
    for mask in range(size):
        root = find(mask)
        cls = rep_of_root.get(root)
        if cls is None:
            cls = len(reps)
            rep_of_root[root] = cls
            reps.append(mask)  # ascending scan makes this the minimal mask
            sizes.append(0)
        sizes[cls] += 1
        mask_to_class[mask] = cls
    return ClassInventory(
        underlying=base,
        mode=mode,
        representative_masks=tuple(reps),
        representatives=tuple(graph_from_mask(base, r) for r in reps),
        orbit_sizes=tuple(sizes),
        mask_to_class=tuple(mask_to_class),
    )


def switching_equivalence_class_count(underlying: SignedGraph) -> int:
    """Orbit count under switchings alone (no automorphisms)."""
    base = all_positive(underlying)
    seen: set[int] = set()
    count = 0
    free = free_switching_vertices(base)
    incident = []
    edge_index = {(u, v): i for i, (u, v, _) in enumerate(base.edges)}
    for v in free:
        sm = 0
        for (a, b), i in edge_index.items():
            if v in (a, b):
                sm |= 1 << i
        incident.append(sm)
    for mask in range(1 << base.m):
        if mask in seen:
            continue
        count += 1
        # orbit of mask under the free switchings
        orbit = {mask}
        stack = [mask]
        while stack:
            cur = stack.pop()
            for sm in incident:
                nxt = cur ^ sm
                if nxt not in orbit:
                    orbit.add(nxt)
                    stack.append(nxt)
        seen |= orbit
    return count
