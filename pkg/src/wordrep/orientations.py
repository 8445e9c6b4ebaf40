"""Directed orientations of small graphs and the searches built on them.

The central notion: an orientation is semi-transitive when it is acyclic
and no directed path between the endpoints of an edge induces a
non-transitive subdigraph (a shortcut).  A graph has a representing word
exactly when it admits such an orientation, so exhaustive search over
acyclic orientations decides word-representability at desk scale.

Acyclic orientations are generated from linear orders (every acyclic
orientation is induced by some order) and deduplicated by an edge-direction
fingerprint.  The shortcut search enumerates directed paths per edge,
depth-first, pruned to vertices that can still reach the head; this follows
the definition literally and is exponential in the worst case, which is
fine at the enforced vertex caps.

Also here: transitive-orientation search (comparability), its odd-walk
refutation witness, the dominant-vertex reduction, and a backtracking
search for uniform representing words of bounded multiplicity.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Iterator, Optional

from .graphs import Graph, GraphError, _bits
from .words import Word

DEFAULT_MAX_VERTICES = 10
DEFAULT_MAX_UNIFORMITY = 3
WORD_SEARCH_MAX_VERTICES = 6


class OrientationError(ValueError):
    """Orientation misuse: cyclic input where a DAG is required, bad arcs."""


class CapExceededError(ValueError):
    """Input exceeds the configured exhaustive-search cap."""


@dataclass(frozen=True, eq=False)
class Orientation:
    """A direction for every edge of the owning graph, as out-neighbor bitsets."""

    graph: Graph
    out: tuple[int, ...]

    @classmethod
    def from_order(cls, g: Graph, order: Iterable[str]) -> "Orientation":
        """Orient every edge from the earlier to the later vertex of a linear order."""
        order = tuple(order)
        if sorted(order) != sorted(g.vertices):
            raise OrientationError("order must list every vertex exactly once")
        pos = {g.index(v): t for t, v in enumerate(order)}
        out = [0] * len(g.vertices)
        for i, mask in enumerate(g.adj):
            for j in _bits(mask):
                if pos[i] < pos[j]:
                    out[i] |= 1 << j
        return cls(g, tuple(out))

    @classmethod
    def from_arcs(cls, g: Graph, arcs: Iterable[tuple[str, str]]) -> "Orientation":
        out = [0] * len(g.vertices)
        for u, v in arcs:
            i, j = g.index(u), g.index(v)
            if not g.adj[i] >> j & 1:
                raise OrientationError(f"({u}, {v}) is not an edge")
            if (out[i] >> j | out[j] >> i) & 1:
                raise OrientationError(f"edge ({u}, {v}) directed twice")
            out[i] |= 1 << j
        for i, mask in enumerate(g.adj):
            incoming = sum((row >> i & 1) << j for j, row in enumerate(out))
            if (out[i] | incoming) != mask:
                raise OrientationError("not every edge received a direction")
        return cls(g, tuple(out))

    def has_arc(self, u: str, v: str) -> bool:
        return bool(self.out[self.graph.index(u)] >> self.graph.index(v) & 1)

    def arcs(self) -> list[tuple[str, str]]:
        """Directed edges in the canonical edge order of the graph."""
        result = []
        for u, v in self.graph.edges():
            result.append((u, v) if self.has_arc(u, v) else (v, u))
        return result

    def fingerprint(self) -> int:
        fp = 0
        for e, (u, v) in enumerate(self.graph.edges()):
            if self.has_arc(u, v):
                fp |= 1 << e
        return fp

    def serialize(self) -> str:
        return "\n".join(f"{u} -> {v}" for u, v in self.arcs()) + "\n"

    def __repr__(self) -> str:
        return f"Orientation({', '.join(f'{u}->{v}' for u, v in self.arcs())})"


def _topo_order(out: tuple[int, ...]) -> Optional[list[int]]:
    """Topological order of the out-bitset digraph, or None on a cycle."""
    n = len(out)
    indeg = [0] * n
    for mask in out:
        for j in _bits(mask):
            indeg[j] += 1
    ready = [i for i in range(n) if indeg[i] == 0]
    order = []
    while ready:
        i = ready.pop()
        order.append(i)
        for j in _bits(out[i]):
            indeg[j] -= 1
            if indeg[j] == 0:
                ready.append(j)
    return order if len(order) == n else None


def is_acyclic(o: Orientation) -> bool:
    return _topo_order(o.out) is not None


@dataclass(frozen=True)
class ShortcutWitness:
    """A directed path, its shortcutting edge, and the pair breaking transitivity."""

    path_vertices: tuple[str, ...]
    shortcutting_edge: tuple[str, str]
    nontransitive_pair: tuple[str, str]

    def to_json(self) -> dict:
        return {
            "type": "shortcut",
            "vertices": list(self.path_vertices),
            "detail": {
                "shortcuttingEdge": list(self.shortcutting_edge),
                "missingPair": list(self.nontransitive_pair),
            },
        }


class ShortcutSearcher:
    """Per-graph state for the shortcut search, reusable across orientations.

    Edges are scanned in lexicographic label order of their endpoints and
    depth-first extensions follow label order too, so the witness returned
    for a given orientation is deterministic.
    """

    def __init__(self, g: Graph):
        self.graph = g
        self.n = len(g.vertices)
        self.by_label = sorted(range(self.n), key=g.vertices.__getitem__)
        self.edge_scan = sorted(
            ((g.index(u), g.index(v)) for u, v in g.edges()),
            key=lambda ij: (g.vertices[ij[0]], g.vertices[ij[1]]),
        )

    def find(self, out: tuple[int, ...]) -> Optional[ShortcutWitness]:
        order = _topo_order(out)
        if order is None:
            raise OrientationError("shortcut search needs an acyclic orientation")
        n = self.n
        reach = [0] * n
        for i in reversed(order):
            mask = 1 << i
            for j in _bits(out[i]):
                mask |= reach[j]
            reach[i] = mask
        by_label_rev = list(reversed(self.by_label))
        vertices = self.graph.vertices

        for a, b in self.edge_scan:
            u, v = (a, b) if out[a] >> b & 1 else (b, a)
            target_bit = 1 << v
            path = [u]
            path_mask = 1 << u
            stack = [[w for w in by_label_rev
                      if out[u] >> w & 1 and reach[w] & target_bit]]
            while stack:
                choices = stack[-1]
                if not choices:
                    stack.pop()
                    path_mask ^= 1 << path.pop()
                    continue
                w = choices.pop()
                if w == v:
                    if len(path) >= 3:
                        members = path + [v]
                        bad = _nontransitive_pair(out, members, path_mask | target_bit)
                        if bad is not None:
                            return ShortcutWitness(
                                tuple(vertices[i] for i in members),
                                (vertices[u], vertices[v]),
                                (vertices[bad[0]], vertices[bad[1]]),
                            )
                    continue
                path.append(w)
                path_mask |= 1 << w
                stack.append([x for x in by_label_rev
                              if out[w] >> x & 1 and reach[x] & target_bit])
        return None


def _nontransitive_pair(out: tuple[int, ...], members: list[int], members_mask: int
                        ) -> Optional[tuple[int, int]]:
    # Literal transitivity test on the induced subdigraph: a->b and b->c
    # present but a->c absent.  Scanned in path order for determinism.
    for a in members:
        out_a = out[a] & members_mask
        for b in _bits(out_a):
            missing = out[b] & members_mask & ~out_a
            if missing:
                c = (missing & -missing).bit_length() - 1
                return a, c
    return None


def find_shortcut(o: Orientation) -> Optional[ShortcutWitness]:
    """First shortcut of an acyclic orientation, or None when shortcut-free.

    For each directed edge u->v, the directed u-v paths on at least 4
    vertices are enumerated depth-first, restricted to vertices that still
    reach v; the first path whose induced subdigraph is not transitive
    yields the witness.
    """
    return ShortcutSearcher(o.graph).find(o.out)


def is_semi_transitive(o: Orientation) -> bool:
    return is_acyclic(o) and find_shortcut(o) is None


def outs_transitive(out: tuple[int, ...]) -> bool:
    """u->v and v->z always implies u->z."""
    for mask in out:
        for j in _bits(mask):
            if out[j] & ~mask:
                return False
    return True


def is_transitive(o: Orientation) -> bool:
    return outs_transitive(o.out)


# --- exhaustive enumeration ------------------------------------------------


def outset_from_fingerprint(g: Graph, fp: int) -> tuple[int, ...]:
    """Out-bitsets for the orientation encoded by an edge-direction fingerprint."""
    out = [0] * len(g.vertices)
    bit = 1
    for u, v in g.edges():
        i, j = g.index(u), g.index(v)
        if fp & bit:
            out[i] |= 1 << j
        else:
            out[j] |= 1 << i
        bit <<= 1
    return tuple(out)


def outsets_for_orders(
    g: Graph, orders: Iterable[tuple[int, ...]]
) -> Iterator[tuple[int, tuple[int, ...]]]:
    """(fingerprint, out-bitsets) of the orientations induced by the given orders.

    Each order is a tuple of vertex indices; edges are oriented from earlier
    to later.  Repeated orientations are dropped via a fingerprint set, so
    memory grows with the number of distinct orientations seen.
    """
    n = len(g.vertices)
    edge_pairs = [(g.index(u), g.index(v)) for u, v in g.edges()]
    seen: set[int] = set()
    pos = [0] * n
    for perm in orders:
        for t, i in enumerate(perm):
            pos[i] = t
        fp = 0
        bit = 1
        for i, j in edge_pairs:
            if pos[i] < pos[j]:
                fp |= bit
            bit <<= 1
        if fp in seen:
            continue
        seen.add(fp)
        yield fp, outset_from_fingerprint(g, fp)


def iter_acyclic_outsets(g: Graph) -> Iterator[tuple[int, tuple[int, ...]]]:
    """(fingerprint, out-bitsets) for every acyclic orientation, each once.

    Linear orders are scanned in lexicographic vertex-index order, so the
    first order inducing any given orientation is deterministic.
    """
    return outsets_for_orders(g, permutations(range(len(g.vertices))))


def _check_cap(g: Graph, max_vertices: int) -> None:
    if len(g.vertices) > max_vertices:
        raise CapExceededError(
            f"{len(g.vertices)} vertices exceeds the cap of {max_vertices}"
        )


def enumerate_acyclic_orientations(
    g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES
) -> Iterator[Orientation]:
    """Every acyclic orientation exactly once, via deduplicated linear orders."""
    _check_cap(g, max_vertices)
    for _, out in iter_acyclic_outsets(g):
        yield Orientation(g, out)


def find_semi_transitive_orientation(
    g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES
) -> Optional[Orientation]:
    """Exhaustive search; None means no semi-transitive orientation exists."""
    _check_cap(g, max_vertices)
    searcher = ShortcutSearcher(g)
    for _, out in iter_acyclic_outsets(g):
        if searcher.find(out) is None:
            return Orientation(g, out)
    return None


def is_word_representable(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> bool:
    """A graph is word-representable iff it has a semi-transitive orientation."""
    return find_semi_transitive_orientation(g, max_vertices) is not None


def is_comparability(
    g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES
) -> Optional[Orientation]:
    """A transitive orientation if one exists (comparability graph), else None."""
    _check_cap(g, max_vertices)
    for _, out in iter_acyclic_outsets(g):
        if outs_transitive(out):
            return Orientation(g, out)
    return None


# --- odd closed walks without triangular chords ----------------------------
#
# A graph is a comparability graph iff every odd closed walk (in the
# generalized sense: consecutive pairs are edges and no ordered consecutive
# pair repeats, wrap included) has a triangular chord.  A chordless odd
# walk therefore certifies that no transitive orientation exists.


def find_noncomparability_witness(g: Graph, max_len: int) -> Optional[tuple[str, ...]]:
    """Shortest-first search for an odd closed walk with no triangular chord."""
    if max_len < 5 or max_len % 2 == 0:
        raise GraphError("walk length bound must be odd and at least 5")
    n = len(g.vertices)
    adj = g.adj
    by_label = sorted(range(n), key=g.vertices.__getitem__)
    rank = {i: r for r, i in enumerate(by_label)}

    def close_ok(walk: list[int], used: set[tuple[int, int]]) -> bool:
        last, first = walk[-1], walk[0]
        if not adj[last] >> first & 1:
            return False
        if (last, first) in used:
            return False
        # wrap chords (a_{k-1}, a_1) and (a_k, a_2)
        if adj[walk[-2]] >> first & 1 or adj[last] >> walk[1] & 1:
            return False
        return True

    def extend(walk: list[int], used: set[tuple[int, int]], k: int,
               min_rank: int) -> Optional[list[int]]:
        if len(walk) == k:
            return list(walk) if close_ok(walk, used) else None
        cur = walk[-1]
        for nxt in by_label:
            if rank[nxt] < min_rank or not adj[cur] >> nxt & 1:
                continue
            pair = (cur, nxt)
            if pair in used:
                continue
            if len(walk) >= 2 and adj[walk[-2]] >> nxt & 1:
                continue  # triangular chord (a_{i-1}, a_{i+1})
            used.add(pair)
            walk.append(nxt)
            found = extend(walk, used, k, min_rank)
            walk.pop()
            used.remove(pair)
            if found:
                return found
        return None

    for k in range(5, max_len + 1, 2):
        for start in by_label:
            # Rotating a valid walk keeps it valid, so the start may be
            # pinned to the walk's label-minimal vertex.
            found = extend([start], set(), k, rank[start])
            if found:
                return tuple(g.vertices[i] for i in found)
    return None


def odd_walk_witness_json(walk: tuple[str, ...]) -> dict:
    return {"type": "odd-walk", "vertices": list(walk), "detail": {"length": len(walk)}}


def representable_via_dominant(g: Graph, x: str,
                               max_vertices: int = DEFAULT_MAX_VERTICES) -> bool:
    """Decide representability through a dominant vertex.

    With x adjacent to everything else, the graph is word-representable iff
    the rest is permutationally representable, i.e. a comparability graph.
    """
    if g.degree(x) != len(g.vertices) - 1:
        raise OrientationError(f"{x!r} is not adjacent to all other vertices")
    return is_comparability(g.without(x), max_vertices) is not None


# --- bounded-multiplicity word search --------------------------------------


def find_uniform_word(g: Graph, k: int) -> Optional[Word]:
    """Backtracking search for a k-uniform word representing g.

    The word is built position by position.  A letter may repeat only after
    all its graph neighbors have appeared since its previous occurrence
    (otherwise some adjacent pair stops alternating), and every
    non-adjacent pair must pick up a doubled letter before both letters run
    out.  Since uniform words may be rotated freely, the first position is
    pinned to the first vertex.
    """
    n = len(g.vertices)
    if n == 0:
        raise GraphError("need at least one vertex")
    if k < 1:
        raise GraphError("multiplicity must be positive")
    full = (1 << n) - 1
    adj = g.adj
    nonadj = [full & ~adj[i] & ~(1 << i) for i in range(n)]
    total = n * k

    word: list[int] = []
    remaining = [k] * n
    state = {"placed": 0}
    since_last = [0] * n  # letters seen since this letter's last occurrence
    doubled = [0] * n     # pairs that already fail alternation

    def place(i: int) -> tuple:
        snapshot = (since_last[:], doubled[:], state["placed"])
        if state["placed"] >> i & 1:
            newly = ~since_last[i] & nonadj[i]
            if newly:
                doubled[i] |= newly
                for j in _bits(newly):
                    doubled[j] |= 1 << i
        bit = 1 << i
        for j in range(n):
            since_last[j] |= bit
        since_last[i] = 0
        state["placed"] |= bit
        remaining[i] -= 1
        word.append(i)
        return snapshot

    def unplace(i: int, snapshot: tuple) -> None:
        since_last[:], doubled[:], state["placed"] = snapshot
        remaining[i] += 1
        word.pop()

    def viable_after(i: int) -> bool:
        if remaining[i] == 0:
            # Pairs with i that never doubled need >= 2 later copies of the
            # other letter (the pair restriction now ends with i).
            for j in _bits(nonadj[i] & ~doubled[i]):
                if remaining[j] <= 1:
                    return False
        return True

    def search() -> bool:
        if len(word) == total:
            return all((nonadj[i] & ~doubled[i]) == 0 for i in range(n))
        placed = state["placed"]
        for i in range(n):
            if remaining[i] == 0:
                continue
            if placed >> i & 1 and adj[i] & ~since_last[i]:
                continue
            snapshot = place(i)
            if viable_after(i) and search():
                return True
            unplace(i, snapshot)
        return False

    snapshot = place(0)
    if viable_after(0) and search():
        return Word(tuple(g.vertices[i] for i in word))
    unplace(0, snapshot)
    return None


def bounded_representation_number(
    g: Graph,
    max_k: int = DEFAULT_MAX_UNIFORMITY,
    max_vertices: int = WORD_SEARCH_MAX_VERTICES,
) -> Optional[int]:
    """Least multiplicity k <= max_k admitting a k-uniform representing word.

    None means no such word within the bound, which does not by itself
    disprove representability.
    """
    _check_cap(g, max_vertices)
    if max_k > DEFAULT_MAX_UNIFORMITY:
        raise CapExceededError(
            f"multiplicity bound {max_k} exceeds {DEFAULT_MAX_UNIFORMITY}"
        )
    for k in range(1, max_k + 1):
        if find_uniform_word(g, k) is not None:
            return k
    return None
