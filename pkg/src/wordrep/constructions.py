"""Explicit representing words for the co-bipartite families.

Each builder returns the word for one family together with (via the
companion ``*_graph`` helpers) the graph it is supposed to represent, so
callers can always re-verify the pair with ``words.represents``.  The
builders follow the construction recipes literally: the path word is a
concatenation of two fixed permutations, the cycle word is obtained from
it by one position swap, the crown word expands five letter-to-word
homomorphisms, and the fixed-clique words expand block templates in which
every neighborhood class is a block.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain, combinations
from typing import Mapping

from .graphs import (
    CoBipartitePartition,
    GeneralizedCrownParams,
    Graph,
    GraphError,
    cobipartite_from_bipartite,
    cycle_bipartite,
    generalized_crown,
    path_bipartite,
    primed,
    unprimed,
)
from .words import Word, initial_permutation, concat


# --- complements of paths and cycles --------------------------------------


def word_complement_path(n: int, even: bool = True) -> Word:
    """Representing word for the complement of the path on 2n (or 2n-1) vertices.

    The even word is the concatenation of two permutations of the vertex
    set: 1 2 1' 3 2' ... n (n-1)' n'  followed by  1' 1 2' 2 ... n' n.
    The odd variant drops every occurrence of n', the deleted endpoint.
    """
    if n < 1:
        raise GraphError("need n >= 1")
    first = [unprimed(1)]
    for i in range(2, n + 1):
        first += [unprimed(i), primed(i - 1)]
    first.append(primed(n))
    second = []
    for i in range(1, n + 1):
        second += [primed(i), unprimed(i)]
    letters = first + second
    if not even:
        letters = [x for x in letters if x != primed(n)]
    return Word(tuple(letters))


def complement_path_graph(n: int, even: bool = True) -> tuple[Graph, CoBipartitePartition]:
    g, part = cobipartite_from_bipartite(path_bipartite(n))
    if even:
        return g, part
    return g.without(primed(n)), CoBipartitePartition(part.clique_a, part.clique_b[:-1])


def word_complement_even_cycle(n: int) -> Word:
    """Representing word for the complement of the cycle on 2n vertices.

    Built from the path word w as pi(w)w, then swapping the first
    occurrence of n' with the second occurrence of 1.  The two positions
    are located explicitly and sanity-checked before swapping.
    """
    if n < 2:
        raise GraphError("need n >= 2 for a simple even cycle")
    w = word_complement_path(n, even=True)
    w1 = list(concat(initial_permutation(w), w).letters)
    first_np = w1.index(primed(n))
    second_one = [i for i, x in enumerate(w1) if x == unprimed(1)][1]
    # In pi(w)w the first permutation ends with n' and the copy of w starts
    # with 1, so the two targets must sit side by side.
    assert first_np == 2 * n - 1 and second_one == 2 * n, (first_np, second_one)
    w1[first_np], w1[second_one] = w1[second_one], w1[first_np]
    return Word(tuple(w1))


def complement_cycle_graph(n: int) -> tuple[Graph, CoBipartitePartition]:
    return cobipartite_from_bipartite(cycle_bipartite(n))


# --- complements of generalized crowns ------------------------------------


def word_generalized_crown(params: GeneralizedCrownParams) -> Word:
    """Representing word for the complement of a generalized crown.

    Expands h1(V1) h2(V2) h3(V1) h2(V2) h4(V3) h5(V4) where
    h1(x) = x, h2(x) = x'(n-k+x), h3(x) = (k+x)'x, h4(x) = x', h5(x) = xx',
    V1 = 1..n-k, V2 = 1..k, V3 = k+1..n and V4 = V2 V3.  The result is
    3-uniform.
    """
    n, k = params.n, params.k
    h1 = lambda x: [unprimed(x)]
    h2 = lambda x: [primed(x), unprimed(n - k + x)]
    h3 = lambda x: [primed(k + x), unprimed(x)]
    h4 = lambda x: [primed(x)]
    h5 = lambda x: [unprimed(x), primed(x)]
    v1 = range(1, n - k + 1)
    v2 = range(1, k + 1)
    v3 = range(k + 1, n + 1)
    v4 = chain(v2, v3)
    letters = []
    for h, block in ((h1, v1), (h2, v2), (h3, v1), (h2, v2), (h4, v3), (h5, v4)):
        for x in block:
            letters += h(x)
    return Word(tuple(letters))


def complement_crown_graph(params: GeneralizedCrownParams) -> tuple[Graph, CoBipartitePartition]:
    return cobipartite_from_bipartite(generalized_crown(params))


# --- co-bipartite graphs with one clique of size 2 or 3 -------------------
#
# The vertices of the free clique are classified by which of the fixed
# clique's vertices they are adjacent to.  A profile maps each free vertex
# to that adjacency subset; the word expands a fixed block template where
# every class appears as a block (members in ascending label order).


def _check_profile(adjacency: Mapping[str, frozenset[str]], fixed: tuple[str, ...],
                   forbidden: tuple[frozenset[str], ...]) -> None:
    fixed_set = set(fixed)
    for member, adj in adjacency.items():
        if member in fixed_set:
            raise GraphError(f"member label {member!r} collides with the fixed clique")
        if not set(adj) <= fixed_set:
            raise GraphError(f"{member!r} lists non-clique neighbors {sorted(set(adj) - fixed_set)}")
        if frozenset(adj) in forbidden:
            raise GraphError(
                f"{member!r} has forbidden neighborhood {{{', '.join(sorted(adj)) or ''}}}"
            )


@dataclass(frozen=True)
class NeighborhoodProfile2:
    """Adjacency of each free-clique vertex towards the fixed clique {1, 2}."""

    adjacency: Mapping[str, frozenset[str]]

    FIXED = ("1", "2")

    def __post_init__(self) -> None:
        _check_profile(self.adjacency, self.FIXED, forbidden=())

    def members_of(self, klass: frozenset[str]) -> list[str]:
        return sorted(m for m, adj in self.adjacency.items() if adj == klass)


@dataclass(frozen=True)
class NeighborhoodProfile3:
    """Adjacency towards the fixed clique {1, 2, 3}.

    Vertices adjacent to all three or to none are rejected: both patterns
    can produce non-word-representable graphs, and no block word is known
    for them.
    """

    adjacency: Mapping[str, frozenset[str]]

    FIXED = ("1", "2", "3")

    def __post_init__(self) -> None:
        _check_profile(
            self.adjacency, self.FIXED,
            forbidden=(frozenset({"1", "2", "3"}), frozenset()),
        )

    def members_of(self, klass: frozenset[str]) -> list[str]:
        return sorted(m for m, adj in self.adjacency.items() if adj == klass)


def _profile_graph(fixed: tuple[str, ...], adjacency: Mapping[str, frozenset[str]]
                   ) -> tuple[Graph, CoBipartitePartition]:
    members = tuple(sorted(adjacency))
    edges = []
    edges.extend(combinations(fixed, 2))
    edges.extend(combinations(members, 2))
    for m in members:
        for t in sorted(adjacency[m]):
            edges.append((m, t))
    g = Graph.from_edges(fixed + members, edges)
    return g, CoBipartitePartition(fixed, members)


def cobip_k2_graph(profile: NeighborhoodProfile2) -> tuple[Graph, CoBipartitePartition]:
    return _profile_graph(profile.FIXED, profile.adjacency)


def cobip_k3_graph(profile: NeighborhoodProfile3) -> tuple[Graph, CoBipartitePartition]:
    return _profile_graph(profile.FIXED, profile.adjacency)


# Block templates.  Strings name the fixed-clique letters; frozensets name
# the class adjacent to exactly that subset.
_K2_TEMPLATE = (
    frozenset({"1", "2"}), "1", frozenset({"2"}), "2", frozenset(),
    frozenset({"1"}), frozenset({"1", "2"}), frozenset({"2"}), frozenset(),
    "1", frozenset({"1"}), "2",
)

_K3_TEMPLATE = (
    "1", frozenset({"1", "3"}), "2", frozenset({"1"}), frozenset({"1", "2"}),
    "3", frozenset({"2"}), "1", frozenset({"2", "3"}), "2", frozenset({"3"}),
    frozenset({"1", "3"}), "3", frozenset({"1"}), frozenset({"1", "2"}), "1",
    frozenset({"2"}), frozenset({"2", "3"}), frozenset({"3"}), frozenset({"1", "3"}),
    frozenset({"1"}), "2", frozenset({"1", "2"}), frozenset({"2"}), "3",
    frozenset({"2", "3"}), frozenset({"3"}),
)


def _expand_template(template, profile) -> Word:
    letters = []
    for block in template:
        if isinstance(block, str):
            letters.append(block)
        else:
            letters.extend(profile.members_of(block))
    return Word(tuple(letters))


def word_cobip_k2(profile: NeighborhoodProfile2) -> Word:
    """Block word for a co-bipartite graph whose fixed clique is {1, 2}."""
    return _expand_template(_K2_TEMPLATE, profile)


def word_cobip_k3(profile: NeighborhoodProfile3) -> Word:
    """Block word for a co-bipartite graph whose fixed clique is {1, 2, 3}."""
    return _expand_template(_K3_TEMPLATE, profile)


# --- class-token parsing shared with the command line ---------------------


def parse_class_token(token: str, size: int) -> frozenset[str]:
    """Parse a neighborhood class like 'N12', '13', or 'N0'/'none' for empty."""
    if token in ("none", "-"):
        return frozenset()
    body = token[1:] if token[:1] in ("N", "n") else token
    if body in ("0", "", "-", "none"):
        return frozenset()
    digits = sorted(set(body))
    allowed = {str(d) for d in range(1, size + 1)}
    if not set(digits) <= allowed:
        raise GraphError(f"bad class token {token!r}")
    return frozenset(digits)


def parse_profile(text: str, size: int):
    """Parse 'a:N12,b:1,c:none' into a neighborhood profile for clique size 2 or 3."""
    adjacency: dict[str, frozenset[str]] = {}
    text = text.strip()
    if text:
        for item in text.split(","):
            if ":" not in item:
                raise GraphError(f"bad profile item {item!r}, expected label:class")
            label, token = item.split(":", 1)
            label = label.strip()
            if label in adjacency:
                raise GraphError(f"duplicate member {label!r}")
            adjacency[label] = parse_class_token(token.strip(), size)
    if size == 2:
        return NeighborhoodProfile2(adjacency)
    if size == 3:
        return NeighborhoodProfile3(adjacency)
    raise GraphError("fixed clique size must be 2 or 3")
