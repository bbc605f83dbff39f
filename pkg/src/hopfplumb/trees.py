"""Finite trees, the named Coxeter-Dynkin families, and their classification.

Vertices are labelled ``1..n``.  Only the abstract tree matters: the cyclic
order of edges at a vertex never enters any computed invariant.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Optional

from .exact_algebra import int_matrix, symmetric_signature


class TreeError(ValueError):
    pass


class ParseError(TreeError):
    pass


class NotATree(TreeError):
    pass


class BadLabel(TreeError):
    pass


class InvalidFamilyParameter(TreeError):
    pass


class NotHyperbolic(ValueError):
    pass


@dataclass(frozen=True)
class Tree:
    n: int
    edges: frozenset

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise BadLabel(f"vertex count must be a positive integer, got {self.n!r}")
        norm = set()
        for e in self.edges:
            i, j = sorted(int(x) for x in e)
            if i == j:
                raise NotATree(f"self-loop at vertex {i}")
            if not (1 <= i and j <= self.n):
                raise BadLabel(f"edge {{{i}, {j}}} uses a label outside 1..{self.n}")
            if (i, j) in norm:
                raise NotATree(f"duplicate edge {{{i}, {j}}}")
            norm.add((i, j))
        object.__setattr__(self, "edges", frozenset(norm))
        if len(norm) != self.n - 1:
            raise NotATree(f"{len(norm)} edges on {self.n} vertices (a tree needs {self.n - 1})")
        if len(self.component(1)) != self.n:
            raise NotATree("graph is disconnected")

    @classmethod
    def from_edges(cls, n: int, edges) -> "Tree":
        return cls(n, frozenset(tuple(e) for e in edges))

    def neighbors(self, v: int) -> list[int]:
        return sorted([j for i, j in self.edges if i == v] + [i for i, j in self.edges if j == v])

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def component(self, start: int, allowed=None) -> set[int]:
        seen = {start}
        stack = [start]
        adj = _adjacency(self.n, self.edges)
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen and (allowed is None or w in allowed):
                    seen.add(w)
                    stack.append(w)
        return seen

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def relabel(self, perm: dict[int, int]) -> "Tree":
        """Image of the tree under the vertex bijection ``perm``."""
        return Tree.from_edges(self.n, [(perm[i], perm[j]) for i, j in self.edges])

    def induced(self, vertices) -> tuple["Tree", tuple[int, ...]]:
        """Induced subtree on ``vertices`` (sorted), relabelled 1..k in that order."""
        verts = tuple(sorted(vertices))
        index = {v: k + 1 for k, v in enumerate(verts)}
        edges = [(index[i], index[j]) for i, j in self.edges if i in index and j in index]
        return Tree.from_edges(len(verts), edges), verts

    def to_edge_list(self) -> str:
        lines = [str(self.n)] + [f"{i} {j}" for i, j in self.sorted_edges()]
        return "\n".join(lines) + "\n"


def _adjacency(n, edges):
    adj = {v: [] for v in range(1, n + 1)}
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    return adj


# Named families ------------------------------------------------------------

FAMILIES = ("A", "D", "E6", "E7", "E8", "~D", "~E6", "~E7", "~E8")
SPHERICAL_FAMILIES = ("A", "D", "E6", "E7", "E8")
AFFINE_FAMILIES = ("~D", "~E6", "~E7", "~E8")

_E6 = [(1, 2), (1, 3), (1, 4), (3, 5), (4, 6)]
_FIXED = {
    "E6": (6, _E6),
    "E7": (7, _E6 + [(6, 7)]),
    "E8": (8, _E6 + [(6, 7), (7, 8)]),
    "~E6": (7, _E6 + [(2, 7)]),
    "~E7": (8, [(1, 2), (1, 3), (1, 4), (3, 5), (4, 6), (5, 8), (6, 7)]),
    "~E8": (9, [(1, 2), (1, 3), (3, 5), (1, 4), (4, 6), (6, 7), (7, 8), (8, 9)]),
}


def family_size(family: str, n: Optional[int] = None) -> int:
    """Number of vertices of the named tree."""
    if family in _FIXED:
        return _FIXED[family][0]
    if family == "~D":
        return n + 1 if n >= 5 else 5
    return n


def named_tree(family: str, n: Optional[int] = None) -> Tree:
    """The named Coxeter-Dynkin tree with the standard vertex numbering.

    ``n`` is the family index (``A_n``, ``D_n``, ``~D_n``); it is ignored for
    ``E6``..``~E8``.  ``~D_4`` has 5 vertices, ``~D_n`` for n >= 5 has n + 1.
    """
    if family in _FIXED:
        size, edges = _FIXED[family]
        return Tree.from_edges(size, edges)
    if family not in FAMILIES:
        raise InvalidFamilyParameter(f"unknown family {family!r}")
    if not isinstance(n, int):
        raise InvalidFamilyParameter(f"family {family} needs an integer index")
    if family == "A":
        if n < 1:
            raise InvalidFamilyParameter("A_n needs n >= 1")
        return Tree.from_edges(n, [(i, i + 1) for i in range(1, n)])
    if family == "D":
        if n < 4:
            raise InvalidFamilyParameter("D_n needs n >= 4")
        return Tree.from_edges(n, [(1, 2), (1, 3), (1, 4)] + [(i, i + 1) for i in range(4, n)])
    if n < 4:
        raise InvalidFamilyParameter("~D_n needs n >= 4")
    if n == 4:
        return Tree.from_edges(5, [(1, 2), (1, 3), (1, 4), (1, 5)])
    edges = [(1, 2), (1, 3), (1, 4)] + [(i, i + 1) for i in range(4, n - 1)] + [(n - 1, n), (n - 1, n + 1)]
    return Tree.from_edges(n + 1, edges)


_TOKEN = re.compile(r"^(~?)([ADE])(\d+)$")


def parse_family_token(token: str) -> tuple[str, Optional[int]]:
    """``"A5"`` -> ``("A", 5)``, ``"~E7"`` -> ``("~E7", None)``."""
    m = _TOKEN.match(token.strip())
    if not m:
        raise InvalidFamilyParameter(f"bad family token {token!r}")
    tilde, letter, num = m.groups()
    num = int(num)
    if letter == "E":
        family = f"{tilde}E{num}"
        if family not in _FIXED:
            raise InvalidFamilyParameter(f"no family {token!r}")
        return family, None
    family = tilde + letter
    named_tree(family, num)  # validates the index
    return family, num


def family_token(family: str, n: Optional[int]) -> str:
    return family if family.endswith(("6", "7", "8")) else f"{family}{n}"


# Parsing -------------------------------------------------------------------

def parse_tree(text: str) -> Tree:
    """Parse the edge-list format: first line ``n``, then one ``i j`` per line.

    ``#`` starts a comment; blank lines are skipped; CRLF is accepted.
    """
    lines = []
    for lineno, raw in enumerate(text.replace("\r\n", "\n").split("\n"), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((lineno, body))
    if not lines:
        raise ParseError("empty input")
    lineno, head = lines[0]
    if not re.fullmatch(r"\d+", head):
        raise ParseError(f"line {lineno}: expected vertex count, got {head!r}")
    n = int(head)
    if n < 1:
        raise BadLabel("vertex count must be at least 1")
    edges = []
    for lineno, body in lines[1:]:
        parts = body.split()
        if len(parts) != 2 or not all(re.fullmatch(r"-?\d+", p) for p in parts):
            raise ParseError(f"line {lineno}: expected 'i j', got {body!r}")
        i, j = (int(p) for p in parts)
        if not (1 <= i <= n and 1 <= j <= n):
            raise BadLabel(f"line {lineno}: labels must lie in 1..{n}")
        if i == j:
            raise NotATree(f"line {lineno}: self-loop")
        if i > j:
            raise ParseError(f"line {lineno}: edges must be written 'i j' with i < j")
        edges.append((i, j))
    if len(set(edges)) != len(edges):
        raise NotATree("duplicate edge")
    return Tree(n, frozenset(edges))


# Classification ------------------------------------------------------------

class Kind(str, Enum):
    SPHERICAL = "spherical"
    AFFINE = "affine"
    HYPERBOLIC = "hyperbolic"


@dataclass(frozen=True)
class TreeClass:
    kind: Kind
    family: Optional[str] = None
    param: Optional[int] = None

    def __str__(self):
        if self.family is None:
            return self.kind.value
        letter = self.family.lstrip("~")[0]
        index = self.param if self.param is not None else int(self.family[-1])
        suffix = "~" if self.family.startswith("~") else ""
        return f"{self.kind.value} ({letter}{suffix}, n={index})"


def cartan_matrix(t: Tree):
    """A_T: 2 on the diagonal, -1 for adjacent vertices, 0 elsewhere."""
    rows = [[2 if i == j else 0 for j in range(t.n)] for i in range(t.n)]
    for i, j in t.edges:
        rows[i - 1][j - 1] = rows[j - 1][i - 1] = -1
    return int_matrix(rows)


def _arms(t: Tree, center: int) -> list[list[int]]:
    """Paths hanging off ``center``, each listed outward; assumes they are paths."""
    arms = []
    for first in t.neighbors(center):
        arm, prev, cur = [first], center, first
        while True:
            nxt = [w for w in t.neighbors(cur) if w != prev]
            if len(nxt) != 1:
                break
            prev, cur = cur, nxt[0]
            arm.append(cur)
        arms.append(arm)
    return sorted(arms, key=lambda a: (len(a), a))


def _path_order(t: Tree) -> list[int]:
    start = min(v for v in range(1, t.n + 1) if t.degree(v) <= 1)
    order, prev = [start], None
    while len(order) < t.n:
        nxt = [w for w in t.neighbors(order[-1]) if w != prev]
        prev = order[-1]
        order.append(nxt[0])
    return order


_STAR_FAMILIES = {
    (1, 2, 2): ("E6", None),
    (1, 2, 3): ("E7", None),
    (1, 2, 4): ("E8", None),
    (2, 2, 2): ("~E6", None),
    (1, 3, 3): ("~E7", None),
    (1, 2, 5): ("~E8", None),
    (1, 1, 1, 1): ("~D", 4),
}


def recognize_family(t: Tree) -> Optional[tuple[str, Optional[int]]]:
    """Match degree sequence and arm lengths against the named families."""
    branch = [v for v in range(1, t.n + 1) if t.degree(v) >= 3]
    if not branch:
        return ("A", t.n)
    if len(branch) == 1:
        arms = tuple(len(a) for a in _arms(t, branch[0]))
        if len(arms) == 3 and arms[:2] == (1, 1):
            return ("D", t.n)
        return _STAR_FAMILIES.get(arms)
    if len(branch) == 2 and all(t.degree(v) == 3 for v in branch):
        leaves = [sum(t.degree(w) == 1 for w in t.neighbors(v)) for v in branch]
        if leaves == [2, 2]:
            return ("~D", t.n - 1)
    return None


def classify_tree(t: Tree) -> TreeClass:
    """Spherical / affine / hyperbolic from the exact inertia of A_T."""
    pos, neg, null = symmetric_signature(cartan_matrix(t))
    if neg == 0 and null == 0:
        kind = Kind.SPHERICAL
    elif neg == 0 and null == 1:
        kind = Kind.AFFINE
    else:
        return TreeClass(Kind.HYPERBOLIC)
    fam = recognize_family(t)
    if fam is None:
        raise AssertionError(f"{kind.value} tree not matched to a named family: {t.sorted_edges()}")
    family, param = fam
    expected = Kind.SPHERICAL if family in SPHERICAL_FAMILIES else Kind.AFFINE
    if expected != kind:
        raise AssertionError(f"definiteness says {kind.value} but shape says {family}")
    return TreeClass(kind, family, param)


def canonical_numbering(t: Tree) -> Optional[tuple[Tree, dict[int, int]]]:
    """Relabel a tree that matches a named family to that family's numbering.

    Returns ``(named, perm)`` where ``perm`` maps each vertex of ``t`` to its
    label in ``named``, or None when ``t`` is hyperbolic.
    """
    fam = recognize_family(t)
    if fam is None:
        return None
    family, param = fam
    target = named_tree(family, param)
    if family == "A":
        src, dst = _path_order(t), _path_order(target)
        perm = dict(zip(src, dst))
    elif family == "~D" and param >= 5:
        perm = dict(zip(_double_fork_order(t), _double_fork_order(target)))
    else:
        c_src = next(v for v in range(1, t.n + 1) if t.degree(v) >= 3)
        c_dst = next(v for v in range(1, target.n + 1) if target.degree(v) >= 3)
        perm = {c_src: c_dst}
        for a, b in zip(_arms(t, c_src), _arms(target, c_dst)):
            perm.update(zip(a, b))
    relabelled = t.relabel(perm)
    assert relabelled == target
    return target, perm


def _double_fork_order(t: Tree) -> list[int]:
    # first fork, its two leaves, the connecting path, the two far leaves
    b1, b2 = sorted(v for v in range(1, t.n + 1) if t.degree(v) == 3)
    near = [w for w in t.neighbors(b1) if t.degree(w) == 1]
    far = [w for w in t.neighbors(b2) if t.degree(w) == 1]
    return [b1] + near + _between(t, b1, b2)[1:] + far


def _between(t: Tree, a: int, b: int) -> list[int]:
    parent = {a: None}
    stack = [a]
    while stack:
        v = stack.pop()
        for w in t.neighbors(v):
            if w not in parent:
                parent[w] = v
                stack.append(w)
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    return path[::-1]


# Paths and subtrees --------------------------------------------------------

def enumerate_paths(t: Tree) -> list[tuple[int, ...]]:
    """All simple paths (at least one vertex), each once, smaller endpoint first."""
    paths = []
    for a in range(1, t.n + 1):
        for b in range(a, t.n + 1):
            paths.append(tuple(_between(t, a, b)))
    return sorted(paths, key=lambda p: (len(p), p))


@dataclass(frozen=True)
class VertexMap:
    """Injective map from the vertices of a subtree into a host tree.

    ``images[k - 1]`` is the host vertex of subtree vertex ``k``.
    """

    images: tuple[int, ...]
    host_n: int

    def __call__(self, v: int) -> int:
        return self.images[v - 1]

    def push(self, x) -> tuple[int, ...]:
        """Zero-extend a subtree homology vector into host coordinates."""
        if len(x) != len(self.images):
            raise ValueError("vector length does not match the subtree")
        out = [0] * self.host_n
        for k, c in enumerate(x):
            out[self.images[k] - 1] = int(c)
        return tuple(out)


def find_affine_subtree(t: Tree) -> tuple[Tree, VertexMap]:
    """Smallest induced affine subtree of a hyperbolic tree.

    Ties go to the lexicographically least vertex set.  The subtree comes
    back in its family's standard numbering; the map records where each of
    its vertices sits in ``t``.
    """
    if classify_tree(t).kind != Kind.HYPERBOLIC:
        raise NotHyperbolic("tree is not hyperbolic")
    for size in range(5, t.n + 1):
        for verts in combinations(range(1, t.n + 1), size):
            vs = set(verts)
            if len(t.component(verts[0], vs)) != size:
                continue
            sub, order = t.induced(verts)
            fam = recognize_family(sub)
            if fam is None or fam[0] not in AFFINE_FAMILIES:
                continue
            if classify_tree(sub).kind != Kind.AFFINE:
                continue
            named, perm = canonical_numbering(sub)
            inv = {new: old for old, new in perm.items()}
            images = tuple(order[inv[k] - 1] for k in range(1, named.n + 1))
            return named, VertexMap(images, t.n)
    raise AssertionError("hyperbolic tree without an affine subtree")
