"""Finite posets, bounded (hat) posets and Hasse-diagram machinery.

Elements of a poset on d points are the integers 1..d.  The hat-poset
adjoins a bottom element (index 0) and a top element (index d+1); its
Hasse diagram drives everything downstream, so both the strict-order
bitmasks and the cover relation are kept on every instance.
"""
from __future__ import annotations

import json
from collections import deque
from typing import Iterable, Iterator, Sequence

from .errors import CycleInInput, NotComparable, ParseError

MAX_D = 64


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """Immutable strict partial order on {1, .., d}.

    ``above[i]`` has bit j set iff y_i < y_j; the masks must be
    transitively closed.  Covers are derived once at construction.
    """

    __slots__ = ("d", "_above", "_below", "covers", "_key")

    def __init__(self, d: int, above: Sequence[int]):
        if not 1 <= d <= MAX_D:
            raise ValueError(f"d must be in 1..{MAX_D}, got {d}")
        above = tuple(above)
        if len(above) != d + 1 or above[0] != 0:
            raise ValueError("above must have d+1 entries with index 0 unused")
        valid = ((1 << (d + 1)) - 1) & ~1  # bits 1..d
        below = [0] * (d + 1)
        for i in range(1, d + 1):
            up = above[i]
            if up & ~valid or (up >> i) & 1:
                raise ValueError(f"invalid strict-order mask for element {i}")
            for j in _bits(up):
                if (above[j] >> i) & 1:
                    raise ValueError(f"antisymmetry violated at ({i},{j})")
                if above[j] & ~up:
                    raise ValueError(f"transitivity violated at ({i},{j})")
                below[j] |= 1 << i
        self.d = d
        self._above = above
        self._below = tuple(below)
        self.covers = self._derive_covers()
        self._key: bytes | None = None

    def _derive_covers(self) -> tuple[tuple[int, int], ...]:
        covers = []
        for i in range(1, self.d + 1):
            up = self._above[i]
            skip = 0
            for j in _bits(up):
                skip |= self._above[j]
            covers.extend((i, j) for j in _bits(up & ~skip))
        covers.sort()
        return tuple(covers)

    @classmethod
    def from_cover_relations(cls, d: int, pairs: Iterable[tuple[int, int]]) -> "Poset":
        """Build the poset whose strict order is the transitive closure of pairs.

        Pairs are read as y_i < y_j; they may be covers or arbitrary
        relations (redundant pairs are absorbed, non-covers demoted).
        Raises CycleInInput if the closure would break irreflexivity.
        """
        if not 1 <= d <= MAX_D:
            raise ValueError(f"d must be in 1..{MAX_D}, got {d}")
        adj = [0] * (d + 1)
        for i, j in pairs:
            if not (1 <= i <= d and 1 <= j <= d):
                raise ValueError(f"relation ({i},{j}) out of range 1..{d}")
            if i == j:
                raise CycleInInput(f"relation ({i},{j}) makes y_{i} < itself")
            adj[i] |= 1 << j
        above = [0] * (d + 1)
        state = [0] * (d + 1)  # 0 unseen, 1 active, 2 done
        def visit(i: int) -> None:
            if state[i] == 1:
                raise CycleInInput(f"input relations contain a cycle through y_{i}")
            if state[i] == 2:
                return
            state[i] = 1
            acc = adj[i]
            for j in _bits(adj[i]):
                visit(j)
                acc |= above[j]
            if (acc >> i) & 1:
                raise CycleInInput(f"input relations contain a cycle through y_{i}")
            above[i] = acc
            state[i] = 2
        for i in range(1, d + 1):
            visit(i)
        return cls(d, above)

    # -- basic queries -------------------------------------------------

    def less(self, i: int, j: int) -> bool:
        """True iff y_i < y_j."""
        return (self._above[i] >> j) & 1 == 1

    def above_mask(self, i: int) -> int:
        return self._above[i]

    def below_mask(self, i: int) -> int:
        return self._below[i]

    @property
    def elements(self) -> range:
        return range(1, self.d + 1)

    @property
    def minimal_elements(self) -> tuple[int, ...]:
        return tuple(i for i in self.elements if self._below[i] == 0)

    @property
    def maximal_elements(self) -> tuple[int, ...]:
        return tuple(i for i in self.elements if self._above[i] == 0)

    # -- derived posets ------------------------------------------------

    def dual(self) -> "Poset":
        """The poset with the order relation reversed."""
        return Poset(self.d, (0,) + self._below[1:])

    def relabel(self, perm: Sequence[int]) -> "Poset":
        """Apply a relabeling; perm[i] is the new label of old element i.

        perm must be a permutation of 1..d presented with a dummy entry
        at index 0 (so len(perm) == d+1).
        """
        d = self.d
        if len(perm) != d + 1 or sorted(perm[1:]) != list(range(1, d + 1)):
            raise ValueError("perm must map 1..d onto 1..d")
        above = [0] * (d + 1)
        for i in range(1, d + 1):
            m = 0
            for j in _bits(self._above[i]):
                m |= 1 << perm[j]
            above[perm[i]] = m
        return Poset(d, above)

    def hat(self) -> "HatPoset":
        """Adjoin a fresh bottom (0) and top (d+1)."""
        return HatPoset(self)

    def canonical_key(self) -> bytes:
        """Total-order-comparable encoding of the isomorphism class."""
        if self._key is None:
            from .canonical import canonical_key
            self._key = canonical_key(self)
        return self._key

    # -- structure tests -----------------------------------------------

    def is_pure(self) -> bool:
        """True iff all bottom-to-top maximal chains have equal length.

        Equivalent to the Hasse diagram of the bounded poset admitting a
        rank labeling that increases by exactly 1 along every edge.
        """
        h = self.hat()
        rank: dict[int, int] = {0: 0}
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for y in h.up[x]:
                r = rank[x] + 1
                if y in rank:
                    if rank[y] != r:
                        return False
                else:
                    rank[y] = r
                    queue.append(y)
        return True

    def is_disjoint_union_of_chains(self) -> bool:
        """True iff every connected component of the Hasse diagram is a chain."""
        up = [0] * (self.d + 1)
        down = [0] * (self.d + 1)
        for i, j in self.covers:
            up[i] += 1
            down[j] += 1
        return all(up[i] <= 1 and down[i] <= 1 for i in self.elements)

    # -- dunder --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Poset)
            and self.d == other.d
            and self._above == other._above
        )

    def __hash__(self) -> int:
        return hash((self.d, self._above))

    def __reduce__(self):
        return (Poset, (self.d, self._above))

    def __repr__(self) -> str:
        rel = ", ".join(f"{i}<{j}" for i, j in self.covers)
        return f"Poset(d={self.d}, covers=[{rel}])"


class HatPoset:
    """A poset with adjoined bottom 0 and top d+1, plus its Hasse diagram.

    Edges are stored as (lower, upper) pairs sorted lexicographically;
    distance tables are filled lazily per source element and only read
    afterwards, so instances are safe to share across workers.
    """

    __slots__ = ("base", "d", "top", "edges", "_edge_set", "up", "down",
                 "neighbors", "_dist", "_chains")

    def __init__(self, base: Poset):
        d = base.d
        self.base = base
        self.d = d
        self.top = d + 1
        edges = [(0, m) for m in base.minimal_elements]
        edges.extend(base.covers)
        edges.extend((m, d + 1) for m in base.maximal_elements)
        edges.sort()
        self.edges = tuple(edges)
        self._edge_set = frozenset(edges)
        up: list[list[int]] = [[] for _ in range(d + 2)]
        down: list[list[int]] = [[] for _ in range(d + 2)]
        for lo, hi in edges:
            up[lo].append(hi)
            down[hi].append(lo)
        self.up = tuple(tuple(sorted(s)) for s in up)
        self.down = tuple(tuple(sorted(s)) for s in down)
        self.neighbors = tuple(
            tuple(sorted(self.up[x] + self.down[x])) for x in range(d + 2)
        )
        self._dist: dict[int, dict[int, int]] = {}
        self._chains: tuple[tuple[int, ...], ...] | None = None

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def less(self, i: int, j: int) -> bool:
        """Strict order of the bounded poset on indices 0..d+1."""
        if i == j:
            return False
        if i == 0:
            return True
        if j == 0:
            return False
        if j == self.top:
            return True
        if i == self.top:
            return False
        return self.base.less(i, j)

    def is_edge(self, i: int, j: int) -> bool:
        return (i, j) in self._edge_set or (j, i) in self._edge_set

    def orient_edge(self, i: int, j: int) -> tuple[int, int]:
        """Return the edge as (lower, upper)."""
        if (i, j) in self._edge_set:
            return (i, j)
        if (j, i) in self._edge_set:
            return (j, i)
        raise KeyError((i, j))

    def dist(self, y: int, z: int) -> int:
        """Length of the shortest saturated chain from y up to z.

        Computed by breadth-first search along upward cover edges and
        memoized per source.  Raises NotComparable unless y < z.
        """
        if not self.less(y, z):
            raise NotComparable(f"{y} < {z} does not hold in the bounded poset")
        table = self._dist.get(y)
        if table is None:
            table = {y: 0}
            queue = deque([y])
            while queue:
                x = queue.popleft()
                for w in self.up[x]:
                    if w not in table:
                        table[w] = table[x] + 1
                        queue.append(w)
            self._dist[y] = table
        return table[z]

    def maximal_chains(self) -> tuple[tuple[int, ...], ...]:
        """All saturated chains from 0 to d+1, in lexicographic order."""
        if self._chains is None:
            chains: list[tuple[int, ...]] = []
            stack = [0]
            def go(x: int) -> None:
                if x == self.top:
                    chains.append(tuple(stack))
                    return
                for y in self.up[x]:
                    stack.append(y)
                    go(y)
                    stack.pop()
            go(0)
            self._chains = tuple(chains)
        return self._chains

    def __repr__(self) -> str:
        return f"HatPoset(d={self.d}, edges={list(self.edges)})"


# -- file formats -------------------------------------------------------

def poset_to_text(p: Poset) -> str:
    """Serialize as the plain text format: d, then one cover pair per line."""
    lines = [str(p.d)]
    lines.extend(f"{i} {j}" for i, j in p.covers)
    return "\n".join(lines) + "\n"


def poset_from_text(text: str) -> Poset:
    """Parse either the plain text format or the JSON variant.

    Text: first non-comment line is d, each further line "i j" meaning
    y_i < y_j.  JSON: {"d": 3, "relations": [[1, 2]]}.
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"invalid JSON poset: {e}") from e
        if not isinstance(obj, dict) or "d" not in obj:
            raise ParseError('JSON poset must be an object with a "d" field')
        d = obj["d"]
        rels = obj.get("relations", [])
        if not isinstance(d, int):
            raise ParseError('"d" must be an integer')
        pairs = []
        for rel in rels:
            if not (isinstance(rel, list) and len(rel) == 2
                    and all(isinstance(v, int) for v in rel)):
                raise ParseError(f"bad relation entry {rel!r}")
            pairs.append((rel[0], rel[1]))
        return _build_checked(d, pairs, "json")
    d = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if d is None:
            if len(parts) != 1 or not parts[0].lstrip("-").isdigit():
                raise ParseError(f"line {lineno}: expected element count, got {raw!r}")
            d = int(parts[0])
            continue
        if len(parts) != 2 or not all(t.lstrip("-").isdigit() for t in parts):
            raise ParseError(f"line {lineno}: expected two integers, got {raw!r}")
        pairs.append((int(parts[0]), int(parts[1])))
    if d is None:
        raise ParseError("empty poset file")
    return _build_checked(d, pairs, "file")


def _build_checked(d: int, pairs: list[tuple[int, int]], what: str) -> Poset:
    try:
        return Poset.from_cover_relations(d, pairs)
    except ValueError as e:
        raise ParseError(f"invalid poset {what}: {e}") from e


def load_poset(path) -> Poset:
    with open(path, "r", encoding="utf-8") as fh:
        return poset_from_text(fh.read())


def save_poset(p: Poset, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(poset_to_text(p))
