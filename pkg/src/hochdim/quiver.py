"""Quivers, paths, cyclic words and monomial algebras kQ/I.

Paths compose left to right: ``a_1 a_2 ... a_m`` requires
``target(a_i) == source(a_{i+1})``.  Vertices and arrows are addressed
internally by their declaration index; names are kept only for display.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .errors import AlgebraFormatError, InfiniteDimensionalError

Word = tuple[int, ...]


class Arrow(NamedTuple):
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Path:
    """A path in a quiver: a vertex (length 0) or a composable arrow word."""

    source: int
    target: int
    arrows: Word = ()

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    def sort_key(self):
        return (len(self.arrows), self.arrows, self.source)


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise AlgebraFormatError("duplicate vertex id")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise AlgebraFormatError("duplicate arrow id")
        nv = len(self.vertices)
        for a in self.arrows:
            if not (0 <= a.source < nv and 0 <= a.target < nv):
                raise AlgebraFormatError(f"arrow {a.name!r} has an undeclared endpoint")

    @classmethod
    def build(cls, vertices: Iterable, arrows: Iterable[tuple]) -> "Quiver":
        """Build from vertex ids and ``(name, source_id, target_id)`` triples."""
        vertices = tuple(str(v) for v in vertices)
        index = {v: i for i, v in enumerate(vertices)}
        out = []
        for name, s, t in arrows:
            s, t = str(s), str(t)
            if s not in index or t not in index:
                raise AlgebraFormatError(f"arrow {name!r} references an undeclared vertex")
            out.append(Arrow(str(name), index[s], index[t]))
        return cls(vertices, tuple(out))

    @cached_property
    def _arrow_index(self) -> dict[str, int]:
        return {a.name: i for i, a in enumerate(self.arrows)}

    @cached_property
    def out_arrows(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in self.vertices]
        for i, a in enumerate(self.arrows):
            out[a.source].append(i)
        return tuple(tuple(x) for x in out)

    def arrow_index(self, name: str) -> int:
        try:
            return self._arrow_index[name]
        except KeyError:
            raise AlgebraFormatError(f"unknown arrow {name!r}") from None

    def trivial(self, v: int) -> Path:
        return Path(v, v, ())

    def is_composable(self, word: Sequence[int]) -> bool:
        arrows = self.arrows
        return all(arrows[a].target == arrows[b].source for a, b in zip(word, word[1:]))

    def path(self, word: Sequence[int]) -> Path:
        word = tuple(word)
        if not word:
            raise ValueError("use trivial() for length-0 paths")
        if not self.is_composable(word):
            raise AlgebraFormatError("arrows are not composable: " + self.word_str(word))
        return Path(self.arrows[word[0]].source, self.arrows[word[-1]].target, word)

    def is_closed(self, word: Sequence[int]) -> bool:
        return (
            len(word) > 0
            and self.is_composable(word)
            and self.arrows[word[-1]].target == self.arrows[word[0]].source
        )

    def cycle(self, word: Sequence[int]) -> "CycleWord":
        """The canonical cycle word of the rotation orbit of ``word``."""
        word = tuple(word)
        if not self.is_closed(word):
            raise ValueError("not a closed path: " + self.word_str(word))
        canon = canonical_rotation(word)
        return CycleWord(canon, tuple(self.arrows[a].source for a in canon))

    def word_str(self, word: Sequence[int]) -> str:
        return " ".join(self.arrows[a].name for a in word)

    def path_str(self, p: Path) -> str:
        if p.is_trivial:
            return f"e_{self.vertices[p.source]}"
        return self.word_str(p.arrows)


def canonical_rotation(word: Word) -> Word:
    """Lexicographically least rotation (by arrow declaration index)."""
    if not word:
        return word
    return min(word[i:] + word[:i] for i in range(len(word)))


def is_primitive(word: Word) -> bool:
    """True iff ``word`` is not ``w^m`` for any ``m >= 2``."""
    q = len(word)
    for d in range(1, q):
        if q % d == 0 and word == word[:d] * (q // d):
            return False
    return True


@dataclass(frozen=True, order=True)
class CycleWord:
    """Canonical representative of a rotation orbit of closed paths."""

    arrows: Word
    starts: tuple[int, ...] = field(compare=False)

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def basic(self) -> bool:
        return len(set(self.starts)) == len(self.starts)

    @property
    def proper(self) -> bool:
        return is_primitive(self.arrows)


class CycleClass(NamedTuple):
    basic: bool
    proper: bool


def classify_cycle(w: CycleWord) -> CycleClass:
    return CycleClass(w.basic, w.proper)


def cycle_orbits(quiver: Quiver, q: int) -> tuple[list[CycleWord], int]:
    """All rotation orbits of length-``q`` cycles, ignoring relations.

    Returns the canonical representatives (sorted) and their count ``a_q``.
    """
    if q < 1:
        raise ValueError("cycle length must be >= 1")
    arrows = quiver.arrows
    out_arrows = quiver.out_arrows
    found: list[CycleWord] = []
    # A canonical word starts with its smallest arrow, so every later arrow
    # index is >= the first one.
    for first, a in enumerate(arrows):
        start = a.source
        stack: list[tuple[Word, int]] = [((first,), a.target)]
        while stack:
            word, v = stack.pop()
            if len(word) == q:
                if v == start and canonical_rotation(word) == word:
                    found.append(CycleWord(word, tuple(arrows[b].source for b in word)))
                continue
            for b in out_arrows[v]:
                if b >= first:
                    stack.append((word + (b,), arrows[b].target))
    found.sort()
    return found, len(found)


def proper_cycle_orbits(quiver: Quiver, r: int) -> tuple[list[CycleWord], int]:
    """Rotation orbits of proper (primitive) cycles of length ``r``: ``b_r``."""
    orbits, _ = cycle_orbits(quiver, r)
    proper = [w for w in orbits if w.proper]
    return proper, len(proper)


def shortest_cycle(quiver: Quiver) -> CycleWord | None:
    """A cycle of minimal length, or None when the quiver is acyclic."""
    arrows = quiver.arrows
    best: Word | None = None
    for v in range(len(quiver.vertices)):
        # BFS for the shortest closed path through v
        parent: dict[int, tuple[int, int]] = {}
        seen = {v}
        queue = deque([v])
        closing = None
        while queue and closing is None:
            u = queue.popleft()
            for b in quiver.out_arrows[u]:
                t = arrows[b].target
                if t == v:
                    closing = (u, b)
                    break
                if t not in seen:
                    seen.add(t)
                    parent[t] = (u, b)
                    queue.append(t)
        if closing is None:
            continue
        u, b = closing
        word = [b]
        while u != v:
            u, b = parent[u]
            word.append(b)
        word.reverse()
        word = canonical_rotation(tuple(word))
        if best is None or (len(word), word) < (len(best), best):
            best = word
    return None if best is None else quiver.cycle(best)


class FiniteDimResult(NamedTuple):
    finite: bool
    witness: CycleWord | None


def finite_dimensional(
    quiver: Quiver, relations: Iterable[Sequence[int]], truncation: int | None = None
) -> FiniteDimResult:
    """Decide whether kQ/I is finite-dimensional for a monomial ideal I.

    Runs the forbidden-factor automaton whose states are pairs
    (vertex, longest suffix of the path read so far that is a proper prefix
    of some relation).  The algebra is infinite-dimensional iff a live state
    lies on a cycle; the arrows read around that cycle form a closed path all
    of whose powers are nonzero.
    """
    if truncation is not None:
        return FiniteDimResult(True, None)
    rels = {tuple(r) for r in relations}
    prefixes = {r[:i] for r in rels for i in range(len(r))}
    lengths = sorted({len(r) for r in rels})
    arrows = quiver.arrows

    def step(state, a):
        v, s = state
        w = s + (a,)
        for m in lengths:
            if m <= len(w) and w[-m:] in rels:
                return None
        for i in range(len(w) + 1):
            if w[i:] in prefixes:
                return (arrows[a].target, w[i:])
        return (arrows[a].target, ())

    colour: dict = {}
    for v0 in range(len(quiver.vertices)):
        root = (v0, ())
        if root in colour:
            continue
        colour[root] = 1
        # stack of (state, iterator over out arrows, arrow used to enter)
        stack = [(root, iter(quiver.out_arrows[v0]), None)]
        while stack:
            state, it, _ = stack[-1]
            for a in it:
                nxt = step(state, a)
                if nxt is None:
                    continue
                c = colour.get(nxt, 0)
                if c == 1:
                    word = [a]
                    for st, _, entered in reversed(stack):
                        if st == nxt:
                            break
                        word.append(entered)
                    word.reverse()
                    return FiniteDimResult(False, quiver.cycle(word))
                if c == 0:
                    colour[nxt] = 1
                    stack.append((nxt, iter(quiver.out_arrows[nxt[0]]), a))
                    break
            else:
                colour[state] = 2
                stack.pop()
    return FiniteDimResult(True, None)


def _reduce_relations(relations: Iterable[Word]) -> tuple[Word, ...]:
    rels = sorted(set(relations), key=lambda r: (len(r), r))
    kept: list[Word] = []
    for r in rels:
        if not any(_is_factor(k, r) for k in kept):
            kept.append(r)
    return tuple(kept)


def _is_factor(small: Word, big: Word) -> bool:
    m = len(small)
    return any(big[i : i + m] == small for i in range(len(big) - m + 1))


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


@dataclass(frozen=True)
class MonomialAlgebra:
    """kQ/I with I generated by paths of length >= 2, or by all paths of
    length ``truncation`` (the truncated algebra kQ/k^nQ)."""

    quiver: Quiver
    relations: tuple[Word, ...] = ()
    truncation: int | None = None
    char: int = 0

    def __post_init__(self):
        q = self.quiver
        rels = []
        for r in self.relations:
            r = tuple(r)
            if len(r) < 2:
                raise AlgebraFormatError(
                    "relations must have length >= 2: " + q.word_str(r) if r else "empty relation"
                )
            if not q.is_composable(r):
                raise AlgebraFormatError("relation is not a path: " + q.word_str(r))
            if self.truncation is None or len(r) < self.truncation:
                rels.append(r)
        if self.truncation is not None and self.truncation < 2:
            raise AlgebraFormatError("truncation index must be >= 2")
        if self.char != 0 and not _is_prime(self.char):
            raise AlgebraFormatError(f"field characteristic must be 0 or prime, got {self.char}")
        object.__setattr__(self, "relations", _reduce_relations(rels))
        fd = finite_dimensional(q, self.relations, self.truncation)
        if not fd.finite:
            raise InfiniteDimensionalError(
                "algebra is infinite-dimensional; every power of "
                f"'{q.word_str(fd.witness.arrows)}' is nonzero",
                fd.witness,
            )

    @classmethod
    def from_names(cls, quiver: Quiver, relations=(), truncation=None, char=0):
        """Relations given as sequences of arrow names (or space-separated strings)."""
        words = []
        for r in relations:
            names = r.split() if isinstance(r, str) else r
            words.append(tuple(quiver.arrow_index(n) for n in names))
        return cls(quiver, tuple(words), truncation, char)

    @property
    def is_truncated(self) -> bool:
        return self.truncation is not None and not self.relations

    @cached_property
    def _rel_set(self) -> frozenset:
        return frozenset(self.relations)

    @cached_property
    def _rel_lengths(self) -> tuple[int, ...]:
        return tuple(sorted({len(r) for r in self.relations}))

    def is_zero_word(self, word: Sequence[int]) -> bool:
        """True iff the (composable) word contains a relation as a factor."""
        word = tuple(word)
        if self.truncation is not None and len(word) >= self.truncation:
            return True
        rels = self._rel_set
        n = len(word)
        for m in self._rel_lengths:
            if m > n:
                break
            for i in range(n - m + 1):
                if word[i : i + m] in rels:
                    return True
        return False

    def multiply(self, p: Path, r: Path) -> Path | None:
        if p.target != r.source:
            return None
        if p.is_trivial:
            return r
        if r.is_trivial:
            return p
        word = p.arrows + r.arrows
        if self.is_zero_word(word):
            return None
        return Path(p.source, r.target, word)

    @cached_property
    def basis(self) -> tuple[Path, ...]:
        return tuple(self.nonzero_paths())

    def nonzero_paths(self, max_len: int | None = None) -> list[Path]:
        """Nonzero paths grouped by length, then by arrow word."""
        q = self.quiver
        layer = [q.trivial(v) for v in range(len(q.vertices))]
        out = list(layer)
        length = 0
        while layer and (max_len is None or length < max_len):
            length += 1
            nxt = []
            for p in layer:
                for a in q.out_arrows[p.target]:
                    word = p.arrows + (a,)
                    if not self.is_zero_word(word):
                        nxt.append(Path(p.source, q.arrows[a].target, word))
            nxt.sort(key=Path.sort_key)
            out.extend(nxt)
            layer = nxt
        return out

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @cached_property
    def max_length(self) -> int:
        """L: the length of the longest nonzero path."""
        return max(p.length for p in self.basis)

    @cached_property
    def radical_paths_from(self) -> tuple[tuple[Path, ...], ...]:
        """Nonzero paths of length >= 1, indexed by source vertex."""
        out: list[list[Path]] = [[] for _ in self.quiver.vertices]
        for p in self.basis:
            if not p.is_trivial:
                out[p.source].append(p)
        return tuple(tuple(x) for x in out)

    @property
    def num_vertices(self) -> int:
        return len(self.quiver.vertices)

    def with_char(self, char: int) -> "MonomialAlgebra":
        return MonomialAlgebra(self.quiver, self.relations, self.truncation, char)

    def path_str(self, p: Path) -> str:
        return self.quiver.path_str(p)


def nonzero_paths(algebra: MonomialAlgebra, max_len: int | None = None) -> list[Path]:
    return algebra.nonzero_paths(max_len)
