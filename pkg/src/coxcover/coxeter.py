"""Finite Coxeter systems with full element enumeration and Cayley tables.

Conventions, fixed once and used everywhere:

- Symmetric groups act on {1..n} and elements are stored in one-line
  notation as tuples, so ``(2, 1, 3, 4)`` is the permutation written 2134.
- Products compose on the left: ``(u * v)(k) = u(v(k))``.  Consequently
  right multiplication by the generator with 0-based index ``s`` swaps
  positions s+1 and s+2 of the one-line form, and left multiplication
  swaps the values s+1 and s+2.
- Dihedral and matrix-defined groups store each element as its canonical
  reduced word, the lexicographically least one (see `words`).
- Elements are indexed breadth-first by length from the identity, ties
  broken by lexicographic order of the stored form, so index 0 is the
  identity and indices are reproducible across runs.
- A generator ``s`` is a recoil of ``w`` when ``len(s*w) < len(w)`` and a
  descent when ``len(w*s) < len(w)``; recoil and descent sets are bitmasks
  (see `gensets`).

>>> sys4 = build_system(CoxeterSpec.symmetric(4))
>>> len(sys4.elements)
24
>>> u = sys4.from_oneline((2, 1, 3, 4)); v = sys4.from_oneline((1, 2, 4, 3))
>>> sys4.multiply(u, v).payload
(2, 1, 4, 3)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .errors import CapExceeded, InvalidSpec, InvariantViolation, NotADescent
from .words import WordEngine

DEFAULT_ELEMENT_CAP = 200_000


@dataclass(frozen=True)
class CoxeterSpec:
    """Description of a finite Coxeter group to enumerate.

    kind is one of "symmetric", "dihedral", "matrix".  For dihedral groups
    `order` is the order m of the product of the two generators (the group
    has 2m elements).  Matrix entries give the orders m(s, t); 0 is
    reserved for infinite order and makes enumeration hit the cap.
    """

    kind: str
    n: int = 0
    order: int = 0
    matrix: tuple[tuple[int, ...], ...] = ()
    element_cap: int = DEFAULT_ELEMENT_CAP

    @classmethod
    def symmetric(cls, n: int, element_cap: int = DEFAULT_ELEMENT_CAP) -> CoxeterSpec:
        return cls(kind="symmetric", n=n, element_cap=element_cap)

    @classmethod
    def dihedral(cls, order: int, element_cap: int = DEFAULT_ELEMENT_CAP) -> CoxeterSpec:
        return cls(kind="dihedral", order=order, element_cap=element_cap)

    @classmethod
    def from_matrix(cls, matrix, element_cap: int = DEFAULT_ELEMENT_CAP) -> CoxeterSpec:
        rows = tuple(tuple(int(x) for x in row) for row in matrix)
        return cls(kind="matrix", matrix=rows, element_cap=element_cap)

    @property
    def rank(self) -> int:
        if self.kind == "symmetric":
            return self.n - 1
        if self.kind == "dihedral":
            return 2
        return len(self.matrix)

    def coxeter_matrix(self) -> tuple[tuple[int, ...], ...]:
        if self.kind == "matrix":
            return self.matrix
        if self.kind == "dihedral":
            return ((1, self.order), (self.order, 1))
        r = self.rank
        return tuple(
            tuple(1 if i == j else 3 if abs(i - j) == 1 else 2 for j in range(r))
            for i in range(r)
        )

    def describe(self) -> str:
        if self.kind == "symmetric":
            return f"S{self.n}"
        if self.kind == "dihedral":
            return f"I{self.order}"
        return f"matrix(rank={self.rank})"

    def validate(self) -> None:
        if self.element_cap < 1:
            raise InvalidSpec("element_cap must be positive")
        if self.kind == "symmetric":
            if self.n < 1:
                raise InvalidSpec("symmetric group needs n >= 1")
        elif self.kind == "dihedral":
            if self.order < 2:
                raise InvalidSpec("dihedral group needs order >= 2")
        elif self.kind == "matrix":
            m = self.matrix
            r = len(m)
            if r < 1:
                raise InvalidSpec("matrix must have positive rank")
            if any(len(row) != r for row in m):
                raise InvalidSpec("matrix must be square")
            for i in range(r):
                if m[i][i] != 1:
                    raise InvalidSpec("matrix diagonal entries must be 1")
                for j in range(r):
                    if m[i][j] != m[j][i]:
                        raise InvalidSpec("matrix must be symmetric")
                    if i != j and m[i][j] != 0 and m[i][j] < 2:
                        raise InvalidSpec("off-diagonal entries must be 0 (infinite) or >= 2")
        else:
            raise InvalidSpec(f"unknown kind {self.kind!r}")


@dataclass(frozen=True)
class Element:
    """A group element: its index in the system plus the stored form.

    `payload` is the one-line tuple for symmetric groups and the canonical
    reduced word (0-based generator indices) otherwise.  `length` is the
    Coxeter length, which for permutations equals the inversion count.
    """

    index: int
    payload: tuple[int, ...]
    length: int


def _inversions(p: tuple[int, ...]) -> int:
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def _invert_oneline(p: tuple[int, ...]) -> tuple[int, ...]:
    q = [0] * len(p)
    for pos, val in enumerate(p):
        q[val - 1] = pos + 1
    return tuple(q)


def positional_recoils(p: tuple[int, ...]) -> int:
    """Recoil bitmask of a one-line permutation: bit i set when the value
    i+2 appears before i+1.  Independent of the Cayley tables; used as the
    second route in agreement tests."""
    pos = _invert_oneline(p)
    mask = 0
    for i in range(len(p) - 1):
        if pos[i + 1] < pos[i]:
            mask |= 1 << i
    return mask


class CoxeterSystem:
    """Immutable enumeration of a finite Coxeter group.

    Attributes (all read-only by convention):
      spec           the defining CoxeterSpec
      rank           number of simple generators
      elements       index -> stored form (one-line tuple or canonical word)
      lengths        index -> Coxeter length
      right_cayley   [index][s] -> index of w*s
      left_cayley    [index][s] -> index of s*w
      recoils        index -> recoil bitmask  { s : len(s*w) < len(w) }
      descents       index -> descent bitmask { s : len(w*s) < len(w) }
      inverse_index  index -> index of the inverse
      gen_index      s -> element index of the generator
      longest_index  index of the longest element
    """

    def __init__(self, spec: CoxeterSpec, elements: list[tuple[int, ...]],
                 right_cayley: list[list[int]]):
        self.spec = spec
        self.kind = spec.kind
        self.rank = spec.rank
        self.n = spec.n
        self.matrix = spec.coxeter_matrix()
        self.elements = elements
        self.index = {p: i for i, p in enumerate(elements)}
        if self.kind == "symmetric":
            self.lengths = [_inversions(p) for p in elements]
        else:
            self.lengths = [len(w) for w in elements]
        self.right_cayley = right_cayley
        self.gen_index = self._generator_indices()
        self.gen_of = {idx: s for s, idx in enumerate(self.gen_index)}
        self.left_cayley = self._build_left_cayley()
        self.inverse_index = self._build_inverses()
        self.recoils = self._mask_table(self.left_cayley)
        self.descents = self._mask_table(self.right_cayley)
        self.longest_index = self._find_longest()
        self._class_cache: dict[int, object] = {}
        self._loop_cache: dict[int, object] = {}

    # -- construction helpers ------------------------------------------------

    def _generator_indices(self) -> list[int]:
        if self.kind == "symmetric":
            gens = []
            for s in range(self.rank):
                p = list(range(1, self.n + 1))
                p[s], p[s + 1] = p[s + 1], p[s]
                gens.append(self.index[tuple(p)])
            return gens
        return [self.index[(s,)] for s in range(self.rank)]

    def _build_left_cayley(self) -> list[list[int]]:
        if self.kind == "symmetric":
            table = []
            for p in self.elements:
                row = []
                for s in range(self.rank):
                    a, b = s + 1, s + 2
                    q = tuple(b if v == a else a if v == b else v for v in p)
                    row.append(self.index[q])
                table.append(row)
            return table
        # s*w is the walk from the generator along w's canonical word
        table = []
        for word in self.elements:
            row = []
            for s in range(self.rank):
                i = self.gen_index[s]
                for t in word:
                    i = self.right_cayley[i][t]
                row.append(i)
            table.append(row)
        return table

    def _build_inverses(self) -> list[int]:
        if self.kind == "symmetric":
            return [self.index[_invert_oneline(p)] for p in self.elements]
        out = []
        for word in self.elements:
            i = 0
            for t in reversed(word):
                i = self.right_cayley[i][t]
            out.append(i)
        return out

    def _mask_table(self, cayley: list[list[int]]) -> list[int]:
        masks = []
        for i, row in enumerate(cayley):
            mask = 0
            for s in range(self.rank):
                if self.lengths[row[s]] < self.lengths[i]:
                    mask |= 1 << s
            masks.append(mask)
        return masks

    def _find_longest(self) -> int:
        top = max(self.lengths)
        hits = [i for i, l in enumerate(self.lengths) if l == top]
        if len(hits) != 1:
            raise InvariantViolation("longest element is not unique")
        return hits[0]

    # -- element access ------------------------------------------------------

    def element(self, i: int) -> Element:
        return Element(i, self.elements[i], self.lengths[i])

    @property
    def identity(self) -> Element:
        return self.element(0)

    @property
    def longest(self) -> Element:
        return self.element(self.longest_index)

    def generator(self, s: int) -> Element:
        return self.element(self.gen_index[s])

    def from_oneline(self, oneline: Sequence[int]) -> Element:
        if self.kind != "symmetric":
            raise ValueError("one-line forms exist only for symmetric groups")
        return self.element(self.index[tuple(oneline)])

    def from_word(self, word: Sequence[int]) -> Element:
        """Element spelled by an arbitrary word in the generators."""
        i = 0
        for s in word:
            i = self.right_cayley[i][s]
        return self.element(i)

    def check_member(self, w: Element) -> None:
        if not (0 <= w.index < len(self.elements)) or self.elements[w.index] != w.payload:
            raise ValueError("element does not belong to this system")

    # -- group operations ----------------------------------------------------

    def multiply_index(self, u: int, v: int) -> int:
        if self.kind == "symmetric":
            pu, pv = self.elements[u], self.elements[v]
            return self.index[tuple(pu[x - 1] for x in pv)]
        i = u
        for s in self.elements[v]:
            i = self.right_cayley[i][s]
        return i

    def multiply(self, u: Element, v: Element) -> Element:
        self.check_member(u)
        self.check_member(v)
        return self.element(self.multiply_index(u.index, v.index))

    def inverse(self, w: Element) -> Element:
        self.check_member(w)
        return self.element(self.inverse_index[w.index])

    def length(self, w: Element) -> int:
        self.check_member(w)
        return self.lengths[w.index]

    def recoil_set(self, w: Element) -> int:
        self.check_member(w)
        return self.recoils[w.index]

    def descent_set(self, w: Element) -> int:
        self.check_member(w)
        return self.descents[w.index]

    def weak_leq(self, u: Element, w: Element) -> bool:
        """Right weak order: u <= w iff len(u) + len(u^-1 w) == len(w)."""
        self.check_member(u)
        self.check_member(w)
        return self.weak_leq_index(u.index, w.index)

    def weak_leq_index(self, u: int, w: int) -> bool:
        between = self.multiply_index(self.inverse_index[u], w)
        return self.lengths[u] + self.lengths[between] == self.lengths[w]

    def apply_exchange(self, word: Sequence[int], s: int) -> tuple[int, ...]:
        """Delete one letter of a reduced word so it spells s*w.

        Requires len(s*w) == len(w) - 1; raises NotADescent otherwise.
        When several deletions work, the smallest index is removed.
        """
        seq = tuple(word)
        i = 0
        for step, t in enumerate(seq):
            nxt = self.right_cayley[i][t]
            if self.lengths[nxt] != step + 1:
                raise ValueError("word is not reduced")
            i = nxt
        target = self.left_cayley[i][s]
        if self.lengths[target] == self.lengths[i] + 1:
            raise NotADescent(f"generator {s + 1} does not shorten this word")
        for cut in range(len(seq)):
            candidate = seq[:cut] + seq[cut + 1 :]
            j = 0
            for t in candidate:
                j = self.right_cayley[j][t]
            if j == target:
                return candidate
        raise InvariantViolation("exchange property produced no valid deletion")

    # -- presentation --------------------------------------------------------

    def order_product(self, s: int, t: int) -> int:
        """Order m(s, t) of the product of two generators (0 means infinite)."""
        return self.matrix[s][t]

    def reduced_word(self, w: Element) -> tuple[int, ...]:
        """Lexicographically least reduced word (equals the payload for
        word-based realizations)."""
        self.check_member(w)
        if self.kind != "symmetric":
            return w.payload
        out = []
        i = w.index
        while self.lengths[i] > 0:
            s = (self.recoils[i] & -self.recoils[i]).bit_length() - 1
            out.append(s)
            i = self.left_cayley[i][s]
        return tuple(out)

    def format_index(self, i: int) -> str:
        payload = self.elements[i]
        if self.kind == "symmetric":
            if self.n <= 9:
                return "".join(str(v) for v in payload)
            return " ".join(str(v) for v in payload)
        if not payload:
            return "e"
        if self.kind == "dihedral":
            return "".join("st"[s] for s in payload)
        return ".".join(str(s + 1) for s in payload)

    def format_element(self, w: Element) -> str:
        self.check_member(w)
        return self.format_index(w.index)

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"CoxeterSystem({self.spec.describe()}, {len(self.elements)} elements)"


def _build_symmetric(spec: CoxeterSpec) -> CoxeterSystem:
    n = spec.n
    if math.factorial(n) > spec.element_cap:
        raise CapExceeded(f"|S{n}| = {math.factorial(n)} exceeds element_cap {spec.element_cap}")
    elements = sorted(permutations(range(1, n + 1)), key=lambda p: (_inversions(p), p))
    index = {p: i for i, p in enumerate(elements)}
    right = []
    for p in elements:
        row = []
        for s in range(n - 1):
            q = list(p)
            q[s], q[s + 1] = q[s + 1], q[s]
            row.append(index[tuple(q)])
        right.append(row)
    return CoxeterSystem(spec, list(elements), right)


def _build_words(spec: CoxeterSpec) -> CoxeterSystem:
    rank = spec.rank
    engine = WordEngine(spec.coxeter_matrix())
    elements: list[tuple[int, ...]] = [()]
    index: dict[tuple[int, ...], int] = {(): 0}
    right: list[list[int]] = [[-1] * rank]
    level = [0]
    while level:
        grown: dict[tuple[int, ...], list[tuple[int, int]]] = {}
        for u in level:
            wu = elements[u]
            for s in range(rank):
                if right[u][s] != -1:
                    continue  # already linked: this step shortens
                cw = engine.canonical(wu + (s,))
                if len(cw) != len(wu) + 1:
                    raise InvariantViolation("BFS reached a shorter word without a back link")
                grown.setdefault(cw, []).append((u, s))
        level = []
        for cw in sorted(grown):
            if len(elements) >= spec.element_cap:
                raise CapExceeded(
                    f"enumeration exceeded element_cap {spec.element_cap}; "
                    "the group is infinite or too large"
                )
            idx = len(elements)
            elements.append(cw)
            index[cw] = idx
            right.append([-1] * rank)
            for u, s in grown[cw]:
                right[u][s] = idx
                right[idx][s] = u
            level.append(idx)
    return CoxeterSystem(spec, elements, right)


def build_system(spec: CoxeterSpec) -> CoxeterSystem:
    """Enumerate the whole group and precompute every lookup table."""
    spec.validate()
    if spec.kind == "symmetric":
        return _build_symmetric(spec)
    return _build_words(spec)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
