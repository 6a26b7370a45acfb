"""Relation loops in recoil classes and their action on covering fibers.

The cycles of a class graph are generated by loops tracing the defining
relations of the group, as far as they fit inside the class: going back and
forth along one edge (squares), the 4-cycles of a commuting pair (order 2),
the 6-cycles of a braid pair (order 3) and, in groups that have them, the
2m-gons of pairs of order m >= 4 ("polygon" loops).

Lifting such a loop through a covering instance permutes the fiber over its
base point.  Squares and commuting loops always act trivially; braid loops
act with order 1 or 2; polygon orders are measured and reported without
asserting a bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .coxeter import CoxeterSystem
from .covering import CoveringInstance, Vertex, multiplicity_partition, unique_lift_edge
from .errors import InvariantViolation, OrderViolation
from .gensets import one_based
from .recoil import RecoilClass, recoil_class
from .words import alternating


@dataclass(frozen=True)
class Loop:
    """A closed walk inside one recoil class, as a generator word from a
    base element.  Every prefix of the word must stay in the class."""

    base: int                 # element index
    word: tuple[int, ...]
    kind: str                 # "square" | "commuting" | "braid" | "polygon"


@dataclass
class FiberAction:
    loop: Loop
    permutation: dict[int, int]   # vertex id -> vertex id, over the base fiber
    order: int


def _polygon_vertices(sys: CoxeterSystem, start: int, s: int, t: int,
                      length: int) -> list[int] | None:
    """Walk the alternating word; None as soon as the walk leaves the class."""
    subset = sys.recoils[start]
    walk = [start]
    current = start
    for g in alternating(s, t, length):
        current = sys.right_cayley[current][g]
        if sys.recoils[current] != subset:
            return None
        walk.append(current)
    return walk


def relation_loops(sys: CoxeterSystem, cls: RecoilClass) -> list[Loop]:
    """All relation loops lying inside the class, each emitted once.

    Squares are based at the smaller end of their edge.  Cycles of a
    generator pair are based at their smallest element and traversed in the
    rotation that starts with the smaller generator; the reverse rotation
    is the inverse loop and is not repeated.  Cached on the system.
    """
    cached = sys._loop_cache.get(cls.subset)
    if cached is not None:
        return cached  # type: ignore[return-value]
    loops = [Loop(u, (s, s), "square") for u, _, s in cls.edges]
    pairs = [
        (s, t, sys.order_product(s, t))
        for s in range(sys.rank)
        for t in range(s + 1, sys.rank)
        if sys.order_product(s, t) >= 2
    ]
    for base in cls.members:
        for s, t, m in pairs:
            walk = _polygon_vertices(sys, base, s, t, 2 * m)
            if walk is None or min(walk) != base:
                continue
            if walk[-1] != base:
                raise InvariantViolation("alternating walk did not close")
            kind = "commuting" if m == 2 else "braid" if m == 3 else "polygon"
            loops.append(Loop(base, alternating(s, t, 2 * m), kind))
    sys._loop_cache[cls.subset] = loops
    return loops


def braid_loop_exists_positional(sys: CoxeterSystem, w: int, i: int) -> bool:
    """Type-A shortcut for the braid hexagon at one-line position i
    (0-based): the three entries starting there must be pairwise at least 2
    apart.  Agreement with the walk test is a tested invariant."""
    p = sys.elements[w]
    a, b, c = p[i], p[i + 1], p[i + 2]
    return abs(a - b) >= 2 and abs(b - c) >= 2 and abs(a - c) >= 2


def lift_path(instance: CoveringInstance, start: Vertex, word: tuple[int, ...]) -> list[Vertex]:
    """The unique lift of a downstairs walk, one factorization step at a
    time.  Raises NotAClassEdge if the walk leaves the target class."""
    if start not in instance.vertex_id:
        raise ValueError(f"{start} is not a vertex of this instance")
    path = [start]
    current = start
    for s in word:
        current, _, _ = unique_lift_edge(instance.system, current, s)
        path.append(current)
    return path


def loop_action(instance: CoveringInstance, loop: Loop) -> FiberAction:
    """Permutation of the fiber over the loop's base induced by lifting the
    loop from every fiber point."""
    fiber = instance.fibers.get(loop.base)
    if fiber is None:
        raise ValueError("loop base is not in the target class of this instance")
    permutation: dict[int, int] = {}
    for vid in fiber:
        path = lift_path(instance, instance.vertices[vid], loop.word)
        end = instance.vertex_id[path[-1]]
        if instance.projection[end] != loop.base:
            raise InvariantViolation("lifted loop did not end over its base")
        permutation[vid] = end
    if sorted(permutation.values()) != sorted(permutation):
        raise InvariantViolation("loop action is not a bijection of the fiber")
    return FiberAction(loop, permutation, _permutation_order(permutation))


def _permutation_order(permutation: dict[int, int]) -> int:
    order = 1
    seen: set[int] = set()
    for start in permutation:
        if start in seen:
            continue
        size = 0
        x = start
        while x not in seen:
            seen.add(x)
            x = permutation[x]
            size += 1
        order = lcm(order, size)
    return order


@dataclass
class MonodromyReport:
    left: int
    right: int
    target: int
    empty: bool
    square_loops: int
    commuting_loops: int
    braid_loops: int
    braid_orders: dict[int, int]      # order -> number of braid loops
    polygon_loops: int
    polygon_orders: dict[int, int]
    no_braid_loops: bool
    fiber_size: int
    partition: tuple[int, ...]

    def to_json(self) -> dict:
        out = {
            "I": list(one_based(self.left)),
            "J": list(one_based(self.right)),
            "K": list(one_based(self.target)),
            "braid_loops": self.braid_loops,
            "orders": {str(k): v for k, v in sorted(self.braid_orders.items())},
            "no_braid_loops": self.no_braid_loops,
        }
        if self.empty:
            out["empty"] = True
        if self.polygon_loops:
            out["polygon_loops"] = self.polygon_loops
            out["polygon_orders"] = {str(k): v for k, v in sorted(self.polygon_orders.items())}
        return out


def monodromy_report(instance: CoveringInstance) -> MonodromyReport:
    """Lift every relation loop of the target class and tabulate the orders.

    Squares and commuting loops are required to act trivially and braid
    loops with order 1 or 2 (OrderViolation otherwise; neither can happen).
    When the class carries no braid or polygon loop at all, the instance
    must fall apart into disjoint copies of the target class: the partition
    is all ones and each component projects isomorphically.
    """
    sys = instance.system
    cls = recoil_class(sys, instance.target)
    loops = relation_loops(sys, cls)
    counts = {"square": 0, "commuting": 0, "braid": 0, "polygon": 0}
    for loop in loops:
        counts[loop.kind] += 1
    braid_orders: dict[int, int] = {}
    polygon_orders: dict[int, int] = {}
    if not instance.is_empty:
        for loop in loops:
            action = loop_action(instance, loop)
            if loop.kind in ("square", "commuting"):
                if action.order != 1:
                    raise OrderViolation(
                        f"{loop.kind} loop at {sys.format_index(loop.base)} "
                        f"acted with order {action.order}"
                    )
            elif loop.kind == "braid":
                if action.order not in (1, 2):
                    raise OrderViolation(
                        f"braid loop at {sys.format_index(loop.base)} "
                        f"acted with order {action.order}"
                    )
                braid_orders[action.order] = braid_orders.get(action.order, 0) + 1
            else:
                polygon_orders[action.order] = polygon_orders.get(action.order, 0) + 1
    no_braid = counts["braid"] == 0 and counts["polygon"] == 0
    report = MonodromyReport(
        left=instance.left, right=instance.right, target=instance.target,
        empty=instance.is_empty,
        square_loops=counts["square"], commuting_loops=counts["commuting"],
        braid_loops=counts["braid"], braid_orders=braid_orders,
        polygon_loops=counts["polygon"], polygon_orders=polygon_orders,
        no_braid_loops=no_braid,
        fiber_size=instance.fiber_size,
        partition=multiplicity_partition(instance),
    )
    if no_braid and not instance.is_empty:
        _check_trivial_cover(instance, report)
    return report


def _check_trivial_cover(instance: CoveringInstance, report: MonodromyReport) -> None:
    """Without braid or polygon loops every component must be a disjoint
    isomorphic copy of the target class."""
    if report.partition != (1,) * instance.fiber_size:
        raise InvariantViolation(
            f"no braid loops but partition {report.partition} is not all ones"
        )
    if not component_isomorphisms(instance):
        raise InvariantViolation("a degree-1 component is not isomorphic to the target class")


def component_isomorphisms(instance: CoveringInstance) -> bool:
    """True when every component projects one-to-one onto the target class,
    vertices and edges alike."""
    cls = instance.target_class
    n_comp = instance.component_count
    comp_vertices = [0] * n_comp
    comp_edges = [0] * n_comp
    for vid in range(len(instance.vertices)):
        comp_vertices[instance.component[vid]] += 1
    for u, v, _, _ in instance.edges:
        if instance.component[u] != instance.component[v]:
            return False
        comp_edges[instance.component[u]] += 1
    # projections of one component must hit each class vertex once; edge
    # counts then force the edge bijection (projection never collapses)
    for c in range(n_comp):
        if comp_vertices[c] != len(cls.members) or comp_edges[c] != len(cls.edges):
            return False
    seen: set[tuple[int, int]] = set()
    for vid, prod in enumerate(instance.projection):
        key = (instance.component[vid], prod)
        if key in seen:
            return False
        seen.add(key)
    return True


def conjugate_action(instance: CoveringInstance, loop: Loop,
                     path_word: tuple[int, ...]) -> FiberAction:
    """The action of the loop transported to the endpoint of a path: lift
    the path backwards, run the loop, lift the path forwards.  Used to test
    base-point independence."""
    sys = instance.system
    end = loop.base
    for s in path_word:
        end = sys.right_cayley[end][s]
    permutation: dict[int, int] = {}
    for vid in instance.fibers[end]:
        vertex = instance.vertices[vid]
        back = lift_path(instance, vertex, tuple(reversed(path_word)))
        looped = lift_path(instance, back[-1], loop.word)
        forward = lift_path(instance, looped[-1], path_word)
        permutation[vid] = instance.vertex_id[forward[-1]]
    moved = Loop(end, tuple(reversed(path_word)) + loop.word + path_word, loop.kind)
    return FiberAction(moved, permutation, _permutation_order(permutation))
