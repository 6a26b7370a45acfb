"""Fibered product of two recoil classes and its projection onto a third.

Fix recoil subsets I, J, K.  The instance built here has one vertex for
every pair (pi, rho) with pi in the class of I, rho in the class of J and
pi*rho in the class of K.  Edges come from the product graph: exactly one
coordinate moves along an edge of its own class, both endpoints must be
vertices, and the two products must sit one Cayley step apart (automatic
for right moves; a real restriction for left moves, whose product shift is
a conjugate that need not be simple).  Each edge is tagged with the
coordinate that moved ("left" or "right") and the generator of that class
edge.

The projection sends (pi, rho) to pi*rho.  Everything this package computes
downstream rests on that projection being a graph covering of the target
class; `verify_covering` checks the covering axioms directly instead of
assuming them, and the per-fiber counts give the structure constants of the
descent algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

from .coxeter import CoxeterSystem
from .errors import FiberInconstant, InvariantViolation, NotAClassEdge
from .gensets import format_subset, one_based
from .recoil import RecoilClass, conjugated_generator, recoil_class
from .unionfind import UnionFind

Vertex = tuple[int, int]  # (element index in left class, element index in right class)


@dataclass
class CoveringInstance:
    left: int
    right: int
    target: int
    system: CoxeterSystem = field(repr=False)
    left_class: RecoilClass = field(repr=False)
    right_class: RecoilClass = field(repr=False)
    target_class: RecoilClass = field(repr=False)
    vertices: list[Vertex]                    # sorted pairs of element indices
    vertex_id: dict[Vertex, int] = field(repr=False)
    projection: list[int]                     # vertex id -> element index of the product
    edges: list[tuple[int, int, str, int]]    # (u, v, side, generator), u < v
    adjacency: list[list[tuple[int, str, int]]] = field(repr=False)
    fibers: dict[int, list[int]]              # target element -> vertex ids
    component: list[int]                      # vertex id -> component id
    degrees: list[int]                        # component id -> covering degree
    fiber_size: int                           # the structure constant

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    @property
    def component_count(self) -> int:
        return len(self.degrees)

    def to_json(self) -> dict:
        return {
            "I": list(one_based(self.left)),
            "J": list(one_based(self.right)),
            "K": list(one_based(self.target)),
            "a": self.fiber_size,
            "lambda": list(multiplicity_partition(self)),
            "components": self.component_count,
            "vertices": len(self.vertices),
        }


def build_fibered_graph(sys: CoxeterSystem, left: int, right: int,
                        target: int) -> CoveringInstance:
    """Filter the full product of two classes on the product's recoil set,
    then wire up edges, fibers, components and per-component degrees.

    An empty instance (structure constant 0) is valid data, not an error.
    """
    for mask in (left, right, target):
        if mask >> sys.rank:
            raise ValueError(f"subset {format_subset(mask)} outside rank {sys.rank}")
    cls_l = recoil_class(sys, left)
    cls_r = recoil_class(sys, right)
    cls_t = recoil_class(sys, target)

    vertices: list[Vertex] = []
    projection: list[int] = []
    for p in cls_l.members:
        for r in cls_r.members:
            prod = sys.multiply_index(p, r)
            if sys.recoils[prod] == target:
                vertices.append((p, r))
                projection.append(prod)
    vertex_id = {v: i for i, v in enumerate(vertices)}

    edges: list[tuple[int, int, str, int]] = []
    for u, (p, r) in enumerate(vertices):
        for r2, s in cls_r.adjacency[r]:
            v = vertex_id.get((p, r2))
            if v is not None and u < v:
                edges.append((u, v, "right", s))
        for p2, s in cls_l.adjacency[p]:
            v = vertex_id.get((p2, r))
            if v is not None and u < v:
                # a left move shifts the product by rho^-1 s rho, which need
                # not be simple; only moves whose projection is a Cayley
                # step are edges, or the projection could not preserve them
                sigma, sigma2 = projection[u], projection[v]
                if sigma2 in sys.right_cayley[sigma]:
                    edges.append((u, v, "left", s))
    edges.sort(key=lambda e: (e[0], e[1]))
    adjacency: list[list[tuple[int, str, int]]] = [[] for _ in vertices]
    for u, v, side, s in edges:
        adjacency[u].append((v, side, s))
        adjacency[v].append((u, side, s))
    for nbrs in adjacency:
        nbrs.sort()

    fibers: dict[int, list[int]] = {t: [] for t in cls_t.members}
    for vid, prod in enumerate(projection):
        fibers[prod].append(vid)

    sizes = {len(f) for f in fibers.values()}
    if len(sizes) > 1:
        raise FiberInconstant(
            f"fiber sizes {sorted(sizes)} differ over class {format_subset(target)} "
            f"in the ({format_subset(left)}, {format_subset(right)}) instance"
        )
    fiber_size = sizes.pop() if sizes else 0

    uf = UnionFind(range(len(vertices)))
    for u, v, _, _ in edges:
        uf.union(u, v)
    comp_map = uf.component_ids(range(len(vertices)))
    component = [comp_map[v] for v in range(len(vertices))]
    n_comp = max(component) + 1 if component else 0

    degrees = _component_degrees(component, n_comp, fibers, cls_t,
                                 left, right, target)

    return CoveringInstance(
        left=left, right=right, target=target, system=sys,
        left_class=cls_l, right_class=cls_r, target_class=cls_t,
        vertices=vertices, vertex_id=vertex_id, projection=projection,
        edges=edges, adjacency=adjacency, fibers=fibers,
        component=component, degrees=degrees, fiber_size=fiber_size,
    )


def _component_degrees(component: list[int], n_comp: int,
                       fibers: dict[int, list[int]], cls_t: RecoilClass,
                       left: int, right: int, target: int) -> list[int]:
    """Per-component fiber count at a base point, verified constant over
    every point of the target class."""
    if n_comp == 0:
        return []
    base = cls_t.members[0]
    degrees = [0] * n_comp
    for vid in fibers[base]:
        degrees[component[vid]] += 1
    for t in cls_t.members[1:]:
        counts = [0] * n_comp
        for vid in fibers[t]:
            counts[component[vid]] += 1
        if counts != degrees:
            raise FiberInconstant(
                f"component fiber counts {counts} at {t} differ from {degrees} "
                f"at {base} in the ({format_subset(left)}, {format_subset(right)}, "
                f"{format_subset(target)}) instance"
            )
    return degrees


def multiplicity_partition(instance: CoveringInstance) -> tuple[int, ...]:
    """Per-component covering degrees, weakly decreasing.  Sums to the
    structure constant; empty for an empty instance."""
    return tuple(sorted(instance.degrees, reverse=True))


@dataclass
class CoveringReport:
    status: str                 # "ok" | "empty" | "failed"
    surjective: bool | None
    edges_preserved: bool | None
    unique_lifting: bool | None
    violations: list[str]
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.status == "ok"


def verify_covering(instance: CoveringInstance) -> CoveringReport:
    """Check the three covering axioms of the projection, reporting any
    violation with a witness.

    An empty instance gets the explicit "empty" status: the projection onto
    the target class is then vacuously non-surjective, which is recorded as
    a fact about the instance rather than a failed axiom.
    """
    if instance.is_empty:
        return CoveringReport(
            status="empty", surjective=None, edges_preserved=None,
            unique_lifting=None, violations=[],
            note="empty instance: projection onto the target class is "
                 "vacuously non-surjective",
        )
    sys = instance.system
    violations: list[str] = []

    missed = [t for t, f in instance.fibers.items() if not f]
    surjective = not missed
    if missed:
        violations.append(f"no vertex projects onto {sys.format_index(missed[0])}")

    cls_t = instance.target_class
    edges_preserved = True
    for u, v, side, s in instance.edges:
        pu, pv = instance.projection[u], instance.projection[v]
        if pu == pv or all(nbr != pv for nbr, _ in cls_t.adjacency[pu]):
            edges_preserved = False
            violations.append(
                f"edge {instance.vertices[u]} -- {instance.vertices[v]} projects to "
                f"non-edge {sys.format_index(pu)} -- {sys.format_index(pv)}"
            )
            break

    unique_lifting = True
    for w, z, _ in cls_t.edges:
        for a, b in ((w, z), (z, w)):
            for u in instance.fibers[a]:
                hits = [v for v, _, _ in instance.adjacency[u] if instance.projection[v] == b]
                if len(hits) != 1:
                    unique_lifting = False
                    violations.append(
                        f"{len(hits)} lifts of edge {sys.format_index(a)} -- "
                        f"{sys.format_index(b)} at vertex {instance.vertices[u]}"
                    )
        if not unique_lifting:
            break

    status = "ok" if not violations else "failed"
    return CoveringReport(status, surjective, edges_preserved, unique_lifting, violations)


def unique_lift_edge(sys: CoxeterSystem, vertex: Vertex, s: int) -> tuple[Vertex, str, int]:
    """Lift one in-class step of the product through the factorization.

    Given a vertex (pi, rho) whose product sigma moves to sigma*s inside its
    recoil class, exactly one of two refactorings works: either rho*s stays
    in rho's class (the right coordinate moves by s), or rho s rho^-1 is a
    simple generator t and pi*t stays in pi's class (the left coordinate
    moves by t).  Returns the new vertex, the side and the moved generator.
    """
    p, r = vertex
    sigma = sys.multiply_index(p, r)
    sigma2 = sys.right_cayley[sigma][s]
    if sys.recoils[sigma2] != sys.recoils[sigma]:
        raise NotAClassEdge(
            f"step {sys.format_index(sigma)} -> {sys.format_index(sigma2)} "
            "leaves the recoil class"
        )
    r2 = sys.right_cayley[r][s]
    if sys.recoils[r2] == sys.recoils[r]:
        return (p, r2), "right", s
    t = conjugated_generator(sys, r, s)
    if t is None:
        raise InvariantViolation("neither factorization of the lifted step is valid")
    p2 = sys.right_cayley[p][t]
    if sys.recoils[p2] != sys.recoils[p]:
        raise InvariantViolation("left factorization left the first coordinate's class")
    return (p2, r), "left", t


def cycle_rank(vertices: Iterable[Hashable], edges: Iterable[Sequence]) -> int:
    """Edges minus vertices plus components of a finite simple graph; the
    number of independent cycles (0 exactly for forests)."""
    uf = UnionFind(vertices)
    n_edges = 0
    for e in edges:
        uf.union(e[0], e[1])
        n_edges += 1
    return n_edges - len(uf.parent) + uf.component_count()


def class_cycle_rank(cls: RecoilClass) -> int:
    return cycle_rank(cls.members, cls.edges)
