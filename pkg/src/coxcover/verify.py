"""Executable invariant sweeps over one enumerated group.

Each check exercises a theorem the construction depends on, preferring two
independent routes wherever one exists (positional criteria against table
lookups, covering degrees against the convolution oracle, formula extremes
against class scans).  The CLI `verify` command runs all of them and fails
on the first witness.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .algebra import (
    AlgebraElement,
    convolution_oracle,
    product_expand,
    x_from_y,
    y_from_x,
)
from .coxeter import CoxeterSystem, positional_recoils
from .covering import (
    build_fibered_graph,
    multiplicity_partition,
    unique_lift_edge,
    verify_covering,
)
from .gensets import format_subset, iter_subsets
from .monodromy import monodromy_report, relation_loops
from .recoil import (
    alpha_oneline,
    beta_oneline,
    class_interval_matches,
    conjugated_generator,
    positional_same_class,
    recoil_class,
    same_class_edge_index,
)
from .unionfind import UnionFind


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, witness: str) -> None:
        self.failures.append(witness)


def _check_cayley(sys: CoxeterSystem) -> CheckResult:
    res = CheckResult("cayley tables")
    for table in (sys.right_cayley, sys.left_cayley):
        for w in range(len(sys.elements)):
            for s in range(sys.rank):
                res.checked += 1
                v = table[w][s]
                if table[v][s] != w:
                    res.fail(f"generator {s + 1} is not an involution at {sys.format_index(w)}")
                if abs(sys.lengths[v] - sys.lengths[w]) != 1:
                    res.fail(f"length step != 1 at {sys.format_index(w)}, generator {s + 1}")
    full = (1 << sys.rank) - 1
    if sys.lengths.count(0) != 1:
        res.fail("identity is not unique")
    if sys.recoils[sys.longest_index] != full or sys.descents[sys.longest_index] != full:
        res.fail("longest element does not have full recoil and descent sets")
    res.checked += 2
    return res


def _check_recoil_descent(sys: CoxeterSystem) -> CheckResult:
    res = CheckResult("recoils vs descents")
    for w in range(len(sys.elements)):
        res.checked += 1
        if sys.recoils[w] != sys.descents[sys.inverse_index[w]]:
            res.fail(f"recoil set of {sys.format_index(w)} is not the inverse's descent set")
        if sys.kind == "symmetric" and positional_recoils(sys.elements[w]) != sys.recoils[w]:
            res.fail(f"positional recoil criterion differs at {sys.format_index(w)}")
    return res


def _check_class_edges(sys: CoxeterSystem) -> CheckResult:
    res = CheckResult("class-edge criteria")
    for w in range(len(sys.elements)):
        for s in range(sys.rank):
            res.checked += 1
            by_recoils = same_class_edge_index(sys, w, s)
            conj = conjugated_generator(sys, w, s)
            if by_recoils != (conj is None):
                res.fail(f"conjugation criterion differs at {sys.format_index(w)}, s{s + 1}")
            if sys.kind == "symmetric" and by_recoils != positional_same_class(sys, w, s):
                res.fail(f"positional criterion differs at {sys.format_index(w)}, s{s + 1}")
            ws = sys.right_cayley[w][s]
            if sys.lengths[ws] == sys.lengths[w] + 1:
                grown = sys.recoils[ws]
                if conj is None:
                    if grown != sys.recoils[w]:
                        res.fail(f"recoil set changed without a simple conjugate at "
                                 f"{sys.format_index(w)}, s{s + 1}")
                elif grown != sys.recoils[w] | (1 << conj) or grown == sys.recoils[w]:
                    res.fail(f"recoil set did not grow by the conjugate at "
                             f"{sys.format_index(w)}, s{s + 1}")
    return res


def _check_classes(sys: CoxeterSystem) -> CheckResult:
    res = CheckResult("recoil classes")
    total = 0
    for subset in iter_subsets(sys.rank):
        cls = recoil_class(sys, subset)
        total += len(cls.members)
        res.checked += 1
        uf = UnionFind(cls.members)
        for u, v, _ in cls.edges:
            uf.union(u, v)
        if uf.component_count() != 1:
            res.fail(f"class {format_subset(subset)} is not connected")
        if not class_interval_matches(sys, cls):
            res.fail(f"class {format_subset(subset)} is not the weak-order interval "
                     "of its extremes")
        if sys.kind == "symmetric":
            if sys.elements[cls.alpha] != alpha_oneline(sys.n, subset):
                res.fail(f"scan minimum differs from formula for {format_subset(subset)}")
            if sys.elements[cls.beta] != beta_oneline(sys.n, subset):
                res.fail(f"scan maximum differs from formula for {format_subset(subset)}")
    if total != len(sys.elements):
        res.fail("classes do not partition the group")
    return res


def _check_coverings(sys: CoxeterSystem) -> CheckResult:
    res = CheckResult("covering axioms")
    for left in iter_subsets(sys.rank):
        for right in iter_subsets(sys.rank):
            for target in iter_subsets(sys.rank):
                inst = build_fibered_graph(sys, left, right, target)
                if inst.is_empty:
                    continue
                res.checked += 1
                report = verify_covering(inst)
                if not report.ok:
                    res.fail(f"covering axioms failed for ({format_subset(left)}, "
                             f"{format_subset(right)}, {format_subset(target)}): "
                             f"{report.violations[:1]}")
                if sum(multiplicity_partition(inst)) != inst.fiber_size:
                    res.fail(f"partition does not sum to the constant for "
                             f"({format_subset(left)}, {format_subset(right)}, "
                             f"{format_subset(target)})")
                _check_lift_dichotomy(sys, inst, res)
    return res


def _check_lift_dichotomy(sys, inst, res: CheckResult) -> None:
    """Both candidate factorizations of every in-class step, brute-forced:
    exactly one must stay in its class, and it must match unique_lift_edge."""
    for vid, (p, r) in enumerate(inst.vertices):
        sigma = inst.projection[vid]
        for s in range(sys.rank):
            if not same_class_edge_index(sys, sigma, s):
                continue
            res.checked += 1
            right_ok = same_class_edge_index(sys, r, s)
            conj = conjugated_generator(sys, r, s)
            left_ok = conj is not None and same_class_edge_index(sys, p, conj)
            if right_ok == left_ok:
                res.fail(f"lift dichotomy failed at {(p, r)} step s{s + 1}")
                continue
            vertex, side, gen = unique_lift_edge(sys, (p, r), s)
            expect = ((p, sys.right_cayley[r][s]), "right", s) if right_ok \
                else ((sys.right_cayley[p][conj], r), "left", conj)
            if (vertex, side, gen) != expect:
                res.fail(f"unique_lift_edge disagrees with brute force at {(p, r)} s{s + 1}")


def _check_algebra(sys: CoxeterSystem, rng: random.Random) -> CheckResult:
    res = CheckResult("products vs oracle")
    class_sizes = {subset: len(recoil_class(sys, subset).members)
                   for subset in iter_subsets(sys.rank)}
    for left in iter_subsets(sys.rank):
        for right in iter_subsets(sys.rank):
            res.checked += 1
            expansion = product_expand(sys, left, right)
            if expansion != convolution_oracle(sys, left, right):
                res.fail(f"oracle mismatch at ({format_subset(left)}, {format_subset(right)})")
            if any(c <= 0 for _, c in expansion.coeffs):
                res.fail(f"nonpositive coefficient at ({format_subset(left)}, "
                         f"{format_subset(right)})")
            weighted = sum(c * class_sizes[m] for m, c in expansion.coeffs)
            if weighted != class_sizes[left] * class_sizes[right]:
                res.fail(f"counting identity failed at ({format_subset(left)}, "
                         f"{format_subset(right)})")
    for _ in range(25):
        res.checked += 1
        coeffs = {m: rng.randint(-9, 9) for m in iter_subsets(sys.rank)}
        start = AlgebraElement.make("Y", coeffs)
        if y_from_x(x_from_y(start)) != start:
            res.fail("basis round trip is not the identity")
    return res


def _check_monodromy(sys: CoxeterSystem) -> CheckResult:
    res = CheckResult("monodromy")
    for subset in iter_subsets(sys.rank):
        relation_loops(sys, recoil_class(sys, subset))
    for left in iter_subsets(sys.rank):
        for right in iter_subsets(sys.rank):
            for target in iter_subsets(sys.rank):
                inst = build_fibered_graph(sys, left, right, target)
                if inst.is_empty:
                    continue
                res.checked += 1
                report = monodromy_report(inst)  # raises on any violation
                if report.braid_orders and not set(report.braid_orders) <= {1, 2}:
                    res.fail(f"braid order outside 1..2 at ({format_subset(left)}, "
                             f"{format_subset(right)}, {format_subset(target)})")
    return res


def run_invariant_sweep(sys: CoxeterSystem, seed: int = 0) -> list[CheckResult]:
    rng = random.Random(seed)
    return [
        _check_cayley(sys),
        _check_recoil_descent(sys),
        _check_class_edges(sys),
        _check_classes(sys),
        _check_coverings(sys),
        _check_algebra(sys, rng),
        _check_monodromy(sys),
    ]
