"""
Decision procedures for the approximate fixed point property.

A finite image X fails the property exactly when some continuous self-map
sends every point outside its closed neighborhood. AfppSearch looks for such
a map as a constraint problem: one variable per point, the allowed values of
x are X minus N*(x), and continuity is enforced together with the distance
bounds it implies (graph distance can only shrink). Exhausting the search
proves the property.
"""

import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterator, List, Optional, Tuple

import networkx as nx

from .core import DigitalImage, Point, SelfMap, Window, closed_neighborhood, is_continuous
from .exceptions import BudgetExceeded, DomainError

logger = logging.getLogger(__name__)


class Verdict(Enum):
    WITNESS = "Witness"
    HAS_AFPP = "HasAfpp"
    HAS_FPP = "HasFpp"


@dataclass(frozen=True)
class AfppCertificate:
    verdict: Verdict
    witness: Optional[SelfMap] = None
    nodes: int = 0
    propagations: int = 0

    @property
    def has_witness(self) -> bool:
        return self.verdict is Verdict.WITNESS

    @property
    def stats(self) -> Dict[str, int]:
        return {"nodes": self.nodes, "propagations": self.propagations}


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass
class AfppSearch:
    """
    Backtracking with arc consistency maintained after every assignment.

    Variables are taken by fewest remaining values, ties broken by canonical
    point order, and values are tried in canonical order, so node counts are
    reproducible.
    """

    image: DigitalImage
    budget: int = 0
    fixed_points_only: bool = False
    nodes: int = field(default=0, init=False)
    propagations: int = field(default=0, init=False)

    DEFAULT_BUDGET = 10 ** 7

    def __post_init__(self):
        if not self.image:
            raise DomainError("Search needs a nonempty image")
        if self.budget <= 0:
            self.budget = self.DEFAULT_BUDGET
        self.points: List[Point] = self.image.sorted_points()
        index = {p: i for i, p in enumerate(self.points)}
        n = len(self.points)

        lengths = dict(nx.all_pairs_shortest_path_length(self.image.graph()))
        self.distance = [[lengths[p].get(q) for q in self.points] for p in self.points]
        diameter = max(d for row in self.distance for d in row if d is not None)
        connected = all(d is not None for row in self.distance for d in row)

        # compat[d][u]: values v whose distance to value u is at most d
        self.compat: Dict[int, List[int]] = {}
        for d in sorted({d for row in self.distance for d in row if d}):
            self.compat[d] = [
                sum(1 << v for v in range(n) if self.distance[u][v] is not None and self.distance[u][v] <= d)
                for u in range(n)
            ]

        self.arcs: List[List[Tuple[int, int]]] = [[] for _ in range(n)]
        for a, b in itertools.combinations(range(n), 2):
            d = self.distance[a][b]
            if d is None or (connected and d >= diameter):
                continue
            self.arcs[a].append((b, d))
            self.arcs[b].append((a, d))

        self.initial: List[int] = []
        for p in self.points:
            banned = {p} if self.fixed_points_only else closed_neighborhood(self.image, p)
            self.initial.append(sum(1 << index[q] for q in self.points if q not in banned))

    def _revise(self, domains: List[int], i: int, j: int, d: int) -> bool:
        """Drop values of i with no support in j. True if anything was dropped."""
        self.propagations += 1
        target = domains[j]
        compat = self.compat[d]
        kept = 0
        for u in _bits(domains[i]):
            if compat[u] & target:
                kept |= 1 << u
        if kept != domains[i]:
            domains[i] = kept
            return True
        return False

    def _propagate(self, domains: List[int], queue: List[Tuple[int, int, int]]) -> bool:
        """AC-3 from the given arcs. False on a wipe-out."""
        pending = set(queue)
        while queue:
            i, j, d = queue.pop()
            pending.discard((i, j, d))
            if self._revise(domains, i, j, d):
                if not domains[i]:
                    return False
                for k, dk in self.arcs[i]:
                    if k != j and (k, i, dk) not in pending:
                        queue.append((k, i, dk))
                        pending.add((k, i, dk))
        return True

    def _choose(self, domains: List[int]) -> Optional[int]:
        best, best_size = None, 0
        for i, mask in enumerate(domains):
            size = bin(mask).count("1")
            if size > 1 and (best is None or size < best_size):
                best, best_size = i, size
        return best

    def _search(self, domains: List[int]) -> Optional[List[int]]:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(self.budget, {"nodes": self.nodes - 1, "propagations": self.propagations})
        var = self._choose(domains)
        if var is None:
            return domains
        for value in _bits(domains[var]):
            trial = list(domains)
            trial[var] = 1 << value
            if self._propagate(trial, [(k, var, d) for k, d in self.arcs[var]]):
                found = self._search(trial)
                if found is not None:
                    return found
        return None

    def run(self) -> AfppCertificate:
        """
        Returns:
            Witness certificate with a map, or the exhausted verdict

        Raises:
            BudgetExceeded: If the node budget runs out first
        """
        domains = list(self.initial)
        queue = [(i, j, d) for i in range(len(domains)) for j, d in self.arcs[i]]
        found = None
        if all(domains) and self._propagate(domains, queue):
            found = self._search(domains)
        logger.debug("Search over %d points: %d nodes, %d propagations",
                     len(self.points), self.nodes, self.propagations)

        if found is None:
            verdict = Verdict.HAS_FPP if self.fixed_points_only else Verdict.HAS_AFPP
            return AfppCertificate(verdict, None, self.nodes, self.propagations)
        table = {p: self.points[mask.bit_length() - 1] for p, mask in zip(self.points, found)}
        witness = SelfMap(self.image, table)
        return AfppCertificate(Verdict.WITNESS, witness, self.nodes, self.propagations)


def search_afpp_violation(X: DigitalImage, budget: int = AfppSearch.DEFAULT_BUDGET) -> AfppCertificate:
    """Find a continuous self-map without approximate fixed points, or prove none exists."""
    return AfppSearch(X, budget).run()


def search_fixed_point_free(X: DigitalImage, budget: int = AfppSearch.DEFAULT_BUDGET) -> AfppCertificate:
    """Find a continuous self-map without fixed points, or prove none exists."""
    return AfppSearch(X, budget, fixed_points_only=True).run()


def verify_no_approx_fixed_point(X: DigitalImage, f) -> bool:
    """True iff f is continuous on X and no f(x) lies in N*(X, x)."""
    try:
        if not is_continuous(f, X):
            return False
        return all(f(p) not in closed_neighborhood(X, p) for p in X)
    except DomainError:
        return False


def compose_through_retraction(r, w: SelfMap, X: DigitalImage) -> SelfMap:
    """
    The self-map x -> w(r(x)) of X, for a retraction r of X onto a set
    containing the domain of w.

    Raises:
        DomainError: If w's domain is not inside X or r leaves w's domain
    """
    U = w.domain
    if not U.points <= X.points:
        raise DomainError("The witness domain is not contained in the image")
    table = {}
    for p in X:
        q = r(p)
        if q not in U:
            raise DomainError(f"r{p} = {q} is outside the witness domain")
        table[p] = w(q)
    return SelfMap(X, table)


def _allowed_values(X: DigitalImage, fixed_points_only: bool) -> List[List[Point]]:
    values = []
    for p in X:
        banned = {p} if fixed_points_only else closed_neighborhood(X, p)
        values.append([q for q in X if q not in banned])
    return values


def exhaustive_afpp(X: DigitalImage, fixed_points_only: bool = False) -> Optional[SelfMap]:
    """
    Brute-force counterpart of AfppSearch for small images: the first
    witness in product order, or None.
    """
    points = X.sorted_points()
    for values in itertools.product(*_allowed_values(X, fixed_points_only)):
        table = dict(zip(points, values))
        if is_continuous(table, X):
            return SelfMap(X, table)
    return None


def count_continuous_self_maps(X: DigitalImage) -> int:
    points = X.sorted_points()
    return sum(
        1 for values in itertools.product(points, repeat=len(points)) if is_continuous(dict(zip(points, values)), X)
    )


def afpp_from_retraction(r, window: Window) -> bool:
    """
    True when r verifies as a retraction of window onto its target. A
    rectangle has the property and retracts preserve it, so the target then
    has it too.
    """
    from .retraction import verify_retraction

    return verify_retraction(r, window).passed
