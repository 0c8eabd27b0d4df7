"""Decomposition of rook elements into independent quasicycles.

A quasicycle is a cycle followed by a diagonal kill, ``c * eps_A`` with
``A`` inside the cycle's points.  The canonical decomposition uses only
pure cycles and single-kill chains; it is unique, which gives a normal form
for printing and hashing.  Other valid factorizations (several chains merged
into one quasicycle) come from :func:`random_regrouping`.
"""
import random
from dataclasses import dataclass

from .rook import IDENTITY, RookElement, compose, compose_all, cycle, epsilon

CYCLE = "cycle"
CHAIN = "chain"


@dataclass(frozen=True)
class Quasicycle:
    """``kind`` is ``"cycle"`` (a pure cycle, >= 2 points) or ``"chain"``.

    A chain ``[a1, ..., am]`` sends ``a_i -> a_{i+1}`` and kills ``am``;
    ``a1`` has no preimage.  ``Chain([a])`` is ``eps_{a}``.
    """

    kind: str
    points: tuple

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(int(p) for p in self.points))
        if self.kind not in (CYCLE, CHAIN):
            raise ValueError(f"unknown quasicycle kind {self.kind!r}")
        if len(set(self.points)) != len(self.points):
            raise ValueError(f"quasicycle points {self.points} are not distinct")
        if self.kind == CYCLE and len(self.points) < 2:
            raise ValueError("a pure cycle needs at least two points")
        if self.kind == CHAIN and not self.points:
            raise ValueError("a chain needs at least one point")

    @property
    def support(self):
        return frozenset(self.points)

    def __len__(self):
        return len(self.points)

    def to_json(self):
        return {"kind": self.kind, "points": list(self.points)}

    @classmethod
    def from_json(cls, data):
        return cls(data["kind"], tuple(data["points"]))


def PureCycle(*points):
    return Quasicycle(CYCLE, points)


def Chain(*points):
    return Quasicycle(CHAIN, points)


def decompose(r):
    """Canonical quasicycle factors of ``r``, sorted by least point."""
    factors = []
    seen = set()
    # chains start at points of the carrier that nothing maps onto
    for start in sorted(r.missing):
        path = [start]
        nxt = r(start)
        while nxt is not None:
            path.append(nxt)
            nxt = r(nxt)
        seen.update(path)
        factors.append(Quasicycle(CHAIN, path))
    for start in sorted(r.carrier - seen):
        if start in seen:
            continue
        path = [start]
        nxt = r(start)
        while nxt != start:
            path.append(nxt)
            nxt = r(nxt)
        seen.update(path)
        factors.append(Quasicycle(CYCLE, path))
    factors.sort(key=lambda q: min(q.points))
    return factors


def quasicycle_parts(q):
    """``(cycle points, killed outputs)`` presenting ``q`` as ``cycle * eps_A``."""
    if q.kind == CYCLE:
        return q.points, frozenset()
    # a_m -> a_1 under the cycle; killing output a_1 kills input a_m
    return q.points, frozenset((q.points[0],))


def quasicycle_element(points, kill):
    """The element ``cycle(points) * eps_kill``; ``kill`` must lie in ``points``."""
    if not set(kill) <= set(points):
        raise ValueError(f"kill set {sorted(kill)} is not inside the cycle {tuple(points)}")
    return compose(cycle(points), epsilon(kill))


def to_element(q):
    if q.kind == CYCLE:
        return cycle(q.points)
    table = dict(zip(q.points, q.points[1:]))
    table[q.points[-1]] = None
    return RookElement(table)


def recompose(qs):
    return compose_all(to_element(q) for q in qs) if qs else IDENTITY


def random_grouping(qs, seed):
    """Random alternative factorization as ``(cycle points, kill set)`` pairs.

    Chains are shuffled and cut into consecutive groups; a group of several
    chains becomes one cycle through their concatenated points with every
    chain start killed.  Pure cycles are kept as they are.
    """
    rng = random.Random(seed)
    chains = [q for q in qs if q.kind == CHAIN]
    out = [quasicycle_parts(q) for q in qs if q.kind == CYCLE]
    rng.shuffle(chains)
    while chains:
        size = rng.randint(1, len(chains))
        group, chains = chains[:size], chains[size:]
        points = tuple(p for q in group for p in q.points)
        out.append((points, frozenset(q.points[0] for q in group)))
    return out


def random_regrouping(qs, seed):
    """Alternative quasicycle factorization of the product of ``qs``."""
    return [quasicycle_element(points, kill) for points, kill in random_grouping(qs, seed)]
