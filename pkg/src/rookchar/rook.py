"""Finitary elements of the symmetric inverse semigroup (rook monoid).

An element is a partial injection of the positive integers that is the
identity outside a finite carrier.  Composition follows the 0-1 matrix
product with rows as inputs: ``compose(r, s)`` applies ``r`` first, so
``compose(r, s)(i) == s(r(i))`` and ``as_matrix`` is a homomorphism.
"""
from functools import lru_cache
from itertools import combinations, permutations
from math import comb, factorial

import numpy as np

from .errors import (
    BoundExceeded,
    DuplicateInput,
    DuplicateOutput,
    DuplicatePoint,
    NonPositiveIndex,
    SupportExceedsDimension,
)

#: Marker for a killed input in :func:`from_map` pairs.
KILL = None

DEFAULT_ENUM_BOUND = 6


class RookElement:
    """A partial injection, identity off a finite carrier.

    Stored canonically: only points that are moved or killed are kept, as a
    sorted tuple of ``(input, output)`` pairs with ``output is None`` for a
    killed input.  Equality and hashing are structural.
    """

    __slots__ = ("_pairs", "_map")

    def __init__(self, mapping=()):
        items = mapping.items() if isinstance(mapping, dict) else mapping
        table = {}
        for i, j in items:
            if j is not None and i == j:
                continue
            table[i] = j
        self._pairs = tuple(sorted(table.items()))
        self._map = table

    # -- basic access --

    def __call__(self, i):
        """Image of ``i``; ``None`` when ``i`` is killed."""
        return self._map.get(i, i)

    @property
    def pairs(self):
        return self._pairs

    @property
    def carrier(self):
        return frozenset(self._map)

    @property
    def killed(self):
        """Inputs with no image."""
        return frozenset(i for i, j in self._pairs if j is None)

    @property
    def missing(self):
        """Outputs with no preimage."""
        hit = {j for _, j in self._pairs if j is not None}
        return frozenset(self._map) - hit

    def is_identity(self):
        return not self._pairs

    def is_permutation(self):
        return all(j is not None for _, j in self._pairs)

    def max_point(self):
        return max(self._map, default=0)

    # -- algebra --

    def __mul__(self, other):
        if not isinstance(other, RookElement):
            return NotImplemented
        return compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, RookElement):
            return NotImplemented
        return self._pairs == other._pairs

    def __hash__(self):
        return hash(self._pairs)

    def sort_key(self):
        return tuple((i, 0 if j is None else j) for i, j in self._pairs)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        from .notation import format_element

        return f"RookElement({format_element(self)!r})"


IDENTITY = RookElement()


def _check_index(i):
    if not isinstance(i, (int, np.integer)) or isinstance(i, bool) or i < 1:
        raise NonPositiveIndex(f"indices must be positive integers, got {i!r}")
    return int(i)


def from_map(pairs):
    """Build a canonical element from ``(input, output-or-KILL)`` pairs.

    Points not listed are fixed.  Every output must be an input of the
    listing (otherwise it would collide with an implicit fixed point).
    """
    if isinstance(pairs, dict):
        pairs = list(pairs.items())
    table = {}
    seen_out = set()
    for i, j in pairs:
        i = _check_index(i)
        if i in table:
            raise DuplicateInput(f"input {i} listed twice")
        if j is not None:
            j = _check_index(j)
            if j in seen_out:
                raise DuplicateOutput(f"output {j} listed twice")
            seen_out.add(j)
        table[i] = j
    for j in seen_out:
        if j not in table:
            raise DuplicateOutput(f"output {j} collides with the fixed point {j}")
    return RookElement(table)


def compose(r, s):
    """``r`` then ``s``: the map ``i -> s(r(i))``, with kills absorbing."""
    out = {}
    for i in r.carrier | s.carrier:
        j = r(i)
        out[i] = None if j is None else s(j)
    return RookElement(out)


def compose_all(elements):
    result = IDENTITY
    for x in elements:
        result = compose(result, x)
    return result


def star(r):
    """Inverse partial map (matrix transpose)."""
    inv = {j: i for i, j in r.pairs if j is not None}
    out = {j: inv.get(j) for j in r.carrier}
    return RookElement(out)


def epsilon(points):
    """Diagonal idempotent killing exactly ``points``."""
    return RookElement({_check_index(i): None for i in points})


def cycle(points):
    """Cyclic permutation ``points[0] -> points[1] -> ... -> points[0]``."""
    pts = [_check_index(i) for i in points]
    if len(set(pts)) != len(pts):
        raise DuplicatePoint(f"cycle {tuple(pts)} repeats a point")
    if len(pts) < 2:
        return IDENTITY
    return RookElement({a: b for a, b in zip(pts, pts[1:] + pts[:1])})


def transposition(a, b):
    return cycle((a, b))


def support(r):
    return r.carrier


def rank_deficit(r):
    return len(r.killed)


def as_matrix(r, n):
    """0-1 matrix with entry ``[i-1, j-1] == 1`` iff ``r`` sends ``i`` to ``j``."""
    if r.max_point() > n:
        raise SupportExceedsDimension(f"support {sorted(r.carrier)} does not fit in dimension {n}")
    m = np.zeros((n, n), dtype=np.int64)
    for i in range(1, n + 1):
        j = r(i)
        if j is not None:
            m[i - 1, j - 1] = 1
    return m


def from_matrix(m):
    """Inverse of :func:`as_matrix` for a square 0-1 matrix."""
    m = np.asarray(m)
    n = m.shape[0]
    pairs = []
    for i in range(n):
        cols = np.flatnonzero(m[i])
        if len(cols) > 1:
            raise DuplicateOutput(f"row {i + 1} has more than one entry")
        pairs.append((i + 1, int(cols[0]) + 1 if len(cols) else KILL))
    return from_map(pairs)


def rn_size(n):
    """Number of elements of R_n."""
    return sum(comb(n, k) ** 2 * factorial(k) for k in range(n + 1))


def enumerate_rn(n, bound=DEFAULT_ENUM_BOUND):
    """All elements of R_n, ordered by rank deficit, then (domain, image, bijection)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > bound:
        raise BoundExceeded(f"n={n} exceeds the enumeration bound {bound}")
    return list(_enumerate(n))


@lru_cache(maxsize=None)
def _enumerate(n):
    points = range(1, n + 1)
    out = []
    for deficit in range(n + 1):
        k = n - deficit
        for dom in combinations(points, k):
            killed = [i for i in points if i not in dom]
            for img in combinations(points, k):
                for bij in permutations(img):
                    table = dict(zip(dom, bij))
                    table.update((i, None) for i in killed)
                    out.append(RookElement(table))
    return tuple(out)
