"""Finite tensor-product realization of the characters.

A :class:`SpectralModel` is a diagonal operator ``A`` on ``C^d`` (signed
eigenvalues ``diag``) with an optional rank-one projection ``q`` onto a
basis vector where ``A > 0``.  Rook elements act on ``(C^d)^{(x)n}``:

* the adjacent transposition ``(k k+1)`` swaps tensor factors ``k`` and
  ``k+1`` with sign ``-1`` when both swapped letters are negative
  eigenvectors of ``A``;
* ``eps_{1}`` projects factor 1 onto ``q`` (or is zero when ``q`` is absent).

Every general element is lifted through a word in these generators.  The
character is the value of the product state whose ``k``-th factor has
density ``|A| + gamma * e_{n_k n_k}``, ``n_k`` the ``k``-th kernel index.

Operators are partial signed permutations of the ``d**n`` basis tuples and
are stored as two flat arrays (target index, weight), never as dense
matrices.
"""
import os
import random
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import (
    BadDimension,
    BasisTooLarge,
    EMinusIsFull,
    KernelTooSmall,
    QOnNonpositive,
    SupportExceedsTruncation,
    TraceExceedsOne,
)
from .rook import RookElement, compose, compose_all, epsilon, star, transposition
from .thoma import ThomaParams

TRACE_TOL = 1e-12
DEFAULT_MAX_BASIS = 10**6


def max_basis():
    return int(os.environ.get("ROOKCHAR_MAX_BASIS", DEFAULT_MAX_BASIS))


@dataclass(frozen=True)
class SpectralModel:
    diag: tuple
    q_index: int | None
    n_factors: int

    @property
    def dim(self):
        return len(self.diag)

    @property
    def trace_abs(self):
        return sum(abs(a) for a in self.diag)

    @property
    def gamma(self):
        return max(0.0, 1.0 - self.trace_abs)

    @property
    def e_minus(self):
        """0-based letters spanning the negative spectral subspace."""
        return frozenset(i for i, a in enumerate(self.diag) if a < 0)

    @property
    def kernel_indices(self):
        return tuple(i for i, a in enumerate(self.diag) if a == 0)

    @property
    def basis_size(self):
        return self.dim ** self.n_factors

    def factor_density(self, k):
        """Density weights of the ``k``-th (1-based) factor state."""
        w = np.abs(np.asarray(self.diag, dtype=float))
        if self.gamma > 0:
            w[self.kernel_indices[k - 1]] += self.gamma
        return w

    def thoma_params(self):
        """Character parameters realized by this model."""
        alpha = tuple(sorted((a for a in self.diag if a > 0), reverse=True))
        beta = tuple(sorted((-a for a in self.diag if a < 0), reverse=True))
        rho = None
        if self.q_index is not None:
            rho = alpha.index(self.diag[self.q_index - 1]) + 1
        return ThomaParams(alpha, beta, rho)

    def to_json(self):
        return {"diag": list(self.diag), "q_index": self.q_index, "n_factors": self.n_factors}


def validate_model(raw=None, **kwargs):
    """Check a model given as a dict (``diag``, ``q_index``, ``n_factors``) or keywords."""
    raw = dict(raw or {}, **kwargs)
    diag = tuple(float(a) for a in raw.get("diag", ()))
    q_index = raw.get("q_index")
    n_factors = raw.get("n_factors", 1)
    if not diag:
        raise BadDimension("diag must be nonempty")
    if isinstance(n_factors, bool) or not isinstance(n_factors, int) or n_factors < 1:
        raise BadDimension(f"n_factors must be a positive integer, got {n_factors!r}")
    if q_index is not None:
        if isinstance(q_index, bool) or not isinstance(q_index, int) or not 1 <= q_index <= len(diag):
            raise BadDimension(f"q_index must be in 1..{len(diag)}, got {q_index!r}")
    trace = sum(abs(a) for a in diag)
    if trace > 1.0 + TRACE_TOL:
        raise TraceExceedsOne(f"Tr|A| = {trace} exceeds 1")
    if q_index is not None and diag[q_index - 1] <= 0:
        raise QOnNonpositive(f"q sits on eigenvalue {diag[q_index - 1]}, which is not positive")
    zeros = sum(1 for a in diag if a == 0)
    if trace < 1.0 - TRACE_TOL and zeros < n_factors:
        raise KernelTooSmall(
            f"Tr|A| = {trace} < 1 needs at least {n_factors} zero eigenvalues, found {zeros}"
        )
    return SpectralModel(diag, q_index, n_factors)


@lru_cache(maxsize=32)
def _letters(d, n):
    """``(d**n, n)`` array of 0-based letters; factor 1 is the most significant digit."""
    idx = np.arange(d**n)
    return np.stack(np.unravel_index(idx, (d,) * n), axis=1)


def _ravel(letters, d):
    n = letters.shape[1]
    return np.ravel_multi_index(tuple(letters[:, k] for k in range(n)), (d,) * n)


class SignedPartialPerm:
    """Partial signed permutation of the tensor basis.

    ``targets[b]`` is the image index of basis tuple ``b`` (``-1`` when
    ``b`` is outside the domain) and ``weights[b]`` its coefficient, so the
    operator sends ``|b>`` to ``weights[b] |targets[b]>``.  ``x @ y`` is the
    operator product (``y`` acts first).
    """

    __slots__ = ("dim", "n_factors", "targets", "weights")

    def __init__(self, dim, n_factors, targets, weights):
        targets = np.asarray(targets, dtype=np.int64).copy()
        weights = np.asarray(weights, dtype=float).copy()
        dead = (targets < 0) | (weights == 0)
        targets[dead] = -1
        weights[dead] = 0.0
        self.dim = dim
        self.n_factors = n_factors
        self.targets = targets
        self.weights = weights

    @classmethod
    def identity(cls, dim, n_factors):
        idx = np.arange(dim**n_factors)
        return cls(dim, n_factors, idx, np.ones(len(idx)))

    @classmethod
    def zero(cls, dim, n_factors):
        size = dim**n_factors
        return cls(dim, n_factors, np.full(size, -1), np.zeros(size))

    @classmethod
    def diagonal(cls, dim, n_factors, weights):
        return cls(dim, n_factors, np.arange(dim**n_factors), weights)

    def _check_shape(self, other):
        if (self.dim, self.n_factors) != (other.dim, other.n_factors):
            raise ValueError("operators act on different tensor spaces")

    def __matmul__(self, other):
        self._check_shape(other)
        live = other.targets >= 0
        targets = np.full_like(other.targets, -1)
        weights = np.zeros_like(other.weights)
        mid = other.targets[live]
        targets[live] = self.targets[mid]
        weights[live] = other.weights[live] * self.weights[mid]
        return SignedPartialPerm(self.dim, self.n_factors, targets, weights)

    def adjoint(self):
        live = np.flatnonzero(self.targets >= 0)
        targets = np.full_like(self.targets, -1)
        weights = np.zeros_like(self.weights)
        targets[self.targets[live]] = live
        weights[self.targets[live]] = self.weights[live]
        return SignedPartialPerm(self.dim, self.n_factors, targets, weights)

    def apply(self, letters):
        """Image of a basis tuple (0-based letters) as ``(weight, letters)``, or ``None``."""
        b = int(np.ravel_multi_index(tuple(letters), (self.dim,) * self.n_factors))
        t = int(self.targets[b])
        if t < 0:
            return None
        out = np.unravel_index(t, (self.dim,) * self.n_factors)
        return float(self.weights[b]), tuple(int(x) for x in out)

    def is_partial_injection(self):
        live = self.targets[self.targets >= 0]
        return len(np.unique(live)) == len(live)

    def __eq__(self, other):
        if not isinstance(other, SignedPartialPerm):
            return NotImplemented
        return (
            (self.dim, self.n_factors) == (other.dim, other.n_factors)
            and np.array_equal(self.targets, other.targets)
            and np.array_equal(self.weights, other.weights)
        )

    def allclose(self, other, atol=1e-12):
        return (
            (self.dim, self.n_factors) == (other.dim, other.n_factors)
            and np.array_equal(self.targets, other.targets)
            and np.allclose(self.weights, other.weights, rtol=0, atol=atol)
        )

    def to_dense(self):
        """Dense matrix with ``M[target, b] = weight`` (small spaces only)."""
        size = len(self.targets)
        m = np.zeros((size, size))
        live = np.flatnonzero(self.targets >= 0)
        m[self.targets[live], live] = self.weights[live]
        return m

    def __repr__(self):
        return f"SignedPartialPerm(dim={self.dim}, n_factors={self.n_factors}, nnz={int((self.targets >= 0).sum())})"


def _require_basis(m):
    if m.basis_size > max_basis():
        raise BasisTooLarge(
            f"d**n_factors = {m.basis_size} exceeds ROOKCHAR_MAX_BASIS = {max_basis()}"
        )


def _check_support(r, m):
    if r.max_point() > m.n_factors:
        raise SupportExceedsTruncation(
            f"support {sorted(r.carrier)} does not fit in {m.n_factors} tensor factors"
        )


# -- generator words --

def _permutation_word(sigma):
    """Adjacent transpositions whose composite (left to right) is ``sigma``."""
    word = []
    rest = sigma
    for top in range(sigma.max_point(), 1, -1):
        j = next(i for i in range(1, top + 1) if rest(i) == top)
        path = [transposition(i, i + 1) for i in range(j, top)]
        word += path
        rest = compose(star(compose_all(path)), rest)
    assert rest.is_identity()
    return word


def _kill_word(j, conjugator=None):
    """Word for ``eps_{j}`` as a conjugate of ``eps_{1}``."""
    eps1 = epsilon((1,))
    if conjugator is None:
        if j == 1:
            return [eps1]
        conjugator = transposition(1, j)
    g = conjugator
    if g(j) != 1:
        raise ValueError("the conjugator must send j to 1")
    w = _permutation_word(g)
    return w + [eps1] + _permutation_word(star(g))


def _extend(r, killed_order, missing_order):
    table = {i: r(i) for i in r.carrier if r(i) is not None}
    table.update(zip(killed_order, missing_order))
    return RookElement(table)


def generator_word(r):
    """Word in ``(k k+1)`` and ``eps_{1}`` whose left-to-right composite is ``r``.

    Uses ``r = eps_K * sigma`` with ``K`` the killed inputs and ``sigma``
    extending ``r`` by sending ``K`` onto the missing outputs in increasing
    order.
    """
    killed = sorted(r.killed)
    sigma = _extend(r, killed, sorted(r.missing))
    word = []
    for j in killed:
        word += _kill_word(j)
    word += _permutation_word(sigma)
    if compose_all(word) != r:
        raise AssertionError(f"generator word does not recompose to {r!r}")
    return word


def alternative_word(r, seed):
    """A second, randomized word for ``r``, for word-independence checks.

    Uses ``r = sigma * eps_M`` (``M`` the missing outputs) with a random
    bijection from killed inputs to missing outputs, random conjugators for
    the single kills, and random cancelling pairs ``(k k+1)(k k+1)``.
    """
    rng = random.Random(seed)
    killed = sorted(r.killed)
    missing = sorted(r.missing)
    rng.shuffle(missing)
    sigma = _extend(r, killed, missing)
    word = _permutation_word(sigma)
    span = r.max_point()
    for j in sorted(r.missing):
        others = [i for i in range(1, span + 1) if i != j]
        rng.shuffle(others)
        # random permutation sending j to 1
        table = {j: 1}
        table.update(zip(others, range(2, span + 1)))
        word += _kill_word(j, conjugator=RookElement(table))
    padded = []
    for g in word:
        padded.append(g)
        if span >= 2 and rng.random() < 0.3:
            k = rng.randint(1, span - 1)
            padded += [transposition(k, k + 1)] * 2
    if compose_all(padded) != r:
        raise AssertionError(f"alternative word does not recompose to {r!r}")
    return padded


# -- lifts --

@lru_cache(maxsize=256)
def _swap_lift(m, k):
    d, n = m.dim, m.n_factors
    letters = _letters(d, n)
    swapped = letters.copy()
    swapped[:, [k - 1, k]] = letters[:, [k, k - 1]]
    neg = np.zeros(d, dtype=bool)
    neg[list(m.e_minus)] = True
    sign = np.where(neg[letters[:, k - 1]] & neg[letters[:, k]], -1.0, 1.0)
    return SignedPartialPerm(d, n, _ravel(swapped, d), sign)


@lru_cache(maxsize=64)
def _eps1_lift(m):
    d, n = m.dim, m.n_factors
    if m.q_index is None:
        return SignedPartialPerm.zero(d, n)
    letters = _letters(d, n)
    return SignedPartialPerm.diagonal(d, n, (letters[:, 0] == m.q_index - 1).astype(float))


def lift_generator(g, m):
    if g == epsilon((1,)):
        return _eps1_lift(m)
    pts = sorted(g.carrier)
    if g.is_permutation() and len(pts) == 2 and pts[1] == pts[0] + 1:
        if pts[1] > m.n_factors:
            raise SupportExceedsTruncation(f"{g!r} acts outside {m.n_factors} factors")
        return _swap_lift(m, pts[0])
    raise ValueError(f"{g!r} is not a generator")


def lift_word(word, m):
    _require_basis(m)
    out = SignedPartialPerm.identity(m.dim, m.n_factors)
    for g in word:
        out = out @ lift_generator(g, m)
    return out


def lift(r, m):
    """Operator of ``r``; ``lift(compose(r, s)) == lift(r) @ lift(s)``."""
    _check_support(r, m)
    return lift_word(generator_word(r), m)


def transposition_closed_form(m, k, l):
    """Direct formula for the lift of ``(k l)``, ``k < l``.

    Swap of factors ``k`` and ``l``: sign ``-1`` when both letters are
    negative; when exactly one is, the sign is ``(-1)**`` the number of
    negative letters strictly between the two factors.
    """
    if not 1 <= k < l <= m.n_factors:
        raise SupportExceedsTruncation(f"({k} {l}) does not fit in {m.n_factors} factors")
    _require_basis(m)
    d, n = m.dim, m.n_factors
    letters = _letters(d, n)
    swapped = letters.copy()
    swapped[:, [k - 1, l - 1]] = letters[:, [l - 1, k - 1]]
    neg = np.zeros(d, dtype=bool)
    neg[list(m.e_minus)] = True
    nk, nl = neg[letters[:, k - 1]], neg[letters[:, l - 1]]
    between = neg[letters[:, k:l - 1]].sum(axis=1) if l - k > 1 else np.zeros(len(letters), dtype=int)
    sign = np.ones(len(letters))
    sign[nk & nl] = -1.0
    one = nk ^ nl
    sign[one] = np.where(between[one] % 2 == 1, -1.0, 1.0)
    return SignedPartialPerm(d, n, _ravel(swapped, d), sign)


def limit_operator(m, k):
    """``A`` acting in tensor factor ``k``: the limit of the lifts of ``(k n)``."""
    if not 1 <= k <= m.n_factors:
        raise SupportExceedsTruncation(f"factor {k} outside 1..{m.n_factors}")
    if len(m.e_minus) == m.dim:
        raise EMinusIsFull("the limit operator needs a non-negative part of the spectrum")
    _require_basis(m)
    letters = _letters(m.dim, m.n_factors)
    diag = np.asarray(m.diag, dtype=float)
    return SignedPartialPerm.diagonal(m.dim, m.n_factors, diag[letters[:, k - 1]])


# -- product state --

@lru_cache(maxsize=64)
def _state_weights(m):
    w = np.ones(1)
    for k in range(1, m.n_factors + 1):
        w = np.multiply.outer(w, m.factor_density(k)).ravel()
    return w


def expectation(x, m):
    """Value of the product state on ``x``: diagonal entries weighted by the densities."""
    if (x.dim, x.n_factors) != (m.dim, m.n_factors):
        raise ValueError("operator and model disagree on the tensor space")
    fixed = np.flatnonzero(x.targets == np.arange(len(x.targets)))
    return float(np.sum(x.weights[fixed] * _state_weights(m)[fixed]))


def oracle_character(m, r):
    """Character value of ``r`` computed in the tensor realization."""
    _check_support(r, m)
    if m.q_index is None and r.killed:
        return 0.0
    return expectation(lift(r, m), m)


def closed_form_character(m, r):
    """Trace formulas per quasicycle: ``Tr(|A| q A**(k-1))`` or ``Tr(|A| A**(k-1))``."""
    from .quasicycle import CYCLE, decompose

    a = np.asarray(m.diag, dtype=float)
    value = 1.0
    for q in decompose(r):
        k = len(q)
        if q.kind == CYCLE:
            value *= float(np.sum(np.abs(a) * a ** (k - 1)))
        elif m.q_index is None:
            return 0.0
        else:
            lam = a[m.q_index - 1]
            value *= float(abs(lam) * lam ** (k - 1))
    return value
