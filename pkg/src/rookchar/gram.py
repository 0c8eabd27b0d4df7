"""Finite certificates for the character axioms: Gram matrices and centrality.

Positive-definiteness is checked through the smallest eigenvalue of the Gram
matrix ``[f(r_i* r_j)]``, computed with a cyclic Jacobi iteration.
"""
import random
from dataclasses import dataclass, field

import numpy as np

from .errors import EmptyPool, NoConvergence, NotSymmetric
from .notation import format_element
from .rook import compose, star
from .thoma import character

PSD_TOL = 1e-9
CENTRALITY_TOL = 1e-12
SYMMETRY_TOL = 1e-14
JACOBI_TOL = 1e-12
MAX_SWEEPS = 100
MAX_WITNESS_SUBSET = 12


def gram_matrix(p, elements):
    elements = list(elements)
    if not elements:
        raise ValueError("gram_matrix needs at least one element")
    stars = [star(r) for r in elements]
    n = len(elements)
    g = np.empty((n, n))
    for i in range(n):
        for j in range(i, n):
            g[i, j] = g[j, i] = character(p, compose(stars[i], elements[j]))
    return g


def _check_symmetric(m):
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotSymmetric(f"expected a square matrix, got shape {m.shape}")
    scale = max(1.0, float(np.max(np.abs(m)))) if m.size else 1.0
    if m.size and np.max(np.abs(m - m.T)) > SYMMETRY_TOL * scale:
        raise NotSymmetric("matrix is not symmetric")
    return m


def _off_norm(a):
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def jacobi_eigh(m, tol=JACOBI_TOL, max_sweeps=MAX_SWEEPS):
    """Eigenvalues and eigenvectors (as columns) of a symmetric matrix.

    Cyclic-by-row Jacobi; stops once the off-diagonal Frobenius norm drops
    below ``tol * ||m||_F``.
    """
    a = _check_symmetric(m).copy()
    n = a.shape[0]
    v = np.eye(n)
    norm = np.linalg.norm(a)
    threshold = tol * norm
    for _ in range(max_sweeps):
        off = _off_norm(a)
        if off <= threshold:
            return np.diag(a).copy(), v
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.copysign(1.0, theta) / (abs(theta) + np.hypot(1.0, theta))
                c = 1.0 / np.hypot(1.0, t)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q]
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :]
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q]
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    off = _off_norm(a)
    if off <= threshold:
        return np.diag(a).copy(), v
    raise NoConvergence(f"Jacobi did not converge after {max_sweeps} sweeps (off-norm {off:.3e})")


def min_eigenvalue(m):
    values, _ = jacobi_eigh(m)
    return float(np.min(values))


@dataclass
class PsdReport:
    min_eigenvalue: float
    is_psd: bool
    witness_vector: list | None = None
    subset: list = field(default_factory=list)

    def to_json(self):
        out = {
            "min_eigenvalue": self.min_eigenvalue,
            "is_psd": self.is_psd,
            "subset": [format_element(r) for r in self.subset],
        }
        if self.witness_vector is not None:
            out["witness_vector"] = self.witness_vector
        return out


def psd_report(m, subset=(), tol=PSD_TOL):
    values, vectors = jacobi_eigh(m)
    k = int(np.argmin(values))
    lam = float(values[k])
    ok = lam >= -tol
    witness = None if ok else [float(x) for x in vectors[:, k]]
    return PsdReport(lam, ok, witness, list(subset))


@dataclass
class CentralityReport:
    max_deviation: float
    passed: bool
    worst_pair: tuple | None
    pairs_checked: int

    def to_json(self):
        return {
            "max_deviation": self.max_deviation,
            "passed": self.passed,
            "worst_pair": None if self.worst_pair is None else [format_element(r) for r in self.worst_pair],
            "pairs_checked": self.pairs_checked,
        }


def check_centrality(p, elements, tol=CENTRALITY_TOL):
    """Largest ``|f(rs) - f(sr)|`` over all pairs of ``elements``."""
    elements = list(elements)
    worst, worst_pair, count = 0.0, None, 0
    for i, r in enumerate(elements):
        for s in elements[i + 1:]:
            dev = abs(character(p, compose(r, s)) - character(p, compose(s, r)))
            count += 1
            if worst_pair is None or dev > worst:
                worst, worst_pair = dev, (r, s)
    return CentralityReport(worst, worst <= tol, worst_pair, count)


def witness_search(p, pool, max_subset, seed, trials=200, tol=PSD_TOL):
    """Look for a Gram matrix with a negative eigenvalue among random subsets.

    Exploratory: the result records the most negative smallest eigenvalue
    seen and its subset, whether or not it is negative.
    """
    pool = list(pool)
    if not pool:
        raise EmptyPool("witness search needs a nonempty pool")
    if max_subset > MAX_WITNESS_SUBSET:
        raise ValueError(f"max_subset is capped at {MAX_WITNESS_SUBSET}")
    size_cap = max(1, min(max_subset, len(pool)))
    rng = random.Random(seed)
    best = None
    for _ in range(trials):
        size = rng.randint(1, size_cap)
        subset = rng.sample(pool, size)
        report = psd_report(gram_matrix(p, subset), subset, tol)
        if best is None or report.min_eigenvalue < best.min_eigenvalue:
            best = report
    return best
