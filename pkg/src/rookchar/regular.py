"""Left and right regular representations of R_n on the span of R_n.

``left_action(r, t)`` is ``r t`` when ``(t t*)(r* r) == t t*`` and zero
otherwise; ``right_action(r, t)`` is ``t r*`` when ``(t* t)(r* r) == t* t``.
Both conditions compare diagonal idempotents, so they reduce to inclusions
of kill sets.  Products use the same convention as :func:`rook.compose`.
"""
import random

import numpy as np

from .errors import BoundExceeded
from .rook import compose, enumerate_rn, rank_deficit, star

LEFT = "left"
RIGHT = "right"
REP_BOUND = 4


def _left_ok(r, t):
    # t t* kills t's killed inputs, r* r kills r's missing outputs
    return r.missing <= t.killed


def _right_ok(r, t):
    # t* t kills t's missing outputs
    return r.missing <= t.missing


def left_action(r, t):
    """Basis image of ``t`` under the left action of ``r``; ``None`` stands for zero."""
    return compose(r, t) if _left_ok(r, t) else None


def right_action(r, t):
    return compose(t, star(r)) if _right_ok(r, t) else None


def left_action_literal(r, t):
    """Same as :func:`left_action`, evaluating the idempotent identity directly."""
    tt = compose(t, star(t))
    return compose(r, t) if compose(tt, compose(star(r), r)) == tt else None


def right_action_literal(r, t):
    tt = compose(star(t), t)
    return compose(t, star(r)) if compose(tt, compose(star(r), r)) == tt else None


def _basis(n):
    if n > REP_BOUND:
        raise BoundExceeded(f"regular representation matrices are capped at n={REP_BOUND}")
    basis = enumerate_rn(n)
    return basis, {t: i for i, t in enumerate(basis)}


def rep_matrix(side, r, n):
    """``|R_n| x |R_n|`` 0-1 matrix; column ``t`` holds the image of basis vector ``t``."""
    basis, index = _basis(n)
    act = left_action if side == LEFT else right_action
    if side not in (LEFT, RIGHT):
        raise ValueError(f"side must be {LEFT!r} or {RIGHT!r}")
    m = np.zeros((len(basis), len(basis)), dtype=np.int64)
    for col, t in enumerate(basis):
        image = act(r, t)
        if image is not None:
            m[index[image], col] = 1
    return m


def check_regular(n, samples=None, seed=0):
    """Verify the representation laws on R_n.

    Exhaustive when ``samples`` is ``None``; otherwise checks that many
    seeded triples ``(r, s, t)``.  Returns a dict of booleans.
    """
    basis, _ = _basis(n)
    rng = random.Random(seed)
    if samples is None:
        pairs = [(r, s) for r in basis for s in basis]
        singles = basis
    else:
        pairs = [(rng.choice(basis), rng.choice(basis)) for _ in range(samples)]
        singles = [r for r, _ in pairs]
    mats = {}

    def mat(side, r):
        key = (side, r)
        if key not in mats:
            mats[key] = rep_matrix(side, r, n)
        return mats[key]

    star_rep = all(
        np.array_equal(mat(side, star(r)), mat(side, r).T) for side in (LEFT, RIGHT) for r in singles
    )
    multiplicative = all(
        np.array_equal(mat(LEFT, compose(r, s)), mat(LEFT, r) @ mat(LEFT, s))
        and np.array_equal(mat(RIGHT, compose(r, s)), mat(RIGHT, r) @ mat(RIGHT, s))
        for r, s in pairs
    )
    commute = all(
        np.array_equal(mat(LEFT, r) @ mat(RIGHT, s), mat(RIGHT, s) @ mat(LEFT, r)) for r, s in pairs
    )
    grading = True
    for r in singles:
        for t in basis:
            for image in (left_action(r, t), right_action(r, t)):
                if image is not None and rank_deficit(image) != rank_deficit(t):
                    grading = False
    return {
        "n": n,
        "star_rep": star_rep,
        "multiplicative": multiplicative,
        "commute": commute,
        "grading": grading,
    }
