"""Indecomposable characters of the finitary rook monoid.

A character is fixed by Thoma parameters ``alpha``, ``beta`` together with
the value ``rho`` on a single-point kill, where ``rho`` must be zero or one
of the ``alpha``.  On a pure cycle of length ``l >= 2`` the value is
``sum(a**l) + (-1)**(l + 1) * sum(b**l)``; on a quasicycle with a nonempty
kill set on ``m`` points it is ``rho**m``; the value on a product of
independent quasicycles is the product of the values.
"""
from dataclasses import dataclass
from math import prod

from .errors import InvalidParams, MassExceedsOne, NotDescending, RhoIndexOutOfRange
from .quasicycle import CYCLE, decompose

MASS_TOL = 1e-12

ZERO = "zero"


@dataclass(frozen=True)
class ThomaParams:
    """Validated character parameters.

    ``rho_index`` is ``None`` for rho = 0, else a 1-based index into
    ``alpha``.  ``unchecked_rho`` overrides rho with an arbitrary float and
    is only set through :func:`unchecked`, for exploring invalid rho.
    """

    alpha: tuple = ()
    beta: tuple = ()
    rho_index: int | None = None
    unchecked_rho: float | None = None

    @property
    def rho(self):
        if self.unchecked_rho is not None:
            return self.unchecked_rho
        if self.rho_index is None:
            return 0.0
        return self.alpha[self.rho_index - 1]

    @property
    def gamma(self):
        return 1.0 - sum(self.alpha) - sum(self.beta)

    @property
    def is_checked(self):
        return self.unchecked_rho is None

    def to_json(self):
        out = {"alpha": list(self.alpha), "beta": list(self.beta)}
        if self.unchecked_rho is not None:
            out["unchecked_rho"] = self.unchecked_rho
        elif self.rho_index is None:
            out["rho"] = ZERO
        else:
            out["rho"] = {"alpha_index": self.rho_index}
        return out


def _check_sequence(name, values):
    values = tuple(float(v) for v in values)
    for v in values:
        if not 0.0 < v <= 1.0:
            raise InvalidParams(f"{name} entries must lie in (0, 1], got {v}")
    for a, b in zip(values, values[1:]):
        if b > a:
            raise NotDescending(f"{name} must be non-increasing, got {list(values)}")
    return values


def _check_mass(alpha, beta):
    mass = sum(alpha) + sum(beta)
    if mass > 1.0 + MASS_TOL:
        raise MassExceedsOne(f"sum(alpha) + sum(beta) = {mass} exceeds 1")


def validate(alpha=(), beta=(), rho=ZERO):
    """Check raw parameters.

    ``rho`` is ``"zero"``/``None``/``0`` or a 1-based alpha index given as an
    int or ``{"alpha_index": i}``.
    """
    alpha = _check_sequence("alpha", alpha)
    beta = _check_sequence("beta", beta)
    _check_mass(alpha, beta)
    if isinstance(rho, dict):
        rho = rho["alpha_index"]
    if rho in (None, ZERO, 0):
        index = None
    else:
        if isinstance(rho, bool) or not isinstance(rho, int):
            raise InvalidParams(f"rho must be 'zero' or an alpha index, got {rho!r}")
        if not 1 <= rho <= len(alpha):
            raise RhoIndexOutOfRange(f"rho index {rho} outside 1..{len(alpha)}")
        index = rho
    return ThomaParams(alpha, beta, index)


def unchecked(alpha=(), beta=(), rho=0.0):
    """Parameters with a free rho value; alpha/beta are still validated."""
    alpha = _check_sequence("alpha", alpha)
    beta = _check_sequence("beta", beta)
    _check_mass(alpha, beta)
    return ThomaParams(alpha, beta, None, float(rho))


def from_json(data, allow_unchecked=False):
    alpha = data.get("alpha", ())
    beta = data.get("beta", ())
    if "unchecked_rho" in data:
        if not allow_unchecked:
            raise InvalidParams("'unchecked_rho' is only accepted by gram entry points")
        return unchecked(alpha, beta, data["unchecked_rho"])
    return validate(alpha, beta, data.get("rho", ZERO))


def cycle_value(p, length):
    """Character value on a cycle of the given length."""
    if length < 1:
        raise ValueError("cycle length must be at least 1")
    if length == 1:
        return 1.0
    sign = -1.0 if length % 2 == 0 else 1.0
    return sum(a ** length for a in p.alpha) + sign * sum(b ** length for b in p.beta)


def quasicycle_value(p, points, kill):
    """Value on ``cycle(points) * eps_kill`` straight from the closed forms."""
    if kill:
        return p.rho ** len(points)
    return cycle_value(p, len(points))


def character(p, r):
    """Character value on a rook element."""
    values = []
    chain_points = 0
    for q in decompose(r):
        if q.kind == CYCLE:
            values.append(cycle_value(p, len(q)))
        else:
            chain_points += len(q)
    # rho is raised once and cycle values sorted, so equal multisets of
    # factors give bit-identical results
    if chain_points:
        values.append(p.rho ** chain_points)
    return float(prod(sorted(values)))
