import itertools
from math import prod

import pytest
from hypothesis import given, strategies as st

from rookchar import errors
from rookchar.notation import parse
from rookchar.quasicycle import decompose, random_grouping, to_element
from rookchar.rook import IDENTITY, compose, star
from rookchar.thoma import (
    ThomaParams,
    character,
    cycle_value,
    from_json,
    quasicycle_value,
    unchecked,
    validate,
)

from .conftest import PARAM_SETS, rook_elements


class TestValidate:
    def test_valid(self):
        p = validate((0.5, 0.3), (0.2,), {"alpha_index": 2})
        assert p.rho == 0.3
        assert p.gamma == pytest.approx(0.0, abs=1e-15)

    def test_mass(self):
        for rho in ("zero", 1):
            with pytest.raises(errors.MassExceedsOne):
                validate((0.6,), (0.6,), rho)

    def test_trivial_with_dead_kill(self):
        p = validate((1.0,), (), "zero")
        assert p.rho == 0.0 and p.gamma == 0.0

    @pytest.mark.parametrize(
        "alpha, beta, rho, exc",
        [
            ((0.2, 0.3), (), "zero", errors.NotDescending),
            ((0.3,), (0.1, 0.2), "zero", errors.NotDescending),
            ((0.3,), (), 2, errors.RhoIndexOutOfRange),
            ((0.3,), (), 0.3, errors.InvalidParams),
            ((0.0,), (), "zero", errors.InvalidParams),
        ],
    )
    def test_errors(self, alpha, beta, rho, exc):
        with pytest.raises(exc):
            validate(alpha, beta, rho)

    def test_json(self):
        p = from_json({"alpha": [0.5, 0.3], "beta": [0.2], "rho": {"alpha_index": 2}})
        assert p == validate((0.5, 0.3), (0.2,), 2)
        assert from_json(p.to_json()) == p
        assert from_json({"alpha": [0.4], "rho": "zero"}).rho == 0.0
        with pytest.raises(errors.InvalidParams):
            from_json({"alpha": [1.0], "unchecked_rho": 0.5})
        q = from_json({"alpha": [1.0], "unchecked_rho": 0.5}, allow_unchecked=True)
        assert q.rho == 0.5 and not q.is_checked


class TestValues:
    def test_cycle_value(self, p0):
        assert cycle_value(p0, 2) == pytest.approx(0.25 + 0.09 - 0.04, abs=1e-15)
        assert cycle_value(p0, 3) == pytest.approx(0.125 + 0.027 + 0.008, abs=1e-15)
        for p in PARAM_SETS:
            assert cycle_value(p, 1) == 1.0

    def test_character_examples(self, p0):
        assert character(p0, parse("(1 2)k{1}")) == pytest.approx(0.09, abs=1e-15)
        assert character(p0, parse("(1 2 3)k{2}(4 5)")) == pytest.approx(0.3**3 * 0.30, abs=1e-15)
        for p in PARAM_SETS:
            assert character(p, IDENTITY) == 1.0

    def test_rho_zero_kills_chains(self):
        p = validate((0.4,), (0.3,), "zero")
        assert character(p, parse("k{1}")) == 0.0
        assert character(p, parse("(1 2)")) == pytest.approx(0.16 - 0.09)

    def test_sign_alternates_on_beta(self):
        p = validate((), (0.5,), "zero")
        for length in range(2, 8):
            assert cycle_value(p, length) == pytest.approx((-1) ** (length + 1) * 0.5**length)


class TestProperties:
    @pytest.mark.parametrize("p", PARAM_SETS)
    def test_star_symmetry(self, p, r3):
        for r in r3:
            assert character(p, star(r)) == character(p, r)

    @pytest.mark.parametrize("p", PARAM_SETS)
    def test_multiplicativity(self, p, r4):
        for r in r4:
            factors = [character(p, to_element(q)) for q in decompose(r)]
            assert character(p, r) == pytest.approx(prod(factors), abs=1e-15)

    @pytest.mark.parametrize("p", PARAM_SETS)
    def test_centrality(self, p, r3):
        for r, s in itertools.product(r3, repeat=2):
            assert abs(character(p, compose(r, s)) - character(p, compose(s, r))) <= 1e-14

    @pytest.mark.parametrize("p", PARAM_SETS)
    def test_bound(self, p, r4):
        assert max(abs(character(p, r)) for r in r4) <= 1.0 + 1e-15

    @given(rook_elements(max_n=7), st.integers(0, 2**32), st.sampled_from(PARAM_SETS))
    def test_decomposition_independence(self, r, seed, p):
        groups = random_grouping(decompose(r), seed)
        value = prod(quasicycle_value(p, points, kill) for points, kill in groups)
        assert value == pytest.approx(character(p, r), abs=1e-14)

    def test_unchecked_rho(self):
        p = unchecked((1.0,), (), 0.5)
        assert isinstance(p, ThomaParams)
        assert character(p, parse("(1 2)k{1}")) == 0.25
