"""Worked fixtures used by the demos, the CLI example registry and the tests.

F1: four points, both measures the indicator of the full universe, and the
    two everywhere-different densities (1,2,1,2) and (2,1,2,1) -- the
    non-uniqueness showcase.
F2: two weighted points with an additive reference measure; the classical
    additive special case, density (2, 5).
F3: two points, nu the indicator of the full universe, mu half the counting
    measure -- no density exists (absolute continuity fails on a singleton).
F4: the sigma-finite model on {0, 1, ..., n}: nu gives every nonempty set
    mass 1, mu is the maximum element, and the glued density is f(x) = x.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .choquet import indefinite_integral_measure
from .decomposition import DecompositionFamily, make_family
from .functions import SimpleFunction, function_from_values
from .measures import (
    MonotoneMeasure,
    additive_measure,
    cardinality_measure,
    indicator_full_measure,
)
from .sigma_finite import TruncationModel, make_truncation_model
from .spaces import MeasurableSpace, build_space


@dataclass(frozen=True)
class PairFixture:
    space: MeasurableSpace
    mu: MonotoneMeasure
    nu: MonotoneMeasure


@dataclass(frozen=True)
class F1Fixture(PairFixture):
    family: DecompositionFamily
    f1: SimpleFunction
    f2: SimpleFunction


@dataclass(frozen=True)
class F2Fixture(PairFixture):
    f: SimpleFunction


def fixture_f1() -> F1Fixture:
    space = build_space(["1", "2", "3", "4"])
    nu = indicator_full_measure(space)
    family = make_family(
        space,
        [
            (0, space.full_set),
            (1, space.make_set(["2", "4"])),
            (2, space.empty_set),
        ],
    )
    f1 = function_from_values(space, {"1": 1, "2": 2, "3": 1, "4": 2})
    f2 = function_from_values(space, {"1": 2, "2": 1, "3": 2, "4": 1})
    return F1Fixture(space=space, mu=nu, nu=nu, family=family, f1=f1, f2=f2)


def fixture_f2() -> F2Fixture:
    space = build_space(["a", "b"])
    nu = additive_measure(space, {"a": Fraction(1, 2), "b": Fraction(1, 3)})
    f = function_from_values(space, {"a": 2, "b": 5})
    mu = indefinite_integral_measure(f, nu)
    return F2Fixture(space=space, mu=mu, nu=nu, f=f)


def fixture_f3() -> PairFixture:
    space = build_space(["1", "2"])
    nu = indicator_full_measure(space)
    mu = cardinality_measure(space, Fraction(1, 2))
    return PairFixture(space=space, mu=mu, nu=nu)


def fixture_f4(n_max: int = 8) -> TruncationModel:
    """Truncations U_n = {0, ..., n} for n = 1..n_max."""
    atoms = [str(k) for k in range(n_max + 1)]
    return make_truncation_model(
        atoms,
        mu_rule={"rule": "max_element"},
        nu_rule={"rule": "indicator_nonempty"},
        depths=[n + 1 for n in range(1, n_max + 1)],
    )
