"""A first tour of exact Choquet integration.

Run with:  python3 demos/demo_choquet.py

We integrate simple functions against measures that are allowed to be
non-additive, and watch two hallmarks of the Choquet integral: agreement
with the classical weighted sum in the additive case, and additivity only
for comonotone integrands in general.
"""

from fractions import Fraction

from choquetrn import (
    additive_measure,
    build_space,
    choquet_integral,
    choquet_value,
    function_from_values,
    indicator_full_measure,
    is_comonotone,
)


def main():
    # An additive reference point: two atoms with rational weights.
    space = build_space(["a", "b"])
    nu = additive_measure(space, {"a": Fraction(1, 2), "b": Fraction(1, 3)})
    f = function_from_values(space, {"a": 2, "b": 5})

    print("== additive case ==")
    bd = choquet_integral(f, nu)
    print(f"f = {f}, nu additive with weights 1/2, 1/3")
    for t, layer, m, c in zip(
        bd.thresholds, bd.layer_sets, bd.layer_measures, bd.contributions
    ):
        print(f"  layer at {t}: set {layer}, measure {m}, contributes {c}")
    print(f"  total = {bd.total}  (the weighted sum 2*1/2 + 5*1/3 = 8/3)")

    # Now a genuinely non-additive measure: mass 1 on the full universe,
    # nothing on any proper subset.
    print()
    print("== non-additive case ==")
    space4 = build_space(["1", "2", "3", "4"])
    mu = indicator_full_measure(space4)
    g = function_from_values(space4, {"1": 1, "2": 2, "3": 1, "4": 2})
    h = function_from_values(space4, {"1": 2, "2": 1, "3": 2, "4": 1})
    print(f"g = {g}")
    print(f"h = {h}")
    print(f"integral of g     = {choquet_value(g, mu)}")
    print(f"integral of h     = {choquet_value(h, mu)}")
    print(f"integral of g + h = {choquet_value(g + h, mu)}")
    verdict = is_comonotone(g, h)
    print(f"g, h comonotone?    {verdict.holds}")
    print(f"  witness: {verdict.witness.detail}")
    print("additivity fails exactly because g and h are not comonotone.")

    # Comonotone pairs do add, even against this measure.
    print()
    k = g.scale(3)
    print(f"k = 3*g is comonotone with g: {is_comonotone(g, k).holds}")
    lhs = choquet_value(g + k, mu)
    rhs = choquet_value(g, mu) + choquet_value(k, mu)
    print(f"integral of g + k = {lhs} = {rhs} = sum of integrals")


if __name__ == "__main__":
    main()
