"""Shared random generators and independent oracles for the test suite.

The oracle here evaluates Choquet integrals by a different route than the
library (descending rank telescoping instead of threshold layers), so
agreement between the two is a real cross-check, not a tautology.
"""

from fractions import Fraction

from choquetrn import (
    ExtReal,
    INF,
    MeasurableSet,
    MonotoneMeasure,
    SimpleFunction,
    ZERO,
    additive_measure,
    build_space,
    measure_from_table,
)


def random_space(rng, min_atoms=2, max_atoms=5):
    n = rng.randrange(min_atoms, max_atoms + 1)
    return build_space([f"x{i}" for i in range(n)])


def random_fraction(rng, max_num=4, denominators=(1, 2, 3, 4)):
    return Fraction(rng.randrange(0, max_num + 1), rng.choice(denominators))


def random_monotone_measure(space, rng, max_step=3, denominators=(1, 2, 3, 4)):
    """A finite monotone measure built by cardinality-ordered accretion.

    Each set's value is the maximum over its one-block-smaller subsets plus a
    random nonnegative increment, which forces monotonicity by construction.
    """
    nb = space.n_blocks
    values = {0: Fraction(0)}
    selectors = sorted(range(1, 1 << nb), key=lambda s: bin(s).count("1"))
    masks = {}
    for s in selectors:
        mask = 0
        for i in range(nb):
            if s & (1 << i):
                mask |= space.blocks[i]
        masks[s] = mask
        base = max(
            values[masks.get(s & ~(1 << i), 0)]
            for i in range(nb)
            if s & (1 << i)
        )
        step = Fraction(rng.randrange(0, max_step + 1), rng.choice(denominators))
        values[mask] = base + step
    table = {
        MeasurableSet(space, m): v for m, v in values.items()
    }
    return measure_from_table(space, table)


def random_additive_measure(space, rng, allow_null_atoms=True,
                            denominators=(1, 2, 3, 4)):
    weights = {}
    for name in space.atoms:
        lo = 0 if allow_null_atoms else 1
        weights[name] = Fraction(rng.randrange(lo, 5), rng.choice(denominators))
    return additive_measure(space, weights)


def random_simple_function(space, rng, max_num=6, denominators=(1, 2, 4)):
    values = tuple(
        ExtReal(Fraction(rng.randrange(0, max_num + 1), rng.choice(denominators)))
        for _ in range(space.n_blocks)
    )
    return SimpleFunction(space, values)


def choquet_oracle(f, nu, A=None):
    """Independent Choquet integral: descending rank telescoping.

    Sort the block values of f on A in descending order v_1 >= ... >= v_m and
    sum (v_k - v_{k+1}) * nu(top-k blocks & A) with v_{m+1} = 0.  Infinite
    values contribute inf unless their layer is nu-null, in which case they
    are flattened to the largest finite value (they stay inside every finite
    layer, so no layer measure changes).
    """
    space = f.space
    if A is None:
        A = space.full_set
    inf_mask = 0
    finite = []
    for i in range(space.n_blocks):
        if not (space.blocks[i] & A.mask):
            continue
        v = f.values[i]
        if v.is_finite:
            finite.append((v.as_fraction(), space.blocks[i]))
        else:
            inf_mask |= space.blocks[i]
    if inf_mask and nu(MeasurableSet(space, inf_mask & A.mask)) != ZERO:
        return INF

    top = max((v for v, _ in finite), default=Fraction(0))
    if inf_mask:
        finite.append((top, inf_mask))
    ranked = sorted(finite, key=lambda p: p[0], reverse=True)

    total = ZERO
    acc_mask = 0
    for k, (v, block) in enumerate(ranked):
        acc_mask |= block
        nxt = ranked[k + 1][0] if k + 1 < len(ranked) else Fraction(0)
        drop = v - nxt
        if drop:
            total = total + ExtReal(drop) * nu(
                MeasurableSet(space, acc_mask & A.mask)
            )
    return total
