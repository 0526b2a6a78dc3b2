"""Hochschild cohomology of the height-one Borel kernel.

The coefficient algebra is the truncated symmetric algebra of b with
the adjoint action; its kernel cohomology comes from the twisted
2-periodic complex and the T_1 weight selection.  For odd p every
degree is one-dimensional: an exterior generator in degree one (weight
zero) over a polynomial generator in degree two.  For p = 2 the kernel
acts trivially and every degree has dimension four.

Run:  python3 demos/02_taft_hochschild.py
"""

from frobcoho import (
    PeriodicCohomology,
    TruncatedSymAlgebra,
    borel,
    cup_product,
    t1_invariants,
)

for p in (3, 5):
    print(f"== p = {p} ==")
    alg = TruncatedSymAlgebra(borel(p))
    engine = PeriodicCohomology(alg.module)
    print("degree : dim : weights (after the cochain twist)")
    for d in range(9):
        char = t1_invariants(engine.character(d), p)
        print(f"  {d}    :  {char.dim()}  : {char.serialize()}")

    x1, w = engine.t1_representatives(1)[0]
    labels = [alg.module.labels[i] for i in x1.nonzero()[0]]
    print(f"degree-1 class: represented by {labels}, twisted weight {w + 2}")
    sq = cup_product(engine, alg, 1, x1, 1, x1)
    print(f"its square is a coboundary: {engine.is_coboundary(2, sq)}")

    unit = alg.unit_vector()
    power = unit
    alive = []
    for k in range(1, 6):
        power = cup_product(engine, alg, 2 * (k - 1), power, 2, unit)
        alive.append(bool(engine.class_coordinates(2 * k, power).any()))
    print(f"degree-2 class powers x^1..x^5 nonzero: {alive}\n")

print("== p = 2 (trivial kernel action) ==")
alg = TruncatedSymAlgebra(borel(2))
engine = PeriodicCohomology(alg.module)
for d in range(5):
    char = t1_invariants(engine.character(d), 2)
    print(f"  degree {d}: dim {char.dim()}, weights {char.serialize()}")
