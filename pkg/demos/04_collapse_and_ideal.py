"""Collapse bookkeeping: where the two-line spectral sequence stops.

With trivial coefficients the E2 page already equals the answer.  With
the principal-block coefficients the page is strictly bigger: the
defect per degree is exactly the dimension count of the two generating
families of the collapse ideal.  The classes that die are the
f^(p-1)-type ones (u-degree one on the projective rows); of the odd
classes that survive, squares vanish but the mixed product drops
filtration onto the invariant line of the top monomial.

Run:  python3 demos/04_collapse_and_ideal.py
"""

from frobcoho import (
    PeriodicCohomology,
    TruncatedSymAlgebra,
    block_projection_principal,
    collapse_check,
    cup_product,
    ip_expected_dims,
    sl2,
    trivial_module,
)

for p in (3, 5):
    print(f"== p = {p} ==")
    rows = collapse_check(trivial_module(sl2(p)), 8)
    print("trivial coefficients: defects", [r.defect for r in rows])

    total = TruncatedSymAlgebra(sl2(p))
    total0 = block_projection_principal(total.module)
    rows0 = collapse_check(total0, 8)
    print(f"{'deg':>4} {'E2':>4} {'actual':>7} {'defect':>7} {'ideal':>6}")
    ideal = ip_expected_dims(p, 8)
    for r in rows0:
        print(f"{r.degree:>4} {r.e2_total:>4} {r.actual:>7} {r.defect:>7} {ideal[r.degree]:>6}")
    print()

print("== the mixed odd product drops filtration (p = 3) ==")
p = 3
total = TruncatedSymAlgebra(sl2(p))
engine = PeriodicCohomology(total.module)
reps = {w: v for v, w in engine.t1_representatives(1)}
z, zp = reps[2 * p - 2], reps[-2]


def describe(vec):
    return " + ".join(f"{int(c)}*{total.module.labels[i]}"
                      for i, c in enumerate(vec) if c)


print("z  =", describe(z))
print("z' =", describe(zp))
prod = cup_product(engine, total, 1, z, 1, zp)
print("z . z' =", describe(prod % p))
print("classes of z^2, z'^2 vanish:",
      engine.is_coboundary(2, cup_product(engine, total, 1, z, 1, z)),
      engine.is_coboundary(2, cup_product(engine, total, 1, zp, 1, zp)))
print("class of z . z' vanishes:", engine.is_coboundary(2, prod))
