"""Character calculus for SL2: Euler characteristics, Steinberg digits,
tilting characters, and the greedy decompositions that drive every
summand label in the verification suites.

Run:  python3 demos/01_characters_and_tilting.py
"""

from frobcoho import (
    decompose_nabla,
    decompose_tilting_greedy,
    euler_induction,
    simple_char,
    sym_power,
    sl2,
    tilting_char,
    weyl_chi,
)

print("== rank-one Euler characteristics ==")
for m in (2, 0, -1, -4):
    print(f"chi({m:2d}) = {weyl_chi(m).serialize()}")

print("\n== the Pieri rule chi(m) * chi(1) = chi(m+1) + chi(m-1) ==")
for m in (3, 0, -1):
    lhs = weyl_chi(m) * weyl_chi(1)
    rhs = weyl_chi(m + 1) + weyl_chi(m - 1)
    print(f"m={m:2d}: {lhs.serialize()}  ==  {rhs.serialize()}  ->  {lhs == rhs}")

print("\n== simple characters via base-p digits (p = 5) ==")
for lam in (3, 4, 6, 8):
    c = simple_char(lam, 5)
    print(f"ch L({lam}) = {c.serialize()}   dim {c.dim()}")

print("\n== tilting characters: one chi below the Steinberg weight, two above ==")
for p, m in ((5, 4), (5, 8), (3, 4)):
    print(f"p={p}: ch T({m}) = {tilting_char(m, p).serialize()}")

print("\n== symmetric powers of the adjoint module ==")
for p, n in ((7, 3), (5, 4)):
    char = sym_power(sl2(p), n).character()
    nab = decompose_nabla(char)
    til = decompose_tilting_greedy(char, p)
    print(f"p={p}, S^{n}:  costandard peel {nab.format():24s} tilting peel {til.format()}")

print("\n== induction Euler characteristic with the dominance guard ==")
for coeffs in ({2: 1, 0: 1}, {-1: 1}, {-2: 1}):
    from frobcoho import LaurentCharacter

    c = LaurentCharacter(coeffs)
    out, exact = euler_induction(c)
    tag = "exact (all weights >= -1)" if exact else "Euler-only"
    print(f"ind {c.serialize():10s} -> {out.serialize():20s} [{tag}]")
