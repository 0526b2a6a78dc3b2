"""Restricted Lie algebras of rank one: sl2, its Borel b, and the
nilradical u, over F_p.

Weight convention, fixed once for the whole package: the positive root
is 2 on the weight lattice Z, and

    weight(e) = +2,  weight(h) = 0,  weight(f) = -2.

The Borel is the NEGATIVE one, so b = span{h, f} and u = span{f}; the
lowering operator f is the one whose powers drive every periodic
complex downstream.

Structure constants of sl2: [h,e] = 2e, [h,f] = -2f, [e,f] = h; the
p-power map sends e, f to 0 and fixes h.  Constructors validate the
Jacobi identity, restrictedness (ad(x^[p]) = (ad x)^p) and weight
additivity of the bracket.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fpmatrix import FpMatrix, _check_prime

GENERATOR_WEIGHTS = {"e": 2, "h": 0, "f": -2}
POSITIVE_ROOT = 2


@dataclass(frozen=True)
class RestrictedLieAlgebra:
    """Basis labels, bracket structure constants mod p, p-power map, weights.

    bracket[(x, y)] maps basis labels to coefficients of [x, y]; only
    pairs with x before y in `generators` are stored, the rest follow by
    antisymmetry.  p_power[x] maps basis labels to coefficients of x^[p].
    """

    p: int
    generators: tuple[str, ...]
    bracket: dict
    p_power: dict

    def __post_init__(self):
        _check_prime(self.p)
        self.validate()

    @property
    def dim(self) -> int:
        return len(self.generators)

    def weight(self, x: str) -> int:
        return GENERATOR_WEIGHTS[x]

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(GENERATOR_WEIGHTS[x] for x in self.generators)

    def bracket_coeffs(self, x: str, y: str) -> dict:
        if x == y:
            return {}
        ix, iy = self.generators.index(x), self.generators.index(y)
        if ix < iy:
            raw = self.bracket.get((x, y), {})
        else:
            raw = {z: -c for z, c in self.bracket.get((y, x), {}).items()}
        return {z: c % self.p for z, c in raw.items() if c % self.p}

    def ad(self, x: str) -> FpMatrix:
        """Matrix of ad(x) = [x, -] on the generator basis."""
        n = self.dim
        m = np.zeros((n, n), dtype=np.int64)
        for j, y in enumerate(self.generators):
            for z, c in self.bracket_coeffs(x, y).items():
                m[self.generators.index(z), j] = c
        return FpMatrix(self.p, m)

    def p_power_matrix(self, x: str) -> FpMatrix:
        """ad of x^[p], expanded through the stored p-power map."""
        n = self.dim
        acc = FpMatrix.zeros(self.p, n, n)
        for z, c in self.p_power.get(x, {}).items():
            acc = acc + (c % self.p) * self.ad(z)
        return acc

    def validate(self) -> None:
        p = self.p
        for x in self.generators:
            for y in self.generators:
                for z, c in self.bracket_coeffs(x, y).items():
                    if c % p and self.weight(z) != self.weight(x) + self.weight(y):
                        raise ValueError(f"bracket [{x},{y}] is not weight-additive")
        ads = {x: self.ad(x) for x in self.generators}
        for x in self.generators:
            for y in self.generators:
                # Jacobi in ad form: ad([x,y]) = [ad x, ad y]
                lhs = FpMatrix.zeros(p, self.dim, self.dim)
                for z, c in self.bracket_coeffs(x, y).items():
                    lhs = lhs + c * ads[z]
                rhs = ads[x] @ ads[y] - ads[y] @ ads[x]
                if lhs != rhs:
                    raise ValueError(f"Jacobi identity fails on ({x},{y})")
        for x in self.generators:
            if self.p_power_matrix(x) != ads[x] ** p:
                raise ValueError(f"restrictedness fails on {x}")


def sl2(p: int) -> RestrictedLieAlgebra:
    return RestrictedLieAlgebra(
        p=p,
        generators=("e", "h", "f"),
        bracket={("e", "h"): {"e": -2 % p}, ("e", "f"): {"h": 1}, ("h", "f"): {"f": -2 % p}},
        p_power={"e": {}, "h": {"h": 1}, "f": {}},
    )


def borel(p: int) -> RestrictedLieAlgebra:
    """The negative Borel subalgebra b = span{h, f} of sl2."""
    return RestrictedLieAlgebra(
        p=p,
        generators=("h", "f"),
        bracket={("h", "f"): {"f": -2 % p}},
        p_power={"h": {"h": 1}, "f": {}},
    )


def nilradical(p: int) -> RestrictedLieAlgebra:
    """The one-dimensional abelian u = span{f} with trivial p-power map."""
    return RestrictedLieAlgebra(p=p, generators=("f",), bracket={}, p_power={"f": {}})


def check_jacobi(alg: RestrictedLieAlgebra) -> bool:
    alg.validate()
    return True


def check_restricted(alg: RestrictedLieAlgebra) -> bool:
    alg.validate()
    return True


def casimir_operator(module) -> FpMatrix:
    """Matrix of c = ef + fe + h^2/2 on a module with full sl2-action.

    Central in the restricted enveloping algebra for odd p; the returned
    matrix commutes with all three action matrices.  On a highest-weight
    vector of weight m it acts by m(m+2)/2 mod p, which vanishes exactly
    on the principal block {0, p-2}.
    """
    p = module.p
    if p == 2:
        raise ValueError("Casimir normalization needs p >= 3")
    e, h, f = module.action("e"), module.action("h"), module.action("f")
    half = pow(2, p - 2, p)
    return e @ f + f @ e + half * (h @ h)
