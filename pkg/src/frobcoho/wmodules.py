"""Finite-dimensional weight modules for the rank-one algebras.

A WeightModule is a labeled basis with an integer weight per basis
vector and one action matrix per available Lie generator.  Validation
enforces the four structural invariants exactly:

  * each generator moves the weight-m subspace into weight m + wt(x),
  * action([x,y]) equals the commutator of the action matrices,
  * action(x)^p equals the action of x^[p],
  * h acts on a weight-m vector as the scalar m mod p.

Truncated symmetric powers carry the adjoint derivation action with
p-th powers killed; the graded pieces assemble into a genuine algebra
(TruncatedSymAlgebra) whose product feeds the cup-product machinery.
The principal-block projection is the generalized 0-eigenspace of the
Casimir element, which for odd p cuts out exactly the block of the
trivial module; for p = 2 the projection is the identity.
"""

from __future__ import annotations

import numpy as np

from .characters import (
    DecompList,
    LaurentCharacter,
    decompose_simples,
    decompose_tilting_greedy,
    weyl_chi,
)
from .fpmatrix import FpMatrix, generalized_eigenspace, graded_kernel
from .lie import RestrictedLieAlgebra, casimir_operator, sl2


class WeightModule:
    """Weighted module over a rank-one restricted Lie algebra."""

    def __init__(self, algebra: RestrictedLieAlgebra, labels, weights, actions,
                 validate: bool = True):
        self.algebra = algebra
        self.labels = tuple(labels)
        self.weights = tuple(int(w) for w in weights)
        self.actions = dict(actions)
        self._warray = np.array(self.weights, dtype=np.int64)
        if set(self.actions) != set(algebra.generators):
            raise ValueError("need one action matrix per algebra generator")
        for x, m in self.actions.items():
            if m.shape != (self.dim, self.dim) or m.p != algebra.p:
                raise ValueError(f"action matrix for {x} has wrong shape or modulus")
        if validate:
            self.validate()

    @property
    def p(self) -> int:
        return self.algebra.p

    @property
    def dim(self) -> int:
        return len(self.labels)

    def action(self, x: str) -> FpMatrix:
        return self.actions[x]

    def character(self) -> LaurentCharacter:
        return LaurentCharacter.from_weights(self.weights)

    def weight_indices(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for i, w in enumerate(self.weights):
            out.setdefault(w, []).append(i)
        return out

    def validate(self) -> None:
        p, alg = self.p, self.algebra
        w = self._warray
        for x in alg.generators:
            a = self.action(x).a
            rows, cols = np.nonzero(a)
            if rows.size and not np.all(w[rows] == w[cols] + alg.weight(x)):
                raise ValueError(f"action of {x} is not weight-compatible")
        for i, x in enumerate(alg.generators):
            for y in alg.generators[i + 1:]:
                lhs = FpMatrix.zeros(p, self.dim, self.dim)
                for z, c in alg.bracket_coeffs(x, y).items():
                    lhs = lhs + c * self.action(z)
                rhs = self.action(x) @ self.action(y) - self.action(y) @ self.action(x)
                if lhs != rhs:
                    raise ValueError(f"bracket compatibility fails on ({x},{y})")
        for x in alg.generators:
            target = FpMatrix.zeros(p, self.dim, self.dim)
            for z, c in alg.p_power.get(x, {}).items():
                target = target + c * self.action(z)
            if self.action(x) ** p != target:
                raise ValueError(f"restricted compatibility fails on {x}")
        if "h" in alg.generators:
            expected = np.diag(w % p).astype(np.int64)
            if not np.array_equal(self.action("h").a, expected):
                raise ValueError("h does not act by the weight scalars")

    # -- derived modules -------------------------------------------------

    def tensor(self, other: "WeightModule") -> "WeightModule":
        if self.algebra is not other.algebra and (
            self.algebra.generators != other.algebra.generators or self.p != other.p
        ):
            raise ValueError("tensor factors live over different algebras")
        labels = [f"{a}*{b}" for a in self.labels for b in other.labels]
        weights = [wa + wb for wa in self.weights for wb in other.weights]
        eyeL = np.eye(self.dim, dtype=np.int64)
        eyeR = np.eye(other.dim, dtype=np.int64)
        actions = {}
        for x in self.algebra.generators:
            m = np.kron(self.action(x).a, eyeR) + np.kron(eyeL, other.action(x).a)
            actions[x] = FpMatrix(self.p, m)
        return WeightModule(self.algebra, labels, weights, actions)

    def dual(self) -> "WeightModule":
        labels = [f"{a}^" for a in self.labels]
        weights = [-w for w in self.weights]
        actions = {x: -self.action(x).T for x in self.algebra.generators}
        return WeightModule(self.algebra, labels, weights, actions)

    def frobenius_twist(self, r: int = 1) -> "WeightModule":
        """Weights scaled by p^r, infinitesimal action trivialized."""
        scale = self.p ** r
        actions = {x: FpMatrix.zeros(self.p, self.dim, self.dim)
                   for x in self.algebra.generators}
        labels = [f"{a}({r})" for a in self.labels]
        return WeightModule(self.algebra, labels,
                            [w * scale for w in self.weights], actions)

    def frobenius_untwist_weights(self) -> "WeightModule":
        """Divide all weights by p on a module with trivial infinitesimal
        action.  The result is torus-weighted data: h picks up the new
        weight scalars, the nilpotent actions stay zero, and the full Lie
        invariants are only rechecked when they can hold (new weights
        still divisible by p)."""
        p = self.p
        if any(w % p for w in self.weights):
            raise ValueError("untwist needs all weights divisible by p")
        for x in self.algebra.generators:
            if x != "h" and not self.action(x).is_zero():
                raise ValueError("untwist needs a trivial nilpotent action")
        new_weights = [w // p for w in self.weights]
        actions = {x: FpMatrix.zeros(p, self.dim, self.dim)
                   for x in self.algebra.generators}
        if "h" in self.algebra.generators:
            actions["h"] = FpMatrix(p, np.diag(
                np.array(new_weights, dtype=np.int64) % p))
        full = all(w % p == 0 for w in new_weights)
        return WeightModule(self.algebra, self.labels, new_weights, actions,
                            validate=full)

    def submodule(self, columns: FpMatrix, col_weights, prefix: str = "s") -> "WeightModule":
        """Restrict actions to the span of weight-homogeneous columns.

        Raises if the span is not stable under every generator.
        """
        weights = list(col_weights)
        if columns.cols != len(weights):
            raise ValueError("column/weight mismatch")
        labels = [f"{prefix}{k}" for k in range(columns.cols)]
        actions = {}
        for x in self.algebra.generators:
            mapped = self.action(x) @ columns
            try:
                actions[x] = columns.solve(mapped)
            except ValueError as exc:
                raise ValueError(f"span is not stable under {x}") from exc
        return WeightModule(self.algebra, labels, weights, actions)


# -- monomial constructions ----------------------------------------------


def _monomials(ngens: int, degree: int, cap):
    """Exponent tuples of the given total degree in lex order, first
    generator most significant; cap limits each exponent (None = no cap)."""
    if ngens == 1:
        if cap is None or degree <= cap:
            yield (degree,)
        return
    top = degree if cap is None else min(cap, degree)
    for a in range(top + 1):
        for rest in _monomials(ngens - 1, degree - a, cap):
            yield (a,) + rest


def monomial_label(exps, generators) -> str:
    parts = []
    for g, a in zip(generators, exps):
        if a == 1:
            parts.append(g)
        elif a > 1:
            parts.append(f"{g}^{a}")
    return "*".join(parts) if parts else "1"


def _derivation_matrix(alg: RestrictedLieAlgebra, basis, index, x: str, cap) -> FpMatrix:
    """Adjoint action of x on a span of monomials by the Leibniz rule.

    Terms whose exponent reaches cap+1 are dropped (the p-th power ideal)."""
    p = alg.p
    gens = alg.generators
    n = len(basis)
    m = np.zeros((n, n), dtype=np.int64)
    for j, exps in enumerate(basis):
        for i, g in enumerate(gens):
            if exps[i] == 0:
                continue
            for z, c in alg.bracket_coeffs(x, g).items():
                zi = gens.index(z)
                new = list(exps)
                new[i] -= 1
                new[zi] += 1
                if cap is not None and new[zi] > cap:
                    continue
                m[index[tuple(new)], j] += exps[i] * c
    return FpMatrix(p, m)


def _monomial_module(alg: RestrictedLieAlgebra, degree: int, cap) -> WeightModule:
    basis = list(_monomials(alg.dim, degree, cap))
    index = {e: k for k, e in enumerate(basis)}
    weights = [sum(a * w for a, w in zip(e, alg.weights)) for e in basis]
    labels = [monomial_label(e, alg.generators) for e in basis]
    actions = {x: _derivation_matrix(alg, basis, index, x, cap) for x in alg.generators}
    mod = WeightModule(alg, labels, weights, actions)
    mod.exponents = basis
    return mod


def truncated_sym(alg: RestrictedLieAlgebra, n: int) -> WeightModule:
    """Degree-n piece of the truncated symmetric algebra, adjoint action."""
    top = (alg.p - 1) * alg.dim
    if n < 0 or n > top:
        raise ValueError(f"degree {n} outside [0, {top}]")
    return _monomial_module(alg, n, alg.p - 1)


def sym_power(alg: RestrictedLieAlgebra, n: int) -> WeightModule:
    """Degree-n ordinary symmetric power, adjoint derivation action."""
    if n < 0:
        raise ValueError("negative degree")
    return _monomial_module(alg, n, None)


class TruncatedSymAlgebra:
    """The whole truncated symmetric algebra as one weight module with
    its monomial product, graded by polynomial degree."""

    def __init__(self, alg: RestrictedLieAlgebra):
        p = alg.p
        cap = p - 1
        self.algebra = alg
        self.p = p
        self.top_degree = cap * alg.dim
        basis = []
        degrees = []
        for n in range(self.top_degree + 1):
            for e in _monomials(alg.dim, n, cap):
                basis.append(e)
                degrees.append(n)
        self.exponents = basis
        self.degrees = tuple(degrees)
        index = {e: k for k, e in enumerate(basis)}
        self.index = index
        weights = [sum(a * w for a, w in zip(e, alg.weights)) for e in basis]
        labels = [monomial_label(e, alg.generators) for e in basis]
        actions = {x: _derivation_matrix(alg, basis, index, x, cap)
                   for x in alg.generators}
        self.module = WeightModule(alg, labels, weights, actions)
        n = len(basis)
        table = np.full((n, n), -1, dtype=np.int64)
        for i, ei in enumerate(basis):
            for j, ej in enumerate(basis):
                s = tuple(a + b for a, b in zip(ei, ej))
                if all(a <= cap for a in s):
                    table[i, j] = index[s]
        self.table = table
        self.unit_index = index[(0,) * alg.dim]

    @property
    def dim(self) -> int:
        return self.module.dim

    def degree_indices(self, n: int) -> list[int]:
        return [k for k, d in enumerate(self.degrees) if d == n]

    def unit_vector(self) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        v[self.unit_index] = 1
        return v

    def embed(self, degree: int, vec: np.ndarray) -> np.ndarray:
        idx = self.degree_indices(degree)
        if len(idx) != len(vec):
            raise ValueError("vector does not match the graded piece")
        out = np.zeros(self.dim, dtype=np.int64)
        out[idx] = np.asarray(vec, dtype=np.int64) % self.p
        return out

    def mult(self, v1: np.ndarray, v2: np.ndarray) -> np.ndarray:
        """Bilinear product of coefficient vectors in the monomial basis."""
        out = np.zeros(self.dim, dtype=np.int64)
        nz1 = np.nonzero(v1)[0]
        nz2 = np.nonzero(v2)[0]
        for i in nz1:
            targets = self.table[i, nz2]
            ok = targets >= 0
            if ok.any():
                np.add.at(out, targets[ok], int(v1[i]) * v2[nz2[ok]])
        return out % self.p

    def power(self, vec: np.ndarray, k: int) -> np.ndarray:
        out = self.unit_vector()
        for _ in range(k):
            out = self.mult(out, vec)
        return out


# -- standard small modules ----------------------------------------------


def weight_line(alg: RestrictedLieAlgebra, w: int) -> WeightModule:
    actions = {x: FpMatrix.zeros(alg.p, 1, 1) for x in alg.generators}
    if "h" in alg.generators:
        actions["h"] = FpMatrix(alg.p, [[w % alg.p]])
    return WeightModule(alg, (f"<{w}>",), (w,), actions)


def trivial_module(alg: RestrictedLieAlgebra) -> WeightModule:
    return weight_line(alg, 0)


def simple_model(lam: int, p: int) -> WeightModule:
    """The restricted simple sl2-module L(lam) for 0 <= lam <= p-1.

    Basis v_0..v_lam with h v_i = (lam-2i) v_i, f v_i = (i+1) v_{i+1},
    e v_i = (lam-i+1) v_{i-1}.
    """
    if not 0 <= lam <= p - 1:
        raise ValueError("simple_model needs a restricted weight")
    alg = sl2(p)
    n = lam + 1
    e = np.zeros((n, n), dtype=np.int64)
    f = np.zeros((n, n), dtype=np.int64)
    h = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        h[i, i] = (lam - 2 * i) % p
        if i + 1 < n:
            f[i + 1, i] = i + 1
            e[i, i + 1] = lam - i
    labels = [f"v{i}" for i in range(n)]
    weights = [lam - 2 * i for i in range(n)]
    actions = {"e": FpMatrix(p, e), "h": FpMatrix(p, h), "f": FpMatrix(p, f)}
    return WeightModule(alg, labels, weights, actions)


def simple_module(lam: int, p: int) -> WeightModule:
    """L(lam) for any lam >= 0 by Steinberg digits: restricted factors
    tensored with Frobenius twists."""
    if lam < 0:
        raise ValueError("dominant weight required")
    digits = []
    m = lam
    while True:
        digits.append(m % p)
        m //= p
        if m == 0:
            break
    out = simple_model(digits[0], p)
    for r, d in enumerate(digits[1:], start=1):
        out = out.tensor(simple_model(d, p).frobenius_twist(r))
    return out


# -- Casimir blocks and projections ----------------------------------------


def casimir_blocks(M: WeightModule) -> dict[int, tuple[FpMatrix, list[int]]]:
    """Generalized eigenspace of the Casimir per eigenvalue, weight-graded.

    The character polynomial must split over F_p (weights are rational),
    so the eigenspace dimensions add up to dim M; otherwise this raises.
    """
    p = M.p
    c = casimir_operator(M)
    for x in M.algebra.generators:
        a = M.action(x)
        if c @ a != a @ c:
            raise ValueError(f"Casimir does not commute with the action of {x}")
    by_weight = M.weight_indices()
    blocks: dict[int, tuple[list[np.ndarray], list[int]]] = {}
    total = 0
    for lam in range(p):
        vecs: list[np.ndarray] = []
        weights: list[int] = []
        for w in sorted(by_weight):
            idx = by_weight[w]
            sub = FpMatrix(p, c.a[np.ix_(idx, idx)])
            kb = generalized_eigenspace(sub, lam)
            for k in range(kb.cols):
                v = np.zeros(M.dim, dtype=np.int64)
                v[idx] = kb.a[:, k]
                vecs.append(v)
                weights.append(w)
        if vecs:
            blocks[lam] = (FpMatrix.from_columns(p, vecs, M.dim), weights)
            total += len(vecs)
    if total != M.dim:
        raise ValueError("Casimir characteristic polynomial does not split")
    return blocks


def block_projection_principal(M: WeightModule) -> WeightModule:
    """Projection onto the principal block: the generalized 0-eigenspace
    of the Casimir for p >= 3; the identity for p = 2."""
    if M.p == 2:
        return M
    if M.dim == 0:
        return M
    blocks = casimir_blocks(M)
    if 0 not in blocks:
        cols = FpMatrix.zeros(M.p, M.dim, 0)
        return M.submodule(cols, [], prefix="blk")
    cols, weights = blocks[0]
    return M.submodule(cols, weights, prefix="blk")


def principal_block_projector(M: WeightModule) -> FpMatrix:
    """Idempotent matrix projecting onto the principal block along the
    other Casimir blocks (identity for p = 2)."""
    p = M.p
    if p == 2:
        return FpMatrix.identity(p, M.dim)
    blocks = casimir_blocks(M)
    if 0 not in blocks:
        return FpMatrix.zeros(p, M.dim, M.dim)
    order = sorted(blocks)  # eigenvalue 0 comes first
    basis = FpMatrix(p, np.concatenate([blocks[lam][0].a for lam in order], axis=1))
    inv = basis.solve(FpMatrix.identity(p, M.dim))  # whole-space change of basis
    n0 = blocks[0][0].cols
    return FpMatrix(p, basis.a[:, :n0]) @ FpMatrix(p, inv.a[:n0, :])


# -- Hom spaces, duality pairing, invariants -------------------------------


def module_hom_dim(M: WeightModule, N: WeightModule) -> int:
    """Dimension of weight-preserving module homomorphisms M -> N.

    Solutions are matrices Phi with Phi action_M(x) = action_N(x) Phi for
    every generator and Phi supported on equal-weight entry pairs, i.e.
    Hom in the weight-graded (G_1 T) sense.
    """
    if M.algebra.generators != N.algebra.generators or M.p != N.p:
        raise ValueError("hom spaces need modules over the same algebra")
    p = M.p
    if M.dim == 0 or N.dim == 0:
        return 0
    allowed = [(i, j) for i in range(N.dim) for j in range(M.dim)
               if N.weights[i] == M.weights[j]]
    if not allowed:
        return 0
    cols = [i * M.dim + j for i, j in allowed]
    eyeN = np.eye(N.dim, dtype=np.int64)
    eyeM = np.eye(M.dim, dtype=np.int64)
    stacks = []
    for x in M.algebra.generators:
        a = N.action(x).a
        b = M.action(x).a
        sys = np.kron(a, eyeM) - np.kron(eyeN, b.T)
        stacks.append(sys[:, cols])
    big = FpMatrix(p, np.concatenate(stacks, axis=0))
    return len(allowed) - big.rank()


def duality_pairing_rank(alg: RestrictedLieAlgebra, i: int) -> int:
    """Rank of the multiplication pairing S^i x S^(N-i) -> S^N (top line)."""
    p = alg.p
    cap = p - 1
    top = cap * alg.dim
    if i < 0 or i > top:
        raise ValueError(f"degree {i} outside [0, {top}]")
    left = list(_monomials(alg.dim, i, cap))
    right = list(_monomials(alg.dim, top - i, cap))
    target = tuple(cap for _ in range(alg.dim))
    m = np.zeros((len(left), len(right)), dtype=np.int64)
    for a, ea in enumerate(left):
        for b, eb in enumerate(right):
            if tuple(x + y for x, y in zip(ea, eb)) == target:
                m[a, b] = 1
    return FpMatrix(p, m).rank()


def g1_invariants(M: WeightModule) -> WeightModule:
    """Joint kernel of all generator actions, as a weighted submodule."""
    stacked = FpMatrix(M.p, np.concatenate(
        [M.action(x).a for x in M.algebra.generators], axis=0))
    cols, weights = graded_kernel(stacked, M.weights)
    return M.submodule(cols, weights, prefix="inv")


def tilting_t2p2_model(p: int) -> WeightModule:
    """A concrete model of T(2p-2): the principal-block part of the
    (p-1)-st truncated symmetric power of sl2 (p odd)."""
    if p == 2:
        raise ValueError("needs p >= 3")
    return block_projection_principal(truncated_sym(sl2(p), p - 1))


# -- summand fingerprinting -------------------------------------------------


def summand_labels(M: WeightModule) -> DecompList:
    """Label the indecomposable summands of a truncated-symmetric-power
    style module by characters within Casimir eigenvalue classes.

    Within each class the character is peeled greedily by tilting
    characters; if that goes negative the class is a sum of simples and
    is peeled by simple characters instead.  For p = 2 (no Casimir) the
    highest-weight-2 pieces are told apart by their invariant fingerprint
    (Delta(2) has a trivial submodule, Nabla(2) does not).
    """
    p = M.p
    if M.dim == 0:
        return DecompList([])
    if p == 2:
        char = M.character()
        try:
            return decompose_tilting_greedy(char, p)
        except ValueError:
            pass
        if char == weyl_chi(2):
            alg = M.algebra
            fam = "Delta" if module_hom_dim(trivial_module(alg), M) else "Nabla"
            return DecompList([(fam, 2, 1)])
        raise ValueError("p=2 module outside the supported label patterns")
    entries = []
    for lam, (cols, weights) in sorted(casimir_blocks(M).items()):
        char = LaurentCharacter.from_weights(weights)
        try:
            dec = decompose_tilting_greedy(char, p)
        except ValueError:
            dec = decompose_simples(char, p)
            if dec.virtual or not dec.remainder.is_zero():
                raise ValueError("eigenvalue class is neither tilting nor simple")
        entries.extend(dec.entries)
    simples = sorted([e for e in entries if e[0] == "L"], key=lambda t: t[1])
    tilts = sorted([e for e in entries if e[0] == "T"], key=lambda t: -t[1])
    return DecompList(simples + tilts)
