"""Conversions between crossed-module flavors.

Three one-way functors:

  * pre-Lie crossed module -> Lie crossed module, by passing to the
    commutator brackets and the action x |> u = x . u - u . x;
  * Rota-Baxter Lie crossed module (weight 0) -> pre-Lie crossed
    module, via x * y = [Tx, y] on each algebra, x . u = rho(T_n x) u,
    u . x = -rho(x)(T_m u);
  * dendriform crossed module -> pre-Lie crossed module, via
    x * y = x > y - y < x on each algebra and the matching actions.

Input structures are validated against the axioms the source flavor
pins down; compatibilities the source definition leaves to cited work
are certified a posteriori: the constructed object is run through the
full target verifier, and a failure raises OutputCheckFailed with the
witness instead of returning unverified data.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import InvalidInput, OutputCheckFailed, ShapeError
from .algebra import (
    ActionData,
    AlgebraMorphism,
    LieAlgebra,
    PreLieAlgebra,
    Tensor3,
    Violation,
    bilinear,
    check_lie,
    subadjacent_lie,
    tensor3,
)
from .linalg import MatrixQ, standard_basis_vector, vec_add, vec_sub
from .xmodules import CrossedModule, check_crossed_module


@dataclass(frozen=True)
class LieCrossedModule:
    """mu: m -> n between Lie algebras with an action of n on m.

    action[i][u][w]: e_i acting on m_u.
    """

    m: LieAlgebra
    n: LieAlgebra
    mu: MatrixQ
    action: Tensor3

    def __post_init__(self) -> None:
        if (self.mu.rows, self.mu.cols) != (self.n.dim, self.m.dim):
            raise ShapeError("mu has the wrong shape")
        object.__setattr__(self, "action", tensor3(self.action, self.n.dim, self.m.dim, self.m.dim))

    def act(self, x, u):
        return bilinear(self.action, x, u)


def check_lie_crossed_module(x: LieCrossedModule) -> Violation | None:
    """Both brackets, mu a morphism, the action a Lie action by
    derivations, equivariance, and the Peiffer identity."""
    for lie in (x.m, x.n):
        bad = check_lie(lie)
        if bad is not None:
            return bad
    m, n = x.m, x.n
    for u, v in itertools.product(range(m.dim), repeat=2):
        lhs = x.mu.mul_vec(m.basis_bracket(u, v))
        rhs = n.bracket_of(x.mu.col(u), x.mu.col(v))
        if lhs != rhs:
            return Violation("lie-morphism", (u, v), lhs, rhs)
    for i, j, u in itertools.product(range(n.dim), range(n.dim), range(m.dim)):
        lhs = bilinear(x.action, n.basis_bracket(i, j), m.basis_vector(u))
        rhs = vec_sub(
            x.act(n.basis_vector(i), x.action[j][u]),
            x.act(n.basis_vector(j), x.action[i][u]),
        )
        if lhs != rhs:
            return Violation("lie-action", (i, j, u), lhs, rhs)
    for i, u, v in itertools.product(range(n.dim), range(m.dim), range(m.dim)):
        lhs = x.act(n.basis_vector(i), m.basis_bracket(u, v))
        rhs = vec_add(
            m.bracket_of(x.action[i][u], m.basis_vector(v)),
            m.bracket_of(m.basis_vector(u), x.action[i][v]),
        )
        if lhs != rhs:
            return Violation("derivation", (i, u, v), lhs, rhs)
    for i, u in itertools.product(range(n.dim), range(m.dim)):
        lhs = x.mu.mul_vec(x.action[i][u])
        rhs = n.bracket_of(n.basis_vector(i), x.mu.col(u))
        if lhs != rhs:
            return Violation("lie-equivariance", (i, u), lhs, rhs)
    for u, v in itertools.product(range(m.dim), repeat=2):
        lhs = x.act(x.mu.col(u), m.basis_vector(v))
        rhs = m.basis_bracket(u, v)
        if lhs != rhs:
            return Violation("lie-peiffer", (u, v), lhs, rhs)
    return None


@dataclass(frozen=True)
class RotaBaxterLieCrossedModule:
    """A Lie crossed module with weight-zero Rota-Baxter operators on
    both algebras, intertwined by mu."""

    m: LieAlgebra
    n: LieAlgebra
    t_m: MatrixQ
    t_n: MatrixQ
    mu: MatrixQ
    rho: Tensor3

    def __post_init__(self) -> None:
        if (self.t_m.rows, self.t_m.cols) != (self.m.dim, self.m.dim):
            raise ShapeError("T_m has the wrong shape")
        if (self.t_n.rows, self.t_n.cols) != (self.n.dim, self.n.dim):
            raise ShapeError("T_n has the wrong shape")
        if (self.mu.rows, self.mu.cols) != (self.n.dim, self.m.dim):
            raise ShapeError("mu has the wrong shape")
        object.__setattr__(self, "rho", tensor3(self.rho, self.n.dim, self.m.dim, self.m.dim))

    def lie_crossed_module(self) -> LieCrossedModule:
        return LieCrossedModule(self.m, self.n, self.mu, self.rho)


def check_rota_baxter(lie: LieAlgebra, t: MatrixQ) -> Violation | None:
    """[Tx,Ty] = T([Tx,y] + [x,Ty]) on every basis pair."""
    for i, j in itertools.product(range(lie.dim), repeat=2):
        lhs = lie.bracket_of(t.col(i), t.col(j))
        inner = vec_add(
            lie.bracket_of(t.col(i), lie.basis_vector(j)),
            lie.bracket_of(lie.basis_vector(i), t.col(j)),
        )
        rhs = t.mul_vec(inner)
        if lhs != rhs:
            return Violation("rota-baxter", (i, j), lhs, rhs)
    return None


def check_rb_lie_xmod(x: RotaBaxterLieCrossedModule) -> Violation | None:
    """Rota-Baxter identities, mu T_m = T_n mu, and the underlying Lie
    crossed-module axioms. Compatibilities between rho and the operators
    are certified only through the converted output."""
    bad = check_rota_baxter(x.m, x.t_m)
    if bad is not None:
        return Violation("rota-baxter-m", bad.indices, bad.lhs, bad.rhs)
    bad = check_rota_baxter(x.n, x.t_n)
    if bad is not None:
        return Violation("rota-baxter-n", bad.indices, bad.lhs, bad.rhs)
    if x.mu @ x.t_m != x.t_n @ x.mu:
        return Violation("t-intertwined", (), (), ())
    return check_lie_crossed_module(x.lie_crossed_module())


@dataclass(frozen=True)
class DendriformAlgebra:
    """Two products succ (>) and prec (<) splitting an associative one."""

    dim: int
    succ: Tensor3
    prec: Tensor3

    def __post_init__(self) -> None:
        object.__setattr__(self, "succ", tensor3(self.succ, self.dim, self.dim, self.dim))
        object.__setattr__(self, "prec", tensor3(self.prec, self.dim, self.dim, self.dim))

    def s(self, x, y):
        return bilinear(self.succ, x, y)

    def p(self, x, y):
        return bilinear(self.prec, x, y)

    def basis_vector(self, i: int):
        return standard_basis_vector(self.dim, i)


def check_dendriform(a: DendriformAlgebra) -> Violation | None:
    """(x<y)<z = x<(y<z + y>z); (x>y)<z = x>(y<z);
    x>(y>z) = (x<y + x>y)>z, on every basis triple."""
    for i, j, k in itertools.product(range(a.dim), repeat=3):
        ei, ej, ek = (a.basis_vector(t) for t in (i, j, k))
        lhs = a.p(a.p(ei, ej), ek)
        rhs = a.p(ei, vec_add(a.p(ej, ek), a.s(ej, ek)))
        if lhs != rhs:
            return Violation("dendriform-1", (i, j, k), lhs, rhs)
        lhs = a.p(a.s(ei, ej), ek)
        rhs = a.s(ei, a.p(ej, ek))
        if lhs != rhs:
            return Violation("dendriform-2", (i, j, k), lhs, rhs)
        lhs = a.s(ei, a.s(ej, ek))
        rhs = a.s(vec_add(a.p(ei, ej), a.s(ei, ej)), ek)
        if lhs != rhs:
            return Violation("dendriform-3", (i, j, k), lhs, rhs)
    return None


@dataclass(frozen=True)
class DendriformCrossedModule:
    """mu: m -> n between dendriform algebras plus the four mixed
    action tensors with values in m:

    succ_nm[x][u]: x > u      prec_mn[u][x]: u < x
    succ_mn[u][x]: u > x      prec_nm[x][u]: x < u
    """

    m: DendriformAlgebra
    n: DendriformAlgebra
    mu: MatrixQ
    succ_nm: Tensor3
    prec_mn: Tensor3
    succ_mn: Tensor3
    prec_nm: Tensor3

    def __post_init__(self) -> None:
        if (self.mu.rows, self.mu.cols) != (self.n.dim, self.m.dim):
            raise ShapeError("mu has the wrong shape")
        md, nd = self.m.dim, self.n.dim
        object.__setattr__(self, "succ_nm", tensor3(self.succ_nm, nd, md, md))
        object.__setattr__(self, "prec_mn", tensor3(self.prec_mn, md, nd, md))
        object.__setattr__(self, "succ_mn", tensor3(self.succ_mn, md, nd, md))
        object.__setattr__(self, "prec_nm", tensor3(self.prec_nm, nd, md, md))


def check_dendriform_xmod(x: DendriformCrossedModule) -> Violation | None:
    """Dendriform axioms on both algebras and mu preserving both
    products; the mixed-action compatibilities are certified through
    the converted output."""
    bad = check_dendriform(x.m)
    if bad is not None:
        return bad
    bad = check_dendriform(x.n)
    if bad is not None:
        return bad
    for u, v in itertools.product(range(x.m.dim), repeat=2):
        lhs = x.mu.mul_vec(x.m.succ[u][v])
        rhs = x.n.s(x.mu.col(u), x.mu.col(v))
        if lhs != rhs:
            return Violation("mu-preserves-succ", (u, v), lhs, rhs)
        lhs = x.mu.mul_vec(x.m.prec[u][v])
        rhs = x.n.p(x.mu.col(u), x.mu.col(v))
        if lhs != rhs:
            return Violation("mu-preserves-prec", (u, v), lhs, rhs)
    return None


# --- the conversions ---------------------------------------------------------


def prelie_to_lie_xmod(x: CrossedModule) -> LieCrossedModule:
    """Commutator brackets and x |> u = x . u - u . x."""
    bad = check_crossed_module(x)
    if bad is not None:
        raise InvalidInput(f"not a pre-Lie crossed module: {bad}")
    m = subadjacent_lie(x.m_algebra)
    n = subadjacent_lie(x.n_algebra)
    action = tuple(
        tuple(
            vec_sub(x.action.basis_left(i, u), x.action.basis_right(u, i))
            for u in range(m.dim)
        )
        for i in range(n.dim)
    )
    out = LieCrossedModule(m, n, x.mu.matrix, action)
    bad = check_lie_crossed_module(out)
    if bad is not None:
        raise OutputCheckFailed(f"converted Lie crossed module failed verification: {bad}")
    return out


def rblie_to_prelie_xmod(x: RotaBaxterLieCrossedModule) -> CrossedModule:
    """x * y = [Tx, y] on both algebras; x . u = rho(T_n x) u and
    u . x = -rho(x)(T_m u)."""
    bad = check_rb_lie_xmod(x)
    if bad is not None:
        raise InvalidInput(f"not a Rota-Baxter Lie crossed module: {bad}")
    m_prod = tuple(
        tuple(x.m.bracket_of(x.t_m.col(u), x.m.basis_vector(v)) for v in range(x.m.dim))
        for u in range(x.m.dim)
    )
    n_prod = tuple(
        tuple(x.n.bracket_of(x.t_n.col(i), x.n.basis_vector(j)) for j in range(x.n.dim))
        for i in range(x.n.dim)
    )
    m_alg = PreLieAlgebra(x.m.dim, m_prod)
    n_alg = PreLieAlgebra(x.n.dim, n_prod)
    left = tuple(
        tuple(bilinear(x.rho, x.t_n.col(i), x.m.basis_vector(u)) for u in range(x.m.dim))
        for i in range(x.n.dim)
    )
    right = tuple(
        tuple(
            tuple(-c for c in bilinear(x.rho, x.n.basis_vector(i), x.t_m.col(u)))
            for i in range(x.n.dim)
        )
        for u in range(x.m.dim)
    )
    out = CrossedModule(
        AlgebraMorphism(m_alg, n_alg, x.mu),
        ActionData(n_alg, m_alg, left, right),
    )
    bad = check_crossed_module(out)
    if bad is not None:
        raise OutputCheckFailed(f"converted crossed module failed verification: {bad}")
    return out


def dendriform_to_prelie_xmod(x: DendriformCrossedModule) -> CrossedModule:
    """x * y = x > y - y < x on both algebras; x . u = x > u - u < x,
    u . x = u > x - x < u."""
    bad = check_dendriform_xmod(x)
    if bad is not None:
        raise InvalidInput(f"not a dendriform crossed module: {bad}")
    m_prod = tuple(
        tuple(vec_sub(x.m.succ[u][v], x.m.prec[v][u]) for v in range(x.m.dim))
        for u in range(x.m.dim)
    )
    n_prod = tuple(
        tuple(vec_sub(x.n.succ[i][j], x.n.prec[j][i]) for j in range(x.n.dim))
        for i in range(x.n.dim)
    )
    m_alg = PreLieAlgebra(x.m.dim, m_prod)
    n_alg = PreLieAlgebra(x.n.dim, n_prod)
    left = tuple(
        tuple(vec_sub(x.succ_nm[i][u], x.prec_mn[u][i]) for u in range(x.m.dim))
        for i in range(x.n.dim)
    )
    right = tuple(
        tuple(vec_sub(x.succ_mn[u][i], x.prec_nm[i][u]) for i in range(x.n.dim))
        for u in range(x.m.dim)
    )
    out = CrossedModule(
        AlgebraMorphism(m_alg, n_alg, x.mu),
        ActionData(n_alg, m_alg, left, right),
    )
    bad = check_crossed_module(out)
    if bad is not None:
        raise OutputCheckFailed(f"converted crossed module failed verification: {bad}")
    return out
