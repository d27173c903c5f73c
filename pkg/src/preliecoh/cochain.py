"""Cochain complex of a pre-Lie algebra with coefficients in a
representation, its cohomology, and the comparison map to Lie algebra
cohomology.

Degree-n cochains (n >= 1) are maps alternating in the first n-1 slots
and linear in the last: Hom(Lambda^{n-1} g (x) g, V). The coboundary is

  (d f)(x_1,...,x_{n+1}) =
      sum_{i<=n} (-1)^{i+1} x_i . f(...no x_i..., x_{n+1})
    + sum_{i<=n} (-1)^{i+1} f(...no x_i..., x_n, x_i) . x_{n+1}
    - sum_{i<=n} (-1)^{i+1} f(...no x_i..., x_n, x_i * x_{n+1})
    + sum_{i<j<=n} (-1)^{i+j} f([x_i,x_j], ...no x_i,x_j..., x_{n+1})

where . is the left/right module action and [,] the commutator. d^2 = 0
and H^1 is the kernel of d on degree 1 (the complex starts at degree 1).

Composing with the relabeling f(x_1..x_n) -> (x_1..x_{n-1}) |->
f(...,-)(x_n) identifies this complex with the Chevalley-Eilenberg
complex of the commutator Lie algebra with coefficients in Hom(g,V),
where g acts by (x |> f)(y) = x . f(y) + f(x) . y - f(x*y). Both sides
are implemented independently and compared in the tests.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ArityMismatch, DimensionMismatch, NotACocycle, ShapeError
from .linalg import (
    ONE,
    ZERO,
    MatrixQ,
    QuotientMap,
    SubspaceBasis,
    Vector,
    rank_kernel_image,
    rank_of,
    solve_particular,
    standard_basis_vector,
    vec_add,
    vec_scale,
    vec_sub,
    zero_vector,
)
from .algebra import LieAlgebra, Representation, Tensor3, bilinear, subadjacent_lie, tensor3


def increasing_tuples(dim: int, length: int) -> list[tuple[int, ...]]:
    return list(itertools.combinations(range(dim), length))


def sort_with_sign(args: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Sorted copy and the permutation sign; sign 0 when entries repeat."""
    items = list(args)
    sign = 1
    for i in range(len(items)):
        for j in range(len(items) - 1 - i):
            if items[j] > items[j + 1]:
                items[j], items[j + 1] = items[j + 1], items[j]
                sign = -sign
            elif items[j] == items[j + 1]:
                return tuple(items), 0
    return tuple(items), sign


@dataclass(frozen=True)
class CochainBasis:
    """Enumeration of the coordinate positions of C^n(g, V).

    Positions are pairs (I, j) with I a strictly increasing (n-1)-tuple
    and j unrestricted, ordered lexicographically by (I, j). The full
    coordinate of a V-valued cochain appends the V index: position
    p * dim V + b.
    """

    arity: int
    algebra_dim: int

    def __post_init__(self) -> None:
        if self.arity < 1:
            raise ShapeError("cochain arity must be at least 1")

    @property
    def tuples(self) -> list[tuple[tuple[int, ...], int]]:
        return [
            (i, j)
            for i in increasing_tuples(self.algebra_dim, self.arity - 1)
            for j in range(self.algebra_dim)
        ]

    def position(self, prefix: tuple[int, ...], last: int) -> int:
        incs = increasing_tuples(self.algebra_dim, self.arity - 1)
        return incs.index(prefix) * self.algebra_dim + last

    def __len__(self) -> int:
        from math import comb

        return comb(self.algebra_dim, self.arity - 1) * self.algebra_dim


@dataclass(frozen=True)
class Cochain:
    """Element of C^n(g, V): one V-vector per CochainBasis position."""

    arity: int
    algebra_dim: int
    carrier_dim: int
    values: tuple[Vector, ...]

    def __post_init__(self) -> None:
        basis = CochainBasis(self.arity, self.algebra_dim)
        if len(self.values) != len(basis):
            raise ShapeError(
                f"arity-{self.arity} cochain over dim {self.algebra_dim} needs "
                f"{len(basis)} values, got {len(self.values)}"
            )
        for v in self.values:
            if len(v) != self.carrier_dim:
                raise ShapeError("cochain value has wrong carrier dimension")

    @classmethod
    def zero(cls, arity: int, algebra_dim: int, carrier_dim: int) -> "Cochain":
        basis = CochainBasis(arity, algebra_dim)
        return cls(arity, algebra_dim, carrier_dim, tuple(zero_vector(carrier_dim) for _ in range(len(basis))))

    @classmethod
    def from_coordinates(cls, arity: int, algebra_dim: int, carrier_dim: int, coords: Sequence[Fraction]) -> "Cochain":
        n = len(CochainBasis(arity, algebra_dim))
        if len(coords) != n * carrier_dim:
            raise ShapeError("coordinate vector has wrong length")
        values = tuple(
            tuple(coords[p * carrier_dim + b] for b in range(carrier_dim))
            for p in range(n)
        )
        return cls(arity, algebra_dim, carrier_dim, values)

    def to_coordinates(self) -> Vector:
        return tuple(c for v in self.values for c in v)

    def _basis(self) -> CochainBasis:
        return CochainBasis(self.arity, self.algebra_dim)

    def value_at(self, args: Sequence[int]) -> Vector:
        """Evaluate on a tuple of basis indices (length = arity)."""
        if len(args) != self.arity:
            raise ArityMismatch(f"expected {self.arity} arguments, got {len(args)}")
        prefix, sign = sort_with_sign(args[:-1])
        if sign == 0:
            return zero_vector(self.carrier_dim)
        pos = self._basis().position(prefix, args[-1])
        v = self.values[pos]
        return v if sign == 1 else vec_scale(Fraction(-1), v)

    def evaluate(self, vectors: Sequence[Vector]) -> Vector:
        """Fully multilinear evaluation on algebra-valued arguments."""
        if len(vectors) != self.arity:
            raise ArityMismatch(f"expected {self.arity} arguments, got {len(vectors)}")
        out = zero_vector(self.carrier_dim)
        for args in itertools.product(range(self.algebra_dim), repeat=self.arity):
            c = ONE
            for v, a in zip(vectors, args):
                c *= v[a]
                if c == 0:
                    break
            if c == 0:
                continue
            out = vec_add(out, vec_scale(c, self.value_at(args)))
        return out

    def add(self, other: "Cochain") -> "Cochain":
        self._require_same_space(other)
        return Cochain(
            self.arity, self.algebra_dim, self.carrier_dim,
            tuple(vec_add(a, b) for a, b in zip(self.values, other.values)),
        )

    def sub(self, other: "Cochain") -> "Cochain":
        self._require_same_space(other)
        return Cochain(
            self.arity, self.algebra_dim, self.carrier_dim,
            tuple(vec_sub(a, b) for a, b in zip(self.values, other.values)),
        )

    def scale(self, c: Fraction) -> "Cochain":
        return Cochain(
            self.arity, self.algebra_dim, self.carrier_dim,
            tuple(vec_scale(c, v) for v in self.values),
        )

    def is_zero(self) -> bool:
        return all(all(c == 0 for c in v) for v in self.values)

    def _require_same_space(self, other: "Cochain") -> None:
        if self.arity != other.arity:
            raise ArityMismatch(f"arities {self.arity} and {other.arity}")
        if (self.algebra_dim, self.carrier_dim) != (other.algebra_dim, other.carrier_dim):
            raise DimensionMismatch("cochains live over different spaces")


def coboundary(rep: Representation, f: Cochain) -> Cochain:
    """The pre-Lie differential d: C^n -> C^{n+1}."""
    a = rep.algebra
    if f.algebra_dim != a.dim or f.carrier_dim != rep.carrier_dim:
        raise DimensionMismatch("cochain does not match the representation")
    n = f.arity
    out_basis = CochainBasis(n + 1, a.dim)
    values = []
    for prefix, last in out_basis.tuples:
        args = prefix + (last,)
        total = zero_vector(rep.carrier_dim)
        for i in range(1, n + 1):
            sign = ONE if i % 2 == 1 else -ONE
            xi = args[i - 1]
            rest = args[: i - 1] + args[i:]
            # x_i . f(...,x_{n+1})
            term = bilinear(rep.left, a.basis_vector(xi), f.value_at(rest))
            total = vec_add(total, vec_scale(sign, term))
            # f(...,x_n,x_i) . x_{n+1}
            shuffled = args[: i - 1] + args[i:n] + (xi,)
            term = bilinear(rep.right, f.value_at(shuffled), a.basis_vector(args[n]))
            total = vec_add(total, vec_scale(sign, term))
            # -f(...,x_n, x_i * x_{n+1})
            prod = a.basis_product(xi, args[n])
            head = args[: i - 1] + args[i:n]
            acc = zero_vector(rep.carrier_dim)
            for k, c in enumerate(prod):
                if c != 0:
                    acc = vec_add(acc, vec_scale(c, f.value_at(head + (k,))))
            total = vec_sub(total, vec_scale(sign, acc))
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                sign = ONE if (i + j) % 2 == 0 else -ONE
                br = vec_sub(
                    a.basis_product(args[i - 1], args[j - 1]),
                    a.basis_product(args[j - 1], args[i - 1]),
                )
                rest = tuple(args[t] for t in range(n + 1) if t not in (i - 1, j - 1))
                acc = zero_vector(rep.carrier_dim)
                for k, c in enumerate(br):
                    if c != 0:
                        acc = vec_add(acc, vec_scale(c, f.value_at((k,) + rest)))
                total = vec_add(total, vec_scale(sign, acc))
        values.append(total)
    return Cochain(n + 1, a.dim, rep.carrier_dim, tuple(values))


def coboundary_matrix(rep: Representation, n: int) -> MatrixQ:
    """Matrix of d: C^n -> C^{n+1} in the CochainBasis coordinates."""
    a_dim = rep.algebra.dim
    v_dim = rep.carrier_dim
    src = len(CochainBasis(n, a_dim)) * v_dim
    cols = []
    for p in range(src):
        coords = [ZERO] * src
        coords[p] = ONE
        f = Cochain.from_coordinates(n, a_dim, v_dim, coords)
        cols.append(coboundary(rep, f).to_coordinates())
    dst = len(CochainBasis(n + 1, a_dim)) * v_dim
    return MatrixQ.from_cols(cols, rows=dst) if cols else MatrixQ.zero(dst, 0)


@dataclass(frozen=True)
class CohomologySpace:
    """H^n(g, V) with chosen cocycle representatives.

    Representatives are kernel basis vectors of d_n picked greedily (in
    the deterministic kernel order) so their images in the quotient by
    im d_{n-1} are independent; the same quotient coordinates classify
    arbitrary cocycles.
    """

    arity: int
    dimension: int
    representatives: tuple[Cochain, ...]
    quotient: QuotientMap
    reduced_reps: MatrixQ
    boundary_matrix: MatrixQ

    def class_coordinates(self, z: Cochain) -> Vector:
        """Coordinates of [z] against the representatives; z must be closed."""
        if z.arity != self.arity:
            raise ArityMismatch(f"expected arity {self.arity}, got {z.arity}")
        reduced = self.quotient.reduce(z.to_coordinates())
        coords = solve_particular(self.reduced_reps, reduced)
        if coords is None:
            raise NotACocycle("vector does not reduce into the span of the representatives")
        return coords

    def is_coboundary(self, z: Cochain) -> bool:
        return all(c == 0 for c in self.class_coordinates(z))


def cohomology(rep: Representation, n: int) -> CohomologySpace:
    """Kernel of d_n modulo image of d_{n-1}; for n = 1 just the kernel."""
    if n < 1:
        raise ShapeError("cohomology defined for arity >= 1")
    a_dim = rep.algebra.dim
    v_dim = rep.carrier_dim
    d_n = coboundary_matrix(rep, n)
    _, kernel, _ = rank_kernel_image(d_n)
    space_dim = len(CochainBasis(n, a_dim)) * v_dim
    if n == 1:
        image = SubspaceBasis(space_dim, ())
        boundary = MatrixQ.zero(space_dim, 0)
    else:
        boundary = coboundary_matrix(rep, n - 1)
        _, _, image = rank_kernel_image(boundary)
    quot = QuotientMap.build(space_dim, image)
    reps: list[Vector] = []
    reduced: list[Vector] = []
    for v in kernel.vectors:
        cand = quot.reduce(v)
        trial = MatrixQ.from_cols(reduced + [cand], rows=quot.dim)
        if rank_of(trial) == len(reduced) + 1:
            reps.append(v)
            reduced.append(cand)
    rep_cochains = tuple(
        Cochain.from_coordinates(n, a_dim, v_dim, v) for v in reps
    )
    return CohomologySpace(
        arity=n,
        dimension=len(reps),
        representatives=rep_cochains,
        quotient=quot,
        reduced_reps=MatrixQ.from_cols(reduced, rows=quot.dim),
        boundary_matrix=boundary,
    )


def are_cohomologous(rep: Representation, f1: Cochain, f2: Cochain) -> Cochain | None:
    """A primitive b with d b = f1 - f2, or None when the classes differ.

    Both inputs must be closed cocycles of equal arity >= 2.
    """
    if f1.arity != f2.arity:
        raise ArityMismatch(f"arities {f1.arity} and {f2.arity}")
    n = f1.arity
    if n < 2:
        raise ArityMismatch("no coboundaries below arity 2")
    diff = f1.sub(f2)
    for z in (f1, f2):
        if not coboundary(rep, z).is_zero():
            raise NotACocycle("inputs must be closed")
    d_prev = coboundary_matrix(rep, n - 1)
    coords = solve_particular(d_prev, diff.to_coordinates())
    if coords is None:
        return None
    return Cochain.from_coordinates(n - 1, rep.algebra.dim, rep.carrier_dim, coords)


# --- Lie side ---------------------------------------------------------------


@dataclass(frozen=True)
class LieModule:
    """A Lie algebra module: action[i][a][b] is e_i acting on w_a."""

    algebra: LieAlgebra
    dim: int
    action: Tensor3

    def __post_init__(self) -> None:
        object.__setattr__(self, "action", tensor3(self.action, self.algebra.dim, self.dim, self.dim))

    def act(self, x: Vector, w: Vector) -> Vector:
        return bilinear(self.action, x, w)

    def basis_act(self, i: int, a: int) -> Vector:
        return self.action[i][a]


def check_lie_module(mod: LieModule) -> bool:
    """[x,y].w = x.(y.w) - y.(x.w) on every basis tuple."""
    lie = mod.algebra
    for i, j, a in itertools.product(range(lie.dim), range(lie.dim), range(mod.dim)):
        lhs = bilinear(mod.action, lie.basis_bracket(i, j), standard_basis_vector(mod.dim, a))
        rhs = vec_sub(
            mod.act(lie.basis_vector(i), mod.basis_act(j, a)),
            mod.act(lie.basis_vector(j), mod.basis_act(i, a)),
        )
        if lhs != rhs:
            return False
    return True


def hom_module(rep: Representation) -> LieModule:
    """Hom(g, V) as a module over the commutator Lie algebra of g, with
    (x |> f)(y) = x . f(y) + f(x) . y - f(x * y).

    Basis: E_{j,b} sends e_j to v_b, index j * dim V + b.
    """
    a = rep.algebra
    v = rep.carrier_dim
    lie = subadjacent_lie(a)
    w_dim = a.dim * v
    action = []
    for i in range(a.dim):
        plane = []
        for w in range(w_dim):
            j, b = divmod(w, v)
            out = [ZERO] * w_dim
            for y in range(a.dim):
                val = zero_vector(v)
                if j == y:
                    val = vec_add(val, rep.basis_left(i, b))
                if j == i:
                    val = vec_add(val, rep.basis_right(b, y))
                c = a.product[i][y][j]
                if c != 0:
                    val = vec_sub(val, vec_scale(c, standard_basis_vector(v, b)))
                for bp in range(v):
                    if val[bp] != 0:
                        out[y * v + bp] += val[bp]
            plane.append(tuple(out))
        action.append(tuple(plane))
    return LieModule(lie, w_dim, tuple(action))


@dataclass(frozen=True)
class LieCochain:
    """Alternating k-cochain on a Lie algebra with module values; k >= 0.

    Values are indexed by strictly increasing k-tuples in lex order;
    the degree-0 space is the module itself (one value at the empty tuple).
    """

    arity: int
    algebra_dim: int
    module_dim: int
    values: tuple[Vector, ...]

    def __post_init__(self) -> None:
        want = len(increasing_tuples(self.algebra_dim, self.arity))
        if len(self.values) != want:
            raise ShapeError(f"arity-{self.arity} Lie cochain needs {want} values")
        for v in self.values:
            if len(v) != self.module_dim:
                raise ShapeError("Lie cochain value has wrong module dimension")

    @classmethod
    def from_coordinates(cls, arity: int, algebra_dim: int, module_dim: int, coords: Sequence[Fraction]) -> "LieCochain":
        tuples = increasing_tuples(algebra_dim, arity)
        if len(coords) != len(tuples) * module_dim:
            raise ShapeError("coordinate vector has wrong length")
        values = tuple(
            tuple(coords[p * module_dim + b] for b in range(module_dim))
            for p in range(len(tuples))
        )
        return cls(arity, algebra_dim, module_dim, values)

    def to_coordinates(self) -> Vector:
        return tuple(c for v in self.values for c in v)

    def value_at(self, args: Sequence[int]) -> Vector:
        if len(args) != self.arity:
            raise ArityMismatch(f"expected {self.arity} arguments, got {len(args)}")
        key, sign = sort_with_sign(args)
        if sign == 0:
            return zero_vector(self.module_dim)
        pos = increasing_tuples(self.algebra_dim, self.arity).index(key)
        v = self.values[pos]
        return v if sign == 1 else vec_scale(Fraction(-1), v)


def lie_coboundary(mod: LieModule, f: LieCochain) -> LieCochain:
    """Chevalley-Eilenberg differential d: C^k -> C^{k+1}."""
    lie = mod.algebra
    if f.algebra_dim != lie.dim or f.module_dim != mod.dim:
        raise DimensionMismatch("cochain does not match the module")
    k = f.arity
    values = []
    for args in increasing_tuples(lie.dim, k + 1):
        total = zero_vector(mod.dim)
        for i in range(1, k + 2):
            sign = ONE if i % 2 == 1 else -ONE
            rest = args[: i - 1] + args[i:]
            term = mod.act(lie.basis_vector(args[i - 1]), f.value_at(rest))
            total = vec_add(total, vec_scale(sign, term))
        for i in range(1, k + 2):
            for j in range(i + 1, k + 2):
                sign = ONE if (i + j) % 2 == 0 else -ONE
                br = lie.basis_bracket(args[i - 1], args[j - 1])
                rest = tuple(args[t] for t in range(k + 1) if t not in (i - 1, j - 1))
                acc = zero_vector(mod.dim)
                for t, c in enumerate(br):
                    if c != 0:
                        acc = vec_add(acc, vec_scale(c, f.value_at((t,) + rest)))
                total = vec_add(total, vec_scale(sign, acc))
        values.append(total)
    return LieCochain(k + 1, lie.dim, mod.dim, tuple(values))


def lie_coboundary_matrix(mod: LieModule, k: int) -> MatrixQ:
    src = len(increasing_tuples(mod.algebra.dim, k)) * mod.dim
    dst = len(increasing_tuples(mod.algebra.dim, k + 1)) * mod.dim
    cols = []
    for p in range(src):
        coords = [ZERO] * src
        coords[p] = ONE
        f = LieCochain.from_coordinates(k, mod.algebra.dim, mod.dim, coords)
        cols.append(lie_coboundary(mod, f).to_coordinates())
    return MatrixQ.from_cols(cols, rows=dst) if cols else MatrixQ.zero(dst, 0)


def lie_cohomology_dimension(mod: LieModule, k: int) -> int:
    """dim H^k(lie, mod) for k >= 0 via rank-nullity on the CE matrices."""
    if k < 0:
        raise ShapeError("Lie cohomology defined for arity >= 0")
    d_k = lie_coboundary_matrix(mod, k)
    nullity = d_k.cols - rank_of(d_k)
    if k == 0:
        return nullity
    return nullity - rank_of(lie_coboundary_matrix(mod, k - 1))


# --- the comparison map -----------------------------------------------------


def phi_map(f: Cochain) -> LieCochain:
    """Relabel f in C^n(g,V) as an (n-1)-cochain valued in Hom(g,V):
    (phi f)(x_1..x_{n-1}) is the map x_n -> f(x_1..x_n)."""
    a_dim = f.algebra_dim
    v = f.carrier_dim
    w_dim = a_dim * v
    values = []
    for prefix in increasing_tuples(a_dim, f.arity - 1):
        w = [ZERO] * w_dim
        for j in range(a_dim):
            val = f.value_at(prefix + (j,))
            for b in range(v):
                w[j * v + b] = val[b]
        values.append(tuple(w))
    return LieCochain(f.arity - 1, a_dim, w_dim, tuple(values))


def phi_inverse(f: LieCochain, carrier_dim: int) -> Cochain:
    """Inverse relabeling; module_dim must factor as algebra_dim * carrier."""
    a_dim = f.algebra_dim
    if f.module_dim != a_dim * carrier_dim:
        raise DimensionMismatch("module dimension does not factor through Hom(g,V)")
    values = []
    for prefix, last in CochainBasis(f.arity + 1, a_dim).tuples:
        w = f.value_at(prefix)
        values.append(tuple(w[last * carrier_dim + b] for b in range(carrier_dim)))
    return Cochain(f.arity + 1, a_dim, carrier_dim, tuple(values))


def phi_matrix(rep: Representation, n: int) -> MatrixQ:
    """Matrix of phi: C^n(g,V) -> C^{n-1}(g^c, Hom(g,V)) in coordinates."""
    a_dim = rep.algebra.dim
    v = rep.carrier_dim
    src = len(CochainBasis(n, a_dim)) * v
    cols = []
    for p in range(src):
        coords = [ZERO] * src
        coords[p] = ONE
        f = Cochain.from_coordinates(n, a_dim, v, coords)
        cols.append(phi_map(f).to_coordinates())
    dst = len(increasing_tuples(a_dim, n - 1)) * a_dim * v
    return MatrixQ.from_cols(cols, rows=dst) if cols else MatrixQ.zero(dst, 0)
