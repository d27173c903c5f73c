"""The free pre-Lie algebra on labeled rooted trees, truncated by degree.

Basis elements are rooted trees with labeled vertices; children are
unordered, realized by keeping them sorted in a canonical order. The
product s * t grafts the root of s below each vertex of t and sums the
results; terms beyond the truncation degree are dropped and the
polynomial remembers that it did so.

Evaluation into a concrete algebra sends each degree-1 tree a to a
chosen element E(a) and extends by E(s * t) = E(s) * E(t). Every tree
of higher degree is reached by eliminating the grafting sum: for the
first branch t1 of t,

    E(t) = E(t1) * E(t minus t1) - sum of E on the other grafting terms,

and the correction terms have the same degree but strictly more
branches were merged below the root, so the recursion terminates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .errors import NeedsHigherTruncation, ShapeError, TruncationMismatch
from .algebra import PreLieAlgebra, Representation, Violation
from .cochain import Cochain
from .linalg import Vector, vec_add, vec_scale, vec_sub, zero_vector

DEFAULT_NAMES = "abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class LabeledRootedTree:
    """A rooted tree with integer vertex labels; children canonically
    sorted, so equal trees compare and hash equal."""

    label: int
    children: tuple["LabeledRootedTree", ...] = ()
    degree: int = field(init=False, compare=False, default=0)

    def __post_init__(self) -> None:
        if self.label < 0:
            raise ShapeError("labels are 0-based non-negative integers")
        kids = tuple(sorted(self.children, key=tree_sort_key))
        object.__setattr__(self, "children", kids)
        object.__setattr__(self, "degree", 1 + sum(c.degree for c in kids))

    def max_label(self) -> int:
        return max([self.label] + [c.max_label() for c in self.children])


def tree(label: int, *children: LabeledRootedTree) -> LabeledRootedTree:
    return LabeledRootedTree(label, tuple(children))


@lru_cache(maxsize=None)
def tree_sort_key(t: LabeledRootedTree) -> tuple:
    return (t.degree, t.label, tuple(tree_sort_key(c) for c in t.children))


def format_tree(t: LabeledRootedTree, names: str = DEFAULT_NAMES) -> str:
    """A tree as root(child, child, ...), children in canonical order."""
    name = names[t.label] if t.label < len(names) else f"x{t.label}"
    if not t.children:
        return name
    return name + "(" + ",".join(format_tree(c, names) for c in t.children) + ")"


def parse_tree(text: str, names: str = DEFAULT_NAMES) -> LabeledRootedTree:
    """Inverse of format_tree; whitespace is ignored."""
    text = "".join(text.split())
    pos = 0

    def fail(msg: str) -> ShapeError:
        return ShapeError(f"bad tree at position {pos}: {msg} in {text!r}")

    def read_label() -> int:
        nonlocal pos
        if pos >= len(text):
            raise fail("expected a label")
        ch = text[pos]
        if ch == "x":
            end = pos + 1
            while end < len(text) and text[end].isdigit():
                end += 1
            if end == pos + 1:
                raise fail("expected digits after x")
            label = int(text[pos + 1 : end])
            pos = end
            return label
        if ch not in names:
            raise fail(f"unknown label {ch!r}")
        pos += 1
        return names.index(ch)

    def read_tree() -> LabeledRootedTree:
        nonlocal pos
        label = read_label()
        children = []
        if pos < len(text) and text[pos] == "(":
            pos += 1
            while True:
                children.append(read_tree())
                if pos >= len(text):
                    raise fail("unclosed parenthesis")
                if text[pos] == ",":
                    pos += 1
                    continue
                if text[pos] == ")":
                    pos += 1
                    break
                raise fail("expected ',' or ')'")
        return LabeledRootedTree(label, tuple(children))

    out = read_tree()
    if pos != len(text):
        raise fail("trailing input")
    return out


def enumerate_trees(num_labels: int, degree: int) -> list[LabeledRootedTree]:
    """All trees of the exact degree with labels < num_labels, in
    canonical (sort key) order."""
    if num_labels < 1 or degree < 0:
        raise ShapeError("need at least one label and non-negative degree")
    return _enumerate(num_labels, degree)


@lru_cache(maxsize=None)
def _enumerate(num_labels: int, degree: int) -> list[LabeledRootedTree]:
    if degree == 0:
        return []
    if degree == 1:
        return [tree(a) for a in range(num_labels)]
    out = set()
    # split degree-1 vertices among a multiset of child subtrees
    for root_label in range(num_labels):
        for parts in _partitions(degree - 1):
            pools = [_enumerate(num_labels, p) for p in parts]
            for combo in itertools.product(*pools):
                out.add(LabeledRootedTree(root_label, tuple(combo)))
    return sorted(out, key=tree_sort_key)


@lru_cache(maxsize=None)
def _partitions(n: int, cap: int | None = None) -> list[tuple[int, ...]]:
    """Partitions of n as weakly decreasing tuples."""
    if n == 0:
        return [()]
    cap = n if cap is None else cap
    out = []
    for first in range(min(n, cap), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return out


def tree_counts_oracle(num_labels: int, max_degree: int) -> list[int]:
    """Independent count of rooted trees by degree via the functional
    equation T(x) = num_labels * x * prod_d (1 - x^d)^(-T_d), evaluated
    with integer power series arithmetic only."""
    counts = [0] * (max_degree + 1)
    if max_degree >= 1:
        counts[1] = num_labels
    for d in range(2, max_degree + 1):
        # forest generating polynomial up to degree d-1 using counts < d
        forest = [0] * d
        forest[0] = 1
        for deg in range(1, d):
            t_deg = counts[deg]
            if t_deg == 0:
                continue
            # multiply by (1 - x^deg)^(-t_deg): repeated geometric factors
            for _ in range(t_deg):
                for pos in range(deg, d):
                    forest[pos] += forest[pos - deg]
        counts[d] = num_labels * forest[d - 1]
    return counts


@dataclass(frozen=True)
class TreePoly:
    """Rational linear combination of trees, all of degree <= max_degree;
    `truncated` records that higher-degree terms were dropped."""

    max_degree: int
    terms: tuple[tuple[LabeledRootedTree, Fraction], ...]
    truncated: bool = False

    def __post_init__(self) -> None:
        for t, _ in self.terms:
            if t.degree > self.max_degree:
                raise ShapeError("term exceeds the truncation degree")

    @classmethod
    def make(
        cls,
        max_degree: int,
        terms: Mapping[LabeledRootedTree, Fraction] | Iterable[tuple[LabeledRootedTree, Fraction]],
        truncated: bool = False,
    ) -> "TreePoly":
        acc: dict[LabeledRootedTree, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for t, c in items:
            acc[t] = acc.get(t, Fraction(0)) + c
        kept = tuple(
            (t, c)
            for t, c in sorted(acc.items(), key=lambda tc: tree_sort_key(tc[0]))
            if c != 0
        )
        return cls(max_degree, kept, truncated)

    @classmethod
    def of_tree(cls, t: LabeledRootedTree, max_degree: int) -> "TreePoly":
        return cls.make(max_degree, [(t, Fraction(1))])

    @classmethod
    def zero(cls, max_degree: int) -> "TreePoly":
        return cls.make(max_degree, [])

    def coefficient(self, t: LabeledRootedTree) -> Fraction:
        for s, c in self.terms:
            if s == t:
                return c
        return Fraction(0)

    def add(self, other: "TreePoly") -> "TreePoly":
        self._check_compatible(other)
        return TreePoly.make(
            self.max_degree,
            list(self.terms) + list(other.terms),
            self.truncated or other.truncated,
        )

    def sub(self, other: "TreePoly") -> "TreePoly":
        self._check_compatible(other)
        return TreePoly.make(
            self.max_degree,
            list(self.terms) + [(t, -c) for t, c in other.terms],
            self.truncated or other.truncated,
        )

    def scale(self, c: Fraction) -> "TreePoly":
        return TreePoly.make(self.max_degree, [(t, c * k) for t, k in self.terms], self.truncated)

    def is_zero(self) -> bool:
        return not self.terms

    def _check_compatible(self, other: "TreePoly") -> None:
        if self.max_degree != other.max_degree:
            raise TruncationMismatch(
                f"truncation degrees {self.max_degree} and {other.max_degree}"
            )


def graft_trees(s: LabeledRootedTree, t: LabeledRootedTree) -> list[LabeledRootedTree]:
    """All ways of attaching the root of s below one vertex of t, as a
    list with multiplicity (one entry per vertex of t)."""
    out = [LabeledRootedTree(t.label, t.children + (s,))]
    for pos in range(len(t.children)):
        for grafted in graft_trees(s, t.children[pos]):
            kids = t.children[:pos] + (grafted,) + t.children[pos + 1 :]
            out.append(LabeledRootedTree(t.label, kids))
    return out


def graft_product(p: TreePoly, q: TreePoly) -> TreePoly:
    """The free product: graft every term of p into every term of q,
    dropping (and recording) terms beyond the truncation."""
    p._check_compatible(q)
    acc: dict[LabeledRootedTree, Fraction] = {}
    dropped = p.truncated or q.truncated
    for s, cs in p.terms:
        for t, ct in q.terms:
            if s.degree + t.degree > p.max_degree:
                dropped = True
                continue
            c = cs * ct
            for grafted in graft_trees(s, t):
                acc[grafted] = acc.get(grafted, Fraction(0)) + c
    return TreePoly.make(p.max_degree, acc, dropped)


class TreeEvaluator:
    """The homomorphism from the free algebra determined by a choice of
    images for the degree-1 trees."""

    def __init__(self, algebra: PreLieAlgebra, assign: Mapping[int, Sequence[Fraction]]) -> None:
        self.algebra = algebra
        self.assign = {
            label: tuple(v) for label, v in assign.items()
        }
        for label, v in self.assign.items():
            if len(v) != algebra.dim:
                raise ShapeError(f"image of label {label} has wrong dimension")
        self._memo: dict[LabeledRootedTree, Vector] = {}

    def eval_tree(self, t: LabeledRootedTree) -> Vector:
        if t in self._memo:
            return self._memo[t]
        if not t.children:
            if t.label not in self.assign:
                raise ShapeError(f"no image assigned to label {t.label}")
            out = self.assign[t.label]
        else:
            first = t.children[0]
            rest = LabeledRootedTree(t.label, t.children[1:])
            product = graft_product(
                TreePoly.of_tree(first, t.degree), TreePoly.of_tree(rest, t.degree)
            )
            out = self.algebra.multiply(self.eval_tree(first), self.eval_tree(rest))
            for s, c in product.terms:
                if s == t:
                    continue
                out = vec_sub(out, vec_scale(c, self.eval_tree(s)))
        self._memo[t] = out
        return out

    def eval_poly(self, p: TreePoly) -> Vector:
        if p.truncated:
            raise NeedsHigherTruncation(
                "polynomial lost terms to truncation; evaluate below the cutoff"
            )
        out = zero_vector(self.algebra.dim)
        for t, c in p.terms:
            out = vec_add(out, vec_scale(c, self.eval_tree(t)))
        return out


def evaluate(
    p: TreePoly, algebra: PreLieAlgebra, assign: Mapping[int, Sequence[Fraction]]
) -> Vector:
    """Evaluate a non-truncated polynomial; NeedsHigherTruncation if the
    polynomial already dropped terms."""
    return TreeEvaluator(algebra, assign).eval_poly(p)


def check_cocycle_pullback(
    theta: Cochain,
    rep: Representation,
    assign: Mapping[int, Sequence[Fraction]],
    max_degree: int,
) -> Violation | None:
    """Pull a closed 3-cochain back along the evaluation homomorphism
    and verify its coboundary vanishes on all quadruples of basis trees
    up to the total degree cutoff.

    The coboundary on the free side uses grafting for products and the
    evaluation homomorphism for the module structure, so this exercises
    both at once. Indices in a Violation refer to positions in the
    concatenated list of basis trees ordered by (degree, canonical key).
    """
    if theta.arity != 3:
        raise ShapeError("need a 3-cochain")
    a = rep.algebra
    if theta.algebra_dim != a.dim or theta.carrier_dim != rep.carrier_dim:
        raise ShapeError("cochain does not match the representation")
    num_labels = max(assign.keys()) + 1
    evaluator = TreeEvaluator(a, assign)
    trees: list[LabeledRootedTree] = []
    # a quadruple needs three more degree-1 partners, so trees beyond
    # degree max_degree - 3 can never appear
    for d in range(1, max(max_degree - 3, 1) + 1):
        trees.extend(enumerate_trees(num_labels, d))

    free_degree = max_degree + 1  # room for single products inside d(theta)
    polys = [TreePoly.of_tree(t, free_degree) for t in trees]
    indices = [
        (i1, i2, i3, i4)
        for i1, i2, i3, i4 in itertools.product(range(len(trees)), repeat=4)
        if trees[i1].degree + trees[i2].degree + trees[i3].degree + trees[i4].degree
        <= max_degree
    ]
    # evaluation is linear and a homomorphism, so every polynomial that
    # appears can be evaluated once and the loop reduced to vector work
    singles = [evaluator.eval_poly(p) for p in polys]
    product_cache: dict[tuple[int, int], Vector] = {}

    def product_vec(i: int, j: int) -> Vector:
        key = (i, j)
        if key not in product_cache:
            product_cache[key] = evaluator.eval_poly(graft_product(polys[i], polys[j]))
        return product_cache[key]

    theta_cache: dict[tuple[Vector, Vector, Vector], Vector] = {}

    def pullback(v1: Vector, v2: Vector, v3: Vector) -> Vector:
        key = (v1, v2, v3)
        if key not in theta_cache:
            theta_cache[key] = theta.evaluate([v1, v2, v3])
        return theta_cache[key]

    for quad in indices:
        i1, i2, i3, i4 = quad
        vecs = [singles[q] for q in quad]
        total = zero_vector(rep.carrier_dim)
        for i in (1, 2, 3):
            sign = Fraction(1) if i % 2 == 1 else Fraction(-1)
            rest = [vecs[t] for t in range(4) if t != i - 1]
            term = rep.act_left(vecs[i - 1], pullback(rest[0], rest[1], rest[2]))
            total = vec_add(total, vec_scale(sign, term))
            shuffled = [vecs[t] for t in range(3) if t != i - 1] + [vecs[i - 1]]
            term = rep.act_right(pullback(shuffled[0], shuffled[1], shuffled[2]), vecs[3])
            total = vec_add(total, vec_scale(sign, term))
            head = [vecs[t] for t in range(3) if t != i - 1]
            prod = product_vec(quad[i - 1], quad[3])
            term = pullback(head[0], head[1], prod)
            total = vec_sub(total, vec_scale(sign, term))
        for i in (1, 2, 3):
            for j in range(i + 1, 4):
                sign = Fraction(1) if (i + j) % 2 == 0 else Fraction(-1)
                br = vec_sub(
                    product_vec(quad[i - 1], quad[j - 1]),
                    product_vec(quad[j - 1], quad[i - 1]),
                )
                rest = [vecs[t] for t in range(4) if t not in (i - 1, j - 1)]
                term = pullback(br, rest[0], rest[1])
                total = vec_add(total, vec_scale(sign, term))
        if total != zero_vector(rep.carrier_dim):
            return Violation(
                "pullback-coboundary", (i1, i2, i3, i4), total, zero_vector(rep.carrier_dim)
            )
    return None
