"""Cartan involutions, Cartan-subgroup classes, and the cover's center.

An involution theta is stored as a dense rational matrix on the ambient
coordinates.  Conjugacy classes of Cartan subgroups are labelled by a
signature: for E families the triple (r, m, s) of compact / complex / split
torus factors, for A the real rank, for D the plane census plus an
orientation bit.  Signatures are computed exactly from the action of
sigma = -theta on the root lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .root_system import (
    Matrix,
    RootSystem,
    Vector,
    add,
    basis_vector,
    build_root_system,
    identity_matrix,
    mat_apply,
    mat_mul,
    mat_neg,
    neg,
    pairing,
    reflection_matrix,
    sub,
    zero,
    ScopeError,
)

# Root type tags, as printed in chain certificates.
IMAGINARY = "im"
REAL = "real"
COMPLEX = "cx"


def root_type(theta: Matrix, alpha: Vector) -> str:
    image = mat_apply(theta, alpha)
    if image == alpha:
        return IMAGINARY
    if image == neg(alpha):
        return REAL
    return COMPLEX


@dataclass(frozen=True)
class Involution:
    """An involutive isometry normalizing the root system."""

    family: str
    dim: int
    matrix: Matrix

    def apply(self, v: Vector) -> Vector:
        return mat_apply(self.matrix, v)

    def is_involution(self) -> bool:
        return mat_mul(self.matrix, self.matrix) == identity_matrix(self.dim)


def _plane_roots(i: int, j: int, dim: int) -> Tuple[Vector, Vector]:
    ei, ej = basis_vector(i, dim), basis_vector(j, dim)
    return sub(ei, ej), add(ei, ej)


def involution_from_pairs(
    system: RootSystem,
    pairs: Sequence[Tuple[int, int]] = (),
    blocks: Sequence[Tuple[int, ...]] = (),
) -> Involution:
    """theta = (-Id) composed with the reflections named by the pair data.

    A positive pair (i, j) contributes the reflection in e_i - e_j, a negative
    pair (-i, -j) the reflection in e_i + e_j.  A block of 2r slots matches
    its odd-position members with its even-position members in sorted order
    and contributes both reflections for each matched pair.
    """
    dim = system.dim
    m = mat_neg(identity_matrix(dim))
    for a, b in pairs:
        i, j = abs(a), abs(b)
        minus, plus = _plane_roots(i, j, dim)
        root = minus if a > 0 else plus
        m = mat_mul(m, reflection_matrix(root))
    for block in blocks:
        odds = sorted(x for x in block if x % 2 == 1)
        evens = sorted(x for x in block if x % 2 == 0)
        if len(odds) != len(evens):
            raise ValueError("block must balance odd and even slots: %r" % (block,))
        for i, j in zip(odds, evens):
            minus, plus = _plane_roots(i, j, dim)
            m = mat_mul(m, reflection_matrix(minus))
            m = mat_mul(m, reflection_matrix(plus))
    return Involution(family=system.family, dim=dim, matrix=m)


# ---------------------------------------------------------------------------
# Integer linear algebra (exact, small matrices)
# ---------------------------------------------------------------------------

def integer_kernel_basis(mat: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    """Basis of the saturated integer kernel {x : mat @ x = 0}.

    Column reduction by unimodular operations; the returned basis spans the
    full lattice of integer solutions.
    """
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    m = [list(row) for row in mat]
    u = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    def col_sub(dst: int, src: int, q: int) -> None:
        for r in range(rows):
            m[r][dst] -= q * m[r][src]
        for r in range(cols):
            u[r][dst] -= q * u[r][src]

    def col_swap(a: int, b: int) -> None:
        for r in range(rows):
            m[r][a], m[r][b] = m[r][b], m[r][a]
        for r in range(cols):
            u[r][a], u[r][b] = u[r][b], u[r][a]

    frontier = 0
    for r in range(rows):
        live = [c for c in range(frontier, cols) if m[r][c] != 0]
        while len(live) > 1:
            live.sort(key=lambda c: abs(m[r][c]))
            small, big = live[0], live[1]
            q = m[r][big] // m[r][small]
            col_sub(big, small, q)
            live = [c for c in live if m[r][c] != 0]
        if live:
            col_swap(frontier, live[0])
            frontier += 1
    return [tuple(u[r][c] for r in range(cols)) for c in range(frontier, cols)]


def gf2_rank(vectors: Sequence[Sequence[int]]) -> int:
    basis: List[int] = []
    for v in vectors:
        word = 0
        for i, x in enumerate(v):
            if x % 2:
                word |= 1 << i
        for b in basis:
            word = min(word, word ^ b)
        if word:
            basis.append(word)
    return len(basis)


def smith_invariant_factors(mat: Sequence[Sequence[int]]) -> List[int]:
    """Nonzero invariant factors d_1 | d_2 | ... of an integer matrix."""
    m = [list(row) for row in mat]
    rows, cols = len(m), len(m[0]) if m else 0
    factors: List[int] = []
    top = 0
    while top < rows and top < cols:
        pivot = None
        for i in range(top, rows):
            for j in range(top, cols):
                if m[i][j] != 0:
                    if pivot is None or abs(m[i][j]) < abs(m[pivot[0]][pivot[1]]):
                        pivot = (i, j)
        if pivot is None:
            break
        i0, j0 = pivot
        m[top], m[i0] = m[i0], m[top]
        for r in range(rows):
            m[r][top], m[r][j0] = m[r][j0], m[r][top]
        dirty = True
        while dirty:
            dirty = False
            for i in range(top + 1, rows):
                if m[i][top] % m[top][top] != 0:
                    q = m[i][top] // m[top][top]
                    m[i] = [x - q * y for x, y in zip(m[i], m[top])]
                    m[top], m[i] = m[i], m[top]
                    dirty = True
            for i in range(top + 1, rows):
                q = m[i][top] // m[top][top]
                if q:
                    m[i] = [x - q * y for x, y in zip(m[i], m[top])]
            for j in range(top + 1, cols):
                if m[top][j] % m[top][top] != 0:
                    q = m[top][j] // m[top][top]
                    for r in range(rows):
                        m[r][j] -= q * m[r][top]
                        m[r][top], m[r][j] = m[r][j], m[r][top]
                    dirty = True
                else:
                    q = m[top][j] // m[top][top]
                    if q:
                        for r in range(rows):
                            m[r][j] -= q * m[r][top]
            if not dirty:
                stray = None
                for i in range(top + 1, rows):
                    for j in range(top + 1, cols):
                        if m[i][j] % m[top][top] != 0:
                            stray = (i, j)
                            break
                    if stray:
                        break
                if stray:
                    i0 = stray[0]
                    m[top] = [x + y for x, y in zip(m[top], m[i0])]
                    dirty = True
        factors.append(abs(m[top][top]))
        top += 1
    return [d for d in factors if d != 0]


# ---------------------------------------------------------------------------
# Signatures from the lattice action
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def signature_from_involution(system: RootSystem, theta: Involution) -> Tuple[int, int, int]:
    """(compact, complex, split) torus signature of theta.

    sigma = -theta acts on the root lattice; with L+- its eigenlattices,
    the number of complex pairs is m = log2 [L : L+ (+) L-], computed as the
    corank of the combined eigenlattice bases modulo 2.
    """
    n = system.rank
    sigma_cols: List[List[int]] = []
    for a in system.simple_roots:
        image = neg(theta.apply(a))
        coeffs = system.simple_coefficients(image)
        col = []
        for c in coeffs:
            if c.denominator != 1:
                raise AssertionError("sigma does not preserve the root lattice")
            col.append(int(c))
        sigma_cols.append(col)
    t = [[sigma_cols[j][i] for j in range(n)] for i in range(n)]
    t_minus = [[t[i][j] - (1 if i == j else 0) for j in range(n)] for i in range(n)]
    t_plus = [[t[i][j] + (1 if i == j else 0) for j in range(n)] for i in range(n)]
    k_plus = integer_kernel_basis(t_minus)   # sigma = +1, theta = -1
    k_minus = integer_kernel_basis(t_plus)   # sigma = -1, theta = +1
    if len(k_plus) + len(k_minus) != n:
        raise AssertionError("eigenlattice ranks do not fill the lattice")
    m = n - gf2_rank(list(k_plus) + list(k_minus))
    r = len(k_minus) - m
    s = len(k_plus) - m
    if r < 0 or s < 0:
        raise AssertionError("negative signature entry; not an involution?")
    return (r, m, s)


@dataclass(frozen=True)
class TorusShape:
    compact: int
    complex_pairs: int
    split: int

    @property
    def real_rank(self) -> int:
        return self.complex_pairs + self.split

    def render(self) -> str:
        return "(%d,%d,%d)" % (self.compact, self.complex_pairs, self.split)


@dataclass(frozen=True)
class CartanClass:
    """Conjugacy class of Cartan subgroups.

    signature: E families (r, m, s); family A (real_rank,);
    family D (plain_pairs, both_sign_pairs, orientation).
    """

    family: str
    rank: int
    signature: Tuple[int, ...]

    def render(self) -> str:
        if self.family == "A":
            return "i=%d" % self.signature[0]
        if self.family == "D":
            a, b, t = self.signature
            return "(%d,%d,%s)" % (a, b, "-" if t else "+")
        return "(%d,%d,%d)" % self.signature


# Representative pair data for the E classes, keyed by (family, signature).
E_CLASS_REPS: Dict[Tuple[str, Tuple[int, int, int]], Tuple[Tuple[Tuple[int, ...], ...], Tuple[Tuple[int, int], ...]]] = {
    ("E6", (2, 2, 0)): (((1, 2, 3, 4),), ()),
    ("E6", (0, 3, 0)): ((), ((1, 2), (-1, -2), (3, 4))),
    ("E6", (0, 2, 2)): ((), ((1, 2), (-1, -2))),
    ("E6", (0, 1, 4)): ((), ((1, 2),)),
    ("E6", (0, 0, 6)): ((), ()),
    ("E7", (7, 0, 0)): (((1, 2, 3, 4, 5, 6),), ((7, 8),)),
    ("E7", (5, 1, 0)): (((1, 2, 3, 4),), ((5, 6), (7, 8))),
    ("E7", (3, 2, 0)): (((1, 2, 3, 4),), ((7, 8),)),
    ("E7", (1, 3, 0)): ((), ((1, 2), (-1, -2), (3, 4), (7, 8))),
    ("E7", (2, 2, 1)): (((1, 2, 3, 4),), ()),
    ("E7", (1, 2, 2)): ((), ((1, 2), (-1, -2), (7, 8))),
    ("E7", (0, 3, 1)): ((), ((1, 2), (-1, -2), (3, 4))),
    ("E7", (0, 2, 3)): ((), ((1, 2), (-1, -2))),
    ("E7", (0, 1, 5)): ((), ((1, 2),)),
    ("E7", (0, 0, 7)): ((), ()),
    ("E8", (8, 0, 0)): (((1, 2, 3, 4, 5, 6, 7, 8),), ()),
    ("E8", (6, 1, 0)): (((1, 2, 3, 4, 5, 6),), ((7, 8),)),
    ("E8", (4, 2, 0)): (((1, 2, 3, 4),), ((5, 6), (7, 8))),
    ("E8", (2, 3, 0)): (((1, 2, 3, 4),), ((5, 6),)),
    ("E8", (0, 4, 0)): ((), ((1, 2), (-1, -2), (3, 4), (5, 6))),
    ("E8", (2, 2, 2)): ((), ((1, 2), (-1, -2), (3, 4), (-3, -4))),
    ("E8", (0, 3, 2)): ((), ((1, 2), (-1, -2), (3, 4))),
    ("E8", (0, 2, 4)): ((), ((1, 2), (-1, -2))),
    ("E8", (0, 1, 6)): ((), ((1, 2),)),
    ("E8", (0, 0, 8)): ((), ()),
}

_E_CLASS_ORDER: Dict[str, Tuple[Tuple[int, int, int], ...]] = {
    "E6": ((2, 2, 0), (0, 3, 0), (0, 2, 2), (0, 1, 4), (0, 0, 6)),
    "E7": (
        (7, 0, 0), (5, 1, 0), (3, 2, 0), (1, 3, 0), (2, 2, 1),
        (1, 2, 2), (0, 3, 1), (0, 2, 3), (0, 1, 5), (0, 0, 7),
    ),
    "E8": (
        (8, 0, 0), (6, 1, 0), (4, 2, 0), (2, 3, 0), (0, 4, 0),
        (2, 2, 2), (0, 3, 2), (0, 2, 4), (0, 1, 6), (0, 0, 8),
    ),
}

# Cayley-transform edges between E classes (from more split to less split).
_E_HASSE: Dict[str, Tuple[Tuple[Tuple[int, int, int], Tuple[int, int, int]], ...]] = {
    "E6": (
        ((0, 0, 6), (0, 1, 4)),
        ((0, 1, 4), (0, 2, 2)),
        ((0, 2, 2), (0, 3, 0)),
        ((0, 3, 0), (2, 2, 0)),
    ),
    "E7": (
        ((0, 0, 7), (0, 1, 5)),
        ((0, 1, 5), (0, 2, 3)),
        ((0, 2, 3), (0, 3, 1)),
        ((0, 2, 3), (1, 2, 2)),
        ((0, 3, 1), (1, 3, 0)),
        ((1, 2, 2), (1, 3, 0)),
        ((0, 3, 1), (2, 2, 1)),
        ((1, 3, 0), (3, 2, 0)),
        ((2, 2, 1), (3, 2, 0)),
        ((3, 2, 0), (5, 1, 0)),
        ((5, 1, 0), (7, 0, 0)),
    ),
    "E8": (
        ((0, 0, 8), (0, 1, 6)),
        ((0, 1, 6), (0, 2, 4)),
        ((0, 2, 4), (0, 3, 2)),
        ((0, 3, 2), (0, 4, 0)),
        ((0, 3, 2), (2, 2, 2)),
        ((0, 4, 0), (2, 3, 0)),
        ((2, 2, 2), (2, 3, 0)),
        ((2, 3, 0), (4, 2, 0)),
        ((4, 2, 0), (6, 1, 0)),
        ((6, 1, 0), (8, 0, 0)),
    ),
}


def class_rep_data(c: CartanClass) -> Tuple[Tuple[Tuple[int, ...], ...], Tuple[Tuple[int, int], ...]]:
    """(blocks, pairs) of the representative parameter for the class."""
    if c.family in ("E6", "E7", "E8"):
        key = (c.family, c.signature)  # type: ignore[arg-type]
        if key not in E_CLASS_REPS:
            raise ScopeError("unknown %s class %r" % (c.family, c.signature))
        return E_CLASS_REPS[key]
    if c.family == "A":
        n = c.rank + 1
        k = (n - 1) - c.signature[0]
        return ((), tuple((2 * t + 1, 2 * t + 2) for t in range(k)))
    if c.family == "D":
        a, b, t = c.signature
        pairs: List[Tuple[int, int]] = []
        for idx in range(b):
            i = 2 * idx + 1
            pairs.append((i, i + 1))
            pairs.append((-i, -(i + 1)))
        for idx in range(a):
            i = 2 * (b + idx) + 1
            if t and idx == a - 1:
                pairs.append((-i, -(i + 1)))
            else:
                pairs.append((i, i + 1))
        return ((), tuple(pairs))
    raise ScopeError("unknown family %r" % (c.family,))


def involution_for_class(c: CartanClass) -> Involution:
    system = build_root_system(c.family, c.rank if c.family in ("A", "D") else None)
    blocks, pairs = class_rep_data(c)
    return involution_from_pairs(system, pairs=pairs, blocks=blocks)


def cartan_shape(c: CartanClass) -> TorusShape:
    system = build_root_system(c.family, c.rank if c.family in ("A", "D") else None)
    theta = involution_for_class(c)
    r, m, s = signature_from_involution(system, theta)
    return TorusShape(compact=r, complex_pairs=m, split=s)


def cartan_classes(family: str, rank: Optional[int] = None) -> Tuple[CartanClass, ...]:
    if family in ("E6", "E7", "E8"):
        rk = int(family[1])
        return tuple(CartanClass(family, rk, sig) for sig in _E_CLASS_ORDER[family])
    system = build_root_system(family, rank)
    if family == "A":
        n = system.rank + 1
        return tuple(
            CartanClass("A", system.rank, ((n - 1) - k,)) for k in range(n // 2 + 1)
        )
    if family == "D":
        n = system.rank
        out: List[CartanClass] = []
        for planes in range(n // 2 + 1):
            for b in range(planes + 1):
                a = planes - b
                # The orientation bit survives conjugacy only when every
                # coordinate sits in a single-sign plane: an unused coordinate
                # or a both-sign plane absorbs individual sign flips.
                orientations = (0, 1) if (b == 0 and 2 * a == n and a >= 1) else (0,)
                for t in orientations:
                    out.append(CartanClass("D", n, (a, b, t)))
        out.sort(key=lambda c: (-(cartan_shape(c).real_rank), c.signature))
        return tuple(out)
    raise ScopeError("unknown family %r" % (family,))


def classify_pairs(family: str, rank: int, pairs: Sequence[Tuple[int, int]],
                   blocks: Sequence[Tuple[int, ...]] = ()) -> CartanClass:
    """Cartan class of the parameter with the given pair data."""
    if family == "A":
        n = rank + 1
        return CartanClass("A", rank, ((n - 1) - len(pairs),))
    if family == "D":
        n = rank
        planes: Dict[Tuple[int, int], List[int]] = {}
        for a, b in pairs:
            planes.setdefault((abs(a), abs(b)), []).append(1 if a > 0 else -1)
        for block in blocks:
            odds = sorted(x for x in block if x % 2 == 1)
            evens = sorted(x for x in block if x % 2 == 0)
            for i, j in zip(odds, evens):
                planes.setdefault((i, j), []).extend([1, -1])
        single = [signs[0] for signs in planes.values() if len(signs) == 1]
        a_count = len(single)
        b_count = sum(1 for signs in planes.values() if len(signs) == 2)
        chirality_defined = b_count == 0 and 2 * a_count == n and a_count >= 1
        t = sum(1 for s in single if s < 0) % 2 if chirality_defined else 0
        return CartanClass("D", n, (a_count, b_count, t))
    if family in ("E6", "E7", "E8"):
        system = build_root_system(family)
        theta = involution_from_pairs(system, pairs=pairs, blocks=blocks)
        sig = signature_from_involution(system, theta)
        return CartanClass(family, system.rank, sig)
    raise ScopeError("unknown family %r" % (family,))


@dataclass(frozen=True)
class HasseDiagram:
    classes: Tuple[CartanClass, ...]
    edges: Tuple[Tuple[int, int], ...]  # (from, to) indices; one Cayley step


def _is_half_integral(system: RootSystem, root: Vector) -> bool:
    return pairing(system.rho_half, root).denominator == 2


def _class_moves(c: CartanClass) -> List[CartanClass]:
    """Classes reachable from c by one Cayley transform on its representative."""
    family = c.family
    system = build_root_system(family, c.rank if family in ("A", "D") else None)
    blocks, pairs = class_rep_data(c)
    theta = involution_from_pairs(system, pairs=pairs, blocks=blocks)
    used = set()
    for a, b in pairs:
        used.update((abs(a), abs(b)))
    for block in blocks:
        used.update(block)
    n_slots = system.dim if family != "E6" else 6
    if family == "E7":
        n_slots = 8
    targets: List[CartanClass] = []
    candidates: List[Tuple[int, int]] = []
    for i in range(1, n_slots + 1):
        for j in range(i + 1, n_slots + 1):
            if (i + j) % 2 == 0:
                continue
            if i in used or j in used:
                continue
            candidates.append((i, j))
            if family != "A":
                candidates.append((-i, -j))
    if family != "A":
        plane_signs: Dict[Tuple[int, int], List[int]] = {}
        for a, b in pairs:
            plane_signs.setdefault((abs(a), abs(b)), []).append(1 if a > 0 else -1)
        for (i, j), signs in plane_signs.items():
            if len(signs) == 1:
                candidates.append((-i, -j) if signs[0] > 0 else (i, j))
    for cand in candidates:
        i, j = abs(cand[0]), abs(cand[1])
        minus, plus = _plane_roots(i, j, system.dim)
        root = minus if cand[0] > 0 else plus
        if not system.is_root(root):
            continue
        if not _is_half_integral(system, root):
            continue
        if root_type(theta.matrix, root) != REAL:
            continue
        new_pairs = tuple(pairs) + (cand,)
        targets.append(classify_pairs(family, c.rank, new_pairs, blocks))
    return targets


def hasse_diagram(family: str, rank: Optional[int] = None) -> HasseDiagram:
    classes = cartan_classes(family, rank)
    index = {c.signature: k for k, c in enumerate(classes)}
    edges = set()
    for k, c in enumerate(classes):
        for target in _class_moves(c):
            if target.signature not in index:
                raise AssertionError("Cayley move left the class list: %r" % (target,))
            edges.add((k, index[target.signature]))
    edge_tuple = tuple(sorted(edges))
    if family in ("E6", "E7", "E8"):
        expected = {
            (index[a], index[b]) for a, b in _E_HASSE[family]
        }
        if set(edge_tuple) != expected:
            raise AssertionError("computed %s Cayley diagram differs from the fixed one" % family)
    return HasseDiagram(classes=classes, edges=edge_tuple)


# ---------------------------------------------------------------------------
# Center of the nonlinear cover
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FiniteAbelianGroup:
    invariant_factors: Tuple[int, ...]

    @property
    def order(self) -> int:
        n = 1
        for d in self.invariant_factors:
            n *= d
        return n

    def render(self) -> str:
        if not self.invariant_factors:
            return "1"
        return " x ".join("Z/%d" % d for d in self.invariant_factors)


def cartan_matrix(system: RootSystem) -> List[List[int]]:
    out = []
    for a in system.simple_roots:
        row = []
        for b in system.simple_roots:
            p = pairing(b, a)
            if p.denominator != 1:
                raise AssertionError("non-integer Cartan pairing")
            row.append(int(p))
        out.append(row)
    return out


def _gf2_kernel_basis(mat: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    m = [[mat[i][j] % 2 for j in range(cols)] for i in range(rows)]
    pivots: Dict[int, int] = {}
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(rows):
            if i != r and m[i][c]:
                m[i] = [(x + y) % 2 for x, y in zip(m[i], m[r])]
        pivots[c] = r
        r += 1
    basis = []
    free_cols = [c for c in range(cols) if c not in pivots]
    for fc in free_cols:
        v = [0] * cols
        v[fc] = 1
        for c, row in pivots.items():
            if m[row][fc]:
                v[c] = 1
        basis.append(tuple(v))
    return basis


@dataclass(frozen=True)
class CenterData:
    """Center of the nonlinear double cover and its genuine quotient."""

    family: str
    rank: int
    center: FiniteAbelianGroup        # Z of the cover
    quotient_order: int               # [2 P^vee cap R^vee : 2 R^vee]
    quotient_reps: Tuple[Vector, ...]  # coset representatives, ambient coords


@lru_cache(maxsize=None)
def cover_center_data(family: str, rank: Optional[int] = None) -> CenterData:
    """Center of the cover via the lattice quotient [2P^vee cap R^vee]/2R^vee.

    In simple-root coordinates the quotient is the kernel of the Cartan
    matrix mod 2.  Cross-checked against coset enumeration and the parity of
    the Smith invariant factors.
    """
    system = build_root_system(family, rank)
    n = system.rank
    cmat = cartan_matrix(system)
    kernel = _gf2_kernel_basis(cmat)
    k = len(kernel)

    if n <= 12:
        count = 0
        for mask in range(1 << n):
            v = [(mask >> i) & 1 for i in range(n)]
            if all(sum(cmat[i][j] * v[j] for j in range(n)) % 2 == 0 for i in range(n)):
                count += 1
        if count != 1 << k:
            raise AssertionError("coset enumeration disagrees with the mod-2 kernel")
    even_factors = sum(1 for d in smith_invariant_factors(cmat) if d % 2 == 0)
    if even_factors != k:
        raise AssertionError("Smith form parity disagrees with the mod-2 kernel")

    reps: List[Vector] = [zero(system.dim)]
    span: List[Tuple[int, ...]] = []
    for mask in range(1, 1 << k):
        coeffs = [0] * n
        for bit in range(k):
            if (mask >> bit) & 1:
                coeffs = [(x + y) % 2 for x, y in zip(coeffs, kernel[bit])]
        span.append(tuple(coeffs))
    for coeffs in sorted(span):
        v = zero(system.dim)
        for i, c in enumerate(coeffs):
            if c:
                v = add(v, system.simple_roots[i])
        reps.append(v)

    return CenterData(
        family=family,
        rank=n,
        center=FiniteAbelianGroup(invariant_factors=(2,) * (k + 1)),
        quotient_order=1 << k,
        quotient_reps=tuple(reps),
    )


def cover_center(family: str, rank: Optional[int] = None) -> FiniteAbelianGroup:
    return cover_center_data(family, rank).center


def genuine_central_character_count(family: str, rank: Optional[int] = None) -> int:
    """Number of genuine central characters with a fixed infinitesimal type."""
    return cover_center_data(family, rank).quotient_order
