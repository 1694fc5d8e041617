"""Pseudospherical parameters and their Cayley-transform calculus.

A parameter is written gamma(S) for a collection S of pairs and quadruple
blocks of coordinate slots.  An unsigned pair {i,j} records a Cayley
transform through e_i - e_j, a signed pair {-i,-j} one through e_i + e_j;
a quadruple block {i1..i_{2r}} abbreviates both transforms for each of its
matched (odd slot, even slot) pairs.  All transform roots pair to Z + 1/2
against rho/2, which is what makes the moves available in the genuine
block.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from .root_system import (
    RootSystem,
    ScopeError,
    Vector,
    add,
    basis_vector,
    build_root_system,
    pairing,
    sub,
)
from . import cartan
from .cartan import (
    CartanClass,
    Involution,
    cartan_classes,
    class_rep_data,
    classify_pairs,
    genuine_central_character_count,
    involution_from_pairs,
    signature_from_involution,
)

Pair = Tuple[int, int]
Block = Tuple[int, ...]


class TransformError(ValueError):
    """An illegal Cayley transform was requested."""


@dataclass(frozen=True)
class CentralCharacterLabel:
    family: str
    rank: int
    index: int

    def render(self) -> str:
        return "chi%d" % self.index


@dataclass(frozen=True)
class PairSetParameter:
    """A pseudospherical-origin parameter gamma(S) with a central character."""

    family: str
    rank: int
    chi: int
    blocks: Tuple[Block, ...]
    pairs: Tuple[Pair, ...]

    def elements(self) -> FrozenSet[Tuple[int, ...]]:
        return frozenset(self.blocks) | frozenset(self.pairs)

    def render(self) -> str:
        parts = ["{%s}" % ",".join(str(x) for x in b) for b in self.blocks]
        parts += ["{%d,%d}" % p for p in self.pairs]
        return "gamma(%s)" % ",".join(parts)


def _ambient_system(family: str, rank: int) -> RootSystem:
    if family in ("E6", "E7", "E8"):
        return build_root_system(family)
    return build_root_system(family, rank)


def _normalize_pair(pair: Sequence[int]) -> Pair:
    if len(pair) != 2:
        raise TransformError("a pair has exactly two slots: %r" % (pair,))
    a, b = pair
    if a == 0 or b == 0 or abs(a) == abs(b):
        raise TransformError("pair slots must be distinct nonzero: %r" % (pair,))
    negative = a < 0 or b < 0
    i, j = sorted((abs(a), abs(b)))
    return (-i, -j) if negative else (i, j)


def _pair_sort_key(p: Pair) -> Tuple[int, int, int]:
    return (abs(p[0]), abs(p[1]), 0 if p[0] > 0 else 1)


def pair_root(system: RootSystem, p: Pair) -> Vector:
    """Cayley-transform root of a pair: e_i - e_j unsigned, e_i + e_j signed."""
    i, j = abs(p[0]), abs(p[1])
    ei, ej = basis_vector(i, system.dim), basis_vector(j, system.dim)
    return sub(ei, ej) if p[0] > 0 else add(ei, ej)


def block_pairs(block: Block) -> Tuple[Pair, ...]:
    odds = sorted(x for x in block if x % 2 == 1)
    evens = sorted(x for x in block if x % 2 == 0)
    if len(odds) != len(evens) or not block:
        raise TransformError("block must balance odd and even slots: %r" % (block,))
    return tuple(zip(odds, evens))


def _check_transform_root(system: RootSystem, p: Pair) -> None:
    root = pair_root(system, p)
    if not system.is_root(root):
        raise TransformError("no root for pair %r in %s" % (p, system.family))
    if pairing(system.rho_half, root).denominator != 2:
        raise TransformError("pair %r is not a half-integral transform" % (p,))


def make_parameter(
    family: str,
    rank: int,
    chi: int = 0,
    blocks: Sequence[Sequence[int]] = (),
    pairs: Sequence[Sequence[int]] = (),
) -> PairSetParameter:
    system = _ambient_system(family, rank)
    if not 0 <= chi < genuine_central_character_count(family, system.rank if family in ("A", "D") else None):
        raise ScopeError("central character index %d out of range" % chi)
    norm_pairs = sorted((_normalize_pair(p) for p in pairs), key=_pair_sort_key)
    norm_blocks = tuple(sorted(tuple(sorted(b)) for b in blocks))
    if family == "A" and any(p[0] < 0 for p in norm_pairs):
        raise TransformError("signed pairs do not exist in family A")
    if family == "A" and norm_blocks:
        raise TransformError("quadruple blocks do not exist in family A")
    used: Set[int] = set()
    for b in norm_blocks:
        for x in b:
            if x in used:
                raise TransformError("slot %d reused" % x)
            used.add(x)
        for bp in block_pairs(b):
            _check_transform_root(system, bp)
            _check_transform_root(system, (-bp[0], -bp[1]))
    seen_pairs: Set[Pair] = set()
    for p in norm_pairs:
        if p in seen_pairs:
            raise TransformError("duplicate pair %r" % (p,))
        seen_pairs.add(p)
        _check_transform_root(system, p)
        for x in (abs(p[0]), abs(p[1])):
            if x in used:
                raise TransformError("slot %d reused" % x)
    plane_count: Dict[Tuple[int, int], int] = {}
    for p in norm_pairs:
        key = (abs(p[0]), abs(p[1]))
        plane_count[key] = plane_count.get(key, 0) + 1
    overlapping = {abs(x) for p in norm_pairs for x in p}
    for p in norm_pairs:
        i, j = abs(p[0]), abs(p[1])
        for other in norm_pairs:
            if other == p or (abs(other[0]), abs(other[1])) == (i, j):
                continue
            if {i, j} & {abs(other[0]), abs(other[1])}:
                raise TransformError("slot shared between pairs %r and %r" % (p, other))
    return PairSetParameter(
        family=family,
        rank=system.rank,
        chi=chi,
        blocks=norm_blocks,
        pairs=tuple(norm_pairs),
    )


def pseudospherical_params(family: str, rank: Optional[int] = None) -> Tuple[PairSetParameter, ...]:
    """The pseudospherical parameters gamma(empty), one per central character."""
    system = _ambient_system(family, rank or 0)
    count = genuine_central_character_count(
        family, system.rank if family in ("A", "D") else None
    )
    return tuple(
        make_parameter(family, system.rank, chi=c) for c in range(count)
    )


def cayley(p: PairSetParameter, pair: Sequence[int]) -> PairSetParameter:
    """Apply one Cayley transform, adding the (normalized) pair to p.

    The transform root must be real for p's involution: the pair must use
    fresh slots, or complete an existing single-sign pair to both signs.
    """
    new = _normalize_pair(pair)
    if p.family == "A" and new[0] < 0:
        raise TransformError("signed pairs do not exist in family A")
    used_in_blocks = {x for b in p.blocks for x in b}
    plane = (abs(new[0]), abs(new[1]))
    if used_in_blocks & set(plane):
        raise TransformError("slots %r already used by a block" % (plane,))
    same_plane = [q for q in p.pairs if (abs(q[0]), abs(q[1])) == plane]
    other_overlap = [
        q for q in p.pairs
        if (abs(q[0]), abs(q[1])) != plane and {abs(q[0]), abs(q[1])} & set(plane)
    ]
    if other_overlap:
        raise TransformError("slots %r overlap pair %r" % (plane, other_overlap[0]))
    if new in same_plane:
        raise TransformError("pair %r already present" % (new,))
    if same_plane and p.family == "A":
        raise TransformError("pair %r already present" % (plane,))
    return make_parameter(
        p.family, p.rank, chi=p.chi, blocks=p.blocks, pairs=p.pairs + (new,)
    )


def theta(p: PairSetParameter) -> Involution:
    system = _ambient_system(p.family, p.rank)
    return involution_from_pairs(system, pairs=p.pairs, blocks=p.blocks)


def class_of(p: PairSetParameter) -> CartanClass:
    return classify_pairs(p.family, p.rank, p.pairs, p.blocks)


def length(p: PairSetParameter) -> Q:
    """Half the number of positive roots moved out of the positive system by
    theta, plus half the real rank of the associated Cartan subgroup."""
    system = _ambient_system(p.family, p.rank)
    th = theta(p)
    flips = sum(1 for a in system.positive_roots if not system.is_positive(th.apply(a)))
    r, m, s = signature_from_involution(system, th)
    return Q(flips, 2) + Q(m + s, 2)


def split_length(family: str, rank: Optional[int] = None) -> Q:
    system = _ambient_system(family, rank or 0)
    return Q(len(system.positive_roots) + system.rank, 2)


def contains(p1: PairSetParameter, p2: PairSetParameter) -> bool:
    """Whether p1's pair-and-block set contains p2's (same group and chi)."""
    if (p1.family, p1.rank, p1.chi) != (p2.family, p2.rank, p2.chi):
        return False
    return p2.elements() <= p1.elements()


def enumerate_block(family: str, rank: int, chi: int = 0) -> Tuple[PairSetParameter, ...]:
    """All parameters reachable from gamma(empty) by Cayley transforms (A/D)."""
    if family not in ("A", "D"):
        raise ScopeError("block enumeration is desk-scale only (families A and D)")
    system = _ambient_system(family, rank)
    n = system.dim
    start = make_parameter(family, system.rank, chi=chi)
    seen: Dict[Tuple[Pair, ...], PairSetParameter] = {start.pairs: start}
    frontier = [start]
    while frontier:
        nxt: List[PairSetParameter] = []
        for p in frontier:
            used = {abs(x) for q in p.pairs for x in q}
            singles = [
                q for q in p.pairs
                if sum(1 for r in p.pairs if (abs(r[0]), abs(r[1])) == (abs(q[0]), abs(q[1]))) == 1
            ]
            moves: List[Pair] = []
            for i in range(1, n + 1):
                if i in used:
                    continue
                for j in range(i + 1, n + 1):
                    if j in used or (i + j) % 2 == 0:
                        continue
                    moves.append((i, j))
                    if family == "D":
                        moves.append((-i, -j))
            if family == "D":
                for q in singles:
                    moves.append((-q[0], -q[1]))
            for mv in moves:
                try:
                    child = cayley(p, mv)
                except TransformError:
                    continue
                if child.pairs not in seen:
                    seen[child.pairs] = child
                    nxt.append(child)
        frontier = nxt
    return tuple(sorted(seen.values(), key=lambda p: (len(p.pairs), p.pairs)))


def orbit_representatives(
    family: str, rank: Optional[int] = None, chi: int = 0
) -> Tuple[Tuple[CartanClass, PairSetParameter], ...]:
    """One parameter per cross-action orbit, indexed by its Cartan class."""
    system = _ambient_system(family, rank or 0)
    lie_rank = system.rank
    out = []
    for c in cartan_classes(family, None if family.startswith("E") else lie_rank):
        blocks, pairs = class_rep_data(c)
        out.append((c, make_parameter(family, lie_rank, chi=chi, blocks=blocks, pairs=pairs)))
    return tuple(out)


# ---------------------------------------------------------------------------
# The distinguished subsets R_D of the integral simple roots, and their towers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RDSubset:
    """A subset S in R_D with the pair added by each of its simple roots."""

    simple_indices: Tuple[int, ...]   # 1-based indices among the alphas
    pair_images: Tuple[Pair, ...]     # parallel to simple_indices

    def image_pairs(self, members: Sequence[int]) -> Tuple[Pair, ...]:
        lookup = dict(zip(self.simple_indices, self.pair_images))
        return tuple(lookup[i] for i in members)


def rd_subsets(family: str, rank: Optional[int] = None) -> Tuple[RDSubset, ...]:
    """The sets S (including the empty set) defining the lifted parameters."""
    empty = RDSubset((), ())
    if family in ("E6", "E8"):
        return (empty,)
    if family == "E7":
        return (empty, RDSubset((1, 3, 7), ((-1, -2), (3, 4), (5, 6))))
    system = _ambient_system(family, rank or 0)
    if family == "A":
        n = system.rank + 1
        if n % 2 == 1:
            return (empty,)
        p = n // 2
        return (
            empty,
            RDSubset(
                tuple(2 * k + 1 for k in range(p)),
                tuple((2 * k + 1, 2 * k + 2) for k in range(p)),
            ),
        )
    if family == "D":
        n = system.rank
        p = n // 2
        short = RDSubset(
            (n - 1, n),
            ((2 * p - 1, 2 * p), (-(2 * p - 1), -2 * p)),
        )
        if n % 2 == 1:
            return (empty, short)
        long_plus = RDSubset(
            tuple(2 * k + 1 for k in range(p)),
            tuple((2 * k + 1, 2 * k + 2) for k in range(p)),
        )
        long_minus = RDSubset(
            tuple(2 * k + 1 for k in range(p - 1)) + (2 * p,),
            tuple((2 * k + 1, 2 * k + 2) for k in range(p - 1)) + ((-(2 * p - 1), -2 * p),),
        )
        return (empty, short, long_plus, long_minus)
    raise ScopeError("unknown family %r" % (family,))


def tower_parameter(
    family: str, rank: Optional[int], chi: int, subset: RDSubset, members: Sequence[int]
) -> PairSetParameter:
    """The parameter c_{S'}(gamma(empty)) for S' = members inside subset."""
    system = _ambient_system(family, rank or 0)
    return make_parameter(
        family, system.rank, chi=chi, pairs=subset.image_pairs(members)
    )


def pi_RD(family: str, rank: Optional[int] = None, chi: int = 0) -> Tuple[PairSetParameter, ...]:
    """The full-level parameters J(c_S(gamma(empty))) for S in R_D, fixed chi."""
    out = []
    for subset in rd_subsets(family, rank):
        out.append(tower_parameter(family, rank, chi, subset, subset.simple_indices))
    return tuple(out)


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def parameter_to_json(p: PairSetParameter) -> dict:
    return {
        "schema": "cayley-lift/1",
        "family": p.family,
        "rank": p.rank,
        "central_char": p.chi,
        "blocks": [list(b) for b in p.blocks],
        "pairs": [list(q) for q in p.pairs],
    }


def parameter_from_json(data: dict) -> PairSetParameter:
    return make_parameter(
        data["family"],
        data["rank"] if data["family"] in ("A", "D") else int(data["family"][1]),
        chi=data.get("central_char", 0),
        blocks=[tuple(b) for b in data.get("blocks", ())],
        pairs=[tuple(q) for q in data.get("pairs", ())],
    )


def parameter_json_text(p: PairSetParameter) -> str:
    return json.dumps(parameter_to_json(p), sort_keys=True, indent=2)
