"""The iterated wreath product [C_2]^n as depth-n binary tree automorphisms.

An element is a portrait: one swap bit per internal node (2^n - 1 of
them, heap order: node 1 is the root, node h has children 2h, 2h+1).
The bit at node v says whether the two subtrees below v are swapped
after the subtrees themselves have been rearranged. Composition acts
on the left: (a * b) means "apply b, then a", giving the portrait rule

    (a * b)_v = b_v xor a_{b(v)}

where b(v) is the node v lands on under b.

For bulk work (closures, subgroup generation) elements are converted
to permutations of the 2^n leaves, where composition is a single tuple
gather; portraits remain the canonical public form.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import InvariantFailure, ResourceLimitError

# Depth 4 already has |G| = 2^15 = 32768 elements; depth 5 would be
# 2^31 and is out of desk range for explicit closures.
DEPTH_CAP = 4


@dataclass(frozen=True)
class TreeAutomorphism:
    """Portrait of an automorphism of the depth-n binary tree."""

    depth: int
    bits: tuple[int, ...]

    def __post_init__(self):
        if self.depth < 1:
            raise ValueError("depth must be >= 1")
        if len(self.bits) != 2**self.depth - 1:
            raise ValueError("portrait must have one bit per internal node")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("portrait bits must be 0 or 1")

    def bit_at(self, node: int) -> int:
        """Swap bit at 1-based heap node index."""
        return self.bits[node - 1]


def identity(depth: int) -> TreeAutomorphism:
    return TreeAutomorphism(depth, (0,) * (2**depth - 1))


def node_image(a: TreeAutomorphism, node: int) -> int:
    """Image of 1-based heap node index under a.

    Portrait bits live on the original tree: the bit at each node of
    the walked-down (original) path flips the corresponding output
    step, while the walk itself follows the original steps.
    """
    if node < 1 or node >= 2 ** (a.depth + 1):
        raise ValueError("node index out of range")
    path = []
    h = node
    while h > 1:
        path.append(h & 1)
        h >>= 1
    orig = 1
    image = 1
    for step in reversed(path):
        out = step ^ a.bits[orig - 1]
        orig = 2 * orig + step
        image = 2 * image + out
    return image


def compose(a: TreeAutomorphism, b: TreeAutomorphism) -> TreeAutomorphism:
    """a * b: apply b first, then a."""
    if a.depth != b.depth:
        raise ValueError("depth mismatch")
    n_internal = 2**a.depth - 1
    bits = []
    for v in range(1, n_internal + 1):
        bits.append(b.bits[v - 1] ^ a.bits[node_image(b, v) - 1])
    return TreeAutomorphism(a.depth, tuple(bits))


def leaf_permutation(a: TreeAutomorphism) -> tuple[int, ...]:
    """Action of a on the 2^depth leaves, as a permutation tuple."""
    n = a.depth
    leaves = 1 << n
    perm = []
    for leaf in range(leaves):
        orig = 1
        out = 0
        for level in range(n - 1, -1, -1):
            step = leaf >> level & 1
            out = (out << 1) | (step ^ a.bits[orig - 1])
            orig = 2 * orig + step
        perm.append(out)
    return tuple(perm)


def from_leaf_permutation(perm: tuple[int, ...], depth: int) -> TreeAutomorphism:
    """Portrait of the automorphism with the given leaf action."""
    leaves = 1 << depth
    if len(perm) != leaves:
        raise ValueError("permutation length must be 2^depth")
    if sorted(perm) != list(range(leaves)):
        raise ValueError("not a permutation of the leaves")
    bits = [0] * (leaves - 1)

    def fill(node: int, block: list[int]):
        size = len(block)
        if size == 1:
            return
        half = size // 2
        # A tree automorphism sends each half-block onto a half of the
        # image range; which half tells us the swap bit.
        base = min(block)
        lo = [b - base for b in block[:half]]
        hi = [b - base for b in block[half:]]
        swap = lo[0] >= half
        bits[node - 1] = 1 if swap else 0
        if swap:
            lo = [b - half for b in lo]
        else:
            hi = [b - half for b in hi]
        fill(2 * node, lo)
        fill(2 * node + 1, hi)

    fill(1, list(perm))
    out = TreeAutomorphism(depth, tuple(bits))
    if leaf_permutation(out) != tuple(perm):
        raise ValueError("permutation does not respect the tree structure")
    return out


def minimal_generators(depth: int) -> list[TreeAutomorphism]:
    """The standard n generators: a_k swaps at the node 0^(k-1) below the root.

    a_1 is the root swap; a_k sits at the end of the leftmost path of
    length k-1 (heap node 2^(k-1)).
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    if depth > DEPTH_CAP:
        raise ResourceLimitError(f"depth capped at {DEPTH_CAP}")
    gens = []
    size = 2**depth - 1
    for k in range(1, depth + 1):
        bits = [0] * size
        bits[2 ** (k - 1) - 1] = 1
        gens.append(TreeAutomorphism(depth, tuple(bits)))
    return gens


def _compose_perm(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Permutation of 'apply q, then p'."""
    return tuple(p[x] for x in q)


def _invert_perm(p: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def _closure_perms(gens: list[tuple[int, ...]], leaves: int) -> set[tuple[int, ...]]:
    ident = tuple(range(leaves))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = _compose_perm(g, p)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen


def closure_order(generators: list[TreeAutomorphism]) -> int:
    """Order of the subgroup generated by the given automorphisms."""
    if not generators:
        raise ValueError("need at least one generator")
    depth = generators[0].depth
    if any(g.depth != depth for g in generators):
        raise ValueError("depth mismatch among generators")
    if depth > DEPTH_CAP:
        raise ResourceLimitError(f"depth capped at {DEPTH_CAP}")
    perms = [leaf_permutation(g) for g in generators]
    return len(_closure_perms(perms, 1 << depth))


@lru_cache(maxsize=DEPTH_CAP)
def _full_group(depth: int) -> frozenset[tuple[int, ...]]:
    gens = [leaf_permutation(g) for g in minimal_generators(depth)]
    group = _closure_perms(gens, 1 << depth)
    if len(group) != 2 ** (2**depth - 1):
        raise InvariantFailure(
            f"full group at depth {depth} has order {len(group)}"
        )
    return frozenset(group)


def _subgroup_closure(
    elements: set[tuple[int, ...]], leaves: int
) -> set[tuple[int, ...]]:
    """Subgroup generated by the elements, adopting generators incrementally.

    Finite group, so closure under composition suffices. Candidate
    generators already inside the partial subgroup are skipped; at most
    log2 of the final order are ever adopted, keeping the breadth-first
    passes small. Candidates are sorted for determinism.
    """
    ident = tuple(range(leaves))
    sub: set[tuple[int, ...]] = {ident}
    adopted: list[tuple[int, ...]] = []
    for cand in sorted(elements):
        if cand in sub:
            continue
        adopted.append(cand)
        sub = _closure_perms(adopted, leaves)
    return sub


@lru_cache(maxsize=DEPTH_CAP)
def _agemo_subgroup(depth: int) -> frozenset[tuple[int, ...]]:
    """V = subgroup generated by all squares plus generator commutators.

    Squares of every element already generate a subgroup containing
    the whole commutator subgroup (the quotient by it has exponent 2,
    hence is abelian); commutators of the minimal generators against
    every element are thrown in anyway, cheaply keeping the definition
    V = G^2 [G, G] recognizable.
    """
    group = _full_group(depth)
    leaves = 1 << depth
    seeds = {_compose_perm(p, p) for p in group}
    gen_perms = [leaf_permutation(x) for x in minimal_generators(depth)]
    gen_invs = [_invert_perm(g) for g in gen_perms]
    for h in group:
        h_inv = _invert_perm(h)
        for g, g_inv in zip(gen_perms, gen_invs):
            seeds.add(
                _compose_perm(_compose_perm(g, h), _compose_perm(g_inv, h_inv))
            )
    return frozenset(_subgroup_closure(seeds, leaves))


def agemo_rank(depth: int) -> int:
    """Rank d of G / (G^2 [G,G]) as an F_2 vector space; equals the depth.

    G^2 [G,G] is the Frattini subgroup here, so d is also the size of
    every minimal generating set.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    if depth > DEPTH_CAP:
        raise ResourceLimitError(f"depth capped at {DEPTH_CAP}")
    group_order = 2 ** (2**depth - 1)
    v_order = len(_agemo_subgroup(depth))
    quotient = group_order // v_order
    if v_order * quotient != group_order or quotient & (quotient - 1):
        raise InvariantFailure("quotient by the agemo subgroup is not a 2-power")
    d = quotient.bit_length() - 1
    if d != depth:
        raise InvariantFailure(
            f"agemo rank {d} disagrees with the depth {depth}"
        )
    return d


def _index2_subgroup_count_exhaustive(depth: int) -> int:
    """Count index-2 subgroups by brute force (depth <= 2 only)."""
    group = sorted(_full_group(depth))
    half = len(group) // 2
    ident = tuple(range(1 << depth))
    count = 0
    rest = [p for p in group if p != ident]
    for combo in combinations(rest, half - 1):
        subset = {ident, *combo}
        if all(_compose_perm(a, b) in subset for a in subset for b in subset):
            count += 1
    return count


def count_index2_subgroups(depth: int) -> int:
    """Number of index-2 subgroups of [C_2]^depth: 2^d - 1 with d = depth.

    Index-2 subgroups are kernels of surjections onto C_2, which all
    factor through G / G^2[G,G]; they biject with the nonzero linear
    functionals on that d-dimensional F_2 space. For depth <= 2 the
    count is verified against exhaustive enumeration.
    """
    d = agemo_rank(depth)
    count = 2**d - 1
    if depth <= 2:
        brute = _index2_subgroup_count_exhaustive(depth)
        if brute != count:
            raise InvariantFailure(
                f"exhaustive count {brute} disagrees with 2^{d} - 1"
            )
    return count
