"""Finite groups as indexed element tables, plus coset enumeration.

Elements of a group are dense indices ``0 .. order-1``.  Groups up to
:data:`TABLE_LIMIT` elements carry a full multiplication table (O(1) products);
larger groups multiply through a family rule (permutation composition or
normal-form rewriting) supplied by their constructor.

Permutation products use the function-composition convention: ``p * q``
applies ``q`` first, then ``p``.  With right cosets ``<s>x = {s^j x}`` this
reproduces the usual printed coset listings for symmetric groups.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations as _iter_permutations
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from .errors import (
    ClosureOverflowError,
    InvalidParameterError,
    NotAGeneratingSetError,
    SizeLimitError,
)

TABLE_LIMIT = 1024
CLOSURE_LIMIT = 10_000
_ASSOC_EXHAUSTIVE_LIMIT = 64
_ASSOC_SAMPLES = 10_000


class GroupTable:
    """A finite group on element indices ``0..order-1``.

    ``mul`` is total, ``identity`` is the index of the neutral element and
    ``labels`` gives a distinct display string per element.  Instances are
    immutable after construction and safe to share between threads.
    """

    __slots__ = (
        "order",
        "identity",
        "labels",
        "family_tag",
        "designated",
        "_table",
        "_mul_fn",
        "_inv",
        "_label_index",
        "_order_cache",
    )

    def __init__(
        self,
        order: int,
        *,
        table: Optional[np.ndarray] = None,
        mul_fn: Optional[Callable[[int, int], int]] = None,
        inv: Optional[Sequence[int]] = None,
        identity: int = 0,
        labels: Sequence[str],
        family_tag: Optional[str] = None,
        designated: Optional[dict[str, int]] = None,
        check: bool = True,
    ):
        if order < 1:
            raise InvalidParameterError("group order must be >= 1")
        if table is None and mul_fn is None:
            raise InvalidParameterError("need a multiplication table or rule")
        self.order = order
        self.identity = identity
        self.labels = tuple(labels)
        self.family_tag = family_tag
        self.designated = dict(designated or {})
        self._table = table
        self._mul_fn = mul_fn
        self._label_index = {lab: i for i, lab in enumerate(self.labels)}
        self._order_cache: dict[int, int] = {}
        if inv is not None:
            self._inv = tuple(inv)
        else:
            self._inv = self._solve_inverses()
        if check:
            self._validate()

    # -- core operations ---------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        if self._table is not None:
            return int(self._table[a, b])
        return self._mul_fn(a, b)

    def inv(self, a: int) -> int:
        return self._inv[a]

    def power(self, x: int, k: int) -> int:
        if k < 0:
            return self.power(self.inv(x), -k)
        acc = self.identity
        for _ in range(k):
            acc = self.mul(acc, x)
        return acc

    def index_of_label(self, label: str) -> int:
        return self._label_index[label]

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        tag = self.family_tag or "group"
        return f"GroupTable({tag}, order={self.order})"

    # -- validation --------------------------------------------------------

    def _solve_inverses(self) -> tuple[int, ...]:
        # O(n^2) scan; only used for table-backed groups. Rule-backed
        # constructors pass inverses explicitly.
        if self._table is None:
            raise InvalidParameterError("rule-backed groups must supply inverses")
        e = self.identity
        out = [-1] * self.order
        for a in range(self.order):
            row = self._table[a]
            hits = np.nonzero(row == e)[0]
            if len(hits) != 1:
                raise InvalidParameterError(f"element {a} lacks a unique inverse")
            out[a] = int(hits[0])
        return tuple(out)

    def _validate(self) -> None:
        n = self.order
        e = self.identity
        if len(self.labels) != n:
            raise InvalidParameterError("label count must equal group order")
        if len(set(self.labels)) != n:
            raise InvalidParameterError("labels must be pairwise distinct")
        for x in range(n):
            if self.mul(e, x) != x or self.mul(x, e) != x:
                raise InvalidParameterError(f"identity law fails at element {x}")
            if self.mul(x, self.inv(x)) != e or self.mul(self.inv(x), x) != e:
                raise InvalidParameterError(f"inverse law fails at element {x}")
        # Associativity: exhaustive for small groups, sampled otherwise.
        if n <= _ASSOC_EXHAUSTIVE_LIMIT:
            triples = (
                (a, b, c) for a in range(n) for b in range(n) for c in range(n)
            )
        else:
            rng = random.Random(0)
            triples = (
                (rng.randrange(n), rng.randrange(n), rng.randrange(n))
                for _ in range(_ASSOC_SAMPLES)
            )
        for a, b, c in triples:
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                raise InvalidParameterError(f"associativity fails at {(a, b, c)}")


@dataclass(frozen=True)
class GenSequence:
    """An ordered generating sequence; repeats are allowed.

    ``positions[i]`` is an element index and ``orders[i]`` its cached order.
    Each position labels one partition class of the coset graph, so the same
    element may legitimately appear twice.
    """

    positions: tuple[int, ...]
    orders: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.positions)


@dataclass(frozen=True)
class Coset:
    """A right coset ``<s>x`` of a cyclic subgroup, as sorted element indices."""

    gen_position: int
    elements: tuple[int, ...]

    @property
    def rep(self) -> int:
        return self.elements[0]


# ---------------------------------------------------------------------------
# permutation helpers (images tuples, 0-based ground set)
# ---------------------------------------------------------------------------


def compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """p * q: apply q first, then p."""
    return tuple(p[q[i]] for i in range(len(p)))


def invert(p: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, img in enumerate(p):
        out[img] = i
    return tuple(out)


def parity(p: tuple[int, ...]) -> int:
    """0 for even permutations, 1 for odd."""
    seen = [False] * len(p)
    odd = 0
    for i in range(len(p)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        odd ^= (length - 1) & 1
    return odd


def cycle_notation(p: tuple[int, ...]) -> str:
    """Format as 1-based disjoint cycles, fixed points omitted; identity is 'e'."""
    seen = [False] * len(p)
    parts = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j + 1)
            j = p[j]
        parts.append("(" + "".join(str(v) for v in cyc) + ")")
    return "".join(parts) if parts else "e"


def parse_cycles(text: str, n: Optional[int] = None) -> tuple[int, ...]:
    """Parse cycle notation like ``(12)(34)`` or ``(1 2)`` into an images tuple.

    Points are 1-based in the text.  When ``n`` is None the ground set is the
    largest point mentioned.  ``e`` and ``()`` denote the identity.
    """
    text = text.strip()
    if text in ("e", "()", "(e)", ""):
        return tuple(range(n)) if n else (0,)
    if text[0] != "(" or text[-1] != ")":
        raise InvalidParameterError(f"not cycle notation: {text!r}")
    cycles: list[list[int]] = []
    for chunk in text[1:-1].split(")("):
        pts = []
        cleaned = chunk.replace(",", " ")
        if " " in cleaned.strip():
            tokens = cleaned.split()
        else:
            tokens = list(cleaned.strip())
        for tok in tokens:
            if not tok.isdigit():
                raise InvalidParameterError(f"bad cycle point {tok!r} in {text!r}")
            pts.append(int(tok))
        if len(pts) < 2:
            raise InvalidParameterError(f"cycle too short in {text!r}")
        if len(set(pts)) != len(pts):
            raise InvalidParameterError(f"repeated point in {text!r}")
        cycles.append(pts)
    top = max(max(c) for c in cycles)
    if n is None:
        n = top
    elif top > n:
        raise InvalidParameterError(f"point {top} exceeds ground set size {n}")
    images = list(range(n))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            images[a - 1] = b - 1
    return tuple(images)


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def _group_from_permutations(
    perms: list[tuple[int, ...]],
    family_tag: Optional[str],
    designated: Optional[dict[str, int]] = None,
) -> GroupTable:
    """Assemble a GroupTable from a closed, sorted list of permutations."""
    index = {p: i for i, p in enumerate(perms)}
    n = len(perms)
    labels = [cycle_notation(p) for p in perms]
    identity = index[tuple(range(len(perms[0])))]
    inv = [index[invert(p)] for p in perms]
    if n <= TABLE_LIMIT:
        table = np.empty((n, n), dtype=np.int32)
        for i, p in enumerate(perms):
            row = table[i]
            for j, q in enumerate(perms):
                row[j] = index[compose(p, q)]
        return GroupTable(
            n, table=table, inv=inv, identity=identity, labels=labels,
            family_tag=family_tag, designated=designated,
        )

    def mul_fn(a: int, b: int) -> int:
        return index[compose(perms[a], perms[b])]

    return GroupTable(
        n, mul_fn=mul_fn, inv=inv, identity=identity, labels=labels,
        family_tag=family_tag, designated=designated,
    )


def make_cyclic(n: int) -> GroupTable:
    """Z_n under addition mod n; element i is labelled str(i)."""
    if n < 1:
        raise InvalidParameterError("cyclic group order must be >= 1")
    table = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    inv = [(-i) % n for i in range(n)]
    return GroupTable(
        n, table=table.astype(np.int32), inv=inv, identity=0,
        labels=[str(i) for i in range(n)], family_tag=f"Z{n}",
    )


def make_trivial() -> GroupTable:
    return GroupTable(
        1, table=np.zeros((1, 1), dtype=np.int32), inv=[0], identity=0,
        labels=["e"], family_tag="Z1", designated={"e": 0},
    )


def make_klein() -> GroupTable:
    """The Klein four-group; mul is XOR on two bits, labels e,a,b,ab."""
    table = np.array([[i ^ j for j in range(4)] for i in range(4)], dtype=np.int32)
    return GroupTable(
        4, table=table, inv=[0, 1, 2, 3], identity=0,
        labels=["e", "a", "b", "ab"], family_tag="V4",
        designated={"a": 1, "b": 2, "ab": 3},
    )


def make_direct_product(g: GroupTable, h: GroupTable) -> GroupTable:
    """Componentwise product; element (x, y) has index x*|h| + y."""
    n, m = g.order, h.order
    total = n * m
    if total > CLOSURE_LIMIT:
        raise SizeLimitError(f"product order {total} exceeds {CLOSURE_LIMIT}")
    labels = [
        f"({g.labels[x]},{h.labels[y]})" for x in range(n) for y in range(m)
    ]
    inv = [g.inv(x) * m + h.inv(y) for x in range(n) for y in range(m)]
    identity = g.identity * m + h.identity
    tag = None
    if g.family_tag and h.family_tag:
        tag = f"{g.family_tag}x{h.family_tag}"
    if total <= TABLE_LIMIT:
        table = np.empty((total, total), dtype=np.int32)
        for a in range(total):
            xa, ya = divmod(a, m)
            for b in range(total):
                xb, yb = divmod(b, m)
                table[a, b] = g.mul(xa, xb) * m + h.mul(ya, yb)
        return GroupTable(
            total, table=table, inv=inv, identity=identity, labels=labels,
            family_tag=tag,
        )

    def mul_fn(a: int, b: int) -> int:
        xa, ya = divmod(a, m)
        xb, yb = divmod(b, m)
        return g.mul(xa, xb) * m + h.mul(ya, yb)

    return GroupTable(
        total, mul_fn=mul_fn, inv=inv, identity=identity, labels=labels,
        family_tag=tag,
    )


def make_symmetric(n: int) -> GroupTable:
    """S_n on {1..n} with cycle-notation labels; bounded at n <= 8."""
    if not 1 <= n <= 8:
        raise SizeLimitError("symmetric group supported for 1 <= n <= 8")
    perms = [tuple(p) for p in _iter_permutations(range(n))]
    return _group_from_permutations(perms, family_tag=f"S{n}")


def make_alternating(n: int) -> GroupTable:
    """A_n, the even permutations of {1..n}; bounded at n <= 8."""
    if not 1 <= n <= 8:
        raise SizeLimitError("alternating group supported for 1 <= n <= 8")
    perms = [tuple(p) for p in _iter_permutations(range(n)) if parity(tuple(p)) == 0]
    return _group_from_permutations(perms, family_tag=f"A{n}")


def _normal_form_group(
    na: int,
    rule: Callable[[int, int, int, int], tuple[int, int]],
    inv_rule: Callable[[int, int], tuple[int, int]],
    gen_a_label: str,
    gen_b_label: str,
    family_tag: str,
) -> GroupTable:
    """Group on normal forms a^i b^j (0 <= i < na, j in {0,1}).

    Index = i + na*j.  ``rule`` multiplies two normal forms, ``inv_rule``
    inverts one.
    """
    total = 2 * na
    if total > CLOSURE_LIMIT:
        raise SizeLimitError(f"group order {total} exceeds {CLOSURE_LIMIT}")

    def label(i: int, j: int) -> str:
        ai = "" if i == 0 else (gen_a_label if i == 1 else f"{gen_a_label}{i}")
        bj = "" if j == 0 else gen_b_label
        return (ai + bj) or "e"

    labels = [label(i, j) for j in (0, 1) for i in range(na)]
    inv = []
    for j in (0, 1):
        for i in range(na):
            i2, j2 = inv_rule(i, j)
            inv.append(i2 + na * j2)
    designated = {gen_a_label: 1, gen_b_label: na}

    def mul_fn(x: int, y: int) -> int:
        i1, j1 = x % na, x // na
        i2, j2 = y % na, y // na
        i3, j3 = rule(i1, j1, i2, j2)
        return i3 + na * j3

    if total <= TABLE_LIMIT:
        table = np.empty((total, total), dtype=np.int32)
        for x in range(total):
            for y in range(total):
                table[x, y] = mul_fn(x, y)
        return GroupTable(
            total, table=table, inv=inv, identity=0, labels=labels,
            family_tag=family_tag, designated=designated,
        )
    return GroupTable(
        total, mul_fn=mul_fn, inv=inv, identity=0, labels=labels,
        family_tag=family_tag, designated=designated,
    )


def make_dihedral(n: int) -> GroupTable:
    """D_2n = <r, s | r^n = s^2 = e, s r s = r^-1>, order 2n.

    Designated generators: ``r`` (order n), ``s`` (order 2) and the second
    reflection ``t`` = r*s used by the two-reflection generating set.
    """
    if n < 2:
        raise InvalidParameterError("dihedral parameter must be >= 2")

    def rule(i1, j1, i2, j2):
        if j1 == 0:
            return (i1 + i2) % n, j2
        return (i1 - i2) % n, (j1 + j2) % 2

    def inv_rule(i, j):
        return (i if j else (-i) % n), j

    g = _normal_form_group(n, rule, inv_rule, "r", "s", f"D{2 * n}")
    g.designated["t"] = g.mul(g.designated["r"], g.designated["s"])
    return g


def make_generalized_quaternion(n: int) -> GroupTable:
    """Order-4n group <a, b | a^2n = e, b^2 = a^n, a b = b a^(2n-1)>."""
    if n < 2:
        raise InvalidParameterError("generalized quaternion parameter must be >= 2")
    m = 2 * n

    def rule(i1, j1, i2, j2):
        if j1 == 0:
            return (i1 + i2) % m, j2
        # b a^i = a^-i b, and b^2 = a^n
        i = (i1 - i2) % m
        if j2 == 0:
            return i, 1
        return (i + n) % m, 0

    def inv_rule(i, j):
        if j == 0:
            return (-i) % m, 0
        return (i + n) % m, 1

    return _normal_form_group(m, rule, inv_rule, "a", "b", f"Q{4 * n}")


def make_semidihedral(k: int) -> GroupTable:
    """Order-8k group <a, b | a^4k = b^2 = e, b a = a^(2k-1) b>."""
    if k < 1:
        raise InvalidParameterError("semidihedral parameter must be >= 1")
    m = 4 * k
    twist = 2 * k - 1

    def rule(i1, j1, i2, j2):
        if j1 == 0:
            return (i1 + i2) % m, j2
        return (i1 + twist * i2) % m, (j1 + j2) % 2

    # (a^i b)^-1 = a^(-twist*i) b since twist^2 = 1 mod 4k
    def inv_rule(i, j):
        if j == 0:
            return (-i) % m, 0
        return (-twist * i) % m, 1

    return _normal_form_group(m, rule, inv_rule, "a", "b", f"SD{8 * k}")


def closure_from_permutations(
    gens: Iterable[tuple[int, ...] | str],
    family_tag: Optional[str] = None,
) -> GroupTable:
    """Close a set of permutations under composition (BFS, capped).

    Accepts images tuples or cycle-notation strings; all generators must act
    on the same ground set (inferred as the largest point mentioned when
    strings are given).
    """
    raw = list(gens)
    if not raw:
        raise InvalidParameterError("need at least one permutation")
    if any(isinstance(p, str) for p in raw):
        width = 1
        parsed = []
        for p in raw:
            img = parse_cycles(p) if isinstance(p, str) else tuple(p)
            parsed.append(img)
            width = max(width, len(img))
        raw = [tuple(img) + tuple(range(len(img), width)) for img in parsed]
    width = len(raw[0])
    if any(len(p) != width for p in raw):
        raise InvalidParameterError("permutations act on different ground sets")
    seen = {tuple(range(width))}
    frontier = [tuple(range(width))]
    gens_t = [tuple(p) for p in raw]
    while frontier:
        nxt = []
        for p in frontier:
            for q in gens_t:
                r = compose(q, p)
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
                    if len(seen) > CLOSURE_LIMIT:
                        raise ClosureOverflowError(
                            f"closure exceeds {CLOSURE_LIMIT} elements"
                        )
        frontier = nxt
    perms = sorted(seen)
    return _group_from_permutations(perms, family_tag=family_tag)


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------


def element_order(g: GroupTable, x: int) -> int:
    """Smallest t >= 1 with x^t = identity."""
    cached = g._order_cache.get(x)
    if cached is not None:
        return cached
    acc = x
    t = 1
    while acc != g.identity:
        acc = g.mul(acc, x)
        t += 1
    assert g.order % t == 0, "element order must divide the group order"
    g._order_cache[x] = t
    return t


def make_gen_sequence(g: GroupTable, elements: Sequence[int]) -> GenSequence:
    """Validate that ``elements`` generate ``g`` and cache their orders.

    Raises NotAGeneratingSetError when the closure of the elements and their
    inverses is a proper subgroup.
    """
    positions = tuple(int(x) for x in elements)
    if len(positions) < 1:
        raise InvalidParameterError("generating sequence must be non-empty")
    for x in positions:
        if not 0 <= x < g.order:
            raise InvalidParameterError(f"element index {x} out of range")
    if len(subgroup_closure(g, positions)) != g.order:
        raise NotAGeneratingSetError(
            "elements do not generate the group: "
            + ", ".join(g.labels[x] for x in positions)
        )
    return GenSequence(positions, tuple(element_order(g, x) for x in positions))


def subgroup_closure(
    g: GroupTable, elements: Sequence[int], cap: Optional[int] = None
) -> list[int]:
    """Sorted element indices of the subgroup generated by ``elements``.

    The closure is naturally bounded by |G|; pass ``cap`` to fail early when
    a quadratic structure is about to be built from the result.
    """
    gens = set(elements) | {g.inv(x) for x in elements}
    seen = {g.identity}
    frontier = [g.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = g.mul(s, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if cap is not None and len(seen) > cap:
                        raise ClosureOverflowError(
                            f"subgroup closure exceeds {cap} elements"
                        )
        frontier = nxt
    return sorted(seen)


def subgroup_table(g: GroupTable, elements: Sequence[int]) -> tuple[GroupTable, dict[int, int]]:
    """GroupTable of the subgroup generated by ``elements``.

    Returns the subgroup (re-indexed densely) together with the map from
    parent element index to subgroup index.  Capped because the result
    carries a full multiplication table.
    """
    members = subgroup_closure(g, elements, cap=CLOSURE_LIMIT)
    to_sub = {x: i for i, x in enumerate(members)}
    n = len(members)
    table = np.empty((n, n), dtype=np.int32)
    for i, a in enumerate(members):
        for j, b in enumerate(members):
            table[i, j] = to_sub[g.mul(a, b)]
    sub = GroupTable(
        n,
        table=table,
        inv=[to_sub[g.inv(x)] for x in members],
        identity=to_sub[g.identity],
        labels=[g.labels[x] for x in members],
        family_tag=None,
    )
    return sub, to_sub


def right_cosets(g: GroupTable, s: int, gen_position: int = 0) -> list[Coset]:
    """All right cosets <s>x, ordered by their minimum element index.

    The cosets partition the group; there are exactly |G|/o(s) of them, each
    of size o(s).
    """
    o = element_order(g, s)
    powers = [g.identity]
    for _ in range(o - 1):
        powers.append(g.mul(powers[-1], s))
    seen = [False] * g.order
    out = []
    for x in range(g.order):
        if seen[x]:
            continue
        members = sorted(g.mul(p, x) for p in powers)
        for m in members:
            seen[m] = True
        out.append(Coset(gen_position, tuple(members)))
    return out


def conjugacy_classes(g: GroupTable) -> list[list[int]]:
    """Conjugacy classes, each sorted, ordered by their minimum element."""
    seen = [False] * g.order
    classes = []
    for x in range(g.order):
        if seen[x]:
            continue
        orbit = {g.mul(t, g.mul(x, g.inv(t))) for t in range(g.order)}
        for y in orbit:
            seen[y] = True
        classes.append(sorted(orbit))
    return classes
