"""Signed permutations: the Weyl group of type B_n, with the distinguished
elements and relative-Weyl-group tables used by the Galois sign computations.

Elements of W_n act on {+-1, ..., +-n} with w(-i) = -w(i).  The generators are
s_i = (i, i+1)(-i, -i-1) for i < n and s_n = (n, -n); note the sign flip sits
at the LAST index.  Lengths are computed by counting positive roots sent to
negative ones, which is manifestly independent of any one-line-notation
convention and is validated against breadth-first search in the tests.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import InputError
from .groups import Family, GroupSpec


class SignedPerm:
    """A signed permutation of {1..n}, stored as the images of 1..n."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        if sorted(abs(x) for x in images) != list(range(1, n + 1)):
            raise InputError("images must be a signed permutation of 1..n")
        self.images = images

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        if i > 0:
            return self.images[i - 1]
        return -self.images[-i - 1]

    def __mul__(self, other: "SignedPerm") -> "SignedPerm":
        """Composition: (self * other)(i) = self(other(i))."""
        if self.n != other.n:
            raise InputError("rank mismatch")
        return SignedPerm(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def inverse(self) -> "SignedPerm":
        img = [0] * self.n
        for i in range(1, self.n + 1):
            j = self.images[i - 1]
            if j > 0:
                img[j - 1] = i
            else:
                img[-j - 1] = -i
        return SignedPerm(img)

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))

    def order(self) -> int:
        w, k = self, 1
        while not w.is_identity():
            w, k = w * self, k + 1
        return k

    def __eq__(self, other) -> bool:
        return isinstance(other, SignedPerm) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"SignedPerm({list(self.images)})"


def identity(n: int) -> SignedPerm:
    return SignedPerm(range(1, n + 1))


def generator(n: int, i: int) -> SignedPerm:
    """The Coxeter generator s_i of W_n."""
    if not 1 <= i <= n:
        raise InputError("generator index out of range")
    img = list(range(1, n + 1))
    if i < n:
        img[i - 1], img[i] = img[i], img[i - 1]
    else:
        img[n - 1] = -n
    return SignedPerm(img)


def special_element(n: int, kind: str, m: int) -> SignedPerm:
    """t_m = (m, -m), and u_m = (m, -m)(n, -n) for m < n."""
    if kind == "t":
        if not 1 <= m <= n:
            raise InputError("t_m needs 1 <= m <= n")
        img = list(range(1, n + 1))
        img[m - 1] = -m
        return SignedPerm(img)
    if kind == "u":
        if not 1 <= m < n:
            raise InputError("u_m needs 1 <= m < n")
        img = list(range(1, n + 1))
        img[m - 1] = -m
        img[n - 1] = -n
        return SignedPerm(img)
    raise InputError("kind must be 't' or 'u'")


def length(w: SignedPerm) -> int:
    """Coxeter length: the number of positive roots sent to negative ones.

    Positive roots of B_n: e_i - e_j and e_i + e_j for i < j, and every e_i.
    A root c_a*e_a + c_b*e_b (indices a < b) is negative exactly when the
    coefficient of the smaller index is -1.
    """
    n = w.n
    count = 0
    for i in range(1, n + 1):
        if w(i) < 0:
            count += 1
        for j in range(i + 1, n + 1):
            for sj in (1, -1):
                # image of e_i + sj*e_j as {index: coefficient}
                a, b = w(i), sj * w(j)
                small = min(abs(a), abs(b))
                coeff = (1 if a > 0 else -1) if abs(a) == small else (1 if b > 0 else -1)
                if coeff < 0:
                    count += 1
    return count


def lengths_by_bfs(n: int) -> dict[SignedPerm, int]:
    """Word lengths of all of W_n by BFS on the Cayley graph (tests, n <= 4)."""
    gens = [generator(n, i) for i in range(1, n + 1)]
    start = identity(n)
    dist = {start: 0}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for s in gens:
            x = w * s
            if x not in dist:
                dist[x] = dist[w] + 1
                queue.append(x)
    return dist


@dataclass(frozen=True)
class SeriesDescriptor:
    """Shape of a Harish-Chandra series of an order-two torus-type character.

    m is the rank of the split central torus of the Levi (m = n exactly for
    principal series), a counts trivial torus-character components and b the
    order-two ones, with a + b = m.  For non-principal series the complement
    carries a cuspidal character on a positive-rank classical group, which
    forces m <= n - 2.
    """

    group: GroupSpec
    principal: bool
    m: int
    a: int
    b: int
    cuspidal_part_nontrivial: bool = False

    def __post_init__(self) -> None:
        if self.a < 0 or self.b < 0 or self.a + self.b != self.m:
            raise InputError("need a, b >= 0 with a + b = m")
        if self.principal:
            if self.m != self.group.n:
                raise InputError("principal series has m = n")
            if self.cuspidal_part_nontrivial:
                raise InputError("principal series has trivial cuspidal part")
        else:
            if self.m > self.group.n - 2:
                raise InputError("non-principal series needs m <= n - 2")
            if not self.cuspidal_part_nontrivial:
                raise InputError("non-principal series carries a cuspidal part")


@dataclass(frozen=True)
class RelativeWeylGroup:
    """The relative Weyl group W = R x| C of a series, as formal type data.

    Type tokens: "Bk" is a type-B_k factor, "Dk" its index-two reflection
    subgroup, and "B''k" the rank-(k-1) type-B subgroup of Dk generated by
    s_1..s_{k-2} and u_{k-1}.  Trivial factors are dropped.  The complement C
    has order 1 or 2; its generator is given as an element of the ambient W_n
    so that lengths are taken in the full group.
    """

    w_type: str
    r_type: str
    c_order: int
    c_generator: SignedPerm | None
    c_length_parity: str | None
    externally_sourced: bool = False

    def __post_init__(self) -> None:
        if self.c_order not in (1, 2):
            raise InputError("c_order must be 1 or 2")
        if self.c_order == 2:
            if self.c_generator is None or self.c_length_parity not in ("even", "odd"):
                raise InputError("order-two complement needs generator and parity")
        elif self.c_generator is not None or self.c_length_parity is not None:
            raise InputError("trivial complement carries no generator data")


def _type_string(factors: list[tuple[str, int]]) -> str:
    toks = []
    for letter, k in factors:
        if k <= 0:
            continue
        if letter == "D" and k == 1:
            continue  # D1 is trivial
        if letter == "B''" and k == 1:
            continue  # B''1 is trivial
        toks.append(f"{letter}{k}")
    return " x ".join(toks) if toks else "1"


def _parity(w: SignedPerm) -> str:
    return "even" if length(w) % 2 == 0 else "odd"


def relative_weyl(desc: SeriesDescriptor) -> RelativeWeylGroup:
    """Table of relative Weyl groups W(lambda) = R x| C for order-two data.

    The split/twisted even-orthogonal principal rows and the even-orthogonal
    non-principal row have complement generated by u_1 resp. u_m (even
    length); odd orthogonal groups have trivial complement; symplectic groups
    have complement generated by s_n (principal) or t_m (non-principal), of
    odd length.  That parity difference is the whole reason symplectic
    character fields can grow while orthogonal ones do not.
    """
    g = desc.group
    n, m, a, b = g.n, desc.m, desc.a, desc.b

    if g.family is Family.SO_EVEN:
        if n < 2:
            raise InputError("even orthogonal table needs n >= 2")
        if desc.principal:
            if b < 1:
                raise InputError("principal so-even row needs b >= 1")
            u1 = special_element(n, "u", 1)
            if g.twist == 1:
                return RelativeWeylGroup(
                    _type_string([("B", a), ("B", b)]),
                    _type_string([("D", a), ("D", b)]),
                    2, u1, _parity(u1),
                )
            return RelativeWeylGroup(
                _type_string([("B", a), ("B''", b)]),
                _type_string([("D", a), ("B''", b)]),
                2, u1, _parity(u1),
            )
        um = special_element(n, "u", m)
        return RelativeWeylGroup(
            _type_string([("B", a), ("B", b)]),
            _type_string([("B", a), ("D", b)]),
            2, um, _parity(um),
        )

    if g.family is Family.SO_ODD:
        return RelativeWeylGroup(
            _type_string([("B", a), ("B", b)]),
            _type_string([("B", a), ("B", b)]),
            1, None, None,
        )

    if g.family is Family.SP:
        if desc.principal:
            if b < 1:
                raise InputError(
                    "symplectic principal row needs b >= 1 "
                    "(the all-trivial character gives a unipotent series with trivial complement)"
                )
            sn = generator(n, n)
            return RelativeWeylGroup(
                _type_string([("B", a), ("B", b)]),
                _type_string([("B", a), ("D", b)]),
                2, sn, _parity(sn),
            )
        # Non-principal symplectic row: complement of order two generated by
        # t_m.  Imported from the standard normaliser structure rather than
        # derived in this package; flagged so consumers can tell.
        tm = special_element(n, "t", m)
        return RelativeWeylGroup(
            _type_string([("B", a), ("B", b)]),
            _type_string([("B", a), ("D", b)]),
            2, tm, _parity(tm),
            externally_sourced=True,
        )

    raise InputError("no relative Weyl table for this family")
