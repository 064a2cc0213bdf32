"""Independent brute-force verification over prime fields.

This module knows no character theory and no closed-form criteria: it builds
the classical groups as explicit matrix groups preserving the standard
bilinear forms, constructs unipotent representatives of a given Jordan type,
and decides conjugacy questions by raw search (lexicographic enumeration of
an intertwiner space, falling back to a conjugation-orbit walk when the
coefficient space is too large for the budget).  The closed-form modules are
tested against it, never the other way around.

Matrices are tuples of tuples of residues mod p; the oracle works over prime
fields only.
"""

from __future__ import annotations

import os
from collections import deque
from functools import lru_cache
from math import gcd

import numpy as np

from .errors import BudgetExceededError, InputError
from .groups import Family, GroupSpec, factor_prime_power
from .partitions import EpsPartition, Partition

Matrix = tuple[tuple[int, ...], ...]

DEFAULT_BUDGET = 10_000_000


def _budget(value: int | None) -> int:
    if value is not None:
        return value
    return int(os.environ.get("CHARFIELD_BUDGET", DEFAULT_BUDGET))


# ---------------------------------------------------------------------------
# prime-field matrix toolkit


def mat(rows) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a: Matrix, b: Matrix, p: int) -> Matrix:
    n, m, k = len(a), len(b[0]), len(b)
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(ra[t] * cb[t] for t in range(k)) % p for cb in bt) for ra in a
    )


def mat_pow(a: Matrix, e: int, p: int) -> Matrix:
    result = identity_matrix(len(a))
    base = a
    while e:
        if e & 1:
            result = mat_mul(result, base, p)
        base = mat_mul(base, base, p)
        e >>= 1
    return result


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def mat_sub(a: Matrix, b: Matrix, p: int) -> Matrix:
    return tuple(
        tuple((x - y) % p for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


def _rref(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form in place; returns (rows, pivot columns)."""
    nrows, ncols = len(rows), len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if rows[i][c] % p), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rank(a: Matrix, p: int) -> int:
    rows = [list(r) for r in a]
    _, pivots = _rref(rows, p)
    return len(pivots)


def det(a: Matrix, p: int) -> int:
    n = len(a)
    rows = [list(r) for r in a]
    d = 1
    for c in range(n):
        pivot = next((i for i in range(c, n) if rows[i][c] % p), None)
        if pivot is None:
            return 0
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            d = -d
        d = d * rows[c][c] % p
        inv = pow(rows[c][c], -1, p)
        for i in range(c + 1, n):
            if rows[i][c]:
                f = rows[i][c] * inv % p
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[c])]
    return d % p


def mat_inv(a: Matrix, p: int) -> Matrix:
    n = len(a)
    rows = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(a)]
    rows, pivots = _rref(rows, p)
    if pivots != list(range(n)):
        raise InputError("matrix is singular")
    return tuple(tuple(row[n:]) for row in rows)


def nullspace(a: list[list[int]], p: int) -> list[tuple[int, ...]]:
    """Canonical basis of the kernel of the matrix (rows = equations)."""
    ncols = len(a[0]) if a else 0
    rows = [list(r) for r in a]
    rows, pivots = _rref(rows, p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-rows[r][fc]) % p
        basis.append(tuple(v))
    return basis


# ---------------------------------------------------------------------------
# standard forms and isometries


def _basis_indices(g: GroupSpec) -> list[int]:
    n = g.n
    if g.family is Family.SO_ODD:
        return list(range(1, n + 1)) + [0] + list(range(-n, 0))
    return list(range(1, n + 1)) + list(range(-n, 0))


def form_matrix(g: GroupSpec) -> Matrix:
    """Gram matrix of the standard form on the ordered basis: the pairing of
    v_i with v_{-i} is sgn(i)^eps, all other pairs vanish."""
    idx = _basis_indices(g)
    pos = {i: t for t, i in enumerate(idx)}
    eps = g.form_eps
    N = len(idx)
    J = [[0] * N for _ in range(N)]
    for i in idx:
        sgn = 1 if i >= 0 else -1
        J[pos[i]][pos[-i]] = sgn**eps % g.p
    return mat(J)


def is_isometry(m: Matrix, form: Matrix, p: int, special: bool = False) -> bool:
    """Does m preserve the form (with det 1 when special is set)?"""
    if len(m) != len(form):
        raise InputError("dimension mismatch")
    if mat_mul(mat_mul(transpose(m), form, p), m, p) != tuple(
        tuple(x % p for x in row) for row in form
    ):
        return False
    return not special or det(m, p) == 1


# ---------------------------------------------------------------------------
# unipotent representatives


def _jordan_block(m: int, p: int) -> Matrix:
    return tuple(
        tuple(1 if i == j else (1 if j == i + 1 else 0) for j in range(m)) for i in range(m)
    )


def _invariant_form(u: Matrix, p: int, symmetric: bool) -> Matrix:
    """A nondegenerate u-invariant symmetric or alternating form, found by
    solving the linear conditions and scanning the small solution space."""
    m = len(u)
    eqs: list[list[int]] = []
    ut = transpose(u)
    # u^T B u = B
    for i in range(m):
        for j in range(m):
            row = [0] * (m * m)
            for a in range(m):
                for b in range(m):
                    row[a * m + b] = (row[a * m + b] + ut[i][a] * u[b][j]) % p
            row[i * m + j] = (row[i * m + j] - 1) % p
            eqs.append(row)
    sgn = 1 if symmetric else -1
    for i in range(m):
        for j in range(m):
            row = [0] * (m * m)
            row[i * m + j] = (row[i * m + j] + 1) % p
            row[j * m + i] = (row[j * m + i] - sgn) % p
            eqs.append(row)
    basis = nullspace(eqs, p)
    if not basis:
        raise InputError("no invariant form of the requested symmetry")
    count = p ** len(basis)
    if count > 100_000:
        raise BudgetExceededError("invariant-form scan too large")
    for idx in range(1, count):
        coeffs = []
        t = idx
        for _ in basis:
            coeffs.append(t % p)
            t //= p
        flat = [sum(c * vec[e] for c, vec in zip(coeffs, basis)) % p for e in range(m * m)]
        B = tuple(tuple(flat[i * m + j] for j in range(m)) for i in range(m))
        if det(B, p) != 0:
            return B
    raise InputError("invariant forms are all degenerate")


def _direct_sum(blocks: list[Matrix], p: int) -> Matrix:
    N = sum(len(b) for b in blocks)
    out = [[0] * N for _ in range(N)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[off + i][off + j] = x % p
        off += len(b)
    return mat(out)


def _hyperbolic_block(m: int, p: int, eps: int) -> tuple[Matrix, Matrix]:
    """u = J_m + its inverse transpose on a dual pair of isotropic subspaces."""
    jm = _jordan_block(m, p)
    jmit = transpose(mat_inv(jm, p))
    u = _direct_sum([jm, jmit], p)
    s = (-1) ** eps
    form = [[0] * (2 * m) for _ in range(2 * m)]
    for i in range(m):
        form[i][m + i] = 1
        form[m + i][i] = s % p
    return u, mat(form)


def _diagonalize_symmetric(a: Matrix, p: int) -> tuple[Matrix, list[int]]:
    """P with P^T a P diagonal; returns (P, diagonal entries)."""
    n = len(a)
    basis = [list(col) for col in identity_matrix(n)]

    def pairing(x, y):
        return sum(x[i] * a[i][j] * y[j] for i in range(n) for j in range(n)) % p

    for i in range(n):
        j = next((t for t in range(i, n) if pairing(basis[t], basis[t])), None)
        if j is None:
            found = None
            for t in range(i, n):
                for s in range(t + 1, n):
                    if pairing(basis[t], basis[s]):
                        found = (t, s)
                        break
                if found:
                    break
            if found is None:
                raise InputError("form is degenerate")
            t, s = found
            basis[t] = [(x + y) % p for x, y in zip(basis[t], basis[s])]
            j = t
        basis[i], basis[j] = basis[j], basis[i]
        di = pairing(basis[i], basis[i])
        inv = pow(di, -1, p)
        for t in range(i + 1, n):
            f = pairing(basis[i], basis[t]) * inv % p
            basis[t] = [(x - f * y) % p for x, y in zip(basis[t], basis[i])]
    P = tuple(tuple(basis[j][i] for j in range(n)) for i in range(n))
    diag = [pairing(basis[i], basis[i]) for i in range(n)]
    return P, diag


def _sqrt_mod(a: int, p: int) -> int | None:
    a %= p
    for x in range(p):
        if x * x % p == a:
            return x
    return None


def _canonicalize_symmetric(a: Matrix, p: int) -> tuple[Matrix, tuple[int, ...]]:
    """P and canonical diagonal (1,...,1[,nu]) with P^T a P = diag(canonical)."""
    P, diag = _diagonalize_symmetric(a, p)
    n = len(a)
    nu = next(x for x in range(2, p) if _sqrt_mod(x, p) is None)
    cols = [[P[i][j] for i in range(n)] for j in range(n)]
    classes = []
    for j in range(n):
        r = _sqrt_mod(diag[j], p)
        if r is not None:
            inv = pow(r, -1, p)
            cols[j] = [x * inv % p for x in cols[j]]
            classes.append(1)
        else:
            r = _sqrt_mod(diag[j] * pow(nu, -1, p) % p, p)
            inv = pow(r, -1, p)
            cols[j] = [x * inv % p for x in cols[j]]
            classes.append(nu)
    order = [j for j in range(n) if classes[j] == 1] + [j for j in range(n) if classes[j] != 1]
    cols = [cols[j] for j in order]
    classes = [classes[j] for j in order]
    ones = classes.count(1)
    # merge pairs of nu-columns into pairs of 1-columns
    xy = None
    while classes.count(nu) >= 2:
        if xy is None:
            target = pow(nu, -1, p)
            xy = next(
                (x, y)
                for x in range(p)
                for y in range(p)
                if (x * x + y * y) % p == target
            )
        x, y = xy
        j = classes.index(nu)
        cj, ck = cols[j], cols[j + 1]
        cols[j] = [(x * u + y * v) % p for u, v in zip(cj, ck)]
        cols[j + 1] = [(-y * u + x * v) % p for u, v in zip(cj, ck)]
        classes[j] = classes[j + 1] = 1
        cols = [cols[t] for t in range(n) if classes[t] == 1] + [
            cols[t] for t in range(n) if classes[t] != 1
        ]
        classes = sorted(classes, key=lambda c: c != 1)
    Pnew = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
    return Pnew, tuple(classes)


def transport_symmetric(a: Matrix, b: Matrix, p: int) -> Matrix:
    """P with P^T a P = b, for equivalent nondegenerate symmetric forms."""
    Pa, ca = _canonicalize_symmetric(a, p)
    Pb, cb = _canonicalize_symmetric(b, p)
    if ca != cb:
        raise InputError("symmetric forms are not equivalent")
    return mat_mul(Pa, mat_inv(Pb, p), p)


def transport_alternating(a: Matrix, g: GroupSpec) -> Matrix:
    """P with P^T a P = the standard alternating form of g."""
    p = g.p
    n = len(a) // 2
    pool = [list(col) for col in identity_matrix(len(a))]

    def pairing(x, y):
        return sum(x[i] * a[i][j] * y[j] for i in range(len(a)) for j in range(len(a))) % p

    xs, ys = [], []
    while pool:
        x = pool.pop(0)
        j = next(t for t in range(len(pool)) if pairing(x, pool[t]))
        y = pool.pop(j)
        scale = pow(pairing(x, y), -1, p)
        y = [v * scale % p for v in y]
        pool = [
            [
                (z[i] - pairing(x, z) * y[i] + pairing(y, z) * x[i]) % p
                for i in range(len(a))
            ]
            for z in pool
        ]
        xs.append(x)
        ys.append(y)
    cols = xs + list(reversed(ys))
    P = tuple(tuple(cols[j][i] for i in range(len(a))) for j in range(len(a)))
    P = tuple(zip(*P))  # columns were rows; transpose into place
    target = form_matrix(g)
    if mat_mul(mat_mul(transpose(P), a, p), P, p) != target:
        raise InputError("symplectic transport failed")  # unreachable
    return P


def jordan_type(u: Matrix, p: int) -> Partition:
    n = len(u)
    m = mat_sub(u, identity_matrix(n), p)
    ranks = [n]
    power = identity_matrix(n)
    while ranks[-1] > 0:
        power = mat_mul(power, m, p)
        ranks.append(rank(power, p))
    at_least = [ranks[j - 1] - ranks[j] for j in range(1, len(ranks))]
    parts = []
    for size in range(len(at_least), 0, -1):
        count = at_least[size - 1] - (at_least[size] if size < len(at_least) else 0)
        parts.extend([size] * count)
    return Partition(sorted(parts, reverse=True))


def unipotent_rep(g: GroupSpec, ep: EpsPartition) -> Matrix:
    """An isometry (det 1 where required) of Jordan type ep, built from
    regular blocks on nondegenerate subspaces and hyperbolic pairs on dual
    isotropic subspaces, then moved onto the standard form."""
    p, a = factor_prime_power(g.q)
    if a != 1:
        raise InputError("the matrix oracle works over prime fields only")
    if g.family is Family.SO_EVEN and g.twist != 1:
        raise InputError("the matrix oracle models the split even orthogonal form")
    if ep.eps != g.form_eps or ep.total != g.dim:
        raise InputError("partition does not match the group")
    natural_parity = 0 if g.family is Family.SP else 1  # natural part sizes mod 2
    blocks: list[tuple[Matrix, Matrix]] = []
    mu = ep.partition
    for m in mu.distinct():
        r = mu.multiplicity(m)
        if m % 2 == natural_parity:
            blk = _jordan_block(m, p)
            form = _invariant_form(blk, p, symmetric=(g.family is not Family.SP))
            blocks.extend([(blk, form)] * r)
        else:
            blocks.extend([_hyperbolic_block(m, p, g.form_eps)] * (r // 2))
    u_blk = _direct_sum([b for b, _ in blocks], p)
    j_blk = _direct_sum([f for _, f in blocks], p)
    if g.family is Family.SP:
        P = transport_alternating(j_blk, g)
    else:
        try:
            P = transport_symmetric(j_blk, form_matrix(g), p)
        except InputError:
            # wrong discriminant class: rescale one odd-dimensional block
            # form by a nonsquare (u still preserves it) and retry
            nu = next(x for x in range(2, p) if _sqrt_mod(x, p) is None)
            odd = next(i for i, (b, _) in enumerate(blocks) if len(b) % 2 == 1)
            b, f = blocks[odd]
            blocks[odd] = (b, tuple(tuple(x * nu % p for x in row) for row in f))
            j_blk = _direct_sum([f for _, f in blocks], p)
            P = transport_symmetric(j_blk, form_matrix(g), p)
    u = mat_mul(mat_mul(mat_inv(P, p), u_blk, p), P, p)
    special = g.family is not Family.SP
    if not is_isometry(u, form_matrix(g), p, special=special):
        raise ArithmeticError("representative is not an isometry")  # unreachable
    if jordan_type(u, p) != mu:
        raise ArithmeticError("representative has wrong Jordan type")  # unreachable
    return u


# ---------------------------------------------------------------------------
# group generators

def _root_elements(g: GroupSpec) -> list[Matrix]:
    """Unipotent root elements (parameter 1) plus, for orthogonal groups, a
    torus element of non-trivial spinor norm; together they generate the
    finite group over the prime field."""
    p = g.p
    idx = _basis_indices(g)
    pos = {i: t for t, i in enumerate(idx)}
    n, N = g.n, g.dim
    inv2 = pow(2, -1, p)

    def elem(assignments: dict[tuple[int, int], int]) -> Matrix:
        m = [[1 if i == j else 0 for j in range(N)] for i in range(N)]
        for (target, source), c in assignments.items():
            m[pos[target]][pos[source]] = (m[pos[target]][pos[source]] + c) % p
        return mat(m)

    gens: list[Matrix] = []
    sp = g.family is Family.SP
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            gens.append(elem({(i, j): 1, (-j, -i): -1}))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if sp:
                gens.append(elem({(i, -j): 1, (j, -i): 1}))
                gens.append(elem({(-i, j): 1, (-j, i): 1}))
            else:
                gens.append(elem({(i, -j): 1, (j, -i): -1}))
                gens.append(elem({(-i, j): 1, (-j, i): -1}))
    if sp:
        for i in range(1, n + 1):
            gens.append(elem({(i, -i): 1}))
            gens.append(elem({(-i, i): 1}))
    if g.family is Family.SO_ODD:
        for i in range(1, n + 1):
            gens.append(elem({(0, -i): 1, (i, -i): -inv2, (i, 0): -1}))
            gens.append(elem({(0, i): 1, (-i, i): -inv2, (-i, 0): -1}))
    if g.family in (Family.SO_ODD, Family.SO_EVEN):
        zeta = _primitive_root(p)
        m = [[1 if i == j else 0 for j in range(N)] for i in range(N)]
        m[pos[1]][pos[1]] = zeta
        m[pos[-1]][pos[-1]] = pow(zeta, -1, p)
        gens.append(mat(m))
    J = form_matrix(g)
    for m_ in gens:
        if not is_isometry(m_, J, p, special=True):
            raise ArithmeticError("generator is not a special isometry")  # unreachable
    return gens


def _primitive_root(p: int) -> int:
    for cand in range(2, p):
        seen = set()
        x = 1
        for _ in range(p - 1):
            x = x * cand % p
            seen.add(x)
        if len(seen) == p - 1:
            return cand
    raise InputError("no primitive root found")


def group_generators(g: GroupSpec) -> list[Matrix]:
    if g.family not in (Family.SP, Family.SO_ODD, Family.SO_EVEN):
        raise InputError("generators available for sp / so families")
    return _root_elements(g)


def mulclose(gens: list[Matrix], p: int, cap: int = 200_000) -> int:
    """Order of the group generated by gens, by batched closure (tests)."""
    arr = np.array(gens, dtype=np.int64)
    seen = {np.asarray(m, dtype=np.uint8).tobytes() for m in gens}
    frontier = arr
    N = arr.shape[1]
    while len(frontier):
        prods = (frontier[:, None] @ arr[None, :, :, :].reshape(1, len(arr), N, N)) % p
        prods = prods.reshape(-1, N, N)
        fresh = []
        for row in prods.astype(np.uint8):
            key = row.tobytes()
            if key not in seen:
                seen.add(key)
                fresh.append(row)
                if len(seen) > cap:
                    raise BudgetExceededError("mulclose cap exceeded")
        frontier = np.array(fresh, dtype=np.int64) if fresh else np.empty((0, N, N), np.int64)
    return len(seen)


# ---------------------------------------------------------------------------
# power-map conjugacy search


def _intertwiner_basis(u: Matrix, uk: Matrix, p: int) -> list[tuple[int, ...]]:
    """Canonical basis of {X : X u = uk X} over F_p."""
    N = len(u)
    eqs = []
    for i in range(N):
        for j in range(N):
            row = [0] * (N * N)
            for t in range(N):
                row[i * N + t] = (row[i * N + t] + u[t][j]) % p
                row[t * N + j] = (row[t * N + j] - uk[i][t]) % p
            eqs.append(row)
    return nullspace(eqs, p)


def _lex_enumeration_search(
    basis: list[tuple[int, ...]],
    p: int,
    J: Matrix,
    special: bool,
    N: int,
    chunk: int = 200_000,
) -> Matrix | None:
    """Scan all coefficient vectors in lexicographic order; return the first
    combination that is an isometry (invertibility is automatic) with det 1
    when special is set."""
    c = len(basis)
    total = p**c
    B = np.array(basis, dtype=np.int64)
    Jnp = np.array(J, dtype=np.int64)
    Jmod = Jnp % p
    start = 0
    while start < total:
        stop = min(start + chunk, total)
        idx = np.arange(start, stop, dtype=np.int64)
        digits = np.empty((len(idx), c), dtype=np.int64)
        rem = idx.copy()
        for posn in range(c - 1, -1, -1):
            digits[:, posn] = rem % p
            rem //= p
        X = (digits @ B) % p
        X = X.reshape(-1, N, N)
        gram = np.einsum("nji,jk,nkl->nil", X, Jnp, X) % p
        ok = (gram == Jmod).all(axis=(1, 2))
        if special and ok.any():
            dets = np.rint(np.linalg.det(X[ok].astype(np.float64))).astype(np.int64) % p
            sub = np.flatnonzero(ok)
            ok = np.zeros(len(X), dtype=bool)
            ok[sub[dets == 1]] = True
        hits = np.flatnonzero(ok)
        if len(hits):
            w = X[hits[0]]
            return tuple(tuple(int(x) for x in row) for row in w)
        start = stop
    return None


def _orbit_search(
    g: GroupSpec, u: Matrix, uk: Matrix, budget: int
) -> Matrix | None:
    """Walk the conjugation orbit of u under the group generators, tracking a
    conjugating word, until uk is found or the orbit closes."""
    p = g.p
    gens = group_generators(g)
    gens = gens + [mat_inv(m, p) for m in gens]
    gen_invs = [mat_inv(m, p) for m in gens]
    visited: dict[Matrix, tuple[Matrix | None, int]] = {u: (None, -1)}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for gi, h in enumerate(gens):
            y = mat_mul(mat_mul(h, x, p), gen_invs[gi], p)
            if y in visited:
                continue
            visited[y] = (x, gi)
            if len(visited) > budget:
                raise BudgetExceededError("conjugation orbit exceeds the budget")
            if y == uk:
                w = identity_matrix(len(u))
                node = y
                while visited[node][1] != -1:
                    parent, gi2 = visited[node]
                    w = mat_mul(w, gens[gi2], p)
                    node = parent
                if mat_mul(w, u, p) != mat_mul(uk, w, p):
                    raise ArithmeticError("orbit witness check failed")  # unreachable
                return w
            queue.append(y)
    return None


def power_conjugacy_search(
    g: GroupSpec, u: Matrix, k: int, budget: int | None = None
) -> Matrix | None:
    """A witness X with X u X^{-1} = u^k inside the finite isometry group
    (det 1 where the group demands it), or None when there is none.

    Strategy: if u^k = u the identity is the witness.  Otherwise compute the
    intertwiner space {X : X u = u^k X}; when p^dim fits the budget, scan all
    coefficient vectors in lexicographic order and return the first isometry
    (so the output is reproducible and independent of any chunking).  When
    the coefficient space is too large, walk the conjugation orbit of u under
    the group generators instead; orbits in that regime are small.  Exceeding
    the budget raises, it never truncates.
    """
    p, a = factor_prime_power(g.q)
    if a != 1:
        raise InputError("the matrix oracle works over prime fields only")
    if gcd(k, p) != 1:
        raise InputError("k must be coprime to p")
    limit = _budget(budget)
    J = form_matrix(g)
    special = g.family is not Family.SP
    if not is_isometry(u, J, p, special=special):
        raise InputError("u is not an element of the group")
    uk = mat_pow(u, k, p)
    if uk == u:
        return identity_matrix(len(u))
    basis = _intertwiner_basis(u, uk, p)
    if p ** len(basis) <= limit:
        return _lex_enumeration_search(basis, p, J, special, len(u))
    return _orbit_search(g, u, uk, budget=limit)


# ---------------------------------------------------------------------------
# rank-one class counting


def sl2_elements(q: int) -> list[Matrix]:
    p, a = factor_prime_power(q)
    if a != 1 or q > 13:
        raise InputError("rank-one enumeration supports prime q <= 13")
    out = []
    for x in range(q):
        for b in range(q):
            for c in range(q):
                if x:
                    d = (1 + b * c) * pow(x, -1, q) % q
                    out.append(((x, b), (c, d)))
                elif b * c % q == q - 1:
                    for d in range(q):
                        out.append(((x, b), (c, d)))
    return out


@lru_cache(maxsize=None)
def sl2_classes(q: int) -> tuple[tuple[Matrix, ...], dict[Matrix, int]]:
    """Conjugacy classes of the rank-one symplectic group by raw orbit
    computation: returns class representatives and an element -> class map."""
    elements = sl2_elements(q)
    inverses = {m: mat_inv(m, q) for m in elements}
    index: dict[Matrix, int] = {}
    reps: list[Matrix] = []
    for m in elements:
        if m in index:
            continue
        ci = len(reps)
        reps.append(m)
        for x in elements:
            index[mat_mul(mat_mul(x, m, q), inverses[x], q)] = ci
    return tuple(reps), index


def brauer_fixed_classes_sl2(q: int, k: int) -> int:
    """Number of conjugacy classes of the rank-one symplectic group fixed by
    g -> g^k, by brute force."""
    if gcd(k, q * (q * q - 1)) != 1:
        raise InputError("k must be coprime to the group order")
    reps, index = sl2_classes(q)
    return sum(1 for ci, m in enumerate(reps) if index[mat_pow(m, k, q)] == ci)
