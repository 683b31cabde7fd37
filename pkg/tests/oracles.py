"""Independent brute-force oracles.

These work on dense matrices indexed by elements or by intervals and share no
code with the sparse implementations they check, apart from scalar arithmetic.
"""

import itertools


def leq_brute(elements, pairs):
    """Reflexive-transitive closure by repeated squaring of a boolean matrix."""
    n = len(elements)
    idx = {x: i for i, x in enumerate(elements)}
    r = [[i == j for j in range(n)] for i in range(n)]
    for x, y in pairs:
        r[idx[x]][idx[y]] = True
    for _ in range(n):
        r = [[any(r[i][k] and r[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    return {(elements[i], elements[j]) for i in range(n) for j in range(n) if r[i][j]}


def dense(f):
    """Element-indexed square matrix of an incidence function."""
    P = f.poset
    return [[f[(x, y)] if P.leq(x, y) else f.field.zero for y in P.elements] for x in P.elements]


def matmul(a, b, zero):
    """Dense product; zero entries of ``a`` are skipped, nothing else is."""
    m = len(b[0])
    out = []
    for row in a:
        acc = [zero] * m
        for t, v in enumerate(row):
            if v:
                bt = b[t]
                for j in range(m):
                    acc[j] = acc[j] + v * bt[j]
        out.append(acc)
    return out


def dense_inverse(m, field):
    """Gauss-Jordan on [m | I]."""
    n = len(m)
    aug = [list(row) + [field.one if i == j else field.zero for j in range(n)]
           for i, row in enumerate(m)]
    for c in range(n):
        p = next(i for i in range(c, n) if aug[i][c])
        aug[c], aug[p] = aug[p], aug[c]
        inv = field.one / aug[c][c]
        aug[c] = [v * inv for v in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                fac = aug[i][c]
                aug[i] = [a - fac * b for a, b in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


def brute_automorphisms(P):
    """All order automorphisms by checking every permutation."""
    out = []
    for perm in itertools.permutations(P.elements):
        f = dict(zip(P.elements, perm))
        if all(P.leq(x, y) == P.leq(f[x], f[y]) for x in P.elements for y in P.elements):
            out.append(f)
    return out


def endomap_matrix(phi):
    """Interval-indexed matrix; column j is the image of interval j."""
    ivs = phi.poset.intervals
    return [[phi.image(jv)[iv] for jv in ivs] for iv in ivs]


def comult_matrix(P, field):
    """Matrix of Δ: rows indexed by interval pairs, columns by intervals."""
    ivs = P.intervals
    rows = []
    for a in ivs:
        for b in ivs:
            row = []
            for (x, y) in ivs:
                hit = a[0] == x and b[1] == y and a[1] == b[0]
                row.append(field.one if hit else field.zero)
            rows.append(row)
    return rows


def identity_matrix(n, field):
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]


def _column(m, j):
    return [row[j] for row in m]


def _tensor_side(D, A, B, field):
    """Columns of (A ⊗ B)·D, one per interval, as flat lists.

    Column ``c`` of D has a one in row ``(a, b)`` for every splitting of
    interval ``c``; (A ⊗ B) sends that row to the Kronecker product of
    ``A[:, a]`` and ``B[:, b]``.
    """
    n = len(A)
    cols = []
    for c in range(len(D[0])):
        acc = [field.zero] * (n * n)
        for r, row in enumerate(D):
            if not row[c]:
                continue
            a, b = divmod(r, n)
            u, v = _column(A, a), _column(B, b)
            for i, x in enumerate(u):
                if x:
                    for j, y in enumerate(v):
                        if y:
                            acc[i * n + j] = acc[i * n + j] + row[c] * x * y
        cols.append(acc)
    return cols


def _comult_side(D, M, field):
    """Columns of D·M."""
    prod = matmul(D, M, field.zero)
    return [_column(prod, c) for c in range(len(M[0]))]


def morphism_oracle(phi):
    """Δφ = (φ⊗φ)Δ and εφ = ε, from dense matrices."""
    P, F = phi.poset, phi.field
    M = endomap_matrix(phi)
    D = comult_matrix(P, F)
    eps = [[F.one if x == y else F.zero for x, y in P.intervals]]
    return (
        _comult_side(D, M, F) == _tensor_side(D, M, M, F)
        and matmul(eps, M, F.zero) == eps
    )


def derivation_oracle(d):
    """Δd = (d⊗1 + 1⊗d)Δ, from dense matrices."""
    P, F = d.poset, d.field
    M = endomap_matrix(d)
    D = comult_matrix(P, F)
    I = identity_matrix(len(P.intervals), F)
    r1 = _tensor_side(D, M, I, F)
    r2 = _tensor_side(D, I, M, F)
    rhs = [[a + b for a, b in zip(x, y)] for x, y in zip(r1, r2)]
    return _comult_side(D, M, F) == rhs


def rational_rank(rows):
    """Rank over Q via sympy's exact domain matrices."""
    from sympy import QQ as SQQ
    from sympy.polys.matrices import DomainMatrix

    data = [[SQQ(v.numerator, v.denominator) for v in r] for r in rows]
    return DomainMatrix(data, (len(rows), len(rows[0])), SQQ).rank()
