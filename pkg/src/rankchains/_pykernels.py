"""Pure-Python reference kernels.

Each function here has a twin in ``_kernels.pyx`` that follows the same pivot
rules step for step, so both backends return identical results.  Matrices are
lists of row lists of Python ints; inputs are never mutated.
"""


def _nearest(x, p):
    # round(x / p), ties toward +inf; p > 0
    return (2 * x + p) // (2 * p)


def _xgcd(a, b):
    # a, b > 0; returns (g, s, t) with s*a + t*b = g
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return a, s0, t0


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _find_pivot(a, k, m, n):
    best = 0
    pos = None
    for i in range(k, m):
        row = a[i]
        for j in range(k, n):
            x = row[j]
            if x:
                ax = x if x > 0 else -x
                if best == 0 or ax < best:
                    best = ax
                    pos = (i, j)
                    if ax == 1:
                        return pos
    return pos


def smith(rows, m, n, transforms=True):
    """Diagonalize by min-abs pivoting, then enforce divisibility.

    Returns ``(d, U, V)`` with ``U * A * V`` equal to ``diag(d)`` padded with
    zeros.  ``U`` and ``V`` are ``None`` when ``transforms`` is false.
    """
    a = [list(r) for r in rows]
    U = _identity(m) if transforms else None
    # V is kept transposed so column operations become row operations
    Vt = _identity(n) if transforms else None
    k = 0
    while k < m and k < n:
        pos = _find_pivot(a, k, m, n)
        if pos is None:
            break
        while True:
            i, j = pos
            if i != k:
                a[i], a[k] = a[k], a[i]
                if transforms:
                    U[i], U[k] = U[k], U[i]
            if j != k:
                for r in range(k, m):
                    row = a[r]
                    row[j], row[k] = row[k], row[j]
                if transforms:
                    Vt[j], Vt[k] = Vt[k], Vt[j]
            rowk = a[k]
            if rowk[k] < 0:
                a[k] = rowk = [-x for x in rowk]
                if transforms:
                    U[k] = [-x for x in U[k]]
            p = rowk[k]
            clean = True
            support = [c for c in range(k, n) if rowk[c]]
            for r in range(k + 1, m):
                row = a[r]
                x = row[k]
                if x:
                    q = _nearest(x, p)
                    if q:
                        for c in support:
                            row[c] -= q * rowk[c]
                        if transforms:
                            Ur = U[r]
                            U[r] = [y - q * z for y, z in zip(Ur, U[k])]
                    if row[k]:
                        clean = False
            colk = [r for r in range(k, m) if a[r][k]]
            for c in range(k + 1, n):
                x = rowk[c]
                if x:
                    q = _nearest(x, p)
                    if q:
                        for r in colk:
                            row = a[r]
                            row[c] -= q * row[k]
                        if transforms:
                            Vt[c] = [y - q * z for y, z in zip(Vt[c], Vt[k])]
                    if rowk[c]:
                        clean = False
            if clean:
                break
            pos = _find_pivot(a, k, m, n)
        k += 1
    r = k
    d = [a[i][i] for i in range(r)]
    for i in range(r):
        for j in range(i + 1, r):
            x, y = d[i], d[j]
            if y % x == 0:
                continue
            g, s, t = _xgcd(x, y)
            xg, yg = x // g, y // g
            if transforms:
                Ui, Uj = U[i], U[j]
                U[i] = [s * e + t * f for e, f in zip(Ui, Uj)]
                U[j] = [-yg * e + xg * f for e, f in zip(Ui, Uj)]
                Vi, Vj = Vt[i], Vt[j]
                Vt[i] = [e + f for e, f in zip(Vi, Vj)]
                Vt[j] = [-t * yg * e + s * xg * f for e, f in zip(Vi, Vj)]
            d[i], d[j] = g, x * yg
    if not transforms:
        return d, None, None
    V = [list(col) for col in zip(*Vt)] if n else []
    return d, U, V


def rank_det(rows, m, n):
    """Row-reduce with unimodular integer operations.

    Returns ``(rank, det)``; ``det`` is 0 unless the matrix is square and
    nonsingular.
    """
    a = [list(r) for r in rows]
    sign = 1
    diag = []
    row = 0
    for col in range(n):
        if row == m:
            break
        while True:
            best = 0
            piv = -1
            for r in range(row, m):
                x = a[r][col]
                if x:
                    ax = x if x > 0 else -x
                    if best == 0 or ax < best:
                        best, piv = ax, r
                        if ax == 1:
                            break
            if piv < 0:
                break
            if piv != row:
                a[piv], a[row] = a[row], a[piv]
                sign = -sign
            top = a[row]
            if top[col] < 0:
                a[row] = top = [-x for x in top]
                sign = -sign
            p = top[col]
            support = [c for c in range(col, n) if top[c]]
            clean = True
            for r in range(row + 1, m):
                cur = a[r]
                x = cur[col]
                if x:
                    q = _nearest(x, p)
                    if q:
                        for c in support:
                            cur[c] -= q * top[c]
                    if cur[col]:
                        clean = False
            if clean:
                diag.append(p)
                row += 1
                break
    rank = row
    if m != n or rank < n:
        return rank, 0
    det = sign
    for p in diag:
        det *= p
    return rank, det


def rank_mod_p(rows, m, n, p):
    a = [[x % p for x in r] for r in rows]
    row = 0
    for col in range(n):
        if row == m:
            break
        piv = -1
        for r in range(row, m):
            if a[r][col]:
                piv = r
                break
        if piv < 0:
            continue
        a[piv], a[row] = a[row], a[piv]
        top = a[row]
        inv = pow(top[col], -1, p)
        top = a[row] = [(x * inv) % p for x in top]
        for r in range(row + 1, m):
            cur = a[r]
            x = cur[col]
            if x:
                a[r] = [(y - x * z) % p for y, z in zip(cur, top)]
        row += 1
    return row


def mask_rank(mask):
    free = filled = 0
    while mask:
        if mask & 1:
            if free:
                free -= 1
                filled += 1
        else:
            free += 1
        mask >>= 1
    return filled


def mask_ranks(v):
    return [mask_rank(x) for x in range(1 << v)]


def mask_successor(mask):
    stack = []
    x = 1
    rest = mask
    while rest:
        if rest & 1:
            if stack:
                stack.pop()
        else:
            stack.append(x)
        rest >>= 1
        x += 1
    a = stack[0] if stack else x
    return mask | (1 << (a - 1))


def rank_chains(v):
    """All rank chains of the subsets of ``[v]`` as lists of bitmasks.

    Chains are ordered by their minimum mask; members by increasing size.
    """
    out = []
    for mask in range(1 << v):
        size = bin(mask).count("1")
        r = mask_rank(mask)
        if r != size:
            continue
        chain = [mask]
        for _ in range(v - 2 * r):
            mask = mask_successor(mask)
            chain.append(mask)
        out.append(chain)
    return out


def matmul(a, b, m, inner, n):
    out = []
    for row in a:
        acc = [0] * n
        for i in range(inner):
            x = row[i]
            if x:
                bi = b[i]
                if x == 1:
                    acc = [p + q for p, q in zip(acc, bi)]
                else:
                    acc = [p + x * q for p, q in zip(acc, bi)]
        out.append(acc)
    return out
