# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled int64 kernels mirroring ``_pykernels``.

Every arithmetic step is overflow-checked; on overflow an ``OverflowError``
is raised and the caller reruns the pure-Python kernel on big ints.
"""

from cpython.mem cimport PyMem_Malloc, PyMem_Free

cdef extern from *:
    """
    static inline int rc_mul(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int rc_add(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    static inline int rc_sub(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    bint rc_mul(long long a, long long b, long long *r) nogil
    bint rc_add(long long a, long long b, long long *r) nogil
    bint rc_sub(long long a, long long b, long long *r) nogil


ctypedef long long i64


cdef inline int _overflow() except -1:
    raise OverflowError("int64 overflow in compiled kernel")


cdef inline i64 _mul(i64 a, i64 b) except? -1:
    cdef i64 r
    if rc_mul(a, b, &r):
        _overflow()
    return r


cdef inline i64 _add(i64 a, i64 b) except? -1:
    cdef i64 r
    if rc_add(a, b, &r):
        _overflow()
    return r


cdef inline i64 _submul(i64 y, i64 q, i64 z) except? -1:
    # y - q*z
    cdef i64 t, r
    if rc_mul(q, z, &t) or rc_sub(y, t, &r):
        _overflow()
    return r


cdef inline i64 _floordiv(i64 a, i64 b):
    # b > 0
    cdef i64 q = a / b
    if (a % b != 0) and a < 0:
        q -= 1
    return q


cdef inline i64 _nearest(i64 x, i64 p) except? -1:
    cdef i64 num = _add(_mul(2, x), p)
    return _floordiv(num, _mul(2, p))


cdef i64 _abs(i64 x):
    return -x if x < 0 else x


cdef i64* _alloc(Py_ssize_t count) except NULL:
    cdef i64* buf = <i64*> PyMem_Malloc((count if count > 0 else 1) * sizeof(i64))
    if buf == NULL:
        raise MemoryError()
    return buf


cdef void _load(i64* a, rows, Py_ssize_t m, Py_ssize_t n) except *:
    cdef Py_ssize_t i, j
    for i in range(m):
        row = rows[i]
        for j in range(n):
            a[i * n + j] = row[j]


cdef void _set_identity(i64* a, Py_ssize_t n):
    cdef Py_ssize_t i
    for i in range(n * n):
        a[i] = 0
    for i in range(n):
        a[i * n + i] = 1


cdef list _dump(i64* a, Py_ssize_t m, Py_ssize_t n):
    return [[a[i * n + j] for j in range(n)] for i in range(m)]


cdef void _swap_rows(i64* a, Py_ssize_t n, Py_ssize_t i, Py_ssize_t k, Py_ssize_t start):
    cdef Py_ssize_t c
    cdef i64 t
    for c in range(start, n):
        t = a[i * n + c]
        a[i * n + c] = a[k * n + c]
        a[k * n + c] = t


cdef void _negate_row(i64* a, Py_ssize_t n, Py_ssize_t k):
    cdef Py_ssize_t c
    for c in range(n):
        a[k * n + c] = -a[k * n + c]


cdef int _row_submul(i64* a, Py_ssize_t n, Py_ssize_t r, i64 q, Py_ssize_t k,
                     Py_ssize_t start) except -1:
    cdef Py_ssize_t c
    cdef i64 z
    for c in range(start, n):
        z = a[k * n + c]
        if z:
            a[r * n + c] = _submul(a[r * n + c], q, z)
    return 0


cdef bint _find_pivot(i64* a, Py_ssize_t k, Py_ssize_t m, Py_ssize_t n,
                      Py_ssize_t* pi, Py_ssize_t* pj):
    cdef i64 best = 0, x
    cdef Py_ssize_t i, j
    cdef bint found = False
    for i in range(k, m):
        for j in range(k, n):
            x = a[i * n + j]
            if x:
                x = _abs(x)
                if best == 0 or x < best:
                    best = x
                    pi[0] = i
                    pj[0] = j
                    found = True
                    if x == 1:
                        return True
    return found


cdef void _xgcd(i64 a, i64 b, i64* g, i64* s, i64* t):
    cdef i64 s0 = 1, s1 = 0, t0 = 0, t1 = 1, q, tmp
    while b:
        q = a / b
        tmp = a - q * b
        a = b
        b = tmp
        tmp = s0 - q * s1
        s0 = s1
        s1 = tmp
        tmp = t0 - q * t1
        t0 = t1
        t1 = tmp
    g[0] = a
    s[0] = s0
    t[0] = t0


def smith(rows, Py_ssize_t m, Py_ssize_t n, bint transforms=True):
    cdef i64* a = _alloc(m * n)
    cdef i64* U = NULL
    cdef i64* Vt = NULL
    cdef Py_ssize_t k = 0, i, j, r, c, rank
    cdef i64 p, x, q, g, s, t, xg, yg, e, f
    cdef bint clean
    try:
        _load(a, rows, m, n)
        if transforms:
            U = _alloc(m * m)
            Vt = _alloc(n * n)
            _set_identity(U, m)
            _set_identity(Vt, n)
        while k < m and k < n:
            if not _find_pivot(a, k, m, n, &i, &j):
                break
            while True:
                if i != k:
                    _swap_rows(a, n, i, k, 0)
                    if transforms:
                        _swap_rows(U, m, i, k, 0)
                if j != k:
                    for r in range(k, m):
                        x = a[r * n + j]
                        a[r * n + j] = a[r * n + k]
                        a[r * n + k] = x
                    if transforms:
                        _swap_rows(Vt, n, j, k, 0)
                if a[k * n + k] < 0:
                    _negate_row(a, n, k)
                    if transforms:
                        _negate_row(U, m, k)
                p = a[k * n + k]
                clean = True
                for r in range(k + 1, m):
                    x = a[r * n + k]
                    if x:
                        q = _nearest(x, p)
                        if q:
                            _row_submul(a, n, r, q, k, k)
                            if transforms:
                                _row_submul(U, m, r, q, k, 0)
                        if a[r * n + k]:
                            clean = False
                for c in range(k + 1, n):
                    x = a[k * n + c]
                    if x:
                        q = _nearest(x, p)
                        if q:
                            for r in range(k, m):
                                e = a[r * n + k]
                                if e:
                                    a[r * n + c] = _submul(a[r * n + c], q, e)
                            if transforms:
                                _row_submul(Vt, n, c, q, k, 0)
                        if a[k * n + c]:
                            clean = False
                if clean:
                    break
                _find_pivot(a, k, m, n, &i, &j)
            k += 1
        rank = k
        d = [a[i * n + i] for i in range(rank)]
        for i in range(rank):
            for j in range(i + 1, rank):
                x = d[i]
                e = d[j]
                if e % x == 0:
                    continue
                _xgcd(x, e, &g, &s, &t)
                xg = x / g
                yg = e / g
                if transforms:
                    for c in range(m):
                        e = U[i * m + c]
                        f = U[j * m + c]
                        U[i * m + c] = _add(_mul(s, e), _mul(t, f))
                        U[j * m + c] = _add(_mul(-yg, e), _mul(xg, f))
                    for c in range(n):
                        e = Vt[i * n + c]
                        f = Vt[j * n + c]
                        Vt[i * n + c] = _add(e, f)
                        Vt[j * n + c] = _add(_mul(_mul(-t, yg), e), _mul(_mul(s, xg), f))
                d[i] = g
                d[j] = _mul(x, yg)
        if not transforms:
            return d, None, None
        Ul = _dump(U, m, m)
        V = [[Vt[i * n + j] for i in range(n)] for j in range(n)]
        return d, Ul, V
    finally:
        PyMem_Free(a)
        if U != NULL:
            PyMem_Free(U)
        if Vt != NULL:
            PyMem_Free(Vt)


def rank_det(rows, Py_ssize_t m, Py_ssize_t n):
    cdef i64* a = _alloc(m * n)
    cdef Py_ssize_t row = 0, col, r, piv
    cdef i64 best, x, p, q, sign = 1
    cdef bint clean
    diag = []
    try:
        _load(a, rows, m, n)
        for col in range(n):
            if row == m:
                break
            while True:
                best = 0
                piv = -1
                for r in range(row, m):
                    x = a[r * n + col]
                    if x:
                        x = _abs(x)
                        if best == 0 or x < best:
                            best = x
                            piv = r
                            if x == 1:
                                break
                if piv < 0:
                    break
                if piv != row:
                    _swap_rows(a, n, piv, row, 0)
                    sign = -sign
                if a[row * n + col] < 0:
                    _negate_row(a, n, row)
                    sign = -sign
                p = a[row * n + col]
                clean = True
                for r in range(row + 1, m):
                    x = a[r * n + col]
                    if x:
                        q = _nearest(x, p)
                        if q:
                            _row_submul(a, n, r, q, row, col)
                        if a[r * n + col]:
                            clean = False
                if clean:
                    diag.append(p)
                    row += 1
                    break
        if m != n or row < n:
            return row, 0
        det = sign
        for p in diag:
            det *= p
        return row, det
    finally:
        PyMem_Free(a)


def rank_mod_p(rows, Py_ssize_t m, Py_ssize_t n, i64 p):
    if p >= 3037000499:
        raise OverflowError("modulus too large for compiled kernel")
    cdef i64* a = _alloc(m * n)
    cdef Py_ssize_t row = 0, col, r, piv, c
    cdef i64 x, inv, g, s, t
    try:
        for r in range(m):
            rw = rows[r]
            for c in range(n):
                a[r * n + c] = rw[c] % p
        for col in range(n):
            if row == m:
                break
            piv = -1
            for r in range(row, m):
                if a[r * n + col]:
                    piv = r
                    break
            if piv < 0:
                continue
            _swap_rows(a, n, piv, row, 0)
            _xgcd(a[row * n + col], p, &g, &s, &t)
            inv = s % p
            if inv < 0:
                inv += p
            for c in range(n):
                a[row * n + c] = (a[row * n + c] * inv) % p
            for r in range(row + 1, m):
                x = a[r * n + col]
                if x:
                    for c in range(col, n):
                        a[r * n + c] = (a[r * n + c] - x * a[row * n + c]) % p
                        if a[r * n + c] < 0:
                            a[r * n + c] += p
            row += 1
        return row
    finally:
        PyMem_Free(a)


def matmul(a, b, Py_ssize_t m, Py_ssize_t inner, Py_ssize_t n):
    cdef i64* A = _alloc(m * inner)
    cdef i64* B = _alloc(inner * n)
    cdef i64* C = _alloc(m * n)
    cdef Py_ssize_t i, l, j
    cdef i64 x, t
    try:
        _load(A, a, m, inner)
        _load(B, b, inner, n)
        for i in range(m * n):
            C[i] = 0
        for i in range(m):
            for l in range(inner):
                x = A[i * inner + l]
                if x:
                    for j in range(n):
                        t = B[l * n + j]
                        if t:
                            C[i * n + j] = _add(C[i * n + j], _mul(x, t))
        return _dump(C, m, n)
    finally:
        PyMem_Free(A)
        PyMem_Free(B)
        PyMem_Free(C)


cdef inline int _mask_rank(unsigned long long mask) nogil:
    cdef int free = 0, filled = 0
    while mask:
        if mask & 1:
            if free:
                free -= 1
                filled += 1
        else:
            free += 1
        mask >>= 1
    return filled


cdef inline unsigned long long _mask_successor(unsigned long long mask) nogil:
    # the least unmatched non-member is the bottom of the stack, so only the
    # stack depth and its first entry are needed
    cdef int depth = 0, x = 1, first = 0
    cdef unsigned long long rest = mask
    while rest:
        if rest & 1:
            if depth:
                depth -= 1
                if depth == 0:
                    first = 0
        else:
            if depth == 0:
                first = x
            depth += 1
        rest >>= 1
        x += 1
    if depth == 0:
        first = x
    return mask | (1ULL << (first - 1))


def mask_rank(unsigned long long mask):
    return _mask_rank(mask)


def mask_successor(unsigned long long mask):
    return _mask_successor(mask)


def mask_ranks(int v):
    if v > 30:
        raise OverflowError("universe too large for mask table")
    cdef unsigned long long x, total = 1ULL << v
    return [_mask_rank(x) for x in range(total)]


def rank_chains(int v):
    if v > 62:
        raise OverflowError("universe too large for 64-bit masks")
    cdef unsigned long long mask, cur, total = 1ULL << v
    cdef int r, step
    out = []
    for mask in range(total):
        r = _mask_rank(mask)
        if r != __builtin_popcountll(mask):
            continue
        chain = [mask]
        cur = mask
        for step in range(v - 2 * r):
            cur = _mask_successor(cur)
            chain.append(cur)
        out.append(chain)
    return out


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
