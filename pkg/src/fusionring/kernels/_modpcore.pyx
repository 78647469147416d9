# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled mod-p matrix kernels.

Same contracts as ``fusionring.kernels._purepy``; int64 arithmetic with
fraction-free elimination.  The modulus is capped so that p*p fits in an
int64 with headroom (far above anything this package uses).
"""

from libc.stdlib cimport free, malloc

MAX_MODULUS = 2_000_000_000


cdef inline void _fail_alloc() except *:
    raise MemoryError("mod-p kernel buffer allocation failed")


def _check_modulus(p):
    if not isinstance(p, int) or p < 2:
        raise ValueError(f"modulus must be an integer >= 2, got {p!r}")
    if p > MAX_MODULUS:
        raise ValueError(f"modulus {p} exceeds compiled kernel cap {MAX_MODULUS}")


cdef long long* _to_buffer(rows, Py_ssize_t m, Py_ssize_t n, long long p) except NULL:
    cdef long long* buf = <long long*> malloc(m * n * sizeof(long long))
    cdef Py_ssize_t i, j
    cdef long long v
    if buf == NULL:
        _fail_alloc()
    for i in range(m):
        row = rows[i]
        if len(row) != n:
            free(buf)
            raise ValueError("ragged matrix")
        for j in range(n):
            v = row[j] % p
            if v < 0:
                v += p
            buf[i * n + j] = v
    return buf


cdef long long _rank_inplace(long long* a, Py_ssize_t m, Py_ssize_t n, long long p):
    cdef Py_ssize_t rank = 0, col, i, j, piv
    cdef long long pv, f, x
    for col in range(n):
        piv = -1
        for i in range(rank, m):
            if a[i * n + col]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(n):
                x = a[rank * n + j]
                a[rank * n + j] = a[piv * n + j]
                a[piv * n + j] = x
        pv = a[rank * n + col]
        for i in range(rank + 1, m):
            f = a[i * n + col]
            if f:
                for j in range(n):
                    x = (pv * a[i * n + j] - f * a[rank * n + j]) % p
                    if x < 0:
                        x += p
                    a[i * n + j] = x
        rank += 1
        if rank == m:
            break
    return rank


def rank_mod_p(rows, p):
    """Rank of an integer matrix over F_p (fraction-free elimination)."""
    _check_modulus(p)
    cdef Py_ssize_t m = len(rows)
    if m == 0:
        return 0
    cdef Py_ssize_t n = len(rows[0])
    cdef long long pp = p
    cdef long long* buf = _to_buffer(rows, m, n, pp)
    cdef long long r
    try:
        r = _rank_inplace(buf, m, n, pp)
    finally:
        free(buf)
    return r


cdef void _matmul(long long* a, long long* b, long long* out,
                  Py_ssize_t m, Py_ssize_t k, Py_ssize_t n, long long p):
    cdef Py_ssize_t i, j, t
    cdef long long acc, v
    cdef long long maxll = 9223372036854775807
    # defer the modulo when the full accumulation cannot overflow
    cdef bint safe = k == 0 or (p - 1) * (p - 1) <= maxll // k
    if safe:
        for i in range(m):
            for j in range(n):
                out[i * n + j] = 0
            for t in range(k):
                v = a[i * k + t]
                if v:
                    for j in range(n):
                        out[i * n + j] += v * b[t * n + j]
            for j in range(n):
                out[i * n + j] %= p
    else:
        for i in range(m):
            for j in range(n):
                acc = 0
                for t in range(k):
                    v = a[i * k + t]
                    if v:
                        acc = (acc + v * b[t * n + j]) % p
                out[i * n + j] = acc


def matmul_mod_p(a, b, p):
    """Product of two integer matrices, reduced mod p."""
    _check_modulus(p)
    cdef Py_ssize_t m = len(a)
    if m == 0 or len(b) == 0:
        return [list(row) for row in a]
    cdef Py_ssize_t k = len(a[0])
    cdef Py_ssize_t n = len(b[0])
    if len(b) != k:
        raise ValueError("inner dimensions differ")
    cdef long long pp = p
    cdef long long* abuf = _to_buffer(a, m, k, pp)
    cdef long long* bbuf
    cdef long long* obuf
    try:
        bbuf = _to_buffer(b, k, n, pp)
    except BaseException:
        free(abuf)
        raise
    obuf = <long long*> malloc(m * n * sizeof(long long))
    if obuf == NULL:
        free(abuf)
        free(bbuf)
        _fail_alloc()
    try:
        _matmul(abuf, bbuf, obuf, m, k, n, pp)
        return [[obuf[i * n + j] for j in range(n)] for i in range(m)]
    finally:
        free(abuf)
        free(bbuf)
        free(obuf)


def nilpotent_rank_profile(a, p, max_power):
    """Ranks of A^0..A^max_power over F_p; zero-fills once rank 0 is hit."""
    _check_modulus(p)
    cdef Py_ssize_t n = len(a)
    cdef long long pp = p
    cdef Py_ssize_t cap = max_power
    ranks = [n]
    if n == 0 or cap <= 0:
        while len(ranks) < max_power + 1:
            ranks.append(0)
        return ranks
    cdef long long* base = _to_buffer(a, n, n, pp)
    cdef long long* cur
    cdef long long* nxt
    cdef long long* scratch
    cdef long long* tmp
    cdef Py_ssize_t step, i
    cdef long long r
    cur = <long long*> malloc(n * n * sizeof(long long))
    nxt = <long long*> malloc(n * n * sizeof(long long))
    scratch = <long long*> malloc(n * n * sizeof(long long))
    if cur == NULL or nxt == NULL or scratch == NULL:
        free(base)
        if cur != NULL:
            free(cur)
        if nxt != NULL:
            free(nxt)
        if scratch != NULL:
            free(scratch)
        _fail_alloc()
    for i in range(n * n):
        cur[i] = base[i]
    try:
        for step in range(cap):
            for i in range(n * n):
                scratch[i] = cur[i]
            r = _rank_inplace(scratch, n, n, pp)
            ranks.append(r)
            if r == 0:
                break
            _matmul(cur, base, nxt, n, n, n, pp)
            tmp = cur
            cur = nxt
            nxt = tmp
    finally:
        free(base)
        free(cur)
        free(nxt)
        free(scratch)
    while len(ranks) < max_power + 1:
        ranks.append(0)
    return ranks
