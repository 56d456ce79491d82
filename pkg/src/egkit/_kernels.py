"""
Array kernels for large sorting networks (n in the hundreds).

Compiled with numba when it is importable; the plain-Python bodies stay
available as ``kernel.py_func`` and are what the tests compare against the
tableau-level implementations.  Arrays are 0-indexed; 0 marks an empty cell.
"""

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover
    def njit(*args, **kwargs):
        def wrap(fn):
            fn.py_func = fn
            return fn
        return wrap(args[0]) if args and callable(args[0]) else wrap


@njit(cache=True)
def hook_walk(shape, rng):
    """Uniform standard tableau of ``shape`` by the hook walk."""
    nrows = shape.shape[0]
    ncols = shape[0] if nrows else 0
    rowlen = shape.copy()
    collen = np.zeros(ncols, dtype=np.int64)
    for i in range(nrows):
        for j in range(shape[i]):
            collen[j] += 1
    q = np.zeros((nrows, ncols), dtype=np.int64)
    remaining = 0
    for i in range(nrows):
        remaining += shape[i]
    for label in range(remaining, 0, -1):
        idx = rng.integers(0, remaining)
        i = 0
        while idx >= rowlen[i]:
            idx -= rowlen[i]
            i += 1
        j = idx
        while True:
            arm = rowlen[i] - j - 1
            leg = collen[j] - i - 1
            h = arm + leg
            if h == 0:
                break
            u = rng.integers(0, h)
            if u < arm:
                j = j + 1 + u
            else:
                i = i + 1 + (u - arm)
        q[i, j] = label
        rowlen[i] -= 1
        collen[j] -= 1
        remaining -= 1
    return q


@njit(cache=True)
def promote_all(q):
    """
    Clear a standard tableau by repeated promotion.

    Returns the 1-indexed column of each path's first cell, in step order,
    and the total number of right slides.  ``q`` is consumed.
    """
    nrows, ncols = q.shape
    total = 0
    for i in range(nrows):
        for j in range(ncols):
            if q[i, j] > 0:
                total += 1
    posr = np.zeros(total + 1, dtype=np.int64)
    posc = np.zeros(total + 1, dtype=np.int64)
    for i in range(nrows):
        for j in range(ncols):
            if q[i, j] > 0:
                posr[q[i, j]] = i
                posc[q[i, j]] = j
    first = np.zeros(total, dtype=np.int64)
    right = 0
    for step in range(total):
        lab = total - step
        i = posr[lab]
        j = posc[lab]
        first[step] = j + 1
        while True:
            left = q[i, j - 1] if j > 0 else 0
            up = q[i - 1, j] if i > 0 else 0
            if left == 0 and up == 0:
                q[i, j] = 0
                break
            if left > up:
                q[i, j] = left
                posr[left] = i
                posc[left] = j
                j -= 1
                right += 1
            else:
                q[i, j] = up
                posr[up] = i
                posc[up] = j
                i -= 1
    return first, right


@njit(cache=True)
def freeze_steps(word, size):
    """
    Insert ``word`` and record, for each cell, the step (1-based) at which it
    became frozen, or -1.  ``size`` bounds the number of rows and columns.
    """
    p = np.zeros((size, size), dtype=np.int64)
    rowlen = np.zeros(size, dtype=np.int64)
    freeze = np.full((size, size), -1, dtype=np.int64)
    for k in range(word.shape[0]):
        x = word[k]
        i = 0
        while True:
            if i >= size:
                raise ValueError("insertion tableau outgrew the array")
            length = rowlen[i]
            if length == 0 or x > p[i, length - 1]:
                if length >= size:
                    raise ValueError("insertion tableau outgrew the array")
                p[i, length] = x
                rowlen[i] += 1
                if x == i + length + 1 and freeze[i, length] < 0:
                    freeze[i, length] = k + 1
                break
            lo = 0
            hi = length - 1
            while lo < hi:
                mid = (lo + hi) // 2
                if p[i, mid] < x:
                    lo = mid + 1
                else:
                    hi = mid
            z = p[i, lo]
            if z == x:
                x = z + 1
            else:
                p[i, lo] = x
                if x == i + lo + 1 and freeze[i, lo] < 0:
                    freeze[i, lo] = k + 1
                x = z
            i += 1
    return freeze
