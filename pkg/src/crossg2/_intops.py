"""Integer-cleared numpy kernels for bulk quadruple arithmetic.

Scalars live on the basis {1, r6, r10, r15}; a Scalar tensor becomes an
int64 array with a trailing component axis of length 4 over one common
denominator.  Multiplication of two components is the bilinear table

    (u, v) -> (w, coeff)

derived from r6*r10 = 2*r15, r6*r15 = 3*r10, r10*r15 = 5*r6.  The
identity checks routed through here are homogeneous of equal degree on
both sides, so the cleared denominator cancels and never needs tracking.

Every entry point bounds the worst-case accumulator against int64 and
raises OverflowError if exceeded (callers then fall back to the pure
path; in practice the bound is never hit at these dimensions).
"""

from __future__ import annotations

from math import lcm

import numpy as np

from .scalar import Scalar

# (u, v) -> (w, coeff): component products on {1, r6, r10, r15}
_PRODUCTS = [
    (0, 0, 0, 1), (0, 1, 1, 1), (0, 2, 2, 1), (0, 3, 3, 1),
    (1, 0, 1, 1), (1, 1, 0, 6), (1, 2, 3, 2), (1, 3, 2, 3),
    (2, 0, 2, 1), (2, 1, 3, 2), (2, 2, 0, 10), (2, 3, 1, 5),
    (3, 0, 3, 1), (3, 1, 2, 3), (3, 2, 1, 5), (3, 3, 0, 15),
]

_INT64_LIMIT = 2 ** 62


def clear_tensor(nested) -> np.ndarray:
    """Nested lists of Scalar -> int64 array [..., 4], common denominator dropped."""
    flat: list[Scalar] = []

    def walk(x):
        if isinstance(x, Scalar):
            flat.append(x)
            return None
        return [walk(y) for y in x]

    shape_probe = walk(nested)

    den = 1
    for s in flat:
        den = lcm(den, s.q)
    arr = np.empty((len(flat), 4), dtype=object)
    for idx, s in enumerate(flat):
        f = den // s.q
        arr[idx] = (s.na * f, s.nb * f, s.nc * f, s.nd * f)

    def shape_of(x):
        if x is None:
            return ()
        return (len(x),) + shape_of(x[0])

    shape = shape_of(shape_probe) + (4,)
    maxabs = max((abs(int(v)) for v in arr.reshape(-1)), default=0)
    if maxabs >= _INT64_LIMIT:
        raise OverflowError("cleared tensor exceeds int64")
    return arr.astype(np.int64).reshape(shape)


def _qmul_contract(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Quadruple product with contraction over the shared middle axis.

    a: [..., K, 4], b: [K, ..., 4] is not supported in general; this helper
    implements exactly (A @ B) for A: [M, K, 4], B: [K, N, 4] -> [M, N, 4].
    """
    m, k, _ = a.shape
    k2, n, _ = b.shape
    assert k == k2
    out = np.zeros((m, n, 4), dtype=np.int64)
    for u, v, w, coeff in _PRODUCTS:
        out[:, :, w] += coeff * (a[:, :, u] @ b[:, :, v])
    return out


def _check_product_bound(a: np.ndarray, b: np.ndarray, contract_len: int):
    ma = int(np.abs(a).max(initial=0))
    mb = int(np.abs(b).max(initial=0))
    # each output component receives 4 table terms, coeff <= 15
    bound = 4 * 15 * ma * mb * max(contract_len, 1)
    if bound >= _INT64_LIMIT:
        raise OverflowError("quadruple contraction may overflow int64")


def derivation_axiom_holds(struct: list[list[list[list[Scalar]]]]) -> bool:
    """Exhaustive check of the derivation identity of a triple system.

    struct[i][j][k] is the coordinate vector of [b_i, b_j, b_k].  Verifies

        [X,Y,[A,B,E]] = [[X,Y,A],B,E] + [A,[X,Y,B],E] + [A,B,[X,Y,E]]

    for all basis tuples, using the antisymmetry of both sides in (X, Y)
    to halve the pair loop.
    """
    c = clear_tensor(struct)  # [n, n, n, n, 4]
    n = c.shape[0]
    _check_product_bound(c, c, n)
    c_flat = c.reshape(n * n * n, n, 4)        # [(a b e), l, 4]
    c_pfirst = np.ascontiguousarray(np.transpose(c, (1, 0, 2, 3, 4)))
    for x in range(n):
        for y in range(x + 1, n):
            m = c[x, y]                        # [l, m, 4]: operator L_{xy}
            lhs = _qmul_contract(c_flat, m).reshape(n, n, n, n, 4)
            # [[X,Y,A],B,E]: sum_p m[a,p] c[p,b,e,:]
            t1 = _qmul_contract(m, c.reshape(n, n * n * n, 4)).reshape(n, n, n, n, 4)
            # [A,[X,Y,B],E]: sum_p m[b,p] c[a,p,e,:]
            t2 = _qmul_contract(m, c_pfirst.reshape(n, n * n * n, 4))
            t2 = np.transpose(t2.reshape(n, n, n, n, 4), (1, 0, 2, 3, 4))
            # [A,B,[X,Y,E]]: sum_p m[e,p] c[a,b,p,:]
            t3 = _qmul_contract(m, np.ascontiguousarray(
                np.transpose(c, (2, 0, 1, 3, 4))).reshape(n, n * n * n, 4))
            t3 = np.transpose(t3.reshape(n, n, n, n, 4), (1, 2, 0, 3, 4))
            if not np.array_equal(lhs, t1 + t2 + t3):
                return False
    return True
