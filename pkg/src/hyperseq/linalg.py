"""Dense linear algebra over GF(q).

Matrices are tuples of row tuples of integer field labels; vectors are
plain tuples.  Everything is exact and allocation-light — the scales in
this package are tiny, so clarity wins over vectorization.
"""

from __future__ import annotations

from typing import Sequence

from .fields import Field

Matrix = tuple[tuple[int, ...], ...]
Vector = tuple[int, ...]


def zeros(rows: int, cols: int) -> Matrix:
    return tuple((0,) * cols for _ in range(rows))


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(a: Sequence[Sequence[int]]) -> Matrix:
    return tuple(zip(*a)) if a else ()


def hstack(blocks: Sequence[Sequence[Sequence[int]]]) -> Matrix:
    rows = len(blocks[0])
    return tuple(
        tuple(x for block in blocks for x in block[r]) for r in range(rows)
    )


def mat_mul(f: Field, a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    bt = transpose(b)
    out = []
    for row in a:
        out_row = []
        for col in bt:
            acc = 0
            for x, y in zip(row, col):
                if x and y:
                    acc = f.add(acc, f.mul(x, y))
            out_row.append(acc)
        out.append(tuple(out_row))
    return tuple(out)


def mat_vec(f: Field, a: Sequence[Sequence[int]], v: Sequence[int]) -> Vector:
    out = []
    for row in a:
        acc = 0
        for x, y in zip(row, v):
            if x and y:
                acc = f.add(acc, f.mul(x, y))
        out.append(acc)
    return tuple(out)


def vec_mat(f: Field, v: Sequence[int], a: Sequence[Sequence[int]]) -> Vector:
    cols = len(a[0]) if a else 0
    out = [0] * cols
    for x, row in zip(v, a):
        if x:
            for j, y in enumerate(row):
                if y:
                    out[j] = f.add(out[j], f.mul(x, y))
    return tuple(out)


def rref(f: Field, a: Sequence[Sequence[int]]) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form.

    Args:
        f: the field the entries live in.
        a: the input matrix (not modified).

    Returns:
        ``(r, pivots)`` where ``pivots`` lists the pivot column of each
        nonzero row of ``r`` in order.
    """
    rows = [list(row) for row in a]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = f.inv(rows[r][c])
        rows[r] = [f.mul(inv, x) for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [
                    f.sub(x, f.mul(factor, y)) for x, y in zip(rows[i], rows[r])
                ]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return tuple(tuple(row) for row in rows), tuple(pivots)


def rank(f: Field, a: Sequence[Sequence[int]]) -> int:
    return len(rref(f, a)[1])


def kernel_basis(f: Field, a: Sequence[Sequence[int]]) -> tuple[Vector, ...]:
    """Basis of the right null space {v : a @ v = 0}, one vector per free column."""
    if not a:
        return ()
    ncols = len(a[0])
    r, pivots = rref(f, a)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [0] * ncols
        v[free] = 1
        for row_idx, pc in enumerate(pivots):
            v[pc] = f.neg(r[row_idx][free])
        basis.append(tuple(v))
    return tuple(basis)


def solve(f: Field, a: Sequence[Sequence[int]], b: Sequence[int]) -> Vector | None:
    """One particular solution of a @ x = b, or None if inconsistent."""
    if not a:
        return () if not any(b) else None
    aug = tuple(tuple(row) + (bi,) for row, bi in zip(a, b))
    r, pivots = rref(f, aug)
    ncols = len(a[0])
    if ncols in pivots:
        return None
    x = [0] * ncols
    for row_idx, pc in enumerate(pivots):
        x[pc] = r[row_idx][ncols]
    return tuple(x)


def is_nonsingular(f: Field, a: Sequence[Sequence[int]]) -> bool:
    return bool(a) and len(a) == len(a[0]) and rank(f, a) == len(a)


def inverse(f: Field, a: Sequence[Sequence[int]]) -> Matrix:
    n = len(a)
    aug = tuple(tuple(row) + tuple(1 if i == j else 0 for j in range(n))
                for i, row in enumerate(a))
    r, pivots = rref(f, aug)
    if tuple(pivots) != tuple(range(n)):
        raise ValueError("matrix is singular")
    return tuple(row[n:] for row in r[:n])
