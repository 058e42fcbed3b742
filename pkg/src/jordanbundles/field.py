"""Exact arithmetic in GF(p^e) (e <= 4) and dense exact linear algebra over it.

Field elements are plain ints in [0, p^e).  The base-p digits of an element
are its coordinates in the power basis 1, g, g^2, ... of the extension,
where g is a root of the chosen monic irreducible modulus.  For e == 1 an
element is simply a residue mod p.  This keeps matrices as lists of ints and
makes hashing/comparison trivial.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterator, List, Optional, Sequence, Tuple

Matrix = List[List[int]]
Vector = List[int]

_TABLE_LIMIT = 512  # build full multiplication tables for fields up to this order


def _poly_mul_mod(a: Tuple[int, ...], b: Tuple[int, ...], p: int) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    return out


def _digits(n: int, p: int, width: int) -> Tuple[int, ...]:
    out = []
    for _ in range(width):
        out.append(n % p)
        n //= p
    return tuple(out)


def _undigits(coeffs: Sequence[int], p: int) -> int:
    n = 0
    for c in reversed(coeffs):
        n = n * p + (c % p)
    return n


@dataclass(frozen=True)
class Field:
    """GF(p^e) with a fixed monic irreducible modulus.

    ``modulus`` holds the coefficients of the modulus from the constant term
    up, including the leading 1; for e == 1 it is (0, 1), i.e. the polynomial
    g, which is never used.
    """

    p: int
    e: int
    modulus: Tuple[int, ...]
    _mul_table: Optional[Tuple[Tuple[int, ...], ...]] = dc_field(
        default=None, repr=False, compare=False
    )
    _inv_table: Optional[Tuple[int, ...]] = dc_field(default=None, repr=False, compare=False)

    @property
    def q(self) -> int:
        return self.p ** self.e

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def element_coeffs(self, a: int) -> Tuple[int, ...]:
        return _digits(a, self.p, self.e)

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        p = self.p
        return _undigits(
            [x + y for x, y in zip(_digits(a, p, self.e), _digits(b, p, self.e))], p
        )

    def neg(self, a: int) -> int:
        if self.e == 1:
            return (-a) % self.p
        p = self.p
        return _undigits([-x for x in _digits(a, p, self.e)], p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a * b) % self.p
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return self._mul_slow(a, b)

    def _mul_slow(self, a: int, b: int) -> int:
        p, e = self.p, self.e
        prod = _poly_mul_mod(_digits(a, p, e), _digits(b, p, e), p)
        # reduce modulo the modulus (monic of degree e)
        for deg in range(len(prod) - 1, e - 1, -1):
            c = prod[deg]
            if c:
                prod[deg] = 0
                for i in range(e):
                    prod[deg - e + i] = (prod[deg - e + i] - c * self.modulus[i]) % p
        return _undigits(prod[:e], p)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in GF(%d^%d)" % (self.p, self.e))
        if self.e == 1:
            return pow(a, self.p - 2, self.p)
        if self._inv_table is not None:
            return self._inv_table[a]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            raise ValueError("negative exponent")
        if a == 0:
            return 1 if n == 0 else 0
        n %= self.q - 1
        result = 1
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def frobenius(self, a: int, s: int = 1) -> int:
        """a^(p^s)."""
        return self.pow(a, self.p ** s) if a else 0

    def from_int(self, n: int) -> int:
        """Embed an integer (prime-subfield element) into the field."""
        return n % self.p

    def contains_subfield_element(self, a: int) -> bool:
        return 0 <= a < self.p

    def __str__(self) -> str:
        if self.e == 1:
            return "GF(%d)" % self.p
        return "GF(%d^%d)" % (self.p, self.e)


def _is_irreducible(coeffs: Tuple[int, ...], p: int) -> bool:
    """Test a monic polynomial (low-to-high coeffs, leading 1) for
    irreducibility over GF(p) by trial division; fine for degree <= 4."""
    deg = len(coeffs) - 1
    if deg == 1:
        return True
    # no roots rules out all factors for degree 2 and 3
    for r in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * r + c) % p
        if acc == 0:
            return False
    if deg <= 3:
        return True
    # degree 4: also exclude irreducible quadratic factors
    for b in range(p):
        for c in range(p):
            quad = (c, b, 1)
            if not _is_irreducible(quad, p):
                continue
            # polynomial division of coeffs by quad
            rem = list(coeffs)
            for d in range(deg, 1, -1):
                lead = rem[d]
                if lead:
                    rem[d] = 0
                    rem[d - 1] = (rem[d - 1] - lead * b) % p
                    rem[d - 2] = (rem[d - 2] - lead * c) % p
            if not any(rem):
                return False
    return True


def ext_field_build(p: int, e: int) -> Field:
    """Build GF(p^e) with the lexicographically smallest monic irreducible
    modulus (smallest when the coefficient vector is read as a base-p
    integer, constant term least significant)."""
    if e < 1 or e > 4:
        raise ValueError("extension degree must be between 1 and 4")
    if p < 2:
        raise ValueError("p must be a prime >= 2")
    if e == 1:
        return Field(p, 1, (0, 1))
    modulus = None
    for k in range(p ** e):
        coeffs = _digits(k, p, e) + (1,)
        if _is_irreducible(coeffs, p):
            modulus = coeffs
            break
    assert modulus is not None
    fld = Field(p, e, modulus)
    if fld.q <= _TABLE_LIMIT:
        mul = tuple(
            tuple(fld._mul_slow(a, b) for b in range(fld.q)) for a in range(fld.q)
        )
        inv = [0] * fld.q
        for a in range(1, fld.q):
            for b in range(1, fld.q):
                if mul[a][b] == 1:
                    inv[a] = b
                    break
        fld = Field(p, e, modulus, mul, tuple(inv))
    return fld


def prime_field(p: int) -> Field:
    return ext_field_build(p, 1)


def enumerate_elements(fld: Field) -> Iterator[int]:
    """All field elements in a fixed deterministic order (0 first)."""
    return iter(range(fld.q))


# ---------------------------------------------------------------------------
# dense exact linear algebra
# ---------------------------------------------------------------------------


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def identity(fld: Field, n: int) -> Matrix:
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = 1
    return out


def mat_add(fld: Field, a: Matrix, b: Matrix) -> Matrix:
    return [[fld.add(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]

def mat_sub(fld: Field, a: Matrix, b: Matrix) -> Matrix:
    return [[fld.sub(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(fld: Field, c: int, a: Matrix) -> Matrix:
    return [[fld.mul(c, x) for x in row] for row in a]


def mat_mul(fld: Field, a: Matrix, b: Matrix) -> Matrix:
    n, m = len(a), len(b[0])
    k = len(b)
    out = zeros(n, m)
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            c = ai[t]
            if c:
                bt = b[t]
                for j in range(m):
                    if bt[j]:
                        oi[j] = fld.add(oi[j], fld.mul(c, bt[j]))
    return out


def mat_vec(fld: Field, a: Matrix, v: Vector) -> Vector:
    out = [0] * len(a)
    for i, row in enumerate(a):
        acc = 0
        for c, x in zip(row, v):
            if c and x:
                acc = fld.add(acc, fld.mul(c, x))
        out[i] = acc
    return out


def mat_pow(fld: Field, a: Matrix, n: int) -> Matrix:
    result = identity(fld, len(a))
    base = [row[:] for row in a]
    while n:
        if n & 1:
            result = mat_mul(fld, result, base)
        base = mat_mul(fld, base, base)
        n >>= 1
    return result


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def is_zero_matrix(a: Matrix) -> bool:
    return all(x == 0 for row in a for x in row)


def row_reduce(fld: Field, a: Matrix) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form.  Returns (rref, pivot column indices); zero
    rows are dropped, which makes the output a canonical form of the row
    space."""
    work = [row[:] for row in a]
    if not work:
        return [], []
    ncols = len(work[0])
    pivots: List[int] = []
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, len(work)):
            if work[i][col]:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = fld.inv(work[r][col])
        if inv != 1:
            work[r] = [fld.mul(inv, x) for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][col]:
                c = work[i][col]
                work[i] = [fld.sub(x, fld.mul(c, y)) for x, y in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def rank(fld: Field, a: Matrix) -> int:
    return len(row_reduce(fld, a)[1])


def kernel_basis(fld: Field, a: Matrix, ncols: Optional[int] = None) -> List[Vector]:
    """Canonical basis of the right kernel {v : a v = 0}, normalized from the
    reduced echelon form (free variable set to 1, read off in column order)."""
    if ncols is None:
        ncols = len(a[0]) if a else 0
    rref, pivots = row_reduce(fld, a)
    pivot_set = set(pivots)
    basis: List[Vector] = []
    for j in range(ncols):
        if j in pivot_set:
            continue
        v = [0] * ncols
        v[j] = 1
        for i, pc in enumerate(pivots):
            v[pc] = fld.neg(rref[i][j])
        basis.append(v)
    return basis


def span_basis(fld: Field, vectors: Sequence[Vector]) -> Matrix:
    """Canonical (RREF) basis of the span of the given vectors."""
    return row_reduce(fld, [list(v) for v in vectors])[0]


def in_span(fld: Field, vectors: Sequence[Vector], v: Vector) -> bool:
    base = span_basis(fld, vectors)
    return len(row_reduce(fld, base + [list(v)])[1]) == len(base)


def solve(fld: Field, a: Matrix, b: Vector) -> Optional[Vector]:
    """One solution of a x = b, or None."""
    nc = len(a[0]) if a else 0
    aug = [row + [bv] for row, bv in zip(a, b)]
    rref, pivots = row_reduce(fld, aug)
    if nc in pivots:
        return None
    x = [0] * nc
    for i, pc in enumerate(pivots):
        x[pc] = rref[i][nc]
    return x


def inverse(fld: Field, a: Matrix) -> Matrix:
    n = len(a)
    aug = [row[:] + ident_row[:] for row, ident_row in zip(a, identity(fld, n))]
    rref, pivots = row_reduce(fld, aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in rref]


def random_invertible(fld: Field, n: int, rng) -> Matrix:
    while True:
        a = [[rng.randrange(fld.q) for _ in range(n)] for _ in range(n)]
        if rank(fld, a) == n:
            return a


__all__ = [
    "Field",
    "Matrix",
    "Vector",
    "ext_field_build",
    "prime_field",
    "enumerate_elements",
    "zeros",
    "identity",
    "mat_add",
    "mat_sub",
    "mat_scale",
    "mat_mul",
    "mat_vec",
    "mat_pow",
    "transpose",
    "is_zero_matrix",
    "row_reduce",
    "rank",
    "kernel_basis",
    "span_basis",
    "in_span",
    "solve",
    "inverse",
    "random_invertible",
]
