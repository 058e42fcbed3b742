"""The global p-nilpotent operator of a module, its specializations at
points of the one-parameter-subgroup variety, Jordan types, and constancy
reports."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Sequence, Tuple

from .field import (
    Field,
    Matrix,
    Vector,
    ext_field_build,
    identity,
    is_zero_matrix,
    kernel_basis,
    mat_mul,
    mat_pow,
    mat_vec,
    prime_field,
    rank,
    row_reduce,
    span_basis,
    zeros,
)
from .modules import ModuleRep, _divided_power_op, kron
from .polyring import Poly, PolyMatrix, Substitution, WeightedRing, generic_rank, substitute
from .schemes import (
    GroupSchemeDesc,
    Point,
    coord_ring,
    enumerate_points,
    generator_names,
    p1_chart,
    point_dim,
    sample_points,
    validate_point,
)


@dataclass
class ThetaMatrix:
    rep: ModuleRep
    ring: WeightedRing
    mat: PolyMatrix
    entry_degree: int

    @property
    def desc(self) -> GroupSchemeDesc:
        return self.rep.desc

    @property
    def dim(self) -> int:
        return self.rep.dim


def _multinomial_mod(total: int, parts: Sequence[int], p: int) -> int:
    num = math.factorial(total)
    for k in parts:
        num //= math.factorial(k)
    return num % p


def _poly_kron(ring: WeightedRing, a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    na, nb = a.nrows, b.nrows
    out = PolyMatrix.zero(ring, na * nb, a.ncols * b.ncols)
    for i in range(na):
        for j in range(a.ncols):
            f = a.rows[i][j]
            if f.is_zero():
                continue
            for k in range(nb):
                for l in range(b.ncols):
                    g = b.rows[k][l]
                    if not g.is_zero():
                        out.rows[i * nb + k][j * b.ncols + l] = f * g
    return out


def _matrix_times_poly(ring: WeightedRing, m: Matrix, f: Poly) -> PolyMatrix:
    rows = []
    for r in m:
        rows.append([f.scale(c) if c else ring.zero() for c in r])
    return PolyMatrix(ring, rows)


def theta_global(rep: ModuleRep) -> ThetaMatrix:
    """The universal operator of the module as a polynomial matrix over the
    coordinate ring of the ambient space of V(G)."""
    desc, fld = rep.desc, rep.fld
    p = desc.p
    ring, _ = coord_ring(desc, fld)
    n = rep.dim
    total = PolyMatrix.zero(ring, n, n)

    if desc.family == "multi_additive":
        for i in range(desc.r):
            total = total + _matrix_times_poly(ring, rep.action["X_%d" % i], ring.var(i))
        return ThetaMatrix(rep, ring, total, 1)

    if desc.family == "additive_kernel":
        r = desc.r
        target = p ** (r - 1)
        # exponent tuples (i_0..i_{r-1}) with sum_l i_l p^l = p^(r-1)
        def solutions(l: int, remaining: int, prefix: Tuple[int, ...]):
            if l == r - 1:
                w = p ** l
                if remaining % w == 0:
                    yield prefix + (remaining // w,)
                return
            w = p ** l
            for k in range(remaining // w + 1):
                yield from solutions(l + 1, remaining - k * w, prefix + (k,))

        for expo in solutions(0, target, ()):
            i = sum(expo)
            c = _multinomial_mod(i, expo, p)
            if c == 0:
                continue
            op = _divided_power_op(rep, i)
            total = total + _matrix_times_poly(ring, op, ring.monomial(expo, c))
        return ThetaMatrix(rep, ring, total, p ** (r - 1))

    if desc.family == "restricted_lie":
        for i, nm in enumerate(generator_names(desc)):
            total = total + _matrix_times_poly(ring, rep.action[nm], ring.var(i))
        return ThetaMatrix(rep, ring, total, 1)

    if desc.family == "sl2_height2":
        x0, y0, z0, x1, y1, z1 = (ring.var(i) for i in range(6))
        total = total + _matrix_times_poly(ring, rep.action["e"], x1)
        total = total + _matrix_times_poly(ring, rep.action["f"], y1)
        total = total + _matrix_times_poly(ring, rep.action["h"], z1)
        total = total + _matrix_times_poly(ring, rep.action["e[p]"], x0 ** p)
        total = total + _matrix_times_poly(ring, rep.action["f[p]"], y0 ** p)
        total = total + _matrix_times_poly(ring, rep.action["h[p]"], z0 ** p)
        for i in range(p):
            for j in range(p - i + 1):
                l = p - i - j
                if j >= p or l >= p:
                    continue
                mono = x0 ** i * y0 ** j * z0 ** l
                total = total + _matrix_times_poly(ring, rep.action["d(%d,%d,%d)" % (i, j, l)], mono)
        return ThetaMatrix(rep, ring, total, p)

    # gln_height2
    nsize = desc.n
    a0 = PolyMatrix(ring, [[ring.var(i * nsize + j) for j in range(nsize)] for i in range(nsize)])
    a1 = PolyMatrix(
        ring,
        [[ring.var(nsize * nsize + i * nsize + j) for j in range(nsize)] for i in range(nsize)],
    )
    if rep.construction is None:
        raise ValueError("gln_height2 modules must be structural")
    if rep.construction[0] == "gln_natural":
        return ThetaMatrix(rep, ring, a1, p)
    d = rep.construction[1]
    # beta_f = a0^f / f! for f < p, beta_p = a1
    betas: List[PolyMatrix] = [PolyMatrix.identity(ring, nsize)]
    for f in range(1, p):
        inv_fact = pow(math.factorial(f) % p, p - 2, p)
        betas.append(betas[-1] * a0 if f > 1 else a0)
    for f in range(2, p):
        inv_fact = pow(math.factorial(f) % p, p - 2, p)
        betas[f] = betas[f].map_entries(lambda g: g.scale(inv_fact))
    betas.append(a1)
    # convolve tensor factors, tracking coefficients of T^0..T^p
    conv: List[PolyMatrix] = [betas[m] for m in range(p + 1)]
    for _ in range(1, d):
        new: List[PolyMatrix] = []
        for m in range(p + 1):
            acc = None
            for a in range(m + 1):
                term = _poly_kron(ring, conv[a], betas[m - a])
                acc = term if acc is None else acc + term
            new.append(acc)
        conv = new
    return ThetaMatrix(rep, ring, conv[p], p)


def theta_local(theta: ThetaMatrix, point: Sequence[int], fld: Optional[Field] = None,
                check: bool = True) -> Matrix:
    if fld is None:
        fld = theta.rep.fld
    if check and not validate_point(theta.desc, point, fld):
        raise ValueError("point %r is not on V(%s)" % (tuple(point), theta.desc.label()))
    return theta.mat.evaluate(point, fld)


# ---------------------------------------------------------------------------
# Jordan types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class JordanType:
    p: int
    counts: Tuple[int, ...]  # counts[i-1] = number of blocks of size i, i = 1..p

    @property
    def dim(self) -> int:
        return sum(i * a for i, a in enumerate(self.counts, start=1))

    def partition(self) -> Tuple[int, ...]:
        out: List[int] = []
        for size in range(self.p, 0, -1):
            out.extend([size] * self.counts[size - 1])
        return tuple(out)

    def block_count(self, size: int) -> int:
        return self.counts[size - 1]

    def __str__(self) -> str:
        bits = []
        for size in range(self.p, 0, -1):
            a = self.counts[size - 1]
            if a == 1:
                bits.append("[%d]" % size)
            elif a > 1:
                bits.append("%d[%d]" % (a, size))
        return " + ".join(bits) if bits else "0"


def jordan_type(fld: Field, n: Matrix, p: int) -> JordanType:
    """Jordan type of a p-nilpotent matrix from the rank sequence of its
    powers: a_i = r_{i-1} - 2 r_i + r_{i+1}."""
    dim = len(n)
    powers = [identity(fld, dim)]
    for _ in range(p + 1):
        powers.append(mat_mul(fld, powers[-1], n))
    if not is_zero_matrix(powers[p]):
        raise ValueError("matrix is not p-nilpotent (p = %d)" % p)
    ranks = [rank(fld, m) for m in powers]
    counts = tuple(ranks[i - 1] - 2 * ranks[i] + ranks[i + 1] for i in range(1, p + 1))
    return JordanType(p, counts)


def jordan_type_chain_oracle(fld: Field, n: Matrix, p: int) -> JordanType:
    """Independent route to the Jordan type: explicitly build Jordan chains
    top-down and count their lengths, with structural assertions."""
    dim = len(n)
    powers = [identity(fld, dim)]
    while not is_zero_matrix(powers[-1]):
        powers.append(mat_mul(fld, powers[-1], n))
        if len(powers) > dim + 1:
            raise ValueError("matrix is not nilpotent")
    height = len(powers) - 1  # smallest h with n^h = 0
    if height > p:
        raise ValueError("matrix is not p-nilpotent (p = %d)" % p)
    kernels = [span_basis(fld, kernel_basis(fld, pw, dim)) if not is_zero_matrix(pw)
               else [row[:] for row in identity(fld, dim)]
               for pw in powers]
    # kernels[i] = basis of ker(n^i); kernels[0] = empty
    kernels[0] = []
    chains: List[List[Vector]] = []
    tops_by_len: Dict[int, List[Vector]] = {}
    for h in range(height, 0, -1):
        # vectors of height exactly h modulo previously started chains:
        # complement of ker(n^{h-1}) + n * (tops of longer chains) in ker(n^h)
        shadow = [v for v in kernels[h - 1]]
        for length, tops in tops_by_len.items():
            if length > h:
                for v in tops:
                    w = v
                    for _ in range(length - h):
                        w = mat_vec(fld, n, w)
                    shadow.append(w)
        shadow_basis = span_basis(fld, shadow) if shadow else []
        current = list(shadow_basis)
        new_tops: List[Vector] = []
        for cand in kernels[h]:
            trial = span_basis(fld, current + [cand])
            if len(trial) > len(current):
                current = trial
                new_tops.append(cand)
        if new_tops:
            tops_by_len.setdefault(h, []).extend(new_tops)
        # demote the shadow vectors: n * tops of length h+1 become tops of
        # chains of remaining length h -- their chains continue below
    # build the chains explicitly and verify
    all_vectors: List[Vector] = []
    lengths: List[int] = []
    for h, tops in tops_by_len.items():
        for v in tops:
            chain = [v]
            for _ in range(h - 1):
                chain.append(mat_vec(fld, n, chain[-1]))
            assert all(any(x) for x in chain), "chain broke early"
            assert not any(mat_vec(fld, n, chain[-1])), "chain bottom not killed"
            lengths.append(h)
            all_vectors.extend(chain)
    assert len(all_vectors) == dim, "chain vectors do not fill the space"
    assert len(span_basis(fld, all_vectors)) == dim, "chain vectors are dependent"
    counts = [0] * p
    for h in lengths:
        counts[h - 1] += 1
    return JordanType(p, tuple(counts))


def local_jtype(theta: ThetaMatrix, point: Sequence[int], fld: Optional[Field] = None) -> JordanType:
    if fld is None:
        fld = theta.rep.fld
    return jordan_type(fld, theta_local(theta, point, fld), theta.desc.p)


def mj_fiber_dim(fld: Field, n: Matrix, p: int, j: int) -> int:
    """dim ker(n^j) / im(n^(p-j)) for a p-nilpotent matrix (the image is
    contained in the kernel, so this is a plain dimension difference)."""
    dim = len(n)
    nj = mat_pow(fld, n, j)
    npj = mat_pow(fld, n, p - j)
    ker_dim = dim - rank(fld, nj)
    # containment check: n^j * n^(p-j) = n^p = 0 automatically; verify anyway
    if not is_zero_matrix(mat_mul(fld, nj, npj)):
        raise ValueError("image not contained in kernel; matrix not p-nilpotent")
    return ker_dim - rank(fld, npj)


# ---------------------------------------------------------------------------
# constancy scans
# ---------------------------------------------------------------------------

_SCAN_LIMIT = 250_000
_SAMPLE_COUNT = 60


@dataclass
class ConstancyReport:
    j: int
    constant: bool
    rank: Optional[int]
    generic_rank: Optional[int]
    ranks_seen: Dict[int, Point]
    fields_scanned: List[Tuple[int, int]]
    points_scanned: int
    sampled: bool = False

    def witnesses(self) -> List[Tuple[int, Point]]:
        return sorted(self.ranks_seen.items())


def _scan_fields(desc: GroupSchemeDesc, base: Field, max_ext: int) -> List[Field]:
    flds = []
    for e in range(1, max_ext + 1):
        if base.e == 1:
            flds.append(ext_field_build(base.p, e))
        else:
            if e == 1:
                flds.append(base)
    return flds


def iter_scan_points(desc: GroupSchemeDesc, base: Field, max_ext: int,
                     rng: Optional[random.Random] = None):
    """Yield (field, point) pairs over extensions of degree <= max_ext,
    falling back to a seeded sample when full enumeration is too large."""
    if rng is None:
        rng = random.Random(0)
    for fld in _scan_fields(desc, base, max_ext):
        dim = point_dim(desc)
        if fld.q ** dim <= _SCAN_LIMIT:
            for point in enumerate_points(desc, fld):
                yield fld, point, False
        else:
            for point in sample_points(desc, fld, _SAMPLE_COUNT, rng):
                yield fld, point, True


def constant_jrank_report(theta: ThetaMatrix, j: int, max_ext: int = 2,
                          rng: Optional[random.Random] = None) -> ConstancyReport:
    """Scan the rank of the j-th power of the local operator over all points
    of V(G) with coordinates in extensions up to degree max_ext, and compare
    with the generic rank over a chart when one is available."""
    desc = theta.desc
    ranks_seen: Dict[int, Point] = {}
    fields: List[Tuple[int, int]] = []
    count = 0
    sampled = False
    for fld, point, was_sampled in iter_scan_points(desc, theta.rep.fld, max_ext, rng):
        sampled = sampled or was_sampled
        if (fld.p, fld.e) not in fields:
            fields.append((fld.p, fld.e))
        m = theta.mat.evaluate(point, fld)
        r = rank(fld, mat_pow(fld, m, j))
        count += 1
        if r not in ranks_seen:
            ranks_seen[r] = point
    gen = generic_jrank(theta, j)
    constant = len(ranks_seen) == 1 and (gen is None or gen in ranks_seen)
    return ConstancyReport(
        j=j,
        constant=constant,
        rank=next(iter(ranks_seen)) if len(ranks_seen) == 1 else None,
        generic_rank=gen,
        ranks_seen=ranks_seen,
        fields_scanned=fields,
        points_scanned=count,
        sampled=sampled,
    )


def generic_jrank(theta: ThetaMatrix, j: int) -> Optional[int]:
    """Rank of the j-th power of the global operator at the generic point,
    via fraction-free elimination.  Computed on the ambient ring when V(G)
    is an affine space and on the P^1 chart when one is built in; None
    otherwise."""
    desc = theta.desc
    if desc.family in ("multi_additive", "additive_kernel"):
        return generic_rank(theta.mat.power(j))
    chart = p1_chart(desc, theta.rep.fld)
    if chart is not None:
        return generic_rank(theta.mat.substitute(chart).power(j))
    return None


def jtype_scan(theta: ThetaMatrix, max_ext: int = 1,
               rng: Optional[random.Random] = None) -> Dict[JordanType, Point]:
    """Distinct local Jordan types with one witness point each."""
    seen: Dict[JordanType, Point] = {}
    for fld, point, _ in iter_scan_points(theta.desc, theta.rep.fld, max_ext, rng):
        jt = jordan_type(fld, theta.mat.evaluate(point, fld), theta.desc.p)
        if jt not in seen:
            seen[jt] = point
    return seen


def rank_variety_scan(theta: ThetaMatrix, j: int = 1, max_ext: int = 1,
                      rng: Optional[random.Random] = None) -> Dict[Point, int]:
    """Rank of the j-th power of the local operator at every scanned point
    (the locus of sub-maximal rank is the interesting part)."""
    out: Dict[Point, int] = {}
    for fld, point, _ in iter_scan_points(theta.desc, theta.rep.fld, max_ext, rng):
        if fld.e != 1:
            continue
        m = theta.mat.evaluate(point, fld)
        out[point] = rank(fld, mat_pow(fld, m, j))
    return out


def constant_kernel_image_property(theta: ThetaMatrix, j: int, max_ext: int = 1,
                                   rng: Optional[random.Random] = None):
    """Check whether ker and im of the j-th power of the local operator are
    the same subspace at every scanned point.  Returns a dict with the
    verdicts and witnesses."""
    kernels: List[Tuple[Point, Matrix]] = []
    images: List[Tuple[Point, Matrix]] = []
    for fld, point, _ in iter_scan_points(theta.desc, theta.rep.fld, max_ext, rng):
        if fld.e != 1:
            continue  # subspaces over different fields are not comparable
        m = mat_pow(fld, theta.mat.evaluate(point, fld), j)
        ker = span_basis(fld, kernel_basis(fld, m, theta.dim))
        img = span_basis(fld, [list(col) for col in zip(*m)])
        kernels.append((point, ker))
        images.append((point, img))
    ker_const = all(k == kernels[0][1] for _, k in kernels)
    img_const = all(im == images[0][1] for _, im in images)
    result = {
        "kernel_constant": ker_const,
        "image_constant": img_const,
        "kernel": kernels[0][1] if ker_const else None,
        "image": images[0][1] if img_const else None,
    }
    if not ker_const:
        diff = next((pt, k) for pt, k in kernels if k != kernels[0][1])
        result["kernel_witnesses"] = [kernels[0], diff]
    if not img_const:
        diff = next((pt, im) for pt, im in images if im != images[0][1])
        result["image_witnesses"] = [images[0], diff]
    return result


__all__ = [
    "ThetaMatrix",
    "JordanType",
    "ConstancyReport",
    "theta_global",
    "theta_local",
    "jordan_type",
    "jordan_type_chain_oracle",
    "local_jtype",
    "mj_fiber_dim",
    "iter_scan_points",
    "constant_jrank_report",
    "generic_jrank",
    "jtype_scan",
    "rank_variety_scan",
    "constant_kernel_image_property",
]
