"""Graded kernels and images of powers of the restricted operator on a
standard-graded P^1 chart, splitting types of the associated sheaves,
subquotients, global sections, projectivity and endotriviality tests, and
K-theory bookkeeping.

Degree conventions: the ambient module is free on generators in degree 0;
a generator of a graded submodule in degree d contributes a line-bundle
summand O(-d).  Components of a graded module in degree d are stored as
coefficient vectors of length n*(d+1), the block for ambient coordinate i
listing the coefficients of s^(d-k) t^k for k = 0..d.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .field import (
    Field,
    Matrix,
    Vector,
    kernel_basis,
    mat_pow,
    prime_field,
    rank,
    row_reduce,
    span_basis,
)
from .operators import ThetaMatrix, mj_fiber_dim, iter_scan_points, constant_jrank_report, ConstancyReport
from .polyring import Poly, PolyMatrix, Substitution, WeightedRing, monomial_basis
from .schemes import p1_chart


@dataclass
class P1Matrix:
    """A square polynomial matrix over k[s,t] with entries homogeneous of a
    common degree, obtained by restricting a global operator to a
    standard-graded P^1 chart of the projectivized subgroup variety."""

    ring: WeightedRing
    mat: PolyMatrix
    entry_degree: int
    p: int

    @property
    def size(self) -> int:
        return self.mat.nrows

    def nilpotency_degree(self) -> int:
        power = PolyMatrix.identity(self.ring, self.size)
        for k in range(1, self.p + 1):
            power = power * self.mat
            if power.is_zero():
                return k
        raise ValueError("restricted operator is not p-nilpotent")


def restrict_p1(theta: ThetaMatrix, chart: Optional[Substitution] = None) -> P1Matrix:
    """Restrict the global operator to a standard-graded P^1 chart.  The
    chart defaults to the built-in one (identity for the rank-2
    multi-additive group, the conic for sl2); raises when none exists."""
    if chart is None:
        chart = p1_chart(theta.desc, theta.rep.fld)
    if chart is None:
        raise ValueError(
            "no standard-graded P^1 chart is available for %s" % theta.desc.label()
        )
    mat = theta.mat.substitute(chart)
    degree = mat.entries_homogeneous_of_degree()
    if degree is None:
        raise ValueError("chart restriction is not homogeneous")
    if degree == 0 and mat.is_zero():
        degree = theta.entry_degree * chart.scale
    return P1Matrix(chart.target, mat, degree, theta.desc.p)


# ---------------------------------------------------------------------------
# graded components
# ---------------------------------------------------------------------------


def _component_layout(n: int, d: int) -> int:
    return n * (d + 1)


def _poly_vector_to_component(vec: Sequence[Poly], n: int, d: int) -> Vector:
    out = [0] * _component_layout(n, d)
    for i, f in enumerate(vec):
        for e, c in f.terms.items():
            k = e[1]
            out[i * (d + 1) + k] = c
    return out


def _component_to_poly_vector(ring: WeightedRing, v: Sequence[int], n: int, d: int) -> List[Poly]:
    out = []
    for i in range(n):
        terms = {}
        for k in range(d + 1):
            c = v[i * (d + 1) + k]
            if c:
                terms[(d - k, k)] = c
        out.append(Poly(ring, terms))
    return out


def _shift_map(fld: Field, n: int, d: int, a: int, b: int) -> Callable[[Vector], Vector]:
    """Multiplication by s^a t^b as a map of component vectors from degree d
    to degree d+a+b."""
    dd = d + a + b

    def apply(v: Vector) -> Vector:
        out = [0] * _component_layout(n, dd)
        for i in range(n):
            for k in range(d + 1):
                c = v[i * (d + 1) + k]
                if c:
                    out[i * (dd + 1) + k + b] = c
        return out

    return apply


def _matrix_component_map(b: P1Matrix, power_mat: PolyMatrix, deg_in: int, D: int) -> List[Vector]:
    """Columns: the images of the standard basis of the degree-deg_in
    component of the free module under the matrix (entries homogeneous of
    degree D), as component vectors of degree deg_in + D."""
    n = b.size
    dd = deg_in + D
    cols: List[Vector] = []
    for i in range(n):
        for k in range(deg_in + 1):
            out = [0] * _component_layout(n, dd)
            for r in range(n):
                f = power_mat.rows[r][i]
                for e, c in f.terms.items():
                    out[r * (dd + 1) + e[1] + k] = b.ring.fld.add(
                        out[r * (dd + 1) + e[1] + k], c
                    )
            cols.append(out)
    return cols


class ComponentModule:
    """A graded module presented degreewise: each component is a quotient
    (span of ``basis`` rows) / (span of ``sub`` rows) of component vectors
    in a common free ambient.  Supports the kernel, image, and subquotient
    modules of powers of a restricted operator."""

    def __init__(self, b: P1Matrix, ker_power: int = 0, im_power: Optional[int] = None,
                 label: str = ""):
        """ker_power = j > 0: components are ker(B^j)_d; im_power = q:
        subtract the degree-shifted image of B^q.  ker_power == 0 with
        im_power = q gives the image module of B^q itself."""
        self.b = b
        self.ker_power = ker_power
        self.im_power = im_power
        self.label = label
        self.fld = b.ring.fld
        self.n = b.size
        self._kmat = b.mat.power(ker_power) if ker_power else None
        self._imat = b.mat.power(im_power) if im_power else None
        if ker_power and im_power:
            prod = self._kmat * self._imat
            if not prod.is_zero():
                raise ValueError(
                    "image of power %d is not contained in kernel of power %d" % (im_power, ker_power)
                )
        self._cache: Dict[int, Tuple[Matrix, Matrix]] = {}

    def component(self, d: int) -> Tuple[Matrix, Matrix]:
        """(basis rows, sub rows) for degree d; the module component is the
        quotient of the two spans."""
        if d in self._cache:
            return self._cache[d]
        if d < 0:
            self._cache[d] = ([], [])
            return self._cache[d]
        n = self.n
        if self.ker_power:
            D = self.ker_power * self.b.entry_degree
            cols = _matrix_component_map(self.b, self._kmat, d, D)
            # kernel of the map sending a degree-d vector to its image
            rows = [[col[r] for col in cols] for r in range(_component_layout(n, d + D))]
            basis = span_basis(self.fld, kernel_basis(self.fld, rows, _component_layout(n, d)))
        else:
            basis = None
        sub: Matrix = []
        if self.im_power:
            Di = self.im_power * self.b.entry_degree
            src = d - Di
            if src >= 0:
                sub = span_basis(self.fld, _matrix_component_map(self.b, self._imat, src, Di))
        if basis is None:
            basis = sub
            sub = []
        self._cache[d] = (basis, sub)
        return self._cache[d]

    def dim(self, d: int) -> int:
        basis, sub = self.component(d)
        if not sub:
            return len(basis)
        return len(basis) - len(sub)

    def is_zero_element(self, d: int, v: Vector) -> bool:
        _, sub = self.component(d)
        if not any(v):
            return True
        if not sub:
            return False
        reduced = row_reduce(self.fld, sub + [list(v)])[1]
        return len(reduced) == len(row_reduce(self.fld, sub)[1])


# ---------------------------------------------------------------------------
# graded kernels and images with minimal generators
# ---------------------------------------------------------------------------


@dataclass
class GradedSubmodule:
    ring: WeightedRing
    ambient_rank: int
    generators: List[List[Poly]]
    degrees: List[int]
    hilbert: Dict[int, int]
    certified_free: bool
    stable_from: Optional[int]
    label: str = ""

    @property
    def rank(self) -> int:
        return len(self.generators)


def _free_hilbert(degrees: Sequence[int], d: int) -> int:
    return sum(max(0, d - g + 1) for g in degrees)


def kernel_graded(b: P1Matrix, j: int = 1) -> GradedSubmodule:
    """Minimal generators of the graded kernel of the j-th power of the
    restricted operator, found degree by degree.  Freeness is certified by
    matching the Hilbert function of the free module on the found
    generators over a stabilization window; the degree ceiling is
    entry_degree * ambient_rank + 2 j, doubled once if needed."""
    fld = b.ring.fld
    n = b.size
    comp = ComponentModule(b, ker_power=j)
    gens: List[Tuple[int, Vector]] = []  # (degree, component vector)
    hilbert: Dict[int, int] = {}
    ceiling = b.entry_degree * n + 2 * j
    stable: Optional[int] = None
    doubled = False
    while stable is None:
        for d in range(0, ceiling + 1):
            if d in hilbert:
                continue
            basis, _ = comp.component(d)
            hilbert[d] = len(basis)
            # span of (monomial multiples of) existing generators in degree d
            span_rows: List[Vector] = []
            for gd, gv in gens:
                if gd <= d:
                    for bexp in range(d - gd + 1):
                        span_rows.append(_shift_map(fld, n, gd, d - gd - bexp, bexp)(gv))
            current = span_basis(fld, span_rows) if span_rows else []
            for cand in basis:
                trial = span_basis(fld, list(current) + [cand])
                if len(trial) > len(current):
                    current = trial
                    gens.append((d, cand))
        # certificate: the Hilbert function agrees with the free module on
        # the found generators over the whole tail past their top degree
        top = max((g for g, _ in gens), default=0)
        degrees_found = [g for g, _ in gens]
        if ceiling >= top + 2 and all(
            hilbert[d] == _free_hilbert(degrees_found, d) for d in range(top + 1, ceiling + 1)
        ):
            stable = top + 1
            break
        if doubled:
            break
        ceiling *= 2
        doubled = True
    generators = [
        _component_to_poly_vector(b.ring, gv, n, gd) for gd, gv in gens
    ]
    return GradedSubmodule(
        ring=b.ring,
        ambient_rank=n,
        generators=generators,
        degrees=[gd for gd, _ in gens],
        hilbert=hilbert,
        certified_free=stable is not None,
        stable_from=stable,
        label="ker(theta^%d)" % j,
    )


def image_graded(b: P1Matrix, j: int = 1) -> GradedSubmodule:
    """Generators of the graded image of the j-th power: a maximal linearly
    independent set of columns, all in degree j * entry_degree."""
    fld = b.ring.fld
    n = b.size
    power = b.mat.power(j)
    D = j * b.entry_degree
    gens: List[Tuple[int, Vector]] = []
    current: Matrix = []
    for col in range(n):
        vec = [power.rows[r][col] for r in range(n)]
        cv = _poly_vector_to_component(vec, n, D)
        if not any(cv):
            continue
        trial = span_basis(fld, list(current) + [cv])
        if len(trial) > len(current):
            current = trial
            gens.append((D, cv))
    comp = ComponentModule(b, ker_power=0, im_power=j)
    hilbert = {d: comp.dim(d) for d in range(0, D + n + 2)}
    generators = [_component_to_poly_vector(b.ring, gv, n, gd) for gd, gv in gens]
    # the image module need not be free, so no freeness certificate here
    return GradedSubmodule(
        ring=b.ring,
        ambient_rank=n,
        generators=generators,
        degrees=[gd for gd, _ in gens],
        hilbert=hilbert,
        certified_free=False,
        stable_from=None,
        label="im(theta^%d)" % j,
    )


@dataclass
class SplittingType:
    """A direct sum of line bundles on P^1, recorded by twists in
    descending order."""

    twists: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.twists)

    @property
    def degree(self) -> int:
        return sum(self.twists)

    def __str__(self) -> str:
        if not self.twists:
            return "0"
        return " + ".join("O(%d)" % t for t in self.twists)


def splitting_type(sub: GradedSubmodule) -> SplittingType:
    """Splitting type of the sheaf of a certified-free graded submodule:
    a generator in degree d contributes O(-d)."""
    if not sub.certified_free:
        raise ValueError("splitting type from generators needs a certified free module")
    return SplittingType(tuple(sorted((-d for d in sub.degrees), reverse=True)))


# ---------------------------------------------------------------------------
# subquotients and sheaf identification from components
# ---------------------------------------------------------------------------


@dataclass
class SheafReport:
    fiber_rank: Optional[int]
    degree: Optional[int]
    splitting: Optional[SplittingType]
    stable_from: Optional[int]
    hilbert: Dict[int, int]
    note: str = ""


def _stable_rank_degree(comp: ComponentModule, max_degree: int) -> Tuple[Optional[int], Optional[int], Optional[int], Dict[int, int]]:
    """Find the smallest d0 >= 1 with dim(d) exactly linear, dim(d) = r*d + c,
    from d0 through max_degree (a window of at least 4 degrees); return
    (r, c - r, d0, hilbert).  The degree of the sheaf is c - r since in the
    stable range dim(d) = r*(d+1) + deg."""
    hilbert: Dict[int, int] = {d: comp.dim(d) for d in range(0, max_degree + 1)}
    for d0 in range(1, max_degree - 3):
        diffs = {hilbert[d + 1] - hilbert[d] for d in range(d0, max_degree)}
        if len(diffs) == 1:
            r = diffs.pop()
            c = hilbert[d0] - r * d0
            return r, c - r, d0, hilbert
    return None, None, None, hilbert


def _twisted_sections_dim(comp: ComponentModule, d: int, bound: int) -> int:
    """dim H^0 of the sheaf of the module twisted by O(d), by two-chart
    gluing with denominator exponent ``bound``."""
    fld = comp.fld
    n = comp.n
    dd = d + bound
    if dd < 0:
        return 0
    basis, _ = comp.component(dd)
    k = len(basis)
    if k == 0:
        return 0
    E = bound
    W = dd + bound + 2 * E

    big_basis, big_sub = comp.component(W)

    def reduce_rows(rows: Matrix) -> Tuple[Matrix, List[int]]:
        return row_reduce(fld, rows)

    sub_rref, sub_pivots = reduce_rows(big_sub) if big_sub else ([], [])

    def residual(v: Vector) -> Vector:
        out = list(v)
        for rrow, pc in zip(sub_rref, sub_pivots):
            c = out[pc]
            if c:
                out = [fld.sub(x, fld.mul(c, y)) for x, y in zip(out, rrow)]
        return out

    # map (a, b) -> (st)^E ( t^bound a - s^bound b ) reduced mod the sub
    shift_a = _shift_map(fld, n, dd, E, bound + E)
    shift_b = _shift_map(fld, n, dd, bound + E, E)
    cols: List[Vector] = []
    for v in basis:
        cols.append(residual(shift_a(v)))
    for v in basis:
        w = shift_b(v)
        cols.append(residual([fld.neg(x) for x in w]))
    rows = [[col[r] for col in cols] for r in range(len(cols[0]))] if cols else []
    sols = kernel_basis(fld, rows, 2 * k) if rows else []
    if not sols:
        return 0
    # quotient by pairs representing the zero section: s-power kills a and
    # t-power kills b
    Wa = dd + 2 * E
    basis_a, sub_a = comp.component(Wa)
    a_rref, a_piv = (row_reduce(fld, sub_a) if sub_a else ([], []))

    def residual_at(v: Vector, rref, piv) -> Vector:
        out = list(v)
        for rrow, pc in zip(rref, piv):
            c = out[pc]
            if c:
                out = [fld.sub(x, fld.mul(c, y)) for x, y in zip(out, rrow)]
        return out

    shift_sa = _shift_map(fld, n, dd, 2 * E, 0)
    shift_tb = _shift_map(fld, n, dd, 0, 2 * E)
    zero_rows: List[Vector] = []
    for sol in sols:
        a_part = sol[:k]
        b_part = sol[k:]
        va = [0] * len(basis[0])
        vb = [0] * len(basis[0])
        for c, bv in zip(a_part, basis):
            if c:
                va = [fld.add(x, fld.mul(c, y)) for x, y in zip(va, bv)]
        for c, bv in zip(b_part, basis):
            if c:
                vb = [fld.add(x, fld.mul(c, y)) for x, y in zip(vb, bv)]
        ra = residual_at(shift_sa(va), a_rref, a_piv)
        rb = residual_at(shift_tb(vb), a_rref, a_piv)
        zero_rows.append(ra + rb)
    # sections = compatible pairs modulo pairs vanishing on both charts;
    # the dimension is the rank of the chartwise evaluation of the solutions
    return len(row_reduce(fld, zero_rows)[1]) if zero_rows else 0


def subquotient_mj(b: P1Matrix, j: int, im_power: Optional[int] = None,
                   max_degree: Optional[int] = None) -> SheafReport:
    """The sheaf ker(B^j)/im(B^(p-j)) (im_power overrides p-j, e.g. for
    operators of nilpotency degree < p).  Identifies the splitting type for
    fiber rank <= 2 via stable Hilbert data plus two-chart section counts;
    larger ranks are reported by rank and degree only."""
    p = b.p
    if im_power is None:
        im_power = p - j
    comp = ComponentModule(b, ker_power=j, im_power=im_power)
    if max_degree is None:
        max_degree = b.entry_degree * (b.size + j + im_power) + 6
    r, deg, d0, hilbert = _stable_rank_degree(comp, max_degree)
    if r is None:
        return SheafReport(None, None, None, None, hilbert, note="hilbert did not stabilize")
    if r == 0:
        return SheafReport(0, 0, SplittingType(()), d0, hilbert)
    if r > 2:
        return SheafReport(r, deg, None, d0, hilbert, note="rank > 2: splitting not identified")
    if r == 1:
        # a line bundle is determined by its degree
        return SheafReport(1, deg, SplittingType((deg,)), d0, hilbert)
    top = _rank2_top_twist(comp, b, deg)
    if top is None:
        return SheafReport(r, deg, None, d0, hilbert, note="section scan inconclusive")
    other = deg - top
    if other > top:
        return SheafReport(r, deg, None, d0, hilbert, note="twist ordering inconsistent")
    return SheafReport(2, deg, SplittingType((top, other)), d0, hilbert)


def _rank2_top_twist(comp: ComponentModule, b: P1Matrix, deg: int) -> Optional[int]:
    """For a rank-2 sheaf O(a) + O(deg - a) with a >= deg - a, find a: walk
    the twist downward from -ceil(deg/2) (where sections certainly exist)
    until the two-chart section count hits zero."""
    bound = max(abs(deg) + 2 * b.entry_degree + 2, 4)
    d = -(deg // 2)
    limit = abs(deg) + b.entry_degree * b.size + 4
    prev_positive = None
    steps = 0
    while steps <= limit:
        h0 = _twisted_sections_dim(comp, d, bound)
        if h0 > 0:
            if _twisted_sections_dim(comp, d, 2 * bound) != h0:
                return None
            prev_positive = d
            d -= 1
            steps += 1
        else:
            if _twisted_sections_dim(comp, d, 2 * bound) != 0:
                return None
            return -prev_positive if prev_positive is not None else None
    return None


def image_sheaf_report(b: P1Matrix, j: int = 1, max_degree: Optional[int] = None) -> SheafReport:
    """Rank/degree/splitting (rank <= 2) of the sheaf of the graded image
    of the j-th power."""
    comp = ComponentModule(b, ker_power=0, im_power=j)
    if max_degree is None:
        max_degree = b.entry_degree * (b.size + j) + 6
    r, deg, d0, hilbert = _stable_rank_degree(comp, max_degree)
    if r is None or r > 2:
        return SheafReport(r, deg, None, d0, hilbert,
                           note="" if r is not None else "hilbert did not stabilize")
    if r == 0:
        return SheafReport(0, 0, SplittingType(()), d0, hilbert)
    if r == 1:
        return SheafReport(1, deg, SplittingType((deg,)), d0, hilbert)
    top = _rank2_top_twist(comp, b, deg)
    if top is None:
        return SheafReport(r, deg, None, d0, hilbert, note="section scan inconclusive")
    return SheafReport(2, deg, SplittingType((top, deg - top)), d0, hilbert)


# ---------------------------------------------------------------------------
# global sections over the full subgroup variety
# ---------------------------------------------------------------------------


def global_sections(theta: ThetaMatrix, j: int = 1) -> Tuple[List[Vector], str]:
    """Basis of {m in M : theta^j (m x 1) = 0 on V(G)} and a note recording
    the route.  Supported when V(G) is an affine space (polynomial identity)
    or for built-in sl2 with p odd (via the dominant conic chart)."""
    desc = theta.desc
    fld = theta.rep.fld
    if desc.family in ("multi_additive", "additive_kernel"):
        power = theta.mat.power(j)
        note = "polynomial identity over the affine variety"
    elif desc.family == "restricted_lie" and desc.lie is None and desc.p != 2:
        chart = p1_chart(desc, fld)
        power = theta.mat.substitute(chart).power(j)
        note = "via the dominant conic chart"
    else:
        raise NotImplementedError(
            "global sections need an affine V(G) or the sl2 conic chart"
        )
    n = theta.dim
    monomials = set()
    for r in range(n):
        for c in range(n):
            monomials.update(power.rows[r][c].terms.keys())
    monomials = sorted(monomials)
    rows: List[Vector] = []
    for r in range(n):
        for e in monomials:
            row = [power.rows[r][c].terms.get(e, 0) for c in range(n)]
            if any(row):
                rows.append(row)
    basis = kernel_basis(fld, rows, n) if rows else [
        [1 if i == t else 0 for t in range(n)] for i in range(n)
    ]
    return span_basis(fld, basis) if basis else [], note


# ---------------------------------------------------------------------------
# projectivity / endotriviality, K-theory
# ---------------------------------------------------------------------------


@dataclass
class BundleTestReport:
    verdict: bool
    fiber_dims: Dict[int, Tuple[Tuple[int, ...], int]]
    rank_reports: List[ConstancyReport]
    note: str = ""


def projectivity_test(theta: ThetaMatrix, max_ext: int = 1) -> BundleTestReport:
    """A module is projective iff the rank of every power of the local
    operator is constant and the fiber of ker/im at j = 1 vanishes
    everywhere."""
    p = theta.desc.p
    reports = [constant_jrank_report(theta, j, max_ext=max_ext) for j in (1, p - 1)]
    fiber: Dict[int, Tuple[Tuple[int, ...], int]] = {}
    ok = all(r.constant for r in reports)
    worst = 0
    for fld, point, _ in iter_scan_points(theta.desc, theta.rep.fld, max_ext):
        m = theta.mat.evaluate(point, fld)
        dim1 = mj_fiber_dim(fld, m, p, 1)
        if dim1 != 0:
            fiber[dim1] = (point, dim1)
            worst = max(worst, dim1)
    verdict = ok and worst == 0
    return BundleTestReport(verdict, fiber, reports)


def endotrivial_test(theta: ThetaMatrix, max_ext: int = 1) -> BundleTestReport:
    """A module of constant Jordan type is endotrivial iff the fiber of the
    j = 1 subquotient is one-dimensional at every point."""
    p = theta.desc.p
    reports = [constant_jrank_report(theta, j, max_ext=max_ext) for j in range(1, p)]
    fiber: Dict[int, Tuple[Tuple[int, ...], int]] = {}
    dims = set()
    for fld, point, _ in iter_scan_points(theta.desc, theta.rep.fld, max_ext):
        m = theta.mat.evaluate(point, fld)
        dim1 = mj_fiber_dim(fld, m, p, 1)
        dims.add(dim1)
        fiber.setdefault(dim1, (point, dim1))
    verdict = all(r.constant for r in reports) and dims == {1}
    return BundleTestReport(verdict, fiber, reports)


@dataclass(frozen=True)
class K0Class:
    """Class in K_0(P^1) written a*[O] + b*[O(1)]; every [O(n)] decomposes
    as n*[O(1)] - (n-1)*[O]."""

    c0: int
    c1: int

    @property
    def rank(self) -> int:
        return self.c0 + self.c1

    @property
    def degree(self) -> int:
        return self.c1

    def __add__(self, other: "K0Class") -> "K0Class":
        return K0Class(self.c0 + other.c0, self.c1 + other.c1)

    def __sub__(self, other: "K0Class") -> "K0Class":
        return K0Class(self.c0 - other.c0, self.c1 - other.c1)

    def twist(self, m: int) -> "K0Class":
        a, b = self.c0, self.c1
        return K0Class(-a * (m - 1) - b * m, a * m + b * (m + 1))

    def __str__(self) -> str:
        return "%d[O] + %d[O(1)]" % (self.c0, self.c1)


def k0_class(obj) -> K0Class:
    """K-theory class of a splitting type (or of anything with one)."""
    if isinstance(obj, GradedSubmodule):
        obj = splitting_type(obj)
    if isinstance(obj, SheafReport):
        if obj.splitting is None:
            raise ValueError("no splitting identified")
        obj = obj.splitting
    total = K0Class(0, 0)
    for n in obj.twists:
        total = total + K0Class(-(n - 1), n)
    return total


def rho_kappa_matrix(p: int) -> List[List[int]]:
    """Matrix with rows j = 1..p and columns lam = 0..p-1 whose entries are
    the dimensions of the spaces of global sections of ker(theta^j) on the
    projective cover of the weight-lam simple sl2-module."""
    from .modules import principal_indecomposable_sl2
    from .operators import theta_global

    out: List[List[int]] = []
    thetas = [theta_global(principal_indecomposable_sl2(lam, p)) for lam in range(p)]
    for j in range(1, p + 1):
        row = []
        for lam in range(p):
            basis, _ = global_sections(thetas[lam], j)
            row.append(len(basis))
        out.append(row)
    return out


__all__ = [
    "P1Matrix",
    "GradedSubmodule",
    "SplittingType",
    "SheafReport",
    "BundleTestReport",
    "K0Class",
    "ComponentModule",
    "restrict_p1",
    "kernel_graded",
    "image_graded",
    "splitting_type",
    "subquotient_mj",
    "image_sheaf_report",
    "global_sections",
    "projectivity_test",
    "endotrivial_test",
    "k0_class",
    "rho_kappa_matrix",
]
