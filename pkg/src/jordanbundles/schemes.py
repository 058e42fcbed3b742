"""Descriptors for the supported infinitesimal group scheme families and
their one-parameter-subgroup varieties.

Supported families:

* ``multi_additive`` -- r-fold product of the first Frobenius kernel of the
  additive group; coordinates u_0..u_{r-1}, all of weight 1.
* ``additive_kernel`` -- r-th Frobenius kernel of the additive group;
  coordinates x_0..x_{r-1}, with x_i of weight p^i.
* ``restricted_lie`` -- first Frobenius kernel attached to a restricted Lie
  algebra.  sl2 is built in; arbitrary algebras can be given by structure
  constants, in which case the defining equations of the p-nilpotent cone
  are derived from Jacobson's formula.
* ``sl2_height2`` -- second Frobenius kernel of SL2 (p odd); coordinates
  x_0,y_0,z_0 of weight 1 and x_1,y_1,z_1 of weight p.
* ``gln_height2`` -- second Frobenius kernel of GL_n (n <= 3); coordinates
  two n x n matrices of variables, of weights 1 and p.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .field import (
    Field,
    Matrix,
    enumerate_elements,
    is_zero_matrix,
    mat_mul,
    mat_pow,
    mat_sub,
    prime_field,
)
from .polyring import Poly, PolyMatrix, Substitution, WeightedRing, poly_eval

FAMILIES = ("multi_additive", "additive_kernel", "restricted_lie", "sl2_height2", "gln_height2")


@dataclass(frozen=True)
class LieData:
    """A restricted Lie algebra by structure constants.

    ``bracket[(i, j)]`` is the coordinate vector of [x_i, x_j] for i < j
    (the other half follows by antisymmetry); ``ppower[i]`` is the
    coordinate vector of x_i^[p].  Coordinates are prime-field integers.
    """

    names: Tuple[str, ...]
    bracket: Tuple[Tuple[int, int, Tuple[int, ...]], ...]
    ppower: Tuple[Tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.names)

    def bracket_map(self) -> Dict[Tuple[int, int], Tuple[int, ...]]:
        return {(i, j): v for i, j, v in self.bracket}


def sl2_lie_data() -> LieData:
    """sl2 with basis e, f, h: [e,f]=h, [h,e]=2e, [h,f]=-2f, e^[p]=f^[p]=0,
    h^[p]=h."""
    return LieData(
        names=("e", "f", "h"),
        bracket=(
            (0, 1, (0, 0, 1)),      # [e,f] = h
            (0, 2, (-2, 0, 0)),     # [e,h] = -2e
            (1, 2, (0, 2, 0)),      # [f,h] = 2f
        ),
        ppower=((0, 0, 0), (0, 0, 0), (0, 0, 1)),
    )


@dataclass(frozen=True)
class GroupSchemeDesc:
    family: str
    p: int
    r: int = 1                    # height parameter for the additive families
    n: int = 2                    # matrix size for gln_height2
    lie: Optional[LieData] = None  # structure data for restricted_lie

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError("unknown family %r" % self.family)
        if self.family in ("multi_additive", "additive_kernel") and self.r < 1:
            raise ValueError("r must be >= 1")
        if self.family == "gln_height2" and not 2 <= self.n <= 3:
            raise ValueError("gln_height2 supports n in {2, 3}")
        if self.family == "sl2_height2" and self.p == 2:
            raise ValueError("sl2_height2 requires p odd")

    @property
    def height(self) -> int:
        return {"multi_additive": 1, "additive_kernel": self.r,
                "restricted_lie": 1, "sl2_height2": 2, "gln_height2": 2}[self.family]

    def label(self) -> str:
        if self.family == "multi_additive":
            return "Ga(1)^x%d" % self.r
        if self.family == "additive_kernel":
            return "Ga(%d)" % self.r
        if self.family == "restricted_lie":
            return "Lie(%s)" % ("sl2" if self.lie is None else ",".join(self.lie.names))
        if self.family == "sl2_height2":
            return "SL2(2)"
        return "GL%d(2)" % self.n


def multi_additive(p: int, r: int) -> GroupSchemeDesc:
    return GroupSchemeDesc("multi_additive", p, r=r)


def additive_kernel(p: int, r: int) -> GroupSchemeDesc:
    return GroupSchemeDesc("additive_kernel", p, r=r)


def restricted_lie_sl2(p: int) -> GroupSchemeDesc:
    return GroupSchemeDesc("restricted_lie", p)


def restricted_lie(p: int, lie: LieData) -> GroupSchemeDesc:
    return GroupSchemeDesc("restricted_lie", p, lie=lie)


def sl2_height2(p: int) -> GroupSchemeDesc:
    return GroupSchemeDesc("sl2_height2", p)


def gln_height2(p: int, n: int) -> GroupSchemeDesc:
    return GroupSchemeDesc("gln_height2", p, n=n)


# ---------------------------------------------------------------------------
# algebra generators acted on by modules
# ---------------------------------------------------------------------------


def generator_names(desc: GroupSchemeDesc) -> Tuple[str, ...]:
    """Names of the distribution-algebra generators whose actions a module
    must supply (gln_height2 modules are built from the natural module
    instead, so no generator list is exposed for it)."""
    if desc.family == "multi_additive":
        return tuple("X_%d" % i for i in range(desc.r))
    if desc.family == "additive_kernel":
        return tuple("u_%d" % i for i in range(desc.r))
    if desc.family == "restricted_lie":
        return ("e", "f", "h") if desc.lie is None else desc.lie.names
    if desc.family == "sl2_height2":
        names = ["e", "f", "h", "e[p]", "f[p]", "h[p]"]
        p = desc.p
        for i in range(p):
            for j in range(p - i + 1):
                l = p - i - j
                if l < p and (i, j, l) not in ((p, 0, 0), (0, p, 0), (0, 0, p)):
                    names.append("d(%d,%d,%d)" % (i, j, l))
        return tuple(names)
    raise ValueError("gln_height2 has no explicit generator list")


# ---------------------------------------------------------------------------
# coordinate rings of the one-parameter-subgroup varieties
# ---------------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def coord_ring(desc: GroupSchemeDesc, fld: Optional[Field] = None) -> Tuple[WeightedRing, List[Poly]]:
    """The weighted polynomial ring of the ambient affine space of V(G),
    together with the defining relations of V(G) inside it."""
    if fld is None:
        fld = prime_field(desc.p)
    p = desc.p
    if desc.family == "multi_additive":
        ring = WeightedRing(fld, tuple("u_%d" % i for i in range(desc.r)), (1,) * desc.r)
        return ring, []
    if desc.family == "additive_kernel":
        ring = WeightedRing(
            fld,
            tuple("x_%d" % i for i in range(desc.r)),
            tuple(p ** i for i in range(desc.r)),
        )
        return ring, []
    if desc.family == "restricted_lie":
        if desc.lie is None:
            ring = WeightedRing(fld, ("x", "y", "z"), (1, 1, 1))
            x, y, z = ring.var(0), ring.var(1), ring.var(2)
            return ring, [x * y + z * z]
        ring = WeightedRing(
            fld, tuple("c_%s" % nm for nm in desc.lie.names), (1,) * desc.lie.dim
        )
        return ring, [f for f in generic_p_power(desc.lie, p, ring) if not f.is_zero()]
    if desc.family == "sl2_height2":
        ring = WeightedRing(
            fld, ("x_0", "y_0", "z_0", "x_1", "y_1", "z_1"), (1, 1, 1, p, p, p)
        )
        x0, y0, z0, x1, y1, z1 = (ring.var(i) for i in range(6))
        rels = [
            x0 * y0 + z0 * z0,
            x1 * y1 + z1 * z1,
            x0 * y1 - x1 * y0,
            z0 * y1 - z1 * y0,
            x0 * z1 - x1 * z0,
        ]
        return ring, rels
    # gln_height2
    n = desc.n
    names = tuple("a%d_%d%d" % (lvl, i, j) for lvl in (0, 1) for i in range(n) for j in range(n))
    weights = (1,) * (n * n) + (p,) * (n * n)
    ring = WeightedRing(fld, names, weights)
    rels: List[Poly] = []
    a0 = PolyMatrix(ring, [[ring.var(i * n + j) for j in range(n)] for i in range(n)])
    a1 = PolyMatrix(ring, [[ring.var(n * n + i * n + j) for j in range(n)] for i in range(n)])
    comm = a0 * a1
    anti = a1 * a0
    for i in range(n):
        for j in range(n):
            f = comm.rows[i][j] - anti.rows[i][j]
            if not f.is_zero():
                rels.append(f)
    for mat in (a0, a1):
        powed = mat.power(p)
        for i in range(n):
            for j in range(n):
                if not powed.rows[i][j].is_zero():
                    rels.append(powed.rows[i][j])
    return ring, rels


def generic_p_power(lie: LieData, p: int, ring: WeightedRing) -> List[Poly]:
    """Coordinates of (sum_i c_i x_i)^[p] as polynomials in c_0..c_{n-1},
    via Jacobson's formula applied one summand at a time."""
    n = lie.dim
    fld = ring.fld
    br = lie.bracket_map()

    # work in ring extended by a formal parameter t
    tring = WeightedRing(fld, ring.names + ("t",), ring.weights + (1,))
    t_index = n

    def lift(v: List[Poly]) -> List[Poly]:
        out = []
        for f in v:
            out.append(Poly(tring, {e + (0,): c for e, c in f.terms.items()}))
        return out

    def drop_t(f: Poly) -> Poly:
        out: Dict[tuple, int] = {}
        for e, c in f.terms.items():
            if e[t_index] != 0:
                raise ArithmeticError("unexpected residual parameter")
            out[e[:t_index]] = c
        return Poly(ring, out)

    def bracket_vec(a: List[Poly], b: List[Poly]) -> List[Poly]:
        rng = a[0].ring
        out = [rng.zero() for _ in range(n)]
        for i in range(n):
            for j in range(n):
                if i == j or a[i].is_zero() or b[j].is_zero():
                    continue
                if i < j:
                    sc = br.get((i, j))
                    sign = 1
                else:
                    sc = br.get((j, i))
                    sign = -1
                if sc is None:
                    continue
                coeff = a[i] * b[j]
                for k, ck in enumerate(sc):
                    ck = (sign * ck) % fld.p
                    if ck:
                        out[k] = out[k] + coeff.scale(ck)
        return out

    total = [ring.zero() for _ in range(n)]
    # p-semilinear part: (c_j x_j)^[p] = c_j^p x_j^[p]
    for j in range(n):
        cjp = ring.var(j) ** p
        for k, ck in enumerate(lie.ppower[j]):
            ck %= fld.p
            if ck:
                total[k] = total[k] + cjp.scale(ck)
    # Jacobson corrections while adding c_j x_j to the partial sum
    partial = [ring.zero() for _ in range(n)]
    for j in range(n):
        a = [ring.zero() for _ in range(n)]
        a[j] = ring.var(j)
        if j > 0:
            a_t = lift(a)
            b_t = lift(partial)
            ta = [f * tring.var(t_index) for f in a_t]
            tv = [x + y for x, y in zip(ta, b_t)]  # t*a + b
            w = a_t
            for _ in range(p - 1):
                w = bracket_vec(tv, w)
            # w = ad_{ta+b}^{p-1}(a); s_i has i * s_i = coeff of t^{i-1}
            for i in range(1, p):
                inv_i = pow(i, fld.p - 2, fld.p)
                for k in range(n):
                    coeffs: Dict[tuple, int] = {}
                    for e, c in w[k].terms.items():
                        if e[t_index] == i - 1:
                            coeffs[e[:t_index]] = c
                    if coeffs:
                        total[k] = total[k] + Poly(ring, coeffs).scale(inv_i)
        partial = [x + y for x, y in zip(partial, a)]
    return total


# ---------------------------------------------------------------------------
# points
# ---------------------------------------------------------------------------

Point = Tuple[int, ...]


def point_dim(desc: GroupSchemeDesc) -> int:
    if desc.family in ("multi_additive", "additive_kernel"):
        return desc.r
    if desc.family == "restricted_lie":
        return 3 if desc.lie is None else desc.lie.dim
    if desc.family == "sl2_height2":
        return 6
    return 2 * desc.n * desc.n


def _trace_free_matrix(fld: Field, x: int, y: int, z: int) -> Matrix:
    return [[z, x], [y, fld.neg(z)]]


def validate_point(desc: GroupSchemeDesc, point: Sequence[int], fld: Optional[Field] = None) -> bool:
    """Membership of a point in V(G) over fld (defaults to the prime
    field)."""
    if fld is None:
        fld = prime_field(desc.p)
    point = tuple(point)
    if len(point) != point_dim(desc):
        raise ValueError("point has wrong length for %s" % desc.label())
    p = desc.p
    if desc.family in ("multi_additive", "additive_kernel"):
        return True
    if desc.family == "restricted_lie" and desc.lie is None:
        m = _trace_free_matrix(fld, point[0], point[1], point[2])
        return is_zero_matrix(mat_pow(fld, m, p))
    if desc.family == "restricted_lie":
        ring, rels = coord_ring(desc)
        return all(poly_eval(f, point, fld) == 0 for f in rels)
    if desc.family == "sl2_height2":
        ring, rels = coord_ring(desc)
        return all(poly_eval(f, point, fld) == 0 for f in rels)
    # gln_height2
    n = desc.n
    a0 = [list(point[i * n:(i + 1) * n]) for i in range(n)]
    a1 = [list(point[n * n + i * n:n * n + (i + 1) * n]) for i in range(n)]
    if not is_zero_matrix(mat_sub(fld, mat_mul(fld, a0, a1), mat_mul(fld, a1, a0))):
        return False
    return all(is_zero_matrix(mat_pow(fld, m, p)) for m in (a0, a1))


def sl2_height2_check_disagreements(desc: GroupSchemeDesc, fld: Field) -> List[Point]:
    """Points where the defining relations of V(SL2(2)) and the naive
    'commuting pair of p-nilpotent trace-free matrices' test disagree
    (empty for p odd)."""
    if desc.family != "sl2_height2":
        raise ValueError("sl2_height2 descriptor required")
    out: List[Point] = []
    ring, rels = coord_ring(desc)
    for point in itertools.product(range(fld.q), repeat=6):
        rel_ok = all(poly_eval(f, point, fld) == 0 for f in rels)
        m0 = _trace_free_matrix(fld, point[0], point[1], point[2])
        m1 = _trace_free_matrix(fld, point[3], point[4], point[5])
        naive_ok = (
            is_zero_matrix(mat_pow(fld, m0, desc.p))
            and is_zero_matrix(mat_pow(fld, m1, desc.p))
            and is_zero_matrix(mat_sub(fld, mat_mul(fld, m0, m1), mat_mul(fld, m1, m0)))
        )
        if rel_ok != naive_ok:
            out.append(point)
    return out


def enumerate_points(
    desc: GroupSchemeDesc,
    fld: Optional[Field] = None,
    include_zero: bool = False,
    limit: int = 2_000_000,
) -> Iterator[Point]:
    """All points of V(G)(fld) in lexicographic coordinate order."""
    if fld is None:
        fld = prime_field(desc.p)
    dim = point_dim(desc)
    if fld.q ** dim > limit:
        raise ValueError(
            "refusing to enumerate %d candidate points; use sample_points" % fld.q ** dim
        )
    for point in itertools.product(range(fld.q), repeat=dim):
        if not include_zero and not any(point):
            continue
        if validate_point(desc, point, fld):
            yield point


def sample_points(desc: GroupSchemeDesc, fld: Field, count: int, rng) -> List[Point]:
    """Seeded random sample of (not necessarily distinct) nonzero points."""
    out: List[Point] = []
    dim = point_dim(desc)
    attempts = 0
    while len(out) < count and attempts < 10000 * count:
        attempts += 1
        point = tuple(rng.randrange(fld.q) for _ in range(dim))
        if any(point) and validate_point(desc, point, fld):
            out.append(point)
    if len(out) < count:
        raise RuntimeError("could not sample enough points of %s" % desc.label())
    return out


def frobenius_point_map(desc: GroupSchemeDesc, point: Sequence[int], s: int, fld: Optional[Field] = None) -> Point:
    """Image of a point of V(G) under the s-th power of Frobenius: shift the
    coordinate blocks up by s heights and raise entries to the p^s."""
    if fld is None:
        fld = prime_field(desc.p)
    point = tuple(point)
    if s < 0:
        raise ValueError("s must be >= 0")
    if s == 0:
        return point
    if desc.family in ("multi_additive", "additive_kernel"):
        r = desc.r
        out = [0] * r
        for i in range(s, r):
            out[i] = fld.frobenius(point[i - s], s)
        return tuple(out)
    if desc.family == "restricted_lie":
        return (0,) * len(point)
    if desc.family == "sl2_height2":
        if s >= 2:
            return (0,) * 6
        return (0, 0, 0) + tuple(fld.frobenius(c, 1) for c in point[:3])
    n2 = desc.n * desc.n
    if s >= 2:
        return (0,) * (2 * n2)
    return (0,) * n2 + tuple(fld.frobenius(c, 1) for c in point[:n2])


# ---------------------------------------------------------------------------
# charts of the projectivized variety with standard grading
# ---------------------------------------------------------------------------


def st_ring(fld: Field) -> WeightedRing:
    return WeightedRing(fld, ("s", "t"), (1, 1))


def conic_chart_sl2(desc: GroupSchemeDesc, fld: Optional[Field] = None) -> Substitution:
    """The degree-2 parametrization (s, t) -> (s^2, -t^2, s*t) of the conic
    Proj of V(sl2); requires p odd."""
    if not (desc.family == "restricted_lie" and desc.lie is None):
        raise ValueError("built-in sl2 descriptor required")
    if desc.p == 2:
        raise ValueError("the conic chart requires p odd")
    if fld is None:
        fld = prime_field(desc.p)
    source, _ = coord_ring(desc, fld)
    target = st_ring(fld)
    s, t = target.var(0), target.var(1)
    return Substitution(source, target, (s * s, -(t * t), s * t), scale=2)


def identity_chart_rank2(desc: GroupSchemeDesc, fld: Optional[Field] = None) -> Substitution:
    """For a rank-2 multi-additive group the projectivized variety is all of
    P^1; the chart is the identity relabeling (u_0, u_1) -> (s, t)."""
    if desc.family != "multi_additive" or desc.r != 2:
        raise ValueError("rank-2 multi_additive descriptor required")
    if fld is None:
        fld = prime_field(desc.p)
    source, _ = coord_ring(desc, fld)
    target = st_ring(fld)
    return Substitution(source, target, (target.var(0), target.var(1)), scale=1)


def p1_chart(desc: GroupSchemeDesc, fld: Optional[Field] = None) -> Optional[Substitution]:
    """A standard-graded P^1 chart of the projectivized subgroup variety if
    one is built in: identity for rank-2 multi-additive, the conic for sl2."""
    if desc.family == "multi_additive" and desc.r == 2:
        return identity_chart_rank2(desc, fld)
    if desc.family == "restricted_lie" and desc.lie is None and desc.p != 2:
        return conic_chart_sl2(desc, fld)
    return None


__all__ = [
    "FAMILIES",
    "LieData",
    "GroupSchemeDesc",
    "Point",
    "sl2_lie_data",
    "multi_additive",
    "additive_kernel",
    "restricted_lie",
    "restricted_lie_sl2",
    "sl2_height2",
    "gln_height2",
    "generator_names",
    "coord_ring",
    "generic_p_power",
    "point_dim",
    "validate_point",
    "sl2_height2_check_disagreements",
    "enumerate_points",
    "sample_points",
    "frobenius_point_map",
    "st_ring",
    "conic_chart_sl2",
    "identity_chart_rank2",
    "p1_chart",
]
