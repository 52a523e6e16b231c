"""The static case database: every triple of the classification, with its
discrete-series parametrization, branching enumerator, Harish-Chandra closed
forms, relation set, transfer-map family, ranks, and generator degrees.

Records are fully declarative and round-trip through a versioned JSON document
(``catalog.json``), which is the single source of truth for the CLI and tests;
``build_records`` is the compiler that produces it.
"""

from __future__ import annotations

import dataclasses
import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from . import weights
from .linalg import AffineMap, Matrix, Vector, mat, mat_vec, vec
from .reps import (
    SO,
    SU,
    Sp,
    Spin,
    U,
    G2Group,
    GroupDescriptor,
    IrrepLabel,
    Named,
    ProductGroup,
)
from .weights import WeylType

CATALOG_SCHEMA = 1

TAG_ORDER = (
    "i",
    "i_prime",
    "ii_odd",
    "ii_even",
    "iii",
    "iv",
    "v",
    "v_prime",
    "vi",
    "vii",
    "viii",
    "ix",
    "x",
    "xi",
    "xii",
    "xiii",
    "xiii_prime",
    "xiv",
    "star",
)

PARAMETRIZED_TAGS = ("i", "i_prime", "ii_odd", "ii_even", "iii", "iv", "v", "v_prime")


@dataclass(frozen=True)
class CaseId:
    tag: str
    n: Optional[int] = None

    def __post_init__(self):
        if self.tag not in TAG_ORDER:
            raise ValueError("unknown case tag %r" % (self.tag,))

    def __str__(self):
        return self.tag if self.n is None else "%s[n=%d]" % (self.tag, self.n)

    def sort_key(self):
        return (TAG_ORDER.index(self.tag), self.n or 0)


@dataclass(frozen=True)
class DiscElement:
    case: CaseId
    params: tuple[int, ...]


@dataclass(frozen=True)
class Constraint:
    """sum(coeffs · params) + const >= 0, or == 0 mod ``mod`` when mod > 0."""

    coeffs: tuple[int, ...]
    const: int = 0
    mod: int = 0

    def value(self, params: Sequence[int]) -> int:
        return sum(c * p for c, p in zip(self.coeffs, params)) + self.const

    def ok(self, params: Sequence[int]) -> bool:
        v = self.value(params)
        return v % self.mod == 0 if self.mod else v >= 0


@dataclass(frozen=True)
class ParamSpace:
    names: tuple[str, ...]
    domains: tuple[str, ...]  # "nat" | "int"
    constraints: tuple[Constraint, ...] = ()

    def __post_init__(self):
        if len(self.names) != len(self.domains):
            raise ValueError("names/domains mismatch")

    def contains(self, params: Sequence[int]) -> bool:
        if len(params) != len(self.names):
            return False
        if any(not isinstance(p, int) and Fraction(p).denominator != 1 for p in params):
            return False
        params = [int(p) for p in params]
        for p, d in zip(params, self.domains):
            if d == "nat" and p < 0:
                return False
        return all(c.ok(params) for c in self.constraints)

    def enumerate(self, bound: int) -> list[tuple[int, ...]]:
        """All tuples with |coordinate| <= bound (nat: 0..bound), lex sorted.

        Depth-first with bound propagation through the linear constraints, so
        interlacing chains are enumerated without wasted work.
        """
        n = len(self.names)
        out: list[tuple[int, ...]] = []
        partial: list[int] = []

        def bounds_for(t: int) -> tuple[int, int]:
            lo = 0 if self.domains[t] == "nat" else -bound
            hi = bound
            for c in self.constraints:
                if c.mod or c.coeffs[t] == 0:
                    continue
                if any(c.coeffs[s] != 0 for s in range(t + 1, n)):
                    continue
                rest = sum(c.coeffs[s] * partial[s] for s in range(t)) + c.const
                a = c.coeffs[t]
                if a > 0:
                    # x >= ceil(-rest / a)
                    lo = max(lo, -(rest // a) if rest % a == 0 else (-rest + a - 1) // a)
                else:
                    # x <= floor(rest / -a)
                    hi = min(hi, rest // (-a))
            return lo, hi

        def rec(t: int):
            if t == n:
                p = tuple(partial)
                if all(c.ok(p) for c in self.constraints):
                    out.append(p)
                return
            lo, hi = bounds_for(t)
            for x in range(lo, hi + 1):
                partial.append(x)
                rec(t + 1)
                partial.pop()

        rec(0)
        return out


@dataclass(frozen=True)
class SymbolSpec:
    """How one generator evaluates on a discrete-series parameter tuple.

    kind "casimir": Casimir of the pi/nu/tau label (``factor`` selects a
        product factor; None sums all factors).
    kind "euler": normalized Euler eigenvalue (the paper's sqrt(-1)·a divided
        by the imaginary unit), an affine integer form in the parameters.
    kind "power_ab": base^k · sum of v_i^(scale·k) over the stored a/b vector.
    kind "power_nu": sum of (nu(theta)+rho)_i^(scale·k) — the Z(g_C) route.
    kind "theta_poly": explicit polynomial in the theta parameters.
    kind "xyz_poly": polynomial in x=(j+3)^2, y=(j'+3)^2, z=(a+3)^2 (§7 case).
    """

    kind: str
    side: str = ""  # "P" (dl Z(gtilde)), "Q" (dr Z(k)), "R" (dl Z(g))
    label: str = ""  # casimir: "pi" | "nu" | "tau"
    factor: Optional[int] = None
    form: Optional[AffineMap] = None  # euler
    vecname: str = ""  # power_ab: "a" | "b"
    base: int = 1
    scale: int = 1
    k: int = 1
    poly: tuple[tuple[tuple[int, ...], Fraction], ...] = ()
    imaginary_unit_normalized: bool = False


@dataclass(frozen=True)
class Relation:
    """Claims sum(coeff · symbol value) = 0 on every discrete-series element."""

    name: str
    terms: tuple[tuple[Fraction, str], ...]


@dataclass(frozen=True)
class CaseRecord:
    id: CaseId
    groups: dict  # display descriptors: gtilde, htilde, g, h, k
    pi_group: GroupDescriptor
    nu_group: GroupDescriptor
    tau_group: GroupDescriptor
    theta: ParamSpace
    pi_space: ParamSpace
    tau_space: ParamSpace
    pi_of_theta: AffineMap
    tau_of_theta: AffineMap
    pi_label_map: AffineMap
    nu_label_map: AffineMap
    tau_label_map: AffineMap
    lam_rhoa_map: AffineMap
    rho_a: Vector
    restricted_weyl: WeylType
    g_weyl: WeylType
    g_rho: Vector
    symbols: dict
    relations: tuple[Relation, ...]
    transfer_matrix: Matrix
    transfer_tau: Matrix
    transfer_offset: Vector
    rank3: tuple[int, int, int]
    degrees_p: tuple[int, ...]
    degrees_q: tuple[int, ...]
    degrees_rank: int
    hilbert_model: Optional[dict]
    indep_gens: tuple[str, ...]
    branch_rule: tuple
    a_map: Optional[AffineMap] = None
    b_map: Optional[AffineMap] = None
    ch: Optional[dict] = None
    mod_trace: bool = False
    parity_gap_gens: tuple[str, ...] = ()
    alias_of: Optional[CaseId] = None
    triality_note: str = ""

    # -- basic queries -----------------------------------------------------

    def theta_valid(self, params: Sequence[int]) -> bool:
        return self.theta.contains(params)

    def require_theta(self, params: Sequence[int]) -> tuple[int, ...]:
        params = tuple(int(p) for p in params)
        if not self.theta_valid(params):
            raise ValueError("%s is not in Disc(G/H) for case %s" % (params, self.id))
        return params

    def enumerate_disc(self, bound: int) -> list[DiscElement]:
        return [DiscElement(self.id, p) for p in self.theta.enumerate(bound)]

    def _ints(self, v: Vector) -> tuple[int, ...]:
        assert all(x.denominator == 1 for x in v), v
        return tuple(int(x) for x in v)

    def pi_params_of(self, theta: Sequence[int]) -> tuple[int, ...]:
        return self._ints(self.pi_of_theta.apply(theta))

    def tau_params_of(self, theta: Sequence[int]) -> tuple[int, ...]:
        return self._ints(self.tau_of_theta.apply(theta))

    def pi_label(self, pi_params: Sequence[int]) -> IrrepLabel:
        if not self.pi_space.contains(pi_params):
            raise ValueError("%s not in Disc(Gtilde/Htilde) for %s" % (pi_params, self.id))
        return IrrepLabel(self.pi_group, self.pi_label_map.apply(pi_params))

    def nu_label(self, theta: Sequence[int]) -> IrrepLabel:
        return IrrepLabel(self.nu_group, self.nu_label_map.apply(theta))

    def tau_label(self, tau_params: Sequence[int]) -> IrrepLabel:
        if not self.tau_space.contains(tau_params):
            raise ValueError("%s not in Disc(K/H) for %s" % (tau_params, self.id))
        return IrrepLabel(self.tau_group, self.tau_label_map.apply(tau_params))

    def pi_tau(self, theta: Sequence[int]) -> tuple[IrrepLabel, IrrepLabel]:
        theta = self.require_theta(theta)
        return (
            self.pi_label(self.pi_params_of(theta)),
            self.tau_label(self.tau_params_of(theta)),
        )

    def lambda_plus_rhoa(self, theta: Sequence[int]) -> Vector:
        return self.lam_rhoa_map.apply(theta)

    def nu_plus_rho(self, theta: Sequence[int]) -> Vector:
        nu = self.nu_label_map.apply(theta)
        return tuple(a + b for a, b in zip(nu, self.g_rho))

    # -- transfer ----------------------------------------------------------

    def transfer(self, tau_params: Sequence[int]) -> AffineMap:
        if not self.tau_space.contains(tau_params):
            raise ValueError("%s not in Disc(K/H) for %s" % (tau_params, self.id))
        offset = vec(
            tuple(
                o + x
                for o, x in zip(self.transfer_offset, mat_vec(self.transfer_tau, vec(tau_params)))
            )
        )
        return AffineMap(self.transfer_matrix, offset)

    # -- branching ---------------------------------------------------------

    def branch(self, pi_params: Sequence[int]) -> list[tuple[tuple[int, ...], IrrepLabel]]:
        if not self.pi_space.contains(pi_params):
            raise ValueError("%s not in Disc(Gtilde/Htilde) for %s" % (pi_params, self.id))
        pi_params = tuple(int(p) for p in pi_params)
        thetas = _branch_fibers(self.branch_rule, pi_params)
        out = []
        for t in sorted(thetas):
            if not self.theta_valid(t):
                raise AssertionError("branch rule produced invalid %s for %s" % (t, self.id))
            out.append((t, self.nu_label(t)))
        return out


# ---------------------------------------------------------------------------
# branch-rule enumerators (closed forms from the lemmas)


def _branch_fibers(rule: tuple, pi: tuple[int, ...]) -> list[tuple[int, ...]]:
    name = rule[0]
    if name == "charge_split":  # (i), (i)': H^j -> {(k, j-k)}
        (j,) = pi
        return [(k, j - k) for k in range(j + 1)]
    if name == "quaternion_split":  # (iii): H^{j,j} -> {(k, 2j-k) : j<=k<=2j}
        (j,) = pi
        return [(k, 2 * j - k) for k in range(j, 2 * j + 1)]
    if name == "sphere_sp1":  # (v): H^j -> {(k, j-k) : j/2 <= k <= j}
        (j,) = pi
        return [(k, j - k) for k in range((j + 1) // 2, j + 1)]
    if name == "sphere_sp1_u1":  # (v)'
        (j,) = pi
        out = []
        for k in range((j + 1) // 2, j + 1):
            m = 2 * k - j
            out.extend((k, j - k, b) for b in range(-m, m + 1, 2))
        return out
    if name == "parity_tail":  # (vi): k = j, j-2, ..., >= 0
        (j,) = pi
        return [(j, k) for k in range(j % 2, j + 1, 2)]
    if name == "tail_le":  # (vii): 0 <= k <= j
        (j,) = pi
        return [(j, k) for k in range(j + 1)]
    if name == "tail_le_charge":  # (viii)
        (j,) = pi
        return [(j, k, a) for k in range(j + 1) for a in range(-k, k + 1)]
    if name == "charge_pm":  # (ix): |k| <= j
        (j,) = pi
        return [(j, k) for k in range(-j, j + 1)]
    if name == "identity":  # (x), (xi)
        return [pi]
    if name == "triangle":  # (*): |j-j'| <= a <= j+j', parity
        j, jp = pi
        return [(j, jp, a) for a in range(abs(j - jp), j + jp + 1, 2)]
    if name == "interlace_ii_odd":  # (ii) odd: theta chain (j1,k1,...,jm)
        m = rule[1]
        j = pi
        ranges = [range(j[i + 1], j[i] + 1) for i in range(m - 1)]
        out = []
        for ks in itertools.product(*ranges):
            chain = []
            for i in range(m - 1):
                chain += [j[i], ks[i]]
            chain.append(j[m - 1])
            out.append(tuple(chain))
        return out
    if name == "interlace_ii_even":  # (ii) even: chain (j1,k1,...,jm,km)
        m = rule[1]
        j = pi
        ranges = [range(j[i + 1] if i + 1 < m else 0, j[i] + 1) for i in range(m)]
        out = []
        for ks in itertools.product(*ranges):
            chain = []
            for i in range(m):
                chain += [j[i], ks[i]]
            out.append(tuple(chain))
        return out
    if name == "interlace_iv":  # (iv): chain (j1,k1,...,jn,kn,j_{n+1}), integers
        n = rule[1]
        j = pi
        ranges = [range(j[i + 1], j[i] + 1) for i in range(n)]
        out = []
        for ks in itertools.product(*ranges):
            chain = []
            for i in range(n):
                chain += [j[i], ks[i]]
            chain.append(j[n])
            out.append(tuple(chain))
        return out
    raise ValueError("unknown branch rule %r" % (rule,))


# ---------------------------------------------------------------------------
# assembly helpers


def _row(names: Sequence[str], terms: dict, const=0) -> tuple[list, Fraction]:
    coeffs = [Fraction(terms.get(nm, 0)) for nm in names]
    return coeffs, Fraction(const)


def _amap(names: Sequence[str], rows: Sequence[tuple[dict, object]]) -> AffineMap:
    matrix, offset = [], []
    for terms, const in rows:
        coeffs, c = _row(names, terms, const)
        matrix.append(coeffs)
        offset.append(c)
    return AffineMap(mat(matrix), vec(offset), source=len(names))


def _con(names: Sequence[str], terms: dict, const=0, mod=0) -> Constraint:
    return Constraint(tuple(int(terms.get(nm, 0)) for nm in names), int(const), int(mod))


def _poly(d: dict) -> tuple[tuple[tuple[int, ...], Fraction], ...]:
    return tuple(sorted((tuple(k), Fraction(v)) for k, v in d.items()))


def _casimir(side, label, factor=None):
    return SymbolSpec("casimir", side=side, label=label, factor=factor)


def _euler(side, names, terms, const=0):
    return SymbolSpec(
        "euler",
        side=side,
        form=_amap(names, [(terms, const)]),
        imaginary_unit_normalized=True,
    )


def _rel(name, *terms) -> Relation:
    return Relation(name, tuple((Fraction(c), s) for c, s in terms))


def _weighted_model(*wts: int) -> dict:
    return {"kind": "weighted", "weights": list(wts)}


def _zeros(n):
    return [Fraction(0)] * n


def _transfer(lam_dim, tau_names, rows):
    """rows: list of (lam_terms: dict[int, coeff], tau_terms: dict[name, coeff], const)."""
    M, T, off = [], [], []
    for lam_terms, tau_terms, const in rows:
        M.append([Fraction(lam_terms.get(i, 0)) for i in range(lam_dim)])
        T.append([Fraction(tau_terms.get(nm, 0)) for nm in tau_names])
        off.append(Fraction(const))
    return mat(M), mat(T), vec(off)


def _sphere_ch(ambient_dim: int, block_starts=(0,)) -> dict:
    """CH data for (a product of) spheres: restricted roots e_1 per block."""
    roots = [[Fraction(1 if i == s else 0) for i in range(ambient_dim)] for s in block_starts]
    kill = [
        [Fraction(1 if i == j else 0) for i in range(ambient_dim)]
        for j in range(ambient_dim)
        if j not in block_starts
    ]
    return {"restricted_pos": roots, "kill": kill}


# ---------------------------------------------------------------------------
# case builders


def _case_i(n: int) -> CaseRecord:
    names = ("k", "l")
    theta = ParamSpace(names, ("nat", "nat"))
    pi_space = ParamSpace(("j",), ("nat",))
    tau_space = ParamSpace(("a",), ("int",))
    N = n + 1
    pi_label = _amap(("j",), [({"j": 1}, 0)] + [({}, 0)] * n)
    nu_rows = [({"k": 1}, 0)] + [({}, 0)] * (n - 1) + [({"l": -1}, 0)]
    tau_rows = [({}, 0)] * n + [({"a": 1}, 0)]
    M, T, off = _transfer(
        1,
        ("a",),
        [({0: Fraction(1, 2)}, {"a": Fraction(1, 2)}, 0)]
        + [({}, {}, Fraction(n - 2 * i, 2)) for i in range(1, n)]
        + [({0: Fraction(-1, 2)}, {"a": Fraction(1, 2)}, 0)],
    )
    return CaseRecord(
        id=CaseId("i", n),
        groups={
            "gtilde": SO(2 * n + 2),
            "htilde": SO(2 * n + 1),
            "g": U(n + 1),
            "h": U(n),
            "k": ProductGroup(U(n), U(1)),
        },
        pi_group=SO(2 * n + 2),
        nu_group=U(n + 1),
        tau_group=ProductGroup(U(n), U(1)),
        theta=theta,
        pi_space=pi_space,
        tau_space=tau_space,
        pi_of_theta=_amap(names, [({"k": 1, "l": 1}, 0)]),
        tau_of_theta=_amap(names, [({"k": 1, "l": -1}, 0)]),
        pi_label_map=pi_label,
        nu_label_map=_amap(names, nu_rows),
        tau_label_map=_amap(("a",), tau_rows),
        lam_rhoa_map=_amap(names, [({"k": 1, "l": 1}, n)]),
        rho_a=vec((n,)),
        restricted_weyl=weights.B(1),
        g_weyl=weights.A(n),
        g_rho=weights.rho(weights.A(n)),
        symbols={
            "C_Gt": _casimir("P", "pi"),
            "C_G": _casimir("R", "nu"),
            "C_K": _casimir("Q", "tau"),
            "E_K": _euler("Q", names, {"k": 1, "l": -1}),
        },
        relations=(_rel("casimir", (1, "C_Gt"), (-2, "C_G"), (1, "C_K")),),
        transfer_matrix=M,
        transfer_tau=T,
        transfer_offset=off,
        rank3=(1, 1, 2),
        degrees_p=(2,),
        degrees_q=(1,),
        degrees_rank=2,
        hilbert_model=_weighted_model(1, 2),
        indep_gens=("C_Gt", "E_K"),
        branch_rule=("charge_split",),
        ch=_sphere_ch(N),
    )


def _case_i_prime(n: int) -> CaseRecord:
    if n < 2:
        raise ValueError("case (i)' requires n >= 2")
    base = _case_i(n)
    names = ("k", "l")
    nu_rows = (
        [({"k": 1, "l": 1}, 0)] + [({"l": 1}, 0)] * (n - 1) + [({}, 0)]
    )
    rel = _rel(
        "casimir",
        (1, "C_Gt"),
        (-2, "C_G"),
        (Fraction(n - 1, n * (n + 1)), "C_K"),
    )
    return dataclasses.replace(
        base,
        id=CaseId("i_prime", n),
        groups={
            "gtilde": SO(2 * n + 2),
            "htilde": SO(2 * n + 1),
            "g": SU(n + 1),
            "h": SU(n),
            "k": U(n),
        },
        nu_group=SU(n + 1),
        tau_group=U(n),
        nu_label_map=_amap(names, nu_rows),
        tau_label_map=_amap(("a",), [({"a": -1}, 0)] * n),
        relations=(rel,),
        mod_trace=True,
    )


def _case_ii(n: int) -> CaseRecord:
    odd = n % 2 == 1
    m = (n + 1) // 2 if odd else n // 2
    jn = ["j%d" % (i + 1) for i in range(m)]
    kn = ["k%d" % (i + 1) for i in range(m - 1 if odd else m)]
    # theta params in chain (interlacing) order
    names: list[str] = []
    for i in range(len(kn)):
        names += [jn[i], kn[i]]
    if odd:
        names.append(jn[-1])
    names = tuple(names)
    cons = []
    for i in range(len(kn)):
        cons.append(_con(names, {jn[i]: 1, kn[i]: -1}))
        if i + 1 < m:
            cons.append(_con(names, {kn[i]: 1, jn[i + 1]: -1}))
    theta = ParamSpace(names, ("nat",) * len(names), tuple(cons))
    pi_cons = tuple(
        _con(tuple(jn), {jn[i]: 1, jn[i + 1]: -1}) for i in range(m - 1)
    )
    pi_space = ParamSpace(tuple(jn), ("nat",) * m, pi_cons)
    tau_cons = tuple(
        _con(tuple(kn), {kn[i]: 1, kn[i + 1]: -1}) for i in range(len(kn) - 1)
    )
    tau_space = ParamSpace(tuple(kn), ("nat",) * len(kn), tau_cons)

    if odd:
        gt, ht, g, h, kk = SO(4 * m), U(2 * m), SO(4 * m - 1), U(2 * m - 1), SO(4 * m - 2)
        pi_rows = []
        for i in range(m):
            pi_rows += [({jn[i]: 1}, 0), ({jn[i]: 1}, 0)]
        tau_rows = []
        for i in range(m - 1):
            tau_rows += [({kn[i]: 1}, 0), ({kn[i]: 1}, 0)]
        tau_rows.append(({}, 0))
        # a_i = j_i + 2(m-i) + 1/2, b_i = k_i + 2(m-i) - 1/2 (1-based i)
        a_rows = [({jn[i]: 1}, Fraction(4 * (m - 1 - i) + 1, 2)) for i in range(m)]
        b_rows = [({kn[i]: 1}, Fraction(4 * (m - 1 - i) - 1, 2)) for i in range(m - 1)]
        lam_rows = [({jn[i]: 2}, 4 * (m - 1 - i) + 1) for i in range(m)]
        rho_a = vec(tuple(4 * (m - 1 - i) + 1 for i in range(m)))
        restricted = weights.C(m)
        g_type = weights.B(2 * m - 1)
        target = 2 * m - 1
        rows = []
        for i in range(m):
            rows.append(({i: Fraction(1, 2)}, {}, 0))
            if i < m - 1:
                rows.append(({}, {kn[i]: 1}, Fraction(4 * (m - 1 - i) - 1, 2)))
        degrees_p = tuple(2 * k for k in range(1, m + 1))
        degrees_q = tuple(2 * k for k in range(1, m))
        rank3 = (m, m - 1, 2 * m - 1)
        branch_rule = ("interlace_ii_odd", m)
        tag = "ii_odd"
        ch = _ch_case_ii(m, odd=True)
    else:
        gt, ht, g, h, kk = SO(4 * m + 2), U(2 * m + 1), SO(4 * m + 1), U(2 * m), SO(4 * m)
        pi_rows = []
        for i in range(m):
            pi_rows += [({jn[i]: 1}, 0), ({jn[i]: 1}, 0)]
        pi_rows.append(({}, 0))
        tau_rows = []
        for i in range(m):
            tau_rows += [({kn[i]: 1}, 0), ({kn[i]: 1}, 0)]
        a_rows = [({jn[i]: 1}, Fraction(4 * (m - 1 - i) + 3, 2)) for i in range(m)]
        b_rows = [({kn[i]: 1}, Fraction(4 * (m - 1 - i) + 1, 2)) for i in range(m)]
        lam_rows = [({jn[i]: 2}, 4 * (m - 1 - i) + 3) for i in range(m)]
        rho_a = vec(tuple(4 * (m - 1 - i) + 3 for i in range(m)))
        restricted = weights.BC(m)
        g_type = weights.B(2 * m)
        target = 2 * m
        rows = []
        for i in range(m):
            rows.append(({i: Fraction(1, 2)}, {}, 0))
            rows.append(({}, {kn[i]: 1}, Fraction(4 * (m - 1 - i) + 1, 2)))
        degrees_p = tuple(2 * k for k in range(1, m + 1))
        degrees_q = tuple(2 * k for k in range(1, m + 1))
        rank3 = (m, m, 2 * m)
        branch_rule = ("interlace_ii_even", m)
        tag = "ii_even"
        ch = _ch_case_ii(m, odd=False)
    M, T, off = _transfer(m, tuple(kn), rows)

    symbols = {
        "C_Gt": _casimir("P", "pi"),
        "C_G": _casimir("R", "nu"),
        "C_K": _casimir("Q", "tau"),
    }
    relations = [_rel("casimir", (1, "C_Gt"), (-2, "C_G"), (1, "C_K"))]
    for kdx in range(1, m + 2):
        symbols["P_%d" % kdx] = SymbolSpec("power_ab", side="P", vecname="a", base=4, scale=2, k=kdx)
        symbols["Q_%d" % kdx] = SymbolSpec("power_ab", side="Q", vecname="b", base=4, scale=2, k=kdx)
        symbols["R_%d" % kdx] = SymbolSpec("power_nu", side="R", scale=2, k=kdx)
        relations.append(
            _rel(
                "power-sum-%d" % kdx,
                (1, "P_%d" % kdx),
                (1, "Q_%d" % kdx),
                (-(4 ** kdx), "R_%d" % kdx),
            )
        )
    indep = tuple("P_%d" % k for k in range(1, m + 1)) + tuple(
        "Q_%d" % k for k in range(1, len(kn) + 1)
    )
    return CaseRecord(
        id=CaseId(tag, n),
        groups={"gtilde": gt, "htilde": ht, "g": g, "h": h, "k": kk},
        pi_group=gt,
        nu_group=g,
        tau_group=kk,
        theta=theta,
        pi_space=pi_space,
        tau_space=tau_space,
        pi_of_theta=_amap(names, [({j: 1}, 0) for j in jn]),
        tau_of_theta=_amap(names, [({k: 1}, 0) for k in kn]),
        pi_label_map=_amap(tuple(jn), pi_rows),
        nu_label_map=_amap(names, [({nm: 1}, 0) for nm in names]),
        tau_label_map=_amap(tuple(kn), tau_rows),
        lam_rhoa_map=_amap(names, lam_rows),
        rho_a=rho_a,
        restricted_weyl=restricted,
        g_weyl=g_type,
        g_rho=weights.rho(g_type),
        symbols=symbols,
        relations=tuple(relations),
        transfer_matrix=M,
        transfer_tau=T,
        transfer_offset=off,
        rank3=rank3,
        degrees_p=degrees_p,
        degrees_q=degrees_q,
        degrees_rank=rank3[2],
        hilbert_model=None,  # the paper cites external tables for item (4)
        indep_gens=indep,
        branch_rule=branch_rule,
        a_map=_amap(names, a_rows),
        b_map=_amap(names, b_rows) if kn else _amap(names, []),
        ch=ch,
    )


def _ch_case_ii(m: int, odd: bool) -> dict:
    dim = 2 * m if odd else 2 * m + 1
    half = Fraction(1, 2)

    def pairvec(i, coef):
        v = _zeros(dim)
        v[2 * i] = coef
        v[2 * i + 1] = coef
        return v

    roots = []
    for i in range(m):
        roots.append(pairvec(i, Fraction(1)))  # image of 2 h_i
        if not odd:
            roots.append(pairvec(i, half))  # image of h_i (BC short root)
    for i in range(m):
        for j in range(i + 1, m):
            for sign in (1, -1):
                v = pairvec(i, half)
                w = pairvec(j, half)
                roots.append([a + sign * b for a, b in zip(v, w)])
    kill = []
    for i in range(m):
        row = _zeros(dim)
        row[2 * i] = Fraction(1)
        row[2 * i + 1] = Fraction(-1)
        kill.append(row)
    if not odd:
        row = _zeros(dim)
        row[dim - 1] = Fraction(1)
        kill.append(row)
    return {"restricted_pos": roots, "kill": kill}


def _case_iii(n: int) -> CaseRecord:
    names = ("k", "l")
    theta = ParamSpace(
        names,
        ("nat", "nat"),
        (_con(names, {"k": 1, "l": -1}), _con(names, {"k": 1, "l": -1}, mod=2)),
    )
    pi_space = ParamSpace(("j",), ("nat",))
    tau_space = ParamSpace(("a",), ("nat",))
    dim = 2 * n + 2
    pi_rows = [({"j": 1}, 0)] + [({}, 0)] * (2 * n) + [({"j": -1}, 0)]
    nu_rows = [({"k": 1}, 0), ({"l": 1}, 0)] + [({}, 0)] * (n - 1)
    tau_rows = [({}, 0)] * n + [({"a": 2}, 0)]
    # target dim n+1: (lam/2 + a + 1/2, lam/2 - a - 1/2, n-1, n-2, ..., 1)
    M, T, off = _transfer(
        1,
        ("a",),
        [
            ({0: Fraction(1, 2)}, {"a": 1}, Fraction(1, 2)),
            ({0: Fraction(1, 2)}, {"a": -1}, Fraction(-1, 2)),
        ]
        + [({}, {}, n - i) for i in range(1, n)],
    )
    ch_kill = [
        [Fraction(1 if i == j else 0) for i in range(dim)] for j in range(1, dim - 1)
    ]
    ch_kill.append([Fraction(1 if i in (0, dim - 1) else 0) for i in range(dim)])
    ch = {
        "restricted_pos": [
            [Fraction(1, 2) if i == 0 else Fraction(-1, 2) if i == dim - 1 else Fraction(0) for i in range(dim)],
            [Fraction(1) if i == 0 else Fraction(-1) if i == dim - 1 else Fraction(0) for i in range(dim)],
        ],
        "kill": ch_kill,
    }
    return CaseRecord(
        id=CaseId("iii", n),
        groups={
            "gtilde": SU(2 * n + 2),
            "htilde": U(2 * n + 1),
            "g": Sp(n + 1),
            "h": ProductGroup(Sp(n), U(1)),
            "k": ProductGroup(Sp(n), Sp(1)),
        },
        pi_group=SU(2 * n + 2),
        nu_group=Sp(n + 1),
        tau_group=ProductGroup(Sp(n), Sp(1)),
        theta=theta,
        pi_space=pi_space,
        tau_space=tau_space,
        pi_of_theta=_amap(names, [({"k": Fraction(1, 2), "l": Fraction(1, 2)}, 0)]),
        tau_of_theta=_amap(names, [({"k": Fraction(1, 2), "l": Fraction(-1, 2)}, 0)]),
        pi_label_map=_amap(("j",), pi_rows),
        nu_label_map=_amap(names, nu_rows),
        tau_label_map=_amap(("a",), tau_rows),
        lam_rhoa_map=_amap(names, [({"k": 1, "l": 1}, 2 * n + 1)]),
        rho_a=vec((2 * n + 1,)),
        restricted_weyl=weights.BC(1),
        g_weyl=weights.C(n + 1),
        g_rho=weights.rho(weights.C(n + 1)),
        symbols={
            "C_Gt": _casimir("P", "pi"),
            "C_G": _casimir("R", "nu"),
            "C_K": _casimir("Q", "tau"),
        },
        relations=(_rel("casimir", (2, "C_Gt"), (-2, "C_G"), (1, "C_K")),),
        transfer_matrix=M,
        transfer_tau=T,
        transfer_offset=off,
        rank3=(1, 1, 2),
        degrees_p=(2,),
        degrees_q=(2,),
        degrees_rank=2,
        hilbert_model=_weighted_model(2, 2),
        indep_gens=("C_Gt", "C_K"),
        branch_rule=("quaternion_split",),
        ch=ch,
    )


def _case_iv(n: int) -> CaseRecord:
    jn = ["j%d" % (i + 1) for i in range(n + 1)]
    kn = ["k%d" % (i + 1) for i in range(n)]
    names: list[str] = []
    for i in range(n):
        names += [jn[i], kn[i]]
    names.append(jn[-1])
    names = tuple(names)
    cons = []
    for i in range(n):
        cons.append(_con(names, {jn[i]: 1, kn[i]: -1}))
        cons.append(_con(names, {kn[i]: 1, jn[i + 1]: -1}))
    theta = ParamSpace(names, ("int",) * len(names), tuple(cons))
    pi_space = ParamSpace(
        tuple(jn),
        ("int",) * (n + 1),
        tuple(_con(tuple(jn), {jn[i]: 1, jn[i + 1]: -1}) for i in range(n)),
    )
    tau_names = tuple(kn) + ("a",)
    tau_space = ParamSpace(
        tau_names,
        ("int",) * (n + 1),
        tuple(_con(tau_names, {kn[i]: 1, kn[i + 1]: -1}) for i in range(n - 1)),
    )
    pi_rows = []
    for i in range(n + 1):
        pi_rows += [({jn[i]: 1}, 0), ({jn[i]: 1}, 0)]
    tau_rows = []
    for i in range(n):
        tau_rows += [({kn[i]: 1}, 0), ({kn[i]: 1}, 0)]
    tau_rows.append(({"a": 1}, 0))
    a_rows = [({jn[i]: 1}, n - 2 * (i + 1) + 2) for i in range(n + 1)]
    b_rows = [({kn[i]: 1}, n - 2 * (i + 1) + 1) for i in range(n)]
    lam_rows = [({jn[i]: 2}, 2 * (n - 2 * (i + 1) + 2)) for i in range(n + 1)]
    rows = []
    for i in range(n + 1):
        rows.append(({i: Fraction(1, 2)}, {}, 0))
        if i < n:
            rows.append(({}, {kn[i]: 1}, n - 2 * (i + 1) + 1))
    M, T, off = _transfer(n + 1, tau_names, rows)
    symbols = {
        "C_Gt": _casimir("P", "pi"),
        "C_G": _casimir("R", "nu"),
        "C_K1": _casimir("Q", "tau", factor=0),
        "C_K2": _casimir("Q", "tau", factor=1),
    }
    relations = [_rel("casimir", (1, "C_Gt"), (-2, "C_G"), (1, "C_K1"))]
    for kdx in range(1, n + 3):
        symbols["P_%d" % kdx] = SymbolSpec("power_ab", side="P", vecname="a", base=2, scale=1, k=kdx)
        symbols["Q_%d" % kdx] = SymbolSpec("power_ab", side="Q", vecname="b", base=2, scale=1, k=kdx)
        symbols["R_%d" % kdx] = SymbolSpec("power_nu", side="R", scale=1, k=kdx)
        relations.append(
            _rel(
                "power-sum-%d" % kdx,
                (1, "P_%d" % kdx),
                (1, "Q_%d" % kdx),
                (-(2 ** kdx), "R_%d" % kdx),
            )
        )
    dim = 2 * n + 2
    half = Fraction(1, 2)
    ch_roots = []
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            v = _zeros(dim)
            v[2 * i] = half
            v[2 * i + 1] = half
            v[2 * j] = -half
            v[2 * j + 1] = -half
            ch_roots.append(v)
    ch_kill = []
    for i in range(n + 1):
        row = _zeros(dim)
        row[2 * i] = Fraction(1)
        row[2 * i + 1] = Fraction(-1)
        ch_kill.append(row)
    return CaseRecord(
        id=CaseId("iv", n),
        groups={
            "gtilde": SU(2 * n + 2),
            "htilde": Sp(n + 1),
            "g": U(2 * n + 1),
            "h": ProductGroup(Sp(n), U(1)),
            "k": ProductGroup(U(2 * n), U(1)),
        },
        pi_group=U(2 * n + 2),  # the paper's central extension device
        nu_group=U(2 * n + 1),
        tau_group=ProductGroup(U(2 * n), U(1)),
        theta=theta,
        pi_space=pi_space,
        tau_space=tau_space,
        pi_of_theta=_amap(names, [({j: 1}, 0) for j in jn]),
        tau_of_theta=_amap(
            names,
            [({k: 1}, 0) for k in kn]
            + [({**{j: 1 for j in jn}, **{k: -1 for k in kn}}, 0)],
        ),
        pi_label_map=_amap(tuple(jn), pi_rows),
        nu_label_map=_amap(names, [({nm: 1}, 0) for nm in names]),
        tau_label_map=_amap(tau_names, tau_rows),
        lam_rhoa_map=_amap(names, lam_rows),
        rho_a=vec(tuple(2 * (n - 2 * (i + 1) + 2) for i in range(n + 1))),
        restricted_weyl=weights.A(n),
        g_weyl=weights.A(2 * n),
        g_rho=weights.rho(weights.A(2 * n)),
        symbols=symbols,
        relations=tuple(relations),
        transfer_matrix=M,
        transfer_tau=T,
        transfer_offset=off,
        rank3=(n, n, 2 * n),
        degrees_p=tuple(range(1, n + 2)),
        degrees_q=tuple(range(1, n + 1)),
        degrees_rank=2 * n + 1,  # rank of G/H on the U(2n+2) cover
        hilbert_model={"kind": "interlaced_iv", "n": n},
        indep_gens=tuple("P_%d" % k for k in range(1, n + 2))
        + tuple("Q_%d" % k for k in range(1, n + 1)),
        branch_rule=("interlace_iv", n),
        a_map=_amap(names, a_rows),
        b_map=_amap(names, b_rows),
        ch={"restricted_pos": ch_roots, "kill": ch_kill},
    )


def _case_v(n: int) -> CaseRecord:
    names = ("k", "l")
    theta = ParamSpace(names, ("nat", "nat"), (_con(names, {"k": 1, "l": -1}),))
    pi_space = ParamSpace(("j",), ("nat",))
    tau_space = ParamSpace(("a",), ("nat",), (_con(("a",), {"a": 1}, -1),))
    dim = 2 * n + 2
    g = ProductGroup(Sp(n + 1), Sp(1), almost=True)
    kk = ProductGroup(Sp(n), Sp(1), Sp(1), almost=True)
    nu_rows = [({"k": 1}, 0), ({"l": 1}, 0)] + [({}, 0)] * (n - 1) + [({"k": 1, "l": -1}, 0)]
    tau_rows = [({}, 0)] * n + [({"a": 1}, -1), ({"a": 1}, -1)]
    # target dim n+2: ((lam+a)/2, (lam-a)/2, n-1, ..., 1 | a)
    M, T, off = _transfer(
        1,
        ("a",),
        [
            ({0: Fraction(1, 2)}, {"a": Fraction(1, 2)}, 0),
            ({0: Fraction(1, 2)}, {"a": Fraction(-1, 2)}, 0),
        ]
        + [({}, {}, n - i) for i in range(1, n)]
        + [({}, {"a": 1}, 0)],
    )
    return CaseRecord(
        id=CaseId("v", n),
        groups={
            "gtilde": SO(4 * n + 4),
            "htilde": SO(4 * n + 3),
            "g": g,
            "h": Named("Sp(%d)·Diag(Sp(1))" % n),
            "k": kk,
        },
        pi_group=SO(4 * n + 4),
        nu_group=g,
        tau_group=kk,
        theta=theta,
        pi_space=pi_space,
        tau_space=tau_space,
        pi_of_theta=_amap(names, [({"k": 1, "l": 1}, 0)]),
        tau_of_theta=_amap(names, [({"k": 1, "l": -1}, 1)]),
        pi_label_map=_amap(("j",), [({"j": 1}, 0)] + [({}, 0)] * (dim - 1)),
        nu_label_map=_amap(names, nu_rows),
        tau_label_map=_amap(("a",), tau_rows),
        lam_rhoa_map=_amap(names, [({"k": 1, "l": 1}, 2 * n + 1)]),
        rho_a=vec((2 * n + 1,)),
        restricted_weyl=weights.B(1),
        g_weyl=weights.Product(weights.C(n + 1), weights.C(1)),
        g_rho=weights.rho(weights.Product(weights.C(n + 1), weights.C(1))),
        symbols={
            "C_Gt": _casimir("P", "pi"),
            "C_G1": _casimir("R", "nu", factor=0),
            "C_G2": _casimir("R", "nu", factor=1),
            "C_K": _casimir("Q", "tau", factor=1),
        },
        relations=(
            _rel("casimir", (1, "C_Gt"), (-2, "C_G1"), (1, "C_K")),
            _rel("fiber-casimir", (1, "C_G2"), (-1, "C_K")),
        ),
        transfer_matrix=M,
        transfer_tau=T,
        transfer_offset=off,
        rank3=(1, 1, 2),
        degrees_p=(2,),
        degrees_q=(2,),
        degrees_rank=2,
        hilbert_model=_weighted_model(2, 2),
        indep_gens=("C_Gt", "C_K"),
        branch_rule=("sphere_sp1",),
        ch=_sphere_ch(dim),
    )


def _case_v_prime(n: int) -> CaseRecord:
    names = ("k", "l", "b")
    cons = (
        _con(names, {"k": 1, "l": -1}),
        _con(names, {"k": 1, "l": -1, "b": -1}),
        _con(names, {"k": 1, "l": -1, "b": 1}),
        _con(names, {"k": 1, "l": -1, "b": 1}, mod=2),
    )
    theta = ParamSpace(names, ("nat", "nat", "int"), cons)
    pi_space = ParamSpace(("j",), ("nat",))
    tau_names = ("c", "b")
    tau_space = ParamSpace(
        tau_names,
        ("nat", "int"),
        (
            _con(tau_names, {"c": 1, "b": -1}),
            _con(tau_names, {"c": 1, "b": 1}),
            _con(tau_names, {"c": 1, "b": 1}, mod=2),
        ),
    )
    dim = 2 * n + 2
    g = ProductGroup(Sp(n + 1), U(1), almost=True)
    kk = ProductGroup(Sp(n), Sp(1), U(1), almost=True)
    nu_rows = [({"k": 1}, 0), ({"l": 1}, 0)] + [({}, 0)] * (n - 1) + [({"b": 1}, 0)]
    tau_rows = [({}, 0)] * n + [({"c": 1}, 0), ({"b": 1}, 0)]
    # target dim n+2: ((lam+c+1)/2, (lam-c-1)/2, n-1, ..., 1 | b)
    M, T, off = _transfer(
        1,
        tau_names,
        [
            ({0: Fraction(1, 2)}, {"c": Fraction(1, 2)}, Fraction(1, 2)),
            ({0: Fraction(1, 2)}, {"c": Fraction(-1, 2)}, Fraction(-1, 2)),
        ]
        + [({}, {}, n - i) for i in range(1, n)]
        + [({}, {"b": 1}, 0)],
    )
    g_type = weights.Product(weights.C(n + 1), weights.Trivial(1))
    return CaseRecord(
        id=CaseId("v_prime", n),
        groups={
            "gtilde": SO(4 * n + 4),
            "htilde": SO(4 * n + 3),
            "g": g,
            "h": Named("Sp(%d)·Diag(U(1))" % n),
            "k": kk,
        },
        pi_group=SO(4 * n + 4),
        nu_group=g,
        tau_group=kk,
        theta=theta,
        pi_space=pi_space,
        tau_space=tau_space,
        pi_of_theta=_amap(names, [({"k": 1, "l": 1}, 0)]),
        tau_of_theta=_amap(names, [({"k": 1, "l": -1}, 0), ({"b": 1}, 0)]),
        pi_label_map=_amap(("j",), [({"j": 1}, 0)] + [({}, 0)] * (dim - 1)),
        nu_label_map=_amap(names, nu_rows),
        tau_label_map=_amap(tau_names, tau_rows),
        lam_rhoa_map=_amap(names, [({"k": 1, "l": 1}, 2 * n + 1)]),
        rho_a=vec((2 * n + 1,)),
        restricted_weyl=weights.B(1),
        g_weyl=g_type,
        g_rho=weights.rho(g_type),
        symbols={
            "C_Gt": _casimir("P", "pi"),
            "C_G1": _casimir("R", "nu", factor=0),
            "C_K2": _casimir("Q", "tau", factor=1),
            "E_G": _euler("R", names, {"b": 1}),
            "E_K": _euler("Q", names, {"b": 1}),
        },
        relations=(
            _rel("casimir", (1, "C_Gt"), (-2, "C_G1"), (1, "C_K2")),
            _rel("euler", (1, "E_G"), (-1, "E_K")),
        ),
        transfer_matrix=M,
        transfer_tau=T,
        transfer_offset=off,
        rank3=(1, 2, 3),
        degrees_p=(2,),
        degrees_q=(1, 2),
        degrees_rank=3,
        hilbert_model=_weighted_model(1, 2, 2),
        indep_gens=("C_Gt", "C_K2", "E_K"),
        branch_rule=("sphere_sp1_u1",),
        ch=_sphere_ch(dim),
    )


def _case_vi() -> CaseRecord:
    names = ("j", "k")
    theta = ParamSpace(
        names,
        ("nat", "nat"),
        (_con(names, {"j": 1, "k": -1}), _con(names, {"j": 1, "k": -1}, mod=2)),
    )
    half = Fraction(1, 2)
    M, T, off = _transfer(
        1,
        ("k",),
        [
            ({0: half}, {}, 0),
            ({}, {"k": half}, Fraction(5, 2)),
            ({}, {"k": half}, Fraction(3, 2)),
            ({}, {"k": half}, half),
        ],
    )
    return CaseRecord(
        id=CaseId("vi"),
        groups={
            "gtilde": SO(16),
            "htilde": SO(15),
            "g": Spin(9),
            "h": Spin(7),
            "k": Spin(8),
        },
        pi_group=SO(16),
        nu_group=Spin(9),
        tau_group=Spin(8),
        theta=theta,
        pi_space=ParamSpace(("j",), ("nat",)),
        tau_space=ParamSpace(("k",), ("nat",)),
        pi_of_theta=_amap(names, [({"j": 1}, 0)]),
        tau_of_theta=_amap(names, [({"k": 1}, 0)]),
        pi_label_map=_amap(("j",), [({"j": 1}, 0)] + [({}, 0)] * 7),
        nu_label_map=_amap(names, [({"j": half}, 0)] + [({"k": half}, 0)] * 3),
        tau_label_map=_amap(("k",), [({"k": half}, 0)] * 4),
        lam_rhoa_map=_amap(names, [({"j": 1}, 7)]),
        rho_a=vec((7,)),
        restricted_weyl=weights.B(1),
        g_weyl=weights.B(4),
        g_rho=weights.rho(weights.B(4)),
        symbols={
            "C_Gt": _casimir("P", "pi"),
            "C_G": _casimir("R", "nu"),
            "C_K": _casimir("Q", "tau"),
        },
        relations=(_rel("casimir", (1, "C_Gt"), (-4, "C_G"), (3, "C_K")),),
        transfer_matrix=M,
        transfer_tau=T,
        transfer_offset=off,
        rank3=(1, 1, 2),
        degrees_p=(2,),
        degrees_q=(2,),
        degrees_rank=2,
        hilbert_model=_weighted_model(2, 2),
        indep_gens=("C_Gt", "C_K"),
        branch_rule=("parity_tail",),
        ch=_sphere_ch(8),
    )


def _case_vii() -> CaseRecord:
    names = ("j", "k")
    theta = ParamSpace(names, ("nat", "nat"), (_con(names, {"j": 1, "k": -1}),))
    g = ProductGroup(SO(5), SO(3))
    kk = ProductGroup(SO(4), SO(3))
    half = Fraction(1, 2)
    M, T, off = _transfer(
        1,
        ("k",),
        [({0: half}, {}, 0), ({}, {"k": 1}, half), ({}, {"k": 1}, half)],
    )
    g_type = weights.Product(weights.B(2), weights.B(1))
    return CaseRecord(
        id=CaseId("vii"),
        groups={
            "gtilde": SO(8),
            "htilde": Spin(7),
            "g": g,
            "h": Named("ι7(SO(4))"),
            "k": kk,
        },
        pi_group=SO(8),
        nu_group=g,
        tau_group=kk,
        theta=theta,
        pi_space=ParamSpace(("j",), ("nat",)),
        tau_space=ParamSpace(("k",), ("nat",)),
        pi_of_theta=_amap(names, [({"j": 1}, 0)]),
        tau_of_theta=_amap(names, [({"k": 1}, 0)]),
        pi_label_map=_amap(("j",), [({"j": 1}, 0)] * 4),
        nu_label_map=_amap(names, [({"j": 1}, 0), ({"k": 1}, 0), ({"k": 1}, 0)]),
        tau_label_map=_amap(("k",), [({"k": 1}, 0)] * 3),
        lam_rhoa_map=_amap(names, [({"j": 2}, 3)]),
        rho_a=vec((3,)),
        restricted_weyl=weights.B(1),
        g_weyl=g_type,
        g_rho=weights.rho(g_type),
        symbols={
            "C_Gt": _casimir("P", "pi"),
            "C_G1": _casimir("R", "nu", factor=0),
            "C_G2": _casimir("R", "nu", factor=1),
            "Cp_K": _casimir("Q", "tau", factor=0),
        },
        relations=(
            _rel("casimir", (1, "C_Gt"), (-4, "C_G1"), (4, "C_G2")),
            _rel("fiber-casimir", (2, "C_G2"), (-1, "Cp_K")),
        ),
        transfer_matrix=M,
        transfer_tau=T,
        transfer_offset=off,
        rank3=(1, 1, 2),
        degrees_p=(2,),
        degrees_q=(2,),
        degrees_rank=2,
        hilbert_model=_weighted_model(2, 2),
        indep_gens=("C_Gt", "Cp_K"),
        branch_rule=("tail_le",),
        ch=None,  # Gtilde/Htilde = SO(8)/Spin(7) is not symmetric
    )


def _case_viii() -> CaseRecord:
    names = ("j", "k", "a")
    cons = (
        _con(names, {"j": 1, "k": -1}),
        _con(names, {"k": 1, "a": -1}),
        _con(names, {"k": 1, "a": 1}),
    )
    theta = ParamSpace(names, ("nat", "nat", "int"), cons)
    tau_names = ("k", "a")
    tau_space = ParamSpace(
        tau_names,
        ("nat", "int"),
        (_con(tau_names, {"k": 1, "a": -1}), _con(tau_names, {"k": 1, "a": 1})),
    )
    g = ProductGroup(SO(5), SO(2))
    kk = ProductGroup(SO(4), SO(2))
    half = Fraction(1, 2)
    M, T, off = _transfer(
        1,
        tau_names,
        [({0: 1}, {}, 0), ({}, {"k": 1}, half), ({}, {"a": 1}, 0)],
    )
    g_type = weights.Product(weights.B(2), weights.Trivial(1))
    return CaseRecord(
        id=CaseId("viii"),
        groups={
            "gtilde": SO(7),
            "htilde": G2Group(),
            "g": g,
            "h": Named("ι8(U(2))"),
            "k": kk,
        },
        pi_group=SO(7),
        nu_group=g,
        tau_group=kk,
        theta=theta,
        pi_space=ParamSpace(("j",), ("nat",)),
        tau_space=tau_space,
        pi_of_theta=_amap(names, [({"j": 1}, 0)]),
        tau_of_theta=_amap(names, [({"k": 1}, 0), ({"a": 1}, 0)]),
        pi_label_map=_amap(("j",), [({"j": 1}, 0)] * 3),
        nu_label_map=_amap(names, [({"j": 1}, 0), ({"k": 1}, 0), ({"a": 1}, 0)]),
        tau_label_map=_amap(tau_names, [({"k": 1}, 0), ({"k": 1}, 0), ({"a": 1}, 0)]),
        lam_rhoa_map=_amap(names, [({"j": 1}, Fraction(3, 2))]),
        rho_a=vec((Fraction(3, 2),)),
        restricted_weyl=weights.B(1),
        g_weyl=g_type,
        g_rho=weights.rho(g_type),
        symbols={
            "C_Gt": _casimir("P", "pi"),
            "C_G1": _casimir("R", "nu", factor=0),
            "C_K1": _casimir("Q", "tau", factor=0),
            "E_G": _euler("R", names, {"a": 1}),
            "E_K": _euler("Q", names, {"a": 1}),
        },
        relations=(
            _rel("euler", (1, "E_G"), (-1, "E_K")),
            _rel("casimir", (2, "C_Gt"), (-6, "C_G1"), (3, "C_K1")),
        ),
        transfer_matrix=M,
        transfer_tau=T,
        transfer_offset=off,
        rank3=(1, 2, 3),
        degrees_p=(2,),
        degrees_q=(1, 2),
        degrees_rank=3,
        hilbert_model=_weighted_model(1, 2, 2),
        indep_gens=("C_Gt", "C_K1", "E_K"),
        branch_rule=("tail_le_charge",),
        ch=None,  # SO(7)/G2 is not symmetric
    )


def _case_ix() -> CaseRecord:
    names = ("j", "k")
    cons = (_con(names, {"j": 1, "k": -1}), _con(names, {"j": 1, "k": 1}))
    theta = ParamSpace(names, ("nat", "int"), cons)
    M, T, off = _transfer(
        1,
        ("k",),
        [({0: 1}, {}, Fraction(1, 2)), ({0: 1}, {}, Fraction(-1, 2)), ({}, {"k": 1}, 0)],
    )
    return CaseRecord(
        id=CaseId("ix"),
        groups={
            "gtilde": SO(7),
            "htilde": G2Group(),
            "g": SO(6),
            "h": SU(3),
            "k": U(3),
        },
        pi_group=SO(7),
        nu_group=SO(6),
        tau_group=U(3),
        theta=theta,
        pi_space=ParamSpace(("j",), ("nat",)),
        tau_space=ParamSpace(("k",), ("int",)),
        pi_of_theta=_amap(names, [({"j": 1}, 0)]),
        tau_of_theta=_amap(names, [({"k": 1}, 0)]),
        pi_label_map=_amap(("j",), [({"j": 1}, 0)] * 3),
        nu_label_map=_amap(names, [({"j": 1}, 0), ({"j": 1}, 0), ({"k": 1}, 0)]),
        tau_label_map=_amap(("k",), [({"k": 1}, 0)] * 3),
        lam_rhoa_map=_amap(names, [({"j": 1}, Fraction(3, 2))]),
        rho_a=vec((Fraction(3, 2),)),
        restricted_weyl=weights.B(1),
        g_weyl=weights.D(3),
        g_rho=weights.rho(weights.D(3)),
        symbols={
            "C_Gt": _casimir("P", "pi"),
            "C_G": _casimir("R", "nu"),
            # The paper's normalization for this case: C_K acts on det^k by k^2.
            "C_K": SymbolSpec("theta_poly", side="Q", poly=_poly({(0, 2): 1})),
            "E_K": _euler("Q", names, {"k": 1}),
        },
        relations=(_rel("casimir", (2, "C_Gt"), (-3, "C_G"), (3, "C_K")),),
        transfer_matrix=M,
        transfer_tau=T,
        transfer_offset=off,
        rank3=(1, 1, 2),
        degrees_p=(2,),
        degrees_q=(1,),
        degrees_rank=2,
        hilbert_model=_weighted_model(1, 2),
        indep_gens=("C_Gt", "E_K"),
        branch_rule=("charge_pm",),
        ch=None,  # SO(7)/G2 is not symmetric
        parity_gap_gens=("C_Gt", "C_G"),
    )


def _case_x() -> CaseRecord:
    names = ("k",)
    theta = ParamSpace(names, ("nat",))
    M, T, off = _transfer(1, (), [({}, {}, 1), ({0: 1}, {}, Fraction(-3, 2))])
    return CaseRecord(
        id=CaseId("x"),
        groups={
            "gtilde": SO(7),
            "htilde": SO(6),
            "g": G2Group(),
            "h": SU(3),
            "k": SU(3),
        },
        pi_group=SO(7),
        nu_group=G2Group(),
        tau_group=SU(3),
        theta=theta,
        pi_space=ParamSpace(("k",), ("nat",)),
        tau_space=ParamSpace((), ()),
        pi_of_theta=_amap(names, [({"k": 1}, 0)]),
        tau_of_theta=_amap(names, []),
        pi_label_map=_amap(("k",), [({"k": 1}, 0), ({}, 0), ({}, 0)]),
        nu_label_map=_amap(names, [({}, 0), ({"k": 1}, 0)]),
        tau_label_map=_amap((), [({}, 0)] * 3),
        lam_rhoa_map=_amap(names, [({"k": 1}, Fraction(5, 2))]),
        rho_a=vec((Fraction(5, 2),)),
        restricted_weyl=weights.B(1),
        g_weyl=weights.G2,
        g_rho=weights.rho(weights.G2),
        symbols={
            "C_Gt": _casimir("P", "pi"),
            "C_G": _casimir("R", "nu"),
        },
        relations=(_rel("casimir", (1, "C_Gt"), (-1, "C_G")),),
        transfer_matrix=M,
        transfer_tau=T,
        transfer_offset=off,
        rank3=(1, 0, 1),
        degrees_p=(2,),
        degrees_q=(),
        degrees_rank=1,
        hilbert_model=_weighted_model(2),
        indep_gens=("C_Gt",),
        branch_rule=("identity",),
        ch=_sphere_ch(3),
    )


def _case_xi() -> CaseRecord:
    names = ("k",)
    theta = ParamSpace(names, ("nat",))
    half = Fraction(1, 2)
    M, T, off = _transfer(1, (), [({0: half}, {}, 1), ({0: half}, {}, 0), ({0: half}, {}, -1)])
    return CaseRecord(
        id=CaseId("xi"),
        groups={
            "gtilde": SO(8),
            "htilde": Spin(7),
            "g": SO(7),
            "h": G2Group(),
            "k": G2Group(),
        },
        pi_group=SO(8),
        nu_group=SO(7),
        tau_group=G2Group(),
        theta=theta,
        pi_space=ParamSpace(("k",), ("nat",)),
        tau_space=ParamSpace((), ()),
        pi_of_theta=_amap(names, [({"k": 1}, 0)]),
        tau_of_theta=_amap(names, []),
        pi_label_map=_amap(("k",), [({"k": 1}, 0)] * 4),
        nu_label_map=_amap(names, [({"k": 1}, 0)] * 3),
        tau_label_map=_amap((), [({}, 0)] * 2),
        lam_rhoa_map=_amap(names, [({"k": 2}, 3)]),
        rho_a=vec((3,)),
        restricted_weyl=weights.B(1),
        g_weyl=weights.B(3),
        g_rho=weights.rho(weights.B(3)),
        symbols={
            "C_Gt": _casimir("P", "pi"),
            "C_G": _casimir("R", "nu"),
        },
        relations=(_rel("casimir", (3, "C_Gt"), (-4, "C_G")),),
        transfer_matrix=M,
        transfer_tau=T,
        transfer_offset=off,
        rank3=(1, 0, 1),
        degrees_p=(2,),
        degrees_q=(),
        degrees_rank=1,
        hilbert_model=_weighted_model(2),
        indep_gens=("C_Gt",),
        branch_rule=("identity",),
        ch=None,  # SO(8)/Spin(7) is not symmetric
    )


# The seven polynomial generators of the §7 model, expanded (see dgx module
# for the factored construction used as the independent route).
XYZ_R1 = {(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1, (0, 0, 0): 1}
XYZ_R2 = {(2, 0, 0): 1, (1, 0, 1): 6, (0, 0, 2): 1, (0, 2, 0): 1, (0, 1, 0): 6, (0, 0, 0): 1}
XYZ_R3 = {
    (3, 0, 0): 1,
    (2, 0, 1): 15,
    (1, 0, 2): 15,
    (0, 0, 3): 1,
    (0, 3, 0): 1,
    (0, 2, 0): 15,
    (0, 1, 0): 15,
    (0, 0, 0): 1,
}
XYZ_R4 = {(1, 1, 0): 1, (1, 0, 1): -1, (0, 1, 0): -1, (0, 0, 1): 1}
XYZ_Q = {(0, 0, 1): Fraction(3, 4), (0, 0, 0): Fraction(-27, 4)}
XYZ_P1 = {(1, 0, 0): 1, (0, 0, 0): -9}
XYZ_P2 = {(0, 1, 0): 1, (0, 0, 0): -9}


def _case_star() -> CaseRecord:
    names = ("j", "jp", "a")
    cons = (
        _con(names, {"j": 1, "jp": 1, "a": -1}),
        _con(names, {"a": 1, "j": -1, "jp": 1}),
        _con(names, {"a": 1, "j": 1, "jp": -1}),
        _con(names, {"j": 1, "jp": 1, "a": 1}, mod=2),
    )
    theta = ParamSpace(names, ("nat", "nat", "nat"), cons)
    gt = ProductGroup(Spin(8), Spin(8))
    half = Fraction(1, 2)
    M, T, off = _transfer(
        2,
        ("a",),
        [
            ({0: half}, {"a": half}, Fraction(3, 2)),
            ({1: half}, {}, half),
            ({1: half}, {}, -half),
            ({0: half}, {"a": -half}, Fraction(-3, 2)),
        ],
    )

    def xyz(sym, side):
        return SymbolSpec("xyz_poly", side=side, poly=_poly(sym))

    return CaseRecord(
        id=CaseId("star"),
        groups={
            "gtilde": gt,
            "htilde": ProductGroup(Spin(7), Spin(7)),
            "g": Spin(8),
            "h": G2Group(),
            "k": Spin(7),
        },
        pi_group=gt,
        nu_group=Spin(8),
        tau_group=Spin(7),
        theta=theta,
        pi_space=ParamSpace(("j", "jp"), ("nat", "nat")),
        tau_space=ParamSpace(("a",), ("nat",)),
        pi_of_theta=_amap(names, [({"j": 1}, 0), ({"jp": 1}, 0)]),
        tau_of_theta=_amap(names, [({"a": 1}, 0)]),
        pi_label_map=_amap(
            ("j", "jp"),
            [({"j": 1}, 0), ({}, 0), ({}, 0), ({}, 0), ({"jp": 1}, 0), ({}, 0), ({}, 0), ({}, 0)],
        ),
        nu_label_map=_amap(
            names,
            [
                ({"j": half, "a": half}, 0),
                ({"jp": half}, 0),
                ({"jp": half}, 0),
                ({"j": half, "a": -half}, 0),
            ],
        ),
        tau_label_map=_amap(("a",), [({"a": half}, 0)] * 3),
        lam_rhoa_map=_amap(names, [({"j": 1}, 3), ({"jp": 1}, 3)]),
        rho_a=vec((3, 3)),
        restricted_weyl=weights.Product(weights.B(1), weights.B(1)),
        g_weyl=weights.D(4),
        g_rho=weights.rho(weights.D(4)),
        symbols={
            "C_Gt1": _casimir("P", "pi", factor=0),
            "C_Gt2": _casimir("P", "pi", factor=1),
            "C_Gt": _casimir("P", "pi"),
            "C_G": _casimir("R", "nu"),
            "C_K": _casimir("Q", "tau"),
            "R_1": xyz(XYZ_R1, "R"),
            "R_2": xyz(XYZ_R2, "R"),
            "R_3": xyz(XYZ_R3, "R"),
            "R_4": xyz(XYZ_R4, "R"),
        },
        relations=(
            _rel("casimir", (3, "C_Gt1"), (3, "C_Gt2"), (-6, "C_G"), (4, "C_K")),
        ),
        transfer_matrix=M,
        transfer_tau=T,
        transfer_offset=off,
        rank3=(2, 1, 3),
        degrees_p=(2, 2),
        degrees_q=(2,),
        degrees_rank=3,
        hilbert_model=_weighted_model(2, 2, 2),
        indep_gens=("C_Gt1", "C_Gt2", "C_K"),
        branch_rule=("triangle",),
        ch=_sphere_ch(8, block_starts=(0, 4)),
    )


def _alias(tag: str, base: CaseRecord, groups: dict, note: str) -> CaseRecord:
    return dataclasses.replace(
        base,
        id=CaseId(tag),
        groups=groups,
        alias_of=base.id,
        triality_note=note,
        ch=None,
    )


def build_records(max_n: int) -> list[CaseRecord]:
    """One record per tag, instantiated for each admissible size parameter <= max_n."""
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    out: list[CaseRecord] = []
    for n in range(1, max_n + 1):
        out.append(_case_i(n))
    for n in range(2, max_n + 1):
        out.append(_case_i_prime(n))
    for n in range(1, max_n + 1, 2):
        out.append(_case_ii(n))
    for n in range(2, max_n + 1, 2):
        out.append(_case_ii(n))
    for n in range(1, max_n + 1):
        out.append(_case_iii(n))
    for n in range(1, max_n + 1):
        out.append(_case_iv(n))
    for n in range(1, max_n + 1):
        out.append(_case_v(n))
    for n in range(1, max_n + 1):
        out.append(_case_v_prime(n))
    out.extend(
        [_case_vi(), _case_vii(), _case_viii(), _case_ix(), _case_x(), _case_xi()]
    )
    xi_rec = next(r for r in out if r.id.tag == "xi")
    out.append(
        _alias(
            "xii",
            xi_rec,
            {
                "gtilde": SO(8),
                "htilde": SO(7),
                "g": Spin(7),
                "h": G2Group(),
                "k": G2Group(),
            },
            "triality ς* swaps so(7) and spin(7); all data delegated to case (xi)",
        )
    )
    if max_n >= 3:
        i3 = next(r for r in out if r.id == CaseId("i", 3))
        out.append(
            _alias(
                "xiii",
                i3,
                {
                    "gtilde": SO(8),
                    "htilde": Spin(7),
                    "g": ProductGroup(SO(6), SO(2)),
                    "h": Named("ι13(Ũ(3))"),
                    "k": ProductGroup(U(3), SO(2)),
                },
                "triality ς*(e1)=ω+ takes the triple to case (i) with n=3",
            )
        )
        i3p = next(r for r in out if r.id == CaseId("i_prime", 3))
        out.append(
            _alias(
                "xiii_prime",
                i3p,
                {
                    "gtilde": SO(8),
                    "htilde": Spin(7),
                    "g": SO(6),
                    "h": SU(3),
                    "k": U(3),
                },
                "triality reduction to case (i)' with n=3",
            )
        )
        ii3 = next(r for r in out if r.id == CaseId("ii_odd", 3))
        out.append(
            _alias(
                "xiv",
                ii3,
                {
                    "gtilde": SO(8),
                    "htilde": ProductGroup(SO(6), SO(2)),
                    "g": Spin(7),
                    "h": Named("ι14(Ũ(3))"),
                    "k": Spin(6),
                },
                "triality reduction to case (ii) with n=3",
            )
        )
    out.append(_case_star())
    out.sort(key=lambda r: r.id.sort_key())
    return out


def all_cases(max_n: int) -> list[CaseRecord]:
    return build_records(max_n)


def rank_triple(record: CaseRecord) -> tuple[int, int, int]:
    return record.rank3


def alternating_concat(j: Sequence[int], k: Sequence[int]) -> tuple[int, ...]:
    """t_{m',m''}(j, k) = (j1, k1, j2, k2, ...); len(k) in {len(j), len(j)-1}."""
    if len(k) not in (len(j), len(j) - 1):
        raise ValueError("length mismatch: %d vs %d" % (len(j), len(k)))
    out = []
    for a, b in itertools.zip_longest(j, k):
        out.append(a)
        if b is not None:
            out.append(b)
    return tuple(out)


def enumerate_disc(record: CaseRecord, bound: int) -> list[DiscElement]:
    if bound < 0:
        raise ValueError("bound must be >= 0")
    return record.enumerate_disc(bound)


def pi_tau(record: CaseRecord, theta: Sequence[int]) -> tuple[IrrepLabel, IrrepLabel]:
    return record.pi_tau(theta)


# ---------------------------------------------------------------------------
# JSON serialization


def _frac_str(x: Fraction) -> str:
    x = Fraction(x)
    return "%d" % x.numerator if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)


def _frac_parse(s) -> Fraction:
    return Fraction(s)


def _vec_payload(v) -> list:
    return [_frac_str(x) for x in v]


def _mat_payload(m) -> list:
    return [_vec_payload(row) for row in m]


def _amap_payload(a: AffineMap) -> dict:
    return {
        "matrix": _mat_payload(a.matrix),
        "offset": _vec_payload(a.offset),
        "source": a.source_dim,
    }


def _amap_parse(d) -> AffineMap:
    return AffineMap(
        mat([[_frac_parse(x) for x in row] for row in d["matrix"]]),
        vec([_frac_parse(x) for x in d["offset"]]),
        source=d.get("source"),
    )


def _weyl_payload(t: WeylType) -> dict:
    out = {"family": t.family, "rank": t.rank}
    if t.factors:
        out["factors"] = [_weyl_payload(f) for f in t.factors]
    return out


def _weyl_parse(d) -> WeylType:
    return WeylType(d["family"], d.get("rank", 1), tuple(_weyl_parse(f) for f in d.get("factors", ())))


def _group_payload(g: GroupDescriptor) -> dict:
    out = {"kind": g.kind, "n": g.n}
    if g.factors:
        out["factors"] = [_group_payload(f) for f in g.factors]
    if g.almost:
        out["almost"] = True
    if g.label:
        out["label"] = g.label
    return out


def _group_parse(d) -> GroupDescriptor:
    return GroupDescriptor(
        d["kind"],
        d.get("n", 0),
        tuple(_group_parse(f) for f in d.get("factors", ())),
        d.get("almost", False),
        d.get("label", ""),
    )


def _space_payload(s: ParamSpace) -> dict:
    return {
        "names": list(s.names),
        "domains": list(s.domains),
        "constraints": [
            {"coeffs": list(c.coeffs), "const": c.const, "mod": c.mod} for c in s.constraints
        ],
    }


def _space_parse(d) -> ParamSpace:
    return ParamSpace(
        tuple(d["names"]),
        tuple(d["domains"]),
        tuple(
            Constraint(tuple(c["coeffs"]), c["const"], c["mod"]) for c in d["constraints"]
        ),
    )


def _poly_payload(p) -> list:
    return [{"exps": list(e), "coeff": _frac_str(c)} for e, c in p]


def _poly_parse(items):
    return tuple((tuple(d["exps"]), _frac_parse(d["coeff"])) for d in items)


def _symbol_payload(s: SymbolSpec) -> dict:
    out = {"kind": s.kind, "side": s.side}
    if s.kind == "casimir":
        out["label"] = s.label
        out["factor"] = s.factor
    elif s.kind == "euler":
        out["form"] = _amap_payload(s.form)
        out["imaginary_unit_normalized"] = True
    elif s.kind == "power_ab":
        out.update({"vec": s.vecname, "base": s.base, "scale": s.scale, "k": s.k})
    elif s.kind == "power_nu":
        out.update({"scale": s.scale, "k": s.k})
    elif s.kind in ("theta_poly", "xyz_poly"):
        out["poly"] = _poly_payload(s.poly)
    else:
        raise ValueError(s.kind)
    return out


def _symbol_parse(d) -> SymbolSpec:
    kind = d["kind"]
    if kind == "casimir":
        return SymbolSpec(kind, side=d["side"], label=d["label"], factor=d["factor"])
    if kind == "euler":
        return SymbolSpec(
            kind, side=d["side"], form=_amap_parse(d["form"]), imaginary_unit_normalized=True
        )
    if kind == "power_ab":
        return SymbolSpec(
            kind, side=d["side"], vecname=d["vec"], base=d["base"], scale=d["scale"], k=d["k"]
        )
    if kind == "power_nu":
        return SymbolSpec(kind, side=d["side"], scale=d["scale"], k=d["k"])
    if kind in ("theta_poly", "xyz_poly"):
        return SymbolSpec(kind, side=d["side"], poly=_poly_parse(d["poly"]))
    raise ValueError(kind)


def record_payload(r: CaseRecord) -> dict:
    return {
        "id": {"tag": r.id.tag, "n": r.id.n},
        "groups": {k: _group_payload(g) for k, g in r.groups.items()},
        "pi_group": _group_payload(r.pi_group),
        "nu_group": _group_payload(r.nu_group),
        "tau_group": _group_payload(r.tau_group),
        "theta": _space_payload(r.theta),
        "pi_space": _space_payload(r.pi_space),
        "tau_space": _space_payload(r.tau_space),
        "pi_of_theta": _amap_payload(r.pi_of_theta),
        "tau_of_theta": _amap_payload(r.tau_of_theta),
        "pi_label_map": _amap_payload(r.pi_label_map),
        "nu_label_map": _amap_payload(r.nu_label_map),
        "tau_label_map": _amap_payload(r.tau_label_map),
        "lam_rhoa_map": _amap_payload(r.lam_rhoa_map),
        "rho_a": _vec_payload(r.rho_a),
        "restricted_weyl": _weyl_payload(r.restricted_weyl),
        "g_weyl": _weyl_payload(r.g_weyl),
        "g_rho": _vec_payload(r.g_rho),
        "symbols": {k: _symbol_payload(s) for k, s in sorted(r.symbols.items())},
        "relations": [
            {"name": rel.name, "terms": [[_frac_str(c), s] for c, s in rel.terms]}
            for rel in r.relations
        ],
        "transfer_matrix": _mat_payload(r.transfer_matrix),
        "transfer_tau": _mat_payload(r.transfer_tau),
        "transfer_offset": _vec_payload(r.transfer_offset),
        "rank_triple": list(r.rank3),
        "degrees_p": list(r.degrees_p),
        "degrees_q": list(r.degrees_q),
        "degrees_rank": r.degrees_rank,
        "hilbert_model": r.hilbert_model,
        "indep_gens": list(r.indep_gens),
        "branch_rule": list(r.branch_rule),
        "a_map": _amap_payload(r.a_map) if r.a_map else None,
        "b_map": _amap_payload(r.b_map) if r.b_map else None,
        "ch": (
            {
                "restricted_pos": _mat_payload(r.ch["restricted_pos"]),
                "kill": _mat_payload(r.ch["kill"]),
            }
            if r.ch
            else None
        ),
        "mod_trace": r.mod_trace,
        "parity_gap_gens": list(r.parity_gap_gens),
        "alias_of": {"tag": r.alias_of.tag, "n": r.alias_of.n} if r.alias_of else None,
        "triality_note": r.triality_note,
    }


def record_from_payload(d: dict) -> CaseRecord:
    return CaseRecord(
        id=CaseId(d["id"]["tag"], d["id"]["n"]),
        groups={k: _group_parse(g) for k, g in d["groups"].items()},
        pi_group=_group_parse(d["pi_group"]),
        nu_group=_group_parse(d["nu_group"]),
        tau_group=_group_parse(d["tau_group"]),
        theta=_space_parse(d["theta"]),
        pi_space=_space_parse(d["pi_space"]),
        tau_space=_space_parse(d["tau_space"]),
        pi_of_theta=_amap_parse(d["pi_of_theta"]),
        tau_of_theta=_amap_parse(d["tau_of_theta"]),
        pi_label_map=_amap_parse(d["pi_label_map"]),
        nu_label_map=_amap_parse(d["nu_label_map"]),
        tau_label_map=_amap_parse(d["tau_label_map"]),
        lam_rhoa_map=_amap_parse(d["lam_rhoa_map"]),
        rho_a=vec([_frac_parse(x) for x in d["rho_a"]]),
        restricted_weyl=_weyl_parse(d["restricted_weyl"]),
        g_weyl=_weyl_parse(d["g_weyl"]),
        g_rho=vec([_frac_parse(x) for x in d["g_rho"]]),
        symbols={k: _symbol_parse(s) for k, s in d["symbols"].items()},
        relations=tuple(
            Relation(
                rel["name"], tuple((_frac_parse(c), s) for c, s in rel["terms"])
            )
            for rel in d["relations"]
        ),
        transfer_matrix=mat([[_frac_parse(x) for x in row] for row in d["transfer_matrix"]]),
        transfer_tau=mat([[_frac_parse(x) for x in row] for row in d["transfer_tau"]]),
        transfer_offset=vec([_frac_parse(x) for x in d["transfer_offset"]]),
        rank3=tuple(d["rank_triple"]),
        degrees_p=tuple(d["degrees_p"]),
        degrees_q=tuple(d["degrees_q"]),
        degrees_rank=d["degrees_rank"],
        hilbert_model=d["hilbert_model"],
        indep_gens=tuple(d["indep_gens"]),
        branch_rule=tuple(d["branch_rule"]),
        a_map=_amap_parse(d["a_map"]) if d["a_map"] else None,
        b_map=_amap_parse(d["b_map"]) if d["b_map"] else None,
        ch=(
            {
                "restricted_pos": [vec([_frac_parse(x) for x in row]) for row in d["ch"]["restricted_pos"]],
                "kill": [vec([_frac_parse(x) for x in row]) for row in d["ch"]["kill"]],
            }
            if d["ch"]
            else None
        ),
        mod_trace=d["mod_trace"],
        parity_gap_gens=tuple(d["parity_gap_gens"]),
        alias_of=CaseId(d["alias_of"]["tag"], d["alias_of"]["n"]) if d["alias_of"] else None,
        triality_note=d["triality_note"],
    )


def dump_catalog(records: Iterable[CaseRecord]) -> str:
    payload = {
        "schema": CATALOG_SCHEMA,
        "cases": [record_payload(r) for r in records],
    }
    return json.dumps(payload, indent=1, sort_keys=True)


def load_catalog(text: str) -> list[CaseRecord]:
    payload = json.loads(text)
    if payload.get("schema") != CATALOG_SCHEMA:
        raise ValueError("unsupported catalog schema %r" % payload.get("schema"))
    return [record_from_payload(d) for d in payload["cases"]]


BUNDLED_MAX_N = 6


def bundled_path():
    import pathlib

    return pathlib.Path(__file__).parent / "data" / "catalog.json"


def load_default(max_n: int = 2, path=None) -> list[CaseRecord]:
    """Load records from BRANCHLAB_CATALOG / the bundled file / fresh build."""
    import os
    import pathlib

    if path is None:
        env = os.environ.get("BRANCHLAB_CATALOG")
        path = pathlib.Path(env) if env else bundled_path()
    else:
        path = pathlib.Path(path)
    if path.exists():
        records = load_catalog(path.read_text())
        have = {r.id for r in records}
        needed = {r.id for r in build_records(max_n)}
        if needed <= have:
            order = {cid: i for i, cid in enumerate(sorted(needed, key=lambda c: c.sort_key()))}
            return sorted(
                (r for r in records if r.id in needed), key=lambda r: order[r.id]
            )
    return build_records(max_n)


def main(argv=None):
    """Regenerate the bundled catalog.json (python -m branchlab.catalog)."""
    import argparse

    parser = argparse.ArgumentParser(description="rebuild the bundled catalog.json")
    parser.add_argument("--max-n", type=int, default=BUNDLED_MAX_N)
    parser.add_argument("--out", default=str(bundled_path()))
    args = parser.parse_args(argv)
    text = dump_catalog(build_records(args.max_n))
    with open(args.out, "w") as fh:
        fh.write(text + "\n")
    print("wrote %s" % args.out)


if __name__ == "__main__":
    main()
