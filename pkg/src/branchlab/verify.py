"""Evaluation-based verification: relation identities, transfer maps,
independence certificates.  Everything is exact; a failure carries the
offending parameter tuple and both sides' values.

The bound-8 boxes of the rank-7 cases make the inner loops hot, so the batch
checks compile symbols down to arithmetic on doubled integers (every affine
map in the catalog is half-integral).  The compiled routes are cross-checked
against the straightforward reference evaluation in the test suite.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg, weights
from .catalog import CaseId, CaseRecord, SymbolSpec, _branch_fibers
from .linalg import AffineMap, mat, vec
from .reps import casimir_eigenvalue


class InsufficientSampleError(ValueError):
    """The enumerated box is too small for the requested certificate degree."""


@dataclass
class CaseReport:
    case: CaseId
    bound: int
    checks_run: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, name: str, theta, expected, got, ok: bool):
        self.checks_run += 1
        if not ok:
            self.failures.append((name, theta, expected, got))


# ---------------------------------------------------------------------------
# reference evaluation


def _poly_eval(poly, values: Sequence[Fraction]) -> Fraction:
    total = Fraction(0)
    for exps, coeff in poly:
        term = coeff
        for v, e in zip(values, exps):
            if e:
                term *= v ** e
        total += term
    return total


def evaluate_generator_reference(record: CaseRecord, name: str, theta: Sequence[int]) -> Fraction:
    """Straightforward exact evaluation through the labelled-representation API."""
    theta = record.require_theta(theta)
    try:
        spec: SymbolSpec = record.symbols[name]
    except KeyError:
        raise KeyError("case %s has no generator %r" % (record.id, name))
    if spec.kind == "casimir":
        if spec.label == "pi":
            label = record.pi_label(record.pi_params_of(theta))
        elif spec.label == "nu":
            label = record.nu_label(theta)
        else:
            label = record.tau_label(record.tau_params_of(theta))
        value = casimir_eigenvalue(label)
        if isinstance(value, tuple):
            return value[spec.factor] if spec.factor is not None else sum(value, Fraction(0))
        return value
    if spec.kind == "euler":
        return spec.form.apply(theta)[0]
    if spec.kind == "power_ab":
        vmap = record.a_map if spec.vecname == "a" else record.b_map
        values = vmap.apply(theta)
        return Fraction(spec.base) ** spec.k * sum(
            (v ** (spec.scale * spec.k) for v in values), Fraction(0)
        )
    if spec.kind == "power_nu":
        values = record.nu_plus_rho(theta)
        return sum((v ** (spec.scale * spec.k) for v in values), Fraction(0))
    if spec.kind == "theta_poly":
        return _poly_eval(spec.poly, vec(theta))
    if spec.kind == "xyz_poly":
        j, jp, a = theta
        xyz = (Fraction((j + 3) ** 2), Fraction((jp + 3) ** 2), Fraction((a + 3) ** 2))
        return _poly_eval(spec.poly, xyz)
    raise ValueError("unknown symbol kind %r" % spec.kind)


# ---------------------------------------------------------------------------
# compiled evaluation on doubled integers


def _rows2(amap: AffineMap):
    """[(sparse integer row, offset)] for 2·amap, or None if not half-integral."""
    rows = []
    for row, off in zip(amap.matrix, amap.offset):
        if any((2 * x).denominator != 1 for x in row) or (2 * off).denominator != 1:
            return None
        rows.append(
            (tuple((i, int(2 * x)) for i, x in enumerate(row) if x), int(2 * off))
        )
    return rows


def _apply2(rows2, params) -> list[int]:
    return [sum(c * params[i] for i, c in coeffs) + off for coeffs, off in rows2]


def _compose_affine(outer_matrix, outer_offset, inner: AffineMap) -> AffineMap:
    rows = []
    for row in outer_matrix:
        rows.append(
            tuple(
                sum(row[k] * inner.matrix[k][j] for k in range(len(row)))
                for j in range(inner.source_dim)
            )
        )
    offset = tuple(
        o + sum(row[k] * inner.offset[k] for k in range(len(row)))
        for row, o in zip(outer_matrix, outer_offset)
    )
    return AffineMap(mat(rows), vec(offset), source=inner.source_dim)


_G2_GRAM4 = ((12, 6), (6, 4))


def _label_map_for(record: CaseRecord, label: str) -> AffineMap:
    """The composite theta ↦ highest-weight coordinates for pi/nu/tau."""
    if label == "pi":
        return _compose_affine(
            record.pi_label_map.matrix, record.pi_label_map.offset, record.pi_of_theta
        )
    if label == "nu":
        return record.nu_label_map
    return _compose_affine(
        record.tau_label_map.matrix, record.tau_label_map.offset, record.tau_of_theta
    )


def _group_for(record: CaseRecord, label: str):
    return {"pi": record.pi_group, "nu": record.nu_group, "tau": record.tau_group}[label]


class _Shared:
    """Per-theta memoized application of doubled affine maps."""

    def __init__(self):
        self.maps: dict[str, list] = {}

    def rows(self, key: str, amap: AffineMap):
        rows = self.maps.get(key)
        if rows is None:
            rows = _rows2(amap)
            if rows is None:
                raise ValueError("map %s is not half-integral" % key)
            self.maps[key] = rows
        return rows


def _getter(key: str, rows2):
    def get(theta, memo):
        v = memo.get(key)
        if v is None:
            v = _apply2(rows2, theta)
            memo[key] = v
        return v

    return get


def _int_casimir_blocks(group):
    """[(kind, slice, rho2, extra)] with value numerator over denominator 4·extra."""
    blocks = []
    for f, sl in group.factor_slices():
        fam = f.weyl.family
        rho2 = [int(2 * x) for x in f.rho]
        if fam == "G2":
            blocks.append(("g2", sl, rho2, 4))
        elif f.kind == "SU":
            blocks.append(("su", sl, rho2, f.rank))
        else:
            blocks.append(("orth", sl, rho2, 1))
    return blocks


def _int_symbol(record: CaseRecord, name: str, shared: _Shared):
    """(fn(theta, memo) -> int numerator, constant denominator) or None."""
    spec = record.symbols[name]
    if spec.kind == "casimir":
        amap = _label_map_for(record, spec.label)
        key = "label:%s" % spec.label
        rows = shared.rows(key, amap)
        get = _getter(key, rows)
        group = _group_for(record, spec.label)
        blocks = _int_casimir_blocks(group)
        if spec.factor is not None:
            blocks = [blocks[spec.factor]]
        den = 4 * math.lcm(*(extra for _, _, _, extra in blocks))

        def casimir_fn(theta, memo, blocks=tuple(blocks), den=den, get=get):
            lam2 = get(theta, memo)
            total = 0
            for kind, sl, rho2, extra in blocks:
                a = lam2[sl]
                if kind == "orth":
                    s = sum(x * (x + 2 * r) for x, r in zip(a, rho2))
                    total += s * (den // 4)
                elif kind == "su":
                    n = extra
                    s = sum(x * (x + 2 * r) for x, r in zip(a, rho2))
                    t = sum(a)
                    total += (n * s - t * t) * (den // (4 * n))
                else:  # g2
                    shifted = [x + 2 * r for x, r in zip(a, rho2)]
                    s = sum(
                        a[i] * _G2_GRAM4[i][j] * shifted[j]
                        for i in range(2)
                        for j in range(2)
                    )
                    total += s * (den // 16)
            return total

        return casimir_fn, den
    if spec.kind == "euler":
        key = "euler:%s" % name
        rows = shared.rows(key, spec.form)
        get = _getter(key, rows)
        return (lambda theta, memo: get(theta, memo)[0]), 2
    if spec.kind == "power_ab":
        vmap = record.a_map if spec.vecname == "a" else record.b_map
        key = "vec:%s" % spec.vecname
        rows = shared.rows(key, vmap)
        get = _getter(key, rows)
        e = spec.scale * spec.k
        num_scale = spec.base ** spec.k

        def power_ab_fn(theta, memo, get=get, e=e, s=num_scale):
            return s * sum(v ** e for v in get(theta, memo))

        return power_ab_fn, 2 ** e
    if spec.kind == "power_nu":
        shifted = AffineMap(
            record.nu_label_map.matrix,
            vec(tuple(a + b for a, b in zip(record.nu_label_map.offset, record.g_rho))),
            source=record.nu_label_map.source_dim,
        )
        key = "nurho"
        rows = shared.rows(key, shifted)
        get = _getter(key, rows)
        e = spec.scale * spec.k

        def power_nu_fn(theta, memo, get=get, e=e):
            return sum(v ** e for v in get(theta, memo))

        return power_nu_fn, 2 ** e
    if spec.kind in ("theta_poly", "xyz_poly"):
        den = math.lcm(*(c.denominator for _, c in spec.poly)) if spec.poly else 1
        terms = tuple((exps, int(c * den)) for exps, c in spec.poly)
        if spec.kind == "theta_poly":

            def theta_poly_fn(theta, memo, terms=terms):
                total = 0
                for exps, c in terms:
                    term = c
                    for v, e in zip(theta, exps):
                        if e:
                            term *= v ** e
                    total += term
                return total

            return theta_poly_fn, den

        def xyz_fn(theta, memo, terms=terms):
            j, jp, a = theta
            xyz = ((j + 3) ** 2, (jp + 3) ** 2, (a + 3) ** 2)
            total = 0
            for exps, c in terms:
                term = c
                for v, e in zip(xyz, exps):
                    if e:
                        term *= v ** e
                total += term
            return total

        return xyz_fn, den
    return None


def _symbol_cache(record: CaseRecord) -> dict:
    cache = record.__dict__.get("_symbol_cache")
    if cache is None:
        cache = {"shared": _Shared(), "int": {}}
        object.__setattr__(record, "_symbol_cache", cache)
    return cache


def _int_eval(record: CaseRecord, name: str):
    cache = _symbol_cache(record)
    if name not in cache["int"]:
        cache["int"][name] = _int_symbol(record, name, cache["shared"])
    return cache["int"][name]


def evaluate_generator(record: CaseRecord, name: str, theta: Sequence[int]) -> Fraction:
    """The exact scalar by which the named generator acts on the theta-isotypic part."""
    theta = record.require_theta(theta)
    if name not in record.symbols:
        raise KeyError("case %s has no generator %r" % (record.id, name))
    pair = _int_eval(record, name)
    if pair is None:
        return evaluate_generator_reference(record, name, theta)
    fn, den = pair
    return Fraction(fn(theta, {}), den)


# ---------------------------------------------------------------------------
# relation suite


def check_relations(record: CaseRecord, bound: int) -> CaseReport:
    """Evaluate every stored relation identity on every enumerated theta."""
    report = CaseReport(record.id, bound)
    compiled = []
    for rel in record.relations:
        pairs = [(coeff, _int_eval(record, sym)) for coeff, sym in rel.terms]
        L = math.lcm(*(den * coeff.denominator for coeff, (fn, den) in pairs))
        terms = tuple(
            (int(coeff * L) // den, fn) for coeff, (fn, den) in pairs
        )
        compiled.append((rel.name, terms))
    failures = []
    count = 0
    for theta in record.theta.enumerate(bound):
        memo: dict = {}
        for name, terms in compiled:
            count += 1
            total = 0
            for m, fn in terms:
                total += m * fn(theta, memo)
            if total:
                failures.append(("relation:%s" % name, theta, 0, total))
    report.checks_run = count
    report.failures = failures
    return report


# ---------------------------------------------------------------------------
# transfer suite


def transfer_map(record: CaseRecord, tau_params: Sequence[int]) -> AffineMap:
    """The affine map S_tau carrying restricted eigenvalue parameters to
    Z(g_C)-infinitesimal characters, for tau in Disc(K/H)."""
    return record.transfer(tau_params)


def _canonical_char(record: CaseRecord, v) -> tuple:
    v = vec(v)
    if record.mod_trace:
        # SU-side infinitesimal characters live modulo the trace direction.
        mean = sum(v) / len(v)
        v = tuple(x - mean for x in v)
    return weights.dominant_representative(record.g_weyl, v)


def _transfer_image_map(record: CaseRecord) -> AffineMap:
    """theta ↦ S_{tau(theta)}(lambda(theta) + rho_a), as one affine map."""
    a = _compose_affine(record.transfer_matrix, record.transfer_offset, record.lam_rhoa_map)
    b = _compose_affine(
        record.transfer_tau,
        vec([0] * len(record.transfer_offset)),
        record.tau_of_theta,
    )
    rows = mat(
        tuple(tuple(x + y for x, y in zip(r1, r2)) for r1, r2 in zip(a.matrix, b.matrix))
    )
    return AffineMap(
        rows, vec(tuple(x + y for x, y in zip(a.offset, b.offset))), source=a.source_dim
    )


def _canonical2(record: CaseRecord, values2: list[int]):
    """Canonical W(g_C)-orbit form on doubled-integer coordinates."""
    if record.mod_trace:
        n = len(values2)
        total = sum(values2)
        values2 = [n * v - total for v in values2]
    out = []
    pos = 0
    for f in record.g_weyl.factors or (record.g_weyl,):
        k = f.ncoords
        block = values2[pos : pos + k]
        pos += k
        fam = f.family
        if fam == "A":
            out.extend(sorted(block, reverse=True))
        elif fam in ("B", "C", "BC"):
            out.extend(sorted((abs(x) for x in block), reverse=True))
        elif fam == "D":
            flips = sum(1 for x in block if x < 0)
            blk = sorted((abs(x) for x in block), reverse=True)
            if flips % 2 == 1 and blk[-1] != 0:
                blk[-1] = -blk[-1]
            out.extend(blk)
        elif fam == "Trivial":
            out.extend(block)
        else:  # G2: exact slow route (tiny cases only)
            canon = weights.dominant_representative(
                f, vec([Fraction(x, 2) for x in block])
            )
            out.extend(2 * c for c in canon)
    return tuple(out)


def check_transfer(record: CaseRecord, bound: int) -> CaseReport:
    """S_tau(lambda(theta) + rho_a) = nu(theta) + rho mod W(g_C), exactly."""
    report = CaseReport(record.id, bound)
    image_map = _transfer_image_map(record)
    nurho_map = AffineMap(
        record.nu_label_map.matrix,
        vec(tuple(a + b for a, b in zip(record.nu_label_map.offset, record.g_rho))),
        source=record.nu_label_map.source_dim,
    )
    img2 = _rows2(image_map)
    nr2 = _rows2(nurho_map)
    count = 0
    failures = []
    for theta in record.theta.enumerate(bound):
        count += 1
        if img2 is not None and nr2 is not None:
            lhs = _canonical2(record, _apply2(img2, theta))
            rhs = _canonical2(record, _apply2(nr2, theta))
        else:
            lhs = _canonical_char(record, image_map.apply(theta))
            rhs = _canonical_char(record, nurho_map.apply(theta))
        if lhs != rhs:
            failures.append(("transfer", theta, rhs, lhs))
    report.checks_run = count
    report.failures = failures
    return report


# ---------------------------------------------------------------------------
# independence certificates


def _monomials(nvars: int, degree: int) -> list[tuple[int, ...]]:
    out = set()
    for total in range(degree + 1):
        for exps in itertools.combinations_with_replacement(range(nvars), total):
            mono = [0] * nvars
            for i in exps:
                mono[i] += 1
            out.add(tuple(mono))
    return sorted(out)


def _prod(values, mono) -> Fraction:
    out = Fraction(1)
    for v, e in zip(values, mono):
        if e:
            out *= v ** e
    return out


def independence_certificate(
    record: CaseRecord,
    gens: Sequence[str],
    bound: int,
    degree: int,
) -> tuple[bool, list[tuple[int, ...]]]:
    """True iff no polynomial relation of total degree <= ``degree`` holds among
    the generator evaluations on the enumerated box; the witness is a set of
    parameter tuples giving an invertible maximal minor of the moment matrix.
    """
    if degree < 0:
        raise ValueError("degree must be >= 0")
    if degree == 0:
        return True, []
    thetas = record.theta.enumerate(bound)
    monos = _monomials(len(gens), degree)
    ncols = len(monos)
    if len(thetas) < ncols:
        raise InsufficientSampleError(
            "box with %d points cannot certify degree %d over %d generators"
            % (len(thetas), degree, len(gens))
        )
    evals = [_int_eval(record, g) for g in gens]
    basis: list[list[Fraction]] = []
    pivots: dict[int, int] = {}
    witness: list[tuple[int, ...]] = []
    for theta in thetas:
        memo: dict = {}
        values = [Fraction(fn(theta, memo), den) for fn, den in evals]
        row = [_prod(values, mono) for mono in monos]
        while True:
            lead = next((c for c in range(ncols) if row[c] != 0), None)
            if lead is None or lead not in pivots:
                break
            f = row[lead]
            brow = basis[pivots[lead]]
            row = [x - f * y for x, y in zip(row, brow)]
        if lead is None:
            continue
        inv = 1 / row[lead]
        row = [x * inv for x in row]
        pivots[lead] = len(basis)
        basis.append(row)
        witness.append(theta)
        if len(basis) == ncols:
            return True, witness
    return False, witness


def function_in_span(
    record: CaseRecord,
    gens: Sequence[str],
    values_by_theta,
    bound: int,
    degree: int,
) -> bool:
    """Is the given function of theta a polynomial of total degree <= degree in
    the generator evaluations on the box?  (Exact rank comparison.)"""
    thetas = record.theta.enumerate(bound)
    monos = _monomials(len(gens), degree)
    evals = [_int_eval(record, g) for g in gens]
    rows, rhs = [], []
    for theta in thetas:
        memo: dict = {}
        vals = [Fraction(fn(theta, memo), den) for fn, den in evals]
        rows.append([_prod(vals, mono) for mono in monos])
        rhs.append(Fraction(values_by_theta(theta)))
    m = linalg.mat(rows)
    base_rank = linalg.rank(m)
    aug = linalg.mat([row + [b] for row, b in zip(rows, rhs)])
    return linalg.rank(aug) == base_rank


def check_ix_parity_gap(record: CaseRecord, bound: int, degree: int = 4) -> bool:
    """Case (ix) exception witness: the parity of the U(3)-charge is not a
    polynomial (degree <= 4) in the two Casimir evaluations, so the pair
    {C_Gtilde, C_G} generates an index-two subalgebra of the evaluation image.
    """
    if not record.parity_gap_gens:
        raise ValueError("case %s stores no parity-gap generators" % record.id)
    return not function_in_span(
        record,
        record.parity_gap_gens,
        lambda theta: theta[1] % 2,
        bound,
        degree,
    )


# ---------------------------------------------------------------------------
# structural checks


def check_rank_identity(record: CaseRecord) -> bool:
    a, b, c = record.rank3
    return a + b == c


def check_degree_counts(record: CaseRecord) -> bool:
    return len(record.degrees_p) + len(record.degrees_q) == record.degrees_rank


def _dim_table(group):
    """Per-factor data for fast dimensions, or None if a G2 factor is present."""
    infos = []
    for f, sl in group.factor_slices():
        fam = f.weyl.family
        if fam == "G2":
            return None
        rho2 = [int(2 * x) for x in f.rho]
        if fam == "Trivial":
            infos.append((None, sl, rho2, 1))
            continue
        _, den = weights._dim_classical(fam, rho2, rho2)
        infos.append((fam, sl, rho2, den))
    return infos


def _dim_fast(infos, lam2) -> int:
    total = 1
    for fam, sl, rho2, den in infos:
        if fam is None:
            continue
        block = lam2[sl]
        if not weights._dominant_classical(fam, block):
            raise ValueError("non-dominant weight block %s" % (block,))
        shifted = [x + r for x, r in zip(block, rho2)]
        num, _ = weights._dim_classical(fam, shifted, rho2)
        if num % den:
            raise AssertionError("non-integral dimension")
        total *= num // den
    return total


def check_dimension_conservation(record: CaseRecord, bound: int) -> CaseReport:
    """dim pi = sum of dim theta over the branching, exactly."""
    report = CaseReport(record.id, bound)
    pi_full = record.pi_label_map
    pi2 = _rows2(pi_full)
    nu2 = _rows2(record.nu_label_map)
    pi_infos = _dim_table(record.pi_group)
    nu_infos = _dim_table(record.nu_group)

    def pi_dim(pi_params):
        if pi2 is not None and pi_infos is not None:
            return _dim_fast(pi_infos, _apply2(pi2, pi_params))
        t = record.pi_group.weyl
        return weights.weyl_dimension(t, record.pi_group.rho, pi_full.apply(pi_params))

    def nu_dim(theta):
        if nu2 is not None and nu_infos is not None:
            return _dim_fast(nu_infos, _apply2(nu2, theta))
        return weights.weyl_dimension(
            record.g_weyl, record.g_rho, record.nu_label_map.apply(theta)
        )

    count = 0
    failures = []
    for pi_params in record.pi_space.enumerate(bound):
        count += 1
        try:
            expected = pi_dim(pi_params)
            total = 0
            for theta in _branch_fibers(record.branch_rule, tuple(pi_params)):
                total += nu_dim(theta)
        except (ValueError, AssertionError) as exc:
            failures.append(("dimension", tuple(pi_params), "computable", repr(exc)))
            continue
        if expected != total:
            failures.append(("dimension", tuple(pi_params), expected, total))
    report.checks_run = count
    report.failures = failures
    return report


def check_strong_multiplicity_freeness(record: CaseRecord, bound: int) -> CaseReport:
    """Branches of distinct pi are disjoint and exhaust Disc(G/H); every theta
    recovers its pi via the canonical map and occurs in its branching."""
    report = CaseReport(record.id, bound)
    nu2 = _rows2(record.nu_label_map)
    labelkey = (
        (lambda theta: tuple(_apply2(nu2, theta)))
        if nu2 is not None
        else (lambda theta: record.nu_label_map.apply(theta))
    )
    pi2 = _rows2(record.pi_of_theta)
    seen: dict[tuple, tuple] = {}
    fiber_of: dict[tuple, tuple] = {}
    count = 0
    failures = []
    contains = record.theta.contains
    for pi_params in record.pi_space.enumerate(bound):
        pi_params = tuple(pi_params)
        for theta in _branch_fibers(record.branch_rule, pi_params):
            count += 2
            if not contains(theta):
                failures.append(("branch-valid", theta, True, False))
                continue
            key = labelkey(theta)
            if key in seen:
                failures.append(("disjoint", theta, None, seen[key]))
            seen[key] = pi_params
            fiber_of[theta] = pi_params
    for theta in record.theta.enumerate(bound):
        if pi2 is not None:
            doubled = _apply2(pi2, theta)
            if any(v % 2 for v in doubled):
                failures.append(("integral-pi", theta, True, False))
                count += 1
                continue
            pi_params = tuple(v // 2 for v in doubled)
        else:
            pi_params = record.pi_params_of(theta)
        if all(abs(p) <= bound for p in pi_params):
            count += 2
            if fiber_of.get(theta) != pi_params:
                failures.append(("recovers-pi", theta, pi_params, fiber_of.get(theta)))
            if labelkey(theta) not in seen:
                failures.append(("exhausts", theta, True, False))
    report.checks_run = count
    report.failures = failures
    return report


def check_pi_side_consistency(record: CaseRecord, bound: int) -> CaseReport:
    """evaluate_generator on the P-side Casimir equals casimir_eigenvalue of the
    independently constructed pi(theta) label (per factor for products)."""
    report = CaseReport(record.id, bound)
    casimir_syms = [
        (name, s, _int_eval(record, name))
        for name, s in sorted(record.symbols.items())
        if s.kind == "casimir" and s.label == "pi"
    ]
    pi2 = _rows2(record.pi_of_theta)
    cache: dict[tuple, object] = {}
    count = 0
    failures = []
    for theta in record.theta.enumerate(bound):
        if pi2 is not None:
            pi_params = tuple(v // 2 for v in _apply2(pi2, theta))
        else:
            pi_params = record.pi_params_of(theta)
        value = cache.get(pi_params)
        if value is None:
            value = casimir_eigenvalue(record.pi_label(pi_params))
            cache[pi_params] = value
        memo: dict = {}
        for name, s, (fn, den) in casimir_syms:
            count += 1
            if isinstance(value, tuple):
                expected = value[s.factor] if s.factor is not None else sum(value, Fraction(0))
            else:
                expected = value
            got = Fraction(fn(theta, memo), den)
            if expected != got:
                failures.append(("pi-side:%s" % name, theta, expected, got))
    report.checks_run = count
    report.failures = failures
    return report
