"""Named verification suites aggregating the exact checks of each module.

Each suite returns a list of Check records (name, ok, witness, value); the
command line front end renders them and derives its exit code from the
conjunction.  Randomized inputs are drawn from an explicit seed through
`random.Random`, using only integer draws, so runs are reproducible
bit for bit.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import sparsemat
from .curvature import (
    BianchiSystem,
    ModelCurvature,
    alpha_fourth,
    einstein_report,
    curv_span_rank,
    injectivity_report,
    ker_m_rank,
    qzero_check,
    random_sym4,
    sym4_acts_trivially,
    sym4_extraction,
)
from .lefschetz import (
    Check,
    check_ext_relations,
    check_sl2,
    check_sym_relations,
    primitive_space,
)
from .scalar import Scalar
from .spinor import SpinorSpace, kraines_eigenvalue, rank_formula
from .symplectic import SymplecticSpace
from .weitzenboeck import (
    curvature_scalar_identities,
    eq51_vector,
    estimate_bound,
    lichnerowicz_vector,
    recover_matches_closed_form,
    recover_we,
    recover_wh,
    row_combination,
    twistor_elimination_vector,
    we_closed,
    wh_closed,
)

SUITES = ("clifford", "lemmas", "curvature", "bianchi", "weitzenboeck", "all")


def suite_clifford(n: int, seed: int = 0) -> list[Check]:
    checks = []
    spin = SpinorSpace(n)

    dims_ok = all(spin.grade_dim(r) == rank_formula(n, r) for r in range(n + 1))
    checks.append(Check(f"spinor ranks match formula (n={n})", dims_ok,
                        value=[rank_formula(n, r) for r in range(n + 1)]))
    checks.append(Check(f"total spinor dimension 4^{n}", spin.dim == 4 ** n,
                        value=spin.dim))

    mats = {t: spin.mu_matrix({t: Fraction(1)}) for t in spin.tangent_basis()}
    bad = None
    for tx in spin.tangent_basis():
        for ty in spin.tangent_basis():
            anti = sparsemat.madd(sparsemat.compose(mats[tx], mats[ty]),
                                  sparsemat.compose(mats[ty], mats[tx]))
            g = spin.metric({tx: Fraction(1)}, {ty: Fraction(1)})
            expect = {k: {k: -2 * g} for k in range(spin.dim)} if g else {}
            if sparsemat.msub(anti, expect):
                bad = (tx, ty)
                break
        if bad:
            break
    checks.append(Check(f"Clifford anticommutation relation (n={n}, "
                        f"all {(4 * n) ** 2} basis pairs)", bad is None, bad))

    bad = None
    for key in spin.flat_basis():
        r = key[0]
        for t in spin.tangent_basis():
            img = spin.mu({t: Fraction(1)}, {key: Fraction(1)})
            if any(k[0] not in (r - 1, r + 1) for k in img):
                bad = (key, t)
                break
        if bad:
            break
    checks.append(Check("Clifford multiplication shifts the grade by one",
                        bad is None, bad))

    bad = None
    for key in spin.flat_basis():
        v = spin.hermitian({key: Fraction(1)}, {key: Fraction(1)})
        if not v.is_positive_real():
            bad = key
            break
    checks.append(Check("twisted Hermitian form positive on the basis",
                        bad is None, bad))

    rng = random.Random(seed)
    bad = None
    for _ in range(20):
        x = {(rng.randrange(2), rng.randrange(2 * n)):
             Scalar(rng.randint(-2, 2), 0, rng.randint(-2, 2), 0)}
        xbar = spin.conjugate_tangent(x)
        r = rng.randrange(0, n + 1)
        psi1 = _rand_spinor(spin, r, rng)
        psi2 = _rand_spinor(spin, r + 1, rng) if r + 1 <= n else {}
        lhs = spin.hermitian(spin.mu_plus_minus(x, psi1), psi2)
        rhs = spin.hermitian(psi1, spin.mu_minus_plus(xbar, psi2))
        if lhs != -rhs:
            bad = (x, r)
            break
    checks.append(Check("adjointness of the two Clifford components",
                        bad is None, bad))

    bad = None
    for r in range(n + 1):
        C = spin.casimir_matrix(r)
        want = Fraction(-r * (r + 2))
        good = sparsemat.is_scalar_multiple(C, r + 1, want) if want else not C
        if not good:
            bad = r
            break
        op = sparsemat.madd(sparsemat.identity(r + 1, Fraction(6 * n)),
                            sparsemat.mscale(C, Fraction(4)))
        if not sparsemat.is_scalar_multiple(op, r + 1, kraines_eigenvalue(n, r)):
            bad = r
            break
    checks.append(Check("Casimir scalar -r(r+2) and Kraines eigenvalue "
                        "6n - 4r(r+2)", bad is None, bad,
                        value=[kraines_eigenvalue(n, r) for r in range(n + 1)]))

    flat = spin.flat_basis()
    idx = {k: m for m, k in enumerate(flat)}
    bad = None
    r0_value = None
    for pair in [(0, 0), (0, 1), (1, 1)]:
        M = spin.two_form_matrix(pair)
        expect = {}
        for key in flat:
            p, q, hm, col = key
            colm = {idx[(p, q, hm2, col)]: 2 * v
                    for hm2, v in spin.sym2h_derivation(pair, hm).items()}
            if colm:
                expect[idx[key]] = colm
        diff = sparsemat.msub(M, expect)
        # grade-0 block separately: reported, and empirically zero as well
        r0_block = {c: v for c, v in M.items() if flat[c][0] == 0}
        r0_value = "zero" if not r0_block else "nonzero"
        if any(flat[c][0] >= 1 for c in diff):
            bad = pair
            break
    checks.append(Check("two-form action is twice the derivation (grades r>=1)",
                        bad is None, bad))
    checks.append(Check("two-form action on grade 0 (reported, not asserted)",
                        True, value=r0_value))
    return checks


def _rand_spinor(spin: SpinorSpace, r: int, rng) -> dict:
    out = {}
    if not 0 <= r <= spin.n:
        return out
    for key in spin.grade_basis(r):
        if rng.randrange(2):
            c = Scalar(rng.randint(-3, 3), 0, rng.randint(-2, 2), 0)
            if c:
                out[key] = c
    return out


def suite_lemmas(n: int, seed: int = 0) -> list[Check]:
    E = SymplecticSpace(n)
    checks = list(check_sl2(E))
    for s in range(n + 1):
        checks.extend(check_ext_relations(E, s))
    for r in range(n + 2):
        checks.extend(check_sym_relations(r))
    bad = None
    for q in range(n + 1):
        prim = primitive_space(E, q)
        if prim.projector() != prim.projector_sl2():
            bad = q
            break
    checks.append(Check("kernel-basis and sl2 projectors agree", bad is None, bad))
    return checks


def suite_curvature(n: int, seed: int = 0) -> list[Check]:
    checks = []
    dims = [curv_span_rank(N) for N in (2, 3, 4)]
    checks.append(Check("Curv dimension N^2(N^2-1)/12 at N=2,3,4",
                        dims == [1, 6, 20], dims, value=dims))
    kerd = [ker_m_rank(N) for N in (2, 3, 4)]
    checks.append(Check("ker(m) matches the generator span", kerd == dims, kerd))

    rep = injectivity_report(1)
    checks.append(Check("i_Lambda fails exactly at dim V = 2",
                        rep["i_sym_injective"] and not rep["i_lambda_injective"],
                        rep))
    rep = injectivity_report(2)
    checks.append(Check("i_Sym and i_Lambda injective at dim V = 4",
                        rep["i_sym_injective"] and rep["i_lambda_injective"],
                        rep))

    rng = random.Random(seed)
    rform = random_sym4(n, rng)
    rep = einstein_report(n, rform)
    checks.append(Check("Ricci constants (-3, -(2n+1), 0)",
                        rep["ricci_H"] == -3 and
                        rep["ricci_E"] == -(2 * n + 1) and
                        rep["ricci_hyper"] == 0, rep,
                        value=[rep["ricci_H"], rep["ricci_E"], rep["ricci_hyper"]]))
    checks.append(Check("Einstein coefficient kappa/(4n)", rep["einstein_ok"],
                        value=rep["einstein_coefficient"]))

    model = ModelCurvature(n, rform)
    h_quads = [
        [{0: Fraction(1)}, {1: Fraction(1)}, {0: Fraction(1)}, {1: Fraction(1)}],
        [{0: Fraction(2), 1: Fraction(1)}, {1: Fraction(3)},
         {0: Fraction(1), 1: Fraction(-1)}, {0: Fraction(1), 1: Fraction(2)}],
    ]
    bad = None
    for _ in range(10):
        e_quad = tuple(rng.randrange(2 * n) for _ in range(4))
        want = model.rvalue(*e_quad)
        vals = [sym4_extraction(model, "hyper", hq, e_quad) for hq in h_quads]
        if any(v != want for v in vals):
            bad = e_quad
            break
    checks.append(Check("symmetric 4-form extraction round-trip, "
                        "h-choice independent", bad is None, bad))

    bad = None
    for trial in range(20):
        rf = random_sym4(n, rng) if trial else alpha_fourth(
            n, {i: Fraction(rng.randint(-3, 3)) for i in range(2 * n)})
        if not sym4_acts_trivially(n, rf)["ok"]:
            bad = ("lambda-E", trial)
            break
        for r in range(n + 1):
            if not qzero_check(n, r, rf)["ok"]:
                bad = ("primitive", trial, r)
                break
        if bad:
            break
    checks.append(Check("symmetric 4-forms act trivially (20 seeded forms, "
                        "ambient and primitive)", bad is None, bad))
    return checks


def suite_bianchi(n: int, seed: int = 0) -> list[Check]:
    if n > 2:
        raise ValueError("bianchi suite limited to n <= 2")
    system = BianchiSystem(n)
    rep = system.solution_equals_ker_m()
    expected = (4 * n) ** 2 * ((4 * n) ** 2 - 1) // 12
    return [
        Check(f"Bianchi solution space dimension (n={n})",
              rep["dim_solutions"] == expected, rep["dim_solutions"],
              value=rep["dim_solutions"]),
        Check("solutions of I-III' equal ker(m) as subspaces", rep["equal"],
              None if rep["equal"] else rep["witness"]),
    ]


def suite_weitzenboeck(n: int, seed: int = 0) -> list[Check]:
    checks = []
    for r in range(n + 1):
        rep = recover_matches_closed_form(n, r)
        generic = 1 <= r <= n - 1
        label = "full 6x6" if generic else f"surviving columns {rep['alive']}"
        checks.append(Check(f"recovered matrix equals closed form at r={r} "
                            f"({label})", rep["ok"], rep["mismatches"] or None))
    for r in range(1, n):
        checks.append(Check(f"H-part sub-oracle at r={r}",
                            recover_wh(r) == wh_closed(r)))
        checks.append(Check(f"E-part sub-oracle at r={r}",
                            recover_we(n, r) == we_closed(n, r)))
    for r in range(n + 1):
        rep = curvature_scalar_identities(n, r)
        checks.append(Check(
            f"curvature-scalar operator identities at r={r}",
            rep["h_identity_ok"] and rep["e_identity_ok"] and
            rep["kappa4_h_matches"] and rep["kappa4_e_matches"],
            value=[rep["kappa4_coefficient_h"], rep["kappa4_coefficient_e"]]))
    for r in range(1, n):
        combo = row_combination(n, r, lichnerowicz_vector(n, r))
        ops = combo["operator_coefficients"]
        ok = (ops["D+- D-+"] == 1 and ops["D-+ D+-"] == 1 and
              combo["lhs_kappa4"] == 1 and
              all(ops[k] == 0 for k in ("D-- D++", "D++ D--", "T+* T+", "T-* T-")))
        checks.append(Check(f"Lichnerowicz combination at r={r}", ok, combo))
        combo = row_combination(n, r, eq51_vector(n, r))
        ok = (combo["atW"][4] == combo["atW"][5] == 0 and
              combo["lhs_kappa4"] == Fraction(r * r * (r + 2), n * (n + 2)))
        checks.append(Check(f"twistor-free combination at r={r}", ok, combo))
    for r in range(n):
        combo = row_combination(n, r, twistor_elimination_vector(n, r))
        ok = (combo["atW"][3] == 0 and combo["atW"][5] == 0 and
              combo["lhs_kappa4"] == Fraction((r + 2) * (n + r + 2), n + 2))
        checks.append(Check(f"estimate combination at r={r}", ok, combo))
        if n >= 2:
            rep = estimate_bound(n, r, Fraction(4))
            checks.append(Check(f"bound coefficient re-derived at r={r}",
                                rep["agree"], rep, value=rep["coefficient"]))
    return checks


def run_suite(name: str, n: int, seed: int = 0) -> list[Check]:
    if name == "all":
        checks = []
        for s in SUITES[:-1]:
            if s == "bianchi" and n > 2:
                checks.append(Check("bianchi suite skipped (n > 2)", True,
                                    value="resource guard"))
                continue
            checks.extend(run_suite(s, n, seed))
        return checks
    if name == "clifford":
        return suite_clifford(n, seed)
    if name == "lemmas":
        return suite_lemmas(n, seed)
    if name == "curvature":
        return suite_curvature(n, seed)
    if name == "bianchi":
        return suite_bianchi(n, seed)
    if name == "weitzenboeck":
        return suite_weitzenboeck(n, seed)
    raise ValueError(f"unknown suite {name!r}")
