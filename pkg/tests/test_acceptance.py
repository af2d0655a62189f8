"""Acceptance suite: one test per criterion, exact equality everywhere
(the arithmetic is exact, so every tolerance is zero), fixtures at desk
scale over Q, F_5 and F_7.

Run with ``pytest tests/test_acceptance.py -s`` to see one pass/fail line
per criterion with its runtime.
"""

import json
import time

from quasihopf import traces as tr
from quasihopf.adjoint import (adjoint_algebra, categorical_cointegral,
                               class_functions, frobenius_structure,
                               int_r_module, l_functor, left_adjoint_iso)
from quasihopf.algebra import AlgebraError, all_ok, verify_axioms
from quasihopf.cli import main as cli_main
from quasihopf.identities import identity_suite
from quasihopf.integrals import (characterization_system,
                                 cointegrals_via_coinvariants, frobenius_maps,
                                 integral_data, nakayama)
from quasihopf.linalg import Matrix, in_span, mat_inverse, same_span
from quasihopf.modules import regular_module, tensor_module, trivial_module
from quasihopf.yd import r_functor, yd_is_morphism, yd_verify
from .conftest import get_fixture

FIXTURES = ("kZ2", "kZ3", "kZ4", "sweedler", "h2", "dgc-2-5", "dgc-3-7")


def _report(num, title, started, ok=True):
    dt = time.time() - started
    print("\nACCEPTANCE %02d %-22s %s (%.2fs)" % (num, title,
                                                  "PASS" if ok else "FAIL", dt))
    assert ok


def test_criterion_01_axioms():
    t0 = time.time()
    ok = True
    for name in FIXTURES:
        A = get_fixture(name)
        variants = [A, A.opposite(), A.coopposite(),
                    A.gauge_twist(A.random_gauge(A.name))]
        for B in variants:
            entries = verify_axioms(B)
            if len(entries) != 8 or not all_ok(entries):
                ok = False
            if not all_ok(B.structure_report()):
                ok = False
    _report(1, "axioms 8/8", t0, ok)


def test_criterion_02_identity_suite():
    t0 = time.time()
    ok = True
    for name in FIXTURES:
        A = get_fixture(name)
        for B in (A, A.gauge_twist(A.random_gauge(A.name))):
            entries = identity_suite(B)
            if not all_ok(entries):
                ok = False
    _report(2, "identity suite", t0, ok)


def test_criterion_03_cointegral_equivalence():
    t0 = time.time()
    ok = True
    for name in FIXTURES:
        A = get_fixture(name)
        data = integral_data(A)
        if len(data.left_integrals) != 1 or len(data.right_integrals) != 1:
            ok = False
        if A.pair(data.lam, data.left_integrals[0]) == A.field.zero:
            ok = False
        lc, rc = cointegrals_via_coinvariants(A)
        if len(lc) != 1 or len(rc) != 1:
            ok = False
        for side, ref in (("left", lc), ("right", rc)):
            for item in (2, 3, 4, 5):
                sp = characterization_system(A, side, item, data.mu)
                if not same_span(sp, ref, A.field, A.dim):
                    ok = False
    _report(3, "cointegral equivalence", t0, ok)


def test_criterion_04_frobenius_maps():
    t0 = time.time()
    ok = True
    for name in FIXTURES:
        A = get_fixture(name)
        data = integral_data(A)
        tl, trm, il, ir = frobenius_maps(A, data)
        I = Matrix.identity(A.field, A.dim)
        if ir * trm != I or trm * ir != I or il * tl != I or tl * il != I:
            ok = False
        nu = nakayama(A, data.lam, data.mu)  # defining property checked inside
        # nu = S o (<- mu) o S as matrices, and independently Theta_L^-1 Theta_R
        from quasihopf.algebra import elt_harpoon_l
        hl = Matrix.from_columns(A.field,
                                 [elt_harpoon_l(A, A.e(j), data.mu)
                                  for j in range(A.dim)])
        if nu != A.S * hl * A.S or nu != il * trm:
            ok = False
    _report(4, "Frobenius dual bases", t0, ok)


def test_criterion_05_adjoint_algebra():
    t0 = time.time()
    ok = True
    for name in FIXTURES:
        A = get_fixture(name)
        if not all_ok(adjoint_algebra(A).report(deep=True)):
            ok = False
    _report(5, "adjoint algebra", t0, ok)


def test_criterion_06_class_functions():
    t0 = time.time()
    ok = True
    for name in FIXTURES:
        A = get_fixture(name)
        cf = class_functions(A)
        if len(cf.basis) != cf.end_dim or not all_ok(cf.report()):
            ok = False
    _report(6, "class functions", t0, ok)


def test_criterion_07_categorical_cointegrals():
    t0 = time.time()
    ok = True
    for name in FIXTURES:
        A = get_fixture(name)
        data = integral_data(A)
        amu, space, lam_cat = categorical_cointegral(A, data)
        if len(space) != 1 or not any(lam_cat) \
                or not in_span(space, lam_cat, A.field) \
                or not all(e.ok for e in yd_verify(amu)):
            ok = False
        for V in (trivial_module(A), regular_module(A)):
            L = l_functor(A, V)
            R = r_functor(A, tensor_module(int_r_module(A, data), V))
            iso = left_adjoint_iso(A, V, data)
            if mat_inverse(iso) is None or not yd_is_morphism(iso, R, L):
                ok = False
    _report(7, "categorical cointegrals", t0, ok)


def test_criterion_08_unimodular_frobenius():
    t0 = time.time()
    ok = True
    for name in ("kZ2", "kZ3", "kZ4", "h2"):
        A = get_fixture(name)
        if not all_ok(frobenius_structure(A).report()):
            ok = False
    try:
        frobenius_structure(get_fixture("sweedler"))
        ok = False
    except AlgebraError:
        pass
    _report(8, "unimodular Frobenius", t0, ok)


def test_criterion_09_twisted_traces():
    t0 = time.time()
    ok = True
    for name in FIXTURES:
        A = get_fixture(name)
        data = integral_data(A)
        pivs, status = tr.find_pivotal_elements(A)
        if status != "found":
            ok = False
            continue
        g = pivs[0].g
        musym = tr.mu_symmetrized_cointegrals(A, g, data)
        hh0 = tr.hh0_space(A, data.mu)
        if len(musym) != 1 or not all(in_span(hh0, t, A.field) for t in musym):
            ok = False
        if not all(tr.check_progen_condition(A, g, t, data.mu) for t in musym):
            ok = False
        sol = tr.progen_solution_space(A, g, data.mu)
        if not same_span(sol, musym, A.field, A.dim):
            ok = False
        if not tr.trace_cyclicity_check(A, musym[0], data.mu, seed=A.name, count=20):
            ok = False
        if not tr.module_trace_property_check(A, g, musym[0], data.mu):
            ok = False
        outside = next((t for t in hh0 if not in_span(musym, t, A.field)), None)
        if outside is not None:
            if tr.check_progen_condition(A, g, outside, data.mu):
                ok = False
            if tr.module_trace_property_check(A, g, outside, data.mu):
                ok = False
        # the spanning-map trace values t(x) xi(y)
        H = regular_module(A)
        ftr = tr.FreeModuleTrace(A, musym[0], data.mu, H)
        for m in range(A.dim):
            gp = tr.gamma_prime(A, data.mu, A.e(m), A.e(0), A.e(m))
            if ftr.value(gp, check=False) != musym[0][0]:
                ok = False
    _report(9, "twisted module traces", t0, ok)


def test_criterion_10_unibalanced():
    t0 = time.time()
    ok = True
    for name in FIXTURES:
        A = get_fixture(name)
        data = integral_data(A)
        pivs, status = tr.find_pivotal_elements(A)
        if status != "found":
            ok = False
            continue
        by_def, by_lines = tr.unibalanced_criteria(A, pivs[0], data)
        if by_def != by_lines:
            ok = False
    _report(10, "unibalanced criteria", t0, ok)


def test_criterion_11_cli_determinism(tmp_path):
    t0 = time.time()
    ok = True
    f = str(tmp_path / "h2.qha")
    if cli_main(["gen", "h2", "-o", f]) != 0:
        ok = False
    j1, j2 = str(tmp_path / "a.json"), str(tmp_path / "b.json")
    if cli_main(["report", f, "--json", j1]) != 0:
        ok = False
    if cli_main(["report", f, "--json", j2]) != 0:
        ok = False
    if open(j1, "rb").read() != open(j2, "rb").read():
        ok = False

    def corrupt(mutate, expect_tag):
        doc = json.load(open(f))
        mutate(doc)
        bad = str(tmp_path / "bad.qha")
        json.dump(doc, open(bad, "w"))
        jout = str(tmp_path / "bad.json")
        code = cli_main(["verify", bad, "--json", jout])
        if code == 0:
            return False
        rep = json.load(open(jout))
        failing = [e["tag"] for sec in rep["sections"].values()
                   for e in sec if e["status"] == "fail"]
        return expect_tag in failing

    def bad_phi(doc):
        doc["phi"][7] = "9"
        doc.pop("phi_inv", None)

    def bad_antipode(doc):
        doc["antipode"][1] = ["1", "1"]

    def bad_phi_inv(doc):
        doc["phi_inv"][0] = "5"

    if not corrupt(bad_phi, "q-Hopf-def-3"):
        ok = False
    if not corrupt(bad_antipode, "q-Hopf-def-5"):
        ok = False
    if not corrupt(bad_phi_inv, "phi-invertible"):
        ok = False
    _report(11, "CLI determinism", t0, ok)
