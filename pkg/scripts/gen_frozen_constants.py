#!/usr/bin/env python3
"""Generate src/zwm/_frozen.py, the frozen numeric constant tables.

Everything the package needs at import time but that is derived rather than
typed in by hand lives in _frozen.py: Stieltjes constants, Laurent/Taylor
coefficient tables for the near-s=1 branches, small-argument Taylor tables for
the closed-form main terms, the local expansions of the remainder profile
used by the corrected main-sum evaluator, and the 15-point Gauss-Kronrod rule.

The tables are derived symbolically (sympy) or at 50-digit precision (mpmath)
and every derivation is cross-checked here before the file is written, so a
regeneration that would change any published value fails loudly.

Run from the repository root:

    python3 scripts/gen_frozen_constants.py
"""

from fractions import Fraction

import mpmath as mp
import sympy as sp

mp.mp.dps = 50

OUT_PATH = "src/zwm/_frozen.py"
ORDER = 12  # highest retained power for the small-a Taylor tables


def gen_stieltjes(n=13):
    return [mp.stieltjes(k) for k in range(n)]


def gen_near_one_tables(order=10):
    """Laurent data around s = 1.

    zeta(1+x)      = 1/x + sum_k (-1)^k g_k x^k / k!
    zeta(1-x)      = -1/x + sum_k g_k x^k / k!
    (z'/z)(1+x)    = -1/x + sum_k c_k x^k
    -(z'/z)(1+x)/(1+x) = 1/x + sum_k a_k x^k
    """
    x = sp.symbols("x")
    gs = sp.symbols(f"g0:{order + 3}")
    zeta_series = sp.Rational(1) / x + sum(
        (-1) ** k * gs[k] * x**k / sp.factorial(k) for k in range(order + 2)
    )
    zeta_prime = sp.diff(zeta_series, x)
    logderiv = sp.series(sp.expand(zeta_prime / zeta_series), x, 0, order + 1).removeO()
    logderiv = sp.expand(logderiv)
    c = [sp.expand(logderiv.coeff(x, k)) for k in range(order + 1)]
    assert sp.simplify(logderiv.coeff(x, -1) + 1) == 0
    # sanity: c0 = g0, c1 = -(g0^2 + 2 g1)
    assert sp.simplify(c[0] - gs[0]) == 0
    assert sp.simplify(c[1] + gs[0] ** 2 + 2 * gs[1]) == 0

    combo = sp.series(sp.expand(-logderiv / (1 + x)), x, 0, order + 1).removeO()
    combo = sp.expand(combo)
    assert sp.simplify(combo.coeff(x, -1) - 1) == 0
    a = [sp.expand(combo.coeff(x, k)) for k in range(order + 1)]
    assert sp.simplify(a[0] + 1 + gs[0]) == 0

    stieltjes = gen_stieltjes(order + 3)
    subs = {gs[k]: stieltjes[k] for k in range(order + 2)}

    def to_float(expr):
        return float(sp.lambdify([], expr.subs(subs), modules="mpmath")())

    c_num = [to_float(e) for e in c]
    a_num = [to_float(e) for e in a]
    b_num = [float(stieltjes[k] / mp.factorial(k)) for k in range(order + 1)]
    return c_num, a_num, b_num, [float(g) for g in stieltjes]


def formula_exprs():
    a = sp.symbols("a", positive=True)
    e = sp.exp
    return a, {
        "F_PRED": ((5 * a - 8) + 12 * e(-a) - (a + 4) * e(-2 * a)) / (4 * a**3),
        "F1": (-(a**3) + 5 * a**2 - 10 * a - 10 * (e(-a) - 1)) / (2 * a**3),
        "F2": (e(-a) * (-4 * a**2 - 4 * a - 2) + 2 * e(a)) / (8 * a**3),
        "LEMMA22_MAIN": (a - 2) * (2 * e(-a) - 2 - a**2 + 2 * a) / (2 * a**3),
        "I1_MAIN": (1 - a - e(-a)) / a**2,
        "I2_MAIN": (a - 2 + (a + 2) * e(-a)) / a**3,
        "DIAG_MAIN": (a**2 - 4 * a + 6 - 2 * e(-a) * (a + 3)) / (4 * a**3),
        "INGHAM_MAIN": (e(-2 * a) * (-4 * a**2 - 4 * a - 2) + 2) / (8 * a**3),
        "GGM_UNWEIGHTED": (1 - e(-2 * a)) / (4 * a**2),
    }


def gen_formula_taylor():
    a, exprs = formula_exprs()
    taylor = {}
    for name, expr in exprs.items():
        ser = sp.series(expr, a, 0, ORDER + 1).removeO()
        ser = sp.expand(ser)
        if name == "GGM_UNWEIGHTED":
            # Laurent: 1/(2a) + regular part
            pole = ser.coeff(a, -1)
            assert pole == sp.Rational(1, 2), pole
            coeffs = [sp.nsimplify(ser.coeff(a, k)) for k in range(ORDER + 1)]
        else:
            assert ser.coeff(a, -1) == 0 and ser.coeff(a, -2) == 0
            coeffs = [sp.nsimplify(ser.coeff(a, k)) for k in range(ORDER + 1)]
        taylor[name] = [Fraction(int(sp.fraction(c)[0]), int(sp.fraction(c)[1])) for c in coeffs]

    # cross-check the expansions printed in the module docs
    assert taylor["F_PRED"][:4] == [
        Fraction(1, 3), Fraction(-5, 24), Fraction(3, 40), Fraction(-13, 720)]
    assert taylor["F1"][:4] == [
        Fraction(1, 3), Fraction(-5, 24), Fraction(1, 24), Fraction(-1, 144)]
    assert taylor["F2"][:4] == [
        Fraction(1, 3), Fraction(-1, 6), Fraction(1, 15), Fraction(-1, 60)]
    assert taylor["GGM_UNWEIGHTED"][:2] == [Fraction(-1, 2), Fraction(1, 3)]

    # algebraic identities binding the formulas, checked exactly on the series
    for k in range(ORDER + 1):
        assert taylor["F1"][k] == taylor["LEMMA22_MAIN"][k] + 2 * taylor["DIAG_MAIN"][k]
    limits = {name: taylor[name][0] for name in taylor if name != "GGM_UNWEIGHTED"}
    assert limits["F_PRED"] == Fraction(1, 3) and limits["DIAG_MAIN"] == 0
    assert limits["I1_MAIN"] == Fraction(-1, 2) and limits["I2_MAIN"] == Fraction(1, 6)
    return taylor, limits


def gen_psi_expansions():
    """Local Taylor data for Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p).

    Psi has removable singularities at p = 1/4 and p = 3/4; the evaluator
    switches to these expansions near those points.
    """
    p, h = sp.symbols("p h")
    psi = sp.cos(2 * sp.pi * (p**2 - p - sp.Rational(1, 16))) / sp.cos(2 * sp.pi * p)
    out = {}
    for name, p0 in (("RS_PSI_QUARTER", sp.Rational(1, 4)), ("RS_PSI_THREEQ", sp.Rational(3, 4))):
        ser = sp.series(psi.subs(p, p0 + h), h, 0, 8).removeO()
        coeffs = [complex(sp.N(ser.coeff(h, k), 30)).real for k in range(8)]
        out[name] = coeffs
    # both limits equal 1/2
    assert abs(out["RS_PSI_QUARTER"][0] - 0.5) < 1e-25 or abs(out["RS_PSI_QUARTER"][0] - 0.5) < 1e-12
    assert abs(out["RS_PSI_THREEQ"][0] - 0.5) < 1e-12
    return out


def gen_gauss_kronrod():
    """Derive the (7,15) Gauss-Kronrod pair from scratch at 50 digits.

    The 8 Kronrod abscissae are the roots of the degree-8 Stieltjes
    polynomial E8, defined by orthogonality of P7*E8 to all monomials of
    degree <= 7; the 7 Gauss abscissae are the roots of P7. Weights solve
    the moment equations. The assembled rule is checked exact to degree 22.
    """
    x = sp.symbols("x")
    P7 = sp.legendre(7, x)
    c0, c2, c4, c6 = sp.symbols("c0 c2 c4 c6")
    E8 = x**8 + c6 * x**6 + c4 * x**4 + c2 * x**2 + c0
    eqs = []
    for k in (1, 3, 5, 7):
        eqs.append(sp.integrate(sp.expand(P7 * E8 * x**k), (x, -1, 1)))
    sol = sp.solve(eqs, [c0, c2, c4, c6], dict=True)[0]
    E8s = sp.expand(E8.subs(sol))
    coeffs = [sp.nsimplify(E8s.coeff(x, k)) for k in range(9)]

    kron_roots = mp.polyroots([mp.mpf(sp.Rational(c)) for c in coeffs[::-1]], maxsteps=200)
    kron_roots = sorted(float(r.real) for r in kron_roots)
    p7c = [sp.Rational(sp.nsimplify(P7.coeff(x, k))) for k in range(8)]
    gauss_roots = mp.polyroots([mp.mpf(c) for c in p7c[::-1]], maxsteps=200)
    gauss_roots = sorted(float(r.real) for r in gauss_roots)

    # refine both node families in mpmath precision
    P7m = sp.lambdify(x, P7, modules="mpmath")
    E8m = sp.lambdify(x, E8s, modules="mpmath")
    gset = [mp.mpf(0) if abs(r) < 1e-12 else mp.findroot(P7m, mp.mpf(r)) for r in gauss_roots]
    kset = [mp.findroot(E8m, mp.mpf(r)) for r in kron_roots]
    nodes = sorted(kset + gset)

    def solve_weights(nds):
        n = len(nds)
        A = mp.matrix(n, n)
        b = mp.matrix(n, 1)
        for k in range(n):
            for j in range(n):
                A[k, j] = nds[j] ** k
            b[k] = mp.mpf(2) / (k + 1) if k % 2 == 0 else mp.mpf(0)
        return mp.lu_solve(A, b)

    wk = solve_weights(nodes)
    gw = solve_weights(gset)
    gauss_on_k = []
    for t in nodes:
        match = [i for i, g in enumerate(gset) if abs(t - g) < mp.mpf("1e-12")]
        gauss_on_k.append(gw[match[0]] if match else mp.mpf(0))

    # degree-22 exactness check for the Kronrod rule, degree-13 for Gauss
    for k in range(23):
        exact = mp.mpf(2) / (k + 1) if k % 2 == 0 else mp.mpf(0)
        got = mp.fsum(wk[i] * nodes[i] ** k for i in range(15))
        assert abs(got - exact) < mp.mpf("1e-35"), (k, got, exact)
    for k in range(14):
        exact = mp.mpf(2) / (k + 1) if k % 2 == 0 else mp.mpf(0)
        got = mp.fsum(gauss_on_k[i] * nodes[i] ** k for i in range(15))
        assert abs(got - exact) < mp.mpf("1e-35"), k

    return ([float(t) for t in nodes], [float(w) for w in wk],
            [float(w) for w in gauss_on_k])


def fmt_list(vals, per_line=3):
    lines = []
    for i in range(0, len(vals), per_line):
        lines.append("    " + ", ".join(repr(v) for v in vals[i:i + per_line]) + ",")
    return "[\n" + "\n".join(lines) + "\n]"


def main():
    c_num, a_num, b_num, stieltjes = gen_near_one_tables()
    taylor, limits = gen_formula_taylor()
    psis = gen_psi_expansions()
    nodes, wk, wg = gen_gauss_kronrod()

    parts = []
    parts.append('"""Frozen derived constants. Machine-generated; do not edit.\n\n'
                 "Regenerate with scripts/gen_frozen_constants.py (sympy + mpmath at 50\n"
                 'digits); the generator re-verifies every table before writing."""\n')
    parts.append("# Stieltjes constants gamma_0 .. gamma_12")
    parts.append("STIELTJES = " + fmt_list(stieltjes) + "\n")
    parts.append("# (zeta'/zeta)(1+x) = -1/x + sum_k LOGDERIV_NEAR_ONE[k] x^k")
    parts.append("LOGDERIV_NEAR_ONE = " + fmt_list(c_num) + "\n")
    parts.append("# zeta(1-x) = -1/x + sum_k ZETA_ONE_MINUS[k] x^k  (= gamma_k / k!)")
    parts.append("ZETA_ONE_MINUS = " + fmt_list(b_num) + "\n")
    parts.append("# -(zeta'/zeta)(1+x)/(1+x) = 1/x + sum_k MALPHA_A_REG[k] x^k")
    parts.append("MALPHA_A_REG = " + fmt_list(a_num) + "\n")
    parts.append("# small-a Taylor tables, coefficients of a^k for k = 0..%d" % ORDER)
    parts.append("# (GGM_UNWEIGHTED is the regular part: value = 1/(2a) + sum_k c_k a^k)")
    tdict = []
    for name, coeffs in taylor.items():
        tdict.append(f'    "{name}": ' + "[" + ", ".join(
            f"{c.numerator}/{c.denominator}" if c.denominator != 1 else f"{c.numerator}"
            for c in coeffs) + "],")
    parts.append("FORMULA_TAYLOR = {\n" + "\n".join(tdict) + "\n}\n")
    parts.append("# Taylor expansions of the remainder profile")
    parts.append("# Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p)")
    parts.append("# around its removable singularities p = 1/4 and p = 3/4")
    parts.append("RS_PSI_QUARTER = " + fmt_list(psis["RS_PSI_QUARTER"]) + "\n")
    parts.append("RS_PSI_THREEQ = " + fmt_list(psis["RS_PSI_THREEQ"]) + "\n")
    parts.append("# 15-point Gauss-Kronrod rule on [-1, 1]; G7_WEIGHTS aligned to the")
    parts.append("# Kronrod nodes with zeros at Kronrod-only abscissae")
    parts.append("GK15_NODES = " + fmt_list(nodes) + "\n")
    parts.append("GK15_WEIGHTS = " + fmt_list(wk) + "\n")
    parts.append("G7_WEIGHTS = " + fmt_list(wg) + "\n")

    with open(OUT_PATH, "w") as fh:
        fh.write("\n".join(parts))
    print(f"wrote {OUT_PATH}")


if __name__ == "__main__":
    main()
