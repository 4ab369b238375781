"""Generating functions for the word statistics, built two ways each and
verified coefficient by coefficient.

Every infinite sum over Chebyshev denominators is truncated by the
tail-start property: the Laurent leading order of each summand is
computed and asserted before truncation, so a finite cut is provably
exact rather than numerically plausible.  When the requested number of
terms cannot cover the x or q caps, builders raise StabilityError
instead of returning a silently short sum.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from . import counting
from .series import (
    Caps,
    LaurentSeries,
    MultiSeries,
    catalan_series,
    cheb_u,
    l_family,
)

__all__ = [
    "StabilityError",
    "VerificationReport",
    "compare_series",
    "gf_A",
    "gf_A_m",
    "gf_B",
    "gf_fine",
    "gf_A_via_lemma",
    "gf_A4",
    "gf_A0",
    "check_l1",
    "check_functional_eq",
    "check_l2",
    "check_co1",
    "check_co2",
    "check_co3",
    "check_co4",
    "check_th2",
    "check_th3",
    "check_th4",
    "check_cheb_det",
    "check_cheb_shift",
    "check_cheb_limit",
    "check_remark2",
    "IDENTITIES",
    "verify_all",
]


class StabilityError(ValueError):
    """Too few sum terms to cover the requested truncation orders."""


@dataclass
class VerificationReport:
    """Outcome of one identity check, with the first mismatch if any."""

    identity: str
    params: dict
    passed: bool
    mismatch: dict | None = None
    millis: float = 0.0

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_jsonable(self) -> dict:
        out = {
            "identity": self.identity,
            "params": self.params,
            "status": self.status,
            "millis": round(self.millis, 3),
        }
        if self.mismatch is not None:
            out["mismatch"] = self.mismatch
        return out


def _first_mismatch(lhs: MultiSeries, rhs: MultiSeries) -> dict | None:
    """First differing coefficient in lexicographic exponent order, within
    the common caps."""
    caps = lhs.caps.meet(rhs.caps)
    exps = {e for e, _ in lhs.terms()} | {e for e, _ in rhs.terms()}
    for e in sorted(exps):
        x, w, v, q = e
        if x > caps.x or w > caps.w or v > caps.v or q > caps.q:
            continue
        cl, cr = lhs.coeff(x, w, v, q), rhs.coeff(x, w, v, q)
        if cl != cr:
            return {"exponents": list(e), "lhs": str(cl), "rhs": str(cr)}
    return None


def compare_series(
    identity: str, params: dict, lhs: MultiSeries, rhs: MultiSeries, started: float
) -> VerificationReport:
    mism = _first_mismatch(lhs, rhs)
    return VerificationReport(
        identity,
        params,
        passed=mism is None,
        mismatch=mism,
        millis=(time.perf_counter() - started) * 1000.0,
    )


# -- closed-form builders ---------------------------------------------


def _apply_A(u: MultiSeries) -> MultiSeries:
    """The zeros generating function evaluated at second argument u:
    x*u / (1 - x*u*C(x)) = sum_m (x*u)^m C^(m-1).

    Exact under truncation for any u, since every summand carries x^m.
    """
    caps = u.caps
    step = MultiSeries.monomial(caps, 1, x=1) * u * catalan_series(caps)
    p = MultiSeries.monomial(caps, 1, x=1) * u
    acc = MultiSeries.zero(caps)
    while p:
        acc = acc + p
        p = p * step
    return acc


def gf_A(order: int) -> MultiSeries:
    """A(x, v): coefficient of x^n v^m counts words with m zeros."""
    caps = Caps.of(order)
    return _apply_A(MultiSeries.monomial(caps, 1, v=1))


def gf_A_m(m: int, order: int) -> MultiSeries:
    """A_m(x) = x^m C(x)^(m-1): words with exactly m zeros."""
    if m < 1:
        raise ValueError("gf_A_m needs m >= 1")
    caps = Caps.of(order)
    c = catalan_series(caps)
    acc = MultiSeries.monomial(caps, 1, x=m)
    for _ in range(m - 1):
        acc = acc * c
    return acc


def gf_B(order: int) -> MultiSeries:
    """B(x, v): coefficient of x^n v^m counts words with m ones."""
    caps = Caps.of(order)
    one = MultiSeries.one(caps)
    x = MultiSeries.monomial(caps, 1, x=1)
    v = MultiSeries.monomial(caps, 1, v=1)
    c = catalan_series(caps)
    num = x * (one - x + x * x * v + x * v * (x - 2 * one) * c + x * x * v * v * c * c)
    den = (one - x) * (one - x * v * c) * (one - x - x * v * c)
    return num * den.invert()


def gf_fine(order: int) -> MultiSeries:
    """x / (1 - x^2 C(x)^2): words with an odd number of zeros."""
    caps = Caps.of(order)
    one = MultiSeries.one(caps)
    x = MultiSeries.monomial(caps, 1, x=1)
    c = catalan_series(caps)
    return x * (one - x * x * c * c).invert()


# -- Chebyshev-sum builders -------------------------------------------


def _assert_leading(obj: LaurentSeries, expected: int, what: str) -> None:
    lead = obj.min_y()
    assert lead == expected, f"{what}: leading y order {lead}, expected {expected}"


def _cheb_A_sum(caps: Caps, jmax: int) -> LaurentSeries:
    """sum_{j>=1} y / ((U_{j-1} - v y U_{j-2}) (U_j - v y U_{j-1})).

    Term j provably starts at y^(2j); terms past the y cap are skipped
    after their denominator's leading order is verified.
    """
    vy = LaurentSeries.monomial(caps, 1, y=1, v=1)
    y = LaurentSeries.monomial(caps, 1, y=1)
    acc = LaurentSeries.zero(caps)
    for j in range(1, jmax + 1):
        den = (cheb_u(j - 1, caps) - vy * cheb_u(j - 2, caps)) * (
            cheb_u(j, caps) - vy * cheb_u(j - 1, caps)
        )
        _assert_leading(den, -(2 * j - 1), f"A-lemma denominator j={j}")
        if 2 * j > 2 * caps.x:
            continue  # starts beyond the cap; the assertion above proves it
        term = y * den.invert()
        _assert_leading(term, 2 * j, f"A-lemma term j={j}")
        acc = acc + term
    return acc


def gf_A_via_lemma(order: int, jmax: int) -> MultiSeries:
    """A(x, v) evaluated as v/C times the sum over Chebyshev denominators,
    an independent route to the closed form xv/(1 - xvC)."""
    if jmax < order + 1:
        raise StabilityError(
            f"jmax={jmax} cannot cover order {order}: term j starts at x^j"
        )
    caps = Caps.of(order)
    v = LaurentSeries.monomial(caps, 1, v=1)
    inv_c = catalan_series(caps).to_laurent().invert()
    return (v * inv_c * _cheb_A_sum(caps, jmax)).to_x_series()


def _uu_denominator(i: int, caps: Caps) -> LaurentSeries:
    """y U_{i+2} U_{i+1}, leading order verified at y^-(2i+2)."""
    den = LaurentSeries.monomial(caps, 1, y=1) * cheb_u(i + 2, caps) * cheb_u(i + 1, caps)
    _assert_leading(den, -(2 * i + 2), f"U-product denominator i={i}")
    return den


def _uu_inverse(i: int, caps: Caps) -> MultiSeries:
    """1 / (y U_{i+2} U_{i+1}) as an x series; starts at x^(i+1)."""
    inv = _uu_denominator(i, caps).invert()
    _assert_leading(inv, 2 * i + 2, f"U-product inverse i={i}")
    return inv.to_x_series()


def _a4_main_denominator(j: int, caps: Caps) -> LaurentSeries:
    wy = LaurentSeries.monomial(caps, 1, y=1, w=1)
    den = (cheb_u(j + 1, caps) - wy * cheb_u(j, caps)) * (
        cheb_u(j, caps) - wy * cheb_u(j - 1, caps)
    )
    _assert_leading(den, -(2 * j + 1), f"letter-sum denominator j={j}")
    return den


def _a4_inner(caps: Caps, jmax: int, a_v: MultiSeries) -> MultiSeries:
    """A(x, 1, v, q): the w = 1 slice that the four-variable sum subtracts."""
    one = MultiSeries.one(caps)
    v = MultiSeries.monomial(caps, 1, v=1)
    num = MultiSeries.zero(caps)
    den = one
    for i in range(0, jmax + 1):
        if 2 * i + 2 > 2 * caps.x or i + 1 > caps.q:
            _uu_denominator(i, caps)  # assert the tail keeps starting higher
            continue
        g = _uu_inverse(i, caps)
        qpow = MultiSeries.monomial(caps, 1, q=i + 1)
        a_shift = _apply_A(v * l_family(i, one))
        num = num + qpow * g * (a_shift - a_v)
        den = den + qpow * g
    return num * den.invert()


def gf_A4(order: int, qmax: int, jmax: int) -> MultiSeries:
    """A(x, w, v, q): x^n w^t v^s q^i counts words with s copies of the
    letter i (s >= 1) and t zeros."""
    caps = Caps.of(order, q=qmax)
    needed = min(order - 1, qmax - 1)
    if jmax < needed:
        raise StabilityError(
            f"jmax={jmax} cannot cover order {order}, qmax {qmax}: "
            f"term j contributes through x^(j+1) q^(j+1)"
        )
    a_v = _apply_A(MultiSeries.monomial(caps, 1, v=1))
    inner = _a4_inner(caps, jmax, a_v)
    w_mono = MultiSeries.monomial(caps, 1, w=1)
    v_mono = MultiSeries.monomial(caps, 1, v=1)
    acc = LaurentSeries.zero(caps)
    for j in range(0, jmax + 1):
        den = _a4_main_denominator(j, caps)
        if 2 * j + 2 > 2 * caps.x or j + 1 > caps.q:
            continue
        bracket = _apply_A(v_mono * l_family(j, w_mono)) - a_v - inner
        prefac = LaurentSeries.monomial(caps, 1, y=1, w=1, q=j + 1)
        term = prefac * den.invert() * bracket.to_laurent()
        lead = term.min_y()
        assert lead is None or lead >= 2 * j + 2, f"letter-sum term j={j} too low"
        acc = acc + term
    return acc.to_x_series()


def gf_A0(order: int, qmax: int, jmax: int) -> MultiSeries:
    """A(x, w, q | 0): x^n w^t q^i counts words with t zeros avoiding the
    letter i.  The q cap is a hard cap: avoidance counts stabilize in i,
    so the q degree per x^n is unbounded."""
    caps = Caps.of(order, q=qmax)
    needed = min(order - 1, qmax - 1)
    if jmax < needed:
        raise StabilityError(
            f"jmax={jmax} cannot cover order {order}, qmax {qmax}: "
            f"term j contributes through x^(j+1) q^(j+1)"
        )
    one = MultiSeries.one(caps)
    num = LaurentSeries.zero(caps)
    den = one
    for j in range(0, jmax + 1):
        d = _a4_main_denominator(j, caps)
        _uu_denominator(j, caps)
        if 2 * j + 2 > 2 * caps.x or j + 1 > caps.q:
            continue
        prefac = LaurentSeries.monomial(caps, 1, y=1, w=1, q=j + 1)
        term = prefac * d.invert()
        _assert_leading(term, 2 * j + 2, f"avoidance-sum term j={j}")
        num = num + term
        den = den + MultiSeries.monomial(caps, 1, q=j + 1) * _uu_inverse(j, caps)
    q = MultiSeries.monomial(caps, 1, q=1)
    geom_q = (one - q).invert()
    return num.to_x_series() * geom_q * den.invert()


# -- identity checks ---------------------------------------------------


def check_l1(order: int) -> VerificationReport:
    """Functional equation: A = xv/(1-xv)(1-xC) + xv/(1-xv) A(x, 1/(1-xv))."""
    started = time.perf_counter()
    caps = Caps.of(order)
    one = MultiSeries.one(caps)
    x = MultiSeries.monomial(caps, 1, x=1)
    v = MultiSeries.monomial(caps, 1, v=1)
    a = gf_A(order)
    s = (one - x * v).invert()
    f = x * v * s
    rhs = f * (one - x * catalan_series(caps)) + f * a.substitute("v", s)
    return compare_series("l1", {"order": order}, a, rhs, started)


# The functional equation is identity "l1" on the CLI surface.
check_functional_eq = check_l1


def check_l2(order: int, jmax: int) -> VerificationReport:
    """Chebyshev series for A(x, v) against the closed form."""
    started = time.perf_counter()
    caps = Caps.of(order)
    v = LaurentSeries.monomial(caps, 1, v=1)
    inv_c = catalan_series(caps).to_laurent().invert()
    lhs = (v * inv_c * _cheb_A_sum(caps, jmax)).to_x_series()
    return compare_series(
        "l2", {"order": order, "jmax": jmax}, lhs, gf_A(order), started
    )


def check_co1(order: int, jmax: int) -> VerificationReport:
    """sum_j 1/(y U_j U_{j+1}) = x C(x)^2."""
    started = time.perf_counter()
    caps = Caps.of(order)
    acc = MultiSeries.zero(caps)
    for j in range(1, jmax + 1):
        if 2 * j > 2 * caps.x:
            _uu_denominator(j - 1, caps)
            continue
        acc = acc + _uu_inverse(j - 1, caps)
    c = catalan_series(caps)
    rhs = MultiSeries.monomial(caps, 1, x=1) * c * c
    return compare_series("co1", {"order": order, "jmax": jmax}, acc, rhs, started)


def check_co2(order: int, jmax: int, vmax: int | None = None) -> VerificationReport:
    """sum_j 1/(y (U_{j-1} - v y U_{j-2})(U_j - v y U_{j-1}))
    = sum_m x^(m-1) v^(m-1) C^m = C / (1 - x v C)."""
    started = time.perf_counter()
    caps = Caps.of(order, v=vmax)
    y = LaurentSeries.monomial(caps, 1, y=1)
    vy = LaurentSeries.monomial(caps, 1, y=1, v=1)
    acc = LaurentSeries.zero(caps)
    for j in range(1, jmax + 1):
        den = y * (cheb_u(j - 1, caps) - vy * cheb_u(j - 2, caps)) * (
            cheb_u(j, caps) - vy * cheb_u(j - 1, caps)
        )
        _assert_leading(den, -(2 * j - 2), f"co2 denominator j={j}")
        if 2 * j - 2 > 2 * caps.x:
            continue
        acc = acc + den.invert()
    lhs = acc.to_x_series()
    c = catalan_series(caps)
    one = MultiSeries.one(caps)
    x = MultiSeries.monomial(caps, 1, x=1)
    v = MultiSeries.monomial(caps, 1, v=1)
    rhs_closed = c * (one - x * v * c).invert()
    mid = MultiSeries.zero(caps)
    xvc = x * v * c
    p = c
    for _ in range(min(caps.x, caps.v) + 2):
        mid = mid + p
        p = p * xvc
        if not p:
            break
    params = {"order": order, "jmax": jmax, "vmax": caps.v}
    rep = compare_series("co2", params, lhs, mid, started)
    if not rep.passed:
        return rep
    return compare_series("co2", params, lhs, rhs_closed, started)


def check_co3(order: int) -> VerificationReport:
    """Fine numbers: x/(1 - x^2 C^2) = sum of odd-m slices = xC/(1 + xC),
    and coefficients match the recurrence parity sums."""
    started = time.perf_counter()
    caps = Caps.of(order)
    f = gf_fine(order)
    odd = MultiSeries.zero(caps)
    for m in range(1, order + 1, 2):
        odd = odd + gf_A_m(m, order)
    params = {"order": order}
    rep = compare_series("co3", params, f, odd, started)
    if not rep.passed:
        return rep
    one = MultiSeries.one(caps)
    xc = MultiSeries.monomial(caps, 1, x=1) * catalan_series(caps)
    algebraic = xc * (one + xc).invert()
    rep = compare_series("co3", params, f, algebraic, started)
    if not rep.passed:
        return rep
    expected = MultiSeries.from_terms(
        caps,
        (((n, 0, 0, 0), counting.fine_number(n)) for n in range(1, order + 1)),
    )
    return compare_series("co3", params, f, expected, started)


def check_co4(order: int) -> VerificationReport:
    """B(x, v) closed form against the transform of A and the recurrence."""
    started = time.perf_counter()
    caps = Caps.of(order)
    one = MultiSeries.one(caps)
    x = MultiSeries.monomial(caps, 1, x=1)
    v = MultiSeries.monomial(caps, 1, v=1)
    b = gf_B(order)
    a = gf_A(order)
    g = x * (one - x).invert()
    shifted = a.substitute("v", v * (one - x).invert())
    params = {"order": order}
    rep = compare_series("co4", params, b, g + g * (shifted - a), started)
    if not rep.passed:
        return rep
    expected = MultiSeries.from_terms(
        caps,
        (
            ((n, 0, m, 0), counting.b_ones(n, m))
            for n in range(1, order + 1)
            for m in range(0, n)
        ),
    )
    return compare_series("co4", params, b, expected, started)


def check_th2(order: int) -> VerificationReport:
    """A(x, v) = sum_m v^m A_m(x) with A_m = x^m C^(m-1), against both the
    recurrence and the closed form for the zero counts."""
    started = time.perf_counter()
    caps = Caps.of(order)
    a = gf_A(order)
    assembled = MultiSeries.zero(caps)
    for m in range(1, order + 1):
        assembled = assembled + MultiSeries.monomial(caps, 1, v=m) * gf_A_m(m, order)
    params = {"order": order}
    rep = compare_series("th2", params, a, assembled, started)
    if not rep.passed:
        return rep
    recur = MultiSeries.from_terms(
        caps,
        (
            ((n, 0, m, 0), counting.a_zeros(n, m))
            for n in range(1, order + 1)
            for m in range(1, n + 1)
        ),
    )
    rep = compare_series("th2", params, a, recur, started)
    if not rep.passed:
        return rep
    closed = MultiSeries.from_terms(
        caps,
        (
            ((n, 0, m, 0), counting.a_zeros_closed(n, m))
            for n in range(1, order + 1)
            for m in range(1, n + 1)
        ),
    )
    return compare_series("th2", params, a, closed, started)


def _letter_table(order: int, qmax: int, caps: Caps, with_s: bool) -> MultiSeries:
    terms = []
    for n in range(1, order + 1):
        for i in range(1, qmax + 1):
            for t in range(1, n + 1):
                if with_s:
                    for s in range(1, n - t + 1):
                        c = counting.a_letter(i, n, s, t)
                        if c:
                            terms.append(((n, t, s, i), c))
                else:
                    c = counting.a_letter(i, n, 0, t)
                    if c:
                        terms.append(((n, t, 0, i), c))
    return MultiSeries.from_terms(caps, terms)


def check_th3(order: int, qmax: int, jmax: int) -> VerificationReport:
    """Four-variable sum against the letter-count recurrences, plus the
    jmax vs jmax+1 truncation-stability assertion."""
    started = time.perf_counter()
    lhs = gf_A4(order, qmax, jmax)
    params = {"order": order, "qmax": qmax, "jmax": jmax}
    again = gf_A4(order, qmax, jmax + 1)
    if lhs != again:
        return VerificationReport(
            "th3",
            params,
            passed=False,
            mismatch={"reason": f"sum not stable between jmax={jmax} and {jmax + 1}"},
            millis=(time.perf_counter() - started) * 1000.0,
        )
    expected = _letter_table(order, qmax, lhs.caps, with_s=True)
    return compare_series("th3", params, lhs, expected, started)


def check_th4(order: int, qmax: int, jmax: int) -> VerificationReport:
    """Avoidance sum against the letter-count recurrences at s = 0, plus
    the truncation-stability assertion."""
    started = time.perf_counter()
    lhs = gf_A0(order, qmax, jmax)
    params = {"order": order, "qmax": qmax, "jmax": jmax}
    again = gf_A0(order, qmax, jmax + 1)
    if lhs != again:
        return VerificationReport(
            "th4",
            params,
            passed=False,
            mismatch={"reason": f"sum not stable between jmax={jmax} and {jmax + 1}"},
            millis=(time.perf_counter() - started) * 1000.0,
        )
    expected = _letter_table(order, qmax, lhs.caps, with_s=False)
    return compare_series("th4", params, lhs, expected, started)


def check_cheb_det(jrange: int = 40) -> VerificationReport:
    """U_{j-2} U_j - U_{j-1}^2 = -1, exactly, for 0 <= j <= jrange."""
    started = time.perf_counter()
    caps = Caps.of(1)
    minus_one = LaurentSeries.monomial(caps, -1)
    for j in range(0, jrange + 1):
        lhs = cheb_u(j - 2, caps) * cheb_u(j, caps) - cheb_u(j - 1, caps) * cheb_u(
            j - 1, caps
        )
        if lhs != minus_one:
            return VerificationReport(
                "cheb-det",
                {"jrange": jrange},
                passed=False,
                mismatch={"j": j, "lhs": repr(sorted(lhs.terms())), "rhs": "-1"},
                millis=(time.perf_counter() - started) * 1000.0,
            )
    return VerificationReport(
        "cheb-det",
        {"jrange": jrange},
        passed=True,
        millis=(time.perf_counter() - started) * 1000.0,
    )


def check_cheb_shift(jrange: int = 40) -> VerificationReport:
    """U_j - y U_{j-1} = y U_{j+1} for 0 <= j <= jrange.

    Equivalent to the forward recurrence at t = 1/(2y); checked on its
    own because the sum simplifications lean on exactly this rewriting.
    """
    started = time.perf_counter()
    caps = Caps.of(1)
    y = LaurentSeries.monomial(caps, 1, y=1)
    for j in range(0, jrange + 1):
        lhs = cheb_u(j, caps) - y * cheb_u(j - 1, caps)
        rhs = y * cheb_u(j + 1, caps)
        if lhs != rhs:
            return VerificationReport(
                "cheb-shift",
                {"jrange": jrange},
                passed=False,
                mismatch={"j": j, "lhs": repr(sorted(lhs.terms())), "rhs": repr(sorted(rhs.terms()))},
                millis=(time.perf_counter() - started) * 1000.0,
            )
    return VerificationReport(
        "cheb-shift",
        {"jrange": jrange},
        passed=True,
        millis=(time.perf_counter() - started) * 1000.0,
    )


def check_cheb_limit(jrange: int = 20) -> VerificationReport:
    """U_{j-1}/(y U_j) matches C(x) through x^(j-1) and differs at x^j.

    U_{j-1} leads at y^-(j-1), which lowers the exactness horizon, so
    each convergent is computed with headroom and truncated to order j.
    """
    started = time.perf_counter()
    for j in range(1, jrange + 1):
        big = Caps.of(2 * j)
        y = LaurentSeries.monomial(big, 1, y=1)
        conv = (
            (cheb_u(j - 1, big) * (y * cheb_u(j, big)).invert())
            .truncate(Caps.of(j))
            .to_x_series()
        )
        for k in range(0, j):
            if conv.coeff(k) != counting.catalan_number(k):
                return VerificationReport(
                    "cheb-limit",
                    {"jrange": jrange},
                    passed=False,
                    mismatch={
                        "j": j,
                        "exponents": [k, 0, 0, 0],
                        "lhs": str(conv.coeff(k)),
                        "rhs": str(counting.catalan_number(k)),
                    },
                    millis=(time.perf_counter() - started) * 1000.0,
                )
        if conv.coeff(j) == counting.catalan_number(j):
            return VerificationReport(
                "cheb-limit",
                {"jrange": jrange},
                passed=False,
                mismatch={"j": j, "reason": f"no divergence at x^{j}"},
                millis=(time.perf_counter() - started) * 1000.0,
            )
    return VerificationReport(
        "cheb-limit",
        {"jrange": jrange},
        passed=True,
        millis=(time.perf_counter() - started) * 1000.0,
    )


def check_remark2(order: int) -> VerificationReport:
    """Self-consistency: sum_m (xC)^m (1 - xC) telescopes back to xC."""
    started = time.perf_counter()
    caps = Caps.of(order)
    one = MultiSeries.one(caps)
    xc = MultiSeries.monomial(caps, 1, x=1) * catalan_series(caps)
    acc = MultiSeries.zero(caps)
    p = xc
    while p:
        acc = acc + p * (one - xc)
        p = p * xc
    return compare_series("remark2", {"order": order}, acc, xc, started)


IDENTITIES = (
    "l1",
    "l2",
    "co1",
    "co2",
    "co3",
    "co4",
    "th2",
    "th3",
    "th4",
    "cheb-det",
    "cheb-shift",
    "cheb-limit",
    "remark2",
)


def _runners(order: int, qmax: int, jmax: int) -> dict[str, Callable[[], VerificationReport]]:
    return {
        "l1": lambda: check_l1(order),
        "l2": lambda: check_l2(order, jmax),
        "co1": lambda: check_co1(order, jmax),
        "co2": lambda: check_co2(order, jmax, order),
        "co3": lambda: check_co3(order),
        "co4": lambda: check_co4(order),
        "th2": lambda: check_th2(order),
        "th3": lambda: check_th3(order, qmax, jmax),
        "th4": lambda: check_th4(order, qmax, jmax),
        "cheb-det": lambda: check_cheb_det(max(40, jmax)),
        "cheb-shift": lambda: check_cheb_shift(max(40, jmax)),
        "cheb-limit": lambda: check_cheb_limit(20),
        "remark2": lambda: check_remark2(order),
    }


def run_identity(name: str, order: int, qmax: int = 8, jmax: int | None = None) -> VerificationReport:
    """Run one named identity check with the suite's parameter defaults."""
    if jmax is None:
        jmax = order + 2
    runners = _runners(order, qmax, jmax)
    if name not in runners:
        raise ValueError(f"unknown identity {name!r}")
    return runners[name]()


def verify_all(order: int = 20, qmax: int = 8, jmax: int | None = None) -> list[VerificationReport]:
    """Run the whole identity suite; one report per identity."""
    if jmax is None:
        jmax = order + 2
    runners = _runners(order, qmax, jmax)
    return [runners[name]() for name in IDENTITIES]
