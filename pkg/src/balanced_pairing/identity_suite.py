"""Named identity checks over the half-factorial pairing.

Every check rebuilds what it needs from the prime alone and returns a
:class:`~balanced_pairing.report.CheckReport` carrying both compared
values, so a failure points at one identity at one parameter point.
Residues are compared in canonical form [0, p-1].

Registry ids (used by the command line):

==========================  ==================================================
``parity_linkage``          s'(p, m) = |X| (mod 2)
``half_square_product``     prod_{i<j} (j^2 - i^2) = -t or 1 (mod p)
``partner_difference``      a -> abar - a permutes V, partner is |abar + a|
``partner_sums``            sum a = M_p/3, sum abar = 2M_p/3, |V2| = M_p (mod 2)
``partner_products``        prod (abar^2 - a^2) = (2|p) t; filtered product = -(2|p)
``product_sign``            filtered product = (-1)^(|X|+L_p) prod_{r!=s} (g^4r - g^4s)
``product_chain``           both routes to the filtered product give -(2|p)
``quartic_difference``      prod_{r!=s} (g^4r - g^4s) = -(2|p), two primitive roots
``alpha_beta_table``        (alpha4 mod 16, beta4 mod 8|4) is an admissible row
``quartic_counts``          N(m), N'(m) closed forms against brute force, all m
``inversion_structure``     |Y| = L_p, gamma(t) = 4|Z| + 2|X| + (p-1)/4, ...
``balanced``                |X| = |Y| = |Z| = L_p
``gauss_inversion``         gamma(x, n) = Gamma(x, n) ((n-1)/2 - Gamma(x, n))
``gauss_scan``              Gauss's lemma and the gamma/Gamma identity, all x
``sun_parity``              s'(p, m) = floor((p+1)/8) (mod 2)
==========================  ==================================================
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from .modular_core import (
    alpha_beta,
    as_context,
    is_prime,
    legendre,
    primitive_roots,
    prod_mod,
)
from .pairing import (
    build_pairing,
    classify,
    gamma,
    gamma_and_gauss_rows,
    gauss_count,
    partner_difference_check,
    quadratic_sequence,
    s_prime,
    v2_count,
)
from .quartic_counts import (
    axis_correction,
    brute_N_all,
    formula_N,
    formula_Nprime,
    matches_table,
    nprime_table,
    quartic_residues,
    table_row,
)
from .report import CheckReport


def _ctx1(p: int):
    ctx = as_context(p)
    ctx.require_one_mod_four()
    return ctx


def _pair_indices(h: int) -> tuple[np.ndarray, np.ndarray]:
    i, j = np.triu_indices(h, 1)
    return i + 1, j + 1


def square_difference_product(p: int, skip_sum_zero: bool = False) -> int:
    """prod_{1<=i<j<=(p-1)/2} (j^2 - i^2) mod p, optionally skipping i^2 + j^2 = 0."""
    i, j = _pair_indices((p - 1) // 2)
    i2, j2 = (i * i) % p, (j * j) % p
    diffs = (j2 - i2) % p
    if skip_sum_zero:
        diffs = diffs[(i2 + j2) % p != 0]
    return prod_mod(diffs, p)


def sum_zero_product(p: int) -> int:
    """prod (j^2 - i^2) over i < j with i^2 + j^2 = 0 (mod p), by direct filter."""
    i, j = _pair_indices((p - 1) // 2)
    i2, j2 = (i * i) % p, (j * j) % p
    return prod_mod(((j2 - i2) % p)[(i2 + j2) % p == 0], p)


def quartic_difference_product(p: int, g: int) -> int:
    """prod_{r != s} (g^{4r} - g^{4s}) mod p over 1 <= r, s <= (p-1)/4."""
    q = np.asarray(quartic_residues(p, g), dtype=np.int64)
    diff = (q[:, None] - q[None, :]) % p
    off_diag = ~np.eye(len(q), dtype=bool)
    return prod_mod(diff[off_diag], p)


def check_parity_linkage(p: int, m: int) -> CheckReport:
    """s'(p, m) and |X| agree mod 2.

    Only chords crossing each other contribute an odd number of inverted
    positions to the quadratic sequence.
    """
    ctx = _ctx1(p)
    lhs = s_prime(ctx, m) % 2
    rhs = classify(build_pairing(ctx)).x_count % 2
    return CheckReport("parity_linkage", {"p": p, "m": m}, lhs == rhs, lhs, rhs, comparison="parity")


def check_half_square_product(p: int) -> CheckReport:
    ctx = as_context(p)
    if p <= 3:
        raise ValueError("needs p > 3")
    lhs = square_difference_product(p)
    rhs = (-ctx.t) % p if ctx.is_one_mod_four else 1
    return CheckReport("half_square_product", {"p": p}, lhs == rhs, lhs, rhs, comparison="mod p")


def check_partner_difference(p: int) -> CheckReport:
    pairing = build_pairing(_ctx1(p))
    res = partner_difference_check(pairing)
    return CheckReport("partner_difference", {"p": p}, res.passed,
                       (tuple(sorted(res.differences)), tuple(sorted(res.reduced_sums))),
                       (pairing.V, tuple(sorted(set(range(1, pairing.ctx.half + 1)) - set(pairing.V)))),
                       note=res.counterexample or "")


def check_partner_sums(p: int) -> CheckReport:
    """Sums over V and partner(V), and the parity of |V2|.

    The sum identity rests on a -> abar - a being a bijection of V.
    """
    ctx = _ctx1(p)
    pairing = build_pairing(ctx)
    M = ctx.M_p
    lhs = (3 * sum(pairing.V), 3 * sum(pairing.partners), v2_count(pairing) % 2)
    rhs = (M, 2 * M, M % 2)
    return CheckReport("partner_sums", {"p": p}, lhs == rhs, lhs, rhs,
                       note="sums compared after scaling by 3")


def check_partner_products(p: int) -> CheckReport:
    """prod (abar^2 - a^2) = (2|p) t and the filtered product = -(2|p).

    Both are direct products mod p.  The first also equals the product over
    pairs with i^2 + j^2 = 0, which is compared as well.
    """
    ctx = _ctx1(p)
    pairing = build_pairing(ctx)
    chi2 = legendre(2, p)
    partner_prod = prod_mod([(b * b - a * a) % p for a, b in pairing.pairs], p)
    lhs = (partner_prod, sum_zero_product(p), square_difference_product(p, skip_sum_zero=True))
    rhs = ((chi2 * ctx.t) % p, (chi2 * ctx.t) % p, (-chi2) % p)
    return CheckReport("partner_products", {"p": p}, lhs == rhs, lhs, rhs, comparison="mod p")


def check_product_sign(p: int, g: Optional[int] = None) -> CheckReport:
    """Filtered square-difference product vs the signed quartic-difference product.

    Implements the final form with sign (-1)^(|X| + L_p).  On failure the note
    records whether the reading with sign (-1)^|X| alone would have held.
    """
    ctx = _ctx1(p)
    g = ctx.g if g is None else g
    x = classify(build_pairing(ctx)).x_count
    lhs = square_difference_product(p, skip_sum_zero=True)
    q = quartic_difference_product(p, g)
    rhs = q if (x + ctx.L_p) % 2 == 0 else (-q) % p
    note = ""
    if lhs != rhs:
        alt = q if x % 2 == 0 else (-q) % p
        note = f"sign (-1)^|X| alone {'holds' if alt == lhs else 'fails too'}"
    return CheckReport("product_sign", {"p": p, "g": g}, lhs == rhs, lhs, rhs,
                       note=note, comparison="mod p")


def check_product_chain(p: int) -> CheckReport:
    """The filtered product equals -(2|p) by three independent routes.

    1. direct filtered product;
    2. full product (-t) divided by the sum-zero product ((2|p) t);
    3. (-1)^(|X|+L_p) times the quartic-difference product.
    """
    ctx = _ctx1(p)
    direct = square_difference_product(p, skip_sum_zero=True)
    quotient = square_difference_product(p) * pow(sum_zero_product(p), -1, p) % p
    x = classify(build_pairing(ctx)).x_count
    q = quartic_difference_product(p, ctx.g)
    signed = q if (x + ctx.L_p) % 2 == 0 else (-q) % p
    target = (-legendre(2, p)) % p
    lhs = (direct, quotient, signed)
    rhs = (target, target, target)
    return CheckReport("product_chain", {"p": p}, lhs == rhs, lhs, rhs, comparison="mod p")


def check_quartic_difference(p: int, g: int) -> CheckReport:
    _ctx1(p)
    lhs = quartic_difference_product(p, g)
    rhs = (-legendre(2, p)) % p
    return CheckReport("quartic_difference", {"p": p, "g": g}, lhs == rhs, lhs, rhs, comparison="mod p")


def check_alpha_beta_table(p: int) -> CheckReport:
    _ctx1(p)
    sig = alpha_beta(p)
    row, a16, bm = table_row(sig)
    ok = matches_table(sig) and sig.alpha4 ** 2 + sig.beta4 ** 2 == p
    return CheckReport("alpha_beta_table", {"p": p, "g": sig.g}, ok, (a16, bm), row,
                       note=f"alpha4={sig.alpha4} beta4={sig.beta4}", comparison="table row")


def check_quartic_counts(p: int) -> CheckReport:
    """For every m in [1, p-1]: formula N = brute N, formula N' = brute N',
    and 16 N'(m) + axis(m) = N(m).

    lhs is the number of m passing all three, rhs is p - 1.
    """
    ctx = _ctx1(p)
    sig = alpha_beta(p, ctx.g)
    table = nprime_table(p, sig.g)
    n_all = brute_N_all(p)
    good, first_bad = 0, ""
    for m in range(1, p):
        n_brute = int(n_all[m])
        try:
            np_formula = formula_Nprime(m, p, sig)
        except ArithmeticError as exc:
            np_formula = None
            first_bad = first_bad or str(exc)
        np_brute = table.get(m, 0)
        ok = (n_brute == formula_N(m, p, sig)
              and np_formula == np_brute
              and 16 * np_brute + axis_correction(m, p, sig) == n_brute)
        if ok:
            good += 1
        elif not first_bad:
            first_bad = f"first mismatch at m={m}"
    return CheckReport("quartic_counts", {"p": p, "g": sig.g}, good == p - 1, good, p - 1, note=first_bad)


def check_inversion_structure(p: int) -> CheckReport:
    """Bundle: |Y| = L_p, |X| + |Z| = 2 L_p, gamma(t) = 4|Z| + 2|X| + (p-1)/4,
    Gamma(t) = (p-1)/4, gamma(t) = ((p-1)/4)^2 and |X| = |Y| = |Z| = L_p."""
    ctx = _ctx1(p)
    c = classify(build_pairing(ctx))
    L, k = ctx.L_p, (p - 1) // 4
    g_t = gamma(ctx.t, p)
    G_t = gauss_count(ctx.t, p)
    lhs = (c.y_count, c.x_count + c.z_count, g_t, G_t, g_t, c.x_count, c.z_count)
    rhs = (L, 2 * L, 4 * c.z_count + 2 * c.x_count + k, k, k * k, L, L)
    return CheckReport("inversion_structure", {"p": p}, lhs == rhs, lhs, rhs)


def check_balanced(p: int) -> CheckReport:
    ctx = _ctx1(p)
    c = classify(build_pairing(ctx))
    L = ctx.L_p
    return CheckReport("balanced", {"p": p}, c.as_tuple() == (L, L, L), c.as_tuple(), (L, L, L))


def check_gauss_inversion(x: int, n: int) -> CheckReport:
    """gamma(x, n) = ((n-1)/4)^2 - ((n-1)/4 - Gamma(x, n))^2, exactly.

    (n-1)/4 is handled as a rational; the right side equals
    Gamma * ((n-1)/2 - Gamma).  Composite odd n is accepted and flagged.
    """
    if math.gcd(x, n) != 1:
        raise ValueError(f"gcd({x}, {n}) != 1")
    G = gauss_count(x, n)
    quarter = Fraction(n - 1, 4)
    rhs_frac = quarter ** 2 - (quarter - G) ** 2
    assert rhs_frac.denominator == 1
    lhs, rhs = gamma(x, n), int(rhs_frac)
    note = "" if is_prime(n) else "composite modulus: experimental"
    return CheckReport("gauss_inversion", {"x": x, "n": n}, lhs == rhs, lhs, rhs, note=note)


def check_gauss_scan(p: int) -> CheckReport:
    """For every x in [1, p-1]: (-1)^Gamma(x,p) = (x|p) and gamma = Gamma ((p-1)/2 - Gamma).

    lhs counts the x passing both; rhs is p - 1.
    """
    as_context(p)
    h = (p - 1) // 2
    if p < 5:
        # single-element sequences: gamma is 0 and Gamma is 0 or 1
        xs = list(range(1, p))
        gam = np.zeros(len(xs), dtype=np.int64)
        gau = np.array([gauss_count(x, p) for x in xs])
    else:
        xs, gam, gau = gamma_and_gauss_rows(p)
    leg = np.array([legendre(int(x), p) for x in xs])
    gauss_ok = np.where(gau % 2 == 0, 1, -1) == leg
    ident_ok = gam == gau * (h - gau)
    ok = gauss_ok & ident_ok
    note = ""
    if not ok.all():
        bad = int(np.asarray(xs)[~ok][0])
        note = f"first failure at x={bad}"
    return CheckReport("gauss_scan", {"p": p}, bool(ok.all()), int(ok.sum()), p - 1, note=note)


def check_sun_parity(p: int, m: int) -> CheckReport:
    """s'(p, m) = floor((p+1)/8) (mod 2) for either residue class of p.

    For p = 3 (mod 4) it first confirms x -> |m x^2| permutes the half system.
    """
    ctx = as_context(p)
    seq = quadratic_sequence(ctx, m)
    note = ""
    if not ctx.is_one_mod_four and sorted(seq) != list(range(1, ctx.half + 1)):
        note = "x -> |m x^2| is not a permutation"
    lhs = s_prime(ctx, m) % 2
    rhs = ((p + 1) // 8) % 2
    return CheckReport("sun_parity", {"p": p, "m": m}, lhs == rhs and not note, lhs, rhs,
                       note=note, comparison="parity")


@dataclass(frozen=True)
class CheckSpec:
    """How the runner applies one check to a prime."""

    check_id: str
    needs_one_mod_four: bool
    min_p: int
    run: Callable[[int, tuple[int, ...]], list[CheckReport]]


def _per_m(fn):
    def run(p: int, ms: tuple[int, ...]) -> list[CheckReport]:
        return [fn(p, m) for m in ms if m % p]
    return run


def _single(fn):
    return lambda p, ms: [fn(p)]


def _two_roots(p: int, ms: tuple[int, ...]) -> list[CheckReport]:
    return [check_quartic_difference(p, g) for g in primitive_roots(p, 2)]


def _gauss_inversion(p: int, ms: tuple[int, ...]) -> list[CheckReport]:
    return [check_gauss_inversion(x, p) for x in ms if x % p]


CHECKS: dict[str, CheckSpec] = {
    spec.check_id: spec
    for spec in (
        CheckSpec("alpha_beta_table", True, 5, _single(check_alpha_beta_table)),
        CheckSpec("balanced", True, 5, _single(check_balanced)),
        CheckSpec("gauss_inversion", False, 5, _gauss_inversion),
        CheckSpec("gauss_scan", False, 3, _single(check_gauss_scan)),
        CheckSpec("half_square_product", False, 5, _single(check_half_square_product)),
        CheckSpec("inversion_structure", True, 5, _single(check_inversion_structure)),
        CheckSpec("parity_linkage", True, 5, _per_m(check_parity_linkage)),
        CheckSpec("partner_difference", True, 5, _single(check_partner_difference)),
        CheckSpec("partner_products", True, 5, _single(check_partner_products)),
        CheckSpec("partner_sums", True, 5, _single(check_partner_sums)),
        CheckSpec("product_chain", True, 5, _single(check_product_chain)),
        CheckSpec("product_sign", True, 5, _single(check_product_sign)),
        CheckSpec("quartic_counts", True, 5, _single(check_quartic_counts)),
        CheckSpec("quartic_difference", True, 5, _two_roots),
        CheckSpec("sun_parity", False, 3, _per_m(check_sun_parity)),
    )
}


def applicable(check_id: str, p: int) -> bool:
    spec = CHECKS[check_id]
    return p >= spec.min_p and (not spec.needs_one_mod_four or p % 4 == 1)


def run_checks(p: int, check_ids, m_values=(1, 2, 3)) -> list[CheckReport]:
    """All applicable checks at prime p, ordered by check id then parameters."""
    ms = tuple(m_values)
    reports = []
    for cid in sorted(check_ids):
        if cid not in CHECKS:
            raise KeyError(f"unknown check {cid!r}")
        if applicable(cid, p):
            reports.extend(CHECKS[cid].run(p, ms))
    return sorted(reports, key=CheckReport.sort_key)
