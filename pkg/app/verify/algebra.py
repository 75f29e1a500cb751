"""Exact identity suites: field axioms, series identities, resultants"""

from app.field import FieldCtx, ff_make
from app.genlead import complete_from_poly
from app.polyring import Poly, resultant_euclid, resultant_sylvester
from app.symschur import (
    Alphabet,
    complete_series,
    elementary_series,
    lascoux_148_check,
    negative_series,
    s_difference,
)
from app.verify.base import Draws, SuiteResult, VerificationSuite

SERIES_ORDER = 8


class FieldSuite(VerificationSuite):
    """Field axioms on random elements of small prime fields"""

    default_trials = 200

    def run(self, trials: int, seed: int) -> SuiteResult:
        result = SuiteResult(name="field")
        draws = Draws(seed)
        for q in (2, 3, 5, 67, 127):
            ctx = ff_make(q)
            for _ in range(trials):
                a, b = draws.values(q, 2)
                x, y = ctx.elem(a), ctx.elem(b)
                result.check((x + y) - y == x, f"q={q}: ({a}+{b})-{b} != {a}")
                result.check(x * y == y * x, f"q={q}: {a}*{b} not commutative")
                if b:
                    result.check((x * y) * y.inverse() == x, f"q={q}: ({a}*{b})/{b} != {a}")
                    result.check(ctx.pow(b, q - 1) == 1, f"q={q}: {b}^(q-1) != 1")
        return result

    def get_description(self) -> str:
        return "Field axioms and Fermat's little theorem over F_2..F_127"


class CauchySuite(VerificationSuite):
    """Cauchy formulas for sums and differences of alphabets"""

    default_trials = 500

    def run(self, trials: int, seed: int) -> SuiteResult:
        result = SuiteResult(name="cauchy")
        draws = Draws(seed)
        ctx = FieldCtx(67)
        q = ctx.q
        n = SERIES_ORDER
        for trial in range(trials):
            a = Alphabet.of(ctx, draws.values(q, draws.below(5)))
            b = Alphabet.of(ctx, draws.values(q, draws.below(5)))
            joined = a + b

            s_sum = complete_series(joined, n)
            s_prod = complete_series(a, n).times(complete_series(b, n), n)
            result.check(s_sum == s_prod, f"trial {trial}: S(A+B) != S(A)S(B)")

            l_sum = elementary_series(joined).truncate(n)
            l_prod = elementary_series(a).times(elementary_series(b), n)
            result.check(
                l_sum.coeffs == l_prod.coeffs, f"trial {trial}: Λ(A+B) != Λ(A)Λ(B)"
            )

            diff = s_difference(a, b, n)
            s_a = complete_series(a, n)
            lam_b = elementary_series(b)
            for i in range(n + 1):
                conv = sum(s_a[i - j] * (-1) ** j * lam_b[j] for j in range(i + 1)) % q
                result.check(diff[i] == conv, f"trial {trial}: S^{i}(A-B) convolution mismatch")

            poly = Poly.from_roots(ctx, a.elements)
            neg = negative_series(a)
            e = len(a)
            from_series = Poly.from_coeffs(ctx, [neg[e - i] for i in range(e + 1)])
            result.check(from_series == poly, f"trial {trial}: S^e(T-A) != ∏(T-a)")
        return result

    def get_description(self) -> str:
        return "Cauchy formulas for S and Λ, and S^e(T-A) against the root product"


class NewtonSuite(VerificationSuite):
    """Σ (-1)^j Λ^j S^(i-j) = 0 and complete functions read from coefficients"""

    default_trials = 200

    def run(self, trials: int, seed: int) -> SuiteResult:
        result = SuiteResult(name="newton")
        draws = Draws(seed)
        for trial in range(trials):
            ctx = FieldCtx(draws.choice((5, 67, 127)))
            a = Alphabet.of(ctx, draws.values(ctx.q, draws.below(6)))
            s = complete_series(a, SERIES_ORDER)
            lam = elementary_series(a)
            for i in range(1, SERIES_ORDER + 1):
                total = sum((-1) ** j * lam[j] * s[i - j] for j in range(i + 1)) % ctx.q
                result.check(total == 0, f"trial {trial}: recurrence fails at i={i}")
            g = Poly.from_roots(ctx, a.elements)
            if len(a):
                from_coeffs = complete_from_poly(g, SERIES_ORDER)
                result.check(
                    from_coeffs.coeffs == s.coeffs,
                    f"trial {trial}: complete functions from coefficients differ",
                )
        return result

    def get_description(self) -> str:
        return "Newton-type recurrence between S and Λ; S(A) from the coefficients of g"


class TColumnIdentitySuite(VerificationSuite):
    """S_J(A - B - t)·t^k against the T-column determinant"""

    default_trials = 100

    def run(self, trials: int, seed: int) -> SuiteResult:
        result = SuiteResult(name="lascoux")
        draws = Draws(seed)
        ctx = FieldCtx(67)
        for trial in range(trials):
            index = tuple(draws.below(4) for _ in range(3))
            k = draws.below(4)
            a = Alphabet.of(ctx, draws.values(ctx.q, 4))
            b = Alphabet.of(ctx, draws.values(ctx.q, 2))
            t = draws.below(ctx.q)
            result.check(
                lascoux_148_check(index, k, a, b, t),
                f"trial {trial}: J={index}, k={k}, t={t}",
            )
        return result

    def get_description(self) -> str:
        return "Schur functions of A - B - T against the T-column determinant"


class ResultantSuite(VerificationSuite):
    """Euclid-based resultant against the Sylvester determinant"""

    default_trials = 200

    def run(self, trials: int, seed: int) -> SuiteResult:
        result = SuiteResult(name="resultant")
        draws = Draws(seed)
        for trial in range(trials):
            ctx = FieldCtx(draws.choice((5, 67)))
            g = draws.poly(ctx, 7)
            f = draws.poly(ctx, 5)
            euclid = resultant_euclid(g, f)
            sylvester = resultant_sylvester(g, f)
            result.check(euclid == sylvester, f"trial {trial}: g={g}, f={f}")
        return result

    def get_description(self) -> str:
        return "Resultant by the Euclidean recursion against the Sylvester matrix"
