"""Structural suites: characterizations, generic leads, Schur remainders"""

from typing import Dict, Tuple

from app.census import verify_characterizations
from app.exceptions import SchurConventionError
from app.field import FieldCtx
from app.genlead import generic_lead
from app.symschur import Alphabet, euclid_normalization, lead_vanishing_agrees, schur_remainder
from app.polyring import Poly
from app.verify.base import Draws, SuiteResult, VerificationSuite


class CharacterizationSuite(VerificationSuite):
    """Exhaustive resultant and genericity characterizations for small q"""

    default_trials = 1

    def run(self, trials: int, seed: int) -> SuiteResult:
        result = SuiteResult(name="characterization")
        draws = Draws(seed)
        for q in (3, 5):
            ctx = FieldCtx(q)
            for e in range(2, 6):
                for d in range(1, e):
                    for _ in range(trials):
                        g = draws.monic(ctx, e)
                        report = verify_characterizations(g, d)
                        result.check(
                            report.resultant_flag,
                            f"q={q} g={g} d={d}: gcd/resultant mismatch "
                            f"{report.resultant_counterexamples[:3]}",
                        )
                        result.check(
                            report.generic_flag is True,
                            f"q={q} g={g} d={d}: genericity mismatch "
                            f"{report.generic_counterexamples[:3]}",
                        )
        return result

    def get_description(self) -> str:
        return "gcd != 1 iff res = 0, and generic iff every G_k is nonzero (exhaustive)"


class LeadStructureSuite(VerificationSuite):
    """Degree and monicity of the generic leading coefficients"""

    default_trials = 2

    def run(self, trials: int, seed: int) -> SuiteResult:
        result = SuiteResult(name="prop31")
        draws = Draws(seed)
        for q in (67, 127):
            ctx = FieldCtx(q)
            for e in range(2, 8):
                for d in range(1, min(e - 1, 4) + 1):
                    for _ in range(trials):
                        g = draws.monic(ctx, e)
                        leads = generic_lead(g, d)
                        for k in range(1, d + 1):
                            lead = leads.lead(k)
                            expected = e - d + k
                            top = [0] * d
                            top[k - 1] = expected
                            where = f"q={q} e={e} d={d} k={k} g={g}"
                            result.check(
                                lead.total_degree() == expected,
                                f"{where}: total degree {lead.total_degree()}",
                            )
                            result.check(
                                lead.degree_in(k) == expected,
                                f"{where}: degree in s_{k} is {lead.degree_in(k)}",
                            )
                            result.check(lead.coeff(top) == 1, f"{where}: not monic in s_{k}")
        return result

    def get_description(self) -> str:
        return "G_k has total degree e-d+k and is monic of that degree in s_k"


class SchurRemainderSuite(VerificationSuite):
    """Schur-form remainders against the Euclid chain"""

    default_trials = 200

    def run(self, trials: int, seed: int) -> SuiteResult:
        result = SuiteResult(name="schur-remainder")
        draws = Draws(seed)
        ctx = FieldCtx(67)
        q = ctx.q
        seen: Dict[Tuple[int, int, int], int] = {}
        for trial in range(trials):
            e = 2 + draws.below(5)
            d = 1 + draws.below(min(3, e - 1))
            a = Alphabet.of(ctx, draws.values(q, e))
            b = Alphabet.of(ctx, draws.values(q, d))
            g = Poly.from_roots(ctx, a.elements)
            f = Poly.from_roots(ctx, b.elements)
            for k in range(1, d + 1):
                where = f"trial {trial} e={e} d={d} k={k}"
                try:
                    rem = schur_remainder(k, a, b)
                    nu = euclid_normalization(rem.poly, g, f, k)
                except SchurConventionError as error:
                    result.check(False, f"{where}: {error}")
                    continue
                result.check(rem.poly.degree <= d - k, f"{where}: degree {rem.poly.degree}")
                agrees = lead_vanishing_agrees(rem.poly, g, f, k)
                if agrees is not None:
                    result.check(agrees, f"{where}: leading coefficient disagrees with Euclid")
                if nu is None:
                    continue
                result.check(nu in (1, q - 1), f"{where}: normalization {nu} is not a sign")
                key = (e, d, k)
                if key in seen:
                    result.check(seen[key] == nu, f"{where}: normalization {nu} != {seen[key]}")
                else:
                    seen[key] = nu
                if k == 1:
                    expected = 1 if (e - d + 1) % 2 == 0 else q - 1
                    result.check(nu == expected, f"{where}: first normalization {nu}")
        return result

    def get_description(self) -> str:
        return "R_k = ν·∏ lc(r_j)^2·r_k with one sign ν per (e, d, k)"
