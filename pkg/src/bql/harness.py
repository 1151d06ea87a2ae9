"""Check registry for the B'_n quotient lemmas.

Every check returns a :class:`CheckReport`.  ``status`` is ``pass`` exactly
when ``observed == expected``; ``inconclusive`` is reserved for coset
enumerations that ran out of budget.

Check catalog (check_id -> what is certified):

=====================  ======================================================
lemma_A                index of <s1> in B_n / <<relator>> is 1, relator s2 s1^-1 or s3 s1^-1
lemma_2                same, relator (s2 s1^-1)^2
lemma_B_identities     rho_jk rho_ij^-1 rho_jk^-1 = rho_ik^-1 for all triples; s3 s2 s3^-1 = rho_24
lemma_B_distinct       the 2 C(n,3) images pi(alpha_ijk), pi(beta_ijk) are distinct 3-cycles
orbit_conjugators      exponent-sum-zero conjugators carry s2 s1^-1 to every alpha_ijk, beta_ijk
lemma_C_identities     s3 s2^-1 . s2 s1^-1 -> s3 s1^-1; s3 s1^-1 = s1^-1 s3; s2 s1^-1 commutes
                       with s_m (m >= 4); u, v, w, c1, f have exponent sum 0
carmichael_collapse    index of <s1> in B_n / <<(s2 s1^-1)^3, (s3 s1^-1)^2>> is n!/2
three_cycle_counts     3-cycle class size, centralizer order in A_n, their product n!/2
projection_onto_An     <pi(s_i s1^-1)> has order n!/2
abelianization         B_n^ab = Z
orbit_bound            2 C(n,3) * |M| (n-3)!/2 = n! |M| / 6 >= n!/2, equality iff |M| = 3
aut_footnote           |Aut(A_n)| = |S_n| by brute force (A_6: 2 |S_6|)
=====================  ======================================================
"""

from __future__ import annotations

import itertools
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Iterable

from . import braid, cosets, fpres, perm
from .braid import BraidWord, artin, commutes, paper_element, permutation_image, rho, words_equal
from .fpres import Presentation
from .word import Word

INT64_MAX = 2**63 - 1


@dataclass
class CheckReport:
    check_id: str
    params: dict[str, Any]
    status: str
    observed: Any
    expected: Any
    runtime_ms: int = 0
    detail: dict[str, Any] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return asdict(self)


class UnknownCheck(KeyError):
    pass


# -- bound ledger -------------------------------------------------------------


def checked(value: int, what: str) -> int:
    """Reject values a signed 64-bit integer could not hold."""
    if not -INT64_MAX - 1 <= value <= INT64_MAX:
        raise OverflowError(f"{what} = {value} overflows 64-bit arithmetic")
    return value


def checked_mul(a: int, b: int, what: str) -> int:
    return checked(checked(a, what) * checked(b, what), what)


@dataclass(frozen=True)
class BoundLedger:
    n: int
    m: int
    orbit_lower: int        # 2 C(n,3), lower bound on the class of the image of s2 s1^-1
    m_lower: int            # |M| >= 3: the image of s2 s1^-1 has order at least 3
    stabilizer_lower: int   # |M| (n-3)!/2, lower bound on the centralizer C
    product: int            # n! |M| / 6
    group_lower: int        # n!/2

    def as_dict(self) -> dict:
        return asdict(self)


def orbit_stabilizer_bound(n: int, m: int) -> BoundLedger:
    if n < 8:
        raise ValueError(f"the orbit bound needs n >= 8, got {n}")
    if m < 3:
        raise ValueError(f"|M| must be at least 3, got {m}")
    orbit = checked_mul(2, math.comb(n, 3), "2 C(n,3)")
    half_fact = checked(math.factorial(n - 3), "(n-3)!") // 2
    stabilizer = checked_mul(m, half_fact, "|M| (n-3)!/2")
    product = checked_mul(orbit, stabilizer, "orbit x stabilizer")
    nfact = checked(math.factorial(n), "n!")
    closed = checked_mul(nfact, m, "n! |M|") // 6
    if product != closed:
        raise ArithmeticError(f"orbit x stabilizer {product} != n!|M|/6 {closed}")
    lower = nfact // 2
    if product < lower or (product == lower) != (m == 3):
        raise ArithmeticError(f"bound {product} vs n!/2 = {lower} inconsistent for m = {m}")
    return BoundLedger(n, m, orbit, 3, stabilizer, product, lower)


# -- individual checks --------------------------------------------------------


def _report(check_id, params, observed, expected, started, detail=None, inconclusive=False):
    status = "inconclusive" if inconclusive else ("pass" if observed == expected else "fail")
    return CheckReport(check_id, params, status, observed, expected,
                       int((time.perf_counter() - started) * 1000), detail or {})


def commuting_half_twist(relator: BraidWord) -> int | None:
    """Smallest m with s_m commuting with ``relator``, if any."""
    for m in range(1, relator.strands):
        if commutes(relator, artin(m, relator.strands)):
            return m
    return None


def normal_generation_index(n: int, relator: Word, max_cosets: int | None = None) -> cosets.EnumerationResult:
    p = fpres.artin_presentation(n).add_relators([relator])
    return cosets.enumerate_cosets(p, [Word([1])], max_cosets=max_cosets)


def index_one_certifies_normal_generation(n: int, relator: Word,
                                          max_cosets: int | None = None) -> bool | None:
    """True/False on a completed enumeration, None when the budget ran out.

    The exponent sum of ``relator`` must vanish and some s_m must commute with
    it, so that normal closures in B_n and B'_n agree.
    """
    b = BraidWord(n, relator)
    if b.exponent_sum() != 0:
        raise ValueError(f"relator {relator} has exponent sum {b.exponent_sum()}, not 0")
    if commuting_half_twist(b) is None:
        raise ValueError(f"no Artin generator commutes with {relator} in B_{n}")
    result = normal_generation_index(n, relator, max_cosets)
    if not result.completed:
        return None
    return result.index == 1


def _enumeration_check(check_id, params, p, subgroup, expected, max_cosets, started, extra=None):
    result = cosets.enumerate_cosets(p, subgroup, max_cosets=max_cosets)
    detail = {"definitions": result.stats.definitions,
              "coincidences": result.stats.coincidences,
              "max_live": result.stats.max_live}
    detail.update(extra or {})
    return _report(check_id, params, result.index, expected, started, detail,
                   inconclusive=not result.completed)


def check_lemma_A(n: int, relator: str = "2 -1", max_cosets: int | None = None) -> CheckReport:
    started = time.perf_counter()
    w = Word.parse(relator)
    b = BraidWord(n, w)
    m = commuting_half_twist(b)
    params = {"n": n, "relator": str(w)}
    extra = {"exponent_sum": b.exponent_sum(), "commuting_generator": m}
    if b.exponent_sum() != 0 or m is None:
        return _report("lemma_A", params, None, 1, started, extra)
    p = fpres.artin_presentation(n).add_relators([w])
    return _enumeration_check("lemma_A", params, p, [Word([1])], 1, max_cosets, started, extra)


def check_lemma_2(n: int, max_cosets: int | None = None) -> CheckReport:
    report = check_lemma_A(n, "2 -1 2 -1", max_cosets)
    report.check_id = "lemma_2"
    report.params = {"n": n}
    return report


def carmichael_presentation(n: int) -> Presentation:
    return fpres.artin_presentation(n).add_relators(
        [Word.parse("2 -1") ** 3, Word.parse("3 -1") ** 2])


def check_carmichael(n: int, max_cosets: int | None = None) -> CheckReport:
    started = time.perf_counter()
    if n < 4:
        raise ValueError("the Carmichael collapse uses s3, so n >= 4")
    return _enumeration_check("carmichael_collapse", {"n": n}, carmichael_presentation(n),
                              [Word([1])], math.factorial(n) // 2, max_cosets, started)


def lemma_B_identities(n: int) -> dict[str, bool]:
    results = {}
    for i, j, k in itertools.combinations(range(1, n + 1), 3):
        lhs = rho(j, k, n) * ~rho(i, j, n) * ~rho(j, k, n)
        results[f"rho{j}{k} rho{i}{j}^-1 rho{j}{k}^-1 = rho{i}{k}^-1"] = words_equal(lhs, ~rho(i, k, n))
    if n >= 4:
        results["s3 s2 s3^-1 = rho24"] = words_equal(BraidWord.of(n, 3, 2, -3), rho(2, 4, n))
        results["rho24 s2^-1 = (s3 s2 s3^-1) s2^-1"] = words_equal(
            rho(2, 4, n) * BraidWord.of(n, -2), BraidWord.of(n, 3, 2, -3, -2))
    return results


def lemma_C_identities(n: int) -> dict[str, bool]:
    results = {}
    eq2 = Word.parse("3 -2") * Word.parse("2 -1")
    results["s3 s2^-1 . s2 s1^-1 reduces to s3 s1^-1"] = eq2 == Word.parse("3 -1")
    results["s3 s1^-1 = s1^-1 s3"] = words_equal(BraidWord.of(n, 3, -1), BraidWord.of(n, -1, 3))
    u = paper_element("u", n)
    for m in range(4, n):
        results[f"s2 s1^-1 commutes with s{m}"] = commutes(u, artin(m, n))
    results["s3 s1^-1 commutes with s1"] = commutes(paper_element("c1", n), artin(1, n))
    for name in ("u", "v", "w", "c1", "f"):
        results[f"exponent_sum({name}) = 0"] = paper_element(name, n).exponent_sum() == 0
    return results


def _identity_check(check_id, n, fn):
    started = time.perf_counter()
    results = fn(n)
    failed = sorted(k for k, ok in results.items() if not ok)
    return _report(check_id, {"n": n}, sum(results.values()), len(results), started,
                   {"failed": failed})


def check_lemma_B_identities(n: int) -> CheckReport:
    return _identity_check("lemma_B_identities", n, lemma_B_identities)


def check_lemma_C_identities(n: int) -> CheckReport:
    return _identity_check("lemma_C_identities", n, lemma_C_identities)


def orbit_images(n: int) -> list[perm.Permutation]:
    out = []
    for triple in itertools.combinations(range(1, n + 1), 3):
        for name in ("alpha", "beta"):
            out.append(permutation_image(paper_element(name, n, triple)))
    return out


def check_lemma_B_distinct(n: int) -> CheckReport:
    started = time.perf_counter()
    images = orbit_images(n)
    distinct = {p for p in images if perm.is_three_cycle(p)}
    return _report("lemma_B_distinct", {"n": n}, len(distinct), 2 * math.comb(n, 3), started,
                   {"images": len(images)})


def check_orbit_conjugators(n: int) -> CheckReport:
    started = time.perf_counter()
    base = paper_element("u", n)
    ok = 0
    total = 0
    failed = []
    for triple in itertools.combinations(range(1, n + 1), 3):
        for target in ("alpha", "beta"):
            total += 1
            g = braid.change_of_coordinates_conjugator(*triple, n, target)
            good = (g.exponent_sum() == 0
                    and words_equal(base.conjugate(g), paper_element(target, n, triple)))
            ok += good
            if not good:
                failed.append(f"{target}{triple}")
    return _report("orbit_conjugators", {"n": n}, ok, total, started, {"failed": failed})


def check_three_cycle_counts(n: int) -> CheckReport:
    started = time.perf_counter()
    half = math.factorial(n) // 2
    enumerated = len(perm.three_cycles(n))
    c = perm.Permutation.from_cycles([(1, 2, 3)], n)
    brute = n <= perm.BRUTE_FORCE_CENTRALIZER_MAX_N
    centralizer = perm.centralizer_order_in_An(c, n, brute_force=brute)
    observed = {"class_size": enumerated, "centralizer": centralizer,
                "product": enumerated * centralizer}
    expected = {"class_size": perm.three_cycle_class_size(n),
                "centralizer": 3 * math.factorial(n - 3) // 2, "product": half}
    return _report("three_cycle_counts", {"n": n}, observed, expected, started,
                   {"centralizer_method": "brute_force" if brute else "closed_form"})


def check_projection(n: int) -> CheckReport:
    started = time.perf_counter()
    gens = [permutation_image(BraidWord.of(n, i, -1)) for i in range(2, n)]
    order = perm.PermGroup(n, gens).order()
    return _report("projection_onto_An", {"n": n}, order, math.factorial(n) // 2, started)


def check_abelianization(n: int) -> CheckReport:
    started = time.perf_counter()
    inv = fpres.abelianization(fpres.artin_presentation(n))
    return _report("abelianization", {"n": n}, [inv.free_rank, list(inv.torsion)], [1, []], started)


def check_orbit_bound(n: int, m: int = 3) -> CheckReport:
    started = time.perf_counter()
    ledger = orbit_stabilizer_bound(n, m)
    expected = math.factorial(n) * m // 6
    return _report("orbit_bound", {"n": n, "m": m}, ledger.product, expected, started,
                   ledger.as_dict())


# A_n presentations for the automorphism count; each is verified by enumeration first.
AUT_PRESENTATIONS = {
    5: Presentation(2, (Word.parse("1 1"), Word.parse("2 2 2"), Word.parse("1 2") ** 5)),
    6: Presentation(2, (Word.parse("1 1"), Word.parse("2 2 2 2"), Word.parse("1 2") ** 5,
                        Word.parse("1 2 2") ** 5)),
}


def check_aut(n: int = 5, max_cosets: int | None = None) -> CheckReport:
    started = time.perf_counter()
    if n not in AUT_PRESENTATIONS:
        raise ValueError(f"no stored presentation of A_{n}; available: {sorted(AUT_PRESENTATIONS)}")
    pres = AUT_PRESENTATIONS[n]
    group = perm.PermGroup.alternating(n)
    expected = math.factorial(n) * (2 if n == 6 else 1)
    verified = cosets.enumerate_cosets(pres, [], max_cosets=max_cosets)
    detail = {"presentation_order": verified.index, "group_order": group.order()}
    if not verified.completed:
        return _report("aut_footnote", {"n": n}, None, expected, started, detail, inconclusive=True)
    if verified.index != group.order():
        return _report("aut_footnote", {"n": n}, None, expected, started, detail)
    count = perm.automorphism_count(group, pres.relators, pres.generator_count)
    return _report("aut_footnote", {"n": n}, count, expected, started, detail)


CHECKS: dict[str, Callable[..., CheckReport]] = {
    "lemma_A": check_lemma_A,
    "lemma_2": check_lemma_2,
    "lemma_B_identities": check_lemma_B_identities,
    "lemma_B_distinct": check_lemma_B_distinct,
    "orbit_conjugators": check_orbit_conjugators,
    "lemma_C_identities": check_lemma_C_identities,
    "carmichael_collapse": check_carmichael,
    "three_cycle_counts": check_three_cycle_counts,
    "projection_onto_An": check_projection,
    "abelianization": check_abelianization,
    "orbit_bound": check_orbit_bound,
    "aut_footnote": check_aut,
}

_TAKES_BUDGET = {"lemma_A", "lemma_2", "carmichael_collapse", "aut_footnote"}


def run_check(check_id: str, params: dict | None = None, budget: int | None = None) -> CheckReport:
    if check_id not in CHECKS:
        raise UnknownCheck(check_id)
    if budget is not None and budget <= 0:
        raise ValueError(f"budget must be positive, got {budget}")
    kwargs = dict(params or {})
    if check_id in _TAKES_BUDGET:
        kwargs["max_cosets"] = budget
    return CHECKS[check_id](**kwargs)


def induction_order(n_min: int, n_max: int) -> list[int]:
    """n_min..n_max grouped into chains n, n+3, n+6, ... (one chain per base case)."""
    out = []
    for base in range(n_min, min(n_min + 3, n_max + 1)):
        out.extend(range(base, n_max + 1, 3))
    return out


def pipeline_plan(n_min: int = 5, n_max: int = 8) -> list[tuple[str, dict]]:
    if n_min < 5:
        raise ValueError(f"pipeline starts at n >= 5, got {n_min}")
    if n_max < n_min:
        raise ValueError(f"n_max {n_max} < n_min {n_min}")
    plan: list[tuple[str, dict]] = []
    for n in induction_order(n_min, n_max):
        plan.append(("lemma_A", {"n": n, "relator": "2 -1"}))
        plan.append(("lemma_A", {"n": n, "relator": "3 -1"}))
        plan.append(("lemma_2", {"n": n}))
        plan.append(("lemma_B_identities", {"n": n}))
        plan.append(("lemma_B_distinct", {"n": n}))
        plan.append(("lemma_C_identities", {"n": n}))
        plan.append(("carmichael_collapse", {"n": n}))
        plan.append(("three_cycle_counts", {"n": n}))
        plan.append(("projection_onto_An", {"n": n}))
        plan.append(("abelianization", {"n": n}))
        if n <= 6:
            plan.append(("orbit_conjugators", {"n": n}))
        if n >= 8:
            plan.append(("orbit_bound", {"n": n, "m": 3}))
    for n in sorted(AUT_PRESENTATIONS):
        if n_min <= n <= n_max:
            plan.append(("aut_footnote", {"n": n}))
    return plan


def _run_planned(item):
    check_id, params, budget = item
    return run_check(check_id, params, budget)


def pipeline(n_min: int = 5, n_max: int = 8, budget: int | None = None,
             jobs: int = 1) -> list[CheckReport]:
    """Run the plan; reports come back in plan order whatever the completion order."""
    items = [(cid, params, budget) for cid, params in pipeline_plan(n_min, n_max)]
    if jobs <= 1:
        return [_run_planned(item) for item in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_planned, items))


def summarize(reports: Iterable[CheckReport]) -> dict[str, int]:
    counts = {"pass": 0, "fail": 0, "inconclusive": 0}
    for r in reports:
        counts[r.status] += 1
    return counts
