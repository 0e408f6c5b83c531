"""Oracles and randomized verification campaigns.

The rewrite oracle multiplies by writing elements as words in ``x`` and ``y``
and applying only ``yx -> xy + 1`` until every word is ordered; it shares no
code with the closed-form product in :mod:`weylstar.weyl`.

Campaigns are deterministic: trial ``i`` of a run with seed ``s`` draws from
``random.Random(f"{s}:{i}:{check}")``, so any failure can be replayed
on its own.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .classifier import classify, decompose, invert
from .errors import BoundExceeded, NotAlphaEquivariant, NotEndomorphism, WeylStarError
from .geometry import leading_term, lower_degree, support
from .jacobian import (
    JacFamilyParams,
    apply_poly_alpha,
    build_jac_family,
    compose_poly,
    jac_bracket,
    jc2_classify,
    jc2_invert,
)
from .morphisms import (
    IDENTITY,
    FamilyParams,
    apply_alpha,
    apply_beta,
    apply_phi,
    apply_phi_inv,
    build_family,
    compose,
    family_inverse,
    is_alpha_equivariant,
    is_endomorphism,
)
from .poly import PolyElement
from .weyl import WeylElement, commutator

DEFAULT_GRID = tuple(Fraction(k, 2) for k in range(-4, 5))


def rewrite_oracle_mul(a, b, bound=8):
    """Product of two Weyl elements by exhaustive single-step rewriting."""
    for e in (a, b):
        if e and e.total_degree() > bound:
            raise BoundExceeded(f"total degree {e.total_degree()} exceeds bound {bound}")
    words = {}
    for (i, j), c in a.terms.items():
        for (k, l), d in b.terms.items():
            w = "x" * i + "y" * j + "x" * k + "y" * l
            words[w] = words.get(w, 0) + c * d

    normal = {}
    while words:
        w, c = words.popitem()
        if not c:
            continue
        pos = w.find("yx")
        if pos < 0:
            normal[w] = normal.get(w, 0) + c
            continue
        for nw in (w[:pos] + "xy" + w[pos + 2:], w[:pos] + w[pos + 2:]):
            words[nw] = words.get(nw, 0) + c

    return WeylElement({(w.count("x"), w.count("y")): c for w, c in normal.items()})


# -- random generation -----------------------------------------------------


def _rng(seed):
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_scalar(rng, num_bound=9, den_bound=4, nonzero=False):
    while True:
        q = Fraction(rng.randint(-num_bound, num_bound), rng.randint(1, den_bound))
        if q or not nonzero:
            return q


def random_element(rng, cls=WeylElement, max_terms=8, max_exp=5, max_total=None):
    """Random element with at most ``max_terms`` terms and exponents ``<= max_exp``."""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        i = rng.randint(0, max_exp)
        j = rng.randint(0, max_exp)
        if max_total is not None and i + j > max_total:
            j = max(0, max_total - i)
        terms[(i, j)] = random_scalar(rng, nonzero=True)
    return cls(terms)


def family_params_from_t(t, c=()):
    """``a = (t^2 + 1)/(2t)``, ``b = (t^2 - 1)/(2t)`` always gives ``a^2 - b^2 = 1``."""
    t = Fraction(t)
    return FamilyParams((t * t + 1) / (2 * t), (t * t - 1) / (2 * t), c)


def _random_t(rng, bound=9):
    p = rng.choice([-1, 1]) * rng.randint(1, bound)
    return Fraction(p, rng.randint(1, bound))


def random_family_params(seed, max_n=4, coeff_bound=9):
    rng = _rng(seed)
    t = _random_t(rng)
    n = rng.randint(0, max_n)
    c = [random_scalar(rng, coeff_bound) for _ in range(n + 1)]
    return family_params_from_t(t, c)


def random_jac_family_params(seed, max_n=4, coeff_bound=9):
    p = random_family_params(seed, max_n, coeff_bound)
    return JacFamilyParams(p.a, p.b, p.c)


# -- degree-1 probe --------------------------------------------------------


@dataclass
class ProbeReport:
    total: int = 0
    accepted: int = 0
    accepted_ab: set = field(default_factory=set)
    mismatches: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.mismatches


def exhaustive_degree1_probe(grid=DEFAULT_GRID):
    """Enumerate ``f(x) = a x + b y + e``, ``f(y) = alpha(f(x))`` over ``grid``.

    Checks that the endomorphism test agrees with ``a^2 - b^2 == 1`` and that
    exactly the accepted maps classify and invert.  This covers the degree-1
    slice only; higher degrees are covered by randomized campaigns.
    """
    x, y = WeylElement.generators()
    report = ProbeReport()
    grid = [Fraction(g) for g in grid]
    for a in grid:
        for b in grid:
            for e in grid:
                report.total += 1
                fx = x.scale(a) + y.scale(b) + e
                g = (fx, apply_alpha(fx))
                expected = a * a - b * b == 1
                endo = is_endomorphism(g)
                if endo != expected:
                    report.mismatches.append((a, b, e, "endomorphism test disagrees"))
                    continue
                try:
                    form = classify(g)
                    inv = invert(g)
                except WeylStarError:
                    if expected:
                        report.mismatches.append((a, b, e, "classification rejected"))
                    continue
                if not expected:
                    report.mismatches.append((a, b, e, "classification accepted"))
                    continue
                if (form.a, form.b, form.c) != (a, b, (e,) if e else ()):
                    report.mismatches.append((a, b, e, f"classified as {form}"))
                elif compose(g, inv) != IDENTITY or compose(inv, g) != IDENTITY:
                    report.mismatches.append((a, b, e, "inverse does not compose to id"))
                else:
                    report.accepted += 1
                    report.accepted_ab.add((a, b))
    return report


# -- campaigns -------------------------------------------------------------


def _check_oracle(rng):
    a = random_element(rng, max_total=6)
    b = random_element(rng, max_total=6)
    return a * b == rewrite_oracle_mul(a, b)


def _check_family(rng):
    p = random_family_params(rng)
    g = build_family(p)
    if not (is_endomorphism(g) and is_alpha_equivariant(g)):
        return False
    form = classify(g)
    if form.params != p or build_family(form.params) != g:
        return False
    inv = family_inverse(p)
    return compose(g, inv) == IDENTITY and compose(inv, g) == IDENTITY


def _check_involutions(rng):
    w1 = random_element(rng, max_exp=3)
    w2 = random_element(rng, max_exp=3)
    return (
        apply_alpha(apply_alpha(w1)) == w1
        and apply_beta(apply_beta(w1)) == w1
        and apply_alpha(w1 * w2) == apply_alpha(w2) * apply_alpha(w1)
        and apply_beta(w1 * w2) == apply_beta(w2) * apply_beta(w1)
        and apply_beta(w1) == apply_phi_inv(apply_alpha(apply_phi(w1)))
    )


def _check_sym_pair(rng):
    g = build_family(random_family_params(rng))
    s = decompose(g)
    lt = leading_term((1, 0), s.p1)
    return commutator(s.p0, s.p1) == Fraction(1, 2) and support(lt) == {(0, 1)}


def _check_jacobian(rng):
    p = random_jac_family_params(rng)
    fx, fy = build_jac_family(p)
    if jac_bracket(fx, fy) != 1 or apply_poly_alpha(fx) != fy:
        return False
    if jc2_classify(fx, fy) != p:
        return False
    inv = jc2_invert(fx, fy)
    X, Y = PolyElement.generators()
    if compose_poly((fx, fy), inv) != (X, Y) or compose_poly(inv, (fx, fy)) != (X, Y):
        return False
    u = random_element(rng, PolyElement, max_exp=4)
    v = random_element(rng, PolyElement, max_exp=4)
    br = jac_bracket(u, v)
    return br.is_zero() or (
        lower_degree((0, 1), br) >= lower_degree((0, 1), u) + lower_degree((0, 1), v) - 1
    )


def _check_perturbation(rng):
    x, _ = WeylElement.generators()
    fx, fy = build_family(random_family_params(rng))
    eps = random_scalar(rng, nonzero=True)
    try:
        classify((fx + (x * x).scale(eps), fy))
    except (NotAlphaEquivariant, NotEndomorphism):
        return True
    return False


CHECKS = {
    "oracle-mul": _check_oracle,
    "family": _check_family,
    "involutions": _check_involutions,
    "sym-pair": _check_sym_pair,
    "jacobian": _check_jacobian,
    "perturbation": _check_perturbation,
}


@dataclass
class VerifyReport:
    trials: int
    seed: object
    checks_run: int = 0
    failures: list = field(default_factory=list)
    probe: ProbeReport = None

    @property
    def ok(self):
        return not self.failures

    def to_json(self):
        return {
            "trials": self.trials,
            "seed": self.seed,
            "failures": self.failures,
        }

    def summary(self):
        lines = [
            f"seed {self.seed}: {self.trials} trials x {len(CHECKS)} checks "
            f"({', '.join(CHECKS)}), {self.checks_run} run, {len(self.failures)} failed"
        ]
        if self.probe is not None:
            lines.append(
                f"degree-1 probe: {self.probe.total} maps, {self.probe.accepted} accepted, "
                f"{len(self.probe.mismatches)} mismatches"
            )
        lines.append(
            "scope: randomized family roundtrips plus the exhaustive degree-1 slice; "
            "not a proof for all degrees"
        )
        for f in self.failures:
            lines.append(f"FAIL trial {f['trial']} {f['check']}: {f['detail']}")
        lines.append("OK" if self.ok else "FAILED")
        return "\n".join(lines)


def run_trial(seed, index):
    """Run every check once for trial ``index``; returns a list of failures."""
    failures = []
    for name, check in CHECKS.items():
        rng = random.Random(f"{seed}:{index}:{name}")
        try:
            ok = check(rng)
            detail = "identity does not hold"
        except Exception as exc:  # report, do not abort the campaign
            ok = False
            detail = f"{type(exc).__name__}: {exc}"
        if not ok:
            failures.append({"trial": index, "check": name, "detail": detail})
    return failures


def run_campaign(trials=20, seed=0, probe_grid=DEFAULT_GRID):
    report = VerifyReport(trials=trials, seed=seed)
    for i in range(trials):
        report.failures.extend(run_trial(seed, i))
        report.checks_run += len(CHECKS)
    if probe_grid is not None:
        report.probe = exhaustive_degree1_probe(probe_grid)
        for a, b, e, why in report.probe.mismatches:
            detail = f"a={a}, b={b}, e={e}: {why}"
            report.failures.append({"trial": None, "check": "degree1-probe", "detail": detail})
    return report
