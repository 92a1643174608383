"""Exhaustive verification sweeps.

A suite is a list of independent cases; each case returns ``None`` or a
:class:`Failure` carrying both sides of the broken identity in re-parseable
text.  Cases may run on a thread pool; results are collected in case order,
so reports do not depend on the worker count.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import coactions as co
from . import identities as ids
from .free_lie import is_primitive, lie_basis, lyndon_bracketing, lyndon_words, pair, tensor_vanishes_in_L
from .rc_solver import V4, is_skew, r_func, residual, solve_degree, twisted_residual
from .series import (
    ZERO,
    X0,
    X1,
    NcPoly,
    Tensor2,
    all_words,
    antipode,
    conc,
    counit,
    dL,
    dR,
    delta_dec,
    delta_sh,
    format_tensor,
    shuffle,
    tensor_conc,
    words_up_to,
    x0,
    x1,
)


@dataclass
class Failure:
    case: str
    lhs: str
    rhs: str

    def to_json(self) -> dict:
        return {"case": self.case, "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class VerifyReport:
    suite: str
    max_degree: int
    cases: int
    failures: list[Failure] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "max_degree": self.max_degree,
            "cases": self.cases,
            "passed": self.passed,
            "failures": [f.to_json() for f in self.failures],
        }

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{self.suite}: {status} ({self.cases} cases, max degree {self.max_degree})"]
        for f in self.failures:
            lines.append(f"  counterexample: {f.case}")
            lines.append(f"    lhs = {f.lhs}")
            lines.append(f"    rhs = {f.rhs}")
        return "\n".join(lines)


Case = Callable[[], Optional[Failure]]


def _wp(w: str) -> str:
    return str(NcPoly.word(w))


def _eq(label: str, lhs, rhs) -> Optional[Failure]:
    if lhs == rhs:
        return None
    fmt = format_tensor if isinstance(lhs, Tensor2) else str
    return Failure(label, fmt(lhs), fmt(rhs))



# ---------------------------------------------------------------------------
# hopf-axioms


def _coassoc(delta, w: str) -> Optional[Failure]:
    t = delta(NcPoly.word(w))
    lhs: dict = {}
    rhs: dict = {}
    for (u, v), c in t.items():
        for (a, b), d in delta(NcPoly.word(u)).items():
            lhs[(a, b, v)] = lhs.get((a, b, v), 0) + c * d
        for (a, b), d in delta(NcPoly.word(v)).items():
            rhs[(u, a, b)] = rhs.get((u, a, b), 0) + c * d
    lhs = {k: v for k, v in lhs.items() if v}
    rhs = {k: v for k, v in rhs.items() if v}
    if lhs == rhs:
        return None
    return Failure(f"coassociativity of {delta.__name__} on {_wp(w)}", str(sorted(lhs.items())), str(sorted(rhs.items())))


def _antipode_axiom(w: str) -> Optional[Failure]:
    acc = ZERO
    for (u, v), c in delta_sh(NcPoly.word(w)).items():
        acc = acc + conc(antipode(NcPoly.word(u)), NcPoly.word(v)).scale(c)
    return _eq(f"m(S (x) id) delta_sh on {_wp(w)}", acc, NcPoly.scalar(counit(NcPoly.word(w))))


def _reconstruction(w: str) -> Optional[Failure]:
    p = NcPoly.word(w)
    right = NcPoly.scalar(counit(p)) + conc(x0, dR(X0, p)) + conc(x1, dR(X1, p))
    left = NcPoly.scalar(counit(p)) + conc(dL(X0, p), x0) + conc(dL(X1, p), x1)
    return _eq(f"reconstruction of {_wp(w)}", p, right) or _eq(f"reconstruction of {_wp(w)}", p, left)


def _pairing_duality(w: str) -> Optional[Failure]:
    """<w, u sh v> = <delta_sh(w), u (x) v> and <w, uv> = <delta_dec(w), u (x) v>."""
    W = NcPoly.word(w)
    dsh, ddec = delta_sh(W), delta_dec(W)
    n = len(w)
    for i in range(n + 1):
        for u in all_words(i):
            for v in all_words(n - i):
                U, V = NcPoly.word(u), NcPoly.word(v)
                lhs, rhs = shuffle(U, V).coeff(w), dsh.coeff(u, v)
                if lhs != rhs:
                    return Failure(f"<{_wp(w)}, {_wp(u)} sh {_wp(v)}>", str(lhs), str(rhs))
                lhs, rhs = conc(U, V).coeff(w), ddec.coeff(u, v)
                if lhs != rhs:
                    return Failure(f"<{_wp(w)}, {_wp(u)} * {_wp(v)}>", str(lhs), str(rhs))
    return None


def hopf_axiom_cases(max_degree: int) -> list[Case]:
    cases: list[Case] = []
    words = words_up_to(max_degree)
    for u in words:
        for v in words:
            if len(u) + len(v) <= max_degree:
                cases.append(lambda u=u, v=v: _eq(
                    f"shuffle commutativity {_wp(u)}, {_wp(v)}",
                    shuffle(NcPoly.word(u), NcPoly.word(v)),
                    shuffle(NcPoly.word(v), NcPoly.word(u)),
                ))
                cases.append(lambda u=u, v=v: _bialgebra(u, v))
    for n in range(max_degree + 1):
        for split in _compositions3(n):
            for u in all_words(split[0]):
                for v in all_words(split[1]):
                    for w in all_words(split[2]):
                        cases.append(lambda u=u, v=v, w=w: _assoc(u, v, w))
    for w in words:
        cases.append(lambda w=w: _coassoc(delta_dec, w))
        cases.append(lambda w=w: _coassoc(delta_sh, w))
        cases.append(lambda w=w: _antipode_axiom(w))
        cases.append(lambda w=w: _pairing_duality(w))
    for w in words_up_to(max_degree + 1):
        cases.append(lambda w=w: _reconstruction(w))
    for n in range(1, max_degree + 1):
        for lw in lyndon_words(n):
            cases.append(lambda lw=lw: None if is_primitive(lyndon_bracketing(lw)) else Failure(
                f"primitivity of the bracketing of {_wp(lw)}", str(delta_sh(lyndon_bracketing(lw))), "psi (x) 1 + 1 (x) psi"))
    return cases


def _compositions3(n: int):
    for a in range(n + 1):
        for b in range(n + 1 - a):
            yield a, b, n - a - b


def _assoc(u: str, v: str, w: str) -> Optional[Failure]:
    U, V, W = NcPoly.word(u), NcPoly.word(v), NcPoly.word(w)
    label = f"{_wp(u)}, {_wp(v)}, {_wp(w)}"
    return _eq("shuffle associativity " + label, shuffle(U, shuffle(V, W)), shuffle(shuffle(U, V), W)) or _eq(
        "conc associativity " + label, conc(U, conc(V, W)), conc(conc(U, V), W)
    )


def _bialgebra(u: str, v: str) -> Optional[Failure]:
    U, V = NcPoly.word(u), NcPoly.word(v)
    return _eq(f"delta_sh({_wp(u)} * {_wp(v)})", delta_sh(conc(U, V)), tensor_conc(delta_sh(U), delta_sh(V)))


# ---------------------------------------------------------------------------
# operator suites

PSI_DEGREE = 4


def _psis(max_m: int = PSI_DEGREE):
    return [psi for m in range(1, max_m + 1) for psi in lie_basis(m)]


def case_sum_I_cases(max_degree: int) -> list[Case]:
    def case(psi, w):
        return _eq(f"sum of Ihara cases, psi = {psi}, w = {_wp(w)}",
                   sum(co.ihara_cases(psi, w), ZERO), co.ihara_act(psi, NcPoly.word(w)))

    return [lambda psi=psi, w=w: case(psi, w) for psi in _psis() for w in words_up_to(max_degree)]


def case_sum_Imu_cases(max_degree: int) -> list[Case]:
    def case(psi, w):
        return _eq(f"sum of mu-twisted cases, psi = {psi}, w = {_wp(w)}",
                   sum(co.imu_cases(psi, w), ZERO), co.d_mu(psi, NcPoly.word(w)))

    return [lambda psi=psi, w=w: case(psi, w) for psi in _psis() for w in words_up_to(max_degree)]


def mu_duality_cases(max_degree: int) -> list[Case]:
    def case(w):
        md = co.mu_dual(NcPoly.word(w))
        for v in all_words(len(w) + 1):
            lhs = md.coeff(v)
            rhs = co.mu(NcPoly.word(v)).coeff(w)
            if lhs != rhs:
                return Failure(f"<mu_dual({_wp(w)}), {_wp(v)}> vs <{_wp(w)}, mu({_wp(v)})>", str(lhs), str(rhs))
        return None

    return [lambda w=w: case(w) for w in words_up_to(max_degree)]


def coaction_duality_cases(max_degree: int) -> list[Case]:
    def case(w):
        groups = co.gb_coaction(w).by_right()
        n = len(w)
        for psi in _psis(min(PSI_DEGREE, n)):
            m = psi.degree
            for u in all_words(n - m):
                lhs = pair(psi, groups.get(u, ZERO))
                rhs = co.ihara_act(psi, NcPoly.word(u)).coeff(w)
                if lhs != rhs:
                    return Failure(f"psi = {psi}, u = {_wp(u)}, w = {_wp(w)}", str(lhs), str(rhs))
        return None

    return [lambda w=w: case(w) for w in words_up_to(max_degree)]


def commutator_coaction_cases(max_degree: int) -> list[Case]:
    def case(w):
        lhs, rhs = co.D_mu_lhs(w), co.D_mu_rhs(w)
        if tensor_vanishes_in_L(lhs - rhs):
            return None
        return Failure(f"commutator coaction on {_wp(w)} (equality in L (x) A)", format_tensor(lhs), format_tensor(rhs))

    return [lambda w=w: case(w) for w in words_up_to(max_degree)]


def _solutions(max_degree: int):
    return [(n, e) for n in range(2, max_degree + 1) for e in solve_degree(n, V4).elements]


def _identity_failure(label: str, identities) -> Optional[Failure]:
    for name, lhs, rhs in identities:
        if lhs != rhs:
            return Failure(f"{label}: {name}", str(lhs), str(rhs))
    return None


def intermediate_identity_cases(max_degree: int) -> list[Case]:
    sols = _solutions(max_degree)
    cases: list[Case] = []
    for n, psi in sols:
        cases.append(lambda psi=psi: _eq(f"twisted residual of {psi}", twisted_residual(psi), ZERO))
        for m in range(1, 4):
            for f in lie_basis(m):
                cases.append(lambda psi=psi, f=f: _identity_failure(
                    f"d_f(mu(psi)), psi = {psi}, f = {f}", ids.derivation_of_mu(psi, f)))
        for m in range(2, 5):
            for f in lie_basis(m):
                cases.append(lambda psi=psi, f=f: _identity_failure(
                    f"mu-twisted pieces, psi = {psi}, f = {f}", ids.twisted_action_pieces(psi, f)))
    for n1, p1 in sols:
        for n2, p2 in sols:
            if n1 + n2 > max_degree:
                continue
            for fn in (ids.mu_of_action, ids.bracket_strips, ids.mu_of_commutator):
                cases.append(lambda p1=p1, p2=p2, fn=fn: _identity_failure(
                    f"{fn.__name__}, psi1 = {p1}, psi2 = {p2}", fn(p1, p2)))
    return cases


def closure_cases(max_degree: int) -> list[Case]:
    sols = _solutions(max_degree - 2)

    def case(p1, p2):
        b = co.ihara_bracket(p1, p2)
        if not is_skew(b):
            return Failure(f"skewness of {{{p1}, {p2}}}", str(b), "skew-symmetric element")
        if r_func(b):
            return Failure(f"r of {{{p1}, {p2}}}", str(r_func(b)), "0")
        return _eq(f"residual of {{{p1}, {p2}}}", residual(b, V4), ZERO)

    return [
        lambda p1=p1, p2=p2: case(p1, p2)
        for n1, p1 in sols
        for n2, p2 in sols
        if n1 + n2 <= max_degree
    ]


SUITES: dict[str, tuple[Callable[[int], list[Case]], int]] = {
    "hopf-axioms": (hopf_axiom_cases, 6),
    "case-sum-I": (case_sum_I_cases, 6),
    "case-sum-Imu": (case_sum_Imu_cases, 6),
    "mu-duality": (mu_duality_cases, 7),
    "D-duality": (coaction_duality_cases, 6),
    "theorem-2-2": (commutator_coaction_cases, 7),
    "lemmas-3": (intermediate_identity_cases, 9),
    "closure": (closure_cases, 10),
}


def run_suite(name: str, max_degree: int | None = None, threads: int = 1, fail_fast: bool = False) -> VerifyReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    build, default = SUITES[name]
    deg = default if max_degree is None else max_degree
    start = time.perf_counter()
    cases = build(deg)
    failures: list[Failure] = []
    ran = 0
    if threads <= 1 or fail_fast:
        for c in cases:
            ran += 1
            f = c()
            if f is not None:
                failures.append(f)
                if fail_fast:
                    break
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for f in pool.map(lambda c: c(), cases):
                ran += 1
                if f is not None:
                    failures.append(f)
    return VerifyReport(name, deg, ran, failures, time.perf_counter() - start)
