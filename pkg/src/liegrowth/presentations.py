"""Relation suites for the wreath-product models, checked by evaluation.

Two relator families are provided. For the plain model the defining relations
say the torus is abelian and any two module towers commute:

    [t_i, t_j] = 0
    [[a_k, t_{i1}, ..., t_{ir}], [a_l, t_{j1}, ..., t_{js}]] = 0

with arbitrary (repeating) subscripts; instantiation is bounded by r + s. For
the extended model the finite presentation consists of

    [a_k, t_{j1}, ..., t_{js}, a_l] = 0   (1 <= j1 < j2 < ... < js <= n)
    [t_i, t_j] = [t_i, u_j] = [u_i, u_j] = 0
    [a_k, u_l] = [a_k, t_l, t_l]

Checking never raises on a failed relation: failures come back as data
(witness strings) inside a report, and an empty failure list means the suite
passed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Sequence

from .expr import Bracket, Generator, Leaf, LieExpr, evaluate, format_expr, left_normed
from .wreath import MODE_W, MODE_WPLUS, WreathElement, standard_assignment, wreath_bracket


@dataclass(frozen=True)
class Relator:
    """lhs = rhs as elements of the presented algebra; rhs None means 0."""

    label: str
    lhs: LieExpr
    rhs: LieExpr | None = None


@dataclass
class Presentation:
    generators: tuple[Generator, ...]
    relators: tuple[Relator, ...]
    bounds: dict[str, int]


@dataclass
class RelationReport:
    suite: str
    mode: str
    m: int
    n: int
    bounds: dict[str, int]
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "mode": self.mode,
            "d": self.m if self.m == self.n else None,
            "m": self.m,
            "n": self.n,
            "bounds": self.bounds,
            "checked": self.checked,
            "failures": self.failures,
        }


def _a(k: int) -> Generator:
    return Generator("a", k)


def _t(i: int) -> Generator:
    return Generator("t", i)


def _u(i: int) -> Generator:
    return Generator("u", i)


def wreath_presentation(m: int, n: int, pair_len_max: int = 6) -> Presentation:
    """Torus commutation plus commuting towers, with r + s <= pair_len_max."""
    relators: list[Relator] = []
    for i in range(n):
        for j in range(n):
            lhs = Bracket(Leaf(_t(i)), Leaf(_t(j)))
            relators.append(Relator(format_expr(lhs), lhs))
    for total in range(pair_len_max + 1):
        for r in range(total + 1):
            s = total - r
            for k in range(m):
                for l in range(m):
                    for isub in product(range(n), repeat=r):
                        for jsub in product(range(n), repeat=s):
                            left = left_normed([_a(k)] + [_t(i) for i in isub])
                            right = left_normed([_a(l)] + [_t(j) for j in jsub])
                            lhs = Bracket(left, right)
                            relators.append(Relator(format_expr(lhs), lhs))
    gens = tuple(_a(k) for k in range(m)) + tuple(_t(i) for i in range(n))
    return Presentation(gens, tuple(relators), {"pair_len_max": pair_len_max})


def wplus_presentation(m: int, n: int, s_max: int = 5) -> Presentation:
    """The finite presentation of the extended model.

    The separator family uses strictly increasing torus subscripts, so it is
    finite on its own; s_max only truncates it further when s_max < n.
    """
    relators: list[Relator] = []
    for s in range(min(s_max, n) + 1):
        for js in combinations(range(n), s):
            for k in range(m):
                for l in range(m):
                    lhs = left_normed([_a(k)] + [_t(j) for j in js] + [_a(l)])
                    relators.append(Relator(format_expr(lhs), lhs))
    for i in range(n):
        for j in range(n):
            pairs = [
                Bracket(Leaf(_t(i)), Leaf(_t(j))),
                Bracket(Leaf(_t(i)), Leaf(_u(j))),
                Bracket(Leaf(_u(i)), Leaf(_u(j))),
            ]
            for lhs in pairs:
                relators.append(Relator(format_expr(lhs), lhs))
    for k in range(m):
        for l in range(n):
            lhs = Bracket(Leaf(_a(k)), Leaf(_u(l)))
            rhs = left_normed([_a(k), _t(l), _t(l)])
            relators.append(Relator(f"{format_expr(lhs)} = {format_expr(rhs)}", lhs, rhs))
    gens = (
        tuple(_a(k) for k in range(m))
        + tuple(_t(i) for i in range(n))
        + tuple(_u(i) for i in range(n))
    )
    return Presentation(gens, tuple(relators), {"s_max": s_max})


def check_presentation(
    pres: Presentation,
    mode: str,
    m: int,
    n: int,
    suite: str = "presentation",
) -> RelationReport:
    """Evaluate every relator in the model; nonzero values become witnesses."""
    assignment = standard_assignment(m, n, mode)
    brack = lambda p, q: wreath_bracket(p, q, mode)
    report = RelationReport(suite=suite, mode=mode, m=m, n=n, bounds=dict(pres.bounds))
    for rel in pres.relators:
        lhs = evaluate(rel.lhs, assignment, brack)
        value = lhs if rel.rhs is None else lhs - evaluate(rel.rhs, assignment, brack)
        report.checked += 1
        if not value.is_zero():
            report.failures.append(f"{rel.label} evaluated to {value}")
    return report


# ------------------------------------------------------------- bracket towers

_TOWER_HYPOTHESES = (
    ("[a,b]", lambda br, a, b, t, u: br(a, b)),
    ("[a,t,b]", lambda br, a, b, t, u: br(br(a, t), b)),
    ("[b,t,a]", lambda br, a, b, t, u: br(br(b, t), a)),
    ("[t,u]", lambda br, a, b, t, u: br(t, u)),
    ("[a,u]-[a,t,t]", lambda br, a, b, t, u: br(a, u) - br(br(a, t), t)),
    ("[b,u]-[b,t,t]", lambda br, a, b, t, u: br(b, u) - br(br(b, t), t)),
)


def tower_commutation_report(
    a: WreathElement,
    b: WreathElement,
    t: WreathElement,
    u: WreathElement,
    i_max: int,
    j_max: int,
    mode: str = MODE_WPLUS,
    instance: str = "towers",
) -> RelationReport:
    """Check that all towers [[a,t,..,t],[b,t,..,t]] vanish.

    Hypotheses are checked first; if any fails, the conclusion is not
    evaluated (the report carries the hypothesis witnesses instead).
    """
    brack = lambda p, q: wreath_bracket(p, q, mode)
    report = RelationReport(
        suite=instance,
        mode=mode,
        m=a.m,
        n=a.n,
        bounds={"i_max": i_max, "j_max": j_max},
    )
    for label, fn in _TOWER_HYPOTHESES:
        value = fn(brack, a, b, t, u)
        report.checked += 1
        if not value.is_zero():
            report.failures.append(f"hypothesis {label} evaluated to {value}")
    if report.failures:
        return report
    towers_a = [a]
    for _ in range(i_max):
        towers_a.append(brack(towers_a[-1], t))
    towers_b = [b]
    for _ in range(j_max):
        towers_b.append(brack(towers_b[-1], t))
    for i in range(i_max + 1):
        for j in range(j_max + 1):
            value = brack(towers_a[i], towers_b[j])
            report.checked += 1
            if not value.is_zero():
                report.failures.append(f"[[a,t^{i}],[b,t^{j}]] evaluated to {value}")
    return report


def standard_tower_instances(d: int) -> list[tuple[str, WreathElement, WreathElement, WreathElement, WreathElement]]:
    """Base and one-step instantiations used by the verification suite.

    Base: a = a1, b = a2 (b = a1 when d = 1), t = t1, u = u1. Step: the same
    but with a and b replaced by [a1, t2] and [a2, t2] (needs d >= 2).
    """
    a1 = WreathElement.gen_a(0, d, d)
    t1 = WreathElement.gen_t(0, d, d)
    u1 = WreathElement.gen_u(0, d, d)
    b_base = WreathElement.gen_a(1, d, d) if d >= 2 else a1
    out = [("base", a1, b_base, t1, u1)]
    if d >= 2:
        t2 = WreathElement.gen_t(1, d, d)
        a2 = WreathElement.gen_a(1, d, d)
        step_a = wreath_bracket(a1, t2, MODE_WPLUS)
        step_b = wreath_bracket(a2, t2, MODE_WPLUS)
        out.append(("step", step_a, step_b, t1, u1))
    return out
