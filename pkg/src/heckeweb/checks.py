"""Desk-scale verification battery.

Every check recomputes an identity by two routes, or validates a frozen
hand-derived value, in exact arithmetic.  A check raises CheckFailure
with a pinpointed message; success returns None.  The command line
exposes these as named suites, and the acceptance tests drive the same
functions with the documented size bounds.
"""

from __future__ import annotations

from itertools import product

from .qarith import (
    LaurentPoly,
    RationalFunction,
    quantum_binom,
    quantum_factorial0,
    quantum_int,
)
from .symgrp import (
    ParabolicSubgroup,
    Permutation,
    all_permutations,
    is_shortest_rep,
)
from . import hecke, inducedmod, uqrep, webcat, tabgroth

__all__ = ["CheckFailure", "SUITES", "run_suite", "compositions_of"]

_Q = RationalFunction.q_power


class CheckFailure(AssertionError):
    pass


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise CheckFailure(msg)


def compositions_of(n: int):
    """All compositions of n, in lexicographic-by-first-part order."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions_of(n - first):
            yield (first,) + rest


# -- criterion 1: example fidelity ----------------------------------------


def check_examples(max_n: int = 4) -> None:
    c01 = uqrep.canonical_basis((1, 1), (0, 1))
    _require(
        c01 == uqrep.standard_vector((1, 1), (0, 1)),
        f"canonical (1,1)/01 is {c01}",
    )
    c10 = uqrep.canonical_basis((1, 1), (1, 0))
    want = uqrep.standard_vector((1, 1), (1, 0)) + uqrep.standard_vector(
        (1, 1), (0, 1)
    ).scale(_Q(1))
    _require(c10 == want, f"canonical (1,1)/10 is {c10}")

    comp = (3, 1, 4, 4, 2, 1, 1)
    eta = (0, 1, 0, 0, 1, 0, 1)
    expected = {
        (0, 1, 0, 0, 1, 0, 1): 0,
        (0, 0, 1, 0, 1, 0, 1): 1,
        (0, 0, 0, 1, 1, 0, 1): 5,
        (0, 1, 0, 0, 0, 1, 1): 2,
        (0, 0, 1, 0, 0, 1, 1): 3,
        (0, 0, 0, 1, 0, 1, 1): 7,
    }
    cb = uqrep.canonical_basis(comp, eta)
    _require(len(cb.support) == len(expected), f"six-term expansion has {len(cb.support)} terms")
    for gamma, exp in expected.items():
        _require(
            cb.coeff(gamma) == _Q(exp),
            f"coefficient at {gamma} is {cb.coeff(gamma)}, wanted q^{exp}",
        )


# -- criterion 2: canonical basis vs brute-force solver --------------------


def kl_bruteforce(w: Permutation) -> hecke.HeckeElement:
    """Solve the bar-invariant unitriangular system directly: process the
    Bruhat interval below w from the top, reading each coefficient off
    its antisymmetrized defect.  Independent of the multiply-and-correct
    construction."""
    n = w.n
    elems = [v for v in all_permutations(n) if v.bruhat_leq(w)]
    bar_mat = {v: hecke.bar_of_standard(n, v) for v in elems}
    coeffs: dict[Permutation, LaurentPoly] = {w: LaurentPoly.one()}
    for y in sorted(elems, key=lambda v: (v.length(), v.one_line), reverse=True):
        if y == w:
            continue
        rhs = LaurentPoly.zero()
        for v, p_v in coeffs.items():
            rhs = rhs + p_v.bar() * bar_mat[v].coeff(y).as_laurent()
        if rhs.bar() != -rhs:
            raise CheckFailure(f"defect at {y} below {w} is not antisymmetric: {rhs}")
        coeffs[y] = LaurentPoly({e: c for e, c in rhs.terms.items() if e > 0})
    support = {
        v: RationalFunction.from_laurent(p) for v, p in coeffs.items() if not p.is_zero()
    }
    out = hecke.HeckeElement(n, support)
    if hecke.bar(out) != out:
        raise CheckFailure(f"brute-force element at {w} is not bar invariant")
    return out


def check_hecke(max_n: int = 4) -> None:
    for n in range(1, max_n + 1):
        for w in all_permutations(n):
            mine = hecke.kl_basis_element(w)
            brute = kl_bruteforce(w)
            _require(mine == brute, f"canonical basis mismatch at {w} in S_{n}")


# -- criterion 3: induced module maps --------------------------------------


def _commuting_pairs(n: int):
    gens = list(range(1, n))
    for bits_p in range(1 << len(gens)):
        p = frozenset(g for j, g in enumerate(gens) if bits_p >> j & 1)
        allowed = [g for g in gens if all(abs(g - h) >= 2 for h in p)]
        for bits_q in range(1 << len(allowed)):
            q = frozenset(g for j, g in enumerate(allowed) if bits_q >> j & 1)
            yield p, q


def _subsets(s: frozenset):
    items = sorted(s)
    for bits in range(1 << len(items)):
        yield frozenset(g for j, g in enumerate(items) if bits >> j & 1)


def _longest_rep_between(n: int, outer: frozenset, inner: frozenset) -> Permutation:
    big = ParabolicSubgroup.of(n, outer)
    small = ParabolicSubgroup.of(n, inner)
    reps = [x for x in big.elements() if is_shortest_rep(x, small, side="left")]
    return max(reps, key=lambda x: x.length())


def check_induced_maps(max_n: int = 4) -> None:
    for n in range(2, max_n + 1):
        for p_gens, q_gens in _commuting_pairs(n):
            mod = inducedmod.InducedModule.of(n, p_gens, q_gens)
            basis = mod.basis_index()
            # shrink the trivial wall
            for q_sub in _subsets(q_gens):
                dst = inducedmod.InducedModule.of(n, p_gens, q_sub)
                for w in basis:
                    x = mod.standard(w)
                    img = inducedmod.map_i(mod, dst, x)
                    back = inducedmod.map_Q(dst, mod, img)
                    _require(back == x, f"Q(i(N_{w})) != N_{w} on {mod} -> {dst}")
                    for i in range(1, n):
                        lhs = inducedmod.map_i(mod, dst, x.act_generator(i))
                        _require(
                            lhs == img.act_generator(i),
                            f"i not equivariant at {mod}->{dst}, w={w}, i={i}",
                        )
                    _require(
                        inducedmod.map_i(mod, dst, x.bar()) == img.bar(),
                        f"i does not commute with bar at {mod}->{dst}, w={w}",
                    )
                for w in dst.basis_index():
                    x = dst.standard(w)
                    img = inducedmod.map_Q(dst, mod, x)
                    for i in range(1, n):
                        _require(
                            inducedmod.map_Q(dst, mod, x.act_generator(i))
                            == img.act_generator(i),
                            f"Q not equivariant at {dst}->{mod}, w={w}, i={i}",
                        )
                # canonical transport
                top = _longest_rep_between(n, q_gens, q_sub)
                for w in basis:
                    img = inducedmod.map_i(mod, dst, inducedmod.canonical_basis_element(mod, w))
                    want = inducedmod.canonical_basis_element(dst, top * w)
                    _require(
                        img == want,
                        f"i(canonical {w}) != canonical {top * w} at {mod}->{dst}",
                    )
                # naturality through intermediate walls
                for q_mid in _subsets(q_gens):
                    if not q_sub <= q_mid:
                        continue
                    mid = inducedmod.InducedModule.of(n, p_gens, q_mid)
                    for w in basis:
                        x = mod.standard(w)
                        once = inducedmod.map_i(mod, dst, x)
                        twice = inducedmod.map_i(mid, dst, inducedmod.map_i(mod, mid, x))
                        _require(
                            once == twice,
                            f"naturality fails {mod}->{mid}->{dst} at {w}",
                        )
            # shrink the sign wall
            for p_sub in _subsets(p_gens):
                dst = inducedmod.InducedModule.of(n, p_sub, q_gens)
                scale = RationalFunction.zero()
                big = ParabolicSubgroup.of(n, p_gens)
                small = ParabolicSubgroup.of(n, p_sub)
                for x_elt in big.elements():
                    if is_shortest_rep(x_elt, small, side="left"):
                        scale = scale + _Q(2 * x_elt.length())
                for w in basis:
                    x = mod.standard(w)
                    img = inducedmod.map_j(mod, dst, x)
                    back = inducedmod.map_z(dst, mod, img)
                    _require(
                        back == x.scale(scale),
                        f"z(j(N_{w})) != scale * N_{w} on {mod} -> {dst}",
                    )
                    for i in range(1, n):
                        _require(
                            inducedmod.map_j(mod, dst, x.act_generator(i))
                            == img.act_generator(i),
                            f"j not equivariant at {mod}->{dst}, w={w}, i={i}",
                        )
                for w in dst.basis_index():
                    x = dst.standard(w)
                    img = inducedmod.map_z(dst, mod, x)
                    for i in range(1, n):
                        _require(
                            inducedmod.map_z(dst, mod, x.act_generator(i))
                            == img.act_generator(i),
                            f"z not equivariant at {dst}->{mod}, w={w}, i={i}",
                        )
                    _require(
                        inducedmod.map_z(dst, mod, x.bar()) == img.bar(),
                        f"z does not commute with bar at {dst}->{mod}, w={w}",
                    )
                    cb = inducedmod.canonical_basis_element(dst, w)
                    img_cb = inducedmod.map_z(dst, mod, cb)
                    if w in basis:
                        _require(
                            img_cb == inducedmod.canonical_basis_element(mod, w),
                            f"z(canonical {w}) wrong at {dst}->{mod}",
                        )
                    else:
                        _require(
                            img_cb.is_zero(),
                            f"z(canonical {w}) nonzero at {dst}->{mod}",
                        )


# -- criterion 4: representation identities --------------------------------


def check_rep_identities(max_n: int = 5, max_ab: int = 4) -> None:
    for n in range(1, max_n + 1):
        for comp in compositions_of(n):
            for eta in product((0, 1), repeat=len(comp)):
                v = uqrep.standard_vector(comp, eta)
                _require(uqrep.act_E(uqrep.act_E(v)).is_zero(), f"E^2 != 0 on {comp}")
                _require(uqrep.act_F(uqrep.act_F(v)).is_zero(), f"F^2 != 0 on {comp}")
                anti = uqrep.act_E(uqrep.act_F(v)) + uqrep.act_F(uqrep.act_E(v))
                _require(
                    anti == v.scale(quantum_int(n)),
                    f"EF+FE != [n] id on {comp} at {eta}",
                )
    for a in range(1, max_ab + 1):
        for b in range(1, max_ab + 1):
            comp = (a, b)
            merged = (a + b,)
            for eta in product((0, 1), repeat=2):
                v = uqrep.standard_vector(comp, eta)
                for act in (uqrep.act_E, uqrep.act_F, uqrep.act_K):
                    _require(
                        act(uqrep.phi_merge(v, 1)) == uqrep.phi_merge(act(v), 1),
                        f"merge not equivariant for {act.__name__} at {comp} {eta}",
                    )
            for eta in product((0, 1), repeat=1):
                v = uqrep.standard_vector(merged, eta)
                for act in (uqrep.act_E, uqrep.act_F, uqrep.act_K):
                    _require(
                        act(uqrep.phi_split(v, 1, a, b))
                        == uqrep.phi_split(act(v), 1, a, b),
                        f"split not equivariant for {act.__name__} at {merged} {eta}",
                    )
                loop = uqrep.phi_merge(uqrep.phi_split(v, 1, a, b), 1)
                _require(
                    loop == v.scale(quantum_binom(a + b, a)),
                    f"merge(split) != binomial at a={a}, b={b}",
                )
    for a in range(1, min(max_ab, 3) + 1):
        for b in range(1, min(max_ab, 3) + 1):
            for eta in product((0, 1), repeat=2):
                for gamma in product((0, 1), repeat=1):
                    v = uqrep.standard_vector((a, b), eta)
                    vp = uqrep.standard_vector((a + b,), gamma)
                    lhs = uqrep.bilinear_form(uqrep.phi_merge(v, 1), vp)
                    rhs = uqrep.bilinear_form(
                        v, uqrep.phi_split(vp, 1, a, b).scale(_Q(-a * b))
                    )
                    _require(lhs == rhs, f"pairing adjunction fails a={a} b={b} {eta} {gamma}")
    for n in range(1, min(max_n, 4) + 1):
        for comp in compositions_of(n):
            for eta in product((0, 1), repeat=len(comp)):
                for gamma in product((0, 1), repeat=len(comp)):
                    v = uqrep.standard_vector(comp, eta)
                    w = uqrep.standard_vector(comp, gamma)
                    _require(
                        uqrep.bilinear_form(uqrep.act_F(v), w)
                        == uqrep.bilinear_form(v, uqrep.act_Eprime(w)),
                        f"F/E' adjunction fails on {comp} at {eta},{gamma}",
                    )


# -- criterion 5: Hecke generators and their quotient relations ------------


def check_schur_weyl_stl(max_n: int = 5) -> None:
    two = _Q(1) + _Q(-1)
    for n in range(2, max_n + 1):
        comp = (1,) * n
        basis = [uqrep.standard_vector(comp, eta) for eta in product((0, 1), repeat=n)]

        def C(v, i):
            return uqrep.stl_C(v, i)

        for v in basis:
            for i in range(1, n):
                h = uqrep.schur_weyl_H(v, i)
                hh = uqrep.schur_weyl_H(h, i)
                _require(
                    hh == h.scale(_Q(-1) - _Q(1)) + v,
                    f"quadratic relation fails at n={n}, i={i}",
                )
                _require(
                    C(C(v, i), i) == C(v, i).scale(two),
                    f"idempotent-like relation fails at n={n}, i={i}",
                )
            for i in range(1, n - 1):
                a = uqrep.schur_weyl_H(uqrep.schur_weyl_H(uqrep.schur_weyl_H(v, i), i + 1), i)
                b = uqrep.schur_weyl_H(uqrep.schur_weyl_H(uqrep.schur_weyl_H(v, i + 1), i), i + 1)
                _require(a == b, f"braid relation fails at n={n}, i={i}")
                lhs = C(C(C(v, i), i + 1), i) - C(v, i)
                rhs = C(C(C(v, i + 1), i), i + 1) - C(v, i + 1)
                _require(lhs == rhs, f"hexagon relation fails at n={n}, i={i}")
            for i in range(1, n):
                for j in range(i + 2, n):
                    _require(
                        C(C(v, i), j) == C(C(v, j), i),
                        f"distant commutation fails at n={n}, {i},{j}",
                    )
            for i in range(2, n - 1):
                w1 = C(C(C(v, i - 1), i + 1), i)
                w1 = w1.scale(two) - C(w1, i - 1)
                w1 = w1.scale(two) - C(w1, i + 1)
                _require(w1.is_zero(), f"first degree-5 relation fails at n={n}, i={i}")
                w2 = v.scale(two) - C(v, i - 1)
                w2 = w2.scale(two) - C(w2, i + 1)
                w2 = C(C(C(w2, i), i - 1), i + 1)
                _require(w2.is_zero(), f"second degree-5 relation fails at n={n}, i={i}")


# -- criterion 6: web relations and the labeling oracle --------------------


def check_web_relations(max_n: int = 5) -> None:
    for a in range(1, max_n):
        for b in range(1, max_n - a + 1):
            _require(webcat.check_relation("O53", a=a, b=b), f"loop relation fails a={a} b={b}")
    for a in range(1, max_n - 1):
        for b in range(1, max_n - a):
            for c in range(1, max_n - a - b + 1):
                _require(
                    webcat.check_relation("assoc44", a=a, b=b, c=c),
                    f"associativity fails {a},{b},{c}",
                )
    _require(webcat.check_relation("stl54"), "three-strand relation fails")
    for n in range(1, max_n + 1):
        _require(webcat.check_relation("eq66", n=n), f"bundle loop != [n]! at n={n}")
    # labeling oracle against matrix composition, every elementary web
    for n in range(2, 4):
        for comp in compositions_of(n):
            webs = []
            for i in range(1, len(comp)):
                webs.append(webcat.merge_web(comp, i))
            for i, a in enumerate(comp, start=1):
                for left in range(1, a):
                    webs.append(webcat.split_web(comp, i, left, a - left))
            for web in webs:
                mat = webcat.evaluate_matrix(web)
                for bottom in product((0, 1), repeat=len(web.source)):
                    img = mat[bottom]
                    for top in product((0, 1), repeat=len(web.target)):
                        got = webcat.matrix_coefficient(
                            webcat.LabeledWebDiagram(web, bottom, top)
                        )
                        _require(
                            got == img.coeff(top),
                            f"labeling oracle differs at {web.word_str()} {bottom}->{top}",
                        )


# -- criterion 7: canonical basis triple agreement -------------------------


def check_canonical_triple(max_n: int = 4) -> None:
    for n in range(1, max_n + 1):
        comp = (1,) * n
        for k in range(0, n + 1):
            mod = inducedmod.InducedModule.of(
                n, p_gens=range(k + 1, n), q_gens=range(1, k)
            )
            for w in mod.basis_index():
                eta = uqrep.seq_act_right((0,) * k + (1,) * (n - k), w)
                bar_route = uqrep.canonical_basis(comp, eta)
                diagram = webcat.canonical_basis_diagram(comp, eta)
                web_route = webcat.evaluate_canonical_diagram(diagram)
                _require(
                    web_route == bar_route,
                    f"web route differs from bar-fixing at n={n}, eta={eta}",
                )
                hecke_route = uqrep.psi_iso(
                    inducedmod.canonical_basis_element(mod, w), k
                )
                _require(
                    hecke_route == bar_route,
                    f"Hecke route differs from bar-fixing at n={n}, eta={eta}",
                )


# -- criterion 8: translation matrices vs webs ------------------------------


def check_theorem1(max_n: int = 5) -> None:
    for n in range(2, max_n + 1):
        for comp in compositions_of(n):
            for i in range(1, len(comp)):
                _require(
                    tabgroth.theorem1_check(comp, i),
                    f"translation/web mismatch at {comp}, position {i}",
                )


# -- criterion 9: raising/lowering on the class bases -----------------------


def check_kgroup(max_n: int = 4) -> None:
    for n in range(1, max_n + 1):
        for comp in compositions_of(n):
            lo = n - len(comp)
            for k in range(lo, n):
                _require(
                    tabgroth.lowering_rule_holds(comp, k),
                    f"lowering rule on projectives fails at {comp}, k={k}",
                )
                _require(
                    tabgroth.raising_rule_holds(comp, k),
                    f"raising rule on simples fails at {comp}, k={k}",
                )
            # squares vanish at the matrix level
            for k in range(lo, n - 1):
                for eta, col in tabgroth.kgroup_F(comp, k + 1).items():
                    _require(
                        uqrep.act_F(col).is_zero(), f"F^2 != 0 at {comp}, k={k}"
                    )
                for eta, col in tabgroth.kgroup_E(comp, k).items():
                    if not col.is_zero():
                        _require(
                            uqrep.act_Eprime(col).is_zero(),
                            f"E'^2 != 0 at {comp}, k={k}",
                        )
            # commutation with the wall crossings
            for i in range(1, len(comp)):
                ai, aj = comp[i - 1], comp[i]
                for eta in product((0, 1), repeat=len(comp)):
                    v = uqrep.standard_vector(comp, eta)
                    _require(
                        uqrep.phi_merge(uqrep.act_F(v), i)
                        == uqrep.act_F(uqrep.phi_merge(v, i)),
                        f"merge/F do not commute at {comp}, i={i}, {eta}",
                    )
                    _require(
                        uqrep.phi_merge(uqrep.act_Eprime(v), i)
                        == uqrep.act_Eprime(uqrep.phi_merge(v, i)),
                        f"merge/E' do not commute at {comp}, i={i}, {eta}",
                    )
                merged = comp[: i - 1] + (ai + aj,) + comp[i + 1 :]
                for eta in product((0, 1), repeat=len(merged)):
                    v = uqrep.standard_vector(merged, eta)
                    _require(
                        uqrep.phi_split(uqrep.act_F(v), i, ai, aj)
                        == uqrep.act_F(uqrep.phi_split(v, i, ai, aj)),
                        f"split/F do not commute at {comp}, i={i}, {eta}",
                    )
                    _require(
                        uqrep.phi_split(uqrep.act_Eprime(v), i, ai, aj)
                        == uqrep.act_Eprime(uqrep.phi_split(v, i, ai, aj)),
                        f"split/E' do not commute at {comp}, i={i}, {eta}",
                    )
        # standard = [k]_0! proper standard on the regular composition
        comp = (1,) * n
        for k in range(0, n + 1):
            for w in tabgroth.enumerate_lambda(comp, k):
                std = tabgroth.class_vector(w, comp, k, "standard")
                prop = tabgroth.class_vector(w, comp, k, "proper_standard")
                _require(
                    std == prop.scale(quantum_factorial0(k)),
                    f"length-of-filtration identity fails at n={n}, k={k}, w={w}",
                )


# -- criterion 10: hom dimensions -------------------------------------------


def check_homdim(max_n: int = 4) -> None:
    for n in range(1, max_n + 1):
        for k in range(0, n + 1):
            members = tabgroth.enumerate_lambda((1,) * n, k)
            for w in members:
                for z in members:
                    tabgroth.hom_dim(w, z, n, k)  # raises on route disagreement


# -- suite registry ----------------------------------------------------------

SUITES = {
    "examples": lambda max_n: check_examples(max_n),
    "hecke": lambda max_n: check_hecke(min(max_n, 4)),
    "induced": lambda max_n: check_induced_maps(min(max_n, 4)),
    "adjunction": lambda max_n: check_rep_identities(max_n, max_ab=4),
    "stl": lambda max_n: check_schur_weyl_stl(max_n),
    "webs": lambda max_n: check_web_relations(max_n),
    "triple": lambda max_n: check_canonical_triple(min(max_n, 4)),
    "theorem1": lambda max_n: check_theorem1(max_n),
    "efm": lambda max_n: check_kgroup(min(max_n, 4)),
    "homdim": lambda max_n: check_homdim(min(max_n, 4)),
}


def run_suite(name: str, max_n: int):
    """Run one suite or all of them; returns a list of (name, error) pairs
    where error is None on success."""
    names = list(SUITES) if name == "all" else [name]
    results = []
    for suite in names:
        if suite not in SUITES:
            raise ValueError(f"unknown suite {suite!r}")
        try:
            SUITES[suite](max_n)
            results.append((suite, None))
        except CheckFailure as exc:
            results.append((suite, str(exc)))
    return results
