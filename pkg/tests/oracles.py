"""Independent reference computations used only by the tests."""

from itertools import combinations

from heckeweb.qarith import RationalFunction
from heckeweb.symgrp import Permutation
from heckeweb import uqrep


def subword_bruhat_leq(u: Permutation, w: Permutation) -> bool:
    """Subword criterion: u is below w when some subword of a fixed
    reduced word of w multiplies to u with the right length."""
    word = w.reduced_word()
    target_len = u.length()
    for picks in combinations(range(len(word)), target_len):
        prod = Permutation.identity(w.n)
        for idx in picks:
            prod = prod * Permutation.simple(w.n, word[idx])
        if prod == u:
            return True
    return False


def bar_right_nested(v: uqrep.TensorVector) -> uqrep.TensorVector:
    """Bar involution with the opposite bracketing (first factor against
    the rest); must agree with the library's left-nested version."""
    comp = v.comp
    out = uqrep.zero_vector(comp)
    for eta, c in v.support.items():
        out = out + _bar_basis_right(comp, eta).scale(c.bar())
    return out


def _bar_basis_right(comp, eta) -> uqrep.TensorVector:
    if len(comp) <= 1:
        return uqrep.standard_vector(comp, eta)
    head_comp, tail_comp = comp[:1], comp[1:]
    tail = _bar_basis_right(tail_comp, eta[1:])
    ext = uqrep.TensorVector(comp, {(eta[0],) + g: c for g, c in tail.support.items()})
    correction = uqrep.zero_vector(comp)
    # E acts on the first factor, F on the rest; F passing the first
    # factor contributes the Koszul sign
    for g, c in ext.support.items():
        if g[0] != 1:
            continue
        e_first = uqrep.act_E(uqrep.standard_vector(head_comp, g[:1]))
        f_rest = uqrep.act_F(uqrep.standard_vector(tail_comp, g[1:]))
        for ge, ce in e_first.support.items():
            for gf, cf in f_rest.support.items():
                correction = correction + uqrep.TensorVector(
                    comp, {ge + gf: ce * cf * c * (-1)}
                )
    shift = RationalFunction.q_power(-1) - RationalFunction.q_power(1)
    return ext + correction.scale(shift)


def redistribution_targets(t, i, fine_comp):
    """All admissible refinements of a merged-type tableau: increment the
    entries above i, then hand the merged entries out to the values i and
    i+1 in every way and resort the column.  Reference oracle for the
    out-of-wall translation targets."""
    from heckeweb.tabgroth import HookTableau, is_admissible

    ai, aj = fine_comp[i - 1], fine_comp[i]
    entries = list(t.entries())
    bumped = [e + 1 if e > i else e for e in entries]
    slots = [idx for idx, e in enumerate(bumped) if e == i]
    assert len(slots) == ai + aj
    out = set()
    for ups in combinations(slots, aj):
        filled = list(bumped)
        for idx in ups:
            filled[idx] = i + 1
        column = tuple(sorted(filled[: t.k], reverse=True))
        row = tuple(filled[t.k :])
        cand = HookTableau(t.n, t.k, tuple(fine_comp), column, row)
        if is_admissible(cand):
            out.add(cand)
    return out
