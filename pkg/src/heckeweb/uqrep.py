"""Tensor representations of the quantum superalgebra with odd generators.

V(a) is two-dimensional with even basis vector v^a_0 and odd v^a_1; on a
tensor product V(a_1) x ... x V(a_l) the generators act through the
comultiplication with Koszul signs: an odd operator passing an odd tensor
factor picks up a minus sign.  The standard basis is indexed by 0/1
sequences eta; the weight space of index k consists of the vectors with
sum(eta) = n - k, where n = a_1 + ... + a_l.

Implements the raising/lowering/Cartan actions, the merge and split
intertwiners, the bar involution built from Theta' = 1 + (q^-1 - q) E x F,
standard/canonical/dual bases, the bilinear form with rescaled quantum
multinomial values, the rescaled adjoint E' of F, and the Hecke action on
tensor powers of the vector representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .qarith import (
    LaurentPoly,
    RationalFunction,
    quantum_binom,
    quantum_int,
    quantum_int0,
    quantum_multinom0,
)
from .symgrp import Permutation, seq_act_right
from .inducedmod import ModuleElement

__all__ = [
    "composition",
    "TensorVector",
    "standard_vector",
    "act_E",
    "act_F",
    "act_K",
    "act_qh",
    "act_Eprime",
    "phi_merge",
    "phi_split",
    "bar",
    "canonical_basis",
    "bilinear_form",
    "dual_standard",
    "dual_canonical",
    "schur_weyl_H",
    "stl_C",
    "psi_iso",
    "weight_index",
    "weight_etas",
    "eta_leq",
]

_Q = RationalFunction.q_power
_ONE = RationalFunction.one()


def composition(parts) -> tuple[int, ...]:
    """Validated composition: a tuple of strictly positive integers."""
    comp = tuple(int(p) for p in parts)
    if not all(p >= 1 for p in comp):
        raise ValueError(f"composition parts must be strictly positive: {comp}")
    return comp


def regular_composition(n: int) -> tuple[int, ...]:
    return (1,) * n


def _check_eta(comp, eta) -> tuple[int, ...]:
    eta = tuple(int(e) for e in eta)
    if len(eta) != len(comp) or any(e not in (0, 1) for e in eta):
        raise ValueError(f"bad 0/1 sequence {eta} for composition {comp}")
    return eta


@dataclass(frozen=True, slots=True, eq=False)
class TensorVector:
    comp: tuple[int, ...]
    support: dict  # eta tuple -> RationalFunction

    def coeff(self, eta) -> RationalFunction:
        return self.support.get(tuple(eta), RationalFunction.zero())

    def is_zero(self) -> bool:
        return not self.support

    def __add__(self, other: "TensorVector") -> "TensorVector":
        if self.comp != other.comp:
            raise ValueError(f"composition mismatch: {self.comp} vs {other.comp}")
        out = dict(self.support)
        for eta, c in other.support.items():
            s = out.get(eta, RationalFunction.zero()) + c
            if s.is_zero():
                out.pop(eta, None)
            else:
                out[eta] = s
        return TensorVector(self.comp, out)

    def __neg__(self):
        return TensorVector(self.comp, {k: -c for k, c in self.support.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "TensorVector":
        if not isinstance(c, RationalFunction):
            c = RationalFunction.from_laurent(
                c if isinstance(c, LaurentPoly) else LaurentPoly.const(c)
            )
        if c.is_zero():
            return TensorVector(self.comp, {})
        return TensorVector(self.comp, {k: v * c for k, v in self.support.items()})

    def __eq__(self, other):
        return (
            isinstance(other, TensorVector)
            and self.comp == other.comp
            and self.support == other.support
        )

    def terms_sorted(self):
        """(eta, coeff) pairs, leading terms (most inversions) first."""
        return sorted(
            self.support.items(),
            key=lambda item: (_inversions(item[0]), item[0]),
            reverse=True,
        )

    def __str__(self):
        if not self.support:
            return "0"
        parts = []
        for eta, c in self.terms_sorted():
            bits = "".join(str(e) for e in eta)
            if c.is_one():
                parts.append(f"v[{bits}]")
            else:
                coeff = str(c)
                if not (c.is_laurent() and len(c.num.terms) == 1):
                    coeff = f"({coeff})"
                parts.append(f"{coeff}*v[{bits}]")
        return " + ".join(parts)

    def to_json(self):
        return {
            "comp": list(self.comp),
            "support": [
                {"eta": "".join(str(e) for e in eta), "coeff": c.to_json()}
                for eta, c in self.terms_sorted()
            ],
        }

    @staticmethod
    def from_json(data) -> "TensorVector":
        comp = composition(data["comp"])
        support = {}
        for item in data["support"]:
            eta = tuple(int(ch) for ch in item["eta"])
            support[eta] = RationalFunction.from_json(item["coeff"])
        return TensorVector(comp, support)


def standard_vector(comp, eta) -> TensorVector:
    comp = composition(comp)
    eta = _check_eta(comp, eta)
    return TensorVector(comp, {eta: _ONE})


def zero_vector(comp) -> TensorVector:
    return TensorVector(composition(comp), {})


def _inversions(eta) -> int:
    out = 0
    ones = 0
    for e in eta:
        if e == 1:
            ones += 1
        else:
            out += ones
    return out


def eta_leq(eta, gamma) -> bool:
    """Partial order on 0/1 sequences of equal weight: eta below gamma if
    every prefix of eta carries at most as many ones.  Matches the Bruhat
    order on shortest coset representatives under the standard bijection."""
    if len(eta) != len(gamma) or sum(eta) != sum(gamma):
        return False
    se = sg = 0
    for e, g in zip(eta, gamma):
        se += e
        sg += g
        if se > sg:
            return False
    return True


def weight_index(comp, eta) -> int:
    """The k with v_eta inside the weight space (V(a))_k."""
    return sum(comp) - sum(eta)


def weight_etas(comp, k: int) -> list[tuple[int, ...]]:
    """All eta with weight index k, sorted increasingly (inversions, lex)."""
    comp = composition(comp)
    ell = len(comp)
    m = sum(comp) - k
    if m < 0 or m > ell:
        return []
    out = []
    for ones in combinations(range(ell), m):
        eta = [0] * ell
        for i in ones:
            eta[i] = 1
        out.append(tuple(eta))
    out.sort(key=lambda eta: (_inversions(eta), eta))
    return out


# -- generator actions ---------------------------------------------------


def act_E(v: TensorVector) -> TensorVector:
    """E acts on the r-th factor as v_1 -> [a_r] v_0 with K^-1 weights on
    the later factors and a Koszul sign from the earlier odd factors."""
    comp = v.comp
    tail = [0] * (len(comp) + 1)
    for r in range(len(comp) - 1, -1, -1):
        tail[r] = tail[r + 1] + comp[r]
    out = zero_vector(comp)
    for eta, c in v.support.items():
        odd = 0
        for r, e in enumerate(eta):
            if e == 1:
                coeff = (
                    c
                    * RationalFunction.from_laurent(quantum_int(comp[r]))
                    * _Q(-tail[r + 1])
                )
                if odd % 2:
                    coeff = -coeff
                flipped = eta[:r] + (0,) + eta[r + 1 :]
                out = out + TensorVector(comp, {flipped: coeff})
                odd += 1
    return out


def act_F(v: TensorVector) -> TensorVector:
    """F acts on the r-th factor as v_0 -> v_1 with K weights on the
    earlier factors and the same Koszul sign convention."""
    comp = v.comp
    head = [0] * (len(comp) + 1)
    for r in range(len(comp)):
        head[r + 1] = head[r] + comp[r]
    out = zero_vector(comp)
    for eta, c in v.support.items():
        odd = 0
        for r, e in enumerate(eta):
            if e == 0:
                coeff = c * _Q(head[r])
                if odd % 2:
                    coeff = -coeff
                flipped = eta[:r] + (1,) + eta[r + 1 :]
                out = out + TensorVector(comp, {flipped: coeff})
            else:
                odd += 1
    return out


def act_K(v: TensorVector) -> TensorVector:
    return v.scale(_Q(sum(v.comp)))


def act_K_inv(v: TensorVector) -> TensorVector:
    return v.scale(_Q(-sum(v.comp)))


def act_qh(h1_coeff: int, h2_coeff: int, v: TensorVector) -> TensorVector:
    """Diagonal action of q^h for h = h1_coeff h_1 + h2_coeff h_2."""
    n = sum(v.comp)
    out: dict = {}
    for eta, c in v.support.items():
        m = sum(eta)
        out[eta] = c * _Q(h1_coeff * (n - m) + h2_coeff * m)
    return TensorVector(v.comp, out)


def act_Eprime(v: TensorVector) -> TensorVector:
    """The rescaled raising operator adjoint to F: on the weight space
    with beta-sum s it is q^(n-1)/[s+1]_0 times E."""
    if v.is_zero():
        return v
    n = sum(v.comp)
    weights = {sum(eta) for eta in v.support}
    if len(weights) > 1:
        raise ValueError("input mixes weight spaces")
    m = weights.pop()
    scalar = _Q(n - 1) / RationalFunction.from_laurent(quantum_int0(n - m + 1))
    return act_E(v).scale(scalar)


# -- merge and split intertwiners ----------------------------------------


def phi_merge(v: TensorVector, i: int) -> TensorVector:
    """Project the adjacent factors i, i+1 (1-based) onto their merge."""
    comp = v.comp
    if not 1 <= i <= len(comp) - 1:
        raise ValueError(f"merge position {i} out of range for {comp}")
    a, b = comp[i - 1], comp[i]
    new_comp = comp[: i - 1] + (a + b,) + comp[i + 1 :]
    out = zero_vector(new_comp)
    for eta, c in v.support.items():
        pair = (eta[i - 1], eta[i])
        rest = eta[: i - 1] + eta[i + 1 :]
        if pair == (1, 1):
            continue
        if pair == (1, 0):
            coeff = c * _Q(-b) * RationalFunction.from_laurent(quantum_binom(a + b - 1, b))
            new_eta = rest[: i - 1] + (1,) + rest[i - 1 :]
        elif pair == (0, 1):
            coeff = c * RationalFunction.from_laurent(quantum_binom(a + b - 1, a))
            new_eta = rest[: i - 1] + (1,) + rest[i - 1 :]
        else:
            coeff = c * RationalFunction.from_laurent(quantum_binom(a + b, a))
            new_eta = rest[: i - 1] + (0,) + rest[i - 1 :]
        out = out + TensorVector(new_comp, {new_eta: coeff})
    return out


def phi_split(v: TensorVector, i: int, a: int, b: int) -> TensorVector:
    """Embed the factor i of type a+b into a pair of factors (a, b)."""
    comp = v.comp
    if not 1 <= i <= len(comp):
        raise ValueError(f"split position {i} out of range for {comp}")
    if comp[i - 1] != a + b or a < 1 or b < 1:
        raise ValueError(f"factor {i} of {comp} does not split as {a}+{b}")
    new_comp = comp[: i - 1] + (a, b) + comp[i:]
    out = zero_vector(new_comp)
    for eta, c in v.support.items():
        head, tail = eta[: i - 1], eta[i:]
        if eta[i - 1] == 0:
            out = out + TensorVector(new_comp, {head + (0, 0) + tail: c})
        else:
            out = out + TensorVector(
                new_comp,
                {head + (1, 0) + tail: c, head + (0, 1) + tail: c * _Q(a)},
            )
    return out


# -- bar involution -------------------------------------------------------

_bar_basis_cache: dict[tuple[tuple[int, ...], tuple[int, ...]], TensorVector] = {}


def _bar_basis(comp, eta) -> TensorVector:
    """Bar of a standard basis vector, by the left-nested recursion
    bar(w x w') = Theta'(bar w x bar w')."""
    key = (comp, eta)
    cached = _bar_basis_cache.get(key)
    if cached is not None:
        return cached
    if len(comp) <= 1:
        result = standard_vector(comp, eta)
    else:
        prefix = _bar_basis(comp[:-1], eta[:-1])
        last = eta[-1]
        ext = TensorVector(
            comp, {g + (last,): c for g, c in prefix.support.items()}
        )
        correction = zero_vector(comp)
        if last == 0:
            # (E x F) acts only when the last factor is v_0; F turns it
            # into v_1 and E hits the prefix with a sign per odd prefix
            for g, c in ext.support.items():
                if g[-1] != 0:
                    continue
                sign = -1 if sum(g[:-1]) % 2 else 1
                e_part = act_E(standard_vector(comp[:-1], g[:-1]))
                for ge, ce in e_part.support.items():
                    correction = correction + TensorVector(
                        comp, {ge + (1,): ce * c * (sign)}
                    )
        shift = _Q(-1) - _Q(1)
        result = ext + correction.scale(shift)
    _bar_basis_cache[key] = result
    return result


def bar(v: TensorVector) -> TensorVector:
    out = zero_vector(v.comp)
    for eta, c in v.support.items():
        out = out + _bar_basis(v.comp, eta).scale(c.bar())
    return out


# -- canonical and dual bases ---------------------------------------------

_canonical_cache: dict[tuple[tuple[int, ...], tuple[int, ...]], TensorVector] = {}


def canonical_basis(comp, eta) -> TensorVector:
    """The unique bar-invariant vector equal to v_eta plus a qZ[q]-linear
    combination of standard vectors strictly below eta, found by peeling
    the leading bar defect and correcting with lower canonical vectors."""
    comp = composition(comp)
    eta = _check_eta(comp, eta)
    key = (comp, eta)
    cached = _canonical_cache.get(key)
    if cached is not None:
        return cached
    x = standard_vector(comp, eta)
    defect = bar(x) - x
    while not defect.is_zero():
        gamma, c = max(
            defect.support.items(), key=lambda item: (_inversions(item[0]), item[0])
        )
        poly = c.as_laurent()
        if poly.bar() != -poly:
            raise ArithmeticError(f"bar defect at {gamma} is not antisymmetric: {poly}")
        pos = LaurentPoly({e: v for e, v in poly.terms.items() if e > 0})
        lower = canonical_basis(comp, gamma)
        x = x + lower.scale(pos)
        defect = defect - lower.scale(poly)
    for gamma, c in x.support.items():
        p = c.as_laurent()
        if gamma == eta:
            if not p.is_one():
                raise ArithmeticError(f"diagonal coefficient {p} at {eta}")
        elif p.constant_term() != 0 or p.min_exp() < 1 or not eta_leq(gamma, eta):
            raise ArithmeticError(f"coefficient {p} at {gamma} breaks unitriangularity")
    _canonical_cache[key] = x
    return x


def _beta(comp, eta) -> tuple[int, ...]:
    return tuple(a - e for a, e in zip(comp, eta))


def bilinear_form(v: TensorVector, w: TensorVector) -> RationalFunction:
    """Symmetric form, diagonal on the standard basis with value the
    rescaled quantum multinomial of (a_j - eta_j)."""
    if v.comp != w.comp:
        raise ValueError(f"composition mismatch: {v.comp} vs {w.comp}")
    out = RationalFunction.zero()
    for eta, c in v.support.items():
        d = w.support.get(eta)
        if d is not None:
            value = quantum_multinom0(_beta(v.comp, eta))
            out = out + c * d * RationalFunction.from_laurent(value)
    return out


def dual_standard(comp, eta) -> TensorVector:
    """The vector pairing to 1 with v_eta and to 0 with the others."""
    comp = composition(comp)
    eta = _check_eta(comp, eta)
    norm = RationalFunction.from_laurent(quantum_multinom0(_beta(comp, eta)))
    return standard_vector(comp, eta).scale(norm.inverse())


_dual_canonical_cache: dict[tuple, dict] = {}


def dual_canonical(comp, eta) -> TensorVector:
    """The basis dual to the canonical one, by inverting its Gram matrix
    weight space by weight space."""
    comp = composition(comp)
    eta = _check_eta(comp, eta)
    k = weight_index(comp, eta)
    key = (comp, k)
    table = _dual_canonical_cache.get(key)
    if table is None:
        etas = weight_etas(comp, k)
        basis = [canonical_basis(comp, g) for g in etas]
        size = len(etas)
        gram = [
            [bilinear_form(basis[r], basis[c]) for c in range(size)]
            for r in range(size)
        ]
        inv = _invert_matrix(gram)
        table = {}
        for col, g in enumerate(etas):
            vec = zero_vector(comp)
            for row in range(size):
                vec = vec + basis[row].scale(inv[row][col])
            table[g] = vec
        _dual_canonical_cache[key] = table
    return table[eta]


def _invert_matrix(rows):
    """Gauss-Jordan inverse over the rational function field."""
    size = len(rows)
    aug = [
        list(row) + [_ONE if r == c else RationalFunction.zero() for c in range(size)]
        for r, row in enumerate(rows)
    ]
    for col in range(size):
        pivot = next(r for r in range(col, size) if not aug[r][col].is_zero())
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv_p = aug[col][col].inverse()
        aug[col] = [v * inv_p for v in aug[col]]
        for r in range(size):
            if r != col and not aug[r][col].is_zero():
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [row[size:] for row in aug]


# -- Hecke action on tensor powers of the vector representation -----------


def schur_weyl_H(v: TensorVector, i: int) -> TensorVector:
    """The Hecke generator on adjacent factors of the regular composition."""
    comp = v.comp
    if any(a != 1 for a in comp):
        raise ValueError(f"Hecke action needs the regular composition, got {comp}")
    if not 1 <= i <= len(comp) - 1:
        raise ValueError(f"position {i} out of range for {comp}")
    shorten = _Q(-1) - _Q(1)
    out = zero_vector(comp)
    for eta, c in v.support.items():
        pair = (eta[i - 1], eta[i])
        swapped = eta[: i - 1] + (eta[i], eta[i - 1]) + eta[i + 1 :]
        if pair == (1, 1):
            out = out + TensorVector(comp, {eta: c * (-_Q(1))})
        elif pair == (1, 0):
            out = out + TensorVector(comp, {swapped: c, eta: c * shorten})
        elif pair == (0, 1):
            out = out + TensorVector(comp, {swapped: c})
        else:
            out = out + TensorVector(comp, {eta: c * _Q(-1)})
    return out


def stl_C(v: TensorVector, i: int) -> TensorVector:
    """The Temperley-Lieb style generator C_i = H_i + q."""
    return schur_weyl_H(v, i) + v.scale(_Q(1))


def psi_iso(x: ModuleElement, k: int) -> TensorVector:
    """The weight-space isomorphism N_w -> v_{eta_min . w} from the mixed
    induced module with trivial wall s_1..s_{k-1} and sign wall
    s_{k+1}..s_{n-1} onto the k-th weight space of the tensor power."""
    mod = x.parent
    n = mod.n
    expected_q = frozenset(range(1, k))
    expected_p = frozenset(range(k + 1, n))
    if mod.q_gens != expected_q or mod.p_gens != expected_p:
        raise ValueError(
            f"module walls {sorted(mod.p_gens)}/{sorted(mod.q_gens)} do not "
            f"match the weight-space shape for k={k}"
        )
    comp = regular_composition(n)
    eta_min = (0,) * k + (1,) * (n - k)
    out = zero_vector(comp)
    for w, c in x.support.items():
        out = out + TensorVector(comp, {seq_act_right(eta_min, w): c})
    return out


def eta_to_perm(eta, k: int) -> Permutation:
    """The shortest coset representative w with eta_min . w = eta."""
    n = len(eta)
    eta_min = (0,) * k + (1,) * (n - k)
    if sum(eta) != n - k:
        raise ValueError(f"{eta} is not in the weight space of index {k}")
    zeros = [i + 1 for i, e in enumerate(eta) if e == 0]
    ones = [i + 1 for i, e in enumerate(eta) if e == 1]
    # the zero slots of eta receive the values 1..k in increasing order
    one_line = [0] * n
    for val, pos in zip(range(1, k + 1), zeros):
        one_line[pos - 1] = val
    for val, pos in zip(range(k + 1, n + 1), ones):
        one_line[pos - 1] = val
    return Permutation(tuple(one_line))
