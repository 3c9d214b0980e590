"""Mixed induced Hecke modules: sign on one parabolic, trivial on a
commuting one, induced up to the full Hecke algebra.

The module has basis N_w indexed by the shortest representatives of the
double-parabolic left quotient.  A generator H_i acts by one of four
rules: it moves the index within the quotient (two cases, by length), or
it hits the sign wall (eigenvalue -q) or the trivial wall (eigenvalue
q^-1).  The bar involution is induced from the Hecke algebra through
N_w = N_e . H_w, and the canonical basis is built by the same
multiply-and-correct scheme as for the algebra itself.
"""

from __future__ import annotations

from dataclasses import dataclass

from .qarith import LaurentPoly, RationalFunction
from .symgrp import ParabolicSubgroup, Permutation, is_shortest_rep, shortest_coset_reps
from . import hecke

__all__ = ["InducedModule", "ModuleElement", "map_i", "map_Q", "map_j", "map_z"]

_Q = RationalFunction.q_power
_ONE = RationalFunction.one()


@dataclass(frozen=True, slots=True, eq=False)
class InducedModule:
    n: int
    p_gens: frozenset[int]
    q_gens: frozenset[int]

    def __post_init__(self):
        p, q = self.parabolic_p(), self.parabolic_q()
        if not p.commutes_elementwise_with(q):
            raise ValueError(
                f"parabolic subgroups {p} and {q} do not commute elementwise"
            )

    @staticmethod
    def of(n: int, p_gens=(), q_gens=()) -> "InducedModule":
        return InducedModule(n, frozenset(p_gens), frozenset(q_gens))

    def parabolic_p(self) -> ParabolicSubgroup:
        return ParabolicSubgroup(self.n, self.p_gens)

    def parabolic_q(self) -> ParabolicSubgroup:
        return ParabolicSubgroup(self.n, self.q_gens)

    def parabolic_pq(self) -> ParabolicSubgroup:
        return ParabolicSubgroup(self.n, self.p_gens | self.q_gens)

    def basis_index(self) -> list[Permutation]:
        """Shortest coset representatives, sorted by (length, one-line)."""
        return shortest_coset_reps(self.parabolic_pq(), side="left")

    def __eq__(self, other):
        return (
            isinstance(other, InducedModule)
            and (self.n, self.p_gens, self.q_gens) == (other.n, other.p_gens, other.q_gens)
        )

    def __hash__(self):
        return hash((self.n, self.p_gens, self.q_gens))

    def __str__(self):
        return f"M(n={self.n}, p={sorted(self.p_gens)}, q={sorted(self.q_gens)})"

    # -- element constructors -----------------------------------------

    def zero(self) -> "ModuleElement":
        return ModuleElement(self, {})

    def standard(self, w: Permutation) -> "ModuleElement":
        if not is_shortest_rep(w, self.parabolic_pq(), side="left"):
            raise ValueError(f"{w} does not index a basis element of {self}")
        return ModuleElement(self, {w: _ONE})

    def generator(self) -> "ModuleElement":
        return self.standard(Permutation.identity(self.n))

    def to_json(self):
        return {
            "n": self.n,
            "p_generators": sorted(self.p_gens),
            "q_generators": sorted(self.q_gens),
        }

    @staticmethod
    def from_json(data) -> "InducedModule":
        return InducedModule.of(data["n"], data["p_generators"], data["q_generators"])


@dataclass(frozen=True, slots=True, eq=False)
class ModuleElement:
    parent: InducedModule
    support: dict  # Permutation -> RationalFunction

    def coeff(self, w: Permutation) -> RationalFunction:
        return self.support.get(w, RationalFunction.zero())

    def is_zero(self) -> bool:
        return not self.support

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        if self.parent != other.parent:
            raise ValueError("elements of different induced modules")
        out = dict(self.support)
        for w, c in other.support.items():
            s = out.get(w, RationalFunction.zero()) + c
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
        return ModuleElement(self.parent, out)

    def __neg__(self):
        return ModuleElement(self.parent, {w: -c for w, c in self.support.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "ModuleElement":
        if not isinstance(c, RationalFunction):
            c = RationalFunction.from_laurent(
                c if isinstance(c, LaurentPoly) else LaurentPoly.const(c)
            )
        if c.is_zero():
            return self.parent.zero()
        return ModuleElement(self.parent, {w: v * c for w, v in self.support.items()})

    def __eq__(self, other):
        return (
            isinstance(other, ModuleElement)
            and self.parent == other.parent
            and self.support == other.support
        )

    def act_generator(self, i: int) -> "ModuleElement":
        return act_generator(self, i)

    def act_hecke(self, x: hecke.HeckeElement) -> "ModuleElement":
        """Right action of a Hecke algebra element."""
        if x.n != self.parent.n:
            raise ValueError("Hecke element size mismatch")
        out = self.parent.zero()
        for w, c in x.support.items():
            piece = self
            for i in w.reduced_word():
                piece = piece.act_generator(i)
            out = out + piece.scale(c)
        return out

    def bar(self) -> "ModuleElement":
        """Bar involution via N_w = N_e . H_w and bar(N_e) = N_e."""
        mod = self.parent
        gen = mod.generator()
        out = mod.zero()
        for w, c in self.support.items():
            out = out + gen.act_hecke(hecke.bar_of_standard(mod.n, w)).scale(c.bar())
        return out

    def terms_sorted(self):
        return sorted(
            self.support.items(),
            key=lambda item: (item[0].length(), item[0].one_line),
            reverse=True,
        )

    def __str__(self):
        if not self.support:
            return "0"
        parts = []
        for w, c in self.terms_sorted():
            if c.is_one():
                parts.append(f"N{w}")
            else:
                coeff = str(c)
                if c.is_laurent() and len(c.num.terms) > 1:
                    coeff = f"({coeff})"
                parts.append(f"{coeff}*N{w}")
        return " + ".join(parts)

    def to_json(self):
        return {
            "module": self.parent.to_json(),
            "support": [
                {"w": list(w.one_line), "coeff": c.to_json()}
                for w, c in self.terms_sorted()
            ],
        }

    @staticmethod
    def from_json(data) -> "ModuleElement":
        mod = InducedModule.from_json(data["module"])
        support = {}
        for item in data["support"]:
            support[Permutation(tuple(item["w"]))] = RationalFunction.from_json(
                item["coeff"]
            )
        return ModuleElement(mod, support)


def act_generator(x: ModuleElement, i: int) -> ModuleElement:
    """Right action of H_i by the four-case rule."""
    mod = x.parent
    if not 1 <= i <= mod.n - 1:
        raise ValueError(f"generator index {i} out of range for S_{mod.n}")
    pq = mod.parabolic_pq()
    shorten = _Q(-1) - _Q(1)
    out: dict[Permutation, RationalFunction] = {}

    def _acc(w, c):
        s = out.get(w, RationalFunction.zero()) + c
        if s.is_zero():
            out.pop(w, None)
        else:
            out[w] = s

    for w, c in x.support.items():
        wsi = w.times_simple(i)
        if is_shortest_rep(wsi, pq, side="left"):
            if wsi.length() > w.length():
                _acc(wsi, c)
            else:
                _acc(wsi, c)
                _acc(w, c * shorten)
        else:
            # w s_i = s_j w for a simple reflection s_j in one of the walls
            t = (w * Permutation.simple(mod.n, i)) * w.inverse()
            j = _simple_index(t)
            if j in mod.p_gens:
                _acc(w, c * (-_Q(1)))
            elif j in mod.q_gens:
                _acc(w, c * _Q(-1))
            else:
                raise ArithmeticError(f"reflection s_{j} escaped both walls at {w}")
    return ModuleElement(mod, out)


def _simple_index(t: Permutation) -> int:
    """Index j with t = s_j; raises if t is not a simple transposition."""
    moved = [i for i in range(1, t.n + 1) if t(i) != i]
    if len(moved) == 2 and moved[1] == moved[0] + 1 and t(moved[0]) == moved[1]:
        return moved[0]
    raise ArithmeticError(f"{t} is not a simple transposition")


_canonical_cache: dict[tuple[InducedModule, Permutation], ModuleElement] = {}


def canonical_basis_element(mod: InducedModule, w: Permutation) -> ModuleElement:
    """The unique bar-invariant element N_w + (qZ[q]-combination of lower
    N_w'), built by multiplying a shorter canonical element by the
    canonical generator and correcting by constant terms."""
    key = (mod, w)
    cached = _canonical_cache.get(key)
    if cached is not None:
        return cached
    if not is_shortest_rep(w, mod.parabolic_pq(), side="left"):
        raise ValueError(f"{w} does not index a basis element of {mod}")
    descents = w.right_descents()
    if not descents:
        result = mod.standard(w)
    else:
        i = descents[-1]
        shorter = canonical_basis_element(mod, w.times_simple(i))
        product = shorter.act_generator(i) + shorter.scale(_Q(1))
        corrections = [
            y
            for y, c in product.support.items()
            if y != w and c.as_laurent().constant_term() != 0
        ]
        corrections.sort(key=lambda y: (y.length(), y.one_line), reverse=True)
        result = product
        for y in corrections:
            m = result.coeff(y).as_laurent().constant_term()
            if m:
                result = result - canonical_basis_element(mod, y).scale(m)
        _assert_canonical_shape(result, w)
    _canonical_cache[key] = result
    return result


def _assert_canonical_shape(x: ModuleElement, w: Permutation) -> None:
    for y, c in x.support.items():
        p = c.as_laurent()
        if y == w:
            if not p.is_one():
                raise ArithmeticError(f"diagonal coefficient {p} at {w}")
        elif p.constant_term() != 0 or p.min_exp() < 1:
            raise ArithmeticError(f"coefficient {p} at {y} misses qZ[q]")


def bilinear_form(x: ModuleElement, y: ModuleElement) -> RationalFunction:
    """Form with orthonormal standard basis, inherited from the algebra."""
    if x.parent != y.parent:
        raise ValueError("elements of different induced modules")
    out = RationalFunction.zero()
    for w, c in x.support.items():
        d = y.support.get(w)
        if d is not None:
            out = out + c * d
    return out


# -- maps between modules with nested parabolic data --------------------


def _short_reps_inside(outer: ParabolicSubgroup, inner_gens: frozenset) -> list[Permutation]:
    """Shortest representatives for (inner \\ outer), as elements of outer."""
    inner = ParabolicSubgroup(outer.n, frozenset(inner_gens))
    return [x for x in outer.elements() if is_shortest_rep(x, inner, side="left")]


def map_i(src: InducedModule, dst: InducedModule, x: ModuleElement) -> ModuleElement:
    """Inclusion along a shrinking trivial wall: requires the destination
    q-parabolic to sit inside the source one, same p."""
    _check_shrink(src, dst, which="q")
    if x.parent != src:
        raise ValueError("element does not live in the source module")
    reps = _short_reps_inside(src.parabolic_q(), dst.q_gens)
    top = max(r.length() for r in reps)
    out = dst.zero()
    for w, c in x.support.items():
        for r in reps:
            out = out + dst.standard(r * w).scale(c * _Q(top - r.length()))
    return out


def map_Q(src: InducedModule, dst: InducedModule, x: ModuleElement) -> ModuleElement:
    """Left inverse of map_i: the scaled quotient map along a growing
    trivial wall (source q-parabolic inside the destination one)."""
    _check_shrink(dst, src, which="q")
    if x.parent != src:
        raise ValueError("element does not live in the source module")
    reps = _short_reps_inside(dst.parabolic_q(), src.q_gens)
    top = max(r.length() for r in reps)
    c_norm = RationalFunction.zero()
    for r in reps:
        c_norm = c_norm + _Q(top - 2 * r.length())
    gen = dst.generator().scale(c_norm.inverse())
    out = dst.zero()
    for w, c in x.support.items():
        out = out + gen.act_hecke(hecke.standard_basis_element(w)).scale(c)
    return out


def map_j(src: InducedModule, dst: InducedModule, x: ModuleElement) -> ModuleElement:
    """Inclusion along a shrinking sign wall: destination p-parabolic
    inside the source one, same q."""
    _check_shrink(src, dst, which="p")
    if x.parent != src:
        raise ValueError("element does not live in the source module")
    reps = _short_reps_inside(src.parabolic_p(), dst.p_gens)
    minus_q = -LaurentPoly.q()
    out = dst.zero()
    for w, c in x.support.items():
        for r in reps:
            sign_coeff = RationalFunction.from_laurent(minus_q ** r.length())
            out = out + dst.standard(r * w).scale(c * sign_coeff)
    return out


def map_z(src: InducedModule, dst: InducedModule, x: ModuleElement) -> ModuleElement:
    """Quotient map along a growing sign wall, normalized by N_e -> N_e."""
    _check_shrink(dst, src, which="p")
    if x.parent != src:
        raise ValueError("element does not live in the source module")
    gen = dst.generator()
    out = dst.zero()
    for w, c in x.support.items():
        out = out + gen.act_hecke(hecke.standard_basis_element(w)).scale(c)
    return out


def _check_shrink(big: InducedModule, small: InducedModule, which: str) -> None:
    if big.n != small.n:
        raise ValueError("modules over different symmetric groups")
    if which == "q":
        if big.p_gens != small.p_gens or not small.q_gens <= big.q_gens:
            raise ValueError("need identical p-walls and nested q-walls")
    else:
        if big.q_gens != small.q_gens or not small.p_gens <= big.p_gens:
            raise ValueError("need identical q-walls and nested p-walls")
