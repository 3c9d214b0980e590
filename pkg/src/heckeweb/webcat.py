"""Typed words of merge/split generators and their evaluation.

A web is a word of elementary slices read bottom to top; each slice
merges two adjacent edges (labels add) or splits one edge into an
ordered pair of positive labels.  Evaluation sends a merge to the
projection intertwiner and a split to the embedding, so a web becomes
an exact matrix between standard bases.  A second, independent
evaluation sums local vertex values over all internal edge labelings;
the two routes are compared entry by entry in the tests.

Words are never normalized: equality of morphisms is always decided by
comparing evaluations, which is faithful on the objects used here.
Whether two specific words are equal before imposing the defining
relations is deliberately not decided by this module.
"""

from __future__ import annotations

from dataclasses import dataclass

from .qarith import RationalFunction, quantum_binom, quantum_factorial
from . import uqrep
from .uqrep import TensorVector, composition, standard_vector

__all__ = [
    "Slice",
    "Web",
    "LabeledWebDiagram",
    "identity_web",
    "merge_web",
    "split_web",
    "compose",
    "tensor",
    "evaluate",
    "evaluate_matrix",
    "matrices_equal",
    "matrix_coefficient",
    "canonical_basis_diagram",
    "split_bundle",
    "merge_bundle",
    "standard_inclusion",
    "standard_projection",
    "check_relation",
    "parse_word",
]

_Q = RationalFunction.q_power


@dataclass(frozen=True, slots=True)
class Slice:
    kind: str  # "merge" or "split"
    i: int  # 1-based position
    parts: tuple[int, int] | None  # split only: (left, right)
    comp: tuple[int, ...]  # composition this slice acts on

    def target(self) -> tuple[int, ...]:
        c = self.comp
        if self.kind == "merge":
            return c[: self.i - 1] + (c[self.i - 1] + c[self.i],) + c[self.i + 1 :]
        a, b = self.parts
        return c[: self.i - 1] + (a, b) + c[self.i :]


@dataclass(frozen=True, slots=True, eq=False)
class Web:
    source: tuple[int, ...]
    slices: tuple[Slice, ...]

    def __post_init__(self):
        comp = self.source
        for s in self.slices:
            if s.comp != comp:
                raise ValueError(f"slice {s} does not chain at {comp}")
            comp = s.target()

    @property
    def target(self) -> tuple[int, ...]:
        comp = self.source
        for s in self.slices:
            comp = s.target()
        return comp

    def __eq__(self, other):
        return (
            isinstance(other, Web)
            and self.source == other.source
            and self.slices == other.slices
        )

    def __hash__(self):
        return hash((self.source, self.slices))

    def word_str(self) -> str:
        toks = []
        for s in self.slices:
            if s.kind == "merge":
                toks.append(f"m{s.i}")
            else:
                toks.append(f"s{s.i}:{s.parts[0]},{s.parts[1]}")
        return ".".join(toks) if toks else "id"

    def __str__(self):
        src = ",".join(str(a) for a in self.source)
        tgt = ",".join(str(a) for a in self.target)
        return f"web[({src}) -> ({tgt}): {self.word_str()}]"

    def to_json(self):
        out = []
        for s in self.slices:
            item = {"kind": s.kind, "i": s.i, "comp": list(s.comp)}
            if s.kind == "split":
                item["left"], item["right"] = s.parts
            out.append(item)
        return {"source": list(self.source), "slices": out}

    @staticmethod
    def from_json(data) -> "Web":
        web = identity_web(composition(data["source"]))
        for item in data["slices"]:
            if item["kind"] == "merge":
                web = compose(merge_web(web.target, item["i"]), web)
            else:
                web = compose(
                    split_web(web.target, item["i"], item["left"], item["right"]), web
                )
        return web


def identity_web(comp) -> Web:
    return Web(composition(comp), ())


def merge_web(comp, i: int) -> Web:
    comp = composition(comp)
    if not 1 <= i <= len(comp) - 1:
        raise ValueError(f"merge position {i} out of range for {comp}")
    return Web(comp, (Slice("merge", i, None, comp),))


def split_web(comp, i: int, a: int, b: int) -> Web:
    comp = composition(comp)
    if not 1 <= i <= len(comp):
        raise ValueError(f"split position {i} out of range for {comp}")
    if a < 1 or b < 1 or a + b != comp[i - 1]:
        raise ValueError(f"cannot split label {comp[i-1]} as {a}+{b}")
    return Web(comp, (Slice("split", i, (a, b), comp),))


def compose(upper: Web, lower: Web) -> Web:
    """Stack upper on top of lower (lower acts first)."""
    if lower.target != upper.source:
        raise ValueError(
            f"cannot compose: lower target {lower.target} vs upper source {upper.source}"
        )
    return Web(lower.source, lower.slices + upper.slices)


def tensor(left: Web, right: Web) -> Web:
    """Horizontal concatenation; the right factor's indices shift by the
    current arity of the left factor."""
    source = left.source + right.source
    slices = []
    comp = source
    # left slices act on (left stage, right source)
    for s in left.slices:
        ns = Slice(s.kind, s.i, s.parts, comp)
        slices.append(ns)
        comp = ns.target()
    offset = len(left.target)
    for s in right.slices:
        ns = Slice(s.kind, s.i + offset, s.parts, comp)
        slices.append(ns)
        comp = ns.target()
    return Web(composition(source), tuple(slices))


def evaluate(web: Web, v: TensorVector) -> TensorVector:
    """Apply the intertwiner of the web to a vector on its source."""
    if v.comp != web.source:
        raise ValueError(f"vector lives on {v.comp}, web starts at {web.source}")
    for s in web.slices:
        if s.kind == "merge":
            v = uqrep.phi_merge(v, s.i)
        else:
            v = uqrep.phi_split(v, s.i, *s.parts)
    return v


def evaluate_matrix(web: Web) -> dict:
    """Column map: source standard index -> image vector."""
    out = {}
    ell = len(web.source)
    from itertools import product

    for eta in product((0, 1), repeat=ell):
        out[eta] = evaluate(web, standard_vector(web.source, eta))
    return out


def matrices_equal(m1: dict, m2: dict) -> bool:
    if m1.keys() != m2.keys():
        return False
    return all(m1[k] == m2[k] for k in m1)


@dataclass(frozen=True, slots=True)
class LabeledWebDiagram:
    web: Web
    bottom: tuple[int, ...]
    top: tuple[int, ...] | None = None

    def __post_init__(self):
        if len(self.bottom) != len(self.web.source):
            raise ValueError("bottom labeling does not match the web source")
        if self.top is not None and len(self.top) != len(self.web.target):
            raise ValueError("top labeling does not match the web target")


def matrix_coefficient(d: LabeledWebDiagram) -> RationalFunction:
    """Sum of products of local vertex values over all internal labelings.
    Merges propagate deterministically; a split of a 1-label branches."""
    if d.top is None:
        raise ValueError("matrix coefficient needs a top labeling")
    total = RationalFunction.zero()
    stack = [(0, d.bottom, RationalFunction.one())]
    slices = d.web.slices
    while stack:
        depth, labels, coeff = stack.pop()
        if depth == len(slices):
            if labels == d.top:
                total = total + coeff
            continue
        s = slices[depth]
        comp = s.comp
        j = s.i - 1
        if s.kind == "merge":
            a, b = comp[j], comp[j + 1]
            pair = (labels[j], labels[j + 1])
            rest = labels[:j] + labels[j + 2 :]
            if pair == (1, 1):
                continue
            if pair == (1, 0):
                value = _Q(-b) * quantum_binom(a + b - 1, b)
                new = rest[:j] + (1,) + rest[j:]
            elif pair == (0, 1):
                value = RationalFunction.from_laurent(quantum_binom(a + b - 1, a))
                new = rest[:j] + (1,) + rest[j:]
            else:
                value = RationalFunction.from_laurent(quantum_binom(a + b, a))
                new = rest[:j] + (0,) + rest[j:]
            stack.append((depth + 1, new, coeff * value))
        else:
            a, b = s.parts
            head, tail = labels[:j], labels[j + 1 :]
            if labels[j] == 0:
                stack.append((depth + 1, head + (0, 0) + tail, coeff))
            else:
                stack.append((depth + 1, head + (1, 0) + tail, coeff))
                stack.append((depth + 1, head + (0, 1) + tail, coeff * _Q(a)))
    return total


def canonical_basis_diagram(comp, eta) -> LabeledWebDiagram:
    """Join every down-label with the up-labels following it, recording
    each join as a split generator; the result carries the minimal
    labeling (ups then downs) on its coarsened bottom line."""
    comp = composition(comp)
    eta = tuple(int(e) for e in eta)
    if len(eta) != len(comp) or any(e not in (0, 1) for e in eta):
        raise ValueError(f"bad 0/1 sequence {eta} for composition {comp}")
    items = list(zip(comp, eta))
    joins = []  # (position, left size, right size) in join order
    while True:
        pos = next(
            (
                j
                for j in range(len(items) - 1)
                if items[j][1] == 1 and items[j + 1][1] == 0
            ),
            None,
        )
        if pos is None:
            break
        left, right = items[pos], items[pos + 1]
        joins.append((pos + 1, left[0], right[0]))
        items[pos : pos + 2] = [(left[0] + right[0], 1)]
    bottom_comp = tuple(size for size, _ in items)
    bottom_eta = tuple(bit for _, bit in items)
    web = identity_web(bottom_comp)
    for pos, a, b in reversed(joins):
        web = compose(split_web(web.target, pos, a, b), web)
    return LabeledWebDiagram(web, bottom_eta, None)


def evaluate_canonical_diagram(d: LabeledWebDiagram) -> TensorVector:
    return evaluate(d.web, standard_vector(d.web.source, d.bottom))


def split_bundle(m: int) -> Web:
    """The web splitting one m-labeled edge into m single strands."""
    web = identity_web((m,))
    while any(a > 1 for a in web.target):
        comp = web.target
        j = next(idx for idx, a in enumerate(comp) if a > 1)
        web = compose(split_web(comp, j + 1, 1, comp[j] - 1), web)
    return web


def merge_bundle(m: int) -> Web:
    """The web merging m single strands into one m-labeled edge."""
    web = identity_web((1,) * m)
    while len(web.target) > 1:
        web = compose(merge_web(web.target, 1), web)
    return web


def standard_inclusion(comp) -> Web:
    """Tensor product of split bundles: from comp down to all-ones."""
    comp = composition(comp)
    web = split_bundle(comp[0])
    for a in comp[1:]:
        web = tensor(web, split_bundle(a))
    return web


def standard_projection(comp) -> Web:
    """Tensor product of merge bundles: from all-ones onto comp."""
    comp = composition(comp)
    web = merge_bundle(comp[0])
    for a in comp[1:]:
        web = tensor(web, merge_bundle(a))
    return web


def _c_web(comp, i: int) -> Web:
    """The cap-cup word at position i: merge then split back."""
    comp = composition(comp)
    a, b = comp[i - 1], comp[i]
    merged = merge_web(comp, i)
    return compose(split_web(merged.target, i, a, b), merged)


def _scaled_identity_matrix(comp, scalar: RationalFunction) -> dict:
    from itertools import product

    return {
        eta: standard_vector(comp, eta).scale(scalar)
        for eta in product((0, 1), repeat=len(composition(comp)))
    }


def _matrix_sum(m1: dict, m2: dict) -> dict:
    return {k: m1[k] + m2[k] for k in m1}


def check_relation(rel: str, **params) -> bool:
    """Evaluate both sides of a defining relation as exact matrices."""
    if rel == "O53":
        a, b = params["a"], params["b"]
        loop = compose(merge_web((a, b), 1), split_web((a + b,), 1, a, b))
        scalar = RationalFunction.from_laurent(quantum_binom(a + b, a))
        return matrices_equal(
            evaluate_matrix(loop), _scaled_identity_matrix((a + b,), scalar)
        )
    if rel == "assoc44":
        a, b, c = params["a"], params["b"], params["c"]
        src = (a, b, c)
        left = compose(merge_web((a + b, c), 1), merge_web(src, 1))
        right = compose(merge_web((a, b + c), 1), merge_web(src, 2))
        merges = matrices_equal(evaluate_matrix(left), evaluate_matrix(right))
        tot = (a + b + c,)
        sleft = compose(split_web((a + b, c), 1, a, b), split_web(tot, 1, a + b, c))
        sright = compose(split_web((a, b + c), 2, b, c), split_web(tot, 1, a, b + c))
        splits = matrices_equal(evaluate_matrix(sleft), evaluate_matrix(sright))
        return merges and splits
    if rel == "stl54":
        comp = (1, 1, 1)
        c1, c2 = _c_web(comp, 1), _c_web(comp, 2)
        lhs = _matrix_sum(
            evaluate_matrix(compose(c1, compose(c2, c1))), evaluate_matrix(c2)
        )
        rhs = _matrix_sum(
            evaluate_matrix(compose(c2, compose(c1, c2))), evaluate_matrix(c1)
        )
        return matrices_equal(lhs, rhs)
    if rel == "eq66":
        n = params["n"]
        loop = compose(merge_bundle(n), split_bundle(n))
        scalar = RationalFunction.from_laurent(quantum_factorial(n))
        return matrices_equal(
            evaluate_matrix(loop), _scaled_identity_matrix((n,), scalar)
        )
    raise ValueError(f"unknown relation {rel!r}")


def parse_word(comp, word: str) -> Web:
    """Build a web from a compact word like "m1.s2.m1", read bottom to top.
    A split "sI" may carry explicit parts "sI:a,b"; without them the label
    must be 2, the only unambiguous case."""
    web = identity_web(comp)
    word = word.strip()
    if word in ("", "id"):
        return web
    for tok in word.split("."):
        tok = tok.strip()
        if tok.startswith("m"):
            web = compose(merge_web(web.target, int(tok[1:])), web)
        elif tok.startswith("s"):
            body = tok[1:]
            if ":" in body:
                idx, parts = body.split(":")
                a, b = (int(x) for x in parts.split(","))
                web = compose(split_web(web.target, int(idx), a, b), web)
            else:
                i = int(body)
                comp_now = web.target
                if not 1 <= i <= len(comp_now):
                    raise ValueError(f"split position {i} out of range for {comp_now}")
                if comp_now[i - 1] != 2:
                    raise ValueError(
                        f"split s{i} on label {comp_now[i-1]} is ambiguous; "
                        f"use s{i}:a,b"
                    )
                web = compose(split_web(comp_now, i, 1, 1), web)
        else:
            raise ValueError(f"unknown web token {tok!r}")
    return web
