"""Command line interface: exact computations with machine-readable output.

Exit codes: 0 on success (and when every requested check passes), 1 when
a check suite fails, 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .symgrp import Permutation
from . import checks, hecke, inducedmod, tabgroth, uqrep, webcat

__all__ = ["main"]


def _parse_comp(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(p) for p in text.split(",") if p.strip() != "")
    except ValueError:
        raise ValueError(f"malformed composition {text!r}")
    return uqrep.composition(parts)


def _parse_gens(text: str) -> tuple[int, ...]:
    if text.strip() == "":
        return ()
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError(f"malformed generator list {text!r}")


def _parse_perm(text: str, n: int) -> Permutation:
    text = text.strip()
    if text in ("e", "", "id"):
        return Permutation.identity(n)
    if text.startswith("["):
        body = text.strip("[]")
        try:
            entries = tuple(int(p) for p in body.split(","))
        except ValueError:
            raise ValueError(f"malformed one-line permutation {text!r}")
        return Permutation(entries)
    word = []
    for tok in text.split("*"):
        tok = tok.strip()
        if not tok.startswith("s"):
            raise ValueError(f"malformed reduced word {text!r}")
        word.append(int(tok[1:]))
    return Permutation.from_word(n, word)


def _parse_bits(text: str) -> tuple[int, ...]:
    if any(ch not in "01" for ch in text):
        raise ValueError(f"malformed bitstring {text!r}")
    return tuple(int(ch) for ch in text)


def _emit(args, text_lines, json_payload) -> None:
    if args.format == "json":
        payload = json.dumps(json_payload, indent=2, sort_keys=True)
        out = payload + "\n"
    else:
        out = "\n".join(text_lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(json.dumps(json_payload, indent=2, sort_keys=True) + "\n")
    sys.stdout.write(out)


def _cmd_kl_basis(args) -> int:
    w = _parse_perm(args.w, args.n)
    elt = hecke.kl_basis_element(w)
    _emit(args, [str(elt)], {"n": args.n, "w": list(w.one_line), "element": elt.to_json()})
    return 0


def _cmd_mod_basis(args) -> int:
    mod = inducedmod.InducedModule.of(args.n, _parse_gens(args.p), _parse_gens(args.q))
    w = _parse_perm(args.w, args.n)
    elt = inducedmod.canonical_basis_element(mod, w)
    _emit(args, [str(elt)], elt.to_json())
    return 0


def _cmd_canonical(args) -> int:
    comp = _parse_comp(args.comp)
    if args.eta is not None:
        eta = _parse_bits(args.eta)
        vec = uqrep.canonical_basis(comp, eta)
        _emit(args, [str(vec)], vec.to_json())
        return 0
    from itertools import product

    lines = []
    payload = []
    etas = sorted(
        product((0, 1), repeat=len(comp)),
        key=lambda e: (sum(e), uqrep._inversions(e), e),
    )
    for eta in etas:
        vec = uqrep.canonical_basis(comp, eta)
        bits = "".join(str(b) for b in eta)
        lines.append(f"{bits}: {vec}")
        payload.append({"eta": bits, "vector": vec.to_json()})
    _emit(args, lines, payload)
    return 0


def _cmd_web_eval(args) -> int:
    comp = _parse_comp(args.comp)
    web = webcat.parse_word(comp, args.word)
    matrix = webcat.evaluate_matrix(web)
    tgt = ",".join(str(a) for a in web.target)
    lines = [f"target type ({tgt})"]
    payload = {"web": web.to_json(), "target": list(web.target), "columns": []}
    for eta in sorted(matrix):
        bits = "".join(str(b) for b in eta)
        lines.append(f"v[{bits}] -> {matrix[eta]}")
        payload["columns"].append({"eta": bits, "image": matrix[eta].to_json()})
    _emit(args, lines, payload)
    return 0


def _cmd_web_coeff(args) -> int:
    comp = _parse_comp(args.comp)
    web = webcat.parse_word(comp, args.word)
    bottom = _parse_bits(args.bottom)
    top = _parse_bits(args.top)
    if len(bottom) != len(web.source):
        raise ValueError(
            f"bottom bitstring length {len(bottom)} != arity {len(web.source)}"
        )
    if len(top) != len(web.target):
        raise ValueError(f"top bitstring length {len(top)} != arity {len(web.target)}")
    value = webcat.matrix_coefficient(webcat.LabeledWebDiagram(web, bottom, top))
    _emit(args, [str(value)], {"web": web.to_json(), "coeff": value.to_json()})
    return 0


def _cmd_tableaux(args) -> int:
    comp = _parse_comp(args.comp)
    n = sum(comp)
    if not 0 <= args.k <= n:
        raise ValueError(f"k={args.k} out of range 0..{n}")
    lines = []
    payload = []
    if args.admissible_only:
        tabs = tabgroth.admissible_tableaux(comp, args.k)
    else:
        from itertools import permutations as itperms

        seen = set()
        tabs = []
        for arrangement in itperms(tabgroth._type_sequence(comp)):
            if arrangement in seen:
                continue
            seen.add(arrangement)
            tabs.append(
                tabgroth.HookTableau(
                    n, args.k, comp, arrangement[: args.k], arrangement[args.k :]
                )
            )
    for t in tabs:
        adm = tabgroth.is_admissible(t)
        w = tabgroth.perm_from_tableau(t)
        mark = "admissible" if adm else "not admissible"
        lines.append(f"{t}  w={w}  {mark}")
        payload.append({**t.to_json(), "w": list(w.one_line), "admissible": adm})
    _emit(args, lines, payload)
    return 0


def _cmd_translate(args) -> int:
    comp = _parse_comp(args.comp)
    i, k = args.pos, args.k
    lines = []
    payload = {"comp": list(comp), "pos": i, "k": k, "basis": args.basis, "dir": args.dir}
    if args.basis == "proper":
        if args.dir == "onto":
            matrix = tabgroth.translate_onto_wall(comp, i, k)
        else:
            matrix = tabgroth.translate_out_of_wall(comp, i, k)
        rows = []
        for w in sorted(matrix, key=lambda w: (w.length(), w.one_line)):
            row = matrix[w]
            terms = sorted(row.items(), key=lambda t: (t[0].length(), t[0].one_line))
            text = " + ".join(f"({c})*[{wp}]" for wp, c in terms) if terms else "0"
            lines.append(f"[{w}] -> {text}")
            rows.append(
                {
                    "w": list(w.one_line),
                    "image": [
                        {"w": list(wp.one_line), "coeff": c.to_json()} for wp, c in terms
                    ],
                }
            )
        payload["rows"] = rows
    else:
        if args.basis == "projective" and args.dir != "out":
            raise ValueError("projective classes translate out of the wall only")
        if args.basis == "simple" and args.dir != "onto":
            raise ValueError("simple classes translate onto the wall only")
        merged = comp[: i - 1] + (comp[i - 1] + comp[i],) + comp[i + 1 :]
        src = merged if args.basis == "projective" else comp
        rows = []
        for w in tabgroth.enumerate_lambda(src, k):
            if args.basis == "projective":
                vec = tabgroth.translate_projective(comp, i, k, w)
            else:
                vec = tabgroth.translate_simple(comp, i, k, w)
            lines.append(f"[{w}] -> {vec}")
            rows.append({"w": list(w.one_line), "image": vec.to_json()})
        payload["rows"] = rows
    _emit(args, lines, payload)
    return 0


def _cmd_homdim(args) -> int:
    w = _parse_perm(args.w, args.n)
    z = _parse_perm(args.z, args.n)
    value = tabgroth.hom_dim(w, z, args.n, args.k)
    _emit(args, [str(value)], {"n": args.n, "k": args.k, "dim": value})
    return 0


def _cmd_check(args) -> int:
    results = checks.run_suite(args.suite, args.max_n)
    lines = []
    payload = []
    ok = True
    for name, err in results:
        status = "PASS" if err is None else f"FAIL ({err})"
        lines.append(f"{name}: {status}")
        payload.append({"suite": name, "pass": err is None, "error": err})
        ok = ok and err is None
    _emit(args, lines, payload)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heckeweb",
        description="Exact canonical-basis, web-calculus and hook-tableau computations.",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--out", help="also write the JSON payload to this file")
    # the output flags are also accepted after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--out", default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kl-basis", parents=[common], help="canonical basis element of the Hecke algebra")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--w", required=True, help='permutation: "s1*s2", "[2,1,3]" or "e"')
    p.set_defaults(func=_cmd_kl_basis)

    p = sub.add_parser("mod-basis", parents=[common], help="canonical basis element of a mixed induced module")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", default="", help="sign-wall generators, e.g. 1,3")
    p.add_argument("--q", default="", help="trivial-wall generators")
    p.add_argument("--w", required=True)
    p.set_defaults(func=_cmd_mod_basis)

    p = sub.add_parser("canonical", parents=[common], help="canonical basis of a tensor representation")
    p.add_argument("--comp", required=True, help="composition, e.g. 3,1,4")
    p.add_argument("--eta", help="0/1 sequence; omit to list all")
    p.set_defaults(func=_cmd_canonical)

    p = sub.add_parser("web-eval", parents=[common], help="evaluate a web word as an exact matrix")
    p.add_argument("--comp", required=True)
    p.add_argument("--word", required=True, help='bottom-to-top word, e.g. "m1.s1"')
    p.set_defaults(func=_cmd_web_eval)

    p = sub.add_parser("web-coeff", parents=[common], help="one matrix coefficient via diagram labelings")
    p.add_argument("--comp", required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--bottom", required=True)
    p.add_argument("--top", required=True)
    p.set_defaults(func=_cmd_web_coeff)

    p = sub.add_parser("tableaux", parents=[common], help="hook tableaux of a type")
    p.add_argument("--comp", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--admissible-only", action="store_true")
    p.set_defaults(func=_cmd_tableaux)

    p = sub.add_parser("translate", parents=[common], help="wall-crossing matrices on class bases")
    p.add_argument("--comp", required=True)
    p.add_argument("--pos", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--dir", choices=("onto", "out"), required=True)
    p.add_argument("--basis", choices=("proper", "projective", "simple"), required=True)
    p.set_defaults(func=_cmd_translate)

    p = sub.add_parser("homdim", parents=[common], help="hom dimension between projective classes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--w", required=True)
    p.add_argument("--z", required=True)
    p.set_defaults(func=_cmd_homdim)

    p = sub.add_parser("check", parents=[common], help="run a verification suite")
    p.add_argument(
        "--suite",
        default="all",
        choices=sorted(checks.SUITES) + ["all"],
    )
    p.add_argument("--max-n", type=int, default=4)
    p.set_defaults(func=_cmd_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
