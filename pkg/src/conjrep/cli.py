"""Command-line front end: ``conjrep <subcommand> ...``.

Exit codes: 0 success / confirmed, 1 negative result, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .free_group import (
    NotConjugating,
    aut_conjugacy_certificate,
    fw_to_text,
    perm_cycles,
)
from .kernel import (
    IN_KERNEL,
    KernelVerdict,
    SearchConfig,
    ShapeSpec,
    default_threads,
    match_shape,
    search_kernel,
    theorem_word,
    verify_kernel,
)
from .laurent import ZeroSpecialization
from .lk_rep import evaluate_word, word_to_automorphism
from .matrix import mat_specialize, to_grid, to_json_obj
from .words import (
    GenWord,
    IndexOutOfRange,
    WordSyntaxError,
    parse_word,
    print_word,
    relation_instances,
)


class UsageError(Exception):
    pass


def _parse(text: str, n: int) -> GenWord:
    try:
        return parse_word(text, n)
    except (WordSyntaxError, IndexOutOfRange) as exc:
        raise UsageError(str(exc)) from exc


def _parse_complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", "").replace("i", "j"))
    except ValueError as exc:
        raise UsageError(f"cannot parse complex number {text!r}") from exc


def certificate_json(w: GenWord) -> dict:
    cert = aut_conjugacy_certificate(word_to_automorphism(w))
    return {"pi": perm_cycles(cert.pi), "conjugators": [fw_to_text(f) for f in cert.conjugators]}


def verdict_json(v: KernelVerdict) -> dict:
    return {
        "word": print_word(v.word),
        "length": len(v.word),
        "verdict": v.conclusion,
        "certificate": certificate_json(v.word),
    }


def cmd_eval(args) -> int:
    w = _parse(args.word, args.n)
    m = evaluate_word(w)
    if args.q is not None:
        q0 = _parse_complex(args.q)
        try:
            cm = mat_specialize(m, q0)
        except ZeroSpecialization as exc:
            raise UsageError(str(exc)) from exc
        if args.json:
            print(json.dumps({"dim": cm.dim, "q": [q0.real, q0.imag],
                              "entries": [[[z.real, z.imag] for z in row] for row in cm.entries]}))
        else:
            print(to_grid(cm))
        return 0
    if args.json:
        print(json.dumps(to_json_obj(m)))
    else:
        print(to_grid(m))
    return 0


def cmd_act(args) -> int:
    w = _parse(args.word, args.n)
    phi = word_to_automorphism(w)
    cert = aut_conjugacy_certificate(phi)
    if args.json:
        print(json.dumps({
            "images": [fw_to_text(img) for img in phi.images],
            "pi": perm_cycles(cert.pi),
            "conjugators": [fw_to_text(f) for f in cert.conjugators],
        }))
        return 0
    for i, img in enumerate(phi.images, start=1):
        print(f"x{i} -> {fw_to_text(img)}")
    print(f"pi = {perm_cycles(cert.pi)}")
    for i, f in enumerate(cert.conjugators, start=1):
        print(f"f{i} = {fw_to_text(f)}")
    return 0


def cmd_verify_relations(args) -> int:
    if args.n < 2:
        raise UsageError("n must be at least 2")
    failures = 0
    rels = relation_instances(args.n, corrected=args.corrected)
    for rel in rels:
        in_rho = evaluate_word(rel.lhs) == evaluate_word(rel.rhs)
        in_aut = word_to_automorphism(rel.lhs) == word_to_automorphism(rel.rhs)
        ok = in_rho and in_aut
        failures += not ok
        if args.json:
            print(json.dumps({"family": rel.family, "lhs": print_word(rel.lhs), "rhs": print_word(rel.rhs),
                              "rho": in_rho, "action": in_aut}))
        elif not ok or args.verbose:
            status = "ok  " if ok else "FAIL"
            print(f"{status} {rel}  (rho: {'ok' if in_rho else 'fails'}, action: {'ok' if in_aut else 'fails'})")
    if not args.json:
        print(f"{len(rels) - failures}/{len(rels)} relation instances hold for n={args.n}")
    return 0 if failures == 0 else 1


def cmd_verify_kernel(args) -> int:
    if args.theorem is not None:
        if args.word is not None:
            raise UsageError("give either --theorem or --word, not both")
        w = theorem_word(args.theorem)
    else:
        if args.word is None or args.n is None:
            raise UsageError("need --theorem, or --word together with --n")
        w = _parse(args.word, args.n)
    v = verify_kernel(w)
    if args.json:
        print(json.dumps(verdict_json(v)))
    else:
        print(f"word:      {print_word(w) or '(empty)'}  (n={w.n}, length {len(w)})")
        print(f"rho(word) = I:  {v.matrix_is_identity}")
        print(f"automorphism is identity:  {v.automorphism_is_identity}")
        print(f"verdict:   {v.conclusion}")
    return 0 if v.conclusion == IN_KERNEL else 1


def cmd_search(args) -> int:
    seed = args.seed
    if os.environ.get("CONJREP_SEED"):
        seed = int(os.environ["CONJREP_SEED"])
    try:
        cfg = SearchConfig(n=args.n, max_len=args.max_len, half_len=args.half_len, seed=seed,
                           specializations=args.specializations,
                           threads=args.threads or default_threads())
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    results = search_kernel(cfg)
    for v in results:
        if args.json:
            print(json.dumps(verdict_json(v)), flush=True)
        else:
            print(f"{len(v.word):3d}  {print_word(v.word)}")
    if not args.json:
        print(f"{len(results)} kernel element(s) found with length <= {cfg.max_len}", file=sys.stderr)
    return 0 if results else 1


def cmd_shape_check(args) -> int:
    w = _parse(args.word, 3)
    spec = match_shape(w)
    if args.json:
        print(json.dumps(None if spec is None else _shape_json(spec)))
    elif spec is None:
        print("no match")
    else:
        print(f"match (r={spec.r}, {spec.variant}): blocks={list(spec.blocks)} exponents={list(spec.exponents)}")
    return 0 if spec is not None else 1


def _shape_json(spec: ShapeSpec) -> dict:
    return {"r": spec.r, "variant": spec.variant, "blocks": list(spec.blocks), "exponents": list(spec.exponents)}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="conjrep", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("eval", help="matrix of a word")
    e.add_argument("word")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--q", help="complex specialization, e.g. 2+1j")
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_eval)

    a = sub.add_parser("act", help="action of a word on the free group")
    a.add_argument("word")
    a.add_argument("--n", type=int, required=True)
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_act)

    r = sub.add_parser("verify-relations", help="check the defining relations in rho and on F_n")
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--corrected", action="store_true",
                   help="use s_i s_i+1 a_i = a_i+1 s_i s_i+1 for the last mixed family")
    r.add_argument("--verbose", "-v", action="store_true")
    r.add_argument("--json", action="store_true")
    r.set_defaults(func=cmd_verify_relations)

    k = sub.add_parser("verify-kernel", help="decide whether a word is a nontrivial kernel element")
    k.add_argument("--theorem", type=int, choices=(3, 5))
    k.add_argument("--word")
    k.add_argument("--n", type=int)
    k.add_argument("--json", action="store_true")
    k.set_defaults(func=cmd_verify_kernel)

    s = sub.add_parser("search", help="meet-in-the-middle search for kernel words")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--max-len", type=int, required=True)
    s.add_argument("--half-len", type=int)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--specializations", type=int, default=2)
    s.add_argument("--threads", type=int, help="worker processes (default: all cores)")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_search)

    c = sub.add_parser("shape-check", help="match an n=3 word against the kernel shape grammar")
    c.add_argument("--word", required=True)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_shape_check)
    return p


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NotConjugating as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
