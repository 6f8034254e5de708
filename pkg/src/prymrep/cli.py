"""Command-line front end: evaluate words, check membership, decompose,
run the fox oracle, and run the self-test sweeps.

Exit codes are a stable contract: 0 for success or a positive membership
verdict, 1 for a clean negative (non-member, failed self-test), 2 for usage,
parse or range errors.  All input and output crosses the boundary as text in
the ring-literal, matrix and word grammars.
"""

from __future__ import annotations

import argparse
import sys

from .cyclotomic import ParseError
from .decompose import decompose_delta, reduce_lambda
from .foxcover import Endo, check_member, eta_chain, eta_fox, parse_endo_images
from .predicates import GroupTag, is_member
from .ringlinalg import BlockMat, parse_matrix
from .sweeps import run_selftest
from .wordlang import evaluate, parse as parse_word


def _add_dg(p):
    p.add_argument("--d", type=int, required=True, help="covering degree, d >= 2")
    p.add_argument("--g", type=int, required=True, help="genus, g >= 2")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="prymrep",
        description="Exact Prym representation matrices for handlebody and "
                    "twist groups over Z[zeta_d].",
    )
    sub = p.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", help="evaluate a generator word to a matrix")
    _add_dg(pe)
    pe.add_argument("--word", required=True, help="word in the generator grammar")
    pe.set_defaults(func=cmd_eval)

    pc = sub.add_parser("check", help="decide membership of a matrix in a group")
    _add_dg(pc)
    pc.add_argument("--matrix", required=True, help="matrix in text format")
    pc.add_argument("--group", required=True,
                    choices=[t.value for t in GroupTag], help="group tag")
    pc.set_defaults(func=cmd_check)

    pd = sub.add_parser("decompose-delta",
                        help="write [[Id,B],[0,Id]] as a twist-generator word")
    _add_dg(pd)
    pd.add_argument("--B", required=True, dest="b",
                    help="self-adjoint (g-1)-square matrix in text format")
    pd.set_defaults(func=cmd_decompose_delta)

    pr = sub.add_parser("reduce-lambda",
                        help="extend a witness word for D to a word for M")
    _add_dg(pr)
    pr.add_argument("--matrix", required=True, help="the Lambda element M")
    pr.add_argument("--word", required=True,
                    help="witness word with the same lower-right block as M")
    pr.set_defaults(func=cmd_reduce_lambda)

    pf = sub.add_parser("fox", help="eta matrix of a free-group automorphism")
    _add_dg(pf)
    pf.add_argument("--map", required=True, dest="map_text",
                    help="images, e.g. 'x1 -> x2 x1 x2^-1 ; x2 -> x2'")
    pf.add_argument("--inverse", required=True, dest="inverse_text",
                    help="inverse images (the automorphism certificate)")
    pf.set_defaults(func=cmd_fox)

    ps = sub.add_parser("selftest", help="run the identity and round-trip sweeps")
    ps.add_argument("--max-d", type=int, default=6)
    ps.add_argument("--max-g", type=int, default=3)
    ps.add_argument("--seed", type=int, default=0)
    ps.add_argument("--inject-failure", action="store_true",
                    help=argparse.SUPPRESS)  # harness check: force exit 1
    ps.set_defaults(func=cmd_selftest)

    return p


def _require_dg(args):
    if args.d < 2:
        raise ValueError("d must be >= 2")
    if args.g < 2:
        raise ValueError("g must be >= 2")


def _read_block_matrix(text, d, g) -> BlockMat:
    mat = parse_matrix(text, d)
    n = 2 * (g - 1)
    if mat.rows != n or mat.cols != n:
        raise ValueError(
            f"matrix is {mat.rows}x{mat.cols}, expected {n}x{n} for genus {g}"
        )
    return BlockMat(mat, g)


def cmd_eval(args) -> int:
    _require_dg(args)
    word = parse_word(args.word)
    print(evaluate(word, args.d, args.g).to_text())
    return 0


def cmd_check(args) -> int:
    _require_dg(args)
    m = _read_block_matrix(args.matrix, args.d, args.g)
    tag = GroupTag(args.group)
    verdict = is_member(m, tag)
    if verdict:
        print(f"member of {tag.value}")
        return 0
    print(f"non-member of {tag.value}: {verdict.reason}")
    return 1


def cmd_decompose_delta(args) -> int:
    _require_dg(args)
    b = parse_matrix(args.b, args.d)
    word = decompose_delta(b, args.d, args.g)
    print(word.render())
    return 0


def cmd_reduce_lambda(args) -> int:
    _require_dg(args)
    m = _read_block_matrix(args.matrix, args.d, args.g)
    witness = parse_word(args.word)
    print(reduce_lambda(m, witness).render())
    return 0


def cmd_fox(args) -> int:
    _require_dg(args)
    images = parse_endo_images(args.map_text, args.g)
    inverse_images = parse_endo_images(args.inverse_text, args.g)
    phi = Endo(images, inverse_images)
    verdict = check_member(phi, args.d)
    if not verdict:
        print(f"not a covering-preserving automorphism: {verdict.reason}")
        return 1
    chain = eta_chain(phi, args.d, args.g)
    fox = eta_fox(phi, args.d, args.g)
    if chain != fox:
        print("internal error: chain-level and Fox-calculus routes disagree",
              file=sys.stderr)
        return 2
    print(chain.to_text())
    return 0


def cmd_selftest(args) -> int:
    if args.max_d < 2 or args.max_g < 2:
        raise ValueError("--max-d and --max-g must be >= 2")
    reports = run_selftest(args.max_d, args.max_g, seed=args.seed,
                           inject_failure=args.inject_failure)
    ok = True
    for rep in reports:
        print(rep.line())
        ok = ok and rep.ok
    print("selftest:", "all suites passed" if ok else "FAILURES above")
    return 0 if ok else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
