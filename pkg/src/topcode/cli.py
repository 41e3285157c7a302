"""Command-line entry point: ``topcode <verb> [action] [options]``.

Results go to stdout as JSON (``--format text`` for a plain rendering).
Domain errors print ``{"error": <name>, "detail": <message>}`` on stderr
and exit 1; usage errors exit 2.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from . import classify as cl
from . import core, groups, hanzi, realize, strings, transform
from .errors import TopcodeError


class UsageError(Exception):
    pass


# ---- input / output helpers ---------------------------------------------------

def _read(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _matrix(path: str | None) -> core.TopcodeMatrix:
    return core.parse_matrix(_read(path))


def _family(path: str | None) -> groups.EveryZeroFamily:
    return groups.EveryZeroFamily.from_dict(json.loads(_read(path)))


def _ints(text: str | None) -> list[int]:
    if not text:
        return []
    return [int(tok) for tok in text.replace(",", " ").split()]


def _jsonable(value: Any) -> Any:
    if isinstance(value, core.TopcodeMatrix):
        return core.to_dict(value)
    if hasattr(value, "to_dict"):
        return value.to_dict()
    if hasattr(value, "tolist"):
        return value.tolist()
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return value


def _text(value: Any) -> str:
    if isinstance(value, core.TopcodeMatrix):
        return core.to_text(value).rstrip("\n")
    if isinstance(value, str):
        return value
    return json.dumps(_jsonable(value), indent=2)


def _emit(args: argparse.Namespace, value: Any) -> None:
    if getattr(args, "out", None):
        if isinstance(value, core.TopcodeMatrix):
            Path(args.out).write_text(core.to_json(value) + "\n")
        elif isinstance(value, strings.FoldLine):
            strings.write_fold_line(value, args.out)
        else:
            Path(args.out).write_text(json.dumps(_jsonable(value)) + "\n")
    if args.format == "text":
        print(_text(value))
    else:
        print(json.dumps(_jsonable(value)))


# ---- verbs -----------------------------------------------------------------------

def cmd_classify(args: argparse.Namespace) -> Any:
    T = _matrix(args.inp)
    meanings = _ints(args.meanings) or None
    if args.condition:
        res = cl.eval_condition(T, args.condition)
        return {"condition": args.condition, "holds": res.holds, "constants": res.constants}
    if args.cls:
        m = cl.check_class(T, args.cls, args.k, args.d, meanings)
        return {"class": args.cls, "member": m is not None,
                "constants": m.constants if m else {}}
    return [m.to_dict() for m in cl.classify(T, meanings)]


_TRANSFORMS = {
    "f1": transform.f1_to_odd_graceful,
    "f1-inv": transform.f1_inverse,
    "f2": transform.f2_to_edge_magic,
    "f2-inv": transform.f2_inverse,
    "f3": transform.f3_to_six_c,
    "f3-inv": transform.f3_inverse,
    "dual": core.v_dual,
    "total-dual": core.total_dual,
    "standard": core.standard_form,
}


def cmd_transform(args: argparse.Namespace) -> Any:
    if args.op == "generate":
        if args.n is None:
            raise UsageError("--op generate needs --n")
        return transform.generate_set_ordered_graceful_tree(args.n, args.seed)
    return _TRANSFORMS[args.op](_matrix(args.inp))


def cmd_realize(args: argparse.Namespace) -> Any:
    T = _matrix(args.inp)
    if args.action == "summary":
        rep = realize.tree_report(T) if len(set(T.e)) == T.q else None
        eh = realize.euler_hamilton(T)
        return {
            "p": core.label_sets(T).p,
            "q": T.q,
            "connected": realize.is_connected(T),
            "has_cycle": realize.has_cycle(T),
            "tree": rep.__dict__ if rep else None,
            "euler": eh.euler,
            "hamilton": eh.hamilton,
            "multiplicity": realize.multiplicity(T),
        }
    if args.action == "graph":
        return realize.merged_realization(T)
    if args.action == "matching":
        m = realize.perfect_matching(T, args.mode)
        return {"matching": core.to_dict(m) if m else None}
    if args.action == "splits":
        return [g.to_dict() for g in realize.enumerate_split_realizations(T)]
    if args.action == "peel":
        rep = realize.leaf_peel(T)
        return {"caterpillar": rep.caterpillar, "lobster": rep.lobster}
    if args.action == "path":
        if args.a is None or args.b is None:
            raise UsageError("path needs --a and --b")
        path = realize.find_path(T, args.a, args.b)
        return None if path is None else {"labels": path.labels, "columns": path.columns}
    if args.action == "ve-matrix":
        return realize.adjacency_ve_matrix(realize.merged_realization(T))
    raise UsageError(f"unknown realize action {args.action!r}")


def cmd_split(args: argparse.Namespace) -> Any:
    T = _matrix(args.inp)
    if args.action == "v":
        if args.label is None:
            raise UsageError("v-split needs --label")
        a, b = realize.v_split(T, args.label, (_ints(args.first), _ints(args.second)))
        return [a, b]
    if args.action == "e":
        if args.column is None:
            raise UsageError("e-split needs --column")
        a, b = realize.e_split(T, args.column, _ints(args.first), args.e_prime)
        return [a, b]
    if args.action == "half-e":
        if args.column is None:
            raise UsageError("half-e split needs --column")
        return realize.half_e_split(T, args.column, args.e_prime)
    if args.action == "kappa":
        return {"kappa": realize.v_code_connectivity(T),
                "kappa_prime": realize.e_code_connectivity(T)}
    raise UsageError(f"unknown split action {args.action!r}")


def _op_kind(args: argparse.Namespace, F: groups.EveryZeroFamily) -> str:
    return args.op_kind or F.op_kind


def cmd_group(args: argparse.Namespace) -> Any:
    if args.action == "gen":
        if args.modulus is None:
            raise UsageError("gen needs --modulus")
        if args.string:
            S = groups.DigitString.from_text(args.string)
            active = _ints(args.active) or range(1, len(S.digits) + 1)
            return groups.string_group_construct(S, active, args.modulus, args.op_kind or "additive")
        F = groups.shift_generate(_matrix(args.inp), args.modulus, not args.shift_e)
        if args.op_kind:
            F = groups.EveryZeroFamily(F.members, F.modulus, args.op_kind, F.recompute_e)
        if args.as_strings:
            F = groups.string_family_from_matrices(F)
        return F
    if args.action == "permit":
        net = json.loads(_read(args.inp))
        T = core.from_dict(net["matrix"]) if "matrix" in net else None
        G = realize.merged_realization(T) if T else realize.graph_from_edges(
            {int(k): v for k, v in net["labels"].items()},
            [tuple(e) for e in net["edges"]],
        )
        assignment = {int(k): v for k, v in net["assignment"].items()}
        ok = groups.permit_protocol(G, assignment, net["claims"], net["target"])
        return {"admitted": ok}
    if args.action == "coloring":
        T = _matrix(args.inp)
        if args.zero is None:
            raise UsageError("coloring needs --zero")
        p = core.label_sets(T).p
        F = groups.shift_generate(T, p) if p >= 2 else None
        return groups.evaluated_coloring(T, F, args.zero)
    F = _family(args.inp)
    if args.zero is None:
        raise UsageError(f"{args.action} needs --zero")
    if args.action == "verify":
        return groups.verify_group(F, args.zero, args.op_kind)
    if args.i is None or args.j is None:
        raise UsageError(f"{args.action} needs --i and --j")
    if args.action == "add":
        return {"index": groups.v_add(F, args.i, args.j, args.zero)}
    if args.action == "sub":
        return {"index": groups.v_sub(F, args.i, args.j, args.zero)}
    raise UsageError(f"unknown group action {args.action!r}")


def _line(args: argparse.Namespace) -> strings.FoldLine:
    if not args.line:
        raise UsageError("traverse needs --line")
    return strings.read_fold_line(args.line)


def cmd_string(args: argparse.Namespace) -> Any:
    if args.action == "lines":
        if args.m is None or args.n is None:
            raise UsageError("lines needs --m and --n")
        if args.seed is not None:
            return [list(strings.random_total_line(args.m, args.n, args.seed, not args.any).points)]
        lines = strings.enumerate_total_lines(args.m, args.n, not args.any, args.limit)
        return [list(L.points) for L in lines]
    T = _matrix(args.inp)
    if args.action == "eq18":
        return strings.serialize_eq18(T, args.sep)
    rows = [T.x, T.e, T.y]
    if args.action == "bous":
        return strings.boustrophedon(rows, args.sep)
    if args.action == "traverse":
        return strings.traverse(rows, _line(args), args.sep)
    if args.action == "vev":
        G = realize.merged_realization(T)
        return strings.vev_tbpaw(G, strings.read_fold_line(args.line) if args.line else None, args.sep)
    raise UsageError(f"unknown string action {args.action!r}")


def _digit_matrix(path: str | None):
    data = json.loads(_read(path))
    return data["rows"] if isinstance(data, dict) else data


def cmd_hanzi(args: argparse.Namespace) -> Any:
    if args.action == "build":
        return hanzi.build_hanzi_matrix(hanzi.parse_codes(args.codes or _read(args.inp)))
    if args.action in ("mul", "add"):
        codes = hanzi.parse_codes(args.codes or "")
        if len(codes) != 2:
            raise UsageError(f"{args.action} needs exactly two codes")
        fn = hanzi.componentwise_mul if args.action == "mul" else hanzi.componentwise_add
        return str(fn(*codes))
    if args.action == "table":
        rows = hanzi.parse_codes(args.rows or "")
        cols = hanzi.parse_codes(args.cols or "")
        return hanzi.cross_table(rows, cols, args.op)
    if not args.key:
        raise UsageError(f"{args.action} needs --key")
    A = _digit_matrix(args.key)
    if args.codes:
        X = hanzi.build_hanzi_matrix(hanzi.parse_codes(args.codes))
    else:
        X = _digit_matrix(args.inp)
    if args.action == "encrypt":
        return hanzi.hanzi_encrypt(A, X)
    if args.action == "decrypt":
        return hanzi.hanzi_decrypt(A, X)
    raise UsageError(f"unknown hanzi action {args.action!r}")


def cmd_secure(args: argparse.Namespace) -> Any:
    if args.action == "split":
        pair = groups.split_keys(_matrix(args.inp), _ints(args.public))
        return {"public": pair.public, "private": pair.private, "boundary": pair.boundary,
                "authenticates": groups.authenticate(pair.public, pair.private)}
    if args.action == "auth":
        if not args.public_file or not args.private_file:
            raise UsageError("auth needs --public-file and --private-file")
        pub, pri = _matrix(args.public_file), _matrix(args.private_file)
        return {"authenticates": groups.authenticate(pub, pri),
                "boundary": groups.common_boundary(pub, pri)}
    if args.action == "match":
        if not args.public_file or not args.private_file or not args.kind:
            raise UsageError("match needs --public-file, --private-file and --kind")
        kind = cl.MatchKind(args.kind.replace("-", "_"), args.k, args.d, args.variant)
        res = cl.check_matching(_matrix(args.public_file), _matrix(args.private_file), kind)
        return {"kind": args.kind, "holds": res.holds, "constants": res.constants}
    raise UsageError(f"unknown secure action {args.action!r}")


# ---- parser ------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # noqa: D401 - argparse hook
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--in", dest="inp", help="input file ('-' or omitted: stdin)")
    common.add_argument("--out", help="also write the result to this file")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--seed", type=int)

    parser = _Parser(prog="topcode", description="Topcode-matrix toolkit")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", parents=[common], help="labelling classes and conditions")
    p.add_argument("--class", dest="cls")
    p.add_argument("--condition")
    p.add_argument("--k", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--meanings")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("transform", parents=[common], help="F1/F2/F3, inverses, duals")
    p.add_argument("--op", required=True, choices=sorted(_TRANSFORMS) + ["generate"])
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("realize", parents=[common], help="graph structure")
    p.add_argument("action", choices=("summary", "graph", "matching", "splits", "peel", "path", "ve-matrix"))
    p.add_argument("--mode", choices=("strict", "relaxed"), default="relaxed")
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("split", parents=[common], help="v-, e- and half-e-splitting")
    p.add_argument("action", choices=("v", "e", "half-e", "kappa"))
    p.add_argument("--label", type=int)
    p.add_argument("--column", type=int)
    p.add_argument("--first", help="columns of the first part, e.g. 1,3")
    p.add_argument("--second", help="columns of the second part (v-split)")
    p.add_argument("--e-prime", type=int)
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("group", parents=[common], help="every-zero groups")
    p.add_argument("action", choices=("gen", "verify", "add", "sub", "coloring", "permit"))
    p.add_argument("--modulus", type=int)
    p.add_argument("--zero", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--op-kind", choices=("additive", "subtractive"))
    p.add_argument("--shift-e", action="store_true", help="shift e-rows instead of recomputing")
    p.add_argument("--as-strings", action="store_true", help="serialize generated members")
    p.add_argument("--string", help="digit string seed for a string group")
    p.add_argument("--active", help="active positions of --string")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("string", parents=[common], help="TB-paws along fold lines")
    p.add_argument("action", choices=("eq18", "bous", "traverse", "lines", "vev"))
    p.add_argument("--matrix", dest="inp", help="same as --in")
    p.add_argument("--line", help="fold-line file, one 'row col' per line")
    p.add_argument("--sep")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--limit", type=int)
    p.add_argument("--any", action="store_true", help="allow non-adjacent lines")
    p.set_defaults(func=cmd_string)

    p = sub.add_parser("hanzi", parents=[common], help="Hanzi-matrices and the mod-10 cipher")
    p.add_argument("action", choices=("build", "encrypt", "decrypt", "mul", "add", "table"))
    p.add_argument("--codes", help="whitespace-separated 4-digit codes")
    p.add_argument("--key", help="JSON file with the 4x4 key matrix")
    p.add_argument("--rows")
    p.add_argument("--cols")
    p.add_argument("--op", choices=("mul", "add"), default="mul")
    p.set_defaults(func=cmd_hanzi)

    p = sub.add_parser("secure", parents=[common], help="public/private key checks")
    p.add_argument("action", choices=("split", "auth", "match"))
    p.add_argument("--public", help="columns of the public key (split)")
    p.add_argument("--public-file")
    p.add_argument("--private-file")
    p.add_argument("--kind")
    p.add_argument("--k", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--variant", type=int)
    p.set_defaults(func=cmd_secure)
    return parser


def _fail(kind: str, detail: str, code: int) -> int:
    print(json.dumps({"error": kind, "detail": detail}), file=sys.stderr)
    return code


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        value = args.func(args)
        _emit(args, value)
    except UsageError as exc:
        return _fail("UsageError", str(exc), 2)
    except TopcodeError as exc:
        return _fail(type(exc).__name__, str(exc), 1)
    except (OSError, json.JSONDecodeError) as exc:
        return _fail(type(exc).__name__, str(exc), 2)
    except ValueError as exc:
        return _fail("ValueError", str(exc), 2)
    return 0


def main() -> None:
    sys.exit(run())
