"""Command-line front end: ``statesum <subcommand> ...``.

Exit codes: 0 ok, 1 validation or invariance failure, 2 I/O or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .catdata import (
    CategoryError,
    CategoryParseError,
    FusionData,
    GroupData,
    GroupError,
    OneCatData,
    PointedModularData,
    dumps,
    gen_fibonacci,
    gen_pointed,
    gen_rep_g,
    gen_vec_g,
    group_by_name,
    load_category,
    shipped_categories,
    verify_consistency,
)
from .catdata.fusion import FusionError
from .cells import ComplexError
from .dw import DWError, brute_force_count, dw_count, dw_invariant, hom_count_oracle, load_presentation
from .engine import EngineError, enumerate_labelings, n1_state_sum, state_sum
from .harness import flip_test
from .paths import data_dir, shipped
from .registry import MANIFOLDS, load_manifold, load_triangulation
from .scalar import FieldElement, FieldError
from .sphere_eval import EvaluationError
from .surgery import FramedLink, SurgeryError, surgery_sum
from .triangulation import TriangulationError


class Failure(Exception):
    """Validation or invariant failure: exit 1."""


class InputError(Exception):
    """I/O or parse failure: exit 2."""


# loading -----------------------------------------------------------------------------


def _complex(args):
    src = args.complex or args.manifold
    if not src:
        raise InputError("one of --manifold or --complex is required")
    path = Path(src)
    if (path.suffix == ".json" or len(path.parts) > 1) and not path.exists():
        raise InputError(f"no such file: {path}")
    try:
        return load_manifold(src)
    except FileNotFoundError as exc:
        raise InputError(f"no such file: {exc.filename}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{src}: not valid JSON ({exc})") from None
    except (ComplexError, TriangulationError) as exc:
        raise Failure(f"{src}: {exc}") from None


def _triangulation(args):
    src = args.manifold or args.complex
    if not src:
        raise InputError("--manifold is required")
    try:
        return load_triangulation(src)
    except FileNotFoundError as exc:
        raise InputError(f"no such file: {exc.filename}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{src}: not valid JSON ({exc})") from None
    except (ComplexError, TriangulationError) as exc:
        raise Failure(f"{src}: {exc}") from None


def _category(name, wrt: bool = False):
    if not name:
        raise InputError("--category is required")
    try:
        return load_category(name, wrt=wrt)
    except CategoryParseError as exc:
        raise InputError(str(exc)) from None
    except CategoryError as exc:
        raise Failure(str(exc)) from None


def _group(name) -> GroupData:
    if not name:
        raise InputError("--group is required")
    p = Path(name)
    if p.suffix == ".json" or p.exists():
        g = _category(name)
        if not isinstance(g, GroupData):
            raise Failure(f"{name} is not group data")
        return g
    try:
        return group_by_name(name)
    except GroupError as exc:
        raise Failure(f"unsupported group: {exc}") from None


# output ------------------------------------------------------------------------------------


def _value_text(v) -> tuple[str, str]:
    if isinstance(v, FieldElement):
        return v.format(), v.approx_str()
    if isinstance(v, Fraction):
        return str(v), f"{float(v):.12g}"
    return str(v), str(v)


def _emit(args, record: dict, value=None) -> None:
    if value is not None:
        exact, approx = _value_text(value)
        record = {"value": exact, "approx": approx, **record}
    if args.format == "json":
        print(json.dumps(record, indent=1, ensure_ascii=False))
        return
    for k, v in record.items():
        if k == "approx":
            if args.format == "exact+approx":
                print(f"approx: {v} (advisory)")
            continue
        print(f"{k}: {v}")


# subcommands ---------------------------------------------------------------------------------


def cmd_invariant(args) -> int:
    c = _complex(args)
    d = _category(args.category)
    if isinstance(d, OneCatData):
        return cmd_n1(args, c, d)
    if not isinstance(d, FusionData):
        raise Failure(f"{args.category} is not fusion data; use the dw or surgery subcommands")
    try:
        r = state_sum(c, d, workers=args.workers)
    except EngineError as exc:
        raise Failure(str(exc)) from None
    _emit(args, {"labelings": r.labeling_count}, r.value)
    return 0


def cmd_n1(args, c=None, d=None) -> int:
    c = c if c is not None else _complex(args)
    d = d if d is not None else _category(args.category)
    if not isinstance(d, OneCatData):
        raise Failure(f"{args.category} is not 1-category data")
    oriented = not getattr(args, "unoriented", False)
    try:
        r = n1_state_sum(c, d, oriented=oriented, workers=args.workers)
    except EngineError as exc:
        raise Failure(str(exc)) from None
    _emit(args, {"labelings": r.labeling_count, "oriented": oriented}, r.value)
    return 0


def cmd_dw(args) -> int:
    c = _complex(args)
    g = _group(args.group)
    try:
        n = dw_count(c, g)
        v = dw_invariant(c, g)
    except DWError as exc:
        raise Failure(str(exc)) from None
    _emit(args, {"flat_labelings": n}, v)
    return 0


def _matrix(args) -> FramedLink:
    src = args.matrix if args.matrix is not None else args.link
    if src is None:
        raise InputError("one of --matrix or --link is required")
    text = src
    if args.link is not None:
        try:
            text = Path(args.link).read_text(encoding="utf-8")
        except OSError:
            raise InputError(f"no such file: {args.link}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"linking matrix is not valid JSON ({exc})") from None
    if isinstance(data, dict):
        data = data.get("matrix", [])
    try:
        return FramedLink(data)
    except (SurgeryError, TypeError, ValueError) as exc:
        raise Failure(f"bad linking matrix: {exc}") from None


def cmd_surgery(args) -> int:
    d = _category(args.category or "semion", wrt=args.wrt)
    if not isinstance(d, PointedModularData):
        raise Failure(f"{args.category} is not pointed modular data")
    L = _matrix(args)
    try:
        v = surgery_sum(d, L)
    except SurgeryError as exc:
        raise Failure(str(exc)) from None
    _emit(args, {"components": L.components}, v)
    return 0


def cmd_flip_test(args) -> int:
    if args.flips < 1:
        raise InputError("--flips must be at least 1")
    t = _triangulation(args)
    if args.group:
        g = _group(args.group)

        def inv(c):
            return dw_invariant(c, g)

        what = f"dw {g.name}"
    else:
        d = _category(args.category)
        if isinstance(d, OneCatData):
            def inv(c):
                return n1_state_sum(c, d, oriented=not args.unoriented).value
        elif isinstance(d, FusionData):
            def inv(c):
                return state_sum(c, d, workers=args.workers).value
        else:
            raise Failure(f"{args.category} has no state sum on triangulations")
        what = d.name
    try:
        rep = flip_test(t, inv, args.flips, args.seed)
    except (EngineError, DWError) as exc:
        raise Failure(str(exc)) from None
    exact, approx = _value_text(rep.values[0])
    record = {
        "result": "PASS" if rep.ok else "FAIL",
        "invariant": what,
        "seed": args.seed,
        "values": len(rep.values),
        "distinct": len({_value_text(v)[0] for v in rep.values}),
    }
    if not rep.ok:
        k = rep.first_mismatch()
        record["mismatch"] = f"{rep.trace[k]}: {_value_text(rep.values[k])[0]} != {exact}"
        record["trace"] = rep.trace if args.format == "json" else "; ".join(rep.trace)
    _emit(args, record, rep.values[0])
    return 0 if rep.ok else 1


def cmd_validate(args) -> int:
    problems = []
    checked = []
    if args.manifold or args.complex:
        src = args.complex or args.manifold
        c = _complex(args)
        problems += [f"{src}: {p}" for p in c.validate()]
        checked.append(f"complex {src}: f-vector {c.f_vector()}, chi {c.euler_characteristic()}")
    if args.category:
        d = _category(args.category, wrt=args.wrt)
        if isinstance(d, FusionData):
            rep = verify_consistency(d)
            problems += rep.problems
            checked.append(f"category {args.category}: " + ", ".join(f"{k} {v}" for k, v in rep.checked.items()))
        else:
            checked.append(f"category {args.category}: loaded and checked")
    if not checked:
        raise InputError("nothing to validate; pass --manifold, --complex or --category")
    for line in checked:
        print(line)
    for p in problems:
        print(f"FAIL {p}")
    print("PASS" if not problems else f"{len(problems)} problem(s)")
    return 0 if not problems else 1


def cmd_gen(args) -> int:
    try:
        if args.kind == "vecg":
            obj = gen_vec_g(_group(args.group))
        elif args.kind == "repg":
            obj = gen_rep_g(_group(args.group))
        elif args.kind == "fibonacci":
            obj = gen_fibonacci()
        else:
            if args.n is None:
                raise InputError("gen pointed needs --n")
            obj = gen_pointed(args.n, args.k)
            problems = obj.check(wrt=True)
            if problems:
                raise Failure("; ".join(problems))
    except (GroupError, FusionError) as exc:
        raise Failure(f"unsupported parameters: {exc}") from None
    text = dumps(obj)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_oracle(args) -> int:
    try:
        if args.kind == "homcount":
            if not args.pi1:
                raise InputError("oracle homcount needs --pi1")
            p = load_presentation(args.pi1)
            v = hom_count_oracle(p, _group(args.group), guard=args.guard)
            _emit(args, {"oracle": "homcount", "pi1": args.pi1}, v)
        elif args.kind == "dw":
            c = _complex(args)
            g = _group(args.group)
            n = brute_force_count(c, g, guard=args.guard)
            _emit(args, {"oracle": "dw", "flat_labelings": n}, Fraction(n, g.order ** len(c.cells_of_dim(c.dim))))
        else:
            c = _complex(args)
            if args.group:
                n = brute_force_count(c, _group(args.group), guard=args.guard)
            else:
                d = _category(args.category)
                if not isinstance(d, FusionData):
                    raise Failure("brute-labelings needs fusion data or --group")
                n = 0
                for _ in enumerate_labelings(c, d, prune=False):
                    n += 1
                    if n > args.guard:
                        raise Failure(f"size guard: more than {args.guard} labelings")
            _emit(args, {"oracle": "brute-labelings"}, n)
    except DWError as exc:
        raise Failure(str(exc)) from None
    return 0


def cmd_list(args) -> int:
    rows = {
        "manifolds": [f"{m.name} ({m.topology}, dim {m.dim}, {m.kind})" for m in MANIFOLDS.values()],
        "categories": shipped_categories(),
        "pi1": shipped("pi1"),
        "data_dir": str(data_dir()),
    }
    if args.format == "json":
        print(json.dumps(rows, indent=1))
        return 0
    for key, val in rows.items():
        if isinstance(val, list):
            print(f"{key}:")
            for v in val:
                print(f"  {v}")
        else:
            print(f"{key}: {val}")
    return 0


# parser ------------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="statesum", description="Exact state-sum invariants of manifolds.")
    ap.add_argument("--version", action="version", version=f"statesum {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--manifold", help="built-in manifold name or triangulation file")
    common.add_argument("--complex", help="cell complex file")
    common.add_argument("--category", help="shipped category name or data file")
    common.add_argument("--group", help="group name (trivial, zN, s3, d4, q8) or group file")
    common.add_argument("--seed", type=int, default=42, help="PRNG seed (Mersenne Twister via random.Random)")
    common.add_argument("--flips", type=int, default=100)
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--format", choices=["exact", "exact+approx", "json"], default="exact+approx")
    sub = ap.add_subparsers(dest="command", required=True)

    sub.add_parser("invariant", parents=[common], help="state sum of a 3-manifold (or surface)").set_defaults(
        fn=cmd_invariant, unoriented=False)
    sub.add_parser("dw", parents=[common], help="Dijkgraaf-Witten invariant").set_defaults(fn=cmd_dw)
    p = sub.add_parser("surgery", parents=[common], help="surgery sum for pointed modular data")
    p.add_argument("--matrix", help="linking matrix as a JSON array of arrays")
    p.add_argument("--link", help="file holding the linking matrix")
    p.add_argument("--wrt", action="store_true", help="also require lambda^2 |A| = 1")
    p.set_defaults(fn=cmd_surgery)
    p = sub.add_parser("n1", parents=[common], help="surface state sum for 1-category data")
    p.add_argument("--unoriented", action="store_true", help="read labels through the involution")
    p.set_defaults(fn=cmd_n1)
    p = sub.add_parser("flip-test", parents=[common], help="invariance under seeded Pachner flips")
    p.add_argument("--unoriented", action="store_true")
    p.set_defaults(fn=cmd_flip_test)
    p = sub.add_parser("validate", parents=[common], help="check a complex and/or category file")
    p.add_argument("--wrt", action="store_true")
    p.set_defaults(fn=cmd_validate)
    p = sub.add_parser("gen", parents=[common], help="write generated category data")
    p.add_argument("kind", choices=["vecg", "repg", "fibonacci", "pointed"])
    p.add_argument("--n", type=int, help="order of the cyclic group (pointed)")
    p.add_argument("--k", type=int, default=1, help="q(x) = zeta^(k x^2) (pointed)")
    p.add_argument("--out", help="output file (stdout when omitted)")
    p.set_defaults(fn=cmd_gen)
    p = sub.add_parser("oracle", parents=[common], help="independent brute-force oracles")
    p.add_argument("kind", choices=["homcount", "dw", "brute-labelings"])
    p.add_argument("--pi1", help="presentation name or file")
    p.add_argument("--guard", type=int, default=10 ** 6, help="size guard for brute force")
    p.set_defaults(fn=cmd_oracle)
    sub.add_parser("list", parents=[common], help="list built-in data").set_defaults(fn=cmd_list)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Failure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (FieldError, EvaluationError, FusionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
