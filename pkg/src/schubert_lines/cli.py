"""Command line interface: ``schubert <group> <command> [flags]``.

Results are printed as JSON ``{"value": ...}`` (or a plain table with
``--format table``).  Exit codes: 0 success, 1 failed acceptance check,
2 domain error (JSON diagnostic on stdout), 64 usage error, 65 malformed JSON.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
import time
from dataclasses import asdict, dataclass
from importlib import resources
from typing import Any, Callable, Sequence

from . import __version__
from . import acceptance
from . import arrangements as arr_mod
from . import ffverify as ff
from .chow import intersection_number, parse_classes, product
from .linalg import PrimeField, parse_field, random_flag, random_subspace
from .plactic import SkewTableau, circ, lr_ballot, rectify
from .tableau import Tableau, c_count, hook_length_count, multi_star, partition, star_extend

EXIT_OK, EXIT_FAILED, EXIT_DOMAIN, EXIT_USAGE, EXIT_DATA = 0, 1, 2, 64, 65


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message: str):  # noqa: D401 - argparse hook
        raise UsageError(f"{self.prog}: {message}")


@dataclass
class RunManifest:
    subcommand: str
    parameters: dict
    seed: int
    field: str | None
    version: str
    wall_time: float
    digest: str


def digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def schema_name(command: str) -> str:
    """Schema file describing the output of ``command`` (e.g. ``"chow number"``)."""
    return command.replace(" ", "-") + ".json"


def load_schema(name: str) -> dict:
    return json.loads(resources.files("schubert_lines").joinpath("schemas", name).read_text())


# input parsing


def _json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DataError(f"malformed JSON {text!r}: {exc}") from exc


def _json_file(path: str) -> Any:
    try:
        with (sys.stdin if path == "-" else open(path)) as fh:
            raw = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    return _json(raw)


def _tableau(text: str) -> Tableau:
    return Tableau.from_json(_json(text))


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


def _points(text: str) -> list:
    return _json("[" + text + "]")


def _prime(q: int) -> PrimeField:
    return PrimeField(q)


# commands


def cmd_tableau_star(a) -> Any:
    return [t.to_json() for t in star_extend(_tableau(a.t), a.alpha)]


def cmd_tableau_multistar(a) -> Any:
    return [t.to_json() for t in multi_star(_ints(a.alphas), cap=a.cap)]


def cmd_tableau_count(a) -> Any:
    shape = partition(_ints(a.shape))
    if a.alphas:
        return c_count(shape, _ints(a.alphas))
    return hook_length_count(shape)


def cmd_plactic_circ(a) -> Any:
    return circ(_tableau(a.s), _tableau(a.t)).to_json()


def cmd_plactic_lr(a) -> Any:
    return lr_ballot(_ints(a.lam), _ints(a.mu), _ints(a.nu))


def cmd_plactic_rectify(a) -> Any:
    data = _json(a.skew)
    if not isinstance(data, dict):
        raise ValueError("a skew tableau is an object with outer, inner and rows")
    return rectify(SkewTableau.from_json(data)).to_json()


def _classes(a) -> list:
    if a.classes:
        return parse_classes(a.classes)
    if a.alphas:
        return [(x, 0) for x in _ints(a.alphas)]
    raise UsageError("give --classes or --alphas")


def cmd_chow_product(a) -> Any:
    return product(_classes(a), a.n).to_json()


def cmd_chow_number(a) -> Any:
    return intersection_number(_classes(a), a.n)


def cmd_arrangement_build(a) -> Any:
    arr = arr_mod.build(a.n, parse_field(a.field), seed=a.seed, max_nodes=a.max_nodes)
    return {"arrangement": arr.to_json(), "verified": arr_mod.verify(arr).ok}


def cmd_arrangement_verify(a) -> Any:
    path = a.input or a.input_flag
    if not path:
        raise UsageError("give the arrangement file (path or -)")
    data = _json_file(path)
    if isinstance(data, dict) and "value" in data:
        data = data["value"]
    if isinstance(data, dict) and "arrangement" in data:
        data = data["arrangement"]
    try:
        arr = arr_mod.Arrangement.from_json(data)
    except (KeyError, TypeError) as exc:
        raise ValueError(f"not an arrangement: missing or malformed {exc}") from exc
    return arr_mod.verify(arr).to_json()


def cmd_arrangement_bound(a) -> Any:
    return arr_mod.s_bound(a.n)


def cmd_arrangement_minfield(a) -> Any:
    rows = arr_mod.field_search(a.n, max_nodes=a.max_nodes)
    minimal = None
    for row in rows:
        if row["verdict"] != "none":
            minimal = row["p"] if row["verdict"] == "found" else None
            break
    return {"formula": arr_mod.s_bound(a.n), "minimal_prime": minimal, "search": rows}


def cmd_arrangement_pencil(a) -> Any:
    fld = parse_field(a.field)
    rng = random.Random(a.seed)
    flag = random_flag(a.n, fld, rng.randrange(2 ** 32))
    while True:
        l_inf = random_subspace(a.n, 1, fld, rng)
        if not flag[a.n] <= l_inf:
            break
    return arr_mod.pencil_verify(arr_mod.pencil_make(flag, l_inf), seed=a.seed)


def cmd_ff_lines(a) -> Any:
    closed = ff.count_lines(a.n, a.q)
    out: dict = {"closed_form": closed}
    if a.list:
        lines = [[list(r) for r in ell] for ell in ff.enumerate_lines(a.n, a.q)]
        out["lines"] = lines
        out["enumerated"] = len(lines)
    else:
        out["enumerated"] = sum(len(b) for b in ff.iter_line_batches(a.n, a.q))
    return out


def cmd_ff_solve(a) -> Any:
    data = _json_file(a.problem)
    try:
        problem = ff.SchubertProblem.from_json(data)
    except (KeyError, TypeError) as exc:
        raise ValueError(f"not a Schubert problem: missing or malformed {exc}") from exc
    return ff.solve(problem, threads=a.threads).to_json()


def cmd_ff_segre(a) -> Any:
    fld = _prime(a.q)
    inst = ff.segre_instance(a.n, fld, _points(a.points) if a.points else None)
    report = ff.solve(inst.problem, threads=a.threads)
    return {"instance": inst.to_json(), "report": report.to_json(),
            "matches_predicted": set(report.lines) == set(inst.predicted)}


def cmd_ff_scroll(a) -> Any:
    inst = ff.scroll_instance(a.n, _prime(a.q), _points(a.roots) if a.roots else None)
    return {"instance": inst.to_json(), "report": ff.verify_scroll(inst)}


def cmd_ff_check(a) -> Any:
    if a.lemma == "lemma24":
        F, P, N, H = ff.lemma24_instance(a.n, a.q, a.seed)
        return ff.check_lemma_24(F, P, N, H)
    if a.lemma == "restriction":
        K, M = ff.restriction_instance(a.n, a.q, a.seed)
        return ff.check_restriction(K, M)
    cases = {n: (tabs, s, alpha) for n, tabs, s, alpha in acceptance._lemma52_cases()}
    if a.n not in cases:
        raise ValueError(f"lemma52 instances are defined for n in {sorted(cases)}")
    tabs, s, alpha = cases[a.n]
    arr = arr_mod.build(a.n, _prime(a.q), seed=a.seed)
    N = ff.lemma52_subspace(arr, tabs, s, alpha, a.seed)
    return ff.check_lemma_52(arr, tabs, s, alpha, N)


def cmd_accept(a) -> Any:
    only = set(_ints(a.only)) if a.only else None
    outcomes = acceptance.run(only)
    a._outcomes = outcomes
    return {"criteria": [o.to_json() for o in outcomes], "passed": all(o.passed for o in outcomes)}


# parser


def build_parser() -> Parser:
    common = Parser(add_help=False)
    common.add_argument("--format", choices=["json", "table"], default="json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--manifest", help="write a run manifest to this path")
    common.add_argument("-o", "--output", help="also write the JSON result to this path")

    p = Parser(prog="schubert", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    groups = p.add_subparsers(dest="group", required=True, parser_class=Parser)

    def leaf(group, name: str, func: Callable, help: str):
        sp = group.add_parser(name, parents=[common], help=help)
        sp.set_defaults(func=func)
        return sp

    g = groups.add_parser("tableau", help="tableaux and the star calculus").add_subparsers(
        dest="command", required=True, parser_class=Parser)
    sp = leaf(g, "star", cmd_tableau_star, "T * alpha")
    sp.add_argument("--t", required=True, help="tableau rows as JSON, e.g. '[[1,2,3],[4]]'")
    sp.add_argument("--alpha", type=int, required=True)
    sp = leaf(g, "multistar", cmd_tableau_multistar, "alpha_1 * ... * alpha_m")
    sp.add_argument("--alphas", required=True)
    sp.add_argument("--cap", type=int, help="ambient n: drop first rows longer than n-1")
    sp = leaf(g, "count", cmd_tableau_count, "number of (block-restricted) standard tableaux")
    sp.add_argument("--shape", required=True)
    sp.add_argument("--alphas")

    g = groups.add_parser("plactic", help="tableau product and LR coefficients").add_subparsers(
        dest="command", required=True, parser_class=Parser)
    sp = leaf(g, "circ", cmd_plactic_circ, "S ∘ T")
    sp.add_argument("--s", required=True)
    sp.add_argument("--t", required=True)
    sp = leaf(g, "lr", cmd_plactic_lr, "Littlewood-Richardson coefficient")
    for flag in ("--lam", "--mu", "--nu"):
        sp.add_argument(flag, required=True)
    sp = leaf(g, "rectify", cmd_plactic_rectify, "jeu de taquin rectification")
    sp.add_argument("--skew", required=True, help='{"outer":[..],"inner":[..],"rows":[..]}')

    g = groups.add_parser("chow", help="Chow ring of lines in P^n").add_subparsers(
        dest="command", required=True, parser_class=Parser)
    for name, func in (("product", cmd_chow_product), ("number", cmd_chow_number)):
        sp = leaf(g, name, func, f"{name} of Schubert classes")
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--classes", help="e.g. '(1,0),(2,1)'")
        sp.add_argument("--alphas", help="one-row classes, e.g. '1,1,1,1'")

    g = groups.add_parser("arrangement", help="flags with hyperplane arrangements").add_subparsers(
        dest="command", required=True, parser_class=Parser)
    sp = leaf(g, "build", cmd_arrangement_build, "construct an arrangement")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--field", default="Q", help="Q or Fp:<prime>")
    sp.add_argument("--max-nodes", type=int, default=200_000)
    sp = leaf(g, "verify", cmd_arrangement_verify, "verify an arrangement from a JSON file")
    sp.add_argument("input", nargs="?", help="path or - for stdin")
    sp.add_argument("--input", dest="input_flag", help="same as the positional argument")
    sp = leaf(g, "bound", cmd_arrangement_bound, "field size sufficient for an arrangement")
    sp.add_argument("--n", type=int, required=True)
    sp = leaf(g, "minfield", cmd_arrangement_minfield, "smallest prime admitting an arrangement")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--max-nodes", type=int, default=5_000)
    sp = leaf(g, "pencil", cmd_arrangement_pencil, "verify a pencil of hyperplanes")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--field", default="F5")

    g = groups.add_parser("ff", help="brute force over finite fields").add_subparsers(
        dest="command", required=True, parser_class=Parser)
    sp = leaf(g, "lines", cmd_ff_lines, "count (and list) the lines of P^n(F_q)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--list", action="store_true")
    sp = leaf(g, "solve", cmd_ff_solve, "solve a Schubert problem from a JSON file")
    sp.add_argument("--problem", required=True)
    sp.add_argument("--threads", type=int)
    sp = leaf(g, "segre", cmd_ff_segre, "four (n-1)-planes in P^(2n-1)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--points", help="e.g. '[1,0],[0,1]'")
    sp.add_argument("--threads", type=int)
    sp = leaf(g, "scroll", cmd_ff_scroll, "scroll lines meeting K_(n+1)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--roots", help="e.g. '[1,0],[0,1]'")
    sp = leaf(g, "check", cmd_ff_check, "set-equality lemmas on seeded instances")
    sp.add_argument("lemma", choices=["lemma24", "restriction", "lemma52"])
    sp.add_argument("--n", type=int, default=3)
    sp.add_argument("--q", type=int, default=5)

    sp = groups.add_parser("accept", parents=[common], help="run the acceptance matrix")
    sp.set_defaults(func=cmd_accept, command=None)
    sp.add_argument("--only", help="comma-separated criterion ids")
    return p


# rendering


def render_table(value: Any, indent: str = "") -> str:
    if isinstance(value, dict):
        lines = []
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{indent}{k}:")
                lines.append(render_table(v, indent + "  "))
            else:
                lines.append(f"{indent}{k}: {json.dumps(v)}")
        return "\n".join(lines)
    if isinstance(value, list):
        return "\n".join(f"{indent}{json.dumps(v)}" for v in value)
    return f"{indent}{value}"


def _command_name(args) -> str:
    return " ".join(x for x in (args.group, args.command) if x)


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    start = time.perf_counter()
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(json.dumps({"error": {"kind": "usage", "message": str(exc)}}, sort_keys=True), file=out)
        return EXIT_USAGE
    code = EXIT_OK
    try:
        value = args.func(args)
        result = {"value": value}
        if args.group == "accept" and not value["passed"]:
            code = EXIT_FAILED
    except UsageError as exc:
        result, code = {"error": {"kind": "usage", "message": str(exc)}}, EXIT_USAGE
    except DataError as exc:
        result, code = {"error": {"kind": "malformed-json", "message": str(exc)}}, EXIT_DATA
    except (ValueError, TypeError, AssertionError, KeyError, RuntimeError) as exc:
        result, code = {"error": {"kind": "domain", "type": type(exc).__name__,
                                  "message": str(exc)}}, EXIT_DOMAIN
    text = json.dumps(result, sort_keys=True, ensure_ascii=False)
    if args.format == "table" and code != EXIT_DOMAIN and "value" in result:
        if args.group == "accept":
            print("\n".join(o.line() for o in args._outcomes), file=out)
        else:
            print(render_table(result["value"]), file=out)
    else:
        print(text, file=out)
    if args.output and code != EXIT_USAGE:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    if args.manifest:
        params = {k: v for k, v in vars(args).items()
                  if k not in ("func", "format", "manifest", "output", "_outcomes") and not k.startswith("_")}
        manifest = RunManifest(_command_name(args), params, args.seed,
                               getattr(args, "field", None) or (f"F{args.q}" if getattr(args, "q", None) else None),
                               __version__, round(time.perf_counter() - start, 6), digest(text))
        with open(args.manifest, "w") as fh:
            json.dump(asdict(manifest), fh, indent=2, sort_keys=True)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
