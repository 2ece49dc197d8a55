"""``lexidim`` command line: JSON reports on stdout, exit 0 / 2 (input
error) / 3 (inconclusive because an enumeration cap was hit)."""

from __future__ import annotations

import argparse
import json
import os
import shlex
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .errors import CapExceeded, LexidimError
from .graph import Graph, connectivity_report, parse_graph_spec
from .lexi import build_product, dimensional_k, parse_members
from .profiles import global_C_pair, global_D_pair
from .solver import (
    ADJACENCY,
    METRIC,
    BACKEND,
    adim_k,
    dim_k,
    enumerate_k_adjacency_bases,
    enumerate_k_metric_bases,
)
from .theory import (
    PROPERTIES,
    check_property,
    check_remark_dim2_full,
    classify_path_cycle,
    formula_adim,
    formula_dim_lexi,
    sufficient_conditions,
    verify_join_lemma,
)
from .twins import twin_freeness_report, twin_partition

EXIT_OK, EXIT_INTERNAL, EXIT_INPUT, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class _UsageError(LexidimError):
    kind = "usage"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def read_graph(text: str) -> Graph:
    """A generator expression, an inline edge list, or ``@file`` / a file path."""
    if text.startswith("@"):
        with open(text[1:]) as fh:
            return parse_graph_spec(fh.read())
    if os.path.isfile(text):
        with open(text) as fh:
            return parse_graph_spec(fh.read())
    return parse_graph_spec(text.replace("\\n", "\n"))


# -- commands -------------------------------------------------------------------

def cmd_analyze(a):
    g = read_graph(a.spec)
    p = twin_partition(g)
    conn = connectivity_report(g)
    out = {
        "order": g.order,
        "edges": g.edge_count,
        "connected": conn["connected"],
        "diameter": conn["diameter"],
        "twin_partition": p.to_json(),
        **twin_freeness_report(p),
    }
    if g.order >= 2:
        if conn["connected"]:
            d, dp = global_D_pair(g)
            out["D"] = d
            out["D_pair"] = list(dp)
        else:
            out["D"] = None
        c, cp = global_C_pair(g)
        out["C"] = c
        out["C_pair"] = list(cp)
    return out, EXIT_OK


def cmd_dim(a):
    return dim_k(read_graph(a.spec), a.k, a.backend).to_json(), EXIT_OK


def cmd_adim(a):
    return adim_k(read_graph(a.spec), a.k, a.backend).to_json(), EXIT_OK


def _base_and_family(a):
    g = read_graph(a.base)
    return g, parse_members(a.members, g.order)


def cmd_product(a):
    g, fam = _base_and_family(a)
    lp = build_product(g, fam)
    out = {
        "base_order": g.order,
        "member_orders": list(lp.member_orders),
        "order": lp.flat.order,
        "edges": lp.flat.edge_count,
        "offsets": list(lp.offsets),
    }
    if a.materialize:
        out["edge_list"] = [list(e) for e in lp.flat.edges()]
        out["origin_of"] = [list(o) for o in lp.origin_of]
    return out, EXIT_OK


def cmd_dimensional(a):
    g, fam = _base_and_family(a)
    return dimensional_k(g, fam).to_json(), EXIT_OK


def cmd_properties(a):
    g, fam = _base_and_family(a)
    which = [w.strip() for w in a.which.split(",") if w.strip()]
    reports = [check_property(g, fam, a.k, w, a.cap) for w in which]
    code = EXIT_INCONCLUSIVE if any(r.holds is None for r in reports) else EXIT_OK
    return {"k": a.k, "properties": [r.to_json() for r in reports]}, code


def cmd_bases(a):
    g = read_graph(a.spec)
    enum = enumerate_k_metric_bases if a.mode == METRIC else enumerate_k_adjacency_bases
    res = enum(g, a.k, a.cap, a.backend)
    out = {"mode": a.mode, "k": a.k, **res.to_json()}
    return out, EXIT_INCONCLUSIVE if res.truncated else EXIT_OK


def cmd_formula(a):
    g = read_graph(a.spec)
    kind, n = classify_path_cycle(g)
    value = formula_adim(kind, n, a.k)
    out = {"kind": kind, "n": n, "k": a.k, "formula": value}
    if not a.no_oracle:
        res = adim_k(g, a.k, a.backend)
        out["oracle"] = res.value
        out["witness"] = list(res.witness)
        out["agree"] = res.value == value
    return out, EXIT_OK


def cmd_formula_lexi(a):
    g, fam = _base_and_family(a)
    spec = [classify_path_cycle(h) for h in fam]
    value = formula_dim_lexi(g, spec, a.k, a.complemented)
    out = {"k": a.k, "complemented": a.complemented, "formula": value}
    if a.oracle:
        lp = build_product(g, fam.complemented() if a.complemented else fam, dimensional=True)
        res = dim_k(lp.flat, a.k, a.backend)
        out["oracle"] = res.value
        out["witness"] = list(res.witness)
        out["agree"] = res.value == value
    return out, EXIT_OK


def cmd_sufficient(a):
    g, fam = _base_and_family(a)
    return sufficient_conditions(g, fam, a.k), EXIT_OK


def cmd_remark(a):
    g, fam = _base_and_family(a)
    out = check_remark_dim2_full(g, fam, a.max_order)
    out["agree"] = out["predicted_full"] == out["oracle_full"]
    return out, EXIT_OK


def cmd_join_lemma(a):
    return verify_join_lemma(read_graph(a.spec), a.k, a.cap), EXIT_OK


def _campaign_line(line: str):
    return run_command(shlex.split(line))


def cmd_verify(a):
    with open(a.campaign) as fh:
        lines = [ln.strip() for ln in fh]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if a.threads > 1 and len(lines) > 1:
        with ProcessPoolExecutor(max_workers=a.threads) as pool:
            results = list(pool.map(_campaign_line, lines))
    else:
        results = [_campaign_line(ln) for ln in lines]
    codes = [c for c, _ in results]
    code = EXIT_INPUT if EXIT_INPUT in codes else EXIT_INCONCLUSIVE if EXIT_INCONCLUSIVE in codes else EXIT_OK
    disagreements = sum(1 for _, r in results if r.get("result", {}).get("agree") is False)
    return {"lines": len(lines), "disagreements": disagreements, "reports": [r for _, r in results]}, code


# -- plumbing ---------------------------------------------------------------------

def _env_threads() -> int:
    raw = os.environ.get("LEXIDIM_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise _UsageError(f"LEXIDIM_THREADS must be an integer, got {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="indent the JSON output")
    common.add_argument("--threads", type=int, default=_env_threads(),
                        help="worker processes for campaign lines (env LEXIDIM_THREADS)")
    common.add_argument("--backend", choices=["python", "cython"], default=None,
                        help=f"solver kernel (default: {BACKEND})")

    parser = _Parser(prog="lexidim", description=__doc__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_, parents=[common])
        sp.set_defaults(func=func)
        return sp

    sp = add("analyze", cmd_analyze, "twin partition, D(G), C(G), diameter")
    sp.add_argument("spec")
    for name, func in (("dim", cmd_dim), ("adim", cmd_adim)):
        sp = add(name, func, f"exact {name}_k")
        sp.add_argument("spec")
        sp.add_argument("-k", type=int, required=True)

    def product_args(sp):
        sp.add_argument("base")
        sp.add_argument("--members", required=True, help="semicolon-separated member specs")

    sp = add("product", cmd_product, "build a lexicographic product")
    product_args(sp)
    sp.add_argument("--materialize", action="store_true", help="include the flat edge list")
    sp = add("dimensional", cmd_dimensional, "largest valid k of the product, without building it")
    product_args(sp)
    sp = add("properties", cmd_properties, "decide P1..P4")
    product_args(sp)
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("--which", default=",".join(PROPERTIES))
    sp.add_argument("--cap", type=int, default=10_000)
    sp = add("sufficient", cmd_sufficient, "sufficient-condition flags for P1, P2, P4")
    product_args(sp)
    sp.add_argument("-k", type=int, required=True)
    sp = add("remark", cmd_remark, "predicted vs oracle dim_2 == order")
    product_args(sp)
    sp.add_argument("--max-order", type=int, default=24)
    sp = add("formula", cmd_formula, "closed-form adim_k of a path or cycle vs the oracle")
    sp.add_argument("spec")
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("--no-oracle", action="store_true")
    sp = add("formula-lexi", cmd_formula_lexi, "closed-form dim_k of a path/cycle family product")
    product_args(sp)
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("--complemented", action="store_true")
    sp.add_argument("--oracle", action="store_true")
    sp = add("join-lemma", cmd_join_lemma, "dim_k(K_1 + h) vs adim_k(h) and apex exclusion")
    sp.add_argument("spec")
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("--cap", type=int, default=10_000)
    sp = add("bases", cmd_bases, "enumerate minimum generators")
    sp.add_argument("spec")
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("--cap", type=int, default=10_000)
    sp.add_argument("--mode", choices=[ADJACENCY, METRIC], default=ADJACENCY)
    sp = add("verify", cmd_verify, "run a campaign file, one command per line")
    sp.add_argument("campaign")
    return parser


def _input_echo(a) -> dict:
    skip = {"func", "command", "pretty", "threads", "backend"}
    return {k: v for k, v in vars(a).items() if k not in skip}


def run_command(argv) -> tuple[int, dict]:
    argv = list(argv)
    start = time.perf_counter()
    report: dict = {"command": argv[0] if argv else None, "argv": argv}
    try:
        a = build_parser().parse_args(argv)
        if not getattr(a, "command", None):
            raise _UsageError("no command given")
        report["input"] = _input_echo(a)
        result, code = a.func(a)
        report["result"] = result
    except CapExceeded as exc:
        code = EXIT_INCONCLUSIVE
        report["error"] = exc.to_json()
    except LexidimError as exc:
        code = EXIT_INPUT
        report["error"] = exc.to_json()
    except (OSError, IndexError) as exc:
        code = EXIT_INPUT
        report["error"] = {"type": type(exc).__name__, "message": str(exc)}
    except Exception as exc:  # noqa: BLE001 - reports must stay JSON
        code = EXIT_INTERNAL
        report["error"] = {"type": "internal_error", "message": f"{type(exc).__name__}: {exc}"}
    report["exit"] = code
    report["timing_ms"] = round((time.perf_counter() - start) * 1000, 3)
    report["version"] = __version__
    return code, report


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if argv and argv[0] in ("-h", "--help"):
        build_parser().print_help()
        return EXIT_OK
    code, report = run_command(argv)
    pretty = "--pretty" in argv
    print(json.dumps(report, indent=2 if pretty else None))
    return code


if __name__ == "__main__":
    sys.exit(main())
