import argparse
import copy
import json
import sys

import yaml

from polybrx.builders import build_context, build_matrix, build_suite_params, build_suites
from polybrx.calculator import cmd_eval, cmd_query
from polybrx.helpers import load_config, log_cfg, make_logger, set_seed, write_output
from polybrx.verification import VerifyManager, all_passed, format_reports

DEFAULT_CONFIG = {
    "context": {"monoid": None, "theta": None, "k": 2},
    "verification": {
        "suites": "all",
        "bounds": {},
        "negative_samples": 200,
        "grammar_samples": 1000,
        "seed": 42,
        "metric": "discrete",
    },
    "matrix": None,
    "output": {"out": None, "format": "text", "timing": True, "log_dir": None},
}

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2


def merge_config(args: argparse.Namespace) -> dict:
    """
    Defaults, then the YAML file given by --config, then command-line flags.
    """
    cfg = copy.deepcopy(DEFAULT_CONFIG)
    if args.config is not None:
        for section, values in load_config(args.config).items():
            if isinstance(values, dict) and isinstance(cfg.get(section), dict):
                cfg[section].update(values)
            else:
                cfg[section] = values
    context = cfg["context"]
    if args.monoid is not None:
        context["monoid"] = args.monoid
    if args.theta is not None:
        context["theta"] = args.theta
    if args.k is not None:
        context["k"] = args.k
    verification = cfg["verification"]
    if args.all:
        verification["suites"] = "all"
    elif args.suite:
        verification["suites"] = args.suite
    if args.seed is not None:
        verification["seed"] = args.seed
    output = cfg["output"]
    if args.format is not None:
        output["format"] = args.format
    if args.out is not None:
        output["out"] = args.out
    return cfg


def cmd_check(cfg: dict, fragment_bound, logger) -> int:
    verification = cfg["verification"]
    params = build_suite_params(verification, fragment_bound)
    suites = build_suites(verification.get("suites"))
    set_seed(params.seed)
    if cfg["context"].get("monoid") is not None:
        matrix = [cfg["context"]]
    else:
        matrix = build_matrix(cfg.get("matrix"))
    output = cfg["output"]
    manager = VerifyManager(params, suites, logger=logger, timing=output.get("timing", True))
    reports = manager.run_all(matrix)
    write_output(
        format_reports(reports, output.get("format", "text"), timing=output.get("timing", True)),
        output.get("out"),
    )
    return EXIT_OK if all_passed(reports) else EXIT_FAILED


def main(argv=None) -> int:
    ap = argparse.ArgumentParser("polybrx")

    ap.add_argument(
        "mode", choices=["eval", "query", "check"], help="evaluate a product, answer a query or run suites"
    )
    ap.add_argument("args", nargs="*", help="expression (eval) or query name and arguments (query)")

    ap.add_argument("--config", type=str, help="path to YAML config file")
    ap.add_argument("--monoid", type=str, help="built-in monoid name or JSON monoid file")
    ap.add_argument("--theta", type=str, help="id, one or a JSON theta file")
    ap.add_argument("-k", type=int, help="alphabet size")
    ap.add_argument("-L", type=int, dest="fragment_bound", help="fragment bound")
    ap.add_argument("--suite", action="append", help="suite to run (repeatable)")
    ap.add_argument("--all", action="store_true", help="run every suite")
    ap.add_argument("--format", choices=["text", "json"], help="output format")
    ap.add_argument("--out", type=str, help="write output to this file")
    ap.add_argument("--seed", type=int, help="random seed")
    args = ap.parse_intermixed_args(argv)

    try:
        cfg = merge_config(args)
        logger = make_logger(cfg["output"].get("log_dir"))
        fmt = cfg["output"].get("format", "text")
        if args.mode == "check":
            log_cfg(cfg, logger)
            return cmd_check(cfg, args.fragment_bound, logger)
        ctx = build_context(cfg["context"])
        if args.mode == "eval":
            if len(args.args) != 1:
                raise ValueError("eval takes one expression, got {} arguments".format(len(args.args)))
            result = cmd_eval(ctx, args.args[0])
            text = json.dumps({"expr": args.args[0], "result": result}) if fmt == "json" else result
        else:
            if not args.args:
                raise ValueError("query needs a query name")
            answer = cmd_query(ctx, args.args[0], args.args[1:])
            text = json.dumps(answer.to_dict(), indent=2) if fmt == "json" else answer.to_text()
        write_output(text, cfg["output"].get("out"))
    except (ValueError, OSError, yaml.YAMLError) as err:
        make_logger().error("Error: %s", err)
        return EXIT_ERROR
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
