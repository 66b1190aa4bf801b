# coding: utf-8
"""
Collection of builder functions: configuration entries to monoids, thetas,
contexts and suite settings.
"""
import json
import os
from typing import List, Optional, Tuple

from polybrx.extension import BrxContext
from polybrx.monoid import (
    BUILTIN_MONOIDS,
    FiniteMonoid,
    Theta,
    check_theta,
    load_monoid_file,
    theta_identity,
    theta_one,
)
from polybrx.suites import SUITES, SuiteParams
from polybrx.words import Alphabet

NAMED_THETAS = {"id": theta_identity, "one": theta_one}

# fixture x admissible theta; every entry runs with k = 1 and k = 2
DEFAULT_MATRIX = [
    ("trivial", "id"),
    ("trivial", "one"),
    ("C2", "id"),
    ("C2", "one"),
    ("C3", "id"),
    ("C3", "one"),
    ("chain2", "one"),
    ("lz2", "one"),
    ("I2", "one"),
]


def build_monoid(spec: str) -> Tuple[FiniteMonoid, Optional[Theta]]:
    """
    Resolve a built-in name or a JSON monoid file.

    Currently supported built-ins: trivial, C2, C3, chain2, lz2, I2.

    :param spec: name or path
    :return: validated monoid and the theta stored with it (None for built-ins)
    """
    if spec in BUILTIN_MONOIDS:
        return BUILTIN_MONOIDS[spec](), None
    if os.path.isfile(spec):
        return load_monoid_file(spec)
    raise ValueError(
        "Invalid setting for 'monoid': {} (neither a built-in nor a file)".format(spec)
    )


def build_theta(monoid: FiniteMonoid, spec: Optional[str], inline: Optional[Theta] = None) -> Tuple[Theta, str]:
    """
    Build theta from "id", "one", a JSON file, or the theta stored in the
    monoid file when `spec` is empty.

    :return: validated theta and the name it is reported under
    """
    if spec is None:
        if inline is None:
            raise ValueError("No theta given for {}: use --theta id|one|<file>".format(monoid.name))
        return check_theta(monoid, inline), "inline"
    if spec in NAMED_THETAS:
        return check_theta(monoid, NAMED_THETAS[spec](monoid)), spec
    if os.path.isfile(spec):
        with open(spec, "r", encoding="utf-8") as theta_file:
            data = json.load(theta_file)
        images = data["theta"] if isinstance(data, dict) else data
        return check_theta(monoid, Theta(tuple(images))), spec
    raise ValueError("Invalid setting for 'theta': {}".format(spec))


def build_context(config: dict) -> BrxContext:
    """
    Create the extension context of a `context` configuration section.

    :param config: dict with keys monoid, theta (optional), k
    :return: context with validated monoid and theta
    """
    monoid_spec = config.get("monoid")
    if monoid_spec is None:
        raise ValueError("Invalid setting for 'monoid': missing")
    k = config.get("k", 2)
    if not isinstance(k, int) or k < 1:
        raise ValueError("Invalid setting for 'k': {}".format(k))
    monoid, inline = build_monoid(str(monoid_spec))
    theta, theta_name = build_theta(monoid, config.get("theta"), inline)
    return BrxContext(
        monoid, theta, Alphabet(k), theta_name=theta_name, monoid_ref=str(monoid_spec)
    )


def build_matrix(config: Optional[List[dict]]) -> List[dict]:
    """
    Context entries for a full check; the built-in matrix when none is given.
    """
    if config is None:
        return [
            {"monoid": monoid, "theta": theta, "k": k}
            for monoid, theta in DEFAULT_MATRIX
            for k in (1, 2)
        ]
    if not isinstance(config, list):
        raise ValueError("Invalid setting for 'matrix': {}".format(config))
    return list(config)


def build_suites(selection) -> List[str]:
    """
    :param selection: "all", None or a list of suite names
    :return: suite names in registry order
    """
    if selection is None or selection == "all":
        return list(SUITES)
    if isinstance(selection, str):
        selection = [selection]
    for name in selection:
        if name not in SUITES:
            raise ValueError(
                "Invalid setting for 'suites': {} (known: {})".format(name, ", ".join(SUITES))
            )
    return [name for name in SUITES if name in selection]


def build_suite_params(config: dict, fragment_bound: Optional[int] = None) -> SuiteParams:
    """
    Suite settings from a `verification` configuration section.

    A single fragment bound L (the -L flag) sets triple and solver fragments
    to L, pairwise fragments to 2L and the searches to 4L and L + 2; explicit
    `bounds` entries win over it.

    :param config: verification section
    :param fragment_bound: optional base bound L
    :return: suite parameters
    """
    bounds = {}
    if fragment_bound is not None:
        if fragment_bound < 0:
            raise ValueError("Invalid setting for 'L': {}".format(fragment_bound))
        bounds = {
            "triple_L": fragment_bound,
            "pair_L": 2 * fragment_bound,
            "solver_L": fragment_bound,
            "solver_search_L": fragment_bound + 2,
            "inverse_search_L": 4 * fragment_bound,
            "negative_search_L": 4 * fragment_bound,
        }
    bounds.update(config.get("bounds") or {})
    for key, value in bounds.items():
        if key not in SuiteParams.__dataclass_fields__:
            raise ValueError("Invalid setting for 'bounds': unknown key {}".format(key))
        if not isinstance(value, int) or value < 0:
            raise ValueError("Invalid setting for '{}': {}".format(key, value))
    metric = config.get("metric", "discrete")
    if metric not in ("discrete", "gap"):
        raise ValueError("Invalid setting for 'metric': {}".format(metric))
    return SuiteParams(
        negative_samples=config.get("negative_samples", 200),
        grammar_samples=config.get("grammar_samples", 1000),
        metric=metric,
        seed=config.get("seed", 42),
        **bounds
    )
