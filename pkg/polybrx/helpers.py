# coding: utf-8
"""
Collection of helper functions
"""
import logging
import os
import random
from logging import Logger
from typing import Optional

import numpy as np
import yaml


def make_logger(log_dir: Optional[str] = None, log_file: str = "polybrx.log") -> Logger:
    """
    Create the package logger. Messages go to stderr at INFO, and at DEBUG to
    `log_dir/log_file` when a directory is given.

    :param log_dir: directory for the log file, or None for no file
    :param log_file: name of the log file
    :return: logger object
    """
    logger = logging.getLogger("polybrx")
    if not logger.handlers:
        logger.setLevel(level=logging.DEBUG)
        formatter = logging.Formatter("%(asctime)s %(message)s")
        if log_dir is not None:
            os.makedirs(log_dir, exist_ok=True)
            fh = logging.FileHandler(os.path.join(log_dir, log_file))
            fh.setLevel(level=logging.DEBUG)
            fh.setFormatter(formatter)
            logger.addHandler(fh)
        sh = logging.StreamHandler()
        sh.setLevel(logging.INFO)
        sh.setFormatter(formatter)
        logger.addHandler(sh)
    return logger


def log_cfg(cfg: dict, logger: Logger, prefix: str = "cfg"):
    """
    Write configuration to log. Matrix entries are logged one context per
    line, as monoid/theta/k.

    :param cfg: configuration to log
    :param logger: logger that defines where log is written to
    :param prefix: prefix for logging
    """
    for k, v in cfg.items():
        p = ".".join([prefix, k])
        if isinstance(v, dict):
            log_cfg(v, logger, prefix=p)
        elif isinstance(v, list) and all(isinstance(entry, dict) for entry in v):
            for i, entry in enumerate(v):
                logger.info(
                    "{:34s} : {}/{}/k={}".format(
                        "{}[{}]".format(p, i), entry.get("monoid"), entry.get("theta"), entry.get("k")
                    )
                )
        else:
            logger.info("{:34s} : {}".format(p, v))


def set_seed(seed: int):
    """
    Set the random seed for modules numpy and random.

    :param seed: random seed
    """
    np.random.seed(seed)
    random.seed(seed)


CONFIG_SECTIONS = ("name", "context", "verification", "matrix", "output")


def load_config(path: str = "configs/default.yaml") -> dict:
    """
    Loads and parses a YAML configuration file. Only the sections name,
    context, verification, matrix and output are accepted.

    :param path: path to YAML configuration file
    :return: configuration dictionary
    """
    with open(path, "r", encoding="utf-8") as ymlfile:
        cfg = yaml.safe_load(ymlfile) or {}
    if not isinstance(cfg, dict):
        raise ValueError("Invalid config {}: expected a mapping of sections".format(path))
    unknown = sorted(set(cfg) - set(CONFIG_SECTIONS))
    if unknown:
        raise ValueError(
            "Invalid setting for config sections: {} (known: {})".format(
                ", ".join(unknown), ", ".join(CONFIG_SECTIONS)
            )
        )
    return cfg


def write_output(text: str, path: Optional[str] = None):
    """
    Write text to `path`, or print it when no path is given.
    """
    if path is None:
        print(text)
        return
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8") as opened_file:
        opened_file.write(text + "\n")
