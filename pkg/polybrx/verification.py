# coding: utf-8
"""
Verification manager: runs suites over contexts and reports the outcome.
"""
import json
import time
from logging import Logger
from typing import List, Optional

from polybrx.builders import build_context
from polybrx.extension import BrxContext
from polybrx.fragment import FragmentCache
from polybrx.monoid import MonoidError, ThetaError
from polybrx.suites import ANCHORS, SUITES, SuiteParams, SuiteReport, check_anchor_table


class VerifyManager:
    """ Manages a verification run: suites x contexts, logging and reports. """

    def __init__(
        self,
        params: SuiteParams,
        suites: List[str],
        logger: Optional[Logger] = None,
        timing: bool = True,
    ) -> None:
        """
        Creates a new VerifyManager.

        :param params: bounds and sampling settings for every suite
        :param suites: suite names to run
        :param logger: logger for progress messages
        :param timing: whether reports carry wall time
        """
        check_anchor_table()
        for name in suites:
            if name not in SUITES:
                raise ValueError("Unknown suite '{}'".format(name))
        self.params = params
        self.suites = list(suites)
        self.logger = logger
        self.timing = timing
        self.reports: List[SuiteReport] = []

    def _log(self, msg: str, *args):
        if self.logger is not None:
            self.logger.info(msg, *args)

    def run_suite(self, ctx: BrxContext, name: str, fragments: Optional[FragmentCache] = None) -> SuiteReport:
        """
        Run one suite on one context.

        :param ctx: extension context
        :param name: suite name
        :param fragments: fragment cache shared between suites of one context
        :return: report of the suite
        """
        if name not in SUITES:
            raise ValueError("Unknown suite '{}'".format(name))
        fragments = fragments or FragmentCache(ctx)
        report = SuiteReport(suite=name, anchor=ANCHORS[name], context=ctx.name)
        start = time.time()
        SUITES[name].run(ctx, self.params, fragments, report)
        report.ms = int(round((time.time() - start) * 1000))
        self._log(
            "[SUITE] %-22s [CTX] %-18s %s cases=%d %s",
            name,
            ctx.name,
            "PASS" if report.passed else "FAIL",
            report.cases,
            report.verdict,
        )
        for failure in report.failures:
            self._log("\t[FAIL] %s expected %s got %s", " ".join(failure.inputs), failure.expected, failure.actual)
        return report

    def run_context(self, ctx: BrxContext) -> List[SuiteReport]:
        self._log("-" * 60)
        self._log("Context %s", ctx.name)
        fragments = FragmentCache(ctx)
        reports = [
            self.run_suite(ctx, name, fragments)
            for name in self.suites
            if SUITES[name].applies(ctx)
        ]
        self.reports.extend(reports)
        return reports

    def run_all(self, matrix: List[dict]) -> List[SuiteReport]:
        """
        Run the selected suites on every context of the matrix. A context
        whose monoid or theta fails validation yields a failing "load" report
        and its suites are skipped.

        :param matrix: context entries {monoid, theta, k}
        :return: all reports in run order
        """
        reports = []
        for entry in matrix:
            try:
                ctx = build_context(entry)
            except (MonoidError, ThetaError) as err:
                name = "{}/{}/k={}".format(entry.get("monoid"), entry.get("theta"), entry.get("k"))
                report = SuiteReport(suite="load", anchor="monoid and theta validate", context=name)
                report.cases = 1
                report.fail(tuple(str(w) for w in err.violation.witness), "valid", str(err))
                report.verdict = "skipped: {}".format(err.violation.kind)
                self._log("-" * 60)
                self._log("Context %s skipped: %s", name, err)
                self.reports.append(report)
                reports.append(report)
                continue
            reports.extend(self.run_context(ctx))
        self._log("*" * 60)
        self._log(
            "%d reports, %d failing",
            len(reports),
            sum(not r.passed for r in reports),
        )
        return reports


def run_suite(ctx: BrxContext, name: str, params: Optional[SuiteParams] = None) -> SuiteReport:
    return VerifyManager(params or SuiteParams(), [name]).run_suite(ctx, name)


def run_all(matrix: List[dict], params: Optional[SuiteParams] = None, suites: Optional[List[str]] = None) -> List[SuiteReport]:
    return VerifyManager(params or SuiteParams(), suites or list(SUITES)).run_all(matrix)


def all_passed(reports: List[SuiteReport]) -> bool:
    return all(r.passed for r in reports)


def format_reports(reports: List[SuiteReport], fmt: str = "text", timing: bool = True) -> str:
    """
    Render reports as one JSON document or as text lines.

    :param reports: suite reports
    :param fmt: "text" or "json"
    :param timing: include wall times; identical runs without timing render identically
    :return: rendered reports
    """
    if fmt == "json":
        return json.dumps(
            {
                "passed": all_passed(reports),
                "reports": [r.to_dict(timing=timing) for r in reports],
            },
            indent=2,
            sort_keys=False,
        )
    if fmt != "text":
        raise ValueError("Invalid setting for 'format': {}".format(fmt))
    lines = []
    for r in reports:
        line = "{} {:22s} {:18s} cases={} {}".format(
            "PASS" if r.passed else "FAIL", r.suite, r.context, r.cases, r.verdict
        )
        if timing:
            line += " ({} ms)".format(r.ms)
        lines.append(line)
        for f in r.failures:
            lines.append("    inputs: {}".format(" | ".join(f.inputs)))
            lines.append("    expected: {}  actual: {}".format(f.expected, f.actual))
            if f.replay:
                lines.append("    replay: {}".format(f.replay))
        if r.failed > len(r.failures):
            lines.append("    ... {} more failures".format(r.failed - len(r.failures)))
    lines.append("{}: {} reports, {} failing".format(
        "PASS" if all_passed(reports) else "FAIL", len(reports), sum(not r.passed for r in reports)
    ))
    return "\n".join(lines)
