"""Command-line verification harness.

Examples::

    lieradon --list-suites
    lieradon verify lemmas --m 3 --m 4 --max-degree 4 --report out.json
    lieradon verify inversion-hua --m 3 --max-degree 5 --frame random
    lieradon kernel dump --type K --m 3 --k 2
    lieradon mc-crosscheck --suite stiefel --samples 100000 --seed 42

Exit status is 0 exactly when every checked identity holds (or lies
within the statistical bounds for Monte-Carlo suites).
"""

from __future__ import annotations

import json
import sys

import click

from .suites import SuiteConfig, list_suites, mc_crosscheck_records, run_suite
from .zonal import zonal_harmonic, zonal_monogenic


def _print_suites(ctx, param, value):
    if not value or ctx.resilient_parsing:
        return
    for name in list_suites():
        click.echo(name)
    ctx.exit(0)


@click.group()
@click.option("--list-suites", is_flag=True, callback=_print_suites,
              expose_value=False, is_eager=True,
              help="List the available verification suites and exit.")
def main():
    """Exact verification CLI for the Lie-sphere transform library."""


def _config_options(fn):
    fn = click.option("--m", "m_values", type=int, multiple=True,
                      default=(3, 4, 5), show_default=True,
                      help="Algebra dimensions (repeatable).")(fn)
    fn = click.option("--max-degree", type=int, default=4, show_default=True)(fn)
    fn = click.option("--frame", "frame_mode",
                      type=click.Choice(["canonical", "random"]),
                      default="canonical", show_default=True)(fn)
    fn = click.option("--seed", type=int, default=1, show_default=True)(fn)
    fn = click.option("--samples", "mc_samples", type=int, default=100_000,
                      show_default=True, help="Monte-Carlo sample count.")(fn)
    fn = click.option("--report", "report_path", type=click.Path(dir_okay=False),
                      default="", help="Write the JSON report here.")(fn)
    fn = click.option("--jobs", type=int, default=1, show_default=True,
                      help="Case-level worker processes.")(fn)
    return fn


@main.command()
@click.argument("suite", type=click.Choice(sorted(list_suites())))
@_config_options
def verify(suite, m_values, max_degree, frame_mode, seed, mc_samples,
           report_path, jobs):
    """Run one exact verification suite and report pass/fail per case."""
    cfg = SuiteConfig(m_values=m_values, max_degree=max_degree,
                      frame_mode=frame_mode, seed=seed, mc_samples=mc_samples,
                      report_path=report_path, jobs=jobs)
    report = run_suite(suite, cfg)
    for case in report["cases"]:
        if not case["status"].endswith("pass"):
            click.echo(f"FAIL {case['case_id']}: {case['details']}")
    click.echo(f"{suite}: {report['passed']}/{len(report['cases'])} cases passed")
    if report_path:
        click.echo(f"report written to {report_path}")
    sys.exit(0 if report["all_passed"] else 1)


@main.group()
def kernel():
    """Inspect the exactly-constructed kernels."""


@kernel.command("dump")
@click.option("--type", "kind", type=click.Choice(["K", "C"]), required=True,
              help="K: zonal harmonic; C: zonal monogenic.")
@click.option("--m", type=int, required=True)
@click.option("--k", type=int, required=True)
def kernel_dump(kind, m, k):
    """Emit the serialized zonal kernel polynomial."""
    builder = zonal_harmonic if kind == "K" else zonal_monogenic
    click.echo(builder(m, k).body.to_text(), nl=False)


@main.command("mc-crosscheck")
@click.option("--suite", "subset",
              type=click.Choice(["stiefel", "sphere", "lie", "all"]),
              default="all", show_default=True)
@click.option("--m", "m_values", type=int, multiple=True, default=(3, 4, 5),
              show_default=True)
@click.option("--samples", type=int, default=100_000, show_default=True)
@click.option("--seed", type=int, default=42, show_default=True)
@click.option("--report", "report_path", type=click.Path(dir_okay=False),
              default="", help="Write the JSON records here.")
def mc_crosscheck(subset, m_values, samples, seed, report_path):
    """Cross-check exact integrals against the seeded Monte-Carlo oracle."""
    cfg = SuiteConfig(m_values=m_values, mc_samples=samples, seed=seed)
    records = mc_crosscheck_records(subset, cfg)
    text = json.dumps(records, indent=2, sort_keys=True)
    click.echo(text)
    if report_path:
        with open(report_path, "w") as fh:
            fh.write(text + "\n")
    worst = max((r["z_score"] for r in records), default=0.0)
    sys.exit(0 if worst < 5.0 else 1)


if __name__ == "__main__":
    main()
