import click

from skewcat.cli.common import emit, handle_errors, output_options
from skewcat.modules.harness import kleisli_run, perturbation_run, redundancy_run
from skewcat.utils.config import HarnessConfig
from skewcat.utils.logger import setup_logger

logger = setup_logger(__name__)

HELP = "Seeded runs over generated warpings, algebras and skew monoidal categories."
EPILOG = """
[WORKFLOW]
perturbation : mutate one component of alpha/lambda/rho or v/k/v0 and count detections
redundancy   : warping axioms 3-5 and algebra axiom 3, exhaustive and random
kleisli      : B_T against check_skew_bicat, with the per-axiom trace

Results are merged in seed order, so the report does not depend on --workers.

[EXAMPLE]
    $ skewcat harness perturbation --mutations 500
    $ skewcat harness redundancy --seeds 200 --max-hom-size 3 --format json -o redundancy.json
"""

RUNS = {
    "perturbation": perturbation_run,
    "redundancy": redundancy_run,
    "kleisli": kleisli_run,
}


def harness_options(func):
    defaults = HarnessConfig()
    for option in reversed([
        click.option("--seeds", type=int, default=defaults.seeds, show_default=True,
                     help="Random instances per randomized family"),
        click.option("--mutations", type=int, default=defaults.mutations, show_default=True,
                     help="Seeded mutations (perturbation only)"),
        click.option("--max-hom-size", "random_bound", type=int, default=defaults.random_bound,
                     show_default=True, help="Largest Z/n drawn by random generators"),
        click.option("--base-seed", type=int, default=defaults.base_seed, show_default=True,
                     help="Offset added to every seed"),
        click.option("--threshold", type=float, default=defaults.detection_threshold, show_default=True,
                     help="Required detection rate"),
        click.option("-w", "--workers", type=int, default=defaults.workers,
                     help="Worker processes (default: cpu_count - 1)"),
    ]):
        func = option(func)
    return func


@click.group(name="harness", help=HELP, epilog=EPILOG)
def main():
    pass


def _run(name: str, run):
    @main.command(name=name, help=run.__doc__.strip().splitlines()[0])
    @harness_options
    @output_options
    def command(seeds, mutations, random_bound, base_seed, threshold, workers, fmt, out):
        config = HarnessConfig(seeds=seeds, mutations=mutations, random_bound=random_bound,
                               base_seed=base_seed, detection_threshold=threshold, workers=workers)
        with handle_errors():
            report = run(config)
        emit(report, fmt, out)

    return command


for _name, _run_func in RUNS.items():
    _run(_name, _run_func)


if __name__ == '__main__':
    main()
