"""`report` command: deviation curve and Bayes factor sweep."""

from credible_networks.application.use_cases.score_report import widest_epsilon
from credible_networks.cli.commands.solve import learn, output_dir
from credible_networks.cli.container import get_report_use_case
from credible_networks.cli.run_config import RunConfig
from credible_networks.domain.exceptions.config_exceptions import MissingEpsilonOptionError
from credible_networks.infrastructure.writers.report_writer import (
    deviation_frame,
    format_summary,
    sweep_frame,
    write_csv,
)
from credible_networks.logger import get_logger

logger = get_logger(__name__)


def run(config: RunConfig) -> int:
    """Enumerate at the widest requested window and write deviation.csv and sweep.csv.

    Raises:
        MissingEpsilonOptionError: If neither an epsilon option nor --sweep is given
    """
    if config.epsilon_spec() is None and not config.sweep:
        raise MissingEpsilonOptionError("report needs --sweep or one of --epsilon, --bf, --rho")
    result = learn(config, min_epsilon=widest_epsilon(None, config.sweep))
    report = get_report_use_case()
    out = output_dir(config)
    write_csv(
        deviation_frame(report.deviation_curve(result.credible_set, config.sweep)),
        out / "deviation.csv",
    )
    write_csv(
        sweep_frame(report.sweep_summary(result.credible_set, config.sweep)),
        out / "sweep.csv",
    )
    print(
        format_summary(
            result.lists.n_variables, result.n_instances, result.credible_set, result.partition
        )
    )
    logger.info("Report command finished", out=str(out), sweep=config.sweep)
    return 0
