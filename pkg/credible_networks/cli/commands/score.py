"""`score` command: dataset to pruned local score file."""

import sys

from credible_networks.cli.container import (
    get_dataset_repository,
    get_learn_use_case,
    get_score_file_repository,
)
from credible_networks.cli.run_config import RunConfig
from credible_networks.domain.enums.data_format import DataFormat
from credible_networks.domain.exceptions.config_exceptions import ConfigurationError
from credible_networks.logger import get_logger

logger = get_logger(__name__)


def run(config: RunConfig) -> int:
    """Score and prune a dataset, write the score file, print prune statistics to stderr.

    Raises:
        ConfigurationError: If the input is not a dataset or --out is missing
    """
    if config.input_format is DataFormat.SCORES:
        raise ConfigurationError("score needs a dataset input (native or csv)")
    if config.out is None:
        raise ConfigurationError("score needs --out FILE")
    dataset = get_dataset_repository().load(config.input, config.input_format)
    lists = get_learn_use_case().candidates(
        dataset,
        config.function,
        config.alpha,
        config.epsilon_spec(),
        hard_cap=config.max_parents,
        jobs=config.jobs,
    )
    get_score_file_repository().save(lists, config.out)
    sys.stderr.write(lists.stats.render())
    logger.info("Score command finished", out=str(config.out))
    return 0
