"""`solve` command: credible set, equivalence classes and arc statistics."""

from pathlib import Path

from credible_networks.application.use_cases.learn_credible_set import LearnResult
from credible_networks.cli.container import (
    get_dataset_repository,
    get_learn_use_case,
    get_score_file_repository,
    get_verify_use_case,
)
from credible_networks.cli.run_config import RunConfig
from credible_networks.domain.entities.credible_set import EpsilonSpec
from credible_networks.domain.enums.data_format import DataFormat
from credible_networks.infrastructure.writers.report_writer import (
    arc_frame,
    format_credible_set,
    format_summary,
    mec_frame,
    write_csv,
    write_text,
)
from credible_networks.logger import get_logger

logger = get_logger(__name__)


def learn(config: RunConfig, min_epsilon: float = 0.0) -> LearnResult:
    """Run the pipeline on a dataset or score file input."""
    spec = config.epsilon_spec() or EpsilonSpec.direct(0.0)
    use_case = get_learn_use_case()
    if config.input_format is DataFormat.SCORES:
        lists = get_score_file_repository().load(config.input)
        return use_case.from_lists(lists, spec, limit=config.limit, min_epsilon=min_epsilon)
    dataset = get_dataset_repository().load(config.input, config.input_format)
    return use_case.from_dataset(
        dataset,
        config.function,
        config.alpha,
        spec,
        limit=config.limit,
        hard_cap=config.max_parents,
        jobs=config.jobs,
        min_epsilon=min_epsilon,
    )


def output_dir(config: RunConfig) -> Path:
    """Output directory, created if missing."""
    out = config.out or Path(".")
    out.mkdir(parents=True, exist_ok=True)
    return out


def run(config: RunConfig) -> int:
    """Write credible_set.tsv, mec.csv and arcs.csv; print the summary line."""
    result = learn(config)
    verification = get_verify_use_case().execute(result.credible_set, result.lists)
    if not verification.ok:
        logger.warning("Credible set failed verification", failures=verification.failures)
    out = output_dir(config)
    names = result.lists.variables
    write_text(format_credible_set(result.credible_set, names), out / "credible_set.tsv")
    write_csv(mec_frame(result.partition), out / "mec.csv")
    write_csv(arc_frame(result.partition, names), out / "arcs.csv")
    print(
        format_summary(
            result.lists.n_variables, result.n_instances, result.credible_set, result.partition
        )
    )
    logger.info("Solve command finished", out=str(out))
    return 0
