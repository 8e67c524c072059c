"""Writers for credible sets, equivalence classes, arcs and report tables."""

from pathlib import Path
from typing import Union

import pandas as pd

from credible_networks.application.use_cases.score_report import DeviationRow, SweepRow
from credible_networks.domain.entities.credible_set import CredibleSet
from credible_networks.domain.entities.dag import Dag
from credible_networks.domain.entities.mec import MecPartition
from credible_networks.logger import get_logger

logger = get_logger(__name__)

PathLike = Union[str, Path]


def network_record(dag: Dag, names: tuple[str, ...]) -> str:
    """`child:parent,parent;...` with children and parents in ascending name order."""
    families = sorted(
        (names[child], sorted(names[p] for p in parents))
        for child, parents in enumerate(dag.parent_sets)
    )
    return ";".join(f"{child}:{','.join(parents)}" for child, parents in families)


def format_credible_set(credible_set: CredibleSet, names: tuple[str, ...]) -> str:
    """Header line then one `score<TAB>record` line per network."""
    lines = [
        f"#opt={credible_set.opt_score!r} eps={credible_set.epsilon!r} "
        f"truncated={int(credible_set.truncated)}"
    ]
    lines.extend(f"{dag.score!r}\t{network_record(dag, names)}" for dag in credible_set.networks)
    return "\n".join(lines) + "\n"


def format_summary(
    n_variables: int,
    n_instances: Union[int, None],
    credible_set: CredibleSet,
    partition: MecPartition,
) -> str:
    """One-line run summary."""
    return (
        f"n={n_variables} N={'-' if n_instances is None else n_instances} "
        f"OPT={credible_set.opt_score!r} eps={credible_set.epsilon!r} "
        f"|G|={len(credible_set)} |M|={len(partition.classes)} "
        f"truncated={int(credible_set.truncated)}"
    )


def mec_frame(partition: MecPartition) -> pd.DataFrame:
    """One row per equivalence class, best first."""
    return pd.DataFrame(
        {
            "mec_id": range(1, len(partition.classes) + 1),
            "size": [c.size for c in partition.classes],
            "best_score": [c.best_score for c in partition.classes],
            "representative": [
                c.representative.canonical_key.decode("ascii") for c in partition.classes
            ],
        },
        columns=["mec_id", "size", "best_score", "representative"],
    )


def arc_frame(partition: MecPartition, names: tuple[str, ...]) -> pd.DataFrame:
    """Every ordered pair of distinct variables, sorted by (from, to) name."""
    frame = pd.DataFrame(
        {
            "from": [names[a.source] for a in partition.arcs],
            "to": [names[a.target] for a in partition.arcs],
            "presence_count": [a.presence_count for a in partition.arcs],
            "weighted_probability": [a.weighted_probability for a in partition.arcs],
        },
        columns=["from", "to", "presence_count", "weighted_probability"],
    )
    return frame.sort_values(["from", "to"], kind="stable").reset_index(drop=True)


def deviation_frame(rows: list[DeviationRow]) -> pd.DataFrame:
    """Deviation curve with reference rows (rank left empty)."""
    frame = pd.DataFrame(
        # JSON mode would turn an infinite Bayes factor into null
        [{**row.model_dump(mode="json"), "bayes_factor": row.bayes_factor} for row in rows],
        columns=["kind", "rank", "deviation", "bayes_factor", "evidence"],
    )
    frame["rank"] = frame["rank"].astype("Int64")
    return frame


def sweep_frame(rows: list[SweepRow]) -> pd.DataFrame:
    """Bayes factor sweep table."""
    frame = pd.DataFrame(
        [row.model_dump() for row in rows],
        columns=["bf", "epsilon", "networks", "classes", "complete"],
    )
    frame["complete"] = frame["complete"].astype(int)
    return frame


def write_csv(frame: pd.DataFrame, path: PathLike) -> None:
    """Write a table as UTF-8 CSV with LF line endings."""
    frame.to_csv(path, index=False, lineterminator="\n", encoding="utf-8")
    logger.info("Table written", path=str(path), rows=len(frame))


def write_text(text: str, path: PathLike) -> None:
    """Write UTF-8 text with LF line endings."""
    Path(path).write_text(text, encoding="utf-8", newline="\n")
    logger.info("File written", path=str(path))
