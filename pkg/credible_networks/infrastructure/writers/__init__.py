"""Report writers."""

from credible_networks.infrastructure.writers.report_writer import (
    arc_frame,
    deviation_frame,
    format_credible_set,
    format_summary,
    mec_frame,
    network_record,
    sweep_frame,
    write_csv,
    write_text,
)

__all__ = [
    "arc_frame",
    "deviation_frame",
    "format_credible_set",
    "format_summary",
    "mec_frame",
    "network_record",
    "sweep_frame",
    "write_csv",
    "write_text",
]
