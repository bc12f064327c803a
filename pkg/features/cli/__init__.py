"""
CLI Feature
-----------
Command-line front end, parallel range partitioning and report output.
"""
from .commands import (
    build_parser,
    load_config,
    run_cli,
)
from .parallel import (
    SCANNERS,
    partition_range,
    run_verification,
    worker_count,
)
from .report import (
    Task,
    SearchReport,
    emit,
    get_table_data,
    to_json_line,
)

__all__ = [
    # Entry points
    'build_parser',
    'load_config',
    'run_cli',
    # Parallel verification
    'SCANNERS',
    'partition_range',
    'worker_count',
    'run_verification',
    # Reports
    'Task',
    'SearchReport',
    'emit',
    'get_table_data',
    'to_json_line',
]
