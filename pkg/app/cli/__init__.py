from app.cli.commands import (
    COMMANDS,
    cmd_analyze,
    cmd_census,
    cmd_sample,
    cmd_schur,
    cmd_table,
    cmd_trace,
    cmd_verify,
    resolve_field,
    resolve_g,
    run_command,
)

__all__ = [
    "COMMANDS",
    "cmd_analyze",
    "cmd_census",
    "cmd_sample",
    "cmd_schur",
    "cmd_table",
    "cmd_trace",
    "cmd_verify",
    "resolve_field",
    "resolve_g",
    "run_command",
]
