"""Dagster entry point: everything under defs/ (experiment assets, engine resource, jobs)."""

from pathlib import Path

import dagster as dg


@dg.definitions
def defs() -> dg.Definitions:
    return dg.load_from_defs_folder(path_within_project=Path(__file__).parent)
