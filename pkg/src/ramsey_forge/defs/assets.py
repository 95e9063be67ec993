"""
Experiment assets.
Each desk-scale experiment becomes a construct_<name> asset (the built construction, or None)
feeding a verify_<name> asset (a pandas table of check results).
"""

from typing import Dict, Optional

import dagster as dg
import pandas as pd

from models import ColoredConstruction

from config.config_schema import ExperimentConfig
from config.construction_config import get_construction_config, resolve_params
from config.experiment_config import (
    APEX_EXPERIMENT_CONFIGS,
    CLIQUE_EXPERIMENT_CONFIGS,
    SENDER_EXPERIMENT_CONFIGS,
)
from engine import ArrowingEngine
from graphs.stats import stats_frame
from utils.debug_print import debug_print

from ramsey_forge.defs.checks import CHECKS


def create_experiment_assets(config: ExperimentConfig) -> list[dg.AssetsDefinition]:
    """
    Factory function to create the construct -> verify asset pair of one experiment.

    Args:
        config: ExperimentConfig from the experiment registry

    Returns:
        List of Dagster AssetsDefinition
    """
    construct_asset_name = f"construct_{config['name']}"
    verify_asset_name = f"verify_{config['name']}"
    check = CHECKS[config["check"]]

    @dg.asset(
        name=construct_asset_name,
        group_name=config["group_name"],
        metadata={"construction": config["construction"] or "none"},
    )
    def _construct(context: dg.OpExecutionContext, engine: ArrowingEngine) -> Optional[ColoredConstruction]:
        if config["construction"] is None:
            context.log.info(f"{config['name']} works on named graphs only; nothing to build.")
            return None

        builder = get_construction_config(config["construction"])["builder"]
        params = resolve_params(config["construction"], config["params"])
        context.log.info(f"Building {config['construction']} with {config['params']}...")
        construction = builder(params, engine)
        summary = construction.summary()
        debug_print(stats_frame([(config["name"], construction.graph)]))

        context.add_output_metadata(
            {
                "vertices": dg.MetadataValue.int(summary["n"]),
                "edges": dg.MetadataValue.int(summary["edges"]),
                "red_edges": dg.MetadataValue.int(summary["red"] or 0),
                "roles": dg.MetadataValue.int(len(summary["roles"])),
            }
        )
        return construction

    @dg.asset(
        name=verify_asset_name,
        group_name=config["group_name"],
        metadata={"check": config["check"], "description": config["description"]},
        ins={"construction": dg.AssetIn(key=construct_asset_name)},
    )
    def _verify(
        context: dg.OpExecutionContext,
        construction: Optional[ColoredConstruction],
        engine: ArrowingEngine,
    ) -> pd.DataFrame:
        context.log.info(f"Running check {config['check']} for {config['name']}...")
        try:
            rows = check(construction, config["params"], engine)
        except Exception as e:
            context.log.error(f"Check {config['check']} failed: {e}")
            raise

        df = pd.DataFrame(rows, columns=config["columns"])
        context.log.info(f"{config['name']}: {len(df)} rows")
        debug_print(df)

        context.add_output_metadata(
            {
                "rows": dg.MetadataValue.int(len(df)),
                "results": dg.MetadataValue.json(rows),
            }
        )
        return df

    return [_construct, _verify]


def generate_experiment_assets(selected: Dict[str, ExperimentConfig]) -> list[dg.AssetsDefinition]:
    """Asset pairs for every experiment of one group."""
    assets = []
    for config in selected.values():
        assets.extend(create_experiment_assets(config))
    return assets


clique_experiment_assets = generate_experiment_assets(CLIQUE_EXPERIMENT_CONFIGS)
apex_experiment_assets = generate_experiment_assets(APEX_EXPERIMENT_CONFIGS)
sender_experiment_assets = generate_experiment_assets(SENDER_EXPERIMENT_CONFIGS)
