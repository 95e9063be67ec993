from .command_config import CommandConfig, default_threads
from .config_schema import ConstructionConfig, ExperimentConfig
from .construction_config import (
    CONSTRUCTION_CONFIGS,
    get_construction_config,
    list_all_constructions,
    resolve_params,
)
from .experiment_config import EXPERIMENT_CONFIGS, get_experiment_config, list_all_experiments

__all__ = [
    "CommandConfig",
    "default_threads",
    "ConstructionConfig",
    "ExperimentConfig",
    "CONSTRUCTION_CONFIGS",
    "get_construction_config",
    "list_all_constructions",
    "resolve_params",
    "EXPERIMENT_CONFIGS",
    "get_experiment_config",
    "list_all_experiments",
]
