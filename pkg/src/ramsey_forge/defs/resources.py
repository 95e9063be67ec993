import dagster as dg

from engine import ArrowingEngine

from ramsey_forge.defs.assets import (
    apex_experiment_assets,
    clique_experiment_assets,
    sender_experiment_assets,
)

# -----------------------------
# Define jobs for each experiment group
# -----------------------------
clique_job = dg.define_asset_job(
    name="clique_experiments",
    selection=[asset.key for asset in clique_experiment_assets],
    description="Ramsey numbers, s upper bounds and the clique gadgets",
)

apex_job = dg.define_asset_job(
    name="apex_experiments",
    selection=[asset.key for asset in apex_experiment_assets],
    description="Apex gadget and simplicity witness for C_5",
)

sender_job = dg.define_asset_job(
    name="sender_experiments",
    selection=[asset.key for asset in sender_experiment_assets],
    description="Signal sender chaining",
)


# -----------------------------
# Define resources and definitions
# -----------------------------
@dg.definitions
def resources():
    return dg.Definitions(
        resources={
            # Exhaustive arrowing engine; worker count from the environment
            "engine": ArrowingEngine(threads=dg.EnvVar.int("RAMSEY_FORGE_THREADS")),
        },
        jobs=[clique_job, apex_job, sender_job],
    )
