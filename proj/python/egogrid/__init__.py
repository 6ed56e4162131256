"""Tile-game simulation, egocentric observation transforms and an A2C harness.

The heavy lifting lives in the compiled `_core` extension; this package just
re-exports it.
"""

from ._core import (  # noqa: F401
    Action,
    Direction,
    GameId,
    GameState,
    LevelSet,
    LevelSpec,
    RenderConfig,
    RulesetParams,
    Status,
    TransformConfig,
    action_set,
    apply_pipeline,
    avatar_pose,
    builtin_sets,
    ego_to_world_action,
    enumerate_simple_zelda,
    generate_levels,
    init_state,
    load_experiment_config,
    mirror_level,
    parse_level,
    render,
    run_experiment,
    serialize_level,
    step,
    world_to_ego_action,
    write_png,
)

__all__ = [
    "Action",
    "Direction",
    "GameId",
    "GameState",
    "LevelSet",
    "LevelSpec",
    "RenderConfig",
    "RulesetParams",
    "Status",
    "TransformConfig",
    "action_set",
    "apply_pipeline",
    "avatar_pose",
    "builtin_sets",
    "ego_to_world_action",
    "enumerate_simple_zelda",
    "generate_levels",
    "init_state",
    "load_experiment_config",
    "mirror_level",
    "parse_level",
    "render",
    "run_experiment",
    "serialize_level",
    "step",
    "world_to_ego_action",
    "write_png",
]
