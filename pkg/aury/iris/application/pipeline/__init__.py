"""流水线编排：每个子命令一个 run_* 函数。"""

from .runner import (
    EYES_DIR,
    MANIFEST_FILE,
    NORMALIZED_DIR,
    PYRAMID_DIR,
    REJECTIONS_FILE,
    SYNTH_DIR,
    StageSummary,
    level_dir,
    run_compare,
    run_dof_check,
    run_normalize,
    run_pyramid,
    run_stats,
    run_sweep,
    run_synth,
)

__all__ = [
    "EYES_DIR",
    "MANIFEST_FILE",
    "NORMALIZED_DIR",
    "PYRAMID_DIR",
    "REJECTIONS_FILE",
    "SYNTH_DIR",
    "StageSummary",
    "level_dir",
    "run_compare",
    "run_dof_check",
    "run_normalize",
    "run_pyramid",
    "run_stats",
    "run_sweep",
    "run_synth",
]
