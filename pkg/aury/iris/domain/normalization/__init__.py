"""归一化模块：橡皮膜展开与遮挡掩码。"""

from .masks import attach_mask, specular_mask_heuristic
from .rubber_sheet import polar_sample, sample_coordinates, unwrap

__all__ = [
    "attach_mask",
    "polar_sample",
    "sample_coordinates",
    "specular_mask_heuristic",
    "unwrap",
]
