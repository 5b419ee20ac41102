"""合成数据模块：带解析基准的纹理、遮挡掩码和眼部图像。"""

from .eyes import render_eye, synth_eyes
from .occlusion import MASK_STREAM, gen_occlusion, mask_rng, occlusion_mask
from .textures import (
    correlated_texture,
    gen_correlated,
    gen_iid,
    generate,
    iid_texture,
    image_rng,
    synth_ids,
)

__all__ = [
    "MASK_STREAM",
    "correlated_texture",
    "gen_correlated",
    "gen_iid",
    "gen_occlusion",
    "generate",
    "iid_texture",
    "image_rng",
    "mask_rng",
    "occlusion_mask",
    "render_eye",
    "synth_eyes",
    "synth_ids",
]
