"""比对模块：像素匹配谓词、单对汉明距离和全配对引擎。"""

from .engine import DEFAULT_BLOCK_SIZE, PairEngine, all_pairs, hamming_pair, pixels_match, validate_set
from .reference import reference_all_pairs

__all__ = [
    "DEFAULT_BLOCK_SIZE",
    "PairEngine",
    "all_pairs",
    "hamming_pair",
    "pixels_match",
    "reference_all_pairs",
    "validate_set",
]
