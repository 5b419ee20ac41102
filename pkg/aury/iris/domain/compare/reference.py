"""朴素参考实现：逐对、逐像素的双重循环。

只用于小规模集合上校验向量化引擎，不做任何向量化。
"""

from __future__ import annotations

from collections.abc import Sequence

from aury.iris.domain.models import AllPairsReport, CompareConfig, NormalizedIris, PairResult

from .engine import pixels_match, validate_set


def reference_all_pairs(images: Sequence[NormalizedIris], cfg: CompareConfig | None = None) -> AllPairsReport:
    cfg = cfg or CompareConfig()
    validate_set(images)
    results: list[PairResult] = []
    same_subject = 0
    below_overlap = 0
    for a in range(len(images)):
        for b in range(a + 1, len(images)):
            x, y = images[a], images[b]
            if cfg.exclude_same_subject and x.subject_id == y.subject_id:
                same_subject += 1
                continue
            overlap = 0
            mismatches = 0
            for r in range(x.rows):
                for c in range(x.cols):
                    if not (x.mask[r, c] and y.mask[r, c]):
                        continue
                    overlap += 1
                    if not pixels_match(float(x.intensities[r, c]), float(y.intensities[r, c]), cfg.tolerance):
                        mismatches += 1
            if overlap < cfg.min_overlap:
                below_overlap += 1
                continue
            id_a, id_b = sorted((x.image_id, y.image_id))
            results.append(PairResult(id_a, id_b, overlap, mismatches))
    results.sort(key=lambda p: p.key)
    return AllPairsReport(results, len(images), same_subject, below_overlap)


__all__ = [
    "reference_all_pairs",
]
