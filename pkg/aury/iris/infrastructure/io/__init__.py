"""文件格式基础设施。

- nir：NIR1 归一化虹膜容器
- pnm：PGM 眼部图像、PBM 掩码
- manifest：数据集清单 CSV
"""

from .exceptions import EmissionError, FormatError, IOLayerError, ManifestError
from .manifest import (
    OPTIONAL_COLUMNS,
    REQUIRED_COLUMNS,
    DatasetManifest,
    ManifestEntry,
    parse_manifest,
    write_manifest,
)
from .nir import (
    HEADER,
    HEADER_SIZE,
    MAGIC,
    decode_nir,
    encode_nir,
    load_nir,
    load_set,
    nir_filename,
    save_nir,
    save_set,
)
from .pnm import read_pbm, read_pgm, write_pbm, write_pgm

__all__ = [
    "HEADER",
    "HEADER_SIZE",
    "MAGIC",
    "OPTIONAL_COLUMNS",
    "REQUIRED_COLUMNS",
    "DatasetManifest",
    "EmissionError",
    "FormatError",
    "IOLayerError",
    "ManifestEntry",
    "ManifestError",
    "decode_nir",
    "encode_nir",
    "load_nir",
    "load_set",
    "nir_filename",
    "parse_manifest",
    "read_pbm",
    "read_pgm",
    "save_nir",
    "save_set",
    "write_manifest",
    "write_pbm",
    "write_pgm",
]
