"""
Machine層

チューリング機械の実行・符号化・列挙・サイクル検出を提供します。
"""

from .catalog import CATALOG, get_machine
from .codec import (
    CodeLayout,
    MachineCode,
    class_count,
    code_bit_length,
    code_from_rank,
    decode,
    encode,
    enumerate_machines,
    iter_class,
    rank_of_code,
)
from .cycle import DEFAULT_CAP_VISITED, CycleDetector, detect_cycle
from .description import format_machine_text, load_machine_file, parse_machine_text
from .simulator import run, step, trace
from .tape import Tape

__all__ = [
    "CATALOG",
    "DEFAULT_CAP_VISITED",
    "CodeLayout",
    "CycleDetector",
    "MachineCode",
    "Tape",
    "class_count",
    "code_bit_length",
    "code_from_rank",
    "decode",
    "detect_cycle",
    "encode",
    "enumerate_machines",
    "format_machine_text",
    "get_machine",
    "iter_class",
    "load_machine_file",
    "parse_machine_text",
    "rank_of_code",
    "run",
    "step",
    "trace",
]
