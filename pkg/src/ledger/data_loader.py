"""
账本与 Fano 三维簇表的加载
"""

from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import pandas as pd
import yaml
from pydantic import ValidationError

from ..invariants.hodge import validate_diamond
from ..utils.errors import LedgerError
from ..utils.logging_config import get_logger
from .models import CohomologyLedger, FanoFamily, K0Summary

logger = get_logger(__name__)

DATA_DIR = Path(__file__).parent / "data"
LEDGER_FILE = DATA_DIR / "ledgers.yaml"
FANO_TABLE_FILE = DATA_DIR / "fano_threefolds_rho5.txt"


@lru_cache(maxsize=None)
def _load_yaml(path: str) -> Dict[str, Any]:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = yaml.safe_load(handle)
    except (OSError, yaml.YAMLError) as e:
        raise LedgerError(f"Cannot read ledger data {path}: {e}") from e
    if not isinstance(data, dict):
        raise LedgerError(f"Ledger data {path} is not a mapping")
    return data


def _section(name: str, section: str, path: Optional[Union[str, Path]]) -> Any:
    data = _load_yaml(str(path or LEDGER_FILE))
    entries = data.get(section) or {}
    if name not in entries:
        raise LedgerError(
            f"No {section} entry named '{name}' (available: {', '.join(sorted(entries))})"
        )
    return entries[name]


def load_ledger(name: str, path: Optional[Union[str, Path]] = None) -> CohomologyLedger:
    raw = _section(name, "ledgers", path)
    try:
        return CohomologyLedger(name=name, **raw)
    except ValidationError as e:
        raise LedgerError(f"Invalid ledger '{name}': {e}") from e


def load_diamond(name: str, path: Optional[Union[str, Path]] = None) -> List[List[int]]:
    return validate_diamond(_section(name, "diamonds", path))


def load_k0(name: str, path: Optional[Union[str, Path]] = None) -> K0Summary:
    raw = _section(name, "k0", path)
    try:
        return K0Summary(**raw)
    except ValidationError as e:
        raise LedgerError(f"Invalid K0 summary '{name}': {e}") from e


@dataclass
class FanoThreefoldTable:
    """Fano 三维簇表：(id, rho, fec_flag) 及文件头元数据"""
    frame: pd.DataFrame
    version: int
    min_rho: int
    provenance: List[str] = field(default_factory=list)

    def families(self, min_rho: int = 0) -> List[FanoFamily]:
        rows = self.frame[self.frame["rho"] >= min_rho]
        return [
            FanoFamily(id=str(r.id), rho=int(r.rho), fec=bool(r.fec_flag))
            for r in rows.itertuples(index=False)
        ]


def _read_header(path: Path) -> Dict[str, str]:
    meta: Dict[str, str] = {}
    notes: List[str] = []
    with open(path, "r", encoding="utf-8") as handle:
        for line in handle:
            if not line.startswith("#"):
                break
            body = line[1:].strip()
            key, sep, value = body.partition(":")
            if sep and key in ("version", "min_rho"):
                meta[key] = value.strip()
            else:
                notes.append(body)
    meta["notes"] = "\n".join(notes)
    return meta


def load_fano_threefolds(path: Optional[Union[str, Path]] = None) -> FanoThreefoldTable:
    """读取 Fano 三维簇表（带 # 注释头的 CSV 文本）"""
    path = Path(path or FANO_TABLE_FILE)
    if not path.exists():
        raise LedgerError(f"Fano threefold table not found: {path}")
    meta = _read_header(path)
    try:
        frame = pd.read_csv(
            path,
            comment="#",
            skipinitialspace=True,
            dtype={"id": str, "rho": int},
            true_values=["true", "True", "1"],
            false_values=["false", "False", "0"],
        )
    except (ValueError, pd.errors.ParserError) as e:
        raise LedgerError(f"Malformed Fano threefold table {path}: {e}") from e

    missing = {"id", "rho", "fec_flag"} - set(frame.columns)
    if missing:
        raise LedgerError(f"Fano threefold table lacks columns: {sorted(missing)}")
    if frame["fec_flag"].dtype != bool:
        raise LedgerError("fec_flag column must contain only true/false")

    table = FanoThreefoldTable(
        frame=frame,
        version=int(meta.get("version", 1)),
        min_rho=int(meta.get("min_rho", frame["rho"].min())),
        provenance=[n for n in meta.get("notes", "").splitlines() if n],
    )
    logger.debug("fano_table_loaded", path=str(path), rows=len(frame), version=table.version)
    return table
