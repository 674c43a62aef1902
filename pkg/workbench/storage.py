"""
Corpus caching and report storage utilities
"""
import logging
import re
from datetime import datetime
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Optional

import pandas as pd

import config

logger = logging.getLogger(__name__)


class CorpusCache:
    """Graph6 corpora on disk: one ``.g6`` file per key, one graph per line"""

    SUFFIX = ".g6"

    def __init__(self, cache_dir: Path = None):
        self.cache_dir = Path(cache_dir or config.CACHE_DIR)
        self.cache_dir.mkdir(parents=True, exist_ok=True)

    def path_for(self, key: str) -> Path:
        name = re.sub(r"[^\w.-]", "_", key)
        if not name.endswith(self.SUFFIX):
            name += self.SUFFIX
        return self.cache_dir / name

    def get(self, key: str, max_age_seconds: Optional[int] = None) -> Optional[List[str]]:
        """
        Cached graph6 codes for ``key``

        Args:
            key: Corpus key, e.g. ``connected_n5.g6``
            max_age_seconds: Treat older files as missing; None keeps
                corpora forever (they never change)

        Returns:
            The codes in file order, or None if missing, stale or unreadable
        """
        path = self.path_for(key)
        if not path.exists():
            return None

        if max_age_seconds is not None:
            age = datetime.now() - datetime.fromtimestamp(path.stat().st_mtime)
            if age.total_seconds() > max_age_seconds:
                logger.debug("Corpus %s is stale (%.0fs old)", key, age.total_seconds())
                return None

        try:
            return path.read_text(encoding="ascii").split()
        except (OSError, UnicodeDecodeError) as e:
            logger.warning("Error reading corpus %s: %s", key, e)
            return None

    def set(self, key: str, codes: Iterable[str]) -> bool:
        codes = list(codes)
        try:
            self.path_for(key).write_text("".join(f"{c}\n" for c in codes), encoding="ascii")
            logger.debug("Cached %d graphs under %s", len(codes), key)
            return True
        except (OSError, UnicodeEncodeError) as e:
            logger.warning("Error writing corpus %s: %s", key, e)
            return False

    def get_or_fetch(self, key: str, build_fn: Callable[[], List[str]],
                     max_age_seconds: Optional[int] = None) -> List[str]:
        """Read ``key``, or build it with ``build_fn`` and write it back"""
        cached = None if config.FORCE_REFRESH else self.get(key, max_age_seconds)
        if cached is not None:
            return cached

        codes = build_fn()
        if codes is not None:
            self.set(key, codes)
        return codes

    def clear(self, key: str = None):
        """Delete one corpus, or all of them when ``key`` is None"""
        targets = [self.path_for(key)] if key else self.cache_dir.glob(f"*{self.SUFFIX}")
        for path in targets:
            if path.exists():
                path.unlink()

    def get_cache_info(self) -> dict:
        info = {'items': [], 'total_size': 0}
        for path in sorted(self.cache_dir.glob(f"*{self.SUFFIX}")):
            stat = path.stat()
            modified = datetime.fromtimestamp(stat.st_mtime)
            info['items'].append({
                'file': path.name,
                'graphs': sum(1 for line in path.read_text(encoding="ascii", errors="replace").splitlines() if line),
                'size': stat.st_size,
                'modified': modified.isoformat(),
            })
            info['total_size'] += stat.st_size
        return info


class ReportStore:
    """
    Persistent storage for crosscheck reports.
    Parquet when a parquet engine is installed, CSV otherwise.
    """

    def __init__(self, store_dir: Path = None):
        self.store_dir = Path(store_dir or config.STORE_DIR)
        self.store_dir.mkdir(parents=True, exist_ok=True)

    def save_dataframe(self, name: str, df: pd.DataFrame) -> bool:
        try:
            df.to_parquet(self.store_dir / f"{name}.parquet", index=False)
            return True
        except Exception as e:
            logger.info("Parquet unavailable for %s (%s); writing CSV", name, e)
            try:
                df.to_csv(self.store_dir / f"{name}.csv", index=False)
                return True
            except Exception as e:
                logger.error("Error saving DataFrame %s: %s", name, e)
                return False

    def load_dataframe(self, name: str) -> Optional[pd.DataFrame]:
        parquet_path = self.store_dir / f"{name}.parquet"
        csv_path = self.store_dir / f"{name}.csv"
        try:
            if parquet_path.exists():
                return pd.read_parquet(parquet_path)
            if csv_path.exists():
                return pd.read_csv(csv_path)
        except Exception as e:
            logger.error("Error loading DataFrame %s: %s", name, e)
        return None

    def append_dataframe(self, name: str, new_data: pd.DataFrame,
                         key_columns=('graph6', 'suite')) -> bool:
        """Append rows, keeping the newest row per key"""
        existing = self.load_dataframe(name)
        if existing is None:
            return self.save_dataframe(name, new_data)

        combined = pd.concat([existing, new_data], ignore_index=True)
        keys = [c for c in key_columns if c in combined.columns]
        if keys:
            combined = combined.drop_duplicates(subset=keys, keep='last')
            combined = combined.sort_values(keys).reset_index(drop=True)
        return self.save_dataframe(name, combined)

    def list_datasets(self) -> list:
        return sorted({f.stem for f in self.store_dir.glob('*.*') if f.suffix in ('.parquet', '.csv')})

    def export_excel(self, path: Path, sheets: Dict[str, pd.DataFrame]) -> Path:
        """Write several frames into one workbook, one sheet each"""
        path = Path(path)
        with pd.ExcelWriter(path, engine='openpyxl') as writer:
            for sheet, df in sheets.items():
                df.to_excel(writer, sheet_name=sheet[:31], index=False)
        return path
