#!/usr/bin/env python3
"""
Corpus build and crosscheck script for the 1-perfect orientation workbench
Run on a schedule or manually

This script:
1. Enumerates the connected graphs for each n and fills the corpus cache
2. Runs the crosscheck suites over them
3. Stores the disagreement report and writes a snapshot for the dashboard
"""
import json
import logging
import sys
from datetime import datetime
from pathlib import Path

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

import config
from workbench.corpus import enumerate_connected
from workbench.crosscheck import crosscheck
from workbench.storage import CorpusCache, ReportStore

logger = logging.getLogger("update_corpus")

# Published counts of connected graphs (OEIS A001349)
EXPECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


def log(message: str):
    logger.info(message)


def update_corpus(cache: CorpusCache, n_max: int) -> dict:
    """Enumerate and cache the connected graphs for 1..n_max"""
    log("Building connected-graph corpus...")
    results = {}
    try:
        for n in range(1, n_max + 1):
            count = len(enumerate_connected(n, cache=cache, progress=sys.stderr.isatty()))
            results[n] = count
            expected = EXPECTED_COUNTS.get(n)
            marker = "" if expected in (None, count) else f" (EXPECTED {expected})"
            log(f"  n={n}: {count} graphs{marker}")
            if expected is not None and expected != count:
                results['error'] = f"n={n}: {count} graphs, expected {expected}"
    except Exception as e:
        log(f"  ERROR: {e}")
        results['error'] = str(e)
    return results


def run_crosscheck(store: ReportStore, n_max: int) -> dict:
    log(f"Running crosscheck up to n={n_max}...")
    results = {}
    try:
        report = crosscheck(n_max, workers=config.WORKERS)
        results['graphs_checked'] = report.graphs_checked
        results['disagreements'] = len(report.disagreements)
        results['elapsed_seconds'] = round(report.elapsed, 1)
        results['per_suite'] = report.summary_frame().to_dict(orient='records')
        store.save_dataframe(f"crosscheck_n{n_max}", report.to_dataframe())
        store.save_dataframe(f"crosscheck_n{n_max}_summary", report.summary_frame())
        log(f"  {report.graphs_checked} graphs, {len(report.disagreements)} disagreements")
        if not report.ok:
            results['error'] = f"{len(report.disagreements)} disagreements"
    except Exception as e:
        log(f"  ERROR: {e}")
        results['error'] = str(e)
    return results


def generate_snapshot(results: dict, snapshot_file: Path):
    """Write a JSON snapshot of the run"""
    snapshot = {
        'updated_at': datetime.now().isoformat(),
        'results': results,
        'status': 'success' if not any('error' in r for r in results.values() if isinstance(r, dict)) else 'partial'
    }
    with open(snapshot_file, 'w') as f:
        json.dump(snapshot, f, indent=2, default=str)
    log(f"Snapshot saved to {snapshot_file}")


def main(n_max: int = None):
    config.setup_logging()
    n_max = n_max or config.LIMITS["builtin_enumeration_n"]

    log("=" * 60)
    log("1-Perfect Orientation Workbench - Corpus Update")
    log("=" * 60)

    cache = CorpusCache()
    store = ReportStore()
    if config.FORCE_REFRESH:
        log("Force refresh enabled - clearing corpus cache")
        cache.clear()

    results = {
        'corpus': update_corpus(cache, n_max),
        'crosscheck': run_crosscheck(store, n_max),
    }
    generate_snapshot(results, config.SNAPSHOT_FILE)

    log("=" * 60)
    log("Update complete!")
    log("=" * 60)

    has_errors = any('error' in r for r in results.values() if isinstance(r, dict))
    return 1 if has_errors else 0


if __name__ == "__main__":
    sys.exit(main(int(sys.argv[1]) if len(sys.argv) > 1 else None))
