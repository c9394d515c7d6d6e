"""On-disk census cache: one graph6 file per (n, filter) plus a JSON manifest."""

import json
import os
import tempfile
from pathlib import Path

from .enumeration import EnumerationFilter, enumerate_graphs
from .errors import BudgetError
from .graph6 import encode_graph6, read_graph6_file

CACHE_ENV = "TURANLAB_CACHE"
DEFAULT_CACHE_DIR = ".turanlab-cache"
MANIFEST = "manifest.json"


def default_cache_root():
    return Path(os.environ.get(CACHE_ENV, DEFAULT_CACHE_DIR))


def census_filename(n, forbidden=None):
    name = f"census_n{n}"
    if forbidden is not None:
        name += f"_free_{forbidden.key}"
    return name + ".g6"


def atomic_write_text(path, text):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name + ".", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="ascii") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


class CensusCache:
    """Census provider for :mod:`turanlab.extremal` backed by graph6 files."""

    def __init__(self, root=None, max_n=None, workers=1):
        self.root = Path(root) if root is not None else default_cache_root()
        self.max_n = max_n
        self.workers = workers
        self._memory = {}
        self.hits = 0
        self.misses = 0

    def path(self, n, forbidden=None):
        return self.root / census_filename(n, forbidden)

    def manifest(self):
        p = self.root / MANIFEST
        if not p.exists():
            return {}
        with open(p, encoding="utf-8") as fh:
            return json.load(fh)

    def _record(self, n, forbidden, count):
        data = self.manifest()
        data[census_filename(n, forbidden)] = {
            "n": n,
            "forbidden": str(forbidden) if forbidden is not None else None,
            "count": count,
        }
        atomic_write_text(self.root / MANIFEST, json.dumps(data, indent=2, sort_keys=True) + "\n")

    def __call__(self, n, forbidden=None):
        key = (n, forbidden)
        if key in self._memory:
            return self._memory[key]
        if self.max_n is not None and n > self.max_n:
            raise BudgetError(f"census on {n} vertices exceeds the budget max_n={self.max_n}")
        p = self.path(n, forbidden)
        if p.exists():
            self.hits += 1
            graphs = tuple(read_graph6_file(p))
        else:
            self.misses += 1
            graphs = tuple(enumerate_graphs(n, EnumerationFilter(forbidden), workers=self.workers))
            atomic_write_text(p, "".join(encode_graph6(g) + "\n" for g in graphs))
            self._record(n, forbidden, len(graphs))
        self._memory[key] = graphs
        return graphs
