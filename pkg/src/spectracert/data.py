"""Bundled data access: sporadic graphs, signings, character tables.

Files live in the package data directory and are integrity-checked
against manifest.json (sha256).  An external directory can override the
bundle via the SPECTRA_DATA_DIR environment variable or an explicit
data_dir argument; external files are trusted as-is but every consumer
re-verifies the mathematical content on load.
"""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path
from typing import Dict, List, Optional

from .exact import ExactMatrix
from .graphs import Graph, load_graph6, SignedGraph

BUNDLE_DIR = Path(__file__).parent / "data"
ENV_VAR = "SPECTRA_DATA_DIR"


class DataIntegrityError(ValueError):
    pass


def _manifest() -> Dict[str, str]:
    path = BUNDLE_DIR / "manifest.json"
    if not path.exists():
        return {}
    return json.loads(path.read_text())


def resolve(name: str, data_dir: Optional[str] = None) -> Optional[Path]:
    """Locate a data file: explicit dir, then env dir, then the bundle.

    Bundled files are checksum-verified; external overrides are not.
    """
    for d in (data_dir, os.environ.get(ENV_VAR)):
        if d:
            p = Path(d) / name
            if p.exists():
                return p
    p = BUNDLE_DIR / name
    if p.exists():
        digest = hashlib.sha256(p.read_bytes()).hexdigest()
        expected = _manifest().get(name)
        if expected is None:
            raise DataIntegrityError(f"{name} missing from manifest")
        if digest != expected:
            raise DataIntegrityError(f"checksum mismatch for {name}")
        return p
    return None


def load_bundled_graph(name: str, data_dir: Optional[str] = None) -> Graph:
    p = resolve(f"{name}.g6", data_dir)
    if p is None:
        raise FileNotFoundError(f"no bundled graph named {name}")
    return load_graph6(p.read_bytes())


def available_graphs() -> List[str]:
    return sorted(n[:-3] for n in _manifest() if n.endswith(".g6"))


def load_signing(name: str, data_dir: Optional[str] = None) -> SignedGraph:
    """Signed graph stored as {"graph": graph-json, "signs": [+-1 per edge id]}."""
    p = resolve(f"{name}.json", data_dir)
    if p is None:
        raise FileNotFoundError(f"no bundled signing named {name}")
    obj = json.loads(p.read_text())
    g = Graph(int(obj["graph"]["n"]), [tuple(e) for e in obj["graph"]["edges"]])
    signs = obj["signs"]
    if len(signs) != g.m:
        raise DataIntegrityError(f"{name}: sign count != edge count")
    return SignedGraph(g, {i: int(s) for i, s in enumerate(signs)})


def load_omzd_file(order: int, data_dir: Optional[str] = None) -> Optional[ExactMatrix]:
    p = resolve(f"omzd_{order}.json", data_dir)
    if p is None:
        return None
    M = ExactMatrix.from_json(p.read_text())
    if M.rows != order or M.cols != order:
        raise DataIntegrityError(f"omzd_{order}.json has wrong shape")
    return M


def load_character_table(name: str, data_dir: Optional[str] = None) -> dict:
    """Raw character table record; verification happens in the scheme module."""
    p = resolve(f"chartable_{name}.json", data_dir)
    if p is None:
        raise FileNotFoundError(f"no bundled character table named {name}")
    return json.loads(p.read_text())


def load_json(name: str, data_dir: Optional[str] = None) -> Optional[dict]:
    p = resolve(name, data_dir)
    if p is None:
        return None
    return json.loads(p.read_text())
