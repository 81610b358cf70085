"""On-disk formats: canonical JSON, run manifests, bundled fixtures."""

from __future__ import annotations

import csv
import hashlib
import io
import json
import platform
from dataclasses import asdict, dataclass, field
from importlib import resources
from pathlib import Path

from . import __version__
from .polyalg import BiPoly


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=1) + "\n"


def sha256_text(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


@dataclass
class RunManifest:
    command: str
    parameters: dict
    workers: int = 1
    budget: int | None = None
    wall_seconds: float = 0.0
    outputs: dict[str, str] = field(default_factory=dict)  # file name -> sha256
    version: str = __version__
    python: str = field(default_factory=platform.python_version)

    def record(self, name: str, text: str) -> None:
        self.outputs[name] = sha256_text(text)

    def to_json(self) -> dict:
        return {"format": 1, **asdict(self)}


def write_outputs(out_dir: str | Path, files: dict[str, str], manifest: RunManifest) -> None:
    """Write ``files`` (name -> text) plus ``manifest.json`` into ``out_dir``."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for name, text in files.items():
        (out / name).write_text(text)
        manifest.record(name, text)
    (out / "manifest.json").write_text(canonical_json(manifest.to_json()))


def _data(name: str) -> str:
    return resources.files("growthbound").joinpath("data", name).read_text()


def table_2d() -> list[dict]:
    """Rows ``i, count_kr, count, bound_kr, bound`` (strings; empty when absent)."""
    return list(csv.DictReader(io.StringIO(_data("table1.csv"))))


def table_3d() -> list[dict]:
    return list(csv.DictReader(io.StringIO(_data("table3.csv"))))


def weights_2d() -> dict[int, BiPoly]:
    data = json.loads(_data("weights_2d.json"))
    return {
        e["i"]: BiPoly.from_json({"format": 1, "vars": data["vars"], "terms": e["terms"]})
        for e in data["polynomials"]
    }


def ten_cell_polyomino_text() -> str:
    return _data("ten_cell.txt")
