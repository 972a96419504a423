"""Design file formats.

JSON (canonical): one object with sorted keys, two-space indent, integer
matrices, no floats anywhere -- so write -> read -> write is byte-identical.

CSV: header q1..qm,x1..xk, one row per run, plus a .meta.json sidecar next
to the file carrying everything except the matrices (same canonical JSON
conventions).
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .construct import MarginallyCoupledDesign
from .designs import LatinHypercube, OrthogonalArray
from .errors import MalformedBundleError

FORMAT_VERSION = 1

_SCHEMA_KEYS = {
    "format_version", "method", "s", "u", "u1", "v", "item", "seed",
    "d1", "d2", "provenance",
}


@dataclass(eq=False)
class DesignBundle:
    """In-memory mirror of the file schema."""

    method: str
    s: int
    u: int
    u1: int | None
    v: int | None
    item: str | None
    seed: int | str
    d1: np.ndarray
    d2: np.ndarray
    provenance: dict
    format_version: int = FORMAT_VERSION

    @property
    def m(self) -> int:
        return self.d1.shape[1]

    @property
    def k(self) -> int:
        return self.d2.shape[1]

    def design_objects(self) -> tuple[OrthogonalArray, LatinHypercube]:
        return (OrthogonalArray(self.d1, (self.s,) * self.m),
                LatinHypercube(self.d2))


def bundle_from_design(mcd: MarginallyCoupledDesign) -> DesignBundle:
    p = mcd.params
    prov = mcd.provenance
    return DesignBundle(
        method=prov.method,
        s=p.s, u=p.u, u1=p.u1, v=p.v, item=p.item, seed=p.seed,
        d1=mcd.d1.data.copy(), d2=mcd.d2.data.copy(),
        provenance={
            "z_vectors": [list(z) for z in prov.z_vectors],
            "x_vectors": [list(x) for x in prov.x_vectors],
            "generator_columns": [[list(c) for c in cols]
                                  for cols in prov.generator_columns],
        })


def _meta_dict(b: DesignBundle) -> dict:
    return {
        "format_version": b.format_version,
        "method": b.method,
        "s": int(b.s),
        "u": int(b.u),
        "u1": None if b.u1 is None else int(b.u1),
        "v": None if b.v is None else int(b.v),
        "item": b.item,
        "seed": b.seed,
        "provenance": b.provenance,
    }


def _canonical_json(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def to_json_text(b: DesignBundle) -> str:
    obj = _meta_dict(b)
    obj["d1"] = b.d1.tolist()
    obj["d2"] = b.d2.tolist()
    return _canonical_json(obj)


def sidecar_path(path: Path) -> Path:
    return path.with_suffix(".meta.json")


def write_bundle(path, b: DesignBundle, fmt: str = "json") -> Path:
    """Write the bundle as canonical JSON or as CSV + sidecar."""
    path = Path(path)
    if fmt == "json":
        path.write_text(to_json_text(b))
        return path
    if fmt != "csv":
        raise MalformedBundleError(f"unknown format {fmt!r}")
    header = ([f"q{i + 1}" for i in range(b.m)]
              + [f"x{j + 1}" for j in range(b.k)])
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for r in range(b.d1.shape[0]):
            writer.writerow([int(x) for x in b.d1[r]]
                            + [int(x) for x in b.d2[r]])
    sidecar_path(path).write_text(_canonical_json(_meta_dict(b)))
    return path


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise MalformedBundleError(msg)


def _as_int_matrix(rows, what: str) -> np.ndarray:
    _require(isinstance(rows, list) and rows, f"{what} must be a nonempty list")
    _require(all(isinstance(r, list) for r in rows),
             f"{what} must be a list of rows")
    width = len(rows[0])
    _require(width > 0 and all(len(r) == width for r in rows),
             f"{what} rows must be nonempty and equal length")
    _require(all(isinstance(x, int) and not isinstance(x, bool)
                 for r in rows for x in r),
             f"{what} entries must be integers")
    return np.array(rows, dtype=np.int64)


def _bundle_from_meta(meta: dict, d1: np.ndarray, d2: np.ndarray) -> DesignBundle:
    for key in ("format_version", "method", "s", "seed", "u"):
        _require(key in meta, f"missing key {key!r}")
    _require(meta["format_version"] == FORMAT_VERSION,
             f"unsupported format_version {meta['format_version']!r}")
    _require(isinstance(meta["s"], int) and meta["s"] >= 2, "bad s")
    _require(isinstance(meta["u"], int) and meta["u"] >= 1, "bad u")
    seed = meta["seed"]
    _require(isinstance(seed, int) or seed == "identity",
             "seed must be an integer or \"identity\"")
    _require(d1.shape[0] == d2.shape[0],
             f"D1 has {d1.shape[0]} rows but D2 has {d2.shape[0]}")
    return DesignBundle(
        method=str(meta["method"]), s=meta["s"], u=meta["u"],
        u1=meta.get("u1"), v=meta.get("v"), item=meta.get("item"),
        seed=seed, d1=d1, d2=d2,
        provenance=meta.get("provenance") or {})


def read_bundle(path) -> DesignBundle:
    """Read a JSON bundle, or a CSV + .meta.json sidecar pair."""
    path = Path(path)
    if not path.exists():
        raise MalformedBundleError(f"no such file: {path}")
    if path.suffix == ".csv":
        return _read_csv_bundle(path)
    try:
        obj = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise MalformedBundleError(f"not valid JSON: {exc}") from exc
    _require(isinstance(obj, dict), "top level must be an object")
    unknown = set(obj) - _SCHEMA_KEYS
    _require(not unknown, f"unknown keys {sorted(unknown)}")
    _require("d1" in obj and "d2" in obj, "missing d1/d2 matrices")
    d1 = _as_int_matrix(obj["d1"], "d1")
    d2 = _as_int_matrix(obj["d2"], "d2")
    return _bundle_from_meta(obj, d1, d2)


def _read_csv_bundle(path: Path) -> DesignBundle:
    side = sidecar_path(path)
    _require(side.exists(), f"missing sidecar {side.name}")
    try:
        meta = json.loads(side.read_text())
    except json.JSONDecodeError as exc:
        raise MalformedBundleError(f"sidecar not valid JSON: {exc}") from exc
    with path.open(newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise MalformedBundleError("empty CSV") from None
        m = sum(1 for h in header if h.startswith("q"))
        k = sum(1 for h in header if h.startswith("x"))
        _require(m + k == len(header) and m > 0 and k > 0,
                 "header must be q1..qm followed by x1..xk")
        _require(header == [f"q{i + 1}" for i in range(m)]
                 + [f"x{j + 1}" for j in range(k)],
                 "header must be q1..qm followed by x1..xk")
        rows = []
        for lineno, row in enumerate(reader, start=2):
            _require(len(row) == m + k,
                     f"line {lineno}: expected {m + k} fields, got {len(row)}")
            try:
                rows.append([int(x) for x in row])
            except ValueError:
                raise MalformedBundleError(
                    f"line {lineno}: non-integer entry") from None
    _require(bool(rows), "CSV has no data rows")
    data = np.array(rows, dtype=np.int64)
    return _bundle_from_meta(meta, data[:, :m], data[:, m:])
