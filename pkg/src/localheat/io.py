"""Instance files.

Two formats are read:

* JSON: an object with ``horizon``, ``heat_per_run``, ``demand``,
  ``price``, ``lower`` and ``upper``.
* Columnar text, for trace import. Header lines ``# key: values`` give
  ``heat_per_run``, ``lower`` and ``upper`` (either T+1 values or one value
  for every index) and optionally ``initial`` (pins index 1 of both bounds)
  and ``horizon``. Each remaining non-blank line is ``demand price`` for
  one interval, in order. A single line of column names is skipped.

Files ending in ``.json`` (or whose first non-blank character is ``{``)
are read as JSON.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .model import HeatingInstance, InstanceError, validate_instance


def _num(v):
    f = float(v)
    return int(f) if f.is_integer() and abs(f) < 2**53 else f


def dumps_json(inst: HeatingInstance) -> str:
    data = inst.to_dict()
    for key in ("demand", "price", "lower", "upper"):
        data[key] = [_num(v) for v in data[key]]
    data["heat_per_run"] = _num(data["heat_per_run"])
    return json.dumps(data, indent=1)


def loads_json(text: str) -> HeatingInstance:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise InstanceError("instance JSON must be an object")
    return validate_instance(data)


def dumps_columns(inst: HeatingInstance) -> str:
    lines = [
        f"# horizon: {inst.horizon}",
        f"# heat_per_run: {inst.heat_per_run!r}",
        "# lower: " + " ".join(repr(float(v)) for v in inst.lower),
        "# upper: " + " ".join(repr(float(v)) for v in inst.upper),
        "demand price",
    ]
    lines += [f"{float(d)!r} {float(p)!r}" for d, p in zip(inst.demand, inst.price)]
    return "\n".join(lines) + "\n"


def loads_columns(text: str) -> HeatingInstance:
    header: dict[str, list[str]] = {}
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            key, sep, rest = line[1:].partition(":")
            if sep:
                header[key.strip().lower()] = rest.replace(",", " ").split()
            continue
        fields = line.replace(",", " ").split()
        try:
            rows.append([float(v) for v in fields])
        except ValueError:
            if rows:
                raise InstanceError(f"line {lineno}: cannot parse {line!r}") from None
            continue  # column names
        if len(fields) != 2:
            raise InstanceError(f"line {lineno}: expected 'demand price', got {line!r}")

    T = len(rows)
    if "horizon" in header and int(header["horizon"][0]) != T:
        raise InstanceError(f"header says horizon {header['horizon'][0]} but {T} rows follow")
    for key in ("heat_per_run", "lower", "upper"):
        if key not in header:
            raise InstanceError(f"missing header line '# {key}: ...'")

    def series(key):
        vals = [float(v) for v in header[key]]
        return vals * (T + 1) if len(vals) == 1 else vals

    lower, upper = series("lower"), series("upper")
    if "initial" in header and T + 1 == len(lower) == len(upper):
        lower[0] = upper[0] = float(header["initial"][0])
    data = np.array(rows, dtype=float).reshape(T, 2)
    return validate_instance(
        {
            "horizon": T,
            "heat_per_run": float(header["heat_per_run"][0]),
            "demand": data[:, 0],
            "price": data[:, 1],
            "lower": lower,
            "upper": upper,
        }
    )


def loads(text: str, fmt: str | None = None) -> HeatingInstance:
    if fmt is None:
        fmt = "json" if text.lstrip().startswith("{") else "columns"
    if fmt == "json":
        return loads_json(text)
    if fmt == "columns":
        return loads_columns(text)
    raise ValueError(f"unknown instance format {fmt!r}")


def read_instance(path, fmt: str | None = None) -> HeatingInstance:
    path = Path(path)
    text = path.read_text()
    if fmt is None and path.suffix == ".json":
        fmt = "json"
    return loads(text, fmt)


def write_instance(inst: HeatingInstance, path, fmt: str | None = None) -> None:
    path = Path(path)
    if fmt is None:
        fmt = "json" if path.suffix == ".json" else "columns"
    path.write_text(dumps_json(inst) if fmt == "json" else dumps_columns(inst))


def read_order(path) -> list[int]:
    """Whitespace/comma separated 1-based interval indices."""
    text = Path(path).read_text().replace(",", " ")
    try:
        return [int(v) for v in text.split()]
    except ValueError as exc:
        raise InstanceError(f"bad order file: {exc}") from None
