"""Parameter sweeps, figure presets and deterministic emission.

Sweep configurations are TOML with a fixed schema:

    protocol = "vary-dm"            # or "vary-field"
    J = 1.0                         # fixed protocol parameters; vary-dm uses
    B = 4.0                         # J, B, D1, D2 and vary-field uses
    T_hot = 2.0                     # J, D, B1, B2 (swept names omitted here)
    T_cold = 1.0
    output = ["x", "y", "W"]        # optional; defaults depend on the sweep

    [sweep.x]                       # required axis
    param = "D1"
    min = 0.0
    max = 3.0
    count = 61

    [sweep.y]                       # optional: omit for a 1-D scan
    param = "D2"
    min = 0.0
    max = 3.0
    count = 61

Unknown keys are rejected.  Rows are produced in row-major grid order with
the x axis slowest; the data section of any artifact (header plus rows) is
a pure function of the spec and reproduces byte-identically across runs
and worker counts.  Floats are written in shortest round-trip decimal,
undefined efficiencies as empty fields.
"""

import concurrent.futures
import io
import json
import math
from dataclasses import dataclass

import numpy as np

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from ._version import __version__
from .cycle import BathSpec, VaryDM, VaryField, run_cycle
from .errors import ConfigError, ConfigSyntaxError, DmOttoError
from .local import local_cycle

__all__ = [
    "SweepAxis",
    "SweepSpec",
    "RunArtifact",
    "parse_config",
    "config_echo",
    "extract_config",
    "run_sweep",
    "grid_protocols",
    "emit",
    "figure_spec",
    "FIGURE_IDS",
]

COLUMNS = ("x", "y", "Q_hot", "Q_cold", "W", "eta", "class", "q1", "q2", "w", "eta_local")
LOCAL_COLUMNS = frozenset({"q1", "q2", "w", "eta_local"})
PROTOCOL_FIELDS = {
    "vary-dm": ("J", "B", "D1", "D2"),
    "vary-field": ("J", "D", "B1", "B2"),
}
_TOP_KEYS = {"protocol", "T_hot", "T_cold", "sweep", "output", "J", "B", "B1", "B2", "D", "D1", "D2"}
_AXIS_KEYS = {"param", "min", "max", "count"}


@dataclass(frozen=True)
class SweepAxis:
    param: str
    lo: float
    hi: float
    count: int

    def values(self) -> list[float]:
        return [float(v) for v in np.linspace(self.lo, self.hi, self.count)]


@dataclass(frozen=True)
class SweepSpec:
    """Validated sweep description; ``fixed`` holds the non-swept protocol
    parameters in canonical field order."""

    protocol: str
    fixed: tuple[tuple[str, float], ...]
    T_hot: float
    T_cold: float
    x: SweepAxis
    y: SweepAxis | None
    columns: tuple[str, ...]


@dataclass(frozen=True)
class RunArtifact:
    """Evaluated sweep: ordered metadata plus result rows.

    ``metadata`` never participates in determinism checks; ``columns`` and
    ``rows`` form the data section, byte-identical for identical specs.
    """

    metadata: tuple[tuple[str, str], ...]
    columns: tuple[str, ...]
    rows: tuple[tuple, ...]

    def data_section(self) -> str:
        out = [",".join(self.columns)]
        for row in self.rows:
            out.append(",".join(_format_cell(v) for v in row))
        return "\n".join(out) + "\n"


def _format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _number(key, value):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"key {key!r} must be a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise ConfigError(f"key {key!r} must be finite, got {value!r}")
    return value


def _parse_axis(name: str, table, protocol: str) -> SweepAxis:
    if not isinstance(table, dict):
        raise ConfigError(f"key {name!r} must be a table with param/min/max/count")
    unknown = set(table) - _AXIS_KEYS
    if unknown:
        raise ConfigError(f"unknown key {name}.{sorted(unknown)[0]!r}")
    missing = _AXIS_KEYS - set(table)
    if missing:
        raise ConfigError(f"missing key {name}.{sorted(missing)[0]!r}")
    param = table["param"]
    if param not in PROTOCOL_FIELDS[protocol]:
        raise ConfigError(
            f"key {name}.param: {param!r} is not a {protocol} parameter "
            f"(expected one of {PROTOCOL_FIELDS[protocol]})"
        )
    lo = _number(f"{name}.min", table["min"])
    hi = _number(f"{name}.max", table["max"])
    count = table["count"]
    if isinstance(count, bool) or not isinstance(count, int):
        raise ConfigError(f"key {name}.count must be an integer, got {count!r}")
    if count < 2:
        raise ConfigError(f"key {name}.count must be at least 2, got {count}")
    if not lo < hi:
        raise ConfigError(f"key {name}: min must be strictly below max, got {lo} >= {hi}")
    return SweepAxis(param=param, lo=lo, hi=hi, count=count)


def parse_config(text: str) -> SweepSpec:
    """Parse and validate sweep configuration text."""
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        # tomllib messages carry "at line L, column C"
        raise ConfigSyntaxError(f"configuration is not valid TOML: {exc}") from exc

    unknown = set(data) - _TOP_KEYS
    if unknown:
        raise ConfigError(f"unknown key {sorted(unknown)[0]!r}")

    protocol = data.get("protocol")
    if protocol is None:
        raise ConfigError("missing key 'protocol'")
    if protocol not in PROTOCOL_FIELDS:
        raise ConfigError(f"key 'protocol' must be 'vary-dm' or 'vary-field', got {protocol!r}")

    sweep_table = data.get("sweep")
    if not isinstance(sweep_table, dict) or "x" not in sweep_table:
        raise ConfigError("missing key 'sweep.x'")
    unknown = set(sweep_table) - {"x", "y"}
    if unknown:
        raise ConfigError(f"unknown key sweep.{sorted(unknown)[0]!r}")
    x = _parse_axis("sweep.x", sweep_table["x"], protocol)
    y = _parse_axis("sweep.y", sweep_table["y"], protocol) if "y" in sweep_table else None
    if y is not None and y.param == x.param:
        raise ConfigError(f"key sweep.y.param duplicates sweep.x.param ({x.param!r})")

    swept = {x.param} | ({y.param} if y else set())
    fields = PROTOCOL_FIELDS[protocol]
    fixed = []
    for name in fields:
        if name in swept:
            if name in data:
                raise ConfigError(f"key {name!r} is swept and must not also be fixed")
            continue
        if name not in data:
            raise ConfigError(f"missing key {name!r} (required by protocol {protocol!r})")
        fixed.append((name, _number(name, data[name])))
    stray = [k for k in ("J", "B", "B1", "B2", "D", "D1", "D2") if k in data and k not in fields]
    if stray:
        raise ConfigError(f"key {stray[0]!r} does not belong to protocol {protocol!r}")

    for key in ("T_hot", "T_cold"):
        if key not in data:
            raise ConfigError(f"missing key {key!r}")
    t_hot = _number("T_hot", data["T_hot"])
    t_cold = _number("T_cold", data["T_cold"])
    if t_hot <= 0.0 or t_cold <= 0.0:
        raise ConfigError("keys 'T_hot' and 'T_cold' must be positive")

    if "output" in data:
        out = data["output"]
        if not isinstance(out, list) or not out or not all(isinstance(c, str) for c in out):
            raise ConfigError("key 'output' must be a non-empty list of column names")
        bad = [c for c in out if c not in COLUMNS]
        if bad:
            raise ConfigError(f"key 'output': unknown column {bad[0]!r} (allowed: {COLUMNS})")
        if "y" in out and y is None:
            raise ConfigError("key 'output': column 'y' needs a sweep.y axis")
        local = [c for c in out if c in LOCAL_COLUMNS]
        if local and protocol != "vary-field":
            raise ConfigError(f"key 'output': column {local[0]!r} needs protocol 'vary-field'")
        columns = tuple(out)
    else:
        columns = ("x", "y", "Q_hot", "Q_cold", "W", "eta", "class") if y else (
            "x", "Q_hot", "Q_cold", "W", "eta", "class")

    return SweepSpec(
        protocol=protocol,
        fixed=tuple(fixed),
        T_hot=t_hot,
        T_cold=t_cold,
        x=x,
        y=y,
        columns=columns,
    )


def config_echo(spec: SweepSpec) -> str:
    """Canonical TOML text reproducing ``spec`` through parse_config."""
    lines = [f'protocol = "{spec.protocol}"']
    for name, value in spec.fixed:
        lines.append(f"{name} = {value!r}")
    lines.append(f"T_hot = {spec.T_hot!r}")
    lines.append(f"T_cold = {spec.T_cold!r}")
    cols = ", ".join(f'"{c}"' for c in spec.columns)
    lines.append(f"output = [{cols}]")
    for label, axis in (("x", spec.x), ("y", spec.y)):
        if axis is None:
            continue
        lines.append(f"[sweep.{label}]")
        lines.append(f'param = "{axis.param}"')
        lines.append(f"min = {axis.lo!r}")
        lines.append(f"max = {axis.hi!r}")
        lines.append(f"count = {axis.count}")
    return "\n".join(lines) + "\n"


def _build_protocol(spec: SweepSpec, overrides: dict):
    values = dict(spec.fixed)
    values.update(overrides)
    if spec.protocol == "vary-dm":
        return VaryDM(J=values["J"], B=values["B"], D_hot=values["D1"], D_cold=values["D2"])
    return VaryField(J=values["J"], D=values["D"], B_hot=values["B1"], B_cold=values["B2"])


def _evaluate_point(spec: SweepSpec, xv: float, yv: float | None):
    overrides = {spec.x.param: xv}
    if spec.y is not None:
        overrides[spec.y.param] = yv
    protocol = _build_protocol(spec, overrides)
    baths = BathSpec(T_hot=spec.T_hot, T_cold=spec.T_cold)
    result = run_cycle(protocol, baths)
    local = local_cycle(protocol, baths) if LOCAL_COLUMNS & set(spec.columns) else None

    row = []
    for column in spec.columns:
        if column == "x":
            row.append(xv)
        elif column == "y":
            row.append(yv)
        elif column == "Q_hot":
            row.append(result.Q_hot)
        elif column == "Q_cold":
            row.append(result.Q_cold)
        elif column == "W":
            row.append(result.W)
        elif column == "eta":
            row.append(result.eta)
        elif column == "class":
            row.append(result.classification.value)
        elif column == "q1":
            row.append(local.q1)
        elif column == "q2":
            row.append(local.q2)
        elif column == "w":
            row.append(local.w)
        elif column == "eta_local":
            row.append(local.eta_local)
    return tuple(row)


def _point_list(spec: SweepSpec):
    xs = spec.x.values()
    if spec.y is None:
        return [(x, None) for x in xs]
    ys = spec.y.values()
    return [(x, y) for x in xs for y in ys]  # x outer (slowest), y inner


def grid_protocols(spec: SweepSpec):
    """The (protocol, baths) pairs of the sweep grid, in row order."""
    baths = BathSpec(T_hot=spec.T_hot, T_cold=spec.T_cold)
    points = []
    for x, y in _point_list(spec):
        overrides = {spec.x.param: x}
        if spec.y is not None:
            overrides[spec.y.param] = y
        points.append((_build_protocol(spec, overrides), baths))
    return points


def run_sweep(spec: SweepSpec, *, workers: int = 1) -> RunArtifact:
    """Evaluate the grid; identical results regardless of worker count."""
    points = _point_list(spec)
    if workers > 1:
        chunk = max(1, len(points) // (workers * 8))
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
            rows = tuple(
                pool.map(_evaluate_point, *zip(*[(spec, x, y) for x, y in points]), chunksize=chunk)
            )
    else:
        rows = tuple(_evaluate_point(spec, x, y) for x, y in points)

    metadata = [
        ("tool", "dm-otto"),
        ("version", __version__),
        ("protocol", spec.protocol),
    ]
    for name, value in spec.fixed:
        metadata.append((name, repr(value)))
    metadata.append(("T_hot", repr(spec.T_hot)))
    metadata.append(("T_cold", repr(spec.T_cold)))
    metadata.append(("axis-x", f"{spec.x.param} in [{spec.x.lo!r}, {spec.x.hi!r}] count {spec.x.count}"))
    if spec.y is not None:
        metadata.append(("axis-y", f"{spec.y.param} in [{spec.y.lo!r}, {spec.y.hi!r}] count {spec.y.count}"))
    metadata.append(("rows", str(len(rows))))
    metadata.append(("config", config_echo(spec)))
    return RunArtifact(metadata=tuple(metadata), columns=spec.columns, rows=rows)


def _csv_text(artifact: RunArtifact, timestamp: str | None) -> str:
    buf = io.StringIO()
    if timestamp is not None:
        buf.write(f"# generated-at: {timestamp}\n")
    for key, value in artifact.metadata:
        if key == "config":
            buf.write("# config:\n")
            for line in value.rstrip("\n").split("\n"):
                buf.write(f"# |{line}\n")
        else:
            buf.write(f"# {key}: {value}\n")
    buf.write(artifact.data_section())
    return buf.getvalue()


def extract_config(csv_text: str) -> str:
    """Recover the embedded configuration echo from emitted CSV text."""
    lines = [ln[3:] for ln in csv_text.split("\n") if ln.startswith("# |")]
    return "\n".join(lines) + "\n"


def emit(artifact, fmt: str, destination, *, timestamp: str | None = None) -> None:
    """Write an artifact to ``destination`` (path or file-like).

    ``fmt`` is "csv" for RunArtifact grids and "json-report" for audit
    documents (anything with a ``to_document()`` method).  The CSV data
    section and the whole JSON document are deterministic; an optional
    timestamp goes into CSV comments only.
    """
    if fmt == "csv":
        if not isinstance(artifact, RunArtifact):
            raise DmOttoError(f"csv emission needs a RunArtifact, got {type(artifact).__name__}")
        text = _csv_text(artifact, timestamp)
    elif fmt == "json-report":
        document = artifact.to_document() if hasattr(artifact, "to_document") else artifact
        text = json.dumps(document, indent=2) + "\n"
    else:
        raise DmOttoError(f"unknown emission format {fmt!r} (expected 'csv' or 'json-report')")

    if hasattr(destination, "write"):
        destination.write(text)
        return
    try:
        with open(destination, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    except OSError as exc:
        raise DmOttoError(f"cannot write {destination!r}: {exc}") from exc


FIGURE_IDS = ("fig1", "fig2", "fig3", "fig4", "fig5")

_FIG_DM_COLUMNS = ("x", "y", "Q_hot", "Q_cold", "W", "eta", "class")


def figure_spec(fig_id: str, *, grid_2d: int = 61, scan_1d: int = 401) -> SweepSpec:
    """Built-in sweep presets reproducing the reference figure datasets.

    fig1-fig3 are D1 x D2 isoline grids (fig2 at B = 6, fig3 at J = -1);
    fig4/fig5 are 1-D scans in D for the field protocol B1=8 > B2=6.  Grid
    resolutions are tool defaults, overridable here.
    """
    def dm_axis(param):
        return SweepAxis(param=param, lo=0.0, hi=3.0, count=grid_2d)

    if fig_id == "fig1":
        return SweepSpec("vary-dm", (("J", 1.0), ("B", 4.0)), 2.0, 1.0,
                         dm_axis("D1"), dm_axis("D2"), _FIG_DM_COLUMNS)
    if fig_id == "fig2":
        return SweepSpec("vary-dm", (("J", 1.0), ("B", 6.0)), 2.0, 1.0,
                         dm_axis("D1"), dm_axis("D2"), _FIG_DM_COLUMNS)
    if fig_id == "fig3":
        return SweepSpec("vary-dm", (("J", -1.0), ("B", 4.0)), 2.0, 1.0,
                         dm_axis("D1"), dm_axis("D2"), _FIG_DM_COLUMNS)

    scan = SweepAxis(param="D", lo=0.0, hi=20.0, count=scan_1d)
    field_fixed = (("J", 1.0), ("B1", 8.0), ("B2", 6.0))
    if fig_id == "fig4":
        return SweepSpec("vary-field", field_fixed, 2.0, 1.0, scan, None,
                         ("x", "Q_hot", "Q_cold", "W", "class"))
    if fig_id == "fig5":
        return SweepSpec("vary-field", field_fixed, 2.0, 1.0, scan, None,
                         ("x", "W", "eta", "eta_local", "class"))
    raise ConfigError(f"unknown figure id {fig_id!r} (expected one of {FIGURE_IDS})")
