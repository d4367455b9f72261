"""
JSON and CSV codecs for Turannical.

Graph JSON:       {"n": int, "edges": [[u, v], ...]}
Hypergraph JSON:  {"r": int, "n": int, "edges": [[v1, ..., vr], ...]}
Curve CSV:        the columns of CSV_COLUMNS, floats with 17 significant digits

Documents are validated completely before anything is built, so a bad
input never yields a partial result.
"""

import dataclasses
import io
import json
import math
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, StrictInt, ValidationError

from turannical.config.constants import CSV_COLUMNS, CSV_FLOAT_FORMAT
from turannical.config.settings import ScanConfig
from turannical.core.graph import Graph
from turannical.core.hypergraph import UniformHypergraph
from turannical.core.threshold import CurvePoint, ThresholdCurve
from turannical.errors import InputFormatError
from turannical.util.numeric import fraction_text

Source = Union[str, bytes]


class GraphDocument(BaseModel):
    """Schema of a graph JSON document."""

    model_config = ConfigDict(extra="forbid")

    n: StrictInt = Field(ge=0)
    edges: List[Tuple[StrictInt, StrictInt]]


class HypergraphDocument(BaseModel):
    """Schema of a hypergraph JSON document."""

    model_config = ConfigDict(extra="forbid")

    r: StrictInt = Field(ge=1)
    n: StrictInt = Field(ge=0)
    edges: List[List[StrictInt]]


def _decode(source: Source) -> Any:
    try:
        text = source.decode("utf-8") if isinstance(source, bytes) else source
    except UnicodeDecodeError as e:
        raise InputFormatError(f"input is not UTF-8: {e.reason}", offset=e.start)
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        offset = len(text[: e.pos].encode("utf-8"))
        raise InputFormatError(f"malformed JSON: {e.msg}", offset=offset)


def _validate(model: type, data: Any) -> BaseModel:
    try:
        return model.model_validate(data)
    except ValidationError as e:
        error = e.errors()[0]
        path = ".".join(str(part) for part in error["loc"]) or "$"
        raise InputFormatError(error["msg"], field_path=path)


def _check_vertices(edge: List[int], n: int, index: int):
    for position, vertex in enumerate(edge):
        if not 0 <= vertex < n:
            raise InputFormatError(
                f"vertex {vertex} is outside 0..{n - 1}",
                field_path=f"edges.{index}.{position}",
            )


def parse_graph(source: Source) -> Graph:
    """
    Parse a graph JSON document.

    Args:
        source: JSON text or UTF-8 bytes

    Returns:
        The graph

    Raises:
        InputFormatError: On malformed JSON, schema violations, out-of-range
            vertices, self-loops or duplicate edges
    """
    data = _decode(source)
    document = _validate(GraphDocument, data)
    seen: Dict[Tuple[int, int], int] = {}
    for index, (u, v) in enumerate(document.edges):
        _check_vertices([u, v], document.n, index)
        if u == v:
            raise InputFormatError(f"self-loop [{u}, {v}]", field_path=f"edges.{index}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise InputFormatError(
                f"duplicate edge [{u}, {v}] (first listed at edges.{seen[key]})",
                field_path=f"edges.{index}",
            )
        seen[key] = index
    return Graph.from_edges(document.n, seen)


def parse_hypergraph(source: Source) -> UniformHypergraph:
    """
    Parse a hypergraph JSON document.

    Raises:
        InputFormatError: On malformed JSON, schema violations, edges of the
            wrong size, repeated vertices or duplicate hyperedges
    """
    data = _decode(source)
    document = _validate(HypergraphDocument, data)
    seen: Dict[Tuple[int, ...], int] = {}
    for index, edge in enumerate(document.edges):
        if len(edge) != document.r:
            raise InputFormatError(
                f"hyperedge {edge} has {len(edge)} vertices, expected r={document.r}",
                field_path=f"edges.{index}",
            )
        _check_vertices(edge, document.n, index)
        key = tuple(sorted(edge))
        if len(set(key)) != len(key):
            raise InputFormatError(
                f"hyperedge {edge} repeats a vertex", field_path=f"edges.{index}"
            )
        if key in seen:
            raise InputFormatError(
                f"duplicate hyperedge {edge} (first listed at edges.{seen[key]})",
                field_path=f"edges.{index}",
            )
        seen[key] = index
    return UniformHypergraph.from_edges(document.r, document.n, seen)


def graph_document(graph: Graph) -> Dict[str, Any]:
    return {"n": graph.n, "edges": [list(edge) for edge in graph.edges()]}


def hypergraph_document(hypergraph: UniformHypergraph) -> Dict[str, Any]:
    return {
        "r": hypergraph.r,
        "n": hypergraph.n,
        "edges": [list(edge) for edge in hypergraph.edges],
    }


def dump_graph(graph: Graph) -> str:
    """Canonical graph JSON (edges as sorted [u, v] pairs with u < v)."""
    return GraphDocument.model_validate(graph_document(graph)).model_dump_json() + "\n"


def dump_hypergraph(hypergraph: UniformHypergraph) -> str:
    """Canonical hypergraph JSON (sorted edges of sorted vertices)."""
    document = HypergraphDocument.model_validate(hypergraph_document(hypergraph))
    return document.model_dump_json() + "\n"


def load_graph(path: Union[str, Path]) -> Graph:
    return parse_graph(Path(path).read_bytes())


def load_hypergraph(path: Union[str, Path]) -> UniformHypergraph:
    return parse_hypergraph(Path(path).read_bytes())


def curves_frame(curves: List[ThresholdCurve]) -> pd.DataFrame:
    """One row per curve point, columns in CSV_COLUMNS order."""
    rows = [
        {column: getattr(point, column) for column in CSV_COLUMNS}
        for curve in curves
        for point in curve.points
    ]
    frame = pd.DataFrame(rows, columns=list(CSV_COLUMNS))
    for column in ("n", "trials", "successes", "unknowns"):
        frame[column] = frame[column].astype("int64")
    for column in ("p", "q", "estimate", "ci_lo", "ci_hi"):
        frame[column] = frame[column].astype("float64")
    return frame


def dump_curves_csv(curves: List[ThresholdCurve]) -> str:
    """
    Render curves as CSV.

    Missing q values and undefined estimates are written as empty fields.
    """
    buffer = io.StringIO()
    curves_frame(curves).to_csv(
        buffer, index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n"
    )
    return buffer.getvalue()


def _optional(value: float) -> Optional[float]:
    return None if math.isnan(value) else float(value)


def parse_curves_csv(source: Source, r: int) -> List[ThresholdCurve]:
    """
    Read curves back from CSV.

    Consecutive rows sharing (n, q, property, mode) form one curve.

    Args:
        source: CSV text or bytes
        r: Uniformity of the scanned hypergraphs (not stored in the CSV)

    Raises:
        InputFormatError: If the header differs from CSV_COLUMNS or a value
            does not parse
    """
    text = source.decode("utf-8") if isinstance(source, bytes) else source
    header = text.split("\n", 1)[0].strip()
    if header != ",".join(CSV_COLUMNS):
        raise InputFormatError(
            f"CSV header '{header}' does not match {','.join(CSV_COLUMNS)}", offset=0
        )
    try:
        frame = pd.read_csv(
            io.StringIO(text),
            dtype={"property": str, "mode": str},
            float_precision="round_trip",
        )
        frame = frame.astype(
            {"n": "int64", "trials": "int64", "successes": "int64", "unknowns": "int64"}
        )
    except (ValueError, pd.errors.ParserError) as e:
        raise InputFormatError(f"malformed curve CSV: {e}")

    curves: List[ThresholdCurve] = []
    key = None
    points: List[CurvePoint] = []
    for row in frame.itertuples(index=False):
        point = CurvePoint(
            n=int(row.n),
            p=float(row.p),
            q=_optional(row.q),
            property=row.property,
            mode=row.mode,
            trials=int(row.trials),
            successes=int(row.successes),
            unknowns=int(row.unknowns),
            estimate=float(row.estimate),
            ci_lo=float(row.ci_lo),
            ci_hi=float(row.ci_hi),
        )
        point_key = (point.n, point.q, point.property, point.mode)
        if point_key != key and points:
            curves.append(ThresholdCurve(r, key[0], key[1], key[2], key[3], tuple(points)))
            points = []
        key = point_key
        points.append(point)
    if points:
        curves.append(ThresholdCurve(r, key[0], key[1], key[2], key[3], tuple(points)))
    return curves


def to_jsonable(value: Any) -> Any:
    """
    Convert a report value into JSON-compatible data.

    Dataclasses become objects field by field, rationals become "num/den"
    strings (a `<name>_float` companion is added next to dataclass fields),
    graphs and hypergraphs use their JSON documents and NaN becomes null.
    """
    if isinstance(value, Graph):
        return graph_document(value)
    if isinstance(value, UniformHypergraph):
        return hypergraph_document(value)
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        rendered = {}
        for field in dataclasses.fields(value):
            item = getattr(value, field.name)
            rendered[field.name] = to_jsonable(item)
            if isinstance(item, Fraction):
                rendered[f"{field.name}_float"] = float(item)
        return rendered
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Fraction):
        return fraction_text(value)
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, np.generic):
        return to_jsonable(value.item())
    if isinstance(value, float):
        return None if not math.isfinite(value) else value
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (set, frozenset)):
        return [to_jsonable(item) for item in sorted(value)]
    if isinstance(value, (list, tuple)):
        return [to_jsonable(item) for item in value]
    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())
    raise TypeError(f"cannot render {type(value).__name__} as JSON")


def render_report(value: Any) -> str:
    """Pretty JSON for a report object."""
    return json.dumps(to_jsonable(value), indent=2, allow_nan=False) + "\n"


def parse_scan_config(source: Source) -> ScanConfig:
    """
    Parse and validate a scan configuration document.

    Raises:
        InputFormatError: With the character offset of a JSON syntax error or
            the field path of a schema violation
    """
    return _validate(ScanConfig, _decode(source))
