"""JSON tiling documents with exact integer strings for every coordinate.

Each Q(sqrt 3) number is stored as ``[p_num, p_den, q_num, q_den]``.  A
placement is six such numbers: the linear part row by row, then the
translation.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .exactfield import QS3
from .geom import ConvexPolygon, Isometry, Point
from .tiles import Placement, TileError, Tiling, make_tile

FORMAT_VERSION = 1


class DocumentError(ValueError):
    pass


def to_document(t: Tiling) -> dict[str, Any]:
    s = t.shape
    doc: dict[str, Any] = {
        "format_version": FORMAT_VERSION,
        "shape": {"a": s.a, "b": s.b, "c": s.c, "variant": s.variant.value},
        "target": [[v.x.to_strings(), v.y.to_strings()] for v in t.target.vertices],
        "placements": [[e.to_strings() for e in p.iso.entries()] for p in t.placements],
        "claimed_count": t.claimed_count,
    }
    if t.label:
        doc["family"] = t.label
    if t.params:
        doc["params"] = {k: t.params[k] for k in sorted(t.params)}
    return doc


def dumps(t: Tiling) -> str:
    return json.dumps(to_document(t), separators=(",", ":"), sort_keys=False) + "\n"


def save(t: Tiling, path: str | Path) -> None:
    Path(path).write_text(dumps(t), encoding="utf-8")


def _qs3(raw: Any) -> QS3:
    if not isinstance(raw, list) or not all(isinstance(x, str) for x in raw):
        raise DocumentError(f"expected a list of 4 integer strings, got {raw!r}")
    try:
        return QS3.from_strings(raw)
    except ValueError as exc:
        raise DocumentError(str(exc)) from None


def from_document(doc: Any) -> Tiling:
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    if doc.get("format_version") != FORMAT_VERSION:
        raise DocumentError(f"unsupported format_version {doc.get('format_version')!r}")
    try:
        sh = doc["shape"]
        shape = make_tile(int(sh["a"]), int(sh["b"]), int(sh["c"]), sh["variant"])
        pts = []
        for pair in doc["target"]:
            if not isinstance(pair, list) or len(pair) != 2:
                raise DocumentError("target vertices must be [x, y] pairs")
            pts.append(Point(_qs3(pair[0]), _qs3(pair[1])))
        target = ConvexPolygon(tuple(pts))
        placements = []
        for raw in doc["placements"]:
            if not isinstance(raw, list) or len(raw) != 6:
                raise DocumentError("each placement needs 6 numbers")
            # orthogonality is the verifier's business, so accept anything here
            placements.append(Placement(Isometry.unchecked(*(_qs3(e) for e in raw))))
        claimed = doc["claimed_count"]
        if not isinstance(claimed, int):
            raise DocumentError("claimed_count must be an integer")
    except DocumentError:
        raise
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"malformed document: {exc!r}") from None
    except (TileError, ValueError) as exc:
        raise DocumentError(str(exc)) from None
    params = doc.get("params") or {}
    return Tiling(shape, target, tuple(placements), claimed, doc.get("family", ""), dict(params))


def loads(text: str) -> Tiling:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None
    return from_document(doc)


def load(path: str | Path) -> Tiling:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(str(exc)) from None
    return loads(text)
