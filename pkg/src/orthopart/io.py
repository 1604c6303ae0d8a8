"""Polygon text files, JSON results and SVG figures."""

from __future__ import annotations

import json
from typing import Optional

from .engine import PartitionResult, fingerprint
from .geometry import Cut, CutKind, GeometryError, RectilinearPolygon, normalize, split
from .residues import bound


class PolygonFormatError(SyntaxError):
    """Malformed polygon text; ``lineno`` is 1-based."""

    def __init__(self, msg: str, lineno: int):
        super().__init__(msg)
        self.lineno = lineno  # str() becomes "msg (line N)"


class ValidationError(ValueError):
    """Well-formed text that does not describe a simple polyomino."""


class IoError(OSError):
    pass


def parse_polygon(text: str) -> RectilinearPolygon:
    """Parse ``n`` followed by ``n`` lines of ``x y``; ``#`` starts a comment."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise PolygonFormatError("empty input", 1)
    lineno, head = rows[0]
    if len(head) != 1:
        raise PolygonFormatError(f"expected the vertex count, got {' '.join(head)!r}", lineno)
    try:
        n = int(head[0])
    except ValueError:
        raise PolygonFormatError(f"vertex count {head[0]!r} is not an integer", lineno) from None
    pts = []
    for lineno, tok in rows[1:]:
        if len(tok) != 2:
            raise PolygonFormatError(f"expected 'x y', got {' '.join(tok)!r}", lineno)
        try:
            pts.append((int(tok[0]), int(tok[1])))
        except ValueError:
            raise PolygonFormatError(f"coordinates must be integers, got {' '.join(tok)!r}", lineno) from None
    if len(pts) != n:
        last = rows[-1][0]
        raise PolygonFormatError(f"header announces {n} vertices, found {len(pts)}", last)
    if n % 2 or n < 4:
        raise ValidationError(f"an axis-parallel polygon has an even number >= 4 of vertices, got {n}")
    try:
        return normalize(pts)
    except GeometryError as e:
        raise ValidationError(str(e)) from e


def polygon_text(P: RectilinearPolygon) -> str:
    return f"{P.n}\n" + "".join(f"{v.x} {v.y}\n" for v in P.vertices)


# --- JSON ----------------------------------------------------------------------


def _verts(P: RectilinearPolygon):
    return [[v.x, v.y] for v in P.vertices]


def result_dict(P: RectilinearPolygon, result: PartitionResult, patrols=None) -> dict:
    cuts = []
    for i, ac in enumerate(result.cuts_applied, start=1):
        cuts.append({
            "index": i,
            "host": ac.host,
            "label": ac.label,
            **ac.cut.cut.to_json(),
            "n1": ac.cut.n1,
            "n2": ac.cut.n2,
        })
    out = {
        "polygon": _verts(P),
        "n": P.n,
        "bound": bound(P.n),
        "count": result.count,
        "pieces": [_verts(Q) for Q in result.pieces],
        "cuts_applied": cuts,
    }
    if patrols is not None:
        out["patrols"] = [p.to_json() for p in patrols]
    return out


def to_json(data: dict) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def replay_cuts(P: RectilinearPolygon, cuts: list[dict]) -> list[RectilinearPolygon]:
    """Re-apply serialized cuts in order; returns the resulting pieces."""
    live = {fingerprint(P): P}
    for c in cuts:
        host = live.pop(c["host"])
        r = split(host, Cut(CutKind(c["kind"]), tuple(tuple(p) for p in c["polyline"])))
        for Q in (r.part1, r.part2):
            live[fingerprint(Q)] = Q
    return list(live.values())


def pieces_from_json(text: str) -> list[RectilinearPolygon]:
    data = json.loads(text)
    raw = data["pieces"] if isinstance(data, dict) else data
    try:
        return [normalize(q) for q in raw]
    except GeometryError as e:
        raise ValidationError(f"bad piece: {e}") from e


# --- SVG -----------------------------------------------------------------------

UNIT = 24
_FILLS = ("#dbe9f6", "#f6e3cf", "#e1f0d8", "#efdcef", "#f4f1c8", "#d8eeec")


def to_svg(P: RectilinearPolygon, result: Optional[PartitionResult] = None, patrols=None) -> str:
    x0, y0, x1, y1 = P.bbox()
    pad = 1
    W, H = (x1 - x0 + 2 * pad) * UNIT, (y1 - y0 + 2 * pad) * UNIT

    def sx(x):
        return (x - x0 + pad) * UNIT

    def sy(y):  # svg y grows downward
        return (y1 - y + pad) * UNIT

    def pts(vs):
        return " ".join(f"{_fmt(sx(v[0]))},{_fmt(sy(v[1]))}" for v in vs)

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">']
    out.append('<rect width="100%" height="100%" fill="white"/>')
    if result is not None:
        for i, Q in enumerate(result.pieces):
            out.append(f'<polygon points="{pts(Q.vertices)}" fill="{_FILLS[i % len(_FILLS)]}" stroke="#999" stroke-width="1"/>')
    out.append(f'<polygon points="{pts(P.vertices)}" fill="none" stroke="black" stroke-width="2"/>')
    if result is not None:
        for i, ac in enumerate(result.cuts_applied, start=1):
            pl = ac.cut.cut.polyline
            out.append(f'<polyline points="{pts(pl)}" fill="none" stroke="#c0392b" stroke-width="2" stroke-dasharray="6,3"/>')
            mx, my = _label_spot(pl)
            out.append(f'<circle cx="{_fmt(sx(mx))}" cy="{_fmt(sy(my))}" r="8" fill="white" stroke="#c0392b"/>')
            out.append(f'<text x="{_fmt(sx(mx))}" y="{_fmt(sy(my) + 4)}" font-size="11" text-anchor="middle" fill="#c0392b">{i}</text>')
    for p in patrols or ():
        a, b = p.segment
        if a == b:
            out.append(f'<circle cx="{_fmt(sx(a[0]))}" cy="{_fmt(sy(a[1]))}" r="4" fill="#1a5276"/>')
        else:
            out.append(f'<line x1="{_fmt(sx(a[0]))}" y1="{_fmt(sy(a[1]))}" x2="{_fmt(sx(b[0]))}" y2="{_fmt(sy(b[1]))}" stroke="#1a5276" stroke-width="4" stroke-linecap="round"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _label_spot(pl):
    a, b = pl[0], pl[1]
    return (a[0] + b[0]) / 2, (a[1] + b[1]) / 2


def _fmt(v) -> str:
    v = float(v)
    return str(int(v)) if v == int(v) else f"{v:.2f}"


def emit_result(P: RectilinearPolygon, result: PartitionResult, patrols=None, *,
                json_path=None, svg_path=None) -> dict:
    """Render the result; writes the requested files and returns the texts."""
    texts = {"json": to_json(result_dict(P, result, patrols)), "svg": to_svg(P, result, patrols)}
    for key, path in (("json", json_path), ("svg", svg_path)):
        if path is None:
            continue
        try:
            with open(path, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(texts[key])
        except OSError as e:
            raise IoError(f"cannot write {path}: {e}") from e
    return texts
