"""JSON-lines design files.

Line 1 is a header {"format_version": "1", "kind": ..., "v": ..., [k, T]};
an optional groups record follows for transversal designs; then one body
record per line: a block [a, b, c] for sts/td/decomposition files, or a
parallel class [[a,b,c], ...] for resolution files.  A decomposition file
carries the composed block list plus k in the header, which is the whole
decomposition up to the standard reading-off.  Serialization is canonical
(sorted blocks, fixed key order, compact separators) so parse/serialize
round-trips byte for byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .designs import Block, BlockDesign, Resolution, StsInstance, TdInstance

FORMAT_VERSION = "1"
KINDS = ("sts", "td", "resolution", "decomposition")


@dataclass(frozen=True)
class DesignFileRecord:
    kind: str
    v: int
    k: int | None = None
    T: int | None = None
    blocks: tuple[Block, ...] = ()
    classes: tuple[tuple[Block, ...], ...] = ()
    groups: tuple[tuple[int, ...], ...] | None = None


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def serialize(rec: DesignFileRecord) -> str:
    if rec.kind not in KINDS:
        raise ValueError(f"unknown kind {rec.kind!r}")
    header: dict = {"format_version": FORMAT_VERSION, "kind": rec.kind, "v": rec.v}
    if rec.k is not None:
        header["k"] = rec.k
    if rec.T is not None:
        header["T"] = rec.T
    lines = [_dump(header)]
    if rec.groups is not None:
        lines.append(_dump({"groups": [list(g) for g in rec.groups]}))
    if rec.kind == "resolution":
        for cls in rec.classes:
            lines.append(_dump([list(b) for b in cls]))
    else:
        for b in rec.blocks:
            lines.append(_dump(list(b)))
    return "\n".join(lines) + "\n"


def deserialize(text: str) -> DesignFileRecord:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty design file")
    header = json.loads(lines[0])
    if not isinstance(header, dict):
        raise ValueError("first record must be a header object")
    if header.get("format_version") != FORMAT_VERSION:
        raise ValueError(f"unsupported format_version {header.get('format_version')!r}")
    kind = header.get("kind")
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    v = int(header["v"])
    k = int(header["k"]) if "k" in header else None
    t = int(header["T"]) if "T" in header else None
    body = lines[1:]
    groups = None
    if body and isinstance(json.loads(body[0]), dict):
        rec0 = json.loads(body[0])
        if "groups" not in rec0:
            raise ValueError("unexpected object record in body")
        groups = tuple(tuple(int(p) for p in g) for g in rec0["groups"])
        body = body[1:]
    if kind == "resolution":
        classes = tuple(
            tuple(tuple(int(p) for p in b) for b in json.loads(ln)) for ln in body
        )
        return DesignFileRecord(kind, v, k, t, (), classes, groups)
    blocks = tuple(tuple(int(p) for p in json.loads(ln)) for ln in body)
    return DesignFileRecord(kind, v, k, t, blocks, (), groups)


def write_design(path: str, rec: DesignFileRecord) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(rec))


def read_design(path: str) -> DesignFileRecord:
    with open(path, "r", encoding="utf-8") as fh:
        return deserialize(fh.read())


def sts_record(s: StsInstance, k: int | None = None, t: int | None = None,
               kind: str = "sts") -> DesignFileRecord:
    return DesignFileRecord(kind, s.v, k, t, s.blocks)


def td_record(td: TdInstance) -> DesignFileRecord:
    return DesignFileRecord("td", td.v, None, td.w, td.blocks, (), td.groups)


def resolution_record(d: BlockDesign, r: Resolution) -> DesignFileRecord:
    classes = tuple(tuple(d.blocks[i] for i in cls) for cls in r.classes)
    return DesignFileRecord("resolution", d.v, None, None, (), classes)


def resolution_from_record(rec: DesignFileRecord, d: BlockDesign) -> Resolution:
    """Rebind a resolution file's inline blocks to indices into d."""
    index = d.block_index()
    try:
        classes = tuple(
            tuple(sorted(index[tuple(sorted(b))] for b in cls)) for cls in rec.classes
        )
    except KeyError as exc:
        raise ValueError(f"resolution references unknown block {exc.args[0]}") from exc
    return Resolution(classes)
