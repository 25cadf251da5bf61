"""Analysis documents: deterministic JSON and plain-text renderings."""

from __future__ import annotations

import json

from .cohomology import CohomologyReport, GapEntry, cohomology_report, graded_dim, summand_text
from .completion import Completion, complete_fan
from .fan import Fan, validate_fan


def _gap_dict(entry: GapEntry) -> dict:
    g = entry.gap
    return {
        "index": entry.index,
        "from": g.from_ray.to_list(),
        "to": g.to_ray.to_list(),
        "angle_class": g.angle_class.value,
        "type": g.cone_type.to_dict() if g.cone_type else None,
        "chain": entry.chain.to_dict() if entry.chain is not None else None,
    }


def _cohomology_dict(rep: CohomologyReport) -> dict:
    return {
        "h0": {"dim": rep.h0_dim},
        "h1": {"summands": [s.to_dict() for s in rep.h1_summands]},
        "h2": {"dim": rep.h2_dim},
    }


def completion_dict(c: Completion, detailed: bool = False) -> dict:
    out = {
        "added_rays": [r.to_list() for r in c.added_rays],
        "cones": [list(k) for k in c.completed_fan.cones],
    }
    if detailed:
        out["rays"] = [r.to_list() for r in c.completed_fan.rays]
        out["gaps"] = [
            {
                "index": res.gap_index,
                "from": res.gap.from_ray.to_list(),
                "to": res.gap.to_ray.to_list(),
                "angle_class": res.gap.angle_class.value,
                "splitting_rays": [r.to_list() for r in res.splitting_rays],
                "pieces": [
                    {
                        "from": pc.from_ray.to_list(),
                        "to": pc.to_ray.to_list(),
                        "type": pc.cone_type.to_dict(),
                        "chain": pc.chain.to_dict(),
                    }
                    for pc in res.pieces
                ],
            }
            for res in c.gaps
        ]
    return out


def input_dict(fan: Fan, path: str | None = None, builtin: str | None = None) -> dict:
    return {"file": path, "builtin": builtin, "fan": fan.to_dict()}


def analysis_document(
    fan: Fan,
    path: str | None = None,
    builtin: str | None = None,
    max_degree: int | None = None,
) -> dict:
    """Everything known about a valid, supported fan, as plain JSON types."""
    validation = validate_fan(fan)
    rep = cohomology_report(fan)
    doc = {
        "input": input_dict(fan, path, builtin),
        "validation": {"ok": validation.ok, "violations": [str(v) for v in validation.violations]},
        "classification": rep.fan_class.kind.value,
        "gaps": [_gap_dict(e) for e in rep.gaps],
        "completion": completion_dict(complete_fan(fan)),
        "cohomology": _cohomology_dict(rep),
    }
    if max_degree is not None:
        doc["graded_dims"] = [
            {"summand": summand_text(s), "dims": [graded_dim(s, d) for d in range(max_degree + 1)]}
            for s in rep.h1_summands
        ]
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def render_text(doc: dict) -> str:
    fan = doc["input"]["fan"]
    label = doc["input"]["builtin"] or doc["input"]["file"] or fan["name"] or "fan"
    lines = [
        f"fan: {label} ({len(fan['rays'])} rays, {len(fan['cones'])} cones)",
        f"classification: {doc['classification']}",
    ]
    if doc["gaps"]:
        lines.append("gaps:")
    for g in doc["gaps"]:
        frm, to = (f"({v[0]},{v[1]})" for v in (g["from"], g["to"]))
        row = f"  [{g['index']}] {frm} -> {to}  {g['angle_class']}"
        if g["type"]:
            row += f"  type ({g['type']['p']},{g['type']['q']})"
            ch = g["chain"]
            if ch["rays"]:
                row += "  chain: " + " ".join(
                    f"({r[0]},{r[1]})[{s}]" for r, s in zip(ch["rays"], ch["self_intersections"])
                )
            else:
                row += "  chain: (point)"
        lines.append(row)
    added = doc["completion"]["added_rays"]
    lines.append(
        "completion: "
        + (" ".join(f"({r[0]},{r[1]})" for r in added) if added else "no rays added")
    )
    coh = doc["cohomology"]
    summands = coh["h1"]["summands"]
    lines.append(f"H0_c = {'C' if coh['h0']['dim'] else '0'}")
    lines.append("H1_c = " + (" ⊕ ".join(s["text"] for s in summands) if summands else "0"))
    lines.append(f"H2_c = {'0' if not coh['h2']['dim'] else coh['h2']['dim']}")
    if doc.get("graded_dims"):
        lines.append("graded dimensions by total degree:")
        for row in doc["graded_dims"]:
            lines.append(f"  {row['summand']}: {' '.join(str(x) for x in row['dims'])}")
    return "\n".join(lines) + "\n"
