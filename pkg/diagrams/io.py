import json
import os
import time
from typing import Any, Dict, List

from pydantic import BaseModel, Field, ValidationError

from diagrams.exceptions import ParseError
from diagrams.model import Crossing, LinkDiagram
from diagrams.pd import parse_pd
from utils.logger import KnotClusterLogger

logger = KnotClusterLogger("diagram-io")


class CrossingDocument(BaseModel):
    segments_cw: List[int] = Field(..., min_length=4, max_length=4, description="Segment labels in clockwise order")
    under_pair: int = Field(..., ge=0, le=1, description="0: entries 1 and 3 pass under; 1: entries 2 and 4")


class DiagramDocument(BaseModel):
    name: str = Field("", description="Diagram name")
    crossings: List[CrossingDocument]
    orientations: Dict[int, int] = Field(..., description="Tail crossing index of every segment")


def from_json(doc: Dict[str, Any]) -> LinkDiagram:
    """
    Build a diagram from its JSON document.

    Raises:
        ParseError: the document does not match the schema
        DiagramError: the described map is invalid
    """
    try:
        parsed = DiagramDocument.model_validate(doc)
    except ValidationError as e:
        raise ParseError(f"Invalid diagram document: {e}") from e
    crossings = []
    for entry in parsed.crossings:
        s1, s2, s3, s4 = entry.segments_cw
        crossings.append(Crossing((s1, s4, s3, s2), entry.under_pair))
    return LinkDiagram(crossings, parsed.orientations, parsed.name)


def export_json(d: LinkDiagram) -> Dict[str, Any]:
    """Inverse of from_json"""
    crossings = []
    for crossing in d.crossings:
        c0, c1, c2, c3 = crossing.segments
        crossings.append({"segments_cw": [c0, c3, c2, c1], "under_pair": crossing.under})
    return {
        "name": d.name,
        "crossings": crossings,
        "orientations": {str(label): d.tails[label] for label in d.labels},
    }


def export_dot(d: LinkDiagram) -> str:
    """Diagram as an undirected 4-valent graph with segment-labelled edges"""
    lines = [f'graph "{d.name or "diagram"}" {{']
    for x in range(d.n):
        lines.append(f"  c{x};")
    for label in d.labels:
        (x, _), (y, _) = d.ends[label]
        lines.append(f'  c{x} -- c{y} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_diagram(path: str) -> LinkDiagram:
    """
    Load a diagram from a JSON document, a PD file, or a "gen:" continued fraction.

    Args:
        path: file path, or "gen:2,1,1,2" for a generated 2-bridge diagram

    Returns:
        LinkDiagram
    """
    start_time = time.time()
    if path.startswith("gen:"):
        from diagrams.two_bridge import two_bridge

        try:
            cf = [int(v) for v in path[4:].replace(" ", "").split(",") if v]
        except ValueError as e:
            raise ParseError(f"Invalid continued fraction {path!r}") from e
        diagram = two_bridge(cf)
    else:
        if not os.path.exists(path):
            raise FileNotFoundError(f"File not found: {path}")
        _, ext = os.path.splitext(path)
        with open(path, "r", encoding="utf-8") as f:
            content = f.read()
        if ext.lower() == ".json":
            try:
                doc = json.loads(content)
            except json.JSONDecodeError as e:
                raise ParseError(f"Invalid JSON in {path}: {e}") from e
            diagram = from_json(doc)
        else:
            diagram = parse_pd(content, name=os.path.splitext(os.path.basename(path))[0])

    duration_ms = int((time.time() - start_time) * 1000)
    logger.log_diagram_loaded(path, diagram.n, len(diagram.components), duration_ms)
    return diagram
