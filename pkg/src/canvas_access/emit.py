"""Accessible replacement document: widget nodes, tab order, event bindings,
and the HTML/JSON serializers.

The HTML output supersedes the canvas with an absolutely positioned container
of the same size. Every widget becomes a natively focusable input element
carrying role, name, value and tabindex; a fixed script template wires the
keyboard contract (Tab traversal plus coordinate dispatch for
position-dependent handlers).
"""

from __future__ import annotations

import html as _html
import json
from dataclasses import dataclass, field

from .cbir import Classification, WidgetClass
from .labeling import Region
from .textmap import TextAssignment
from .trace import CanvasTrace, EventBinding

__all__ = [
    "WidgetNode",
    "AccessibleDocument",
    "Diagnostics",
    "assign_tab_indices",
    "map_bindings",
    "classify_or_reject",
    "emit_html",
    "emit_json",
    "parse_document_json",
]

_INPUT_TYPE = {
    WidgetClass.TEXT_BOX: "text",
    WidgetClass.CHECKBOX_SELECTED: "checkbox",
    WidgetClass.CHECKBOX_UNSELECTED: "checkbox",
    WidgetClass.RADIO_SELECTED: "radio",
    WidgetClass.RADIO_UNSELECTED: "radio",
    WidgetClass.RECT_BUTTON: "button",
    WidgetClass.CIRC_BUTTON: "button",
}

_ROLE = {
    "text": "textbox",
    "checkbox": "checkbox",
    "radio": "radio",
    "button": "button",
}

# radios whose centers share a horizontal or vertical band this wide are one group
RADIO_BAND = 8


@dataclass
class WidgetNode:
    id: str
    widget_class: WidgetClass
    bbox: tuple[int, int, int, int]  # min_x, min_y, max_x, max_y inclusive
    label: str = ""
    value: str = ""
    tab_index: int = 0
    bindings: list[EventBinding] = field(default_factory=list)
    checked: bool | None = None

    @property
    def center(self) -> tuple[int, int]:
        x0, y0, x1, y1 = self.bbox
        return ((x0 + x1) // 2, (y0 + y1) // 2)


@dataclass
class AccessibleDocument:
    width: int
    height: int
    nodes: list[WidgetNode] = field(default_factory=list)
    standalone_labels: list[TextAssignment] = field(default_factory=list)
    live_region: str = "polite"

    def __post_init__(self):
        if self.live_region not in ("polite", "assertive", "off"):
            raise ValueError(f"bad live region politeness {self.live_region!r}")
        for node in self.nodes:
            x0, y0, x1, y1 = node.bbox
            if x0 < 0 or y0 < 0 or x1 >= self.width or y1 >= self.height:
                raise ValueError(
                    f"node {node.id} bbox {node.bbox} outside the "
                    f"{self.width}x{self.height} document"
                )


@dataclass
class Diagnostics:
    rejected: list[dict] = field(default_factory=list)
    unresolved_letters: list[tuple[int, int, int, int]] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)


def assign_tab_indices(nodes: list[WidgetNode]) -> list[WidgetNode]:
    """Sort by (top, left, detection order) and number tab indices 1..n."""
    ordered = sorted(
        range(len(nodes)), key=lambda i: (nodes[i].bbox[1], nodes[i].bbox[0], i)
    )
    result = [nodes[i] for i in ordered]
    for tab, node in enumerate(result, start=1):
        node.tab_index = tab
    return result


def map_bindings(trace: CanvasTrace, nodes: list[WidgetNode]) -> list[WidgetNode]:
    """Attach every trace binding to every node.

    Position-independent handlers run identically everywhere; position
    dependent ones get dispatched with the node's own center coordinate at
    emit time, so each element operates as if clicked at its location.
    """
    for node in nodes:
        node.bindings = list(trace.bindings)
    return nodes


def classify_or_reject(c: Classification, cutoff: float) -> WidgetClass | None:
    """Accept the class when the match distance is within the cutoff
    (inclusive); None means the region stays unconverted."""
    if cutoff <= 0:
        raise ValueError("cutoff must be positive")
    return c.widget_class if c.distance <= cutoff else None


def _radio_group_names(nodes: list[WidgetNode]) -> dict[str, str]:
    """Group radios sharing a horizontal or vertical band into one name."""
    radios = [
        n for n in nodes
        if n.widget_class in (WidgetClass.RADIO_SELECTED, WidgetClass.RADIO_UNSELECTED)
    ]
    parent = {n.id: n.id for n in radios}

    def find(a: str) -> str:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i, a in enumerate(radios):
        for b in radios[i + 1 :]:
            ax, ay = a.center
            bx, by = b.center
            if abs(ax - bx) <= RADIO_BAND or abs(ay - by) <= RADIO_BAND:
                parent[find(a.id)] = find(b.id)

    roots: dict[str, str] = {}
    names: dict[str, str] = {}
    counter = 0
    for n in radios:
        root = find(n.id)
        if root not in roots:
            counter += 1
            roots[root] = f"radiogroup{counter}"
        names[n.id] = roots[root]
    return names


_SCRIPT_TEMPLATE = """<script>
var BINDINGS = __BINDINGS__;
var container = document.getElementById("canvas-a11y");
container.addEventListener("keyup", function (event) {
  if (event.key !== "Tab") { return; }
  var active = document.activeElement;
  if (!active || !(active.id in BINDINGS)) { return; }
  var entry = BINDINGS[active.id];
  entry.bindings.forEach(function (binding) {
    if (binding.event !== "keyup" && binding.event !== "click") { return; }
    var detail = binding.positionDependent
      ? { handler: binding.handler, x: entry.center[0], y: entry.center[1] }
      : { handler: binding.handler };
    active.dispatchEvent(new CustomEvent("canvas-handler", { detail: detail }));
  });
});
</script>"""


def emit_html(doc: AccessibleDocument) -> str:
    """Serialize the document as a standalone HTML page (deterministic)."""
    esc = lambda s: _html.escape(str(s), quote=True)
    radio_names = _radio_group_names(doc.nodes)
    type_counters: dict[str, int] = {}
    lines = [
        "<!DOCTYPE html>",
        '<html lang="en">',
        '<head><meta charset="utf-8"><title>Accessible canvas replacement</title></head>',
        "<body>",
        f'<div id="canvas-a11y" role="group" aria-live="{doc.live_region}" '
        f'style="position: relative; width: {doc.width}px; height: {doc.height}px">',
    ]
    for node in sorted(doc.nodes, key=lambda n: n.tab_index):
        input_type = _INPUT_TYPE.get(node.widget_class)
        if input_type is None:
            raise ValueError(f"{node.widget_class} is not an emittable widget class")
        type_counters[input_type] = type_counters.get(input_type, 0) + 1
        if node.id in radio_names:
            name = radio_names[node.id]
        else:
            name = f"{input_type}{type_counters[input_type]}"
        value = node.value if node.value else input_type
        x0, y0, x1, y1 = node.bbox
        attrs = [
            f'id="{esc(node.id)}"',
            f'type="{input_type}"',
            f'role="{_ROLE[input_type]}"',
            f'name="{esc(name)}"',
            f'value="{esc(value)}"',
            f'tabindex="{node.tab_index}"',
        ]
        if node.label:
            attrs.append(f'aria-label="{esc(node.label)}"')
        if node.checked:
            attrs.append('checked="checked"')
        attrs.append(
            f'style="position: absolute; left: {x0}px; top: {y0}px; '
            f"width: {x1 - x0 + 1}px; height: {y1 - y0 + 1}px\""
        )
        lines.append(f"  <input {' '.join(attrs)} />")
    for i, assignment in enumerate(doc.standalone_labels, start=1):
        x, y = assignment.origin
        lines.append(
            f'  <label id="label{i}" style="position: absolute; '
            f'left: {int(x)}px; top: {int(y)}px">{esc(assignment.text)}</label>'
        )
    binding_table = {
        node.id: {
            "center": list(node.center),
            "bindings": [
                {
                    "event": b.event_name,
                    "handler": b.handler_ref,
                    "positionDependent": b.position_dependent,
                }
                for b in node.bindings
            ],
        }
        for node in doc.nodes
    }
    script = _SCRIPT_TEMPLATE.replace(
        "__BINDINGS__", json.dumps(binding_table, sort_keys=True)
    )
    lines.append(script)
    lines.extend(["</div>", "</body>", "</html>", ""])
    return "\n".join(lines)


def _node_to_dict(node: WidgetNode) -> dict:
    entry = {
        "id": node.id,
        "class": node.widget_class.value,
        "bbox": list(node.bbox),
        "label": node.label,
        "value": node.value,
        "tabIndex": node.tab_index,
        "bindings": [
            {
                "event": b.event_name,
                "handler": b.handler_ref,
                "positionDependent": b.position_dependent,
                **(
                    {"coordinate": list(node.center)}
                    if b.position_dependent
                    else {}
                ),
            }
            for b in node.bindings
        ],
    }
    if node.widget_class in (
        WidgetClass.CHECKBOX_SELECTED,
        WidgetClass.CHECKBOX_UNSELECTED,
        WidgetClass.RADIO_SELECTED,
        WidgetClass.RADIO_UNSELECTED,
    ):
        entry["checked"] = bool(node.checked)
    return entry


def emit_json(doc: AccessibleDocument, diagnostics: Diagnostics | None = None) -> str:
    """Canonical JSON: sorted keys, stable formatting, byte-exact per input."""
    diagnostics = diagnostics or Diagnostics()
    payload = {
        "version": 1,
        "width": doc.width,
        "height": doc.height,
        "liveRegion": doc.live_region,
        "nodes": [_node_to_dict(n) for n in sorted(doc.nodes, key=lambda n: n.tab_index)],
        "standaloneLabels": [
            {"text": a.text, "x": a.origin[0], "y": a.origin[1]}
            for a in doc.standalone_labels
        ],
        "diagnostics": {
            "rejected": diagnostics.rejected,
            "unresolvedLetters": [list(b) for b in diagnostics.unresolved_letters],
            "warnings": diagnostics.warnings,
        },
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def parse_document_json(text: str) -> AccessibleDocument:
    """Rebuild an AccessibleDocument from emit_json output."""
    payload = json.loads(text)
    by_value = {cls.value: cls for cls in WidgetClass}
    nodes = []
    for raw in payload["nodes"]:
        bindings = [
            EventBinding(b["event"], b["positionDependent"], b["handler"])
            for b in raw["bindings"]
        ]
        nodes.append(
            WidgetNode(
                id=raw["id"],
                widget_class=by_value[raw["class"]],
                bbox=tuple(raw["bbox"]),
                label=raw["label"],
                value=raw["value"],
                tab_index=raw["tabIndex"],
                bindings=bindings,
                checked=raw.get("checked"),
            )
        )
    labels = [
        TextAssignment(a["text"], None, "label", (a["x"], a["y"]))
        for a in payload["standaloneLabels"]
    ]
    return AccessibleDocument(
        width=payload["width"],
        height=payload["height"],
        nodes=nodes,
        standalone_labels=labels,
        live_region=payload["liveRegion"],
    )


def make_node(
    region: Region, widget_class: WidgetClass, node_id: str = ""
) -> WidgetNode:
    """WidgetNode from a classified region; checked tracks the class variant."""
    checked: bool | None = None
    if widget_class in (WidgetClass.CHECKBOX_SELECTED, WidgetClass.RADIO_SELECTED):
        checked = True
    elif widget_class in (WidgetClass.CHECKBOX_UNSELECTED, WidgetClass.RADIO_UNSELECTED):
        checked = False
    return WidgetNode(id=node_id, widget_class=widget_class, bbox=region.bbox, checked=checked)
