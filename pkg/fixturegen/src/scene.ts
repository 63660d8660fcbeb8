/**
 * Scene specifications: validation and ground-truth expectations. Mirrors the
 * scene-spec JSON format documented in docs/formats.md.
 */

import { hasGlyphs, textHeight, textWidth } from "./font.js";

export const SEPARATION = 8;

export interface WidgetSpec {
  type: "textbox" | "checkbox" | "radio" | "rectButton" | "circButton";
  x?: number;
  y?: number;
  w?: number;
  h?: number;
  size?: number;
  cx?: number;
  cy?: number;
  r?: number;
  text?: string;
  selected?: boolean;
}

export interface LabelSpec {
  text: string;
  x: number;
  y: number;
}

export interface BindingSpec {
  event: string;
  positionDependent: boolean;
  handler: string;
}

export interface SceneSpec {
  name?: string;
  seed?: number;
  canvas: { width: number; height: number };
  widgets?: WidgetSpec[];
  labels?: LabelSpec[];
  bindings?: BindingSpec[];
}

export interface ExpectedWidget {
  class: string;
  bbox: [number, number, number, number]; // x, y, width, height
  text: string | null;
  checked: boolean | null;
  tabIndex: number;
}

export interface ExpectationDoc {
  version: 1;
  canvas: { width: number; height: number };
  widgets: ExpectedWidget[];
  standaloneLabels: LabelSpec[];
}

export class SceneSpecError extends Error {}

export function widgetBbox(w: WidgetSpec): [number, number, number, number] {
  switch (w.type) {
    case "textbox":
    case "rectButton":
      return [w.x!, w.y!, w.w!, w.h!];
    case "checkbox":
      return [w.x!, w.y!, w.size!, w.size!];
    case "radio":
    case "circButton":
      return [w.cx! - w.r!, w.cy! - w.r!, 2 * w.r! + 1, 2 * w.r! + 1];
    default:
      throw new SceneSpecError(`unknown widget type ${(w as WidgetSpec).type}`);
  }
}

export function widgetClassName(w: WidgetSpec): string {
  switch (w.type) {
    case "textbox":
      return "TextBox";
    case "rectButton":
      return "RectButton";
    case "circButton":
      return "CircButton";
    case "checkbox":
      return w.selected ? "CheckBoxSelected" : "CheckBoxUnselected";
    case "radio":
      return w.selected ? "RadioSelected" : "RadioUnselected";
  }
}

function labelBbox(label: LabelSpec): [number, number, number, number] {
  return [label.x, label.y - textHeight(), textWidth(label.text), textHeight()];
}

export function validateScene(spec: SceneSpec): void {
  const { width, height } = spec.canvas;
  if (width < 1 || height < 1) {
    throw new SceneSpecError("canvas dimensions must be positive");
  }
  const territories: Array<[number, number, number, number, string]> = [];
  for (const w of spec.widgets ?? []) {
    if (w.text !== undefined && !hasGlyphs(w.text)) {
      throw new SceneSpecError(`text ${JSON.stringify(w.text)} not in the fixture font`);
    }
    const [x, y, bw, bh] = widgetBbox(w);
    if (x < 2 || y < 2 || x + bw > width - 2 || y + bh > height - 2) {
      throw new SceneSpecError(`widget ${w.type} exceeds the canvas (needs a 2 px quiet border)`);
    }
    territories.push([x, y, x + bw - 1, y + bh - 1, `widget ${w.type}`]);
  }
  for (const label of spec.labels ?? []) {
    if (!hasGlyphs(label.text)) {
      throw new SceneSpecError(`text ${JSON.stringify(label.text)} not in the fixture font`);
    }
    const [x, y, bw, bh] = labelBbox(label);
    if (x < 2 || y < 2 || x + bw > width - 2 || y + bh > height - 2) {
      throw new SceneSpecError(`label ${JSON.stringify(label.text)} exceeds the canvas`);
    }
    territories.push([x, y, x + bw - 1, y + bh - 1, `label ${JSON.stringify(label.text)}`]);
  }
  const half = SEPARATION / 2;
  for (let i = 0; i < territories.length; i++) {
    for (let j = i + 1; j < territories.length; j++) {
      const a = territories[i];
      const b = territories[j];
      if (
        a[0] - half <= b[2] + half &&
        b[0] - half <= a[2] + half &&
        a[1] - half <= b[3] + half &&
        b[1] - half <= a[3] + half
      ) {
        throw new SceneSpecError(`${a[4]} overlaps ${b[4]} (separation < ${SEPARATION})`);
      }
    }
  }
}

export function expectationFromScene(spec: SceneSpec): ExpectationDoc {
  const widgets = (spec.widgets ?? []).map((w) => {
    const [x, y, bw, bh] = widgetBbox(w);
    return {
      class: widgetClassName(w),
      bbox: [x, y, bw, bh] as [number, number, number, number],
      text: w.text ?? null,
      checked: w.type === "checkbox" || w.type === "radio" ? Boolean(w.selected) : null,
      tabIndex: 0,
    };
  });
  const order = widgets
    .map((w, i) => i)
    .sort((a, b) => widgets[a].bbox[1] - widgets[b].bbox[1] || widgets[a].bbox[0] - widgets[b].bbox[0]);
  order.forEach((widgetIndex, position) => {
    widgets[widgetIndex].tabIndex = position + 1;
  });
  return {
    version: 1,
    canvas: { width: spec.canvas.width, height: spec.canvas.height },
    widgets,
    standaloneLabels: (spec.labels ?? []).map((l) => ({ text: l.text, x: l.x, y: l.y })),
  };
}
