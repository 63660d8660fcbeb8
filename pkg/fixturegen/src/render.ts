/**
 * Renders a validated scene spec to its matched (PNG, trace, expectation)
 * triple. Widgets draw exclusively through the recorded canvas vocabulary:
 * strokeRect/fillRect for boxy elements and marks, arc for circles, fillText
 * for labels.
 */

import { GLYPH_H, SCALE, textWidth } from "./font.js";
import { CanvasRecorder, TraceDoc } from "./raster.js";
import {
  ExpectationDoc,
  SceneSpec,
  expectationFromScene,
  validateScene,
} from "./scene.js";

export const CHECK_MARK = 6;
export const RADIO_DOT = 4;

export interface RenderedScene {
  png: Buffer;
  trace: TraceDoc;
  expectation: ExpectationDoc;
}

export function renderScene(spec: SceneSpec): RenderedScene {
  validateScene(spec);
  const c = new CanvasRecorder(spec.canvas.width, spec.canvas.height);
  c.setFont("14px monospace");
  c.setTextAlign("left");
  for (const w of spec.widgets ?? []) {
    switch (w.type) {
      case "textbox":
        c.strokeRect(w.x!, w.y!, w.w!, w.h!);
        break;
      case "checkbox": {
        c.strokeRect(w.x!, w.y!, w.size!, w.size!);
        if (w.selected) {
          const m = Math.floor((w.size! - CHECK_MARK) / 2);
          c.fillRect(w.x! + m, w.y! + m, CHECK_MARK, CHECK_MARK);
        }
        break;
      }
      case "radio": {
        c.arc(w.cx!, w.cy!, w.r!);
        if (w.selected) {
          c.fillRect(w.cx! - RADIO_DOT / 2, w.cy! - RADIO_DOT / 2, RADIO_DOT, RADIO_DOT);
        }
        break;
      }
      case "rectButton": {
        c.strokeRect(w.x!, w.y!, w.w!, w.h!);
        const tx = w.x! + Math.floor((w.w! - textWidth(w.text!)) / 2);
        const ty = w.y! + Math.floor(w.h! / 2) + Math.floor((GLYPH_H * SCALE) / 2);
        c.fillText(w.text!, tx, ty);
        break;
      }
      case "circButton": {
        c.arc(w.cx!, w.cy!, w.r!);
        const tx = w.cx! - Math.floor(textWidth(w.text!) / 2);
        const ty = w.cy! + Math.floor((GLYPH_H * SCALE) / 2);
        c.fillText(w.text!, tx, ty);
        break;
      }
    }
  }
  for (const label of spec.labels ?? []) {
    c.fillText(label.text, label.x, label.y);
  }
  for (const b of spec.bindings ?? []) {
    c.addBinding(b.event, b.positionDependent, b.handler);
  }
  return { png: c.pngBytes(), trace: c.traceDoc(), expectation: expectationFromScene(spec) };
}

/** JSON with recursively sorted keys and stable 2-space indentation. */
export function canonicalJson(value: unknown): string {
  const sort = (v: unknown): unknown => {
    if (Array.isArray(v)) return v.map(sort);
    if (v !== null && typeof v === "object") {
      const entries = Object.entries(v as Record<string, unknown>)
        .sort(([a], [b]) => (a < b ? -1 : a > b ? 1 : 0))
        .map(([k, val]) => [k, sort(val)] as const);
      return Object.fromEntries(entries);
    }
    return v;
  };
  return JSON.stringify(sort(value), null, 2) + "\n";
}
