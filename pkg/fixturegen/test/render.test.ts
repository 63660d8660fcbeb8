import { readFileSync, readdirSync } from "node:fs";
import { join } from "node:path";

import { describe, expect, it } from "vitest";

import { readPngDimensions } from "../src/png.js";
import { canonicalJson, renderScene } from "../src/render.js";
import { SceneSpec, SceneSpecError, expectationFromScene } from "../src/scene.js";

const SCENES_DIR = join(__dirname, "..", "scenes");

function loadSpec(name: string): SceneSpec {
  return JSON.parse(readFileSync(join(SCENES_DIR, name), "utf-8")) as SceneSpec;
}

describe("renderScene", () => {
  it("renders the two-checkbox use case with matching trace commands", () => {
    const rendered = renderScene(loadSpec("usecase1.scene.json"));
    const strokes = rendered.trace.commands.filter((c) => c.kind === "strokeRect");
    expect(strokes).toHaveLength(2);
    const marks = rendered.trace.commands.filter((c) => c.kind === "fillRect");
    expect(marks).toHaveLength(1); // the selected checkbox's mark
    expect(rendered.expectation.widgets.map((w) => w.class).sort()).toEqual([
      "CheckBoxSelected",
      "CheckBoxUnselected",
    ]);
  });

  it("renders the three-button use case with arcs and text", () => {
    const rendered = renderScene(loadSpec("usecase2.scene.json"));
    expect(rendered.trace.commands.filter((c) => c.kind === "arc")).toHaveLength(3);
    expect(rendered.trace.commands.filter((c) => c.kind === "fillText")).toHaveLength(3);
    expect(rendered.expectation.widgets.map((w) => w.tabIndex)).toEqual([1, 2, 3]);
  });

  it("keeps PNG dimensions equal to trace canvas dimensions for every sample", () => {
    for (const file of readdirSync(SCENES_DIR).filter((f) => f.endsWith(".scene.json"))) {
      const rendered = renderScene(loadSpec(file));
      const dims = readPngDimensions(rendered.png);
      expect(dims.width).toBe(rendered.trace.canvas.width);
      expect(dims.height).toBe(rendered.trace.canvas.height);
    }
  });

  it("renders an empty scene to a blank canvas with empty expectations", () => {
    const rendered = renderScene({ canvas: { width: 80, height: 50 } });
    expect(rendered.trace.commands.filter((c) => c.kind !== "setFont" && c.kind !== "setTextAlign"))
      .toHaveLength(0);
    expect(rendered.expectation.widgets).toHaveLength(0);
    const dims = readPngDimensions(rendered.png);
    expect(dims).toEqual({ width: 80, height: 50 });
  });

  it("is deterministic: identical specs give identical bytes", () => {
    const spec = loadSpec("scene_000.scene.json");
    const a = renderScene(spec);
    const b = renderScene(spec);
    expect(a.png.equals(b.png)).toBe(true);
    expect(canonicalJson(a.trace)).toBe(canonicalJson(b.trace));
    expect(canonicalJson(a.expectation)).toBe(canonicalJson(b.expectation));
  });

  it("rejects overlapping widgets", () => {
    const spec: SceneSpec = {
      canvas: { width: 200, height: 120 },
      widgets: [
        { type: "checkbox", x: 20, y: 20, size: 16 },
        { type: "checkbox", x: 24, y: 24, size: 16 },
      ],
    };
    expect(() => renderScene(spec)).toThrow(SceneSpecError);
    expect(() => renderScene(spec)).toThrow(/overlaps/);
  });

  it("rejects widgets outside the canvas", () => {
    expect(() =>
      renderScene({
        canvas: { width: 60, height: 60 },
        widgets: [{ type: "textbox", x: 10, y: 40, w: 70, h: 16 }],
      }),
    ).toThrow(/exceeds the canvas/);
  });

  it("rejects text outside the fixture font", () => {
    expect(() =>
      renderScene({
        canvas: { width: 200, height: 100 },
        widgets: [{ type: "rectButton", x: 20, y: 20, w: 60, h: 24, text: "fo@" }],
      }),
    ).toThrow(/not in the fixture font/);
  });

  it("orders tab indices top-to-bottom then left-to-right", () => {
    const expectation = expectationFromScene({
      canvas: { width: 300, height: 200 },
      widgets: [
        { type: "checkbox", x: 120, y: 20, size: 16 },
        { type: "checkbox", x: 20, y: 20, size: 16 },
        { type: "checkbox", x: 20, y: 100, size: 16 },
      ],
    });
    const byTab = [...expectation.widgets].sort((a, b) => a.tabIndex - b.tabIndex);
    expect(byTab.map((w) => [w.bbox[0], w.bbox[1]])).toEqual([
      [20, 20],
      [120, 20],
      [20, 100],
    ]);
  });

  it("marks selected state in expectations", () => {
    const expectation = expectationFromScene({
      canvas: { width: 200, height: 200 },
      widgets: [
        { type: "radio", cx: 40, cy: 40, r: 8, selected: true },
        { type: "textbox", x: 20, y: 100, w: 64, h: 16 },
      ],
    });
    expect(expectation.widgets[0].checked).toBe(true);
    expect(expectation.widgets[1].checked).toBeNull();
  });
});
