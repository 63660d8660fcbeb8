import { readFileSync, readdirSync } from "node:fs";
import { join } from "node:path";

import { describe, expect, it } from "vitest";

import { renderScene } from "../src/render.js";
import { SceneSpec } from "../src/scene.js";
import { validateTrace } from "../src/trace.js";

const SCENES_DIR = join(__dirname, "..", "scenes");

describe("validateTrace", () => {
  it("accepts every trace the renderer produces", () => {
    for (const file of readdirSync(SCENES_DIR).filter((f) => f.endsWith(".scene.json"))) {
      const spec = JSON.parse(readFileSync(join(SCENES_DIR, file), "utf-8")) as SceneSpec;
      const { trace } = renderScene(spec);
      expect(validateTrace(trace)).toEqual([]);
    }
  });

  it("rejects a wrong version", () => {
    expect(validateTrace({ version: 2, canvas: { width: 10, height: 10 } })).toContain(
      "$.version: must be 1",
    );
  });

  it("rejects missing canvas dimensions", () => {
    const errors = validateTrace({ version: 1, canvas: { width: 10 } });
    expect(errors.some((e) => e.startsWith("$.canvas"))).toBe(true);
  });

  it("rejects non-increasing seq", () => {
    const errors = validateTrace({
      version: 1,
      canvas: { width: 10, height: 10 },
      commands: [
        { seq: 1, kind: "fillRect", x: 0, y: 0, w: 2, h: 2 },
        { seq: 1, kind: "fillRect", x: 4, y: 4, w: 2, h: 2 },
      ],
    });
    expect(errors.some((e) => e.includes("strictly increasing"))).toBe(true);
  });

  it("rejects non-positive rect sizes", () => {
    const errors = validateTrace({
      version: 1,
      canvas: { width: 10, height: 10 },
      commands: [{ seq: 1, kind: "strokeRect", x: 0, y: 0, w: -3, h: 2 }],
    });
    expect(errors.some((e) => e.includes("positive"))).toBe(true);
  });

  it("rejects malformed bindings", () => {
    const errors = validateTrace({
      version: 1,
      canvas: { width: 10, height: 10 },
      bindings: [{ event: "", positionDependent: "yes", handler: 3 }],
    });
    expect(errors).toHaveLength(3);
  });

  it("tolerates unknown command kinds (the consumer skips them)", () => {
    const errors = validateTrace({
      version: 1,
      canvas: { width: 10, height: 10 },
      commands: [{ seq: 1, kind: "bezierCurveTo", foo: 1 }],
    });
    expect(errors).toEqual([]);
  });
});
