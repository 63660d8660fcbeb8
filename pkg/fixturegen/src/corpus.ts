/**
 * Batch rendering: every *.scene.json in a directory becomes a matched
 * triple, plus a manifest of content hashes so regeneration is checkable.
 */

import { createHash } from "node:crypto";
import { mkdirSync, readFileSync, readdirSync, writeFileSync } from "node:fs";
import { basename, join } from "node:path";

import { canonicalJson, renderScene } from "./render.js";
import { SceneSpec } from "./scene.js";
import { validateTrace } from "./trace.js";

export interface ManifestEntry {
  name: string;
  png: string;
  trace: string;
  expectation: string;
}

export interface Manifest {
  version: 1;
  entries: ManifestEntry[];
}

function sha256(data: Buffer | string): string {
  return createHash("sha256").update(data).digest("hex");
}

export function renderCorpus(specsDir: string, outDir: string): Manifest {
  const specFiles = readdirSync(specsDir)
    .filter((f) => f.endsWith(".scene.json"))
    .sort();
  if (specFiles.length === 0) {
    throw new Error(`no *.scene.json files in ${specsDir}`);
  }
  mkdirSync(outDir, { recursive: true });
  const entries: ManifestEntry[] = [];
  for (const file of specFiles) {
    const name = basename(file, ".scene.json");
    let rendered;
    try {
      const spec = JSON.parse(readFileSync(join(specsDir, file), "utf-8")) as SceneSpec;
      rendered = renderScene(spec);
    } catch (err) {
      throw new Error(`scene spec ${file} failed: ${(err as Error).message}`);
    }
    const schemaErrors = validateTrace(rendered.trace);
    if (schemaErrors.length > 0) {
      throw new Error(`scene spec ${file} produced an invalid trace: ${schemaErrors[0]}`);
    }
    const traceText = canonicalJson(rendered.trace);
    const expectText = canonicalJson(rendered.expectation);
    writeFileSync(join(outDir, `${name}.png`), rendered.png);
    writeFileSync(join(outDir, `${name}.trace.json`), traceText);
    writeFileSync(join(outDir, `${name}.expect.json`), expectText);
    entries.push({
      name,
      png: sha256(rendered.png),
      trace: sha256(traceText),
      expectation: sha256(expectText),
    });
  }
  const manifest: Manifest = { version: 1, entries };
  writeFileSync(join(outDir, "manifest.json"), canonicalJson(manifest));
  return manifest;
}
