/**
 * fixturegen CLI:
 *   node dist/cli.js scene <spec.scene.json> --out <dir>
 *   node dist/cli.js corpus <specs-dir> --out <dir>
 */

import { mkdirSync, readFileSync, writeFileSync } from "node:fs";
import { basename, join } from "node:path";

import { renderCorpus } from "./corpus.js";
import { canonicalJson, renderScene } from "./render.js";
import { SceneSpec } from "./scene.js";

function argValue(args: string[], flag: string): string | undefined {
  const i = args.indexOf(flag);
  return i >= 0 && i + 1 < args.length ? args[i + 1] : undefined;
}

export function main(argv: string[]): number {
  const [command, target, ...rest] = argv;
  const out = argValue(rest, "--out") ?? ".";
  if (command === "scene" && target) {
    const spec = JSON.parse(readFileSync(target, "utf-8")) as SceneSpec;
    const name = spec.name ?? basename(target, ".scene.json");
    const rendered = renderScene(spec);
    mkdirSync(out, { recursive: true });
    writeFileSync(join(out, `${name}.png`), rendered.png);
    writeFileSync(join(out, `${name}.trace.json`), canonicalJson(rendered.trace));
    writeFileSync(join(out, `${name}.expect.json`), canonicalJson(rendered.expectation));
    console.log(`rendered ${name} into ${out}`);
    return 0;
  }
  if (command === "corpus" && target) {
    const manifest = renderCorpus(target, out);
    console.log(`rendered ${manifest.entries.length} scenes into ${out}`);
    return 0;
  }
  console.error("usage: cli.js scene <spec.scene.json> --out DIR | corpus <specs-dir> --out DIR");
  return 2;
}

if (process.argv[1] && process.argv[1].endsWith("cli.js")) {
  process.exit(main(process.argv.slice(2)));
}
