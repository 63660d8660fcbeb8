/**
 * Software rasterizer for the canvas-2D call subset fixtures use. Every draw
 * call both rasterizes (hard edges, no anti-aliasing) and records a v1 trace
 * command, so PNG and trace stay in sync by construction. fillText's y is
 * the baseline; glyphs render above it.
 */

import { ADVANCE, GLYPH_H, GLYPHS, SCALE } from "./font.js";
import { encodePng } from "./png.js";

export type Color = readonly [number, number, number, number];
export const BLACK: Color = [0, 0, 0, 255];
export const WHITE: Color = [255, 255, 255, 255];

export interface TraceCommand {
  seq: number;
  kind: string;
  [arg: string]: number | string;
}

export interface TraceBinding {
  event: string;
  positionDependent: boolean;
  handler: string;
}

export interface TraceDoc {
  version: 1;
  canvas: { width: number; height: number };
  commands: TraceCommand[];
  bindings: TraceBinding[];
}

export class CanvasRecorder {
  readonly width: number;
  readonly height: number;
  readonly rgba: Uint8Array;
  readonly commands: TraceCommand[] = [];
  readonly bindings: TraceBinding[] = [];
  private seq = 0;

  constructor(width: number, height: number) {
    this.width = width;
    this.height = height;
    this.rgba = new Uint8Array(width * height * 4);
    for (let i = 0; i < width * height; i++) {
      this.rgba.set(WHITE, i * 4);
    }
  }

  private record(kind: string, args: Record<string, number | string>): void {
    this.seq += 1;
    this.commands.push({ seq: this.seq, kind, ...args });
  }

  private set(x: number, y: number, color: Color = BLACK): void {
    if (x >= 0 && x < this.width && y >= 0 && y < this.height) {
      this.rgba.set(color, (y * this.width + x) * 4);
    }
  }

  setFont(font = "10px monospace"): void {
    this.record("setFont", { font });
  }

  setTextAlign(align = "left"): void {
    this.record("setTextAlign", { align });
  }

  fillRect(x: number, y: number, w: number, h: number, color: Color = BLACK): void {
    this.record("fillRect", { x, y, w, h });
    for (let py = y; py < y + h; py++) {
      for (let px = x; px < x + w; px++) {
        this.set(px, py, color);
      }
    }
  }

  strokeRect(x: number, y: number, w: number, h: number, color: Color = BLACK): void {
    this.record("strokeRect", { x, y, w, h });
    for (let px = x; px < x + w; px++) {
      this.set(px, y, color);
      this.set(px, y + h - 1, color);
    }
    for (let py = y; py < y + h; py++) {
      this.set(x, py, color);
      this.set(x + w - 1, py, color);
    }
  }

  /** Full-circle outline via the midpoint algorithm. */
  arc(cx: number, cy: number, r: number, start = 0, end = 2 * Math.PI,
      color: Color = BLACK): void {
    this.record("arc", { cx, cy, r, startAngle: start, endAngle: end });
    let x = 0;
    let y = r;
    let d = 1 - r;
    while (x <= y) {
      for (const [px, py] of [
        [x, y], [y, x], [-x, y], [-y, x],
        [x, -y], [y, -x], [-x, -y], [-y, -x],
      ] as const) {
        this.set(cx + px, cy + py, color);
      }
      x += 1;
      if (d < 0) {
        d += 2 * x + 1;
      } else {
        y -= 1;
        d += 2 * (x - y) + 1;
      }
    }
  }

  private drawGlyphs(text: string, x: number, y: number, color: Color): void {
    const top = y - GLYPH_H * SCALE;
    const upper = text.toUpperCase();
    for (let i = 0; i < upper.length; i++) {
      const ch = upper[i];
      if (ch === " ") continue;
      const glyph = GLYPHS[ch];
      if (!glyph) throw new Error(`character ${JSON.stringify(ch)} not in the fixture font`);
      const gx = x + i * ADVANCE;
      for (let row = 0; row < glyph.length; row++) {
        for (let col = 0; col < glyph[row].length; col++) {
          if (glyph[row][col] !== "#") continue;
          for (let sy = 0; sy < SCALE; sy++) {
            for (let sx = 0; sx < SCALE; sx++) {
              this.set(gx + col * SCALE + sx, top + row * SCALE + sy, color);
            }
          }
        }
      }
    }
  }

  fillText(text: string, x: number, y: number, color: Color = BLACK): void {
    this.record("fillText", { text, x, y });
    this.drawGlyphs(text, x, y, color);
  }

  strokeText(text: string, x: number, y: number, color: Color = BLACK): void {
    this.record("strokeText", { text, x, y });
    this.drawGlyphs(text, x, y, color);
  }

  addBinding(event: string, positionDependent: boolean, handler: string): void {
    this.bindings.push({ event, positionDependent, handler });
  }

  traceDoc(): TraceDoc {
    return {
      version: 1,
      canvas: { width: this.width, height: this.height },
      commands: this.commands,
      bindings: this.bindings,
    };
  }

  pngBytes(): Buffer {
    return encodePng(this.width, this.height, this.rgba);
  }
}
