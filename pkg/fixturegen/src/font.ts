/**
 * 5x7 uppercase bitmap font, drawn at integer scale 2 so strokes stay 2 px
 * wide and survive the recognition pipeline's smoothing. Glyph bitmaps match
 * the Python fixture tool (tools/font5x7.py) pixel for pixel.
 */

export const GLYPH_W = 5;
export const GLYPH_H = 7;
export const SCALE = 2;
export const GAP = 1;
export const ADVANCE = (GLYPH_W + GAP) * SCALE;

export const GLYPHS: Record<string, readonly string[]> = {
  A: [".###.", "#...#", "#...#", "#####", "#...#", "#...#", "#...#"],
  B: ["####.", "#...#", "#...#", "####.", "#...#", "#...#", "####."],
  C: [".####", "#....", "#....", "#....", "#....", "#....", ".####"],
  E: ["#####", "#....", "#....", "####.", "#....", "#....", "#####"],
  G: [".####", "#....", "#....", "#.###", "#...#", "#...#", ".###."],
  H: ["#...#", "#...#", "#...#", "#####", "#...#", "#...#", "#...#"],
  I: ["#####", "..#..", "..#..", "..#..", "..#..", "..#..", "#####"],
  K: ["#...#", "#..#.", "#.#..", "##...", "#.#..", "#..#.", "#...#"],
  L: ["#....", "#....", "#....", "#....", "#....", "#....", "#####"],
  M: ["#...#", "##.##", "#.#.#", "#.#.#", "#...#", "#...#", "#...#"],
  N: ["#...#", "##..#", "#.#.#", "#.#.#", "#..##", "#...#", "#...#"],
  O: [".###.", "#...#", "#...#", "#...#", "#...#", "#...#", ".###."],
  P: ["####.", "#...#", "#...#", "####.", "#....", "#....", "#...."],
  R: ["####.", "#...#", "#...#", "####.", "#.#..", "#..#.", "#...#"],
  S: [".####", "#....", "#....", ".###.", "....#", "....#", "####."],
  T: ["#####", "..#..", "..#..", "..#..", "..#..", "..#..", "..#.."],
  U: ["#...#", "#...#", "#...#", "#...#", "#...#", "#...#", ".###."],
  X: ["#...#", "#...#", ".#.#.", "..#..", ".#.#.", "#...#", "#...#"],
  Y: ["#...#", "#...#", ".#.#.", "..#..", "..#..", "..#..", "..#.."],
};

export function textWidth(text: string): number {
  if (text.length === 0) return 0;
  return text.length * ADVANCE - GAP * SCALE;
}

export function textHeight(): number {
  return GLYPH_H * SCALE;
}

export function hasGlyphs(text: string): boolean {
  for (const ch of text.toUpperCase()) {
    if (ch !== " " && !(ch in GLYPHS)) return false;
  }
  return true;
}
