/**
 * Validator for the v1 draw-command trace schema (the wire format the
 * recognition pipeline consumes; see docs/formats.md in the repo root).
 * Returns a list of violations; an empty list means the document conforms.
 */

const KNOWN_KINDS = new Set([
  "fillRect", "strokeRect", "arc", "fillText", "strokeText", "setFont", "setTextAlign",
]);

const TEXT_ALIGNS = new Set(["left", "right", "center", "start", "end"]);

const ARG_FIELDS: Record<string, readonly string[]> = {
  fillRect: ["x", "y", "w", "h"],
  strokeRect: ["x", "y", "w", "h"],
  arc: ["cx", "cy", "r", "startAngle", "endAngle"],
  fillText: ["text", "x", "y"],
  strokeText: ["text", "x", "y"],
  setFont: ["font"],
  setTextAlign: ["align"],
};

const STRING_FIELDS = new Set(["text", "font", "align"]);

function isNumber(v: unknown): v is number {
  return typeof v === "number" && Number.isFinite(v);
}

export function validateTrace(doc: unknown): string[] {
  const errors: string[] = [];
  if (typeof doc !== "object" || doc === null || Array.isArray(doc)) {
    return ["$: trace document must be an object"];
  }
  const d = doc as Record<string, unknown>;
  if (d.version !== 1) {
    errors.push("$.version: must be 1");
  }
  const canvas = d.canvas as Record<string, unknown> | undefined;
  if (!canvas || !isNumber(canvas.width) || !isNumber(canvas.height)) {
    errors.push("$.canvas: width and height numbers required");
  } else if ((canvas.width as number) < 1 || (canvas.height as number) < 1) {
    errors.push("$.canvas: dimensions must be >= 1");
  }

  const commands = Array.isArray(d.commands) ? d.commands : [];
  if (d.commands !== undefined && !Array.isArray(d.commands)) {
    errors.push("$.commands: must be an array");
  }
  let prevSeq: number | null = null;
  commands.forEach((raw, i) => {
    const path = `$.commands[${i}]`;
    if (typeof raw !== "object" || raw === null) {
      errors.push(`${path}: must be an object`);
      return;
    }
    const cmd = raw as Record<string, unknown>;
    if (!Number.isInteger(cmd.seq)) {
      errors.push(`${path}.seq: must be an integer`);
    } else {
      const seq = cmd.seq as number;
      if (prevSeq !== null && seq <= prevSeq) {
        errors.push(`${path}.seq: not strictly increasing`);
      }
      prevSeq = seq;
    }
    const kind = cmd.kind;
    if (typeof kind !== "string" || !KNOWN_KINDS.has(kind)) {
      // unknown kinds are tolerated by the consumer (skipped with a warning)
      return;
    }
    for (const field of ARG_FIELDS[kind]) {
      const value = cmd[field];
      if (STRING_FIELDS.has(field)) {
        if (typeof value !== "string") errors.push(`${path}.${field}: string required`);
      } else if (!isNumber(value)) {
        errors.push(`${path}.${field}: number required`);
      }
    }
    if ((kind === "fillRect" || kind === "strokeRect")
        && isNumber(cmd.w) && isNumber(cmd.h)
        && ((cmd.w as number) <= 0 || (cmd.h as number) <= 0)) {
      errors.push(`${path}.w: rect sizes must be positive`);
    }
    if (kind === "arc" && isNumber(cmd.r) && (cmd.r as number) <= 0) {
      errors.push(`${path}.r: radius must be positive`);
    }
    if (kind === "setTextAlign" && typeof cmd.align === "string"
        && !TEXT_ALIGNS.has(cmd.align)) {
      errors.push(`${path}.align: unknown alignment`);
    }
  });

  const bindings = Array.isArray(d.bindings) ? d.bindings : [];
  bindings.forEach((raw, i) => {
    const path = `$.bindings[${i}]`;
    if (typeof raw !== "object" || raw === null) {
      errors.push(`${path}: must be an object`);
      return;
    }
    const b = raw as Record<string, unknown>;
    if (typeof b.event !== "string" || b.event.length === 0) {
      errors.push(`${path}.event: nonempty string required`);
    }
    if (typeof b.positionDependent !== "boolean") {
      errors.push(`${path}.positionDependent: boolean required`);
    }
    if (typeof b.handler !== "string") {
      errors.push(`${path}.handler: string required`);
    }
  });
  return errors;
}
