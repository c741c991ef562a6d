// String-based HTML/SVG builders. Views return markup strings so they
// can be unit tested in node without a DOM.

export function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function tag(
  name: string,
  attrs: Record<string, string | number> = {},
  children = "",
): string {
  const parts = Object.entries(attrs)
    .map(([k, v]) => `${k}="${esc(String(v))}"`)
    .join(" ");
  const open = parts ? `<${name} ${parts}>` : `<${name}>`;
  return `${open}${children}</${name}>`;
}

export interface LinearScale {
  (value: number): number;
  domain: [number, number];
  range: [number, number];
}

export function scaleLinear(domain: [number, number], range: [number, number]): LinearScale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0 || 1;
  const fn = ((value: number) => r0 + ((value - d0) / span) * (r1 - r0)) as LinearScale;
  fn.domain = domain;
  fn.range = range;
  return fn;
}

export function extent(values: number[]): [number, number] {
  if (values.length === 0) return [0, 1];
  let lo = values[0];
  let hi = values[0];
  for (const v of values) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  if (lo === hi) {
    lo -= 1;
    hi += 1;
  }
  return [lo, hi];
}

export function fmt(value: number): string {
  if (Number.isInteger(value)) return String(value);
  return value.toFixed(Math.abs(value) < 10 ? 3 : 1);
}

export const PALETTE = [
  "#2563eb",
  "#dc2626",
  "#16a34a",
  "#9333ea",
  "#ea580c",
  "#0891b2",
  "#ca8a04",
  "#db2777",
  "#4b5563",
];

export function colorFor(index: number): string {
  return PALETTE[index % PALETTE.length];
}

export function axisTicks(scale: LinearScale, count = 5): { value: number; pos: number }[] {
  const [lo, hi] = scale.domain;
  const out: { value: number; pos: number }[] = [];
  for (let i = 0; i <= count; i++) {
    const value = lo + ((hi - lo) * i) / count;
    out.push({ value, pos: scale(value) });
  }
  return out;
}
