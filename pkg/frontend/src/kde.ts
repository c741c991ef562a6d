// Client-side kernel density estimation for the bootstrap view. The
// backend ships raw samples; bandwidth is a presentation choice, so it
// lives here (Gaussian kernel, Scott's rule).

export interface DensityGrid {
  xs: number[];
  ys: number[];
  values: number[][]; // values[row][col] = density at (xs[col], ys[row])
  max: number;
}

export function scottBandwidth(samples: number[]): number {
  const n = samples.length;
  if (n < 2) return 1;
  const mean = samples.reduce((s, v) => s + v, 0) / n;
  const variance = samples.reduce((s, v) => s + (v - mean) ** 2, 0) / (n - 1);
  const sd = Math.sqrt(variance);
  // degenerate clouds (single-example notations) still need a finite kernel
  const spread = sd > 0 ? sd : Math.max(Math.abs(mean) * 0.01, 1e-6);
  return spread * Math.pow(n, -1 / 6);
}

function linspace(lo: number, hi: number, count: number): number[] {
  if (hi === lo) {
    lo -= 1;
    hi += 1;
  }
  const out: number[] = [];
  for (let i = 0; i < count; i++) out.push(lo + ((hi - lo) * i) / (count - 1));
  return out;
}

export function kde2d(
  sx: number[],
  sy: number[],
  gridSize = 40,
  pad = 0.15,
): DensityGrid {
  if (sx.length === 0 || sx.length !== sy.length) {
    throw new Error("kde2d needs equal non-empty sample arrays");
  }
  const bx = scottBandwidth(sx);
  const by = scottBandwidth(sy);
  const xLo = Math.min(...sx);
  const xHi = Math.max(...sx);
  const yLo = Math.min(...sy);
  const yHi = Math.max(...sy);
  const xPad = (xHi - xLo || bx) * pad + bx;
  const yPad = (yHi - yLo || by) * pad + by;
  const xs = linspace(xLo - xPad, xHi + xPad, gridSize);
  const ys = linspace(yLo - yPad, yHi + yPad, gridSize);
  const norm = 1 / (sx.length * 2 * Math.PI * bx * by);
  const values: number[][] = [];
  let max = 0;
  for (const y of ys) {
    const row: number[] = [];
    for (const x of xs) {
      let density = 0;
      for (let i = 0; i < sx.length; i++) {
        const dx = (x - sx[i]) / bx;
        const dy = (y - sy[i]) / by;
        density += Math.exp(-0.5 * (dx * dx + dy * dy));
      }
      density *= norm;
      if (density > max) max = density;
      row.push(density);
    }
    values.push(row);
  }
  return { xs, ys, values, max };
}

export interface Segment {
  x1: number;
  y1: number;
  x2: number;
  y2: number;
}

// Marching squares over the density grid: one line segment set per level.
export function contourSegments(grid: DensityGrid, level: number): Segment[] {
  const { xs, ys, values } = grid;
  const segments: Segment[] = [];
  const lerp = (a: number, b: number, va: number, vb: number) =>
    vb === va ? a : a + ((level - va) / (vb - va)) * (b - a);
  for (let r = 0; r < ys.length - 1; r++) {
    for (let c = 0; c < xs.length - 1; c++) {
      const tl = values[r][c];
      const tr = values[r][c + 1];
      const br = values[r + 1][c + 1];
      const bl = values[r + 1][c];
      let idx = 0;
      if (tl >= level) idx |= 8;
      if (tr >= level) idx |= 4;
      if (br >= level) idx |= 2;
      if (bl >= level) idx |= 1;
      if (idx === 0 || idx === 15) continue;
      const x0 = xs[c];
      const x1 = xs[c + 1];
      const y0 = ys[r];
      const y1 = ys[r + 1];
      const top = { x: lerp(x0, x1, tl, tr), y: y0 };
      const right = { x: x1, y: lerp(y0, y1, tr, br) };
      const bottom = { x: lerp(x0, x1, bl, br), y: y1 };
      const left = { x: x0, y: lerp(y0, y1, tl, bl) };
      const add = (p: { x: number; y: number }, q: { x: number; y: number }) =>
        segments.push({ x1: p.x, y1: p.y, x2: q.x, y2: q.y });
      switch (idx) {
        case 1: case 14: add(left, bottom); break;
        case 2: case 13: add(bottom, right); break;
        case 3: case 12: add(left, right); break;
        case 4: case 11: add(top, right); break;
        case 5: add(left, top); add(bottom, right); break;
        case 6: case 9: add(top, bottom); break;
        case 7: case 8: add(left, top); break;
        case 10: add(top, right); add(left, bottom); break;
      }
    }
  }
  return segments;
}
