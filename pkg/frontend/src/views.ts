// One render function per view. Each returns an HTML string built from
// service payloads only; the small pure helpers (view models, layouts)
// are exported for unit tests.

import { contourSegments, kde2d } from "./kde.js";
import { axisTicks, colorFor, esc, extent, fmt, scaleLinear, tag } from "./render.js";
import { ViewState, encodeState } from "./state.js";
import type {
  BootstrapPayload,
  DendrogramPayload,
  DiffOpPayload,
  DiffPayload,
  EmbeddingPayload,
  ExampleInfo,
  MstPayload,
  NotationSummary,
  RemotenessRow,
  SpecPayload,
} from "./types.js";

export function link(state: ViewState, patch: Partial<ViewState>, label: string, cls = ""): string {
  const href = encodeState({ ...state, ...patch });
  const attrs: Record<string, string> = { href };
  if (cls) attrs.class = cls;
  return tag("a", attrs, esc(label));
}

const PLOT = { width: 460, height: 400, margin: 44 };

function plotScales(xDomain: [number, number], yDomain: [number, number]) {
  const { width, height, margin } = PLOT;
  return {
    x: scaleLinear(xDomain, [margin, width - 10]),
    y: scaleLinear(yDomain, [height - margin, 10]),
  };
}

function axes(x: ReturnType<typeof scaleLinear>, y: ReturnType<typeof scaleLinear>, xLabel: string, yLabel: string): string {
  const { height, margin, width } = PLOT;
  let out = tag("line", { x1: margin, y1: height - margin, x2: width - 10, y2: height - margin, class: "axis" });
  out += tag("line", { x1: margin, y1: 10, x2: margin, y2: height - margin, class: "axis" });
  for (const t of axisTicks(x)) {
    out += tag("text", { x: t.pos, y: height - margin + 16, class: "tick", "text-anchor": "middle" }, esc(fmt(t.value)));
  }
  for (const t of axisTicks(y)) {
    out += tag("text", { x: margin - 6, y: t.pos + 4, class: "tick", "text-anchor": "end" }, esc(fmt(t.value)));
  }
  out += tag("text", { x: (margin + width) / 2, y: height - 6, class: "axis-label", "text-anchor": "middle" }, esc(xLabel));
  out += tag(
    "text",
    { x: 12, y: height / 2, class: "axis-label", "text-anchor": "middle", transform: `rotate(-90 12 ${height / 2})` },
    esc(yLabel),
  );
  return out;
}

function svg(body: string): string {
  return tag("svg", { viewBox: `0 0 ${PLOT.width} ${PLOT.height}`, class: "plot" }, body);
}

// --- overview -------------------------------------------------------------

export function overviewView(
  notations: NotationSummary[],
  examples: ExampleInfo[],
  state: ViewState,
): string {
  const cards = notations
    .map((n) => {
      const rows = [
        ["vocabulary size", String(n.vocabulary_size)],
        ["median spec length", fmt(n.median_spec_length)],
        ["sprawl", fmt(n.sprawl)],
        ["language", n.language_id],
      ]
        .map(([k, v]) =>
          tag("tr", {}, tag("td", {}, esc(k)) + tag("td", { class: "num", "data-field": k.replace(/ /g, "_") }, esc(v))),
        )
        .join("");
      const thumbs = examples
        .map((e) => {
          const img = e.has_image
            ? tag("img", { src: `/img/${encodeURIComponent(e.id)}`, alt: e.id, loading: "lazy" })
            : tag("span", { class: "no-img" }, esc(e.id));
          const href = encodeState({ ...state, view: "tokens", notationA: n.id, exampleA: e.id });
          return tag("a", { href, class: "thumb" }, img);
        })
        .join("");
      return tag(
        "section",
        { class: "card", "data-notation": n.id },
        tag("h3", {}, link(state, { view: "embedding", notationA: n.id }, n.id)) +
          tag("table", { class: "summary" }, tag("tbody", {}, rows)) +
          tag("div", { class: "thumbs" }, thumbs),
      );
    })
    .join("");
  return tag("div", { class: "overview-grid" }, cards);
}

// --- pairwise scatter -----------------------------------------------------

export interface ScatterPoint {
  id: string;
  x: number;
  y: number;
  onDiagonal: boolean;
}

export function scatterPoints(rows: RemotenessRow[], tol = 1e-9): ScatterPoint[] {
  return rows.map((r) => ({
    id: r.example_id,
    x: r.remoteness_a,
    y: r.remoteness_b,
    onDiagonal: Math.abs(r.remoteness_a - r.remoteness_b) <= tol,
  }));
}

export function pairwiseScatterView(rows: RemotenessRow[], state: ViewState): string {
  const points = scatterPoints(rows);
  const all = points.flatMap((p) => [p.x, p.y]);
  const [lo, hi] = extent(all);
  const { x, y } = plotScales([lo, hi], [lo, hi]);
  let body = tag("line", { x1: x(lo), y1: y(lo), x2: x(hi), y2: y(hi), class: "diagonal" });
  body += axes(x, y, `remoteness (${state.notationA})`, `remoteness (${state.notationB})`);
  for (const p of points) {
    const dot = tag("circle", {
      cx: x(p.x),
      cy: y(p.y),
      r: 5,
      class: p.onDiagonal ? "pt diag" : "pt",
      "data-example": p.id,
    }) + tag("title", {}, esc(`${p.id}: ${fmt(p.x)} vs ${fmt(p.y)}`));
    const href = encodeState({
      ...state,
      view: "diff",
      exampleA: p.id,
      exampleB: p.id,
    });
    body += tag("a", { href }, dot);
  }
  return svg(body);
}

// --- embedding / dendrogram / mst ----------------------------------------

export function embeddingView(payload: EmbeddingPayload, state: ViewState): string {
  const entries = Object.entries(payload.points);
  const { x, y } = plotScales(
    extent(entries.map(([, p]) => p[0])),
    extent(entries.map(([, p]) => p[1])),
  );
  let body = axes(x, y, "mds-1", "mds-2");
  for (const [id, [px, py]] of entries) {
    const dot =
      tag("circle", { cx: x(px), cy: y(py), r: 5, class: "pt", "data-example": id }) +
      tag("title", {}, esc(id));
    body += tag("a", { href: encodeState({ ...state, view: "tokens", exampleA: id }) }, dot);
  }
  const caption = tag("p", { class: "caption" }, `stress ${esc(payload.stress.toExponential(3))}, ${entries.length} points`);
  return svg(body) + caption;
}

export interface DendrogramLayout {
  leafX: Map<number, number>; // cluster id -> x position (leaf order units)
  height: Map<number, number>; // cluster id -> merge height
}

export function dendrogramLayout(payload: DendrogramPayload): DendrogramLayout {
  const n = payload.leaves.length;
  const order: number[] = [];
  const children = new Map<number, [number, number]>();
  for (const m of payload.merges) children.set(m.id, [m.a, m.b]);
  const root = payload.merges.length ? payload.merges[payload.merges.length - 1].id : 0;
  const walk = (id: number) => {
    const kids = children.get(id);
    if (!kids) {
      order.push(id);
      return;
    }
    walk(kids[0]);
    walk(kids[1]);
  };
  if (n > 1) walk(root);
  else order.push(0);
  const leafX = new Map<number, number>();
  order.forEach((leaf, i) => leafX.set(leaf, i));
  const height = new Map<number, number>();
  for (let i = 0; i < n; i++) height.set(i, 0);
  for (const m of payload.merges) {
    // parent x is the midpoint of its two children
    const ax = leafX.get(m.a)!;
    const bx = leafX.get(m.b)!;
    leafX.set(m.id, (ax + bx) / 2);
    height.set(m.id, m.height);
  }
  return { leafX, height };
}

export function dendrogramView(payload: DendrogramPayload, state: ViewState): string {
  const n = payload.leaves.length;
  const layout = dendrogramLayout(payload);
  const maxH = Math.max(...payload.merges.map((m) => m.height), 1);
  const x = scaleLinear([0, Math.max(n - 1, 1)], [PLOT.margin, PLOT.width - 10]);
  const y = scaleLinear([0, maxH], [PLOT.height - PLOT.margin, 10]);
  let body = "";
  for (const m of payload.merges) {
    const ax = x(layout.leafX.get(m.a)!);
    const bx = x(layout.leafX.get(m.b)!);
    const ah = y(layout.height.get(m.a)!);
    const bh = y(layout.height.get(m.b)!);
    const top = y(m.height);
    body += tag("path", {
      d: `M ${ax} ${ah} V ${top} H ${bx} V ${bh}`,
      class: "dendro",
      fill: "none",
    });
  }
  payload.leaves.forEach((leaf, i) => {
    const lx = x(layout.leafX.get(i)!);
    const label = tag(
      "text",
      {
        x: lx,
        y: PLOT.height - PLOT.margin + 12,
        class: "tick leaf",
        "text-anchor": "end",
        transform: `rotate(-45 ${lx} ${PLOT.height - PLOT.margin + 12})`,
      },
      esc(leaf),
    );
    body += tag("a", { href: encodeState({ ...state, view: "tokens", exampleA: leaf }) }, label);
  });
  return svg(body);
}

export function mstView(payload: MstPayload, embedding: EmbeddingPayload, state: ViewState): string {
  const entries = Object.entries(embedding.points);
  const { x, y } = plotScales(
    extent(entries.map(([, p]) => p[0])),
    extent(entries.map(([, p]) => p[1])),
  );
  const pos = new Map(entries.map(([id, [px, py]]) => [id, [x(px), y(py)] as [number, number]]));
  let body = "";
  for (const e of payload.edges) {
    const [x1, y1] = pos.get(e.a)!;
    const [x2, y2] = pos.get(e.b)!;
    body += tag("line", { x1, y1, x2, y2, class: "mst-edge" }) + tag("title", {}, esc(`${e.a} — ${e.b}: ${fmt(e.weight)}`));
  }
  for (const [id, [px, py]] of pos) {
    const dot = tag("circle", { cx: px, cy: py, r: 5, class: "pt", "data-example": id }) + tag("title", {}, esc(id));
    body += tag("a", { href: encodeState({ ...state, view: "tokens", exampleA: id }) }, dot);
  }
  const caption = tag(
    "p",
    { class: "caption" },
    `${payload.edges.length} edges, total weight ${esc(fmt(payload.total_weight))}`,
  );
  return svg(body) + caption;
}

// --- diff -----------------------------------------------------------------

export interface DiffSegment {
  cls: "equal" | "insert" | "delete" | "replace";
  textA: string;
  textB: string;
}

export function diffSegments(ops: DiffOpPayload[]): DiffSegment[] {
  return ops.map((o) => ({
    cls: o.op,
    textA: o.tokens_a.join(" "),
    textB: o.tokens_b.join(" "),
  }));
}

export function replaceCount(ops: DiffOpPayload[]): number {
  return ops.filter((o) => o.op === "replace").length;
}

export function diffView(payload: DiffPayload, cd: number | null): string {
  const segments = diffSegments(payload.ops);
  const side = (which: "textA" | "textB") =>
    segments
      .filter((s) => s[which].length > 0 || s.cls === "equal")
      .map((s) => tag("span", { class: `seg ${s.cls}` }, esc(s[which])))
      .join(" ");
  const readouts =
    tag("span", { class: "readout", "data-field": "token_ld" }, `LD ${payload.token_ld}`) +
    (cd === null ? "" : tag("span", { class: "readout", "data-field": "cd" }, `CD ${esc(fmt(cd))}`));
  const header = tag(
    "h3",
    {},
    esc(`${payload.spec_a.notation}/${payload.spec_a.example} vs ${payload.spec_b.notation}/${payload.spec_b.example}`),
  );
  return (
    header +
    tag("p", { class: "readouts" }, readouts) +
    tag(
      "div",
      { class: "diff-panes" },
      tag("pre", { class: "pane", "data-side": "a" }, side("textA")) +
        tag("pre", { class: "pane", "data-side": "b" }, side("textB")),
    )
  );
}

// --- tokens ---------------------------------------------------------------

export function tokensView(payload: SpecPayload): string {
  const spans = payload.tokens
    .map((t) => tag("span", { class: `tok ${t.kind}`, title: `${t.kind} ${t.span[0]}..${t.span[1]}` }, esc(t.lexeme)))
    .join(" ");
  return (
    tag("h3", {}, esc(`${payload.notation}/${payload.example} (${payload.byte_length} bytes)`)) +
    tag("pre", { class: "spec-text" }, esc(payload.normalized)) +
    tag("div", { class: "token-ribbon" }, spans)
  );
}

// --- bootstrap ------------------------------------------------------------

export function bootstrapView(
  perNotation: { notation: string; xs: BootstrapPayload; ys: BootstrapPayload }[],
  state: ViewState,
): string {
  const allX = perNotation.flatMap((p) => p.xs.samples);
  const allY = perNotation.flatMap((p) => p.ys.samples);
  const { x, y } = plotScales(extent(allX), extent(allY));
  let body = axes(x, y, state.bootstrapX, state.bootstrapY);
  let legend = "";
  perNotation.forEach((p, i) => {
    const color = colorFor(i);
    const grid = kde2d(p.xs.samples, p.ys.samples);
    for (const frac of [0.25, 0.5, 0.75]) {
      for (const s of contourSegments(grid, grid.max * frac)) {
        body += tag("line", {
          x1: x(s.x1),
          y1: y(s.y1),
          x2: x(s.x2),
          y2: y(s.y2),
          stroke: color,
          class: "contour",
          "data-notation": p.notation,
          "opacity": 0.35 + frac * 0.6,
        });
      }
    }
    legend += tag(
      "li",
      {},
      tag("span", { class: "swatch", style: `background:${color}` }, "") + esc(p.notation),
    );
  });
  const caption = tag(
    "p",
    { class: "caption" },
    esc(`${perNotation[0]?.xs.sample_count ?? 0} samples, seed ${state.seed}`),
  );
  return svg(body) + tag("ul", { class: "legend" }, legend) + caption;
}

// --- chrome ---------------------------------------------------------------

const VIEW_LABELS: [ViewState["view"], string][] = [
  ["overview", "Overview"],
  ["pairwise_scatter", "Pairwise"],
  ["embedding", "Embedding"],
  ["dendrogram", "Dendrogram"],
  ["mst", "MST"],
  ["diff", "Diff"],
  ["tokens", "Tokens"],
  ["bootstrap", "Bootstrap"],
];

export function navBar(state: ViewState): string {
  const items = VIEW_LABELS.map(([view, label]) =>
    link(state, { view }, label, state.view === view ? "nav-item active" : "nav-item"),
  ).join("");
  return tag("nav", {}, items);
}

export function errorBanner(message: string): string {
  return tag("div", { class: "banner error" }, esc(message));
}
