// View state, fully round-trippable through the URL hash so any view can
// be shared or restored via the back button.

export type ViewName =
  | "overview"
  | "pairwise_scatter"
  | "embedding"
  | "dendrogram"
  | "mst"
  | "diff"
  | "tokens"
  | "bootstrap";

export interface ViewState {
  view: ViewName;
  notationA: string;
  notationB: string;
  exampleA: string;
  exampleB: string;
  metric: string;
  bootstrapX: string;
  bootstrapY: string;
  samples: number;
  seed: number;
}

export const DEFAULT_STATE: ViewState = {
  view: "overview",
  notationA: "",
  notationB: "",
  exampleA: "",
  exampleB: "",
  metric: "cd",
  bootstrapX: "sprawl",
  bootstrapY: "vocabulary_size",
  samples: 1000,
  seed: 0,
};

const VIEWS: ViewName[] = [
  "overview",
  "pairwise_scatter",
  "embedding",
  "dendrogram",
  "mst",
  "diff",
  "tokens",
  "bootstrap",
];

export function encodeState(state: ViewState): string {
  const params = new URLSearchParams();
  for (const [key, value] of Object.entries(state)) {
    const fallback = DEFAULT_STATE[key as keyof ViewState];
    if (value !== fallback) params.set(key, String(value));
  }
  const text = params.toString();
  return text ? `#${text}` : "#";
}

export function decodeState(hash: string): ViewState {
  const params = new URLSearchParams(hash.replace(/^#/, ""));
  const state: ViewState = { ...DEFAULT_STATE };
  const view = params.get("view");
  if (view && (VIEWS as string[]).includes(view)) state.view = view as ViewName;
  for (const key of ["notationA", "notationB", "exampleA", "exampleB", "metric", "bootstrapX", "bootstrapY"] as const) {
    const v = params.get(key);
    if (v !== null) state[key] = v;
  }
  for (const key of ["samples", "seed"] as const) {
    const v = params.get(key);
    if (v !== null && Number.isFinite(Number(v))) state[key] = Number(v);
  }
  return state;
}
