// App shell: hash router plus control bar. All data comes from the
// ApiClient; views render markup strings injected into #app.

import { ApiClient } from "./api.js";
import { esc, tag } from "./render.js";
import { ViewState, decodeState, encodeState } from "./state.js";
import type { ExampleInfo, NotationSummary } from "./types.js";
import {
  bootstrapView,
  dendrogramView,
  diffView,
  embeddingView,
  errorBanner,
  mstView,
  navBar,
  overviewView,
  pairwiseScatterView,
  tokensView,
} from "./views.js";

const api = new ApiClient();

let notations: NotationSummary[] = [];
let examples: ExampleInfo[] = [];

function select(name: keyof ViewState, options: string[], current: string): string {
  const opts = options
    .map((o) => `<option value="${esc(o)}"${o === current ? " selected" : ""}>${esc(o)}</option>`)
    .join("");
  return tag("label", { class: "ctl" }, `${esc(String(name))} <select data-state-key="${esc(String(name))}">${opts}</select>`);
}

function controls(state: ViewState): string {
  const nids = notations.map((n) => n.id);
  const eids = examples.map((e) => e.id);
  const parts: string[] = [];
  const needsA = state.view !== "overview";
  if (needsA) parts.push(select("notationA", nids, state.notationA));
  if (state.view === "pairwise_scatter" || state.view === "diff") {
    parts.push(select("notationB", nids, state.notationB));
  }
  if (state.view === "diff" || state.view === "tokens") {
    parts.push(select("exampleA", eids, state.exampleA));
  }
  if (state.view === "diff") parts.push(select("exampleB", eids, state.exampleB));
  if (["pairwise_scatter", "embedding", "dendrogram", "mst"].includes(state.view)) {
    parts.push(select("metric", ["cd", "token_ld"], state.metric));
  }
  if (state.view === "bootstrap") {
    const axes = ["median_spec_length", "vocabulary_size", "sprawl"];
    parts.push(select("bootstrapX", axes, state.bootstrapX));
    parts.push(select("bootstrapY", axes, state.bootstrapY));
  }
  return tag("div", { class: "controls" }, parts.join(""));
}

function withDefaults(state: ViewState): ViewState {
  const first = notations[0]?.id ?? "";
  const second = notations[1]?.id ?? first;
  const firstExample = examples[0]?.id ?? "";
  return {
    ...state,
    notationA: state.notationA || first,
    notationB: state.notationB || second,
    exampleA: state.exampleA || firstExample,
    exampleB: state.exampleB || firstExample,
  };
}

async function renderBody(state: ViewState): Promise<string> {
  switch (state.view) {
    case "overview":
      return overviewView(notations, examples, state);
    case "pairwise_scatter": {
      const rows = await api.remoteness(state.notationA, state.notationB, state.metric);
      return pairwiseScatterView(rows, state);
    }
    case "embedding":
      return embeddingView(await api.embedding(state.notationA, state.metric), state);
    case "dendrogram":
      return dendrogramView(await api.dendrogram(state.notationA, state.metric), state);
    case "mst": {
      const [tree, embed] = await Promise.all([
        api.mst(state.notationA, state.metric),
        api.embedding(state.notationA, state.metric),
      ]);
      return mstView(tree, embed, state);
    }
    case "diff": {
      const payload = await api.diff(state.notationA, state.exampleA, state.notationB, state.exampleB);
      let cd: number | null = null;
      if (state.notationA === state.notationB) {
        const matrix = await api.distances(state.notationA, "cd");
        const i = matrix.examples.indexOf(state.exampleA);
        const j = matrix.examples.indexOf(state.exampleB);
        if (i >= 0 && j >= 0) cd = matrix.values[i][j];
      }
      return diffView(payload, cd);
    }
    case "tokens":
      return tokensView(await api.spec(state.notationA, state.exampleA));
    case "bootstrap": {
      const per = await Promise.all(
        notations.map(async (n) => ({
          notation: n.id,
          xs: await api.bootstrap(n.id, state.bootstrapX, state.samples, state.seed),
          ys: await api.bootstrap(n.id, state.bootstrapY, state.samples, state.seed),
        })),
      );
      return bootstrapView(per, state);
    }
  }
}

async function render(): Promise<void> {
  const app = document.getElementById("app");
  if (!app) return;
  const state = withDefaults(decodeState(location.hash));
  let body: string;
  try {
    body = await renderBody(state);
  } catch (err) {
    body = errorBanner(err instanceof Error ? err.message : "service unreachable");
  }
  app.innerHTML = navBar(state) + controls(state) + tag("main", {}, body);
  for (const el of app.querySelectorAll<HTMLSelectElement>("select[data-state-key]")) {
    el.addEventListener("change", () => {
      const key = el.dataset.stateKey as keyof ViewState;
      const next = { ...state, [key]: el.value };
      location.hash = encodeState(next);
    });
  }
}

window.addEventListener("hashchange", () => void render());

void (async () => {
  try {
    [notations, examples] = await Promise.all([api.notations(), api.examples()]);
  } catch {
    const app = document.getElementById("app");
    if (app) app.innerHTML = errorBanner("cannot reach the metrics service");
    return;
  }
  await render();
})();
