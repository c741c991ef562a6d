import { describe, expect, it } from "vitest";

import { DEFAULT_STATE } from "../src/state.js";
import type { DendrogramPayload, DiffPayload, RemotenessRow } from "../src/types.js";
import {
  dendrogramLayout,
  diffSegments,
  diffView,
  overviewView,
  pairwiseScatterView,
  replaceCount,
  scatterPoints,
} from "../src/views.js";

const STATE = { ...DEFAULT_STATE, notationA: "a", notationB: "a" };

describe("scatter view model", () => {
  const rows: RemotenessRow[] = [
    { example_id: "e1", remoteness_a: 3, remoteness_b: 3, length_a: 10, length_b: 10 },
    { example_id: "e2", remoteness_a: 5, remoteness_b: 5, length_a: 12, length_b: 12 },
    { example_id: "e3", remoteness_a: 2, remoteness_b: 8, length_a: 8, length_b: 20 },
  ];

  it("marks equal-remoteness points as diagonal", () => {
    const points = scatterPoints(rows);
    expect(points.map((p) => p.onDiagonal)).toEqual([true, true, false]);
  });

  it("renders one point per row plus the y=x reference line", () => {
    const markup = pairwiseScatterView(rows, STATE);
    expect(markup.match(/class="pt/g)?.length).toBe(3);
    expect(markup).toContain('class="diagonal"');
  });
});

describe("diff view model", () => {
  const singleReplace: DiffPayload = {
    spec_a: { notation: "r-gg", example: "point" },
    spec_b: { notation: "r-gg", example: "line" },
    token_ld: 1,
    ops: [{ op: "replace", tokens_a: ["geom_point"], tokens_b: ["geom_line"] }],
  };

  it("shows exactly one replace segment for a single-token substitution", () => {
    expect(replaceCount(singleReplace.ops)).toBe(1);
    const segments = diffSegments(singleReplace.ops);
    expect(segments).toEqual([{ cls: "replace", textA: "geom_point", textB: "geom_line" }]);
  });

  it("shows no highlights for identical specs", () => {
    const ops = [{ op: "equal" as const, tokens_a: ["a", "b"], tokens_b: ["a", "b"] }];
    expect(replaceCount(ops)).toBe(0);
    const markup = diffView({ ...singleReplace, token_ld: 0, ops }, 0);
    expect(markup).not.toContain("seg replace");
    expect(markup).not.toContain("seg insert");
    expect(markup).not.toContain("seg delete");
    expect(markup).toContain("LD 0");
  });

  it("escapes markup-hostile token text", () => {
    const ops = [{ op: "equal" as const, tokens_a: ["<svg>"], tokens_b: ["<svg>"] }];
    const markup = diffView({ ...singleReplace, ops }, null);
    expect(markup).toContain("&lt;svg&gt;");
    expect(markup).not.toContain("<svg>");
  });
});

describe("dendrogram layout", () => {
  it("places merge parents at child midpoints with their merge heights", () => {
    const payload: DendrogramPayload = {
      notation_id: "n",
      leaves: ["x", "y", "z"],
      merges: [
        { a: 0, b: 1, height: 2, id: 3 },
        { a: 3, b: 2, height: 5, id: 4 },
      ],
    };
    const layout = dendrogramLayout(payload);
    expect(layout.leafX.get(3)).toBe((layout.leafX.get(0)! + layout.leafX.get(1)!) / 2);
    expect(layout.height.get(3)).toBe(2);
    expect(layout.height.get(4)).toBe(5);
    const leafPositions = [0, 1, 2].map((i) => layout.leafX.get(i)!).sort((a, b) => a - b);
    expect(leafPositions).toEqual([0, 1, 2]);
  });
});

describe("overview", () => {
  it("renders one card per notation with the service's summary numbers", () => {
    const markup = overviewView(
      [
        { id: "n1", language_id: "json-like", vocabulary_size: 42, median_spec_length: 123.5, sprawl: 9.25 },
        { id: "n2", language_id: "r-like", vocabulary_size: 17, median_spec_length: 88, sprawl: 4 },
      ],
      [{ id: "e1", has_image: false }],
      DEFAULT_STATE,
    );
    expect(markup.match(/class="card"/g)?.length).toBe(2);
    expect(markup).toContain(">42<");
    expect(markup).toContain(">123.5<");
    expect(markup).toContain(">9.250<");
    expect(markup).toContain('class="no-img"');
  });
});
