// Shapes of the backend's JSON responses.

export interface NotationSummary {
  id: string;
  language_id: string;
  vocabulary_size: number;
  median_spec_length: number;
  sprawl: number;
}

export interface ExampleInfo {
  id: string;
  has_image: boolean;
}

export interface SpecPayload {
  notation: string;
  example: string;
  raw: string;
  normalized: string;
  byte_length: number;
  tokens: { kind: string; lexeme: string; span: [number, number] }[];
}

export interface DistanceMatrixPayload {
  notation_id: string;
  metric_id: string;
  examples: string[];
  values: number[][];
}

export interface RemotenessRow {
  example_id: string;
  remoteness_a: number;
  remoteness_b: number;
  length_a: number;
  length_b: number;
}

export interface EmbeddingPayload {
  notation_id: string;
  stress: number;
  points: Record<string, [number, number]>;
}

export interface DendrogramPayload {
  notation_id: string;
  leaves: string[];
  merges: { a: number; b: number; height: number; id: number }[];
}

export interface MstPayload {
  notation_id: string;
  total_weight: number;
  edges: { a: string; b: string; weight: number }[];
}

export interface BootstrapPayload {
  notation_id: string;
  metric_name: string;
  sample_count: number;
  seed: number;
  quantiles: Record<string, number>;
  samples: number[];
}

export interface DiffOpPayload {
  op: "equal" | "insert" | "delete" | "replace";
  tokens_a: string[];
  tokens_b: string[];
}

export interface DiffPayload {
  spec_a: { notation: string; example: string };
  spec_b: { notation: string; example: string };
  token_ld: number;
  ops: DiffOpPayload[];
}
