// Thin fetch client over the backend API with per-URL in-flight request
// deduplication. The UI never computes metrics itself; every number shown
// comes from these responses.

import type {
  BootstrapPayload,
  DendrogramPayload,
  DiffPayload,
  DistanceMatrixPayload,
  EmbeddingPayload,
  ExampleInfo,
  MstPayload,
  NotationSummary,
  RemotenessRow,
  SpecPayload,
} from "./types.js";

export class ApiError extends Error {
  constructor(public status: number, public code: string, message: string) {
    super(message);
  }
}

export class ApiClient {
  private inflight = new Map<string, Promise<unknown>>();

  constructor(private base: string = "") {}

  private async fetchJson<T>(path: string): Promise<T> {
    const url = this.base + path;
    const pending = this.inflight.get(url);
    if (pending) return pending as Promise<T>;
    const promise = (async () => {
      try {
        const resp = await fetch(url);
        const body = await resp.json();
        if (!resp.ok) {
          const err = body?.error ?? { code: "http_error", message: `HTTP ${resp.status}` };
          throw new ApiError(resp.status, err.code, err.message);
        }
        return body as T;
      } finally {
        this.inflight.delete(url);
      }
    })();
    this.inflight.set(url, promise);
    return promise;
  }

  notations(): Promise<NotationSummary[]> {
    return this.fetchJson("/api/notations");
  }

  examples(): Promise<ExampleInfo[]> {
    return this.fetchJson("/api/examples");
  }

  spec(notation: string, example: string): Promise<SpecPayload> {
    return this.fetchJson(`/api/specs/${enc(notation)}/${enc(example)}`);
  }

  distances(notation: string, metric: string): Promise<DistanceMatrixPayload> {
    return this.fetchJson(`/api/distances/${enc(notation)}?metric=${enc(metric)}`);
  }

  remoteness(a: string, b: string, metric: string): Promise<RemotenessRow[]> {
    return this.fetchJson(`/api/remoteness?a=${enc(a)}&b=${enc(b)}&metric=${enc(metric)}`);
  }

  embedding(notation: string, metric: string): Promise<EmbeddingPayload> {
    return this.fetchJson(`/api/embedding/${enc(notation)}?metric=${enc(metric)}`);
  }

  dendrogram(notation: string, metric: string): Promise<DendrogramPayload> {
    return this.fetchJson(`/api/dendrogram/${enc(notation)}?metric=${enc(metric)}`);
  }

  mst(notation: string, metric: string): Promise<MstPayload> {
    return this.fetchJson(`/api/mst/${enc(notation)}?metric=${enc(metric)}`);
  }

  bootstrap(notation: string, metric: string, samples: number, seed: number): Promise<BootstrapPayload> {
    return this.fetchJson(
      `/api/bootstrap/${enc(notation)}?metric=${enc(metric)}&samples=${samples}&seed=${seed}`,
    );
  }

  diff(na: string, ea: string, nb: string, eb: string): Promise<DiffPayload> {
    return this.fetchJson(`/api/diff/${enc(na)}/${enc(ea)}/${enc(nb)}/${enc(eb)}`);
  }

  imageUrl(example: string): string {
    return `${this.base}/img/${enc(example)}`;
  }
}

function enc(part: string): string {
  return encodeURIComponent(part);
}
