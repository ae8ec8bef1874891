/** Typed client for the quiver service JSON API (v1). */

export interface QuiverDocument {
  format: string;
  n: number;
  b: number[][];
  d?: number[];
  names?: string[];
  action?: { group: string; generators: number[][] };
}

export interface CheckResult {
  invariant: boolean;
  admissible: boolean;
  witness: number[] | null;
  witness_kind: string | null;
  orbits: number[][];
}

export interface CatalogAction {
  group: string;
  target: string;
  generators: number[][];
  orbits: number[][];
}

export interface CatalogEntry {
  type: string;
  n: number;
  doc: QuiverDocument;
  layout: number[][];
  actions: CatalogAction[];
}

export interface FoldResult {
  doc: QuiverDocument;
  orbits: number[][];
}

export class ApiError extends Error {
  constructor(
    public code: string,
    message: string,
  ) {
    super(message);
  }
}

export class Client {
  constructor(private baseUrl: string) {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    const resp = await fetch(`${this.baseUrl}/v1${path}`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!resp.ok) {
      let code = `http_${resp.status}`;
      let message = resp.statusText;
      try {
        const payload = await resp.json();
        if (payload.code) code = payload.code;
        if (payload.message) message = payload.message;
      } catch {
        /* non-JSON error body */
      }
      throw new ApiError(code, message);
    }
    return resp.json() as Promise<T>;
  }

  async catalog(): Promise<CatalogEntry[]> {
    const resp = await fetch(`${this.baseUrl}/v1/catalog`);
    if (!resp.ok) throw new ApiError(`http_${resp.status}`, resp.statusText);
    const body = await resp.json();
    return body.types as CatalogEntry[];
  }

  mutate(doc: QuiverDocument, k: number): Promise<QuiverDocument> {
    return this.post<{ doc: QuiverDocument }>("/quiver/mutate", { doc, k }).then(
      (r) => r.doc,
    );
  }

  orbitMutate(doc: QuiverDocument, orbit: number): Promise<QuiverDocument> {
    return this.post<{ doc: QuiverDocument }>("/quiver/orbit-mutate", {
      doc,
      orbit,
    }).then((r) => r.doc);
  }

  check(doc: QuiverDocument): Promise<CheckResult> {
    return this.post<CheckResult>("/quiver/check", { doc });
  }

  fold(doc: QuiverDocument): Promise<FoldResult> {
    return this.post<FoldResult>("/quiver/fold", { doc });
  }

  recognize(doc: QuiverDocument): Promise<{ type: string | null; known: boolean }> {
    return this.post<{ type: string | null; known: boolean }>("/recognize", {
      doc,
    });
  }
}
