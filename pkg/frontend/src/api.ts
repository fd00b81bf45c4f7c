// Thin fetch client for the decision service. All requests are
// self-contained JSON bodies; the server keeps no session state.

import type {
  BreakevenResponse,
  CrossoverResponse,
  EvaluateResponse,
  JudgmentDocument,
  ProblemDocument,
  ServiceError,
  WeightsResponse,
} from './types.js';

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  readonly status: number;
  readonly path: string | null;

  constructor(status: number, message: string, path: string | null = null) {
    super(message);
    this.status = status;
    this.path = path;
  }
}

export class ApiClient {
  private readonly base: string;
  private readonly fetchImpl: FetchLike;

  constructor(base = 'http://127.0.0.1:8710', fetchImpl: FetchLike = fetch) {
    this.base = base.replace(/\/$/, '');
    this.fetchImpl = fetchImpl;
  }

  private async post<T>(route: string, body: unknown): Promise<T> {
    const response = await this.fetchImpl(`${this.base}${route}`, {
      method: 'POST',
      headers: { 'content-type': 'application/json; charset=utf-8' },
      body: JSON.stringify(body),
    });
    if (!response.ok) {
      let detail: ServiceError | null = null;
      try {
        detail = (await response.json()) as ServiceError;
      } catch {
        // non-JSON error body; fall through to the generic message
      }
      throw new ApiError(
        response.status,
        detail?.error?.message ?? `request failed (${response.status})`,
        detail?.error?.path ?? null,
      );
    }
    return (await response.json()) as T;
  }

  weights(document: JudgmentDocument): Promise<WeightsResponse> {
    return this.post('/api/weights', document);
  }

  evaluate(problem: ProblemDocument): Promise<EvaluateResponse> {
    return this.post('/api/evaluate', problem);
  }

  crossover(problem: ProblemDocument): Promise<CrossoverResponse> {
    return this.post('/api/sensitivity/crossover', problem);
  }

  breakeven(problem: ProblemDocument, architecture: string): Promise<BreakevenResponse> {
    return this.post('/api/breakeven', { problem, architecture });
  }

  async health(): Promise<boolean> {
    try {
      const response = await this.fetchImpl(`${this.base}/api/health`);
      return response.ok;
    } catch {
      return false;
    }
  }
}
