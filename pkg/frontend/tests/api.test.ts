// HTTP client: routing, bodies, and error mapping against a stub fetch.

import { describe, expect, it } from 'vitest';

import { ApiClient, ApiError } from '../src/api.js';
import { evaluateBenchmarkWc50, weightsCriteria } from './fixtures.js';

interface Call {
  url: string;
  init?: RequestInit;
}

function stubFetch(status: number, body: unknown) {
  const calls: Call[] = [];
  const impl = async (url: string, init?: RequestInit) => {
    calls.push({ url, init });
    return new Response(JSON.stringify(body), {
      status,
      headers: { 'content-type': 'application/json; charset=utf-8' },
    });
  };
  return { calls, impl };
}

describe('ApiClient', () => {
  it('posts the judgment document to /api/weights', async () => {
    const { calls, impl } = stubFetch(200, weightsCriteria.response);
    const client = new ApiClient('http://unit.test', impl);
    const response = await client.weights(weightsCriteria.request);
    expect(calls[0]!.url).toBe('http://unit.test/api/weights');
    expect(JSON.parse(calls[0]!.init!.body as string)).toEqual(
      weightsCriteria.request,
    );
    expect(response.weights['performance']).toBe(0.875);
  });

  it('posts the problem document to /api/evaluate', async () => {
    const { calls, impl } = stubFetch(200, evaluateBenchmarkWc50.response);
    const client = new ApiClient('http://unit.test/', impl);
    const response = await client.evaluate(evaluateBenchmarkWc50.request);
    expect(calls[0]!.url).toBe('http://unit.test/api/evaluate');
    expect(response.winner).toBe('C');
  });

  it('wraps the problem for /api/breakeven', async () => {
    const { calls, impl } = stubFetch(200, {});
    const client = new ApiClient('http://unit.test', impl);
    await client.breakeven(evaluateBenchmarkWc50.request, 'C');
    const body = JSON.parse(calls[0]!.init!.body as string);
    expect(body.architecture).toBe('C');
    expect(body.problem).toEqual(evaluateBenchmarkWc50.request);
  });

  it('surfaces structured validation errors with their path', async () => {
    const { impl } = stubFetch(422, {
      error: { path: '$.applications', message: 'weights must sum to 1' },
    });
    const client = new ApiClient('http://unit.test', impl);
    const failure = await client
      .evaluate(evaluateBenchmarkWc50.request)
      .then(() => null, (e: unknown) => e);
    expect(failure).toBeInstanceOf(ApiError);
    expect((failure as ApiError).status).toBe(422);
    expect((failure as ApiError).path).toBe('$.applications');
    expect((failure as ApiError).message).toMatch(/sum to 1/);
  });

  it('degrades gracefully on non-JSON error bodies', async () => {
    const impl = async () => new Response('gateway exploded', { status: 502 });
    const client = new ApiClient('http://unit.test', impl);
    const failure = await client
      .evaluate(evaluateBenchmarkWc50.request)
      .then(() => null, (e: unknown) => e);
    expect((failure as ApiError).status).toBe(502);
    expect((failure as ApiError).message).toMatch(/502/);
  });

  it('health() is false when the service is unreachable', async () => {
    const client = new ApiClient('http://unit.test', async () => {
      throw new TypeError('fetch failed');
    });
    expect(await client.health()).toBe(false);
  });
});
