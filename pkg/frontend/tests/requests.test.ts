// Debounce and last-write-wins request sequencing.

import { afterEach, beforeEach, describe, expect, it, vi } from 'vitest';

import { DEBOUNCE_MS, LatestWins, debounce } from '../src/requests.js';

describe('debounce', () => {
  beforeEach(() => vi.useFakeTimers());
  afterEach(() => vi.useRealTimers());

  it('collapses a burst into one trailing call', () => {
    const calls: number[] = [];
    const run = debounce((value: number) => calls.push(value));
    run(1);
    vi.advanceTimersByTime(50);
    run(2);
    vi.advanceTimersByTime(50);
    run(3);
    expect(calls).toEqual([]);
    vi.advanceTimersByTime(DEBOUNCE_MS);
    expect(calls).toEqual([3]);
  });

  it('defaults to the 150 ms slider interval', () => {
    const calls: number[] = [];
    const run = debounce((value: number) => calls.push(value));
    run(1);
    vi.advanceTimersByTime(149);
    expect(calls).toEqual([]);
    vi.advanceTimersByTime(1);
    expect(calls).toEqual([1]);
  });

  it('fires again for separated bursts', () => {
    const calls: number[] = [];
    const run = debounce((value: number) => calls.push(value), 100);
    run(1);
    vi.advanceTimersByTime(100);
    run(2);
    vi.advanceTimersByTime(100);
    expect(calls).toEqual([1, 2]);
  });
});

describe('LatestWins', () => {
  it('drops a stale response that resolves after a newer one', async () => {
    const seen: string[] = [];
    const sequencer = new LatestWins<string>();

    let resolveFirst!: (v: string) => void;
    const first = sequencer.run(
      () => new Promise<string>((resolve) => (resolveFirst = resolve)),
      (value) => seen.push(value),
    );
    const second = sequencer.run(
      () => Promise.resolve('fresh'),
      (value) => seen.push(value),
    );
    await second;
    resolveFirst('stale');
    await first;
    expect(seen).toEqual(['fresh']);
  });

  it('applies responses arriving in order', async () => {
    const seen: string[] = [];
    const sequencer = new LatestWins<string>();
    await sequencer.run(() => Promise.resolve('a'), (v) => seen.push(v));
    await sequencer.run(() => Promise.resolve('b'), (v) => seen.push(v));
    expect(seen).toEqual(['a', 'b']);
  });

  it('routes stale errors to the void and fresh errors to the handler', async () => {
    const errors: string[] = [];
    const seen: string[] = [];
    const sequencer = new LatestWins<string>();

    let rejectFirst!: (e: Error) => void;
    const first = sequencer.run(
      () => new Promise<string>((_, reject) => (rejectFirst = reject)),
      (value) => seen.push(value),
      (error) => errors.push(`first: ${(error as Error).message}`),
    );
    await sequencer.run(() => Promise.resolve('fresh'), (v) => seen.push(v));
    rejectFirst(new Error('boom'));
    await first;
    expect(seen).toEqual(['fresh']);
    expect(errors).toEqual([]);

    await sequencer.run(
      () => Promise.reject(new Error('real failure')),
      (value) => seen.push(value),
      (error) => errors.push((error as Error).message),
    );
    expect(errors).toEqual(['real failure']);
  });

  it('reports pending requests', async () => {
    const sequencer = new LatestWins<number>();
    let resolve!: (v: number) => void;
    const task = sequencer.run(
      () => new Promise<number>((r) => (resolve = r)),
      () => undefined,
    );
    expect(sequencer.pending).toBe(true);
    resolve(1);
    await task;
    expect(sequencer.pending).toBe(false);
  });
});
