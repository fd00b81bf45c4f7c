// Typed access to the captured {request, response} service fixtures.
// Regenerate with `npm run fixtures` (starts the real service).

import { readFileSync } from 'node:fs';
import { dirname, join } from 'node:path';
import { fileURLToPath } from 'node:url';

import type {
  BreakevenResponse,
  CrossoverResponse,
  EvaluateResponse,
  JudgmentDocument,
  ProblemDocument,
  WeightsResponse,
} from '../src/types.js';

const here = dirname(fileURLToPath(import.meta.url));

function load<Req, Res>(name: string): { request: Req; response: Res } {
  const text = readFileSync(join(here, 'fixtures', `${name}.json`), 'utf-8');
  return JSON.parse(text) as { request: Req; response: Res };
}

export const weightsCriteria = load<JudgmentDocument, WeightsResponse>(
  'weights_criteria',
);
export const weightsBioinfo = load<JudgmentDocument, WeightsResponse>(
  'weights_bioinfo',
);
export const evaluateBenchmarkWc30 = load<ProblemDocument, EvaluateResponse>(
  'evaluate_benchmark_wc30',
);
export const evaluateBenchmarkWc50 = load<ProblemDocument, EvaluateResponse>(
  'evaluate_benchmark_wc50',
);
export const evaluateBenchmarkWc70 = load<ProblemDocument, EvaluateResponse>(
  'evaluate_benchmark_wc70',
);
export const evaluateBioinfo = load<ProblemDocument, EvaluateResponse>(
  'evaluate_bioinfo',
);
export const crossoverBenchmark = load<ProblemDocument, CrossoverResponse>(
  'crossover_benchmark',
);
export const crossoverToy = load<ProblemDocument, CrossoverResponse>(
  'crossover_toy',
);
export const breakevenBenchmarkC = load<
  { problem: ProblemDocument; architecture: string },
  BreakevenResponse
>('breakeven_benchmark_C');
