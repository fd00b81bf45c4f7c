// Shipped presets: the two case studies, loadable with one click for
// interactive exploration of their reference numbers.

import type { Criteria, Measurement } from './types.js';
import type { ArchitectureDraft } from './state.js';

export interface Preset {
  name: string;
  description: string;
  applications: string[];
  architectures: ArchitectureDraft[];
  measurements: Measurement[];
  criteria: Criteria;
  judgments?: { row: string; col: string; numerator: number; denominator: number }[];
}

const seconds = (
  application: string,
  architecture: string,
  mean: number,
): Measurement => ({ application, architecture, unit: 'seconds', mean });

export const BENCHMARK_PRESET: Preset = {
  name: 'LUD + B+Tree on three machines',
  description:
    'A compute-bound dense solver and a memory-bound tree search sharing ' +
    'one acquisition: two x86 multicores against a manycore GPU box.',
  applications: ['Btree', 'lud'],
  architectures: [
    { id: 'A', cost: 8900 },
    { id: 'B', cost: 8760 },
    { id: 'C', cost: 8000 },
  ],
  measurements: [
    seconds('Btree', 'A', 2489),
    seconds('Btree', 'B', 813),
    seconds('Btree', 'C', 1137),
    seconds('lud', 'A', 347),
    seconds('lud', 'B', 340),
    seconds('lud', 'C', 180),
  ],
  criteria: { cost_weight: 0.5, performance_weight: 0.5 },
};

export const BIOINFORMATICS_PRESET: Preset = {
  name: 'Bioinformatics lab (BLAST / MUMmer / K-means)',
  description:
    'Sequence alignment dominates the research pipeline; two multicore ' +
    'quotes from suppliers.',
  applications: ['blast', 'kmeans', 'mum'],
  architectures: [
    { id: 'A', cost: 8900 },
    { id: 'B', cost: 8760 },
  ],
  measurements: [
    seconds('blast', 'A', 79341),
    seconds('blast', 'B', 193515),
    seconds('kmeans', 'A', 143),
    seconds('kmeans', 'B', 121),
    seconds('mum', 'A', 42),
    seconds('mum', 'B', 38),
  ],
  criteria: { cost_weight: 0.5, performance_weight: 0.5 },
  judgments: [
    { row: 'blast', col: 'mum', numerator: 9, denominator: 1 },
    { row: 'blast', col: 'kmeans', numerator: 9, denominator: 1 },
    { row: 'mum', col: 'kmeans', numerator: 3, denominator: 1 },
  ],
};

export const PRESETS: Preset[] = [BENCHMARK_PRESET, BIOINFORMATICS_PRESET];
