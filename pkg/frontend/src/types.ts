// Wire types for the decision service. The UI never computes gains or
// weights itself; it displays fields from these documents verbatim.

export interface Measurement {
  application: string;
  architecture: string;
  unit: 'seconds';
  mean?: number;
  runs?: number[];
}

export interface Criteria {
  cost_weight: number;
  performance_weight: number;
}

export interface ProblemDocument {
  applications: { id: string; weight?: number }[];
  architectures: { id: string; cost: number; currency?: string }[];
  measurements: Measurement[];
  application_judgments?: JudgmentEntry[];
  criteria: Criteria | { judgment: { preferred: 'cost' | 'performance'; intensity: number } };
  options?: { renormalize_weights?: boolean };
}

export interface JudgmentEntry {
  more_important: string;
  less_important: string;
  intensity: number;
}

export interface JudgmentDocument {
  items: string[];
  judgments: JudgmentEntry[];
}

export interface WeightsResponse {
  tool: { name: string; version: string };
  items: string[];
  weights: Record<string, number>;
  consistency_ratio: number;
  warnings: string[];
}

export interface EvaluateResponse {
  tool: { name: string; version: string };
  problem: ProblemDocument;
  effective_application_weights: Record<string, number>;
  effective_criteria: Criteria;
  scores: {
    reciprocal_cost: Record<string, number>;
    cost_share: Record<string, number>;
    reciprocal_time: Record<string, Record<string, number>>;
    perf_share: Record<string, Record<string, number>>;
  };
  per_application_gains: Record<string, Record<string, number>>;
  gains: Record<string, number>;
  ranking: string[];
  winner: string;
  ties: string[][];
  warnings: string[];
}

export interface CrossoverResponse {
  tool: { name: string; version: string };
  problem: ProblemDocument;
  points: { at_cost_weight: number; winner_below: string; winner_above: string }[];
  intervals: { low: number; high: number; winner: string }[];
  permanent_ties: string[][];
  warnings: string[];
}

export interface BreakevenResponse {
  tool: { name: string; version: string };
  problem: ProblemDocument;
  architecture: string;
  status: 'bounded' | 'unbounded' | 'infeasible';
  max_cost: number | null;
  binding_competitor: string | null;
  reason: string | null;
  warnings: string[];
}

export interface ServiceError {
  error: { path: string | null; message: string };
}
