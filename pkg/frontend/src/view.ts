// View models: pure projections of server responses into renderable
// structures.  Every numeric field is carried over verbatim from the
// response (`raw`); the only transformations are string formatting for
// labels and percent widths for bars.  No gains, weights, shares, or
// thresholds are computed here.

import type {
  BreakevenResponse,
  CrossoverResponse,
  EvaluateResponse,
  WeightsResponse,
} from './types.js';

export interface Bar {
  id: string;
  raw: number;          // the untouched server value
  widthPercent: number; // raw scaled to 0..100 for CSS
  label: string;        // raw formatted for display
}

export function formatShare(value: number): string {
  return `${(value * 100).toFixed(1)}%`;
}

export function formatNumber(value: number, digits = 5): string {
  return value.toFixed(digits);
}

export interface WeightsView {
  bars: Bar[];
  consistencyRatio: number;
  consistencyWarning: boolean; // server-side advisory, mirrored from warnings
  warnings: string[];
}

export function weightsView(response: WeightsResponse): WeightsView {
  return {
    bars: response.items.map((id) => {
      const raw = response.weights[id]!;
      return {
        id,
        raw,
        widthPercent: raw * 100,
        label: formatShare(raw),
      };
    }),
    consistencyRatio: response.consistency_ratio,
    consistencyWarning: response.warnings.some((w) =>
      w.includes('consistency ratio'),
    ),
    warnings: response.warnings,
  };
}

export interface RankingView {
  winner: string;
  ranking: string[];
  bars: Bar[];
  ties: string[][];
  costWeight: number; // echo of the criteria the server evaluated
  warnings: string[];
}

export function rankingView(response: EvaluateResponse): RankingView {
  return {
    winner: response.winner,
    ranking: [...response.ranking],
    bars: response.ranking.map((id) => {
      const raw = response.gains[id]!;
      return {
        id,
        raw,
        widthPercent: raw * 100,
        label: formatNumber(raw),
      };
    }),
    ties: response.ties.map((group) => [...group]),
    costWeight: response.effective_criteria.cost_weight,
    warnings: response.warnings,
  };
}

export interface SliderMarker {
  position: number; // at_cost_weight, verbatim
  flip: string;     // "Y → X"
}

export function crossoverMarkers(response: CrossoverResponse): SliderMarker[] {
  return response.points.map((point) => ({
    position: point.at_cost_weight,
    flip: `${point.winner_below} → ${point.winner_above}`,
  }));
}

export interface BreakevenView {
  architecture: string;
  headline: string;
  maxCost: number | null;
  bindingCompetitor: string | null;
  bounded: boolean;
}

export function breakevenView(response: BreakevenResponse): BreakevenView {
  let headline: string;
  if (response.status === 'bounded' && response.max_cost !== null) {
    headline =
      `${response.architecture} matches the top gain up to a cost of ` +
      `${formatNumber(response.max_cost, 2)}` +
      (response.binding_competitor
        ? ` (binding competitor: ${response.binding_competitor})`
        : '');
  } else if (response.status === 'unbounded') {
    headline = `No ceiling: ${response.reason ?? 'wins at every finite cost'}`;
  } else {
    headline = `Out of reach: ${response.reason ?? 'cannot match the best rival'}`;
  }
  return {
    architecture: response.architecture,
    headline,
    maxCost: response.max_cost,
    bindingCompetitor: response.binding_competitor,
    bounded: response.status === 'bounded',
  };
}

export interface ChecklistItem {
  application: string;
  architecture: string;
  label: string;
}

export function missingPairChecklist(
  pairs: { application: string; architecture: string }[],
): ChecklistItem[] {
  return pairs.map((pair) => ({
    ...pair,
    label: `t(${pair.application}, ${pair.architecture}) missing`,
  }));
}
