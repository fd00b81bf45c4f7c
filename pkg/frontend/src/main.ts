// Browser wiring: renders the workbench and keeps every panel fed from
// the HTTP service.  All numbers on screen are service response fields;
// this file only moves them into the DOM.

import { ApiClient, ApiError } from './api.js';
import { SCALE } from './judgments.js';
import { PRESETS } from './presets.js';
import { LatestWins, debounce } from './requests.js';
import { WorkbenchState } from './state.js';
import {
  breakevenView,
  crossoverMarkers,
  formatShare,
  missingPairChecklist,
  rankingView,
  weightsView,
} from './view.js';

const api = new ApiClient(
  (window as { ARCHGAIN_API?: string }).ARCHGAIN_API ?? 'http://127.0.0.1:8710',
);
const state = new WorkbenchState();

const weightRequests = new LatestWins<Awaited<ReturnType<typeof api.weights>>>();
const rankingRequests = new LatestWins<Awaited<ReturnType<typeof api.evaluate>>>();
const crossoverRequests = new LatestWins<Awaited<ReturnType<typeof api.crossover>>>();
const breakevenRequests = new LatestWins<Awaited<ReturnType<typeof api.breakeven>>>();

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function setError(panel: string, message: string | null): void {
  const strip = el<HTMLDivElement>(`${panel}-error`);
  strip.textContent = message ?? '';
  strip.hidden = message === null;
}

function errorText(error: unknown): string {
  if (error instanceof ApiError) {
    return error.path ? `${error.path}: ${error.message}` : error.message;
  }
  return String(error);
}

// -- judgment editor --------------------------------------------------------

function renderJudgmentEditor(): void {
  const container = el<HTMLDivElement>('judgment-grid');
  container.replaceChildren();
  const items = state.grid.items;
  if (items.length < 2) {
    container.textContent = 'Define at least two applications to judge.';
    return;
  }
  const table = document.createElement('table');
  const head = table.insertRow();
  head.insertCell();
  for (const item of items) {
    const cell = document.createElement('th');
    cell.textContent = item;
    head.appendChild(cell);
  }
  for (const row of items) {
    const tr = table.insertRow();
    const label = document.createElement('th');
    label.textContent = row;
    tr.appendChild(label);
    for (const col of items) {
      const cell = tr.insertCell();
      if (row === col) {
        cell.textContent = '1';
        cell.className = 'diagonal';
        continue;
      }
      const select = document.createElement('select');
      select.dataset.row = row;
      select.dataset.col = col;
      const current = state.grid.get(row, col);
      for (const option of SCALE) {
        const node = document.createElement('option');
        node.value = `${option.numerator}/${option.denominator}`;
        node.textContent = option.label;
        if (
          Math.abs(option.numerator / option.denominator - current) < 1e-12
        ) {
          node.selected = true;
        }
        select.appendChild(node);
      }
      select.addEventListener('change', () => {
        const [numerator, denominator] = select.value.split('/').map(Number);
        try {
          state.editJudgment(row, col, numerator!, denominator!);
          setError('weights', null);
        } catch (error) {
          setError('weights', `${row} vs ${col}: ${errorText(error)}`);
          return;
        }
        renderJudgmentEditor(); // mirror cell must show the reciprocal
        refreshWeights();
        refreshRanking();
        refreshCrossover();
        refreshBreakeven();
      });
      cell.appendChild(select);
    }
  }
  container.appendChild(table);
}

function refreshWeights(): void {
  if (state.grid.items.length < 2) return;
  void weightRequests.run(
    () => api.weights(state.grid.toDocument()),
    (response) => {
      state.storeWeights(response);
      const view = weightsView(response);
      const bars = el<HTMLDivElement>('weight-bars');
      bars.replaceChildren();
      for (const bar of view.bars) {
        const rowNode = document.createElement('div');
        rowNode.className = 'bar-row';
        const name = document.createElement('span');
        name.textContent = bar.id;
        const track = document.createElement('div');
        track.className = 'track';
        const fill = document.createElement('div');
        fill.className = 'fill';
        fill.style.width = `${bar.widthPercent}%`;
        fill.textContent = bar.label;
        track.appendChild(fill);
        rowNode.append(name, track);
        bars.appendChild(rowNode);
      }
      const advisory = el<HTMLDivElement>('consistency-warning');
      advisory.hidden = !view.consistencyWarning;
      advisory.textContent = view.consistencyWarning
        ? `Judgments look inconsistent (ratio ${view.consistencyRatio.toFixed(3)}); consider revisiting them.`
        : '';
      setError('weights', null);
    },
    (error) => setError('weights', errorText(error)),
  );
}

// -- ranking panel ----------------------------------------------------------

function renderRanking(): void {
  const view = state.lastEvaluation ? rankingView(state.lastEvaluation) : null;
  const badge = el<HTMLSpanElement>('winner-badge');
  const bars = el<HTMLDivElement>('gain-bars');
  bars.replaceChildren();
  if (!view) {
    badge.textContent = '—';
    return;
  }
  badge.textContent = view.winner;
  for (const bar of view.bars) {
    const rowNode = document.createElement('div');
    rowNode.className = 'bar-row';
    const name = document.createElement('span');
    name.textContent = bar.id;
    if (bar.id === view.winner) name.className = 'winner';
    const track = document.createElement('div');
    track.className = 'track';
    const fill = document.createElement('div');
    fill.className = 'fill gain';
    fill.style.width = `${bar.widthPercent}%`;
    fill.textContent = bar.label;
    track.appendChild(fill);
    rowNode.append(name, track);
    bars.appendChild(rowNode);
  }
  el<HTMLSpanElement>('slider-value').textContent = formatShare(view.costWeight);
}

function refreshRanking(): void {
  const panel = el<HTMLDivElement>('ranking-panel');
  const checklist = el<HTMLUListElement>('missing-pairs');
  checklist.replaceChildren();
  if (!state.rankingEnabled) {
    panel.classList.add('disabled');
    for (const item of missingPairChecklist(state.missingPairs())) {
      const li = document.createElement('li');
      li.textContent = item.label;
      checklist.appendChild(li);
    }
    return;
  }
  panel.classList.remove('disabled');
  void rankingRequests.run(
    () => api.evaluate(state.problemDocument()),
    (response) => {
      state.storeEvaluation(response);
      renderRanking();
      setError('ranking', null);
    },
    (error) => setError('ranking', errorText(error)),
  );
}

const debouncedRanking = debounce(refreshRanking);

function refreshCrossover(): void {
  if (!state.rankingEnabled) return;
  void crossoverRequests.run(
    () => api.crossover(state.problemDocument()),
    (response) => {
      state.storeCrossover(response);
      const rail = el<HTMLDivElement>('slider-markers');
      rail.replaceChildren();
      for (const marker of crossoverMarkers(response)) {
        const node = document.createElement('div');
        node.className = 'marker';
        node.style.left = `${marker.position * 100}%`;
        node.title = `winner flips ${marker.flip} at w_c = ${marker.position.toFixed(4)}`;
        rail.appendChild(node);
      }
    },
    (error) => setError('ranking', errorText(error)),
  );
}

// -- break-even panel --------------------------------------------------------

function refreshBreakeven(): void {
  const architecture = el<HTMLSelectElement>('breakeven-arch').value;
  if (!architecture || !state.rankingEnabled) return;
  void breakevenRequests.run(
    () => api.breakeven(state.problemDocument(), architecture),
    (response) => {
      state.storeBreakeven(response);
      el<HTMLDivElement>('breakeven-readout').textContent =
        breakevenView(response).headline;
      setError('breakeven', null);
    },
    (error) => setError('breakeven', errorText(error)),
  );
}

function renderBreakevenControls(): void {
  const select = el<HTMLSelectElement>('breakeven-arch');
  select.replaceChildren();
  for (const { id } of state.architectures) {
    const option = document.createElement('option');
    option.value = id;
    option.textContent = id;
    select.appendChild(option);
  }
}

// -- presets and boot --------------------------------------------------------

function loadPreset(index: number): void {
  const preset = PRESETS[index];
  if (!preset) return;
  state.loadPreset(preset);
  el<HTMLInputElement>('wc-slider').value = String(state.costWeight);
  el<HTMLInputElement>('cost-override').value = '';
  renderJudgmentEditor();
  renderBreakevenControls();
  refreshWeights();
  refreshRanking();
  refreshCrossover();
  refreshBreakeven();
}

function boot(): void {
  const presetBox = el<HTMLDivElement>('presets');
  PRESETS.forEach((preset, index) => {
    const button = document.createElement('button');
    button.textContent = preset.name;
    button.title = preset.description;
    button.addEventListener('click', () => loadPreset(index));
    presetBox.appendChild(button);
  });

  el<HTMLInputElement>('wc-slider').addEventListener('input', (event) => {
    const value = Number((event.target as HTMLInputElement).value);
    state.setCostWeight(value);
    el<HTMLSpanElement>('slider-value').textContent = formatShare(value);
    debouncedRanking();
  });

  el<HTMLSelectElement>('breakeven-arch').addEventListener('change', () =>
    refreshBreakeven(),
  );

  el<HTMLInputElement>('cost-override').addEventListener('change', (event) => {
    const raw = (event.target as HTMLInputElement).value.trim();
    const architecture = el<HTMLSelectElement>('breakeven-arch').value;
    try {
      state.setCostOverride(architecture, raw === '' ? undefined : Number(raw));
      setError('breakeven', null);
    } catch (error) {
      setError('breakeven', errorText(error));
      return;
    }
    refreshRanking();
    refreshCrossover();
    refreshBreakeven();
  });

  void api.health().then((up) => {
    el<HTMLDivElement>('offline-banner').hidden = up;
  });

  loadPreset(0);
}

document.addEventListener('DOMContentLoaded', boot);
