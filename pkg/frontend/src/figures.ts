/**
 * The two standard figures, each three stacked panels:
 *
 *   lmg      (a) ground-state density per spin projection for a field subset
 *            (b) fidelity against field, minimum marked
 *            (c) susceptibility against field
 *   hubbard  (a) density of state per coupling subset, each polyline ending
 *                exactly at its recorded support
 *            (b) fidelity against coupling, minimum marked
 *            (c) susceptibility against coupling
 *
 * Panel (c) draws every susceptibility column present; with none present
 * the figure degrades to panels (a) and (b) plus a warning.
 */
import { Table, column, columnIndex, hasColumn } from "./csv.js";
import {
  Extent,
  Marker,
  PanelSpec,
  Series,
  fmtNum,
  renderPanel,
  svgDocument,
} from "./svg.js";

export class SubsetError extends Error {}

export interface FigureOptions {
  /** Parameter values for panel (a); a spread default otherwise. */
  subset?: number[];
  logChi?: boolean;
}

export interface FigureResult {
  svg: string;
  warnings: string[];
}

export interface ParamSeries {
  value: number;
  points: Array<[number, number]>;
}

const PALETTE = [
  "#1f77b4",
  "#d62728",
  "#2ca02c",
  "#9467bd",
  "#ff7f0e",
  "#8c564b",
  "#17becf",
  "#7f7f7f",
];
const CHI_COLUMNS = ["chi_eq5", "chi_eq6"];
const SUBSET_TOL = 1e-9;

/** Momentum axis of the density-of-state panel: the full Brillouin zone. */
export const DOS_X_DOMAIN: Extent = { min: -Math.PI - 0.15, max: Math.PI + 0.15 };

/** Rows grouped by a parameter column, in first-appearance order. */
export function seriesByParameter(
  table: Table,
  paramCol: string,
  xCol: string,
  yCol: string,
): ParamSeries[] {
  const p = columnIndex(table, paramCol);
  const x = columnIndex(table, xCol);
  const y = columnIndex(table, yCol);
  const groups = new Map<number, Array<[number, number]>>();
  for (const row of table.rows) {
    let points = groups.get(row[p]);
    if (!points) {
      points = [];
      groups.set(row[p], points);
    }
    points.push([row[x], row[y]]);
  }
  return [...groups.entries()].map(([value, points]) => ({ value, points }));
}

export function matchSubset(
  available: number[],
  requested: number[],
): { matched: number[]; missed: number[] } {
  const matched: number[] = [];
  const missed: number[] = [];
  for (const want of requested) {
    const hit = available.find((v) => Math.abs(v - want) <= SUBSET_TOL);
    if (hit === undefined) {
      missed.push(want);
    } else if (!matched.includes(hit)) {
      matched.push(hit);
    }
  }
  return { matched, missed };
}

/** Up to `count` values spread evenly across a sorted list, ends included. */
export function evenlySpaced(sorted: number[], count: number): number[] {
  if (sorted.length <= count) return [...sorted];
  const out: number[] = [];
  for (let i = 0; i < count; i++) {
    const index = Math.round((i * (sorted.length - 1)) / (count - 1));
    const value = sorted[index];
    if (!out.includes(value)) out.push(value);
  }
  return out;
}

/** Every tenth value of a descending list, the final (smallest) one kept. */
export function everyTenth(descending: number[]): number[] {
  const out: number[] = [];
  for (let i = 0; i < descending.length; i += 10) out.push(descending[i]);
  const last = descending[descending.length - 1];
  if (!out.includes(last)) out.push(last);
  return out;
}

function rampColor(t: number): string {
  // blue #1f77b4 to red #d62728
  const channel = (a: number, b: number) =>
    Math.round(a + (b - a) * t)
      .toString(16)
      .padStart(2, "0");
  return `#${channel(0x1f, 0xd6)}${channel(0x77, 0x27)}${channel(0xb4, 0x28)}`;
}

function seriesColor(index: number, total: number): string {
  if (total <= PALETTE.length) return PALETTE[index];
  return rampColor(total > 1 ? index / (total - 1) : 0);
}

function chooseSubset(
  available: number[],
  requested: number[] | undefined,
  fallback: (values: number[]) => number[],
  describe: string,
  warnings: string[],
): number[] {
  if (requested && requested.length > 0) {
    const { matched, missed } = matchSubset(available, requested);
    if (matched.length === 0) {
      throw new SubsetError(
        `no rows match ${describe} = ${requested.map(fmtNum).join(", ")}`,
      );
    }
    for (const value of missed) {
      warnings.push(`no rows for ${describe} = ${fmtNum(value)}; skipped`);
    }
    return matched;
  }
  return fallback(available);
}

function fidelityPanel(dff: Table, paramCol: string): PanelSpec {
  const params = column(dff, paramCol);
  const F = column(dff, "F");
  let best = 0;
  for (let i = 1; i < params.length; i++) {
    if (F[i] < F[best]) best = i;
  }
  const marker: Marker = {
    x: params[best],
    y: F[best],
    label: `min at ${paramCol} = ${fmtNum(params[best])}`,
  };
  return {
    title: "(b) fidelity of neighboring ground states",
    xLabel: paramCol,
    yLabel: "F",
    series: [
      {
        label: "F",
        color: PALETTE[0],
        points: params.map((p, i): [number, number] => [p, F[i]]),
      },
    ],
    markers: [marker],
    legend: false,
  };
}

function susceptibilityPanel(
  dff: Table,
  paramCol: string,
  logChi: boolean,
  warnings: string[],
): PanelSpec | undefined {
  const present = CHI_COLUMNS.filter((name) => hasColumn(dff, name));
  if (present.length === 0) {
    warnings.push(
      `${dff.path}: no susceptibility column (${CHI_COLUMNS.join(", ")}); skipping panel (c)`,
    );
    return undefined;
  }
  const params = column(dff, paramCol);
  const series: Series[] = [];
  for (const name of present) {
    const values = column(dff, name);
    let points = params.map((p, i): [number, number] => [p, values[i]]);
    if (logChi) {
      const kept = points.filter(([, v]) => v > 0);
      if (kept.length < points.length) {
        warnings.push(
          `${name}: dropped ${points.length - kept.length} non-positive value(s) for the log axis`,
        );
      }
      points = kept;
    }
    if (points.length > 0) {
      series.push({ label: name, color: PALETTE[series.length], points });
    }
  }
  if (series.length === 0) {
    throw new SubsetError("log susceptibility axis needs positive values");
  }
  return {
    title: "(c) susceptibility",
    xLabel: paramCol,
    yLabel: logChi ? "chi (log)" : "chi",
    series,
    logY: logChi,
  };
}

export function renderLmgFigure(
  density: Table,
  dff: Table,
  options: FigureOptions = {},
): FigureResult {
  const warnings: string[] = [];
  const groups = seriesByParameter(density, "h", "s_z", "n");
  const chosen = chooseSubset(
    groups.map((g) => g.value),
    options.subset,
    (values) => evenlySpaced([...values].sort((a, b) => a - b), 5),
    "h",
    warnings,
  );
  const picked = groups.filter((g) => chosen.includes(g.value));
  const densityPanel: PanelSpec = {
    title: "(a) ground-state density",
    xLabel: "s_z",
    yLabel: "n",
    series: picked.map((g, i) => ({
      label: `h = ${fmtNum(g.value)}`,
      color: seriesColor(i, picked.length),
      points: g.points,
    })),
  };

  const panels = [densityPanel, fidelityPanel(dff, "h")];
  const chi = susceptibilityPanel(dff, "h", options.logChi ?? false, warnings);
  if (chi) panels.push(chi);
  return { svg: svgDocument(panels.map(renderPanel)), warnings };
}

export function renderHubbardFigure(
  dos: Table,
  dff: Table,
  options: FigureOptions = {},
): FigureResult {
  const warnings: string[] = [];
  const groups = seriesByParameter(dos, "U", "k_mid", "rho");
  const chosen = chooseSubset(
    groups.map((g) => g.value),
    options.subset,
    (values) => everyTenth([...values].sort((a, b) => b - a)),
    "U",
    warnings,
  );
  const picked = groups.filter((g) => chosen.includes(g.value));
  const series = picked.map((g, i) => ({
    label: `U = ${fmtNum(g.value)}`,
    color: seriesColor(i, picked.length),
    points: g.points,
  }));
  // each polyline stops at its own recorded momentum support; the fixed
  // axis makes the cut-offs visible
  const dosPanel: PanelSpec = {
    title: "(a) density of state",
    xLabel: "k",
    yLabel: "rho",
    series,
    xDomain: DOS_X_DOMAIN,
    legendEntries:
      series.length > PALETTE.length
        ? [series[0], series[series.length - 1]]
        : undefined,
  };

  const panels = [dosPanel, fidelityPanel(dff, "U")];
  const chi = susceptibilityPanel(dff, "U", options.logChi ?? false, warnings);
  if (chi) panels.push(chi);
  return { svg: svgDocument(panels.map(renderPanel)), warnings };
}
